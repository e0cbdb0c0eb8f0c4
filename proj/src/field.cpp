#include "reltype/field.hpp"

#include <cctype>

namespace reltype {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u}) {
        if (n == d) return true;
        if (n % d == 0) return false;
    }
    for (std::uint64_t d = 37; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::gf(std::uint32_t p) {
    if (p < 3 || !is_prime_u32(p))
        throw PreconditionError("GF(p) requires an odd prime p >= 3, got " + std::to_string(p));
    return {Kind::prime, p};
}

FieldSpec FieldSpec::parse(const std::string& text) {
    if (text == "QQ") return rationals();
    if (text.rfind("GF(", 0) == 0 && text.size() > 4 && text.back() == ')') {
        std::string digits = text.substr(3, text.size() - 4);
        if (digits.empty()) throw ParseError("empty characteristic in field spec", 3);
        std::uint64_t p = 0;
        for (std::size_t i = 0; i < digits.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(digits[i])))
                throw ParseError("expected digit in field characteristic", 3 + i);
            p = p * 10 + static_cast<std::uint64_t>(digits[i] - '0');
            if (p > 0x7fffffffULL) throw ParseError("field characteristic too large", 3 + i);
        }
        return gf(static_cast<std::uint32_t>(p));
    }
    throw ParseError("expected field spec 'QQ' or 'GF(p)', got '" + text + "'", 0);
}

std::string FieldSpec::to_string() const {
    return kind == Kind::rationals ? "QQ" : "GF(" + std::to_string(characteristic) + ")";
}

}  // namespace reltype
