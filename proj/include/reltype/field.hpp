#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "reltype/error.hpp"

namespace reltype {

bool is_prime_u32(std::uint32_t n);

// How a coefficient prints inside a term: sign split off, magnitude as a
// parseable literal ("3", "7/2", ...).
struct CoeffParts {
    bool negative = false;
    std::string magnitude;
    bool magnitude_is_one = false;
};

// Runtime description of a coefficient field: QQ or GF(p) with p an odd prime.
struct FieldSpec {
    enum class Kind { rationals, prime };
    Kind kind = Kind::rationals;
    std::uint32_t characteristic = 0;

    static FieldSpec rationals() { return {Kind::rationals, 0}; }
    static FieldSpec gf(std::uint32_t p);
    // Accepts "QQ" or "GF(<p>)".
    static FieldSpec parse(const std::string& text);

    std::string to_string() const;
    bool operator==(const FieldSpec&) const = default;
};

// GF(p) for an odd prime p < 2^31. Elements are least nonnegative residues;
// reduction uses a precomputed Barrett factor so the hot loops avoid hardware
// division.
class PrimeField {
public:
    using Elem = std::uint32_t;

    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (p < 3 || !is_prime_u32(p))
            throw PreconditionError("GF(p) requires an odd prime p >= 3, got " + std::to_string(p));
        barrett_ = static_cast<std::uint64_t>(~static_cast<std::uint64_t>(0)) / p + 1;
    }

    std::uint32_t characteristic() const { return p_; }
    FieldSpec spec() const { return FieldSpec::gf(p_); }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }
    bool is_one(Elem a) const { return a == 1; }
    bool eq(Elem a, Elem b) const { return a == b; }

    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const { return reduce(static_cast<std::uint64_t>(a) * b); }

    // a + b*c, the reduction workhorse.
    Elem fma(Elem a, Elem b, Elem c) const {
        return reduce(static_cast<std::uint64_t>(b) * c + a);
    }

    Elem inv(Elem a) const {
        if (a == 0) throw PreconditionError("division by zero in GF(p)");
        // extended Euclid on (a, p)
        std::int64_t t = 0, newt = 1, r = p_, newr = a;
        while (newr != 0) {
            std::int64_t q = r / newr;
            t -= q * newt;
            std::swap(t, newt);
            r -= q * newr;
            std::swap(r, newr);
        }
        if (t < 0) t += p_;
        return static_cast<Elem>(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem from_int(std::int64_t n) const {
        std::int64_t r = n % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<Elem>(r);
    }
    // Folds an arbitrarily long digit string mod p.
    Elem from_decimal(const std::string& digits) const {
        std::uint64_t acc = 0;
        for (char ch : digits) acc = reduce(acc * 10 + static_cast<std::uint64_t>(ch - '0'));
        return static_cast<Elem>(acc);
    }

    // Balanced representative: residues above p/2 print as negatives, so
    // x - y comes out as "x - y" rather than "x + 32002*y".
    CoeffParts parts(Elem a) const {
        CoeffParts out;
        Elem mag = a;
        if (a > p_ / 2) {
            out.negative = true;
            mag = p_ - a;
        }
        out.magnitude = std::to_string(mag);
        out.magnitude_is_one = (mag == 1);
        return out;
    }
    std::string to_string(Elem a) const {
        CoeffParts p = parts(a);
        return p.negative ? "-" + p.magnitude : p.magnitude;
    }

    Elem reduce(std::uint64_t a) const {
        // Barrett: q ~= a/p, remainder corrected by at most one subtraction.
        std::uint64_t q = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(a) * barrett_) >> 64);
        std::uint64_t r = a - q * p_;
        if (r >= p_) r -= p_;
        return static_cast<Elem>(r);
    }

    bool operator==(const PrimeField& other) const { return p_ == other.p_; }

private:
    std::uint32_t p_;
    std::uint64_t barrett_;
};

// Exact rationals backed by GMP. mpq_class keeps values canonical
// (coprime, positive denominator) through arithmetic.
class RationalField {
public:
    using Elem = mpq_class;

    std::uint32_t characteristic() const { return 0; }
    FieldSpec spec() const { return FieldSpec::rationals(); }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool is_one(const Elem& a) const { return a == 1; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem fma(const Elem& a, const Elem& b, const Elem& c) const { return a + b * c; }
    Elem inv(const Elem& a) const {
        if (sgn(a) == 0) throw PreconditionError("division by zero in QQ");
        return 1 / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return a / inv_guard(b); }

    Elem from_int(std::int64_t n) const {
        Elem e;
        e = static_cast<long>(n);
        return e;
    }
    Elem from_decimal(const std::string& digits) const { return Elem(mpz_class(digits, 10)); }

    CoeffParts parts(const Elem& a) const {
        CoeffParts out;
        out.negative = sgn(a) < 0;
        Elem mag = out.negative ? Elem(-a) : a;
        out.magnitude = mag.get_str();
        out.magnitude_is_one = (mag == 1);
        return out;
    }
    std::string to_string(const Elem& a) const { return a.get_str(); }

    bool operator==(const RationalField&) const { return true; }

private:
    const Elem& inv_guard(const Elem& b) const {
        if (sgn(b) == 0) throw PreconditionError("division by zero in QQ");
        return b;
    }
};

}  // namespace reltype
