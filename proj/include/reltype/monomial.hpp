#pragma once

#include <array>
#include <cstdint>
#include <cstddef>
#include <functional>

namespace reltype {

// Hard cap on ring size. The largest rings we build (x-block + T-block +
// auxiliary t/u) stay well under this.
inline constexpr int kMaxVars = 16;

// Exponent vector with entries for all kMaxVars slots; slots past the ring's
// variable count stay zero, so loops may always run the full width.
class Monomial {
public:
    Monomial() : e_{} {}

    std::uint16_t operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
    std::uint16_t& operator[](int i) { return e_[static_cast<std::size_t>(i)]; }

    int degree() const {
        int s = 0;
        for (int i = 0; i < kMaxVars; ++i) s += e_[static_cast<std::size_t>(i)];
        return s;
    }
    int degree(int begin, int end) const {
        int s = 0;
        for (int i = begin; i < end; ++i) s += e_[static_cast<std::size_t>(i)];
        return s;
    }

    bool is_one() const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e_[static_cast<std::size_t>(i)]) return false;
        return true;
    }

    bool divides(const Monomial& m) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e_[static_cast<std::size_t>(i)] > m.e_[static_cast<std::size_t>(i)]) return false;
        return true;
    }

    bool coprime_with(const Monomial& m) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e_[static_cast<std::size_t>(i)] && m.e_[static_cast<std::size_t>(i)]) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i)
            r.e_[static_cast<std::size_t>(i)] =
                static_cast<std::uint16_t>(a.e_[static_cast<std::size_t>(i)] + b.e_[static_cast<std::size_t>(i)]);
        return r;
    }
    // Caller guarantees divisibility.
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i)
            r.e_[static_cast<std::size_t>(i)] =
                static_cast<std::uint16_t>(a.e_[static_cast<std::size_t>(i)] - b.e_[static_cast<std::size_t>(i)]);
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i)
            r.e_[static_cast<std::size_t>(i)] =
                std::max(a.e_[static_cast<std::size_t>(i)], b.e_[static_cast<std::size_t>(i)]);
        return r;
    }

    bool operator==(const Monomial&) const = default;

    std::size_t hash() const {
        // FNV-1a over the exponent words
        std::size_t h = 1469598103934665603ull;
        for (int i = 0; i < kMaxVars; ++i) {
            h ^= e_[static_cast<std::size_t>(i)];
            h *= 1099511628211ull;
        }
        return h;
    }

private:
    std::array<std::uint16_t, kMaxVars> e_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace reltype
