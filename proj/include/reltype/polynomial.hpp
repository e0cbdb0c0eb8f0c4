#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "reltype/ring.hpp"

namespace reltype {

template <class F>
struct Term {
    Monomial mon;
    typename F::Elem coeff;
};

// Sparse polynomial: terms sorted strictly descending in the ring's order,
// never a zero coefficient. That canonical form doubles as the equality test.
template <class F>
class Poly {
public:
    using Elem = typename F::Elem;

    Poly() : ring_(nullptr) {}
    explicit Poly(const Ring<F>* ring) : ring_(ring) {}

    static Poly zero(const Ring<F>& ring) { return Poly(&ring); }
    static Poly constant(const Ring<F>& ring, Elem c) {
        Poly p(&ring);
        if (!ring.field().is_zero(c)) p.terms_.push_back({Monomial(), std::move(c)});
        return p;
    }
    static Poly variable(const Ring<F>& ring, int i, int exp = 1) {
        Poly p(&ring);
        if (exp < 0) throw PreconditionError("negative exponent");
        Monomial m;
        m[i] = static_cast<std::uint16_t>(exp);
        p.terms_.push_back({m, ring.field().one()});
        return p;
    }
    static Poly term(const Ring<F>& ring, Monomial m, Elem c) {
        Poly p(&ring);
        if (!ring.field().is_zero(c)) p.terms_.push_back({m, std::move(c)});
        return p;
    }

    const Ring<F>& ring() const {
        if (!ring_) throw Error("use of an unbound polynomial");
        return *ring_;
    }
    const Ring<F>* ring_ptr() const { return ring_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term<F>>& terms() const { return terms_; }

    const Monomial& lead_monomial() const { return require_nonzero().mon; }
    const Elem& lead_coeff() const { return require_nonzero().coeff; }

    int total_degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, t.mon.degree(0, ring().nvars()));
        return d;
    }
    int degree_in(int begin, int end) const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, t.mon.degree(begin, end));
        return d;
    }
    // Total degree in the T-block; 0 for the zero polynomial.
    int t_degree() const {
        int d = 0;
        for (const auto& t : terms_) d = std::max(d, t.mon.degree(ring().t_begin(), ring().t_end()));
        return d;
    }
    int x_degree() const { return degree_in(0, ring().x_end()); }

    bool is_homogeneous_in(int begin, int end) const {
        if (terms_.empty()) return true;
        int d = terms_.front().mon.degree(begin, end);
        for (const auto& t : terms_)
            if (t.mon.degree(begin, end) != d) return false;
        return true;
    }
    bool is_x_homogeneous() const { return is_homogeneous_in(0, ring().x_end()); }
    bool is_t_homogeneous() const { return is_homogeneous_in(ring().t_begin(), ring().t_end()); }

    bool uses_var(int i) const {
        for (const auto& t : terms_)
            if (t.mon[i]) return true;
        return false;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.ring_ != b.ring_) {
            if (!a.ring_ || !b.ring_ || !a.ring_->same_structure(*b.ring_)) return false;
        }
        if (a.terms_.size() != b.terms_.size()) return false;
        const F& f = a.ring().field();
        for (std::size_t i = 0; i < a.terms_.size(); ++i) {
            if (!(a.terms_[i].mon == b.terms_[i].mon)) return false;
            if (!f.eq(a.terms_[i].coeff, b.terms_[i].coeff)) return false;
        }
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
    friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }
    friend Poly operator-(const Poly& a) {
        Poly r(a.ring_);
        r.terms_.reserve(a.terms_.size());
        const F& f = a.ring().field();
        for (const auto& t : a.terms_) r.terms_.push_back({t.mon, f.neg(t.coeff)});
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        check_rings(a, b);
        const Ring<F>& R = a.ring();
        const F& f = R.field();
        if (a.is_zero() || b.is_zero()) return zero(R);
        std::vector<Term<F>> buf;
        buf.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_)
                buf.push_back({ta.mon * tb.mon, f.mul(ta.coeff, tb.coeff)});
        return from_unsorted(R, std::move(buf));
    }

    Poly scaled(const Elem& c) const {
        const F& f = ring().field();
        Poly r(ring_);
        if (f.is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mon, f.mul(t.coeff, c)});
        return r;
    }

    // (c * m) * this; keeps sortedness since monomial multiplication is
    // order-compatible.
    Poly times_term(const Monomial& m, const Elem& c) const {
        const F& f = ring().field();
        Poly r(ring_);
        if (f.is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mon * m, f.mul(t.coeff, c)});
        return r;
    }

    Poly pow(int n) const {
        if (n < 0) throw PreconditionError("negative exponent");
        Poly result = constant(ring(), ring().field().one());
        Poly base = *this;
        while (n) {
            if (n & 1) result = result * base;
            n >>= 1;
            if (n) base = base * base;
        }
        return result;
    }

    // Split by total T-degree; pieces come back in ascending T-degree and sum
    // to the original polynomial.
    std::vector<Poly> t_components() const {
        std::vector<Poly> out;
        for (const auto& t : terms_) {
            int d = t.mon.degree(ring().t_begin(), ring().t_end());
            if (static_cast<int>(out.size()) <= d) out.resize(static_cast<std::size_t>(d) + 1, Poly(ring_));
            out[static_cast<std::size_t>(d)].terms_.push_back(t);
        }
        std::erase_if(out, [](const Poly& p) { return p.is_zero(); });
        return out;
    }

    // Build from any term soup: sorts, folds equal monomials, drops zeros.
    static Poly from_unsorted(const Ring<F>& ring, std::vector<Term<F>> buf) {
        const F& f = ring.field();
        std::sort(buf.begin(), buf.end(), [&](const Term<F>& s, const Term<F>& t) {
            return ring.less(t.mon, s.mon);
        });
        Poly r(&ring);
        r.terms_.reserve(buf.size());
        for (auto& t : buf) {
            if (!r.terms_.empty() && r.terms_.back().mon == t.mon) {
                r.terms_.back().coeff = f.add(r.terms_.back().coeff, t.coeff);
                if (f.is_zero(r.terms_.back().coeff)) r.terms_.pop_back();
            } else if (!f.is_zero(t.coeff)) {
                r.terms_.push_back(std::move(t));
            }
        }
        return r;
    }

    // Move this polynomial into a ring with the same variable names (possibly
    // more of them, possibly a different order). Matches variables by name.
    Poly<F> mapped_to(const Ring<F>& target) const {
        if (ring_ == &target) return *this;
        std::vector<int> where(static_cast<std::size_t>(ring().nvars()), -1);
        for (int i = 0; i < ring().nvars(); ++i) {
            if (uses_var(i)) where[static_cast<std::size_t>(i)] = target.index_of(ring().name(i));
        }
        std::vector<Term<F>> buf;
        buf.reserve(terms_.size());
        for (const auto& t : terms_) {
            Monomial m;
            for (int i = 0; i < ring().nvars(); ++i)
                if (t.mon[i]) m[where[static_cast<std::size_t>(i)]] = t.mon[i];
            buf.push_back({m, t.coeff});
        }
        return from_unsorted(target, std::move(buf));
    }

    std::string to_string() const;

    // Deterministic tie-breaker for sorting generator lists.
    friend bool poly_before(const Poly& a, const Poly& b) {
        const Ring<F>& R = a.ring();
        std::size_t n = std::min(a.terms_.size(), b.terms_.size());
        for (std::size_t i = 0; i < n; ++i) {
            int c = R.compare(a.terms_[i].mon, b.terms_[i].mon);
            if (c != 0) return c > 0;
        }
        if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size();
        return a.to_string() < b.to_string();
    }

private:
    static void check_rings(const Poly& a, const Poly& b) {
        if (a.ring_ == b.ring_ && a.ring_) return;
        if (!a.ring_ || !b.ring_ || !a.ring_->same_structure(*b.ring_))
            throw RingMismatchError();
    }

    const Term<F>& require_nonzero() const {
        if (terms_.empty()) throw PreconditionError("zero polynomial has no leading term");
        return terms_.front();
    }

    static Poly merge(const Poly& a, const Poly& b, bool subtract) {
        check_rings(a, b);
        const Ring<F>& R = a.ring();
        const F& f = R.field();
        Poly r(&R);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            int c = R.compare(a.terms_[i].mon, b.terms_[j].mon);
            if (c > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                const auto& t = b.terms_[j++];
                r.terms_.push_back({t.mon, subtract ? f.neg(t.coeff) : t.coeff});
            } else {
                Elem s = subtract ? f.sub(a.terms_[i].coeff, b.terms_[j].coeff)
                                  : f.add(a.terms_[i].coeff, b.terms_[j].coeff);
                if (!f.is_zero(s)) r.terms_.push_back({a.terms_[i].mon, std::move(s)});
                ++i;
                ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) {
            const auto& t = b.terms_[j];
            r.terms_.push_back({t.mon, subtract ? f.neg(t.coeff) : t.coeff});
        }
        return r;
    }

    const Ring<F>* ring_;
    std::vector<Term<F>> terms_;
};

// Printer for the expression grammar: explicit '*', '^' powers, terms in
// descending order, e.g. "x^2*z - x*z^2".
template <class F>
std::string Poly<F>::to_string() const {
    if (terms_.empty()) return "0";
    const Ring<F>& R = ring();
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        CoeffParts cp = R.field().parts(t.coeff);
        if (first) {
            if (cp.negative) os << "-";
            first = false;
        } else {
            os << (cp.negative ? " - " : " + ");
        }
        bool printed_factor = false;
        if (!cp.magnitude_is_one || t.mon.is_one()) {
            os << cp.magnitude;
            printed_factor = true;
        }
        for (int i = 0; i < R.nvars(); ++i) {
            if (!t.mon[i]) continue;
            if (printed_factor) os << "*";
            os << R.name(i);
            if (t.mon[i] > 1) os << "^" << t.mon[i];
            printed_factor = true;
        }
    }
    return os.str();
}

template <class F>
std::string ideal_to_string(const std::vector<Poly<F>>& gens) {
    std::string s;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) s += ", ";
        s += gens[i].to_string();
    }
    return s;
}

// The spec's RingContext: a polynomial ring together with the generators of
// the ideal it is taken modulo (empty for a plain polynomial base).
template <class F>
struct QuotientRing {
    RingPtr<F> ring;
    std::vector<Poly<F>> modulus;
};

}  // namespace reltype
