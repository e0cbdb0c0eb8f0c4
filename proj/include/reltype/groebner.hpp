#pragma once

#include <chrono>
#include <optional>
#include <set>
#include <span>
#include <type_traits>

#include "reltype/polynomial.hpp"

namespace reltype {

struct GroebnerLimits {
    int max_degree = 40;
    double timeout_seconds = 60.0;
};

enum class GBStatus { complete, degree_capped, timed_out };

inline const char* to_string(GBStatus s) {
    switch (s) {
        case GBStatus::complete: return "complete";
        case GBStatus::degree_capped: return "degree-capped";
        case GBStatus::timed_out: return "timed-out";
    }
    return "?";
}

template <class F>
struct GroebnerResult {
    std::vector<Poly<F>> basis;  // reduced basis, sorted descending by lead
    GBStatus status = GBStatus::complete;
    int pairs_skipped = 0;
    double seconds = 0.0;

    bool complete() const { return status == GBStatus::complete; }
};

namespace detail {

struct DeadlineExceeded {};

using Clock = std::chrono::steady_clock;

struct Deadline {
    std::optional<Clock::time_point> at;
    static Deadline in(double seconds) {
        Deadline d;
        if (seconds > 0)
            d.at = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(seconds));
        return d;
    }
    bool passed() const { return at && Clock::now() > *at; }
    void check() const {
        if (passed()) throw DeadlineExceeded{};
    }
};

inline std::uint16_t presence_mask(const Monomial& m) {
    std::uint16_t mask = 0;
    for (int i = 0; i < kMaxVars; ++i)
        if (m[i]) mask = static_cast<std::uint16_t>(mask | (1u << i));
    return mask;
}

// Geobucket accumulator: bucket i holds at most 4^(i+1) terms, each bucket a
// canonical descending term list. Keeps reductions with many small updates
// from degrading to quadratic merges.
template <class F>
class Geobucket {
public:
    using Elem = typename F::Elem;

    explicit Geobucket(const Ring<F>& ring) : ring_(&ring) {}

    void add(const Poly<F>& p) { add_terms(p.terms(), false); }
    // adds c * m * tail where tail is a term range
    void add_scaled(std::span<const Term<F>> tail, const Monomial& m, const Elem& c) {
        if (tail.empty()) return;
        std::vector<Term<F>> scaled;
        scaled.reserve(tail.size());
        const F& f = ring_->field();
        for (const auto& t : tail) scaled.push_back({t.mon * m, f.mul(t.coeff, c)});
        add_vec(std::move(scaled));
    }

    // Pops the current leading term; false when the bucket system is zero.
    bool extract_lead(Monomial& mon, Elem& coeff) {
        const F& f = ring_->field();
        for (;;) {
            int best = -1;
            for (std::size_t b = 0; b < buckets_.size(); ++b) {
                if (head_[b] >= buckets_[b].size()) continue;
                if (best < 0 ||
                    ring_->less(buckets_[static_cast<std::size_t>(best)][head_[static_cast<std::size_t>(best)]].mon,
                                buckets_[b][head_[b]].mon))
                    best = static_cast<int>(b);
            }
            if (best < 0) return false;
            mon = buckets_[static_cast<std::size_t>(best)][head_[static_cast<std::size_t>(best)]].mon;
            coeff = f.zero();
            for (std::size_t b = 0; b < buckets_.size(); ++b) {
                if (head_[b] >= buckets_[b].size()) continue;
                if (buckets_[b][head_[b]].mon == mon) {
                    coeff = f.add(coeff, buckets_[b][head_[b]].coeff);
                    ++head_[b];
                }
            }
            if (!f.is_zero(coeff)) return true;
        }
    }

private:
    void add_terms(std::span<const Term<F>> terms, bool) {
        if (terms.empty()) return;
        add_vec(std::vector<Term<F>>(terms.begin(), terms.end()));
    }

    static std::size_t capacity(std::size_t level) {
        std::size_t c = 4;
        for (std::size_t i = 0; i < level; ++i) c *= 4;
        return c;
    }

    void add_vec(std::vector<Term<F>> v) {
        std::size_t level = 0;
        while (capacity(level) < v.size()) ++level;
        for (;;) {
            if (level >= buckets_.size()) {
                buckets_.resize(level + 1);
                head_.resize(level + 1, 0);
            }
            if (head_[level] >= buckets_[level].size()) {
                buckets_[level] = std::move(v);
                head_[level] = 0;
                return;
            }
            v = merge(std::span<const Term<F>>(buckets_[level]).subspan(head_[level]), v);
            buckets_[level].clear();
            head_[level] = 0;
            if (v.empty()) return;
            if (v.size() <= capacity(level)) {
                buckets_[level] = std::move(v);
                return;
            }
            ++level;
        }
    }

    std::vector<Term<F>> merge(std::span<const Term<F>> a, const std::vector<Term<F>>& b) const {
        const F& f = ring_->field();
        std::vector<Term<F>> out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            int c = ring_->compare(a[i].mon, b[j].mon);
            if (c > 0) {
                out.push_back(a[i++]);
            } else if (c < 0) {
                out.push_back(b[j++]);
            } else {
                Elem s = f.add(a[i].coeff, b[j].coeff);
                if (!f.is_zero(s)) out.push_back({a[i].mon, std::move(s)});
                ++i, ++j;
            }
        }
        for (; i < a.size(); ++i) out.push_back(a[i]);
        for (; j < b.size(); ++j) out.push_back(b[j]);
        return out;
    }

    const Ring<F>* ring_;
    std::vector<std::vector<Term<F>>> buckets_;
    std::vector<std::size_t> head_;
};

}  // namespace detail

// Scales a generator to its canonical representative: monic over GF(p),
// integer-primitive with positive leading coefficient over QQ.
template <class F>
void make_canonical(Poly<F>& p) {
    if (p.is_zero()) return;
    const F& f = p.ring().field();
    if constexpr (std::is_same_v<F, RationalField>) {
        mpz_class den_lcm = 1, num_gcd = 0;
        for (const auto& t : p.terms()) {
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
        }
        for (const auto& t : p.terms()) {
            mpz_class num = t.coeff.get_num() * (den_lcm / t.coeff.get_den());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), num.get_mpz_t());
        }
        mpq_class factor(den_lcm, num_gcd);
        factor.canonicalize();
        if (sgn(p.lead_coeff()) < 0) factor = -factor;
        p = p.scaled(factor);
    } else {
        p = p.scaled(f.inv(p.lead_coeff()));
    }
}

template <class F>
struct DivisionResult {
    Poly<F> remainder;
    std::vector<Poly<F>> quotients;  // aligned with the divisor list
};

namespace detail {

template <class F>
DivisionResult<F> divide_impl(const Poly<F>& p, std::span<const Poly<F>> divisors,
                              bool want_quotients, const Deadline& deadline) {
    const Ring<F>& R = p.ring();
    const F& f = R.field();
    for (const auto& g : divisors)
        if (g.ring_ptr() != p.ring_ptr() && !(g.ring_ptr() && g.ring_ptr()->same_structure(R)))
            throw RingMismatchError();

    struct Head {
        const Poly<F>* g;
        Monomial lm;
        typename F::Elem lc_inv_or_lc;
        std::uint16_t mask;
    };
    std::vector<Head> heads;
    heads.reserve(divisors.size());
    for (const auto& g : divisors) {
        if (g.is_zero()) {
            heads.push_back({&g, Monomial(), f.one(), 0xffff});
            continue;
        }
        heads.push_back({&g, g.lead_monomial(), g.lead_coeff(), presence_mask(g.lead_monomial())});
    }

    DivisionResult<F> out;
    out.remainder = Poly<F>(&R);
    std::vector<Term<F>> rem;
    std::vector<std::vector<Term<F>>> quot(want_quotients ? divisors.size() : 0);

    Geobucket<F> bucket(R);
    bucket.add(p);
    Monomial m;
    typename F::Elem c;
    int steps = 0;
    while (bucket.extract_lead(m, c)) {
        if ((++steps & 63) == 0) deadline.check();
        std::uint16_t mask = presence_mask(m);
        int hit = -1;
        for (std::size_t k = 0; k < heads.size(); ++k) {
            if (heads[k].g->is_zero()) continue;
            if (heads[k].mask & static_cast<std::uint16_t>(~mask)) continue;
            if (heads[k].lm.divides(m)) {
                hit = static_cast<int>(k);
                break;
            }
        }
        if (hit < 0) {
            rem.push_back({m, c});
            continue;
        }
        const Head& h = heads[static_cast<std::size_t>(hit)];
        typename F::Elem q = f.div(c, h.lc_inv_or_lc);
        Monomial qm = m / h.lm;
        if (want_quotients) quot[static_cast<std::size_t>(hit)].push_back({qm, q});
        bucket.add_scaled(std::span<const Term<F>>(h.g->terms()).subspan(1), qm, f.neg(q));
    }
    out.remainder = Poly<F>::from_unsorted(R, std::move(rem));
    if (want_quotients)
        for (auto& qt : quot)
            out.quotients.push_back(Poly<F>::from_unsorted(R, std::move(qt)));
    return out;
}

}  // namespace detail

// Remainder of multivariate division of p by the list `divisors`, taken in
// list order, under the ring's term order. No term of the result is divisible
// by any divisor's leading term, and p - result lies in the ideal they
// generate.
template <class F>
Poly<F> normal_form(const Poly<F>& p, std::span<const Poly<F>> divisors) {
    return detail::divide_impl<F>(p, divisors, false, detail::Deadline{}).remainder;
}

template <class F>
Poly<F> normal_form(const Poly<F>& p, const std::vector<Poly<F>>& divisors) {
    return normal_form(p, std::span<const Poly<F>>(divisors));
}

// Division under an explicit order: operands are re-canonicalized in a
// sibling ring carrying `order`, divided there, and mapped back.
template <class F>
Poly<F> normal_form(const Poly<F>& p, const std::vector<Poly<F>>& divisors,
                    const TermOrder& order) {
    const Ring<F>& R = p.ring();
    if (order == R.order()) return normal_form(p, divisors);
    RingPtr<F> S = R.with_order(order);
    std::vector<Poly<F>> mapped;
    mapped.reserve(divisors.size());
    for (const auto& g : divisors) mapped.push_back(g.mapped_to(*S));
    return normal_form(p.mapped_to(*S), mapped).mapped_to(R);
}

template <class F>
DivisionResult<F> divide(const Poly<F>& p, std::span<const Poly<F>> divisors) {
    return detail::divide_impl<F>(p, divisors, true, detail::Deadline{});
}

// Exact quotient p / g; throws unless g divides p.
template <class F>
Poly<F> divide_exact(const Poly<F>& p, const Poly<F>& g) {
    if (g.is_zero()) throw PreconditionError("division by the zero polynomial");
    std::vector<Poly<F>> ds{g};
    DivisionResult<F> d = divide(p, std::span<const Poly<F>>(ds));
    if (!d.remainder.is_zero()) throw PreconditionError("inexact polynomial division");
    return d.quotients[0];
}

// --- Buchberger -----------------------------------------------------------

template <class F>
GroebnerResult<F> buchberger(std::vector<Poly<F>> gens, const GroebnerLimits& limits = {});

namespace detail {

template <class F>
struct BasisEntry {
    Poly<F> f;
    Monomial lm;
    std::uint16_t mask;
    int sugar;
};

struct SPair {
    int i, j;
    Monomial lcm;
    int sugar;
    int degree;
};

// Full interreduction: minimal leads, then tail reduction, canonical scaling,
// descending lead order.
template <class F>
std::vector<Poly<F>> interreduce(std::vector<Poly<F>> basis, const Deadline& deadline) {
    if (basis.empty()) return basis;
    const Ring<F>& R = basis.front().ring();
    std::sort(basis.begin(), basis.end(), [&](const Poly<F>& a, const Poly<F>& b) {
        return R.less(a.lead_monomial(), b.lead_monomial());
    });
    std::vector<Poly<F>> minimal;
    for (auto& g : basis) {
        bool covered = false;
        for (const auto& h : minimal)
            if (h.lead_monomial().divides(g.lead_monomial())) {
                covered = true;
                break;
            }
        if (!covered) minimal.push_back(std::move(g));
    }
    std::vector<Poly<F>> out(minimal.size(), Poly<F>(&R));
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        std::vector<Poly<F>> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t l = 0; l < minimal.size(); ++l)
            if (l != k) others.push_back(minimal[l]);
        out[k] = divide_impl<F>(minimal[k], std::span<const Poly<F>>(others), false, deadline)
                     .remainder;
        make_canonical(out[k]);
    }
    std::erase_if(out, [](const Poly<F>& p) { return p.is_zero(); });
    std::sort(out.begin(), out.end(), [&](const Poly<F>& a, const Poly<F>& b) {
        return R.less(b.lead_monomial(), a.lead_monomial());
    });
    return out;
}

}  // namespace detail

// Buchberger's algorithm with the sugar selection strategy and the
// Gebauer-Moeller pair filters. Hitting the degree cap or the timeout is
// reported in the status, never silent: a capped run returns the partial
// basis it had.
template <class F>
GroebnerResult<F> buchberger(std::vector<Poly<F>> gens, const GroebnerLimits& limits) {
    using namespace detail;
    GroebnerResult<F> result;
    auto t0 = Clock::now();
    Deadline deadline = Deadline::in(limits.timeout_seconds);

    std::erase_if(gens, [](const Poly<F>& p) { return p.is_zero(); });
    if (gens.empty()) return result;
    const Ring<F>& R = gens.front().ring();

    std::vector<BasisEntry<F>> basis;
    auto cmp_pairs = [&R](const SPair& a, const SPair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        int c = R.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::set<SPair, decltype(cmp_pairs)> pairs(cmp_pairs);

    auto add_element = [&](Poly<F> f, int sugar) {
        int k = static_cast<int>(basis.size());
        Monomial u = f.lead_monomial();

        // Gebauer-Moeller: drop queued pairs whose lcm is properly covered by
        // the new lead.
        for (auto it = pairs.begin(); it != pairs.end();) {
            if (u.divides(it->lcm) && !(lcm(basis[static_cast<std::size_t>(it->i)].lm, u) == it->lcm) &&
                !(lcm(basis[static_cast<std::size_t>(it->j)].lm, u) == it->lcm))
                it = pairs.erase(it);
            else
                ++it;
        }

        struct Cand {
            int i;
            Monomial l;
            bool coprime;
            int sugar;
        };
        std::vector<Cand> cands;
        cands.reserve(basis.size());
        for (int i = 0; i < k; ++i) {
            Monomial l = lcm(basis[static_cast<std::size_t>(i)].lm, u);
            int sug = std::max(basis[static_cast<std::size_t>(i)].sugar +
                                   (l / basis[static_cast<std::size_t>(i)].lm).degree(),
                               sugar + (l / u).degree());
            cands.push_back({i, l, basis[static_cast<std::size_t>(i)].lm.coprime_with(u), sug});
        }
        // M rule: strict divisibility among the new lcms.
        std::vector<char> keep(cands.size(), 1);
        for (std::size_t a = 0; a < cands.size(); ++a) {
            if (!keep[a]) continue;
            for (std::size_t b = 0; b < cands.size(); ++b) {
                if (a == b || !keep[b]) continue;
                if (cands[b].l.divides(cands[a].l) && !(cands[b].l == cands[a].l)) {
                    keep[a] = 0;
                    break;
                }
            }
        }
        // F rule: one representative per lcm; a coprime representative kills
        // the whole class (product criterion).
        for (std::size_t a = 0; a < cands.size(); ++a) {
            if (!keep[a]) continue;
            for (std::size_t b = a + 1; b < cands.size(); ++b) {
                if (!keep[b] || !(cands[a].l == cands[b].l)) continue;
                if (cands[b].coprime) cands[a].coprime = true;
                keep[b] = 0;
            }
        }
        for (std::size_t a = 0; a < cands.size(); ++a) {
            if (!keep[a] || cands[a].coprime) continue;
            pairs.insert({cands[a].i, k, cands[a].l, cands[a].sugar, cands[a].l.degree()});
        }
        basis.push_back({std::move(f), u, presence_mask(u), sugar});
    };

    for (auto& g : gens) {
        make_canonical(g);
        int sugar = g.total_degree();
        add_element(std::move(g), sugar);
    }

    std::vector<Poly<F>> plain;
    auto snapshot = [&] {
        plain.clear();
        plain.reserve(basis.size());
        for (const auto& e : basis) plain.push_back(e.f);
    };

    try {
        while (!pairs.empty()) {
            deadline.check();
            SPair p = *pairs.begin();
            pairs.erase(pairs.begin());
            if (limits.max_degree > 0 && p.degree > limits.max_degree) {
                ++result.pairs_skipped;
                continue;
            }
            const BasisEntry<F>& a = basis[static_cast<std::size_t>(p.i)];
            const BasisEntry<F>& b = basis[static_cast<std::size_t>(p.j)];
            const F& f = R.field();
            Poly<F> s = a.f.times_term(p.lcm / a.lm, f.inv(a.f.lead_coeff())) -
                        b.f.times_term(p.lcm / b.lm, f.inv(b.f.lead_coeff()));
            snapshot();
            Poly<F> r =
                detail::divide_impl<F>(s, std::span<const Poly<F>>(plain), false, deadline)
                    .remainder;
            if (!r.is_zero()) {
                make_canonical(r);
                add_element(std::move(r), p.sugar);
            }
        }
        if (result.pairs_skipped > 0) result.status = GBStatus::degree_capped;
    } catch (DeadlineExceeded&) {
        result.status = GBStatus::timed_out;
    }

    snapshot();
    if (result.status == GBStatus::timed_out) {
        result.basis = std::move(plain);
    } else {
        try {
            result.basis = detail::interreduce<F>(std::move(plain), deadline);
        } catch (detail::DeadlineExceeded&) {
            result.status = GBStatus::timed_out;
            snapshot();
            result.basis = std::move(plain);
        }
    }
    result.seconds = std::chrono::duration<double>(detail::Clock::now() - t0).count();
    return result;
}

// Reduced Groebner basis under an explicit order, mapped back to the input
// ring's order for storage.
template <class F>
GroebnerResult<F> buchberger(const std::vector<Poly<F>>& gens, const TermOrder& order,
                             const GroebnerLimits& limits = {}) {
    if (gens.empty()) return {};
    const Ring<F>& R = gens.front().ring();
    if (order == R.order()) return buchberger(gens, limits);
    RingPtr<F> S = R.with_order(order);
    std::vector<Poly<F>> mapped;
    mapped.reserve(gens.size());
    for (const auto& g : gens) mapped.push_back(g.mapped_to(*S));
    GroebnerResult<F> res = buchberger(std::move(mapped), limits);
    for (auto& g : res.basis) g = g.mapped_to(R);
    return res;
}

template <class F>
struct EliminationResult {
    std::vector<Poly<F>> gens;  // generators of the contraction, in the input ring
    GBStatus status = GBStatus::complete;
};

// Contraction of (gens) to the subring omitting `drop`, via a block order
// with the dropped variables in front. A capped or timed-out basis is
// reported as such; its elimination part is then only a subideal.
template <class F>
EliminationResult<F> eliminate(const std::vector<Poly<F>>& gens, const std::vector<int>& drop,
                               const GroebnerLimits& limits = {}) {
    EliminationResult<F> out;
    if (gens.empty()) return out;
    const Ring<F>& R = gens.front().ring();
    RingPtr<F> S = R.with_order(R.elimination_order(drop));
    std::vector<Poly<F>> mapped;
    mapped.reserve(gens.size());
    for (const auto& g : gens) mapped.push_back(g.mapped_to(*S));
    GroebnerResult<F> gb = buchberger(std::move(mapped), limits);
    out.status = gb.status;
    for (const auto& g : gb.basis) {
        bool trapped = false;
        for (int i : drop)
            if (g.uses_var(i)) {
                trapped = true;
                break;
            }
        if (!trapped) out.gens.push_back(g.mapped_to(R));
    }
    return out;
}

template <class F>
EliminationResult<F> eliminate(const std::vector<Poly<F>>& gens,
                               const std::vector<std::string>& drop_names,
                               const GroebnerLimits& limits = {}) {
    if (gens.empty()) return {};
    std::vector<int> drop;
    for (const auto& n : drop_names) drop.push_back(gens.front().ring().index_of(n));
    return eliminate(gens, drop, limits);
}

template <class F>
struct MembershipWitness {
    bool member = false;
    GroebnerResult<F> basis_used;
    Poly<F> remainder;
};

template <class F>
MembershipWitness<F> ideal_member(const Poly<F>& p, const std::vector<Poly<F>>& gens,
                                  const GroebnerLimits& limits = {}) {
    MembershipWitness<F> w;
    w.basis_used = buchberger(gens, limits);
    if (!w.basis_used.complete())
        throw Error(std::string("ideal membership needs a complete basis (") +
                    to_string(w.basis_used.status) + ")");
    w.remainder = normal_form(p, w.basis_used.basis);
    w.member = w.remainder.is_zero();
    return w;
}

// I cap J computed by eliminating a fresh scalar u from u*I + (1-u)*J.
template <class F>
std::vector<Poly<F>> ideal_intersect(const std::vector<Poly<F>>& I, const std::vector<Poly<F>>& J,
                                     const GroebnerLimits& limits = {}) {
    if (I.empty() || J.empty()) return {};
    const Ring<F>& R = I.front().ring();
    RingPtr<F> S = R.with_aux({"u"}, TermOrder::degrevlex());
    int u = S->nvars() - 1;
    RingPtr<F> Se = S->with_order(S->elimination_order({u}));
    Poly<F> pu = Poly<F>::variable(*Se, u);
    Poly<F> one_minus_u = Poly<F>::constant(*Se, Se->field().one()) - pu;
    std::vector<Poly<F>> work;
    for (const auto& f : I) work.push_back(pu * f.mapped_to(*Se));
    for (const auto& g : J) work.push_back(one_minus_u * g.mapped_to(*Se));
    GroebnerResult<F> gb = buchberger(std::move(work), limits);
    if (!gb.complete())
        throw Error(std::string("ideal intersection did not complete (") + to_string(gb.status) +
                    ")");
    std::vector<Poly<F>> out;
    for (const auto& g : gb.basis)
        if (!g.uses_var(u)) out.push_back(g.mapped_to(R));
    return out;
}

// Reduced bases are canonical per (ideal, order), so ideal equality is basis
// equality.
template <class F>
bool ideal_equal(const std::vector<Poly<F>>& A, const std::vector<Poly<F>>& B,
                 const GroebnerLimits& limits = {}) {
    GroebnerResult<F> ga = buchberger(A, limits);
    GroebnerResult<F> gb = buchberger(B, limits);
    if (!ga.complete() || !gb.complete()) throw Error("ideal equality needs complete bases");
    if (ga.basis.size() != gb.basis.size()) return false;
    for (std::size_t i = 0; i < ga.basis.size(); ++i)
        if (!(ga.basis[i] == gb.basis[i])) return false;
    return true;
}

// (I : g) for principal g, via (I cap (g)) / g. By convention (I : 0) = (1).
template <class F>
std::vector<Poly<F>> colon_principal(const std::vector<Poly<F>>& I, const Poly<F>& g,
                                     const GroebnerLimits& limits = {}) {
    const Ring<F>& R = g.ring();
    if (g.is_zero())
        return {Poly<F>::constant(R, R.field().one())};
    std::vector<Poly<F>> gen_g{g};
    std::vector<Poly<F>> inter =
        I.empty() ? std::vector<Poly<F>>{} : ideal_intersect(I, gen_g, limits);
    std::vector<Poly<F>> out;
    for (const auto& h : inter) {
        Poly<F> q = divide_exact(h, g);
        if (!q.is_zero()) out.push_back(std::move(q));
    }
    return out;
}

}  // namespace reltype
