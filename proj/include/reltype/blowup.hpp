#pragma once

#include <optional>

#include "reltype/groebner.hpp"

namespace reltype {

// Presentation of the Rees algebra of (f_1..f_m) over base.ring / base.modulus:
// S = k[x][T_1..T_m], and q holds T-homogeneous generators (T-degree >= 1) of
// the kernel of S -> R[ft] taken modulo the base ideal. Every element of q
// vanishes under T_i -> t*f_i modulo the base ideal.
template <class F>
struct ReesPresentation {
    QuotientRing<F> base;
    std::vector<Poly<F>> gens;       // f, in base.ring
    RingPtr<F> s_ring;               // k[x, T1..Tm]
    std::vector<Poly<F>> modulus_s;  // base.modulus mapped into s_ring
    std::vector<Poly<F>> q;          // sorted by (T-degree, degree)
    GBStatus status = GBStatus::complete;
    double seconds = 0.0;

    bool exact() const { return status == GBStatus::complete; }
};

template <class F>
struct RelationTypeReport {
    int rt = 1;
    bool exact = true;
    GBStatus status = GBStatus::complete;
    std::vector<Poly<F>> minimal_generators;
    std::vector<int> tdegs;                    // aligned with minimal_generators
    std::vector<std::optional<int>> xdegs;     // set when the generator is x-homogeneous

    // One entry per presentation generator, in processing order: either it
    // reduced to zero against the ideal of the retained generators before it
    // (redundant, witnessed by that basis) or it survived as a minimal
    // generator (witnessed by a nonzero normal form).
    struct Certificate {
        int tdeg = 0;
        bool retained = false;
        bool nf_zero = false;
        std::size_t basis_size = 0;  // size of the witness basis
        bool conclusive = true;      // false when the witness basis was capped
    };
    std::vector<Certificate> certificates;
    double seconds = 0.0;
};

namespace detail {

template <class F>
void sort_graded(std::vector<Poly<F>>& gens) {
    std::sort(gens.begin(), gens.end(), [](const Poly<F>& a, const Poly<F>& b) {
        if (a.t_degree() != b.t_degree()) return a.t_degree() < b.t_degree();
        if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
        return poly_before(a, b);
    });
}

}  // namespace detail

// Defining ideal of the Rees algebra, computed by eliminating the auxiliary
// variable t from (T_i - t f_i) + base.modulus and splitting the eliminant
// generators into T-homogeneous components (the kernel is T-graded, so the
// split set still generates). Components of T-degree 0 lie in the base ideal
// and are dropped; the base ideal rides along in the presentation instead.
template <class F>
ReesPresentation<F> rees_ideal(const QuotientRing<F>& base, std::vector<Poly<F>> f,
                               const GroebnerLimits& limits = {}) {
    auto t0 = detail::Clock::now();
    const Ring<F>& R = *base.ring;
    if (R.t_count() != 0 || R.aux_count() != 0)
        throw PreconditionError("rees_ideal expects a plain x-only base ring");
    for (const auto& g : f)
        if (g.ring_ptr() != &R) throw RingMismatchError();
    for (const auto& g : base.modulus)
        if (g.ring_ptr() != &R) throw RingMismatchError();

    ReesPresentation<F> pres;
    pres.base = base;
    pres.gens = f;
    int m = static_cast<int>(f.size());
    pres.s_ring = R.with_t_block(m, TermOrder::degrevlex());
    const Ring<F>& S = *pres.s_ring;
    for (const auto& a : base.modulus) pres.modulus_s.push_back(a.mapped_to(S));

    RingPtr<F> St = S.with_aux({"t"}, TermOrder::degrevlex());
    int t_idx = St->nvars() - 1;
    Poly<F> t = Poly<F>::variable(*St, t_idx);
    std::vector<Poly<F>> work;
    for (int i = 0; i < m; ++i)
        work.push_back(Poly<F>::variable(*St, S.t_begin() + i) -
                       t * f[static_cast<std::size_t>(i)].mapped_to(*St));
    for (const auto& a : base.modulus) work.push_back(a.mapped_to(*St));

    EliminationResult<F> elim = eliminate(work, std::vector<int>{t_idx}, limits);
    pres.status = elim.status;

    std::vector<Poly<F>> split;
    for (const auto& g : elim.gens)
        for (auto& comp : g.mapped_to(S).t_components()) {
            if (comp.t_degree() == 0) continue;  // lies in the base ideal
            make_canonical(comp);
            split.push_back(std::move(comp));
        }
    detail::sort_graded(split);
    split.erase(std::unique(split.begin(), split.end()), split.end());
    pres.q = std::move(split);
    pres.seconds = std::chrono::duration<double>(detail::Clock::now() - t0).count();
    return pres;
}

// The T-degree-1 part of the presentation ideal: the syzygy linear forms
// that present the symmetric algebra.
template <class F>
std::vector<Poly<F>> sym_ideal(const ReesPresentation<F>& pres) {
    std::vector<Poly<F>> out;
    for (const auto& g : pres.q)
        if (g.t_degree() == 1) out.push_back(g);
    return out;
}

namespace detail {

// Shared graded-Nakayama loop: processes T-homogeneous generators in
// ascending (T-degree, degree) order, keeps the ones that do not reduce to
// zero against (floor + retained so far), and reports the top retained
// T-degree. `floor` is the T-degree-0 baggage (base ideal, and the ideal I
// itself for associated-graded runs).
template <class F>
RelationTypeReport<F> graded_minimalize(std::vector<Poly<F>> gens,
                                        const std::vector<Poly<F>>& floor,
                                        const GroebnerLimits& limits) {
    auto t0 = Clock::now();
    RelationTypeReport<F> report;
    sort_graded(gens);

    std::vector<Poly<F>> current = floor;
    GroebnerResult<F> gb = buchberger(current, limits);
    bool all_conclusive = gb.complete();
    for (const auto& g : gens) {
        typename RelationTypeReport<F>::Certificate cert;
        cert.tdeg = g.t_degree();
        cert.basis_size = gb.basis.size();
        Poly<F> nf = normal_form(g, gb.basis);
        cert.nf_zero = nf.is_zero();
        cert.conclusive = gb.complete() || cert.nf_zero;
        if (!cert.conclusive) all_conclusive = false;
        if (!cert.nf_zero) {
            cert.retained = true;
            report.minimal_generators.push_back(g);
            report.tdegs.push_back(g.t_degree());
            report.xdegs.push_back(g.is_x_homogeneous() ? std::optional<int>(g.x_degree())
                                                        : std::nullopt);
            current.push_back(g);
            gb = buchberger(current, limits);
            if (!gb.complete()) all_conclusive = false;
        }
        report.certificates.push_back(cert);
    }
    report.rt = 1;
    for (int d : report.tdegs) report.rt = std::max(report.rt, d);
    report.status = all_conclusive ? GBStatus::complete : GBStatus::degree_capped;
    report.exact = all_conclusive;
    report.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return report;
}

}  // namespace detail

// Relation type of the presentation: because the kernel is T-graded, the
// ideal of its elements of T-degree <= l equals the ideal of the generators
// of T-degree <= l, so rt is the largest T-degree at which some generator
// escapes the ideal of the strictly smaller ones (plus the base ideal), and
// 1 when the kernel ideal is trivial.
template <class F>
RelationTypeReport<F> relation_type(const ReesPresentation<F>& pres,
                                    const GroebnerLimits& limits = {}) {
    RelationTypeReport<F> report = detail::graded_minimalize(pres.q, pres.modulus_s, limits);
    if (!pres.exact()) {
        report.exact = false;
        if (report.status == GBStatus::complete) report.status = pres.status;
    }
    return report;
}

template <class F>
bool is_linear_type(const ReesPresentation<F>& pres, const GroebnerLimits& limits = {}) {
    if (!pres.exact()) throw Error("is_linear_type needs an exact presentation");
    std::vector<Poly<F>> lin = sym_ideal(pres);
    for (const auto& a : pres.modulus_s) lin.push_back(a);
    GroebnerResult<F> gb = buchberger(lin, limits);
    if (!gb.complete()) throw Error("is_linear_type: basis of the linear part did not complete");
    for (const auto& g : pres.q)
        if (!normal_form(g, gb.basis).is_zero()) return false;
    return true;
}

template <class F>
struct GrPresentation {
    RingPtr<F> s_ring;
    std::vector<Poly<F>> gens;  // reduced representatives of the gr ideal in (R/I)[T]
    int rt_gr = 1;
    bool exact = true;
};

// Presentation of the associated graded ring gr_I(R) = Rees/I*Rees: the image
// of the presentation ideal in (R/I)[T]. Its relation type is computed by the
// same graded loop with I joined to the floor ideal at every membership test.
template <class F>
GrPresentation<F> gr_presentation(const ReesPresentation<F>& pres,
                                  const GroebnerLimits& limits = {}) {
    if (!pres.exact()) throw Error("gr_presentation needs an exact presentation");
    const Ring<F>& S = *pres.s_ring;
    std::vector<Poly<F>> floor = pres.modulus_s;
    for (const auto& g : pres.gens) floor.push_back(g.mapped_to(S));

    RelationTypeReport<F> rep = detail::graded_minimalize(pres.q, floor, limits);

    GrPresentation<F> out;
    out.s_ring = pres.s_ring;
    out.rt_gr = rep.rt;
    out.exact = rep.exact;
    GroebnerResult<F> gbI = buchberger(floor, limits);
    if (!gbI.complete()) {
        out.exact = false;
        out.gens = rep.minimal_generators;
        return out;
    }
    for (const auto& g : rep.minimal_generators) {
        Poly<F> red = normal_form(g, gbI.basis);
        if (!red.is_zero()) {
            make_canonical(red);
            out.gens.push_back(std::move(red));
        }
    }
    return out;
}

// Stabilization index of the annihilator chain (a : f) c= (a : f^2) c= ...,
// i.e. the least n >= 1 with (a : f^(n+1)) = (a : f^n). Equals the relation
// type of the cyclic algebra generated by f over base.ring/base.modulus.
template <class F>
int relation_type_cyclic(const QuotientRing<F>& base, const Poly<F>& f,
                         const GroebnerLimits& limits = {}, int max_steps = 64) {
    const Ring<F>& R = *base.ring;
    if (f.ring_ptr() != &R) throw RingMismatchError();
    std::vector<Poly<F>> prev = colon_principal(base.modulus, f, limits);
    Poly<F> fpow = f;
    for (int n = 1; n <= max_steps; ++n) {
        fpow = fpow * f;
        std::vector<Poly<F>> next = colon_principal(base.modulus, fpow, limits);
        bool equal = (prev.empty() && next.empty()) ||
                     (!prev.empty() && !next.empty() && ideal_equal(prev, next, limits));
        if (prev.empty() != next.empty()) {
            // one side is the zero ideal, the other is not
            equal = false;
        }
        if (equal) return n;
        prev = std::move(next);
    }
    throw Error("annihilator chain did not stabilize within the step limit");
}

template <class F>
struct PolyMatrix {
    int rows = 0, cols = 0;
    std::vector<Poly<F>> entries;  // row-major

    PolyMatrix() = default;
    PolyMatrix(int r, int c, const Ring<F>& ring)
        : rows(r), cols(c), entries(static_cast<std::size_t>(r) * static_cast<std::size_t>(c),
                                    Poly<F>::zero(ring)) {}
    Poly<F>& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
    const Poly<F>& at(int r, int c) const {
        return entries[static_cast<std::size_t>(r) * cols + c];
    }
};

template <class F>
Poly<F> det(const PolyMatrix<F>& M) {
    if (M.rows != M.cols) throw PreconditionError("determinant of a non-square matrix");
    if (M.rows == 0) throw PreconditionError("determinant of an empty matrix");
    if (M.rows == 1) return M.at(0, 0);
    const Ring<F>& R = M.at(0, 0).ring();
    Poly<F> acc = Poly<F>::zero(R);
    for (int c = 0; c < M.cols; ++c) {
        PolyMatrix<F> minor(M.rows - 1, M.cols - 1, R);
        for (int i = 1; i < M.rows; ++i)
            for (int j = 0, jj = 0; j < M.cols; ++j) {
                if (j == c) continue;
                minor.at(i - 1, jj++) = M.at(i, j);
            }
        Poly<F> term = M.at(0, c) * det(minor);
        acc = (c % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// Jacobian dual of a syzygy matrix M with entries linear in the x-variables:
// the unique matrix B with |xvars| rows and T-linear entries satisfying
// T*M = x*B(M). Rejects entries that are not x-linear forms.
template <class F>
PolyMatrix<F> jacobian_dual(const PolyMatrix<F>& M, const std::vector<int>& xvars,
                            const std::vector<int>& tvars) {
    if (M.rows != static_cast<int>(tvars.size()))
        throw PreconditionError("jacobian dual: rows(M) must match the number of T-variables");
    if (M.rows == 0 || M.cols == 0) throw PreconditionError("jacobian dual of an empty matrix");
    const Ring<F>& R = M.at(0, 0).ring();
    const F& fl = R.field();

    for (const auto& e : M.entries) {
        for (const auto& t : e.terms()) {
            int xdeg = 0, other = 0;
            for (int i = 0; i < R.nvars(); ++i) {
                bool is_x = std::find(xvars.begin(), xvars.end(), i) != xvars.end();
                if (is_x)
                    xdeg += t.mon[i];
                else
                    other += t.mon[i];
            }
            if (xdeg != 1 || other != 0)
                throw PreconditionError("jacobian dual: entry '" + e.to_string() +
                                        "' is not linear in the x-variables");
        }
    }

    PolyMatrix<F> B(static_cast<int>(xvars.size()), M.cols, R);
    for (int j = 0; j < M.cols; ++j) {
        for (int r = 0; r < M.rows; ++r) {
            const Poly<F>& entry = M.at(r, j);
            for (const auto& t : entry.terms()) {
                for (std::size_t a = 0; a < xvars.size(); ++a) {
                    if (!t.mon[xvars[a]]) continue;
                    // coefficient of x_a in entry, attached to T_r
                    Poly<F> contrib =
                        Poly<F>::term(R, Monomial(), t.coeff) *
                        Poly<F>::variable(R, tvars[static_cast<std::size_t>(r)]);
                    B.at(static_cast<int>(a), j) = B.at(static_cast<int>(a), j) + contrib;
                }
            }
        }
    }

    // defining identity, verified exactly
    for (int j = 0; j < M.cols; ++j) {
        Poly<F> lhs = Poly<F>::zero(R), rhs = Poly<F>::zero(R);
        for (int r = 0; r < M.rows; ++r)
            lhs = lhs + Poly<F>::variable(R, tvars[static_cast<std::size_t>(r)]) * M.at(r, j);
        for (std::size_t a = 0; a < xvars.size(); ++a)
            rhs = rhs + Poly<F>::variable(R, xvars[a]) * B.at(static_cast<int>(a), j);
        if (!(lhs == rhs)) throw Error("jacobian dual identity T*M = x*B(M) failed");
    }
    (void)fl;
    return B;
}

// One-shot: Rees presentation plus relation type of an ideal over a
// (possibly quotient) base.
template <class F>
struct RtResult {
    ReesPresentation<F> presentation;
    RelationTypeReport<F> report;
};

template <class F>
RtResult<F> relation_type_of_ideal(const QuotientRing<F>& base, std::vector<Poly<F>> gens,
                                   const GroebnerLimits& limits = {}) {
    RtResult<F> out{rees_ideal(base, std::move(gens), limits), {}};
    out.report = relation_type(out.presentation, limits);
    return out;
}

// Substitution T_i -> t*f_i (modulo the base ideal): the soundness check that
// presentation generators actually vanish on the Rees algebra.
template <class F>
bool vanishes_under_presentation(const Poly<F>& g, const ReesPresentation<F>& pres,
                                 const GroebnerLimits& limits = {}) {
    const Ring<F>& S = *pres.s_ring;
    RingPtr<F> St = S.with_aux({"t"}, TermOrder::degrevlex());
    int t_idx = St->nvars() - 1;
    Poly<F> t = Poly<F>::variable(*St, t_idx);
    Poly<F> image = Poly<F>::zero(*St);
    for (const auto& term : g.mapped_to(*St).terms()) {
        Monomial xpart = term.mon;
        Poly<F> factor = Poly<F>::constant(*St, term.coeff);
        for (int i = 0; i < S.t_count(); ++i) {
            int idx = S.t_begin() + i;
            int e = term.mon[idx];
            if (!e) continue;
            xpart[idx] = 0;
            factor = factor * (t * pres.gens[static_cast<std::size_t>(i)].mapped_to(*St)).pow(e);
        }
        image = image + factor * Poly<F>::term(*St, xpart, St->field().one());
    }
    if (pres.modulus_s.empty()) return image.is_zero();
    std::vector<Poly<F>> mod;
    for (const auto& a : pres.modulus_s) mod.push_back(a.mapped_to(*St));
    GroebnerResult<F> gb = buchberger(mod, limits);
    if (!gb.complete()) throw Error("substitution check: base ideal basis did not complete");
    return normal_form(image, gb.basis).is_zero();
}

}  // namespace reltype
