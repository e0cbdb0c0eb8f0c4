#pragma once

#include <array>

#include "reltype/blowup.hpp"

namespace reltype {

// A point of the projective plane over F, kept as a coordinate triple and
// compared projectively.
template <class F>
struct PointP2 {
    std::array<typename F::Elem, 3> c;

    static PointP2 make(const F& field, typename F::Elem a, typename F::Elem b,
                        typename F::Elem cc) {
        PointP2 p{{std::move(a), std::move(b), std::move(cc)}};
        if (field.is_zero(p.c[0]) && field.is_zero(p.c[1]) && field.is_zero(p.c[2]))
            throw PreconditionError("projective point cannot be [0:0:0]");
        return p;
    }

    bool same_point(const F& field, const PointP2& other) const {
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                auto lhs = field.mul(c[static_cast<std::size_t>(i)], other.c[static_cast<std::size_t>(j)]);
                auto rhs = field.mul(c[static_cast<std::size_t>(j)], other.c[static_cast<std::size_t>(i)]);
                if (!field.eq(lhs, rhs)) return false;
            }
        return true;
    }
};

// A named instance: a base ring, ideal generators, and what the relation
// type is expected to be (if anything), with its provenance.
template <class F>
struct ExampleInstance {
    std::string name;
    QuotientRing<F> base;
    std::vector<Poly<F>> gens;
    std::optional<int> expected_rt;
    std::string provenance;   // "paper" | "derived" | "trivial" | "conjecture"
    bool conjecture = false;
    std::string notes;
    std::optional<PolyMatrix<F>> syzygy_matrix;  // rows = gens, cols = syzygies
    RingPtr<F> syzygy_ring;  // ring the matrix lives in (k[x,T])
};

namespace geometry_detail {

template <class F>
RingPtr<F> standard_ring(F field, int n) {
    std::vector<std::string> names;
    if (n <= 3) {
        const char* xyz[] = {"x", "y", "z"};
        for (int i = 0; i < n; ++i) names.push_back(xyz[i]);
    } else {
        for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    }
    return Ring<F>::make(std::move(field), std::move(names));
}

// all degree-`remaining` monomials in nv variables, lex-descending
inline void enumerate_lex_desc(std::vector<Monomial>& out, Monomial& cur, int nv, int remaining,
                               int pos = 0) {
    if (pos == nv - 1) {
        cur[pos] = static_cast<std::uint16_t>(remaining);
        out.push_back(cur);
        cur[pos] = 0;
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur[pos] = static_cast<std::uint16_t>(e);
        enumerate_lex_desc(out, cur, nv, remaining - e, pos + 1);
        cur[pos] = 0;
    }
}

}  // namespace geometry_detail

// All monomials of degree d in n variables, lexicographically descending:
// the algebra they generate has relation type 2 once n >= 2 and d >= 2
// (determinantal quadratic relations), and 1 in the degenerate cases.
template <class F>
ExampleInstance<F> monomial_algebra_gens(int n, int d, F field) {
    if (n < 1 || d < 1) throw PreconditionError("monomial_algebra_gens needs n, d >= 1");
    ExampleInstance<F> inst;
    inst.name = "veronese-" + std::to_string(n) + "-" + std::to_string(d);
    inst.base.ring = geometry_detail::standard_ring(std::move(field), n);
    const Ring<F>& R = *inst.base.ring;
    std::vector<Monomial> mons;
    {
        Monomial cur;
        geometry_detail::enumerate_lex_desc(mons, cur, n, d);
    }
    for (const Monomial& m : mons) inst.gens.push_back(Poly<F>::term(R, m, R.field().one()));
    inst.expected_rt = (n >= 2 && d >= 2) ? 2 : 1;
    inst.provenance = (n >= 2 && d >= 2) ? "paper" : "trivial";
    return inst;
}

// The monomial family with unbounded relation type: d generators for even d
// (expected rt d/2), d+1 for odd d (expected rt (d+1)/2), all of degree d in
// k[x_1..x_d].
template <class F>
ExampleInstance<F> unbounded_family_gens(int d, F field) {
    if (d < 3) throw PreconditionError("unbounded family needs d >= 3");
    ExampleInstance<F> inst;
    inst.name = "unbounded-d" + std::to_string(d);
    std::vector<std::string> names;
    for (int i = 1; i <= d; ++i) names.push_back("x" + std::to_string(i));
    inst.base.ring = Ring<F>::make(std::move(field), names);
    const Ring<F>& R = *inst.base.ring;
    auto mono = [&](std::vector<int> exps) {
        Monomial m;
        for (int i = 0; i < d; ++i) m[i] = static_cast<std::uint16_t>(exps[static_cast<std::size_t>(i)]);
        return Poly<F>::term(R, m, R.field().one());
    };
    // f1 = x1^2 * x3*...*xd
    std::vector<int> e1(static_cast<std::size_t>(d), 1);
    e1[0] = 2;
    e1[1] = 0;
    inst.gens.push_back(mono(e1));
    // f2 = x1^2 * x2*...*x_{d-1}
    std::vector<int> e2(static_cast<std::size_t>(d), 1);
    e2[0] = 2;
    e2[static_cast<std::size_t>(d - 1)] = 0;
    inst.gens.push_back(mono(e2));
    // f_{j+1} = x1^3 * (x2*...*xd)/(x_j x_{j+1}) for j = 2..d-1
    for (int j = 2; j <= d - 1; ++j) {
        std::vector<int> e(static_cast<std::size_t>(d), 1);
        e[0] = 3;
        e[static_cast<std::size_t>(j - 1)] = 0;
        e[static_cast<std::size_t>(j)] = 0;
        inst.gens.push_back(mono(e));
    }
    if (d % 2 == 1) {
        // f_{d+1} = x1*...*xd
        std::vector<int> e(static_cast<std::size_t>(d), 1);
        inst.gens.push_back(mono(e));
    }
    inst.expected_rt = (d % 2 == 0) ? d / 2 : (d + 1) / 2;
    inst.provenance = "paper";
    return inst;
}

// The prime ideal of a point of P^2: two independent linear forms chosen
// deterministically from the point's first nonzero coordinate.
template <class F>
std::vector<Poly<F>> point_ideal(const PointP2<F>& p, const Ring<F>& ring) {
    if (ring.x_end() < 3) throw PreconditionError("point_ideal needs a 3-variable ring");
    const F& f = ring.field();
    int pivot = -1;
    for (int i = 0; i < 3; ++i)
        if (!f.is_zero(p.c[static_cast<std::size_t>(i)])) {
            pivot = i;
            break;
        }
    if (pivot < 0) throw PreconditionError("invalid projective point");
    std::vector<Poly<F>> out;
    for (int j = 0; j < 3; ++j) {
        if (j == pivot) continue;
        Poly<F> form = Poly<F>::variable(ring, pivot).scaled(p.c[static_cast<std::size_t>(j)]) -
                       Poly<F>::variable(ring, j).scaled(p.c[static_cast<std::size_t>(pivot)]);
        make_canonical(form);
        out.push_back(std::move(form));
    }
    return out;
}

// Defining ideal of a finite point set: the intersection of the point
// ideals, which is saturated because points are reduced.
template <class F>
std::vector<Poly<F>> points_ideal(const std::vector<PointP2<F>>& pts, const Ring<F>& ring,
                                  const GroebnerLimits& limits = {}) {
    if (pts.empty()) throw PreconditionError("points_ideal needs at least one point");
    const F& f = ring.field();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i].same_point(f, pts[j]))
                throw PreconditionError("points_ideal: duplicate point");
    std::vector<Poly<F>> acc = point_ideal(pts[0], ring);
    for (std::size_t i = 1; i < pts.size(); ++i)
        acc = ideal_intersect(acc, point_ideal(pts[i], ring), limits);
    return acc;
}

// Six points of P^2, three on the line z = 0 and three off it. The ideal is
// generated by four cubics; the syzygy matrix attached here pairs with the
// generator order (y^2 z - y z^2, xyz, x^2 z - x z^2, cubic).
template <class F>
ExampleInstance<F> six_points_instance(typename F::Elem a1, typename F::Elem a2,
                                       typename F::Elem a3, F field) {
    const F f = field;
    auto forbidden = [&](const typename F::Elem& a) {
        return f.is_zero(a) || f.is_one(a) || f.eq(a, f.neg(f.one()));
    };
    if (forbidden(a1) || forbidden(a2) || forbidden(a3))
        throw PreconditionError("six points: parameters must avoid 0, 1, -1");
    if (f.eq(a1, a2) || f.eq(a1, a3) || f.eq(a2, a3))
        throw PreconditionError("six points: parameters must be distinct");

    ExampleInstance<F> inst;
    inst.name = "sixpoints";
    inst.base.ring = geometry_detail::standard_ring(field, 3);
    const Ring<F>& R = *inst.base.ring;
    auto X = Poly<F>::variable(R, 0), Y = Poly<F>::variable(R, 1), Z = Poly<F>::variable(R, 2);
    typename F::Elem e1 = f.add(f.add(a1, a2), a3);
    typename F::Elem e2 = f.add(f.add(f.mul(a1, a2), f.mul(a1, a3)), f.mul(a2, a3));
    typename F::Elem e3 = f.mul(f.mul(a1, a2), a3);

    Poly<F> g1 = Y * Y * Z - Y * Z * Z;
    Poly<F> g2 = X * Y * Z;
    Poly<F> g3 = X * X * Z - X * Z * Z;
    Poly<F> g4 = X * X * X - (X * X * Y).scaled(e1) + (X * Y * Y).scaled(e2) -
                 (Y * Y * Y).scaled(e3) + (Y * Z * Z).scaled(e3) - X * Z * Z;
    inst.gens = {g1, g2, g3, g4};
    inst.expected_rt = 3;
    inst.provenance = "paper";
    inst.notes = "three collinear points plus three in general position";

    // Hilbert-Burch matrix for the generator order above. The sign of the
    // last entry makes column 3 an actual syzygy of g4 as normalized here.
    PolyMatrix<F> M(4, 3, R);
    M.at(0, 0) = X;
    M.at(1, 0) = Z - Y;
    M.at(1, 1) = X - Z;
    M.at(2, 1) = -Y;
    M.at(0, 2) = -(Y + Z).scaled(e3);
    M.at(1, 2) = Y.scaled(e2) - Z.scaled(e1);
    M.at(2, 2) = X - Y.scaled(e1) + Z;
    M.at(3, 2) = -Z;
    inst.syzygy_matrix = std::move(M);
    inst.syzygy_ring = inst.base.ring;
    return inst;
}

// The six points themselves, in the generator-compatible order.
template <class F>
std::vector<PointP2<F>> six_points_of(typename F::Elem a1, typename F::Elem a2,
                                      typename F::Elem a3, const F& f) {
    auto o = f.one();
    auto z = f.zero();
    return {PointP2<F>::make(f, a1, o, z), PointP2<F>::make(f, a2, o, z),
            PointP2<F>::make(f, a3, o, z), PointP2<F>::make(f, o, z, o),
            PointP2<F>::make(f, z, o, o), PointP2<F>::make(f, z, z, o)};
}

// Canonical nodal curve of genus g >= 3: generators f_i = prod_{j != i} Q_j
// with Q_j = (a_j x - y)(b_j x - y), plus the Hilbert-Burch matrix (diagonal
// Q_1..Q_{g-1}, last row -Q_g).
template <class F>
ExampleInstance<F> nodal_curve_instance(int g, const std::vector<typename F::Elem>& a,
                                        const std::vector<typename F::Elem>& b, F field) {
    if (g < 3) throw PreconditionError("nodal curve needs genus >= 3");
    if (static_cast<int>(a.size()) != g || static_cast<int>(b.size()) != g)
        throw PreconditionError("nodal curve needs g parameters on each branch");
    const F f = field;
    std::vector<typename F::Elem> all;
    for (const auto& v : a) all.push_back(v);
    for (const auto& v : b) all.push_back(v);
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (f.eq(all[i], all[j]))
                throw PreconditionError("nodal curve: the 2g parameters must be distinct");

    ExampleInstance<F> inst;
    inst.name = "nodal-g" + std::to_string(g);
    inst.base.ring = geometry_detail::standard_ring(field, 2);
    const Ring<F>& R = *inst.base.ring;
    auto X = Poly<F>::variable(R, 0), Y = Poly<F>::variable(R, 1);

    std::vector<Poly<F>> Q;
    for (int i = 0; i < g; ++i)
        Q.push_back((X.scaled(a[static_cast<std::size_t>(i)]) - Y) *
                    (X.scaled(b[static_cast<std::size_t>(i)]) - Y));
    for (int i = 0; i < g; ++i) {
        Poly<F> fi = Poly<F>::constant(R, f.one());
        for (int j = 0; j < g; ++j)
            if (j != i) fi = fi * Q[static_cast<std::size_t>(j)];
        inst.gens.push_back(fi);
    }
    PolyMatrix<F> M(g, g - 1, R);
    for (int j = 0; j < g - 1; ++j) {
        M.at(j, j) = Q[static_cast<std::size_t>(j)];
        M.at(g - 1, j) = -Q[static_cast<std::size_t>(g - 1)];
    }
    inst.syzygy_matrix = std::move(M);
    inst.syzygy_ring = inst.base.ring;

    if (g == 3) {
        inst.expected_rt = 4;
        inst.provenance = "paper";
    } else if (g == 4) {
        inst.expected_rt = 3;
        inst.provenance = "paper";
    } else {
        inst.expected_rt = 2;
        inst.provenance = "conjecture";
        inst.conjecture = true;
    }
    return inst;
}

// Defining prime of the monomial space curve (t^p1, t^p2, t^p3) in k[x,y,z],
// by eliminating t from (x - t^p1, y - t^p2, z - t^p3).
template <class F>
std::vector<Poly<F>> monomial_curve_ideal(int p1, int p2, int p3, const Ring<F>& ring,
                                          const GroebnerLimits& limits = {}) {
    if (ring.x_end() != 3) throw PreconditionError("monomial_curve_ideal needs k[x,y,z]");
    RingPtr<F> Rt = ring.with_aux({"t"}, TermOrder::degrevlex());
    int t_idx = Rt->nvars() - 1;
    Poly<F> t = Poly<F>::variable(*Rt, t_idx);
    std::vector<Poly<F>> work = {Poly<F>::variable(*Rt, 0) - t.pow(p1),
                                 Poly<F>::variable(*Rt, 1) - t.pow(p2),
                                 Poly<F>::variable(*Rt, 2) - t.pow(p3)};
    EliminationResult<F> elim = eliminate(work, std::vector<int>{t_idx}, limits);
    if (elim.status != GBStatus::complete)
        throw Error("monomial curve elimination did not complete");
    std::vector<Poly<F>> out;
    for (const auto& g : elim.gens) out.push_back(g.mapped_to(ring));
    return out;
}

// Relation type of an affine scheme given by its defining ideal: the relation
// type of that ideal over the polynomial base. Projective inputs go through
// their affine cones, which is this same call on the homogeneous ideal.
template <class F>
RtResult<F> rt_affine_scheme(const QuotientRing<F>& base, std::vector<Poly<F>> ideal,
                             const GroebnerLimits& limits = {}) {
    return relation_type_of_ideal(base, std::move(ideal), limits);
}

}  // namespace reltype
