#pragma once

#include <map>
#include <unordered_map>

#include "reltype/groebner.hpp"
#include "reltype/linalg.hpp"

namespace reltype {

struct Bidegree {
    int xdeg = 0;
    int tdeg = 0;
    auto operator<=>(const Bidegree&) const = default;
};

struct BidegreeCell {
    long long dim = 0;    // dim_k of the Rees-ideal piece Q_(d,n)
    long long fresh = 0;  // minimal generators landing in this bidegree
};

// Fresh-generator bookkeeping by (x-degree, T-degree), truncated at the
// stated bounds.
struct BidegreeTable {
    int d_max = 0;
    int n_max = 0;
    std::map<Bidegree, BidegreeCell> cells;

    long long fresh_at(int d, int n) const {
        auto it = cells.find({d, n});
        return it == cells.end() ? 0 : it->second.fresh;
    }
    long long dim_at(int d, int n) const {
        auto it = cells.find({d, n});
        return it == cells.end() ? 0 : it->second.dim;
    }
    // One Bidegree per fresh generator, sorted.
    std::vector<Bidegree> fresh_multiset() const {
        std::vector<Bidegree> out;
        for (const auto& [bd, cell] : cells)
            for (long long i = 0; i < cell.fresh; ++i) out.push_back(bd);
        return out;
    }
    // Max T-degree carrying a fresh generator; 1 when there is none (the
    // zero-ideal convention).
    int rt_lower_bound() const {
        int rt = 1;
        for (const auto& [bd, cell] : cells)
            if (cell.fresh > 0) rt = std::max(rt, bd.tdeg);
        return rt;
    }
    bool fresh_free_top_strata(int count = 2) const {
        for (const auto& [bd, cell] : cells)
            if (cell.fresh > 0 && bd.tdeg > n_max - count) return false;
        return true;
    }
};

struct OracleOptions {
    bool parallel = true;     // OpenMP kernels vs the serial reference path
    bool force_dense = false; // skip the monomial fast path (testing hook)
};

namespace oracle_detail {

// Monomials of a given weighted degree over nv variables, lexicographically
// descending exponent vectors; deterministic across runs.
inline void enumerate_rec(std::vector<Monomial>& out, Monomial& cur, int pos, int nv,
                          const std::vector<int>& w, int remaining) {
    if (pos == nv - 1) {
        if (w[static_cast<std::size_t>(pos)] > 0 && remaining % w[static_cast<std::size_t>(pos)] == 0) {
            cur[pos] = static_cast<std::uint16_t>(remaining / w[static_cast<std::size_t>(pos)]);
            out.push_back(cur);
            cur[pos] = 0;
        } else if (remaining == 0) {
            out.push_back(cur);
        }
        return;
    }
    int wmax = remaining / std::max(1, w[static_cast<std::size_t>(pos)]);
    for (int e = wmax; e >= 0; --e) {
        cur[pos] = static_cast<std::uint16_t>(e);
        enumerate_rec(out, cur, pos + 1, nv, w, remaining - e * w[static_cast<std::size_t>(pos)]);
    }
    cur[pos] = 0;
}

inline std::vector<Monomial> enumerate_monomials(int nv, const std::vector<int>& weights, int deg) {
    std::vector<Monomial> out;
    Monomial cur;
    if (deg < 0) return out;
    enumerate_rec(out, cur, 0, nv, weights, deg);
    return out;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
    }
    int find(int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(b)] = a;
        return true;
    }
};

}  // namespace oracle_detail

// Brute-force bigraded analysis of the Rees ideal of an equigenerated
// homogeneous tuple f = (f_1..f_m) over k[x]: pure linear algebra, no
// Groebner bases anywhere.
//
// The stratum (d,n) is the kernel Q_(d,n) of the evaluation map sending
// x^a T^b (|a| = d, |b| = n) to x^a f^b. Fresh generators in (d,n) are
// counted by graded Nakayama as dim Q_(d,n) - dim(x Q_(d-1,n) + T Q_(d,n-1)).
// For monomial f the map matches each domain monomial to a single target
// monomial, so kernels split along the fibers of that matching and ranks
// reduce to counting connected components; that path is the same linear
// algebra exploited fiber by fiber, and the dense path stays available as
// the reference.
template <class F>
class ReesOracle {
public:
    using Elem = typename F::Elem;

    ReesOracle(std::vector<Poly<F>> gens, OracleOptions opt = {})
        : f_(std::move(gens)), opt_(opt) {
        if (f_.empty()) throw PreconditionError("oracle needs at least one generator");
        xring_ = &f_.front().ring();
        for (const auto& g : f_) {
            if (g.is_zero()) throw PreconditionError("oracle requires nonzero generators");
            if (g.degree_in(xring_->x_end(), xring_->nvars()) > 0)
                throw PreconditionError("oracle generators must live in the x-block");
            if (!g.is_x_homogeneous())
                throw PreconditionError("oracle requires homogeneous generators");
        }
        nx_ = xring_->x_end();
        m_ = static_cast<int>(f_.size());
        xweights_.assign(static_cast<std::size_t>(nx_), 1);
        for (int i = 0; i < nx_; ++i) xweights_[static_cast<std::size_t>(i)] = xring_->weight(i);
        delta_ = xring_->weighted_degree(f_.front().lead_monomial());
        for (const auto& g : f_)
            if (xring_->weighted_degree(g.lead_monomial()) != delta_)
                throw PreconditionError("oracle requires equigenerated input (equal x-degrees)");
        monomial_path_ = !opt_.force_dense;
        for (const auto& g : f_)
            if (g.term_count() != 1) monomial_path_ = false;
        sring_ = RingPtr<F>(nullptr);
    }

    int generator_degree() const { return delta_; }
    bool using_monomial_path() const { return monomial_path_; }

    // The ambient k[x][T] ring the kernel polynomials are reported in.
    const Ring<F>& s_ring() {
        if (!sring_) {
            if (xring_->t_count() != 0 || xring_->aux_count() != 0)
                throw PreconditionError("oracle expects a plain x-only base ring");
            sring_ = xring_->with_t_block(m_, TermOrder::degrevlex());
        }
        return *sring_;
    }

    std::vector<Poly<F>> piece(int d, int n);
    BidegreeTable table(int d_max, int n_max);

private:
    struct Stratum {
        std::vector<Monomial> xmons;  // exponent vectors over the x-block
        std::vector<Monomial> tmons;  // exponent vectors over m T-slots
        long long dim = 0;            // kernel dimension
        // dense path: kernel basis over domain coordinates
        std::vector<SparseVec<F>> kernel;
        // monomial path: spanning forest of the fiber graph
        std::vector<std::pair<int, int>> forest;
    };

    int domain_index(const Stratum& s, int xi, int ti) const {
        return xi * static_cast<int>(s.tmons.size()) + ti;
    }

    std::vector<Monomial> xmons_of(int d) const {
        return oracle_detail::enumerate_monomials(nx_, xweights_, d);
    }
    std::vector<Monomial> tmons_of(int n) const {
        std::vector<int> ones(static_cast<std::size_t>(m_), 1);
        return oracle_detail::enumerate_monomials(m_, ones, n);
    }

    static std::unordered_map<Monomial, int, MonomialHash> index_of(const std::vector<Monomial>& v) {
        std::unordered_map<Monomial, int, MonomialHash> map;
        map.reserve(v.size() * 2);
        for (std::size_t i = 0; i < v.size(); ++i) map.emplace(v[i], static_cast<int>(i));
        return map;
    }

    // f^b for every T-monomial b of degree n, built incrementally from level
    // n-1 (pick the first variable in b and multiply by that generator).
    std::vector<Poly<F>> powers_for(int n, const std::vector<Monomial>& tmons,
                                    const std::vector<Monomial>& prev_tmons,
                                    const std::vector<Poly<F>>& prev_powers) const {
        std::vector<Poly<F>> out;
        out.reserve(tmons.size());
        auto prev_index = index_of(prev_tmons);
        for (const Monomial& b : tmons) {
            int i = 0;
            while (b[i] == 0) ++i;
            Monomial parent = b;
            parent[i] = static_cast<std::uint16_t>(parent[i] - 1);
            const Poly<F>& base = prev_powers[static_cast<std::size_t>(prev_index.at(parent))];
            out.push_back(base * f_[static_cast<std::size_t>(i)]);
        }
        return out;
    }

    // image x-monomial of the domain element x^a T^b when every f is a monomial
    Monomial image_monomial(const Monomial& a, const Monomial& b) const {
        Monomial img = a;
        for (int i = 0; i < m_; ++i) {
            if (!b[i]) continue;
            const Monomial& fm = f_[static_cast<std::size_t>(i)].lead_monomial();
            for (int rep = 0; rep < b[i]; ++rep) img = img * fm;
        }
        return img;
    }

    void fill_stratum_kernel(Stratum& s, int d, int n, const std::vector<Poly<F>>& powers);

    const std::vector<Poly<F>> f_;
    OracleOptions opt_;
    const Ring<F>* xring_;
    RingPtr<F> sring_;
    int nx_ = 0, m_ = 0, delta_ = 0;
    std::vector<int> xweights_;
    bool monomial_path_ = false;
};

// Kernel of one bidegree stratum, dense or fiber path, returned dense either
// way (fiber differences are sparse vectors already).
template <class F>
void ReesOracle<F>::fill_stratum_kernel(Stratum& s, int d, int n,
                                        const std::vector<Poly<F>>& powers) {
    const F& fl = xring_->field();
    s.xmons = xmons_of(d);
    s.tmons = tmons_of(n);
    int dom = static_cast<int>(s.xmons.size() * s.tmons.size());
    if (dom == 0 || n == 0) {
        s.dim = 0;
        return;
    }
    if (monomial_path_) {
        // group domain monomials by their single image monomial
        std::unordered_map<Monomial, int, MonomialHash> fiber_of;
        fiber_of.reserve(static_cast<std::size_t>(dom) * 2);
        std::vector<int> first_in_fiber;
        oracle_detail::UnionFind uf(dom);
        long long edges = 0;
        for (std::size_t xi = 0; xi < s.xmons.size(); ++xi) {
            for (std::size_t ti = 0; ti < s.tmons.size(); ++ti) {
                int idx = domain_index(s, static_cast<int>(xi), static_cast<int>(ti));
                Monomial img = image_monomial(s.xmons[xi], s.tmons[ti]);
                auto [it, fresh_fiber] =
                    fiber_of.emplace(img, static_cast<int>(first_in_fiber.size()));
                if (fresh_fiber) {
                    first_in_fiber.push_back(idx);
                } else {
                    uf.unite(first_in_fiber[static_cast<std::size_t>(it->second)], idx);
                    s.forest.push_back({first_in_fiber[static_cast<std::size_t>(it->second)], idx});
                    ++edges;
                }
            }
        }
        s.dim = edges;  // dom - #fibers
        return;
    }
    // dense evaluation matrix, rows = target monomials of degree d + n*delta
    std::vector<Monomial> target = xmons_of(d + n * delta_);
    auto tindex = index_of(target);
    std::vector<std::vector<Elem>> a(target.size(),
                                     std::vector<Elem>(static_cast<std::size_t>(dom), fl.zero()));
    for (std::size_t ti = 0; ti < s.tmons.size(); ++ti) {
        const Poly<F>& fb = powers[ti];
        for (std::size_t xi = 0; xi < s.xmons.size(); ++xi) {
            int col = domain_index(s, static_cast<int>(xi), static_cast<int>(ti));
            for (const auto& t : fb.terms()) {
                int row = tindex.at(t.mon * s.xmons[xi]);
                a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] =
                    fl.add(a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)], t.coeff);
            }
        }
    }
    s.kernel = kernel_basis(fl, std::move(a), dom, opt_.parallel);
    s.dim = static_cast<long long>(s.kernel.size());
}

template <class F>
std::vector<Poly<F>> ReesOracle<F>::piece(int d, int n) {
    if (d < 0 || n < 0) throw PreconditionError("negative bidegree");
    const Ring<F>& S = s_ring();
    const F& fl = xring_->field();
    // rebuild the power table up to level n
    std::vector<Monomial> prev_t = tmons_of(0);
    std::vector<Poly<F>> powers{Poly<F>::constant(*xring_, fl.one())};
    for (int lvl = 1; lvl <= n; ++lvl) {
        std::vector<Monomial> cur_t = tmons_of(lvl);
        powers = powers_for(lvl, cur_t, prev_t, powers);
        prev_t = std::move(cur_t);
    }
    Stratum s;
    fill_stratum_kernel(s, d, n, powers);

    auto monomial_at = [&](int idx) {
        int ti = idx % static_cast<int>(s.tmons.size());
        int xi = idx / static_cast<int>(s.tmons.size());
        Monomial mx = s.xmons[static_cast<std::size_t>(xi)];
        const Monomial& mt = s.tmons[static_cast<std::size_t>(ti)];
        for (int i = 0; i < m_; ++i) mx[S.t_begin() + i] = mt[i];
        return mx;
    };

    std::vector<Poly<F>> out;
    if (monomial_path_) {
        for (const auto& [i1, i2] : s.forest)
            out.push_back(Poly<F>::term(S, monomial_at(i1), fl.one()) -
                          Poly<F>::term(S, monomial_at(i2), fl.one()));
    } else {
        for (const auto& v : s.kernel) {
            std::vector<Term<F>> buf;
            for (const auto& [idx, c] : v.nz) buf.push_back({monomial_at(idx), c});
            out.push_back(Poly<F>::from_unsorted(S, std::move(buf)));
        }
    }
    return out;
}

template <class F>
BidegreeTable ReesOracle<F>::table(int d_max, int n_max) {
    if (d_max < 1 || n_max < 1) throw PreconditionError("bidegree bounds must be >= 1");
    BidegreeTable tab;
    tab.d_max = d_max;
    tab.n_max = n_max;
    const F& fl = xring_->field();

    std::vector<Stratum> prev_row, cur_row;
    std::vector<Monomial> prev_tmons = tmons_of(0);
    std::vector<Poly<F>> powers{Poly<F>::constant(*xring_, fl.one())};

    for (int n = 1; n <= n_max; ++n) {
        std::vector<Monomial> cur_tmons = tmons_of(n);
        powers = powers_for(n, cur_tmons, prev_tmons, powers);
        prev_tmons = cur_tmons;
        cur_row.assign(static_cast<std::size_t>(d_max) + 1, Stratum{});

        for (int d = 0; d <= d_max; ++d) {
            Stratum& s = cur_row[static_cast<std::size_t>(d)];
            fill_stratum_kernel(s, d, n, powers);
            BidegreeCell cell;
            cell.dim = s.dim;
            if (s.dim == 0) {
                tab.cells[{d, n}] = cell;
                continue;
            }

            // index maps into this stratum for x- and T-multiplication
            auto xindex = index_of(s.xmons);
            auto tindex = index_of(s.tmons);
            const Stratum* left = d > 0 ? &cur_row[static_cast<std::size_t>(d - 1)] : nullptr;
            const Stratum* below =
                n > 1 && static_cast<int>(prev_row.size()) > d ? &prev_row[static_cast<std::size_t>(d)] : nullptr;

            auto mapped_x = [&](const Stratum& src, int idx, int var) {
                int ti = idx % static_cast<int>(src.tmons.size());
                int xi = idx / static_cast<int>(src.tmons.size());
                Monomial mx = src.xmons[static_cast<std::size_t>(xi)];
                mx[var] = static_cast<std::uint16_t>(mx[var] + 1);
                return domain_index(s, xindex.at(mx), ti);
            };
            auto mapped_t = [&](const Stratum& src, int idx, int var) {
                int ti = idx % static_cast<int>(src.tmons.size());
                int xi = idx / static_cast<int>(src.tmons.size());
                Monomial mt = src.tmons[static_cast<std::size_t>(ti)];
                mt[var] = static_cast<std::uint16_t>(mt[var] + 1);
                return domain_index(s, xi, tindex.at(mt));
            };

            if (monomial_path_) {
                oracle_detail::UnionFind uf(static_cast<int>(s.xmons.size() * s.tmons.size()));
                long long joined = 0;
                if (left)
                    for (const auto& [a, b] : left->forest)
                        for (int v = 0; v < nx_; ++v)
                            if (uf.unite(mapped_x(*left, a, v), mapped_x(*left, b, v))) ++joined;
                if (below)
                    for (const auto& [a, b] : below->forest)
                        for (int v = 0; v < m_; ++v)
                            if (uf.unite(mapped_t(*below, a, v), mapped_t(*below, b, v))) ++joined;
                // reconcile with the stratum's own fibers: every missing link
                // is a fresh generator
                long long fresh = 0;
                for (auto& [a, b] : s.forest)
                    if (uf.unite(a, b)) ++fresh;
                cell.fresh = fresh;
                (void)joined;
            } else {
                int dom = static_cast<int>(s.xmons.size() * s.tmons.size());
                RankAccumulator<F> acc(fl, dom, opt_.parallel);
                std::vector<SparseVec<F>> batch;
                auto push_mults = [&](const Stratum& src, bool xside) {
                    int count = xside ? nx_ : m_;
                    for (int v = 0; v < count; ++v) {
                        for (const auto& k : src.kernel) {
                            SparseVec<F> w;
                            w.nz.reserve(k.nz.size());
                            for (const auto& [idx, c] : k.nz)
                                w.nz.push_back({xside ? mapped_x(src, idx, v) : mapped_t(src, idx, v), c});
                            std::sort(w.nz.begin(), w.nz.end(),
                                      [](const auto& p, const auto& q) { return p.first < q.first; });
                            batch.push_back(std::move(w));
                        }
                    }
                };
                if (left) push_mults(*left, true);
                if (below) push_mults(*below, false);
                acc.add_batch(batch, static_cast<int>(s.dim));
                cell.fresh = s.dim - acc.rank();
            }
            tab.cells[{d, n}] = cell;
        }
        prev_row = std::move(cur_row);
        cur_row.clear();
    }
    return tab;
}

// Table for an instance's generators, with the spec default bounds.
template <class F>
BidegreeTable minimal_generator_bidegrees(const std::vector<Poly<F>>& f, int d_max, int n_max,
                                          OracleOptions opt = {}) {
    return ReesOracle<F>(f, opt).table(d_max, n_max);
}

template <class F>
std::vector<Poly<F>> rees_piece(const std::vector<Poly<F>>& f, int xdeg, int tdeg,
                                OracleOptions opt = {}) {
    return ReesOracle<F>(f, opt).piece(xdeg, tdeg);
}

}  // namespace reltype
