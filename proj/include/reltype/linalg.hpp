#pragma once

#include <cstdint>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "reltype/field.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace reltype {

// Index/value pairs sorted by index.
template <class F>
struct SparseVec {
    std::vector<std::pair<int, typename F::Elem>> nz;
};

// Incremental row-echelon rank structure over an exact field. Deterministic:
// pivots are the first nonzero column of each incoming vector after
// reduction, vectors are processed in submission order. add_batch() reduces
// chunks of rows in parallel against the current echelon and then inserts
// survivors serially, which yields exactly the serial result.
template <class F>
class RankAccumulator {
public:
    using Elem = typename F::Elem;

    RankAccumulator(const F& field, int dim, bool parallel)
        : field_(&field), dim_(dim), parallel_(parallel), row_of_pivot_(static_cast<std::size_t>(dim), -1) {}

    int rank() const { return static_cast<int>(rows_.size()); }

    bool add(const SparseVec<F>& v) {
        std::vector<Elem> work = densify(v);
        int piv = reduce_full(work);
        if (piv < 0) return false;
        insert(std::move(work), piv);
        return true;
    }

    // Feeds vectors until exhausted or rank reaches stop_rank (-1: no stop).
    void add_batch(std::span<const SparseVec<F>> vs, int stop_rank = -1) {
        if (!parallel_) {
            for (const auto& v : vs) {
                if (stop_rank >= 0 && rank() >= stop_rank) return;
                add(v);
            }
            return;
        }
        constexpr std::size_t kChunk = 64;
        std::size_t i = 0;
        std::vector<std::vector<Elem>> reduced(kChunk);
        std::vector<int> piv(kChunk);
        while (i < vs.size()) {
            if (stop_rank >= 0 && rank() >= stop_rank) return;
            std::size_t n = std::min(kChunk, vs.size() - i);
#pragma omp parallel for schedule(dynamic)
            for (std::size_t k = 0; k < n; ++k) {
                reduced[k] = densify(vs[i + k]);
                piv[k] = reduce_full(reduced[k]);
            }
            for (std::size_t k = 0; k < n; ++k) {
                if (stop_rank >= 0 && rank() >= stop_rank) return;
                if (piv[k] < 0) continue;
                // catch up against rows inserted after the parallel snapshot
                int p = reduce_full(reduced[k]);
                if (p >= 0) insert(std::move(reduced[k]), p);
            }
            i += n;
        }
    }

private:
    std::vector<Elem> densify(const SparseVec<F>& v) const {
        std::vector<Elem> work(static_cast<std::size_t>(dim_), field_->zero());
        for (const auto& [idx, c] : v.nz) work[static_cast<std::size_t>(idx)] = c;
        return work;
    }

    // Reduces `work` against the echelon rows; returns the pivot column of
    // the survivor (normalized to 1) or -1 if it vanished.
    int reduce_full(std::vector<Elem>& work) const {
        const F& f = *field_;
        if constexpr (std::is_same_v<F, PrimeField>) {
            // Lazy reduction: keep raw uint64 accumulators, reduce entries on
            // demand. Each axpy adds < 2^30 per slot and the pivot count is
            // far below 2^34, so no overflow.
            std::vector<std::uint64_t> acc(work.begin(), work.end());
            int pivot = -1;
            for (int j = 0; j < dim_; ++j) {
                Elem v = f.reduce(acc[static_cast<std::size_t>(j)]);
                acc[static_cast<std::size_t>(j)] = v;
                if (v == 0) continue;
                int r = row_of_pivot_[static_cast<std::size_t>(j)];
                if (r < 0) {
                    pivot = j;
                    break;
                }
                const Elem* row = rows_[static_cast<std::size_t>(r)].data();
                std::uint64_t mult = f.characteristic() - v;
                std::uint64_t* a = acc.data();
                for (int t = j; t < dim_; ++t) a[t] += mult * row[t];
                acc[static_cast<std::size_t>(j)] = 0;
            }
            if (pivot < 0) return -1;
            Elem inv = f.inv(f.reduce(acc[static_cast<std::size_t>(pivot)]));
            for (int t = 0; t < pivot; ++t) work[static_cast<std::size_t>(t)] = 0;
            for (int t = pivot; t < dim_; ++t)
                work[static_cast<std::size_t>(t)] =
                    f.mul(f.reduce(acc[static_cast<std::size_t>(t)]), inv);
            return pivot;
        } else {
            int pivot = -1;
            for (int j = 0; j < dim_; ++j) {
                if (f.is_zero(work[static_cast<std::size_t>(j)])) continue;
                int r = row_of_pivot_[static_cast<std::size_t>(j)];
                if (r < 0) {
                    pivot = j;
                    break;
                }
                Elem c = work[static_cast<std::size_t>(j)];
                const auto& row = rows_[static_cast<std::size_t>(r)];
                for (int t = j; t < dim_; ++t)
                    work[static_cast<std::size_t>(t)] = f.sub(
                        work[static_cast<std::size_t>(t)], f.mul(c, row[static_cast<std::size_t>(t)]));
            }
            if (pivot < 0) return -1;
            Elem inv = f.inv(work[static_cast<std::size_t>(pivot)]);
            for (int t = pivot; t < dim_; ++t)
                work[static_cast<std::size_t>(t)] = f.mul(work[static_cast<std::size_t>(t)], inv);
            return pivot;
        }
    }

    void insert(std::vector<Elem> work, int pivot) {
        row_of_pivot_[static_cast<std::size_t>(pivot)] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(work));
    }

    const F* field_;
    int dim_;
    bool parallel_;
    std::vector<std::vector<Elem>> rows_;
    std::vector<int> row_of_pivot_;
};

// In-place reduced row echelon form with deterministic pivoting (first
// nonzero column, smallest row index). Returns the pivot columns.
template <class F>
std::vector<int> rref(const F& f, std::vector<std::vector<typename F::Elem>>& a, bool parallel) {
    std::vector<int> pivot_cols;
    if (a.empty()) return pivot_cols;
    int rows = static_cast<int>(a.size());
    int cols = static_cast<int>(a[0].size());
    int r = 0;
    for (int j = 0; j < cols && r < rows; ++j) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (!f.is_zero(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(a[static_cast<std::size_t>(pr)], a[static_cast<std::size_t>(r)]);
        auto& prow = a[static_cast<std::size_t>(r)];
        typename F::Elem inv = f.inv(prow[static_cast<std::size_t>(j)]);
        for (int t = j; t < cols; ++t)
            prow[static_cast<std::size_t>(t)] = f.mul(prow[static_cast<std::size_t>(t)], inv);
#pragma omp parallel for schedule(static) if (parallel)
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            auto& row = a[static_cast<std::size_t>(i)];
            typename F::Elem c = row[static_cast<std::size_t>(j)];
            if (f.is_zero(c)) continue;
            for (int t = j; t < cols; ++t)
                row[static_cast<std::size_t>(t)] =
                    f.sub(row[static_cast<std::size_t>(t)],
                          f.mul(c, prow[static_cast<std::size_t>(t)]));
        }
        pivot_cols.push_back(j);
        ++r;
    }
    return pivot_cols;
}

// Kernel basis of the linear map given row-wise by `a` (size rows x cols),
// one sparse vector per free column, in ascending free-column order.
template <class F>
std::vector<SparseVec<F>> kernel_basis(const F& f, std::vector<std::vector<typename F::Elem>> a,
                                       int cols, bool parallel) {
    std::vector<int> pivots = rref(f, a, parallel);
    std::vector<int> pivot_row(static_cast<std::size_t>(cols), -1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        pivot_row[static_cast<std::size_t>(pivots[r])] = static_cast<int>(r);
    std::vector<SparseVec<F>> basis;
    for (int j = 0; j < cols; ++j) {
        if (pivot_row[static_cast<std::size_t>(j)] >= 0) continue;
        SparseVec<F> v;
        for (int pc : pivots) {
            const auto& c = a[static_cast<std::size_t>(pivot_row[static_cast<std::size_t>(pc)])]
                             [static_cast<std::size_t>(j)];
            if (!f.is_zero(c)) v.nz.push_back({pc, f.neg(c)});
        }
        v.nz.push_back({j, f.one()});
        std::sort(v.nz.begin(), v.nz.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace reltype
