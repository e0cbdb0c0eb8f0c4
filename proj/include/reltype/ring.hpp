#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "reltype/error.hpp"
#include "reltype/field.hpp"
#include "reltype/monomial.hpp"
#include "reltype/term_order.hpp"

namespace reltype {

template <class F>
class Ring;

template <class F>
using RingPtr = std::shared_ptr<const Ring<F>>;

// A polynomial ring over F with named variables partitioned into an x-block,
// a T-block and trailing auxiliary variables (the elimination helpers t, u).
// Rings are immutable; polynomials hold a raw pointer to theirs, so whoever
// builds a ring keeps the shared_ptr alive for as long as its polynomials.
template <class F>
class Ring {
public:
    static RingPtr<F> make(F field, std::vector<std::string> names,
                           TermOrder order = TermOrder::degrevlex(), int x_count = -1,
                           int t_count = 0, std::vector<int> weights = {}) {
        if (x_count < 0) x_count = static_cast<int>(names.size()) - t_count;
        return RingPtr<F>(new Ring(std::move(field), std::move(names), std::move(order), x_count,
                                   t_count, std::move(weights)));
    }

    const F& field() const { return field_; }
    int nvars() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
    const TermOrder& order() const { return order_; }

    int x_count() const { return x_end_; }
    int t_count() const { return T_end_ - x_end_; }
    int aux_count() const { return nvars() - T_end_; }
    int x_begin() const { return 0; }
    int x_end() const { return x_end_; }
    int t_begin() const { return x_end_; }
    int t_end() const { return T_end_; }
    int aux_begin() const { return T_end_; }

    bool has_var(const std::string& n) const { return index_.count(n) != 0; }
    int index_of(const std::string& n) const {
        auto it = index_.find(n);
        if (it == index_.end()) throw Error("no variable named '" + n + "' in ring");
        return it->second;
    }

    // x-grading weight of variable i (T and aux variables weigh 0 here).
    int weight(int i) const {
        if (i >= x_end_) return 0;
        return weights_.empty() ? 1 : weights_[static_cast<std::size_t>(i)];
    }
    int weighted_degree(const Monomial& m) const {
        int s = 0;
        for (int i = 0; i < x_end_; ++i) s += weight(i) * m[i];
        return s;
    }

    bool less(const Monomial& a, const Monomial& b) const { return order_.less(a, b, nvars()); }
    int compare(const Monomial& a, const Monomial& b) const {
        return order_.compare(a, b, nvars());
    }

    bool same_structure(const Ring& other) const {
        return names_ == other.names_ && x_end_ == other.x_end_ && T_end_ == other.T_end_ &&
               field_ == other.field_;
    }

    // --- sibling builders -------------------------------------------------

    RingPtr<F> with_order(TermOrder order) const {
        return RingPtr<F>(
            new Ring(field_, names_, std::move(order), x_end_, aux_count(), weights_));
    }

    // Same x/T structure plus extra trailing auxiliary variables. Requested
    // names are uniquified against existing ones with a '_' suffix.
    RingPtr<F> with_aux(const std::vector<std::string>& aux_names, TermOrder order) const {
        std::vector<std::string> names = names_;
        for (std::string n : aux_names) {
            while (std::find(names.begin(), names.end(), n) != names.end()) n += "_";
            names.push_back(std::move(n));
        }
        return RingPtr<F>(new Ring(field_, std::move(names), std::move(order), x_end_,
                                   aux_count() + static_cast<int>(aux_names.size()), weights_));
    }

    // Same x-block plus a T-block appended after it (before any aux vars).
    RingPtr<F> with_t_block(int m, TermOrder order) const {
        if (T_end_ != x_end_ || aux_count() != 0)
            throw PreconditionError("with_t_block expects a plain x-only ring");
        std::vector<std::string> names = names_;
        for (int i = 1; i <= m; ++i) {
            std::string n = "T" + std::to_string(i);
            while (std::find(names.begin(), names.end(), n) != names.end()) n += "_";
            names.push_back(std::move(n));
        }
        return RingPtr<F>(new Ring(field_, std::move(names), std::move(order), x_end_, 0, weights_));
    }

    // Blocks for an elimination order: the given variables first, everything
    // else second (degrevlex inside each block).
    TermOrder elimination_order(const std::vector<int>& drop) const {
        std::vector<char> dropped(static_cast<std::size_t>(nvars()), 0);
        for (int i : drop) dropped[static_cast<std::size_t>(i)] = 1;
        std::vector<int> rest;
        for (int i = 0; i < nvars(); ++i)
            if (!dropped[static_cast<std::size_t>(i)]) rest.push_back(i);
        if (drop.empty()) return TermOrder::block({rest});
        if (rest.empty()) return TermOrder::block({drop});
        return TermOrder::block({drop, rest});
    }

private:
    Ring(F field, std::vector<std::string> names, TermOrder order, int x_count, int aux,
         std::vector<int> weights)
        : field_(std::move(field)),
          names_(std::move(names)),
          order_(std::move(order)),
          weights_(std::move(weights)) {
        int n = static_cast<int>(names_.size());
        if (n > kMaxVars)
            throw PreconditionError("ring has " + std::to_string(n) + " variables, limit is " +
                                    std::to_string(kMaxVars));
        if (x_count < 0 || x_count > n || aux < 0 || x_count + aux > n)
            throw PreconditionError("inconsistent ring block sizes");
        x_end_ = x_count;
        T_end_ = n - aux;
        for (int i = 0; i < n; ++i) {
            if (names_[static_cast<std::size_t>(i)].empty())
                throw PreconditionError("empty variable name");
            if (!index_.emplace(names_[static_cast<std::size_t>(i)], i).second)
                throw PreconditionError("duplicate variable name '" +
                                        names_[static_cast<std::size_t>(i)] + "'");
        }
        if (!weights_.empty() && static_cast<int>(weights_.size()) != x_end_)
            throw PreconditionError("weights must cover exactly the x-block");
    }

    F field_;
    std::vector<std::string> names_;
    TermOrder order_;
    int x_end_;
    int T_end_;
    std::vector<int> weights_;
    std::map<std::string, int> index_;
};

}  // namespace reltype
