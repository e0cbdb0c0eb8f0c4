#pragma once

#include <vector>

#include "reltype/error.hpp"
#include "reltype/monomial.hpp"

namespace reltype {

// Monomial orders. All three are total, multiplicative and have 1 minimal.
// Block orders compare block by block (degrevlex inside each block), so any
// monomial meeting an earlier block beats every monomial that avoids it:
// that is what makes them elimination orders.
class TermOrder {
public:
    enum class Kind { degrevlex, lex, block };

    static TermOrder degrevlex() { return TermOrder(Kind::degrevlex); }
    static TermOrder lex() { return TermOrder(Kind::lex); }
    static TermOrder block(std::vector<std::vector<int>> blocks) {
        if (blocks.empty()) throw PreconditionError("block order needs at least one block");
        TermOrder o(Kind::block);
        o.blocks_ = std::move(blocks);
        return o;
    }

    Kind kind() const { return kind_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    // -1 if a < b, 0 if equal, +1 if a > b.
    int compare(const Monomial& a, const Monomial& b, int nvars) const {
        switch (kind_) {
            case Kind::lex: {
                for (int i = 0; i < nvars; ++i) {
                    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
                }
                return 0;
            }
            case Kind::degrevlex: {
                int da = a.degree(0, nvars), db = b.degree(0, nvars);
                if (da != db) return da < db ? -1 : 1;
                for (int i = nvars - 1; i >= 0; --i) {
                    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
                }
                return 0;
            }
            case Kind::block: {
                for (const auto& blk : blocks_) {
                    int da = 0, db = 0;
                    for (int i : blk) {
                        da += a[i];
                        db += b[i];
                    }
                    if (da != db) return da < db ? -1 : 1;
                    for (auto it = blk.rbegin(); it != blk.rend(); ++it) {
                        if (a[*it] != b[*it]) return a[*it] > b[*it] ? -1 : 1;
                    }
                }
                return 0;
            }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b, int nvars) const {
        return compare(a, b, nvars) < 0;
    }

    bool operator==(const TermOrder&) const = default;

private:
    explicit TermOrder(Kind k) : kind_(k) {}
    Kind kind_;
    std::vector<std::vector<int>> blocks_;
};

}  // namespace reltype
