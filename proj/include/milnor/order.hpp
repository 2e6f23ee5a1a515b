#pragma once

#include <vector>

#include "milnor/ring.hpp"

namespace milnor {

enum class OrderKind { LocalWeighted, MixedElimination };

// Semigroup orders on monomials.
//
// LocalWeighted: m1 > m2 iff wdeg(m1) < wdeg(m2); ties broken reverse
// lexicographically (the larger exponent in the last differing position
// loses). The monomial 1 is the unique maximum.
//
// MixedElimination: total degree in the global block is compared first
// (higher degree wins); ties fall through to the local comparison.
class MonomialOrder {
public:
    static MonomialOrder local_weighted(Weights w) {
        MonomialOrder o;
        o.kind_ = OrderKind::LocalWeighted;
        o.weights_ = std::move(w);
        return o;
    }

    static MonomialOrder mixed_elimination(std::vector<int> global_block, Weights w) {
        MonomialOrder o;
        o.kind_ = OrderKind::MixedElimination;
        o.weights_ = std::move(w);
        o.global_block_ = std::move(global_block);
        return o;
    }

    OrderKind kind() const { return kind_; }
    const Weights& weights() const { return weights_; }
    const std::vector<int>& global_block() const { return global_block_; }

    // +1 if m1 > m2, -1 if m1 < m2, 0 if equal.
    int compare(const Monomial& m1, const Monomial& m2) const {
        if (kind_ == OrderKind::MixedElimination) {
            long long d1 = 0, d2 = 0;
            for (int i : global_block_) {
                d1 += m1[i];
                d2 += m2[i];
            }
            if (d1 != d2) return d1 > d2 ? 1 : -1;
        }
        long long w1 = weighted_degree(m1, weights_);
        long long w2 = weighted_degree(m2, weights_);
        if (w1 != w2) return w1 < w2 ? 1 : -1;
        for (std::size_t i = m1.size(); i-- > 0;) {
            if (m1[i] != m2[i]) return m1[i] > m2[i] ? -1 : 1;
        }
        return 0;
    }

    bool greater(const Monomial& m1, const Monomial& m2) const { return compare(m1, m2) > 0; }

    bool operator==(const MonomialOrder& o) const {
        return kind_ == o.kind_ && weights_ == o.weights_ && global_block_ == o.global_block_;
    }

private:
    OrderKind kind_ = OrderKind::LocalWeighted;
    Weights weights_;
    std::vector<int> global_block_;
};

}  // namespace milnor
