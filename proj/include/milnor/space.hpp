#pragma once

#include <optional>
#include <vector>

#include "milnor/ideal_ops.hpp"
#include "milnor/weights_infer.hpp"

namespace milnor {

// The ambient data of one problem: coordinates with weights, the equations h
// of X, and the line Sigma = first coordinate axis with g = (vars[1..]).
//
// Every h_i must be weighted homogeneous, vanish on the axis, and for a
// hypersurface (p = 1) the isolated-singularity certificate
// vdim(h, all partials of h) < infinity is checked at construction.
class SpacePair {
public:
    static SpacePair make(RingPtr ring, std::optional<Weights> weights,
                          std::vector<Polynomial> hs, const Limits& lim = Limits{},
                          bool assume_isolated = false) {
        SpacePair X;
        X.ring_ = std::move(ring);
        X.hs_ = std::move(hs);
        if (X.hs_.empty() || X.hs_.size() >= X.ring_->size())
            throw PreconditionViolation("need 1 <= p < number of variables");
        for (const auto& h : X.hs_)
            if (h.is_zero()) throw PreconditionViolation("zero equation in h");

        X.weights_ = weights ? *weights : infer_weights(X.hs_);
        if (X.weights_.size() != X.ring_->size())
            throw PreconditionViolation("weights length does not match the variable count");

        for (std::size_t i = 0; i < X.hs_.size(); ++i) {
            if (!is_weighted_homogeneous(X.hs_[i], X.weights_))
                throw NotWeightedHomogeneous("h_" + std::to_string(i) +
                                             " is not weighted homogeneous for these weights");
            if (!in_coordinate_ideal(X.hs_[i]))
                throw PreconditionViolation("h_" + std::to_string(i) +
                                            " does not vanish on the axis Sigma");
        }

        if (X.p() == 1 && !assume_isolated) {
            std::vector<Polynomial> jac = {X.hs_[0]};
            for (std::size_t j = 0; j < X.ring_->size(); ++j)
                jac.push_back(X.hs_[0].derivative(j));
            Ideal cert(X.ring_, std::move(jac), X.local_order());
            if (!vdim(cert, lim))
                throw NotIsolated("X does not have an isolated singularity at 0");
        }
        return X;
    }

    const RingPtr& ring() const { return ring_; }
    const Weights& weights() const { return weights_; }
    const std::vector<Polynomial>& equations() const { return hs_; }
    int p() const { return static_cast<int>(hs_.size()); }
    int dim_x() const { return static_cast<int>(ring_->size()) - p(); }

    MonomialOrder local_order() const { return MonomialOrder::local_weighted(weights_); }

    // g = (vars[1..]), the ideal of the axis
    Ideal sigma_ideal() const {
        std::vector<Polynomial> gens;
        for (std::size_t i = 1; i < ring_->size(); ++i)
            gens.push_back(Polynomial::variable(ring_, i));
        return Ideal(ring_, std::move(gens), local_order());
    }

    Ideal h_ideal() const { return Ideal(ring_, hs_, local_order()); }

private:
    SpacePair() = default;
    RingPtr ring_;
    Weights weights_;
    std::vector<Polynomial> hs_;
};

}  // namespace milnor
