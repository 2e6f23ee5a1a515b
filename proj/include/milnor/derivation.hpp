#pragma once

#include <vector>

#include "milnor/poly.hpp"

namespace milnor {

// A vector field xi = sum components[j] * d/dz_j; one component per variable.
struct Derivation {
    std::vector<Polynomial> components;

    const RingPtr& ring() const { return components.front().ring(); }

    bool operator==(const Derivation& o) const { return components == o.components; }
};

inline Polynomial apply_derivation(const Derivation& xi, const Polynomial& f) {
    if (xi.components.size() != f.ring()->size())
        throw PreconditionViolation("derivation and polynomial have different variable counts");
    Polynomial acc = Polynomial::zero(f.ring());
    for (std::size_t j = 0; j < xi.components.size(); ++j) {
        if (xi.components[j].is_zero()) continue;
        acc = acc + xi.components[j] * f.derivative(j);
    }
    return acc;
}

// xi_E = sum w_j z_j d/dz_j; satisfies xi_E(p) = d*p on weighted homogeneous p of degree d.
inline Derivation euler_derivation(const RingPtr& ring, const Weights& w) {
    Derivation xi;
    for (std::size_t j = 0; j < ring->size(); ++j)
        xi.components.push_back(Polynomial::variable(ring, j).scaled(Rational(w[j])));
    return xi;
}

}  // namespace milnor
