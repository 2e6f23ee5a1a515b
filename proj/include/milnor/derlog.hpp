#pragma once

#include <vector>

#include "milnor/derivation.hpp"
#include "milnor/space.hpp"

namespace milnor {

// Generators of the module D_X of vector fields tangent to X.
struct DerlogBasis {
    Derivation euler;
    std::vector<Derivation> others;
};

// The splitting D_X = O * xi_E + D^1 where every member of d1 has its
// x-component inside g.
struct SplitDerlog {
    Derivation d0;
    std::vector<Derivation> d1;
};

// For a weighted homogeneous hypersurface with isolated singularity, D_X is
// generated by the Euler field together with the Hamiltonian fields
// sigma_ij = (dh/dz_j) d/dz_i - (dh/dz_i) d/dz_j. Any tangent field with
// xi(h) = a*h differs from (a/d)*xi_E by a syzygy of the partials, and those
// syzygies are Koszul because the partials form a regular sequence; the
// trivial fields h * d/dz_i are O-combinations of these generators.
inline DerlogBasis build_derlog_hypersurface(const SpacePair& X, const Limits& lim = Limits{}) {
    if (X.p() != 1)
        throw PreconditionViolation("hypersurface derlog construction requires p = 1");
    const Polynomial& h = X.equations().front();
    const std::size_t n = X.ring()->size();

    std::vector<Polynomial> partials;
    for (std::size_t j = 0; j < n; ++j) partials.push_back(h.derivative(j));

    DerlogBasis basis{euler_derivation(X.ring(), X.weights()), {}};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Derivation s;
            for (std::size_t k = 0; k < n; ++k) s.components.push_back(Polynomial::zero(X.ring()));
            s.components[i] = partials[j];
            s.components[j] = -partials[i];
            basis.others.push_back(std::move(s));
        }
    }

    // tangency holds by construction; assert it anyway
    Ideal hI = X.h_ideal();
    if (!is_member(apply_derivation(basis.euler, h), hI, lim)) throw TangencyFailure(0, 0);
    for (std::size_t i = 0; i < basis.others.size(); ++i)
        if (!is_member(apply_derivation(basis.others[i], h), hI, lim))
            throw TangencyFailure(static_cast<int>(i + 1), 0);
    return basis;
}

// Accept user-supplied generators (the complete intersection case, p >= 2, is
// not constructed here). The first entry must be the Euler field; every
// generator is checked for tangency against every equation.
inline DerlogBasis load_derlog(const SpacePair& X, std::vector<Derivation> gens,
                               const Limits& lim = Limits{}) {
    if (gens.empty()) throw PreconditionViolation("load_derlog: no generators given");
    for (const auto& xi : gens)
        if (xi.components.size() != X.ring()->size())
            throw PreconditionViolation("load_derlog: component count mismatch");
    if (!(gens.front() == euler_derivation(X.ring(), X.weights())))
        throw PreconditionViolation(
            "load_derlog: first generator must be the Euler derivation for the declared weights");

    Ideal hI = X.h_ideal();
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t k = 0; k < X.equations().size(); ++k)
            if (!is_member(apply_derivation(gens[i], X.equations()[k]), hI, lim))
                throw TangencyFailure(static_cast<int>(i), static_cast<int>(k));

    DerlogBasis basis{std::move(gens.front()), {}};
    for (std::size_t i = 1; i < gens.size(); ++i) basis.others.push_back(std::move(gens[i]));
    return basis;
}

// Lemma-style splitting: a generator xi whose x-component restricts to
// c(x) != 0 on the axis is replaced by xi - (1/w_0) * (c(x)/x) * xi_E. The
// lift c(x)/x is taken as a polynomial in x alone. c(0) != 0 contradicts the
// isolated-singularity hypothesis and is reported as input inconsistency.
inline SplitDerlog split_d1(const DerlogBasis& basis, const SpacePair& X) {
    SplitDerlog split{basis.euler, {}};
    const Rational w0_inv = make_rational(1, X.weights()[0]);
    for (const auto& xi : basis.others) {
        Polynomial c = restrict_to_axis(xi.components.front());
        if (c.is_zero()) {
            split.d1.push_back(xi);
            continue;
        }
        if (c.constant_term() != 0)
            throw AxisRestrictionNonvanishing(
                "a generator's x-component does not vanish on the axis; "
                "inconsistent with an isolated singularity");
        Polynomial c1 = divide_by_axis_variable(c).scaled(w0_inv);
        Derivation adjusted;
        for (std::size_t k = 0; k < xi.components.size(); ++k)
            adjusted.components.push_back(xi.components[k] - c1 * basis.euler.components[k]);
        if (!in_coordinate_ideal(adjusted.components.front()))
            throw AxisRestrictionNonvanishing(
                "x-component still outside g after the Euler correction");
        split.d1.push_back(std::move(adjusted));
    }
    return split;
}

struct JacobianIdeals {
    Ideal j0;  // (xi_E(f))
    Ideal j1;  // (xi'(f) : xi' in d1)
    Ideal jx;  // j0 + j1
};

inline JacobianIdeals jacobian_ideal(const SplitDerlog& split, const SpacePair& X,
                                     const Polynomial& f) {
    MonomialOrder ord = X.local_order();
    std::vector<Polynomial> g0 = {apply_derivation(split.d0, f)};
    std::vector<Polynomial> g1;
    for (const auto& xi : split.d1) g1.push_back(apply_derivation(xi, f));
    Ideal j0(X.ring(), g0, ord);
    Ideal j1(X.ring(), g1, ord);
    Ideal jx = sum(j0, j1);
    return JacobianIdeals{std::move(j0), std::move(j1), std::move(jx)};
}

}  // namespace milnor
