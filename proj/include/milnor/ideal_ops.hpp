#pragma once

#include <string>
#include <vector>

#include "milnor/mora.hpp"

namespace milnor {

inline Ideal sum(const Ideal& I, const Ideal& J) {
    if (!(I.order() == J.order()) || I.ring()->vars != J.ring()->vars)
        throw PreconditionViolation("ideal sum requires the same ring and order");
    std::vector<Polynomial> gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return Ideal(I.ring(), std::move(gens), I.order());
}

inline Ideal product(const Ideal& I, const Ideal& J) {
    if (!(I.order() == J.order()) || I.ring()->vars != J.ring()->vars)
        throw PreconditionViolation("ideal product requires the same ring and order");
    std::vector<Polynomial> gens;
    for (const auto& f : I.generators())
        for (const auto& g : J.generators()) gens.push_back(f * g);
    return Ideal(I.ring(), std::move(gens), I.order());
}

namespace detail {

// Ring extension by one elimination variable, appended last.
struct ExtendedRing {
    RingPtr ring;
    MonomialOrder order;  // MixedElimination({t}, base weights + 1)
};

inline ExtendedRing extend_by_tag(const RingPtr& base, const MonomialOrder& base_order) {
    std::string tname = "t";
    while (base->var_index(tname) >= 0) tname += "_";
    std::vector<std::string> vars = base->vars;
    vars.push_back(tname);
    std::vector<int> w = base_order.weights().v;
    w.push_back(1);
    ExtendedRing ext;
    ext.ring = make_ring(std::move(vars));
    ext.order = MonomialOrder::mixed_elimination({static_cast<int>(base->size())},
                                                 Weights(std::move(w)));
    return ext;
}

inline Polynomial embed(const Polynomial& p, const RingPtr& ext) {
    std::vector<Term> t = p.terms();
    for (auto& tm : t) tm.mono.push_back(0);
    return Polynomial(ext, std::move(t), false);
}

inline bool tag_free(const Polynomial& p) {
    for (const Term& tm : p.terms())
        if (tm.mono.back() > 0) return false;
    return true;
}

inline Polynomial project(const Polynomial& p, const RingPtr& base) {
    std::vector<Term> t = p.terms();
    for (auto& tm : t) tm.mono.pop_back();
    return Polynomial(base, std::move(t), false);
}

}  // namespace detail

// I cap J by the auxiliary-variable construction: a standard basis of
// t*I + (1-t)*J under an elimination order for t; the t-free elements
// generate the intersection in the localized base ring.
inline Ideal intersect(const Ideal& I, const Ideal& J, const Limits& lim = Limits{}) {
    if (!(I.order() == J.order()) || I.ring()->vars != J.ring()->vars)
        throw PreconditionViolation("intersect requires the same ring and order");
    if (I.order().kind() != OrderKind::LocalWeighted)
        throw PreconditionViolation("intersect requires a local weighted order");

    auto ext = detail::extend_by_tag(I.ring(), I.order());
    const std::size_t tvar = I.ring()->size();
    Polynomial t = Polynomial::variable(ext.ring, tvar);
    Polynomial one_minus_t = Polynomial::constant(ext.ring, 1) - t;

    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(t * detail::embed(g, ext.ring));
    for (const auto& g : J.generators()) gens.push_back(one_minus_t * detail::embed(g, ext.ring));

    StdBasis b = std_basis(gens, ext.order, lim);
    std::vector<Polynomial> kept;
    for (const auto& e : b.elements)
        if (detail::tag_free(e)) kept.push_back(detail::project(e, I.ring()));
    return Ideal(I.ring(), std::move(kept), I.order());
}

namespace detail {

// Generators of I : (f) for a single nonzero f. Every generator of
// I cap (f) is divisible by f in the localized ring; the Mora certificate
// u*p = a*f turns p/f into the polynomial a, a unit multiple of the quotient.
inline std::vector<Polynomial> colon_poly(const Ideal& I, const Polynomial& f,
                                          const Limits& lim) {
    Ideal inter = intersect(I, Ideal(I.ring(), {f}, I.order()), lim);
    std::vector<Polynomial> gens;
    for (const auto& p : inter.generators()) {
        MoraCertificate cert(I.ring(), 1);
        Polynomial r = mora_nf(p, {f}, I.order(), lim, cert);
        if (!r.is_zero())
            throw ExactDivisionFailure(
                "colon: generator of I cap (f) is not divisible by f; engine bug");
        if (!cert.coefficients.front().is_zero()) gens.push_back(cert.coefficients.front());
    }
    return gens;
}

}  // namespace detail

// I : J = { q : q*J subset of I }.
inline Ideal colon(const Ideal& I, const Ideal& J, const Limits& lim = Limits{}) {
    if (J.is_zero_ideal()) throw PreconditionViolation("colon: J must be nonzero");
    bool first = true;
    Ideal acc = I;  // overwritten below
    for (const auto& f : J.generators()) {
        Ideal qf(I.ring(), detail::colon_poly(I, f, lim), I.order());
        if (first) {
            acc = qf;
            first = false;
        } else {
            acc = intersect(acc, qf, lim);
        }
    }
    return acc;
}

inline std::vector<Monomial> monomials_of_total_degree(std::size_t nvars, int d) {
    std::vector<Monomial> out;
    Monomial m(nvars, 0);
    // lexicographic enumeration of compositions of d into nvars parts
    auto rec = [&](auto&& self, std::size_t pos, int rest) -> void {
        if (pos + 1 == nvars) {
            m[pos] = rest;
            out.push_back(m);
            m[pos] = 0;
            return;
        }
        for (int e = rest; e >= 0; --e) {
            m[pos] = e;
            self(self, pos + 1, rest - e);
        }
        m[pos] = 0;
    };
    rec(rec, 0, d);
    return out;
}

// vdim(I + m^N), always finite.
inline long long truncated_dim(const Ideal& I, int N, const Limits& lim = Limits{}) {
    if (N < 1) throw PreconditionViolation("truncated_dim: N must be positive");
    std::vector<Polynomial> gens = I.basis(lim).elements;
    for (const auto& m : monomials_of_total_degree(I.ring()->size(), N))
        gens.push_back(Polynomial::monomial(I.ring(), m, 1));
    auto d = vdim_of_basis(std_basis(gens, I.order(), lim));
    if (!d) throw KernelError("truncated_dim: unexpectedly infinite");  // cannot happen
    return *d;
}

// dim g/I for I contained in a coordinate ideal g, via the stabilized value of
// truncated_dim(I, N) - truncated_dim(g, N) over the schedule N = 6, 8, 10, ...
// Two consecutive agreeing values are accepted; the difference equals dim g/I
// exactly once m^(N-1) * g lies inside I.
inline long long relative_dim_g(const Ideal& I, const Ideal& g, const Limits& lim = Limits{}) {
    // g generated by a subset of the coordinate variables
    std::vector<bool> coord(g.ring()->size(), false);
    for (const auto& p : g.generators()) {
        if (p.num_terms() != 1 || p.terms().front().coeff != 1 ||
            total_degree(p.terms().front().mono) != 1)
            throw PreconditionViolation("relative_dim_g: g must be a coordinate ideal");
        for (std::size_t i = 0; i < g.ring()->size(); ++i)
            if (p.terms().front().mono[i] == 1) coord[i] = true;
    }
    for (const auto& p : I.generators()) {
        bool inside = true;
        for (const Term& t : p.terms()) {
            bool hit = false;
            for (std::size_t i = 0; i < coord.size(); ++i)
                if (coord[i] && t.mono[i] > 0) {
                    hit = true;
                    break;
                }
            if (!hit) {
                inside = false;
                break;
            }
        }
        if (!inside)
            throw PreconditionViolation("relative_dim_g: a generator of I lies outside g");
    }

    long long prev = -1;
    bool have_prev = false;
    for (int N = 6; N <= lim.n_max; N += 2) {
        long long d = truncated_dim(I, N, lim) - truncated_dim(g, N, lim);
        if (have_prev && d == prev) return d;
        prev = d;
        have_prev = true;
    }
    throw NoStabilization("relative dimension did not stabilize by N = " +
                          std::to_string(lim.n_max) +
                          ": dimension not finite or N_max too small");
}

}  // namespace milnor
