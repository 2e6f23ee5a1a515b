// Temporary development smoke run against the worked example family.
#include <iostream>

#include "milnor/milnor.hpp"

using namespace milnor;

static Problem make_xls(int l, int s, const std::string& ftext) {
    RingPtr ring = make_ring({"x", "y", "z"});
    std::string h = "x^" + std::to_string(l) + "*y + x^" + std::to_string(s) + "*z^2 + y*z";
    SpacePair X = SpacePair::make(ring, std::nullopt, {parse_poly(h, ring)});
    return Problem::make(std::move(X), parse_poly(ftext, ring));
}

int main() {
    // weights
    {
        RingPtr ring = make_ring({"x", "y", "z"});
        Weights w = infer_weights({parse_poly("x^2*y + x*z^2 + y*z", ring)});
        std::cout << "weights(2,1): " << w[0] << "," << w[1] << "," << w[2] << "\n";
    }
    // mora basics
    {
        RingPtr ring = make_ring({"x", "y", "z"});
        auto ord = MonomialOrder::local_weighted(Weights({1, 1, 1}));
        MoraCertificate cert(ring, 1);
        Polynomial f = parse_poly("x", ring);
        Polynomial g = parse_poly("x - x^2", ring);
        Polynomial r = mora_nf(f, {g}, ord, Limits{}, cert);
        std::cout << "nf(x | x-x^2) = " << to_string(r) << ", unit = " << to_string(cert.unit)
                  << ", ok=" << verify_certificate(f, {g}, r, cert, ord) << "\n";
        Ideal I(ring, {parse_poly("y", ring), parse_poly("2*z - x*z + y", ring)}, ord);
        for (const auto& e : I.basis().elements) std::cout << "  basis elt: " << to_string(e) << "\n";
    }
    // X_{1,0} with f = y + 1/2 z^2
    {
        Problem P = make_xls(1, 0, "y + 1/2*z^2");
        std::cout << "prim(f) = " << is_primitive_member(P) << "\n";
        std::cout << "j(f) = " << jacobian_number(P) << " nu = " << nu(P)
                  << " chi = " << euler_characteristic(P) << "\n";
        std::cout << "mu(f_5) = " << milnor_series(P, 5) << " e_4 = " << e_k(P, 4) << "\n";
        auto sm = sigma_mult(P);
        std::cout << "sigma = " << sm.first << " mult = " << sm.second << "\n";
        std::cout << "lambda = " << torsion_number(P.space()) << "\n";
        std::cout << "lemma42(10) = " << lemma42_check(P, 10) << "\n";
    }
    // X_{1,0} with g
    {
        Problem P = make_xls(1, 0, "y^2 - y*z + 1/2*z^2");
        std::cout << "g: j = " << jacobian_number(P) << " nu = " << nu(P)
                  << " chi = " << euler_characteristic(P) << "\n";
        std::cout << "g: lambda = " << torsion_number(P.space())
                  << " delta = " << delta_f(P.space(), P.f()) << "\n";
        std::cout << "g: mu(f_10) = " << milnor_series(P, 10) << "\n";
        auto q = q44_check(P);
        std::cout << "g: q44 = " << q44_verdict_string(q.verdict) << "\n";
        // oracle agreement
        Ideal I = P.h_plus_jxf();
        std::cout << "g: jet j (N=10): " << (jet_dim(I, 10) - 10) << "\n";
    }
    return 0;
}
