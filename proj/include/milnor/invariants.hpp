#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "milnor/derlog.hpp"
#include "milnor/space.hpp"

namespace milnor {

struct SeriesRow {
    int k;
    long long mu;
    bool consistent;
    bool operator==(const SeriesRow& o) const = default;
};

struct EkSample {
    int k;
    long long e;
    bool operator==(const EkSample& o) const = default;
};

enum class Q44Verdict { Holds, Fails, Inapplicable };

struct Q44Result {
    Q44Verdict verdict = Q44Verdict::Inapplicable;
    std::optional<long long> nu, lambda, delta, rhs;  // rhs = 2*lambda + delta - 1
    std::string reason;                               // why inapplicable
    bool operator==(const Q44Result& o) const = default;
};

// Everything computed for one (X, Sigma, f); chi = 1 + (-1)^(dim_x - 1)(j + nu)
// holds in every emitted report.
struct InvariantReport {
    int dim_x = 0;
    bool primitive_member = false;
    bool constancy = false;
    long long j = 0, nu = 0, chi = 0;
    long long sigma = 0, mult = 0;
    std::optional<long long> lambda, delta;
    std::optional<Q44Result> q44;
    std::vector<SeriesRow> series;
    std::vector<EkSample> e_k;
    bool operator==(const InvariantReport& o) const = default;
};

// One problem instance. Holds the split derlog and memoizes the ideals and
// numbers that several invariants share.
class Problem {
public:
    static Problem make(SpacePair X, Polynomial f,
                        std::optional<DerlogBasis> basis = std::nullopt,
                        Limits lim = Limits{}) {
        if (f.constant_term() != 0)
            throw PreconditionViolation("f must vanish at the origin");
        DerlogBasis b = basis ? std::move(*basis) : build_derlog_hypersurface(X, lim);
        SplitDerlog split = split_d1(b, X);
        return Problem(std::move(X), std::move(f), std::move(split), lim);
    }

    const SpacePair& space() const { return X_; }
    const Polynomial& f() const { return f_; }
    const SplitDerlog& split() const { return split_; }
    const Limits& limits() const { return lim_; }

    Polynomial f_series(int k) const {  // f_k = f + x^(k+1) / (k+1)
        Monomial m = mono_one(X_.ring()->size());
        m[0] = k + 1;
        return f_ + Polynomial::monomial(X_.ring(), std::move(m), make_rational(1, k + 1));
    }

    const Ideal& sigma() const {
        std::lock_guard<std::recursive_mutex> lock(memo_->mu);
        if (!memo_->sigma) memo_->sigma = X_.sigma_ideal();
        return *memo_->sigma;
    }

    const JacobianIdeals& jacobian() const {
        std::lock_guard<std::recursive_mutex> lock(memo_->mu);
        if (!memo_->jf) memo_->jf = jacobian_ideal(split_, X_, f_);
        return *memo_->jf;
    }

    const Ideal& h_plus_jxf() const {
        std::lock_guard<std::recursive_mutex> lock(memo_->mu);
        if (!memo_->hJf) memo_->hJf = sum(X_.h_ideal(), jacobian().jx);
        return *memo_->hJf;
    }

    const Ideal& j1_plus_h() const {
        std::lock_guard<std::recursive_mutex> lock(memo_->mu);
        if (!memo_->j1h) memo_->j1h = sum(jacobian().j1, X_.h_ideal());
        return *memo_->j1h;
    }

    struct Memo {
        std::recursive_mutex mu;
        std::optional<bool> primitive;
        std::optional<long long> j, nu;
        std::optional<Ideal> sigma, hJf, j1h;
        std::optional<JacobianIdeals> jf;
        std::map<int, std::optional<long long>> mu_series;  // nullopt: not isolated at this k
        std::map<int, bool> lemma42;
    };
    Memo& memo() const { return *memo_; }

private:
    Problem(SpacePair X, Polynomial f, SplitDerlog split, Limits lim)
        : X_(std::move(X)), f_(std::move(f)), split_(std::move(split)), lim_(lim),
          memo_(std::make_shared<Memo>()) {}

    SpacePair X_;
    Polynomial f_;
    SplitDerlog split_;
    Limits lim_;
    std::shared_ptr<Memo> memo_;
};

// f in the primitive ideal of g relative to h: f in g and xi(f) in g for every
// stored generator of D_X (sound and complete since the generators span).
inline bool is_primitive_member(const Problem& P) {
    auto& memo = P.memo();
    std::lock_guard<std::recursive_mutex> lock(memo.mu);
    if (memo.primitive) return *memo.primitive;
    bool ok = in_coordinate_ideal(P.f());
    if (ok) ok = in_coordinate_ideal(apply_derivation(P.split().d0, P.f()));
    for (const auto& xi : P.split().d1) {
        if (!ok) break;
        ok = in_coordinate_ideal(apply_derivation(xi, P.f()));
    }
    memo.primitive = ok;
    return ok;
}

inline void require_primitive(const Problem& P) {
    if (!is_primitive_member(P))
        throw NotPrimitiveMember("f is not in the primitive ideal");
}

// j(f) = dim g/(h + J_X(f)); finite iff the transversal singularity type is A1.
inline long long jacobian_number(const Problem& P) {
    auto& memo = P.memo();
    std::lock_guard<std::recursive_mutex> lock(memo.mu);
    if (memo.j) return *memo.j;
    require_primitive(P);
    try {
        memo.j = relative_dim_g(P.h_plus_jxf(), P.sigma(), P.limits());
    } catch (const NoStabilization&) {
        throw NotTransversalA1(
            "j(f) is not finite (or N_max is too small): f does not have transversal A1 "
            "singularities along Sigma");
    }
    return *memo.j;
}

// nu = dim O/(g + ((D^1(f) + h) : (xi_E(f))))
inline long long nu(const Problem& P) {
    auto& memo = P.memo();
    std::lock_guard<std::recursive_mutex> lock(memo.mu);
    if (memo.nu) return *memo.nu;
    require_primitive(P);
    if (P.jacobian().j0.is_zero_ideal())
        throw PreconditionViolation("nu: xi_E(f) = 0");
    Ideal c = colon(P.j1_plus_h(), P.jacobian().j0, P.limits());
    auto d = vdim(sum(P.sigma(), c), P.limits());
    if (!d)
        throw InfiniteNu("nu is not finite: the transversal type is not constant along Sigma");
    memo.nu = *d;
    return *memo.nu;
}

inline long long euler_characteristic(const Problem& P) {
    long long jn = jacobian_number(P);
    long long nv = nu(P);
    int sign = (P.space().dim_x() - 1) % 2 == 0 ? 1 : -1;
    return 1 + sign * (jn + nv);
}

// Transversal-type constancy along Sigma \ {0}: finiteness of
// dim O/(g + ((J^1 + h) : J^0)). INFINITE maps to false.
inline bool check_constancy(const Problem& P) {
    require_primitive(P);
    if (P.jacobian().j0.is_zero_ideal()) return false;
    Ideal c = colon(P.j1_plus_h(), P.jacobian().j0, P.limits());
    return vdim(sum(P.sigma(), c), P.limits()).has_value();
}

// mu(f_k) = dim O/(h + J_X(f_k)) for f_k = f + x^(k+1)/(k+1).
inline long long milnor_series(const Problem& P, int k) {
    if (k < 1) throw PreconditionViolation("milnor_series: k must be positive");
    auto& memo = P.memo();
    std::lock_guard<std::recursive_mutex> lock(memo.mu);
    auto it = memo.mu_series.find(k);
    if (it == memo.mu_series.end()) {
        Polynomial fk = P.f_series(k);
        std::vector<Polynomial> gens = P.space().equations();
        gens.push_back(apply_derivation(P.split().d0, fk));
        for (const auto& xi : P.split().d1) gens.push_back(apply_derivation(xi, fk));
        auto d = vdim(Ideal(P.space().ring(), std::move(gens), P.space().local_order()),
                      P.limits());
        it = memo.mu_series.emplace(k, d ? std::optional<long long>(*d) : std::nullopt).first;
    }
    if (!it->second) throw NotIsolatedSeries(k);
    return *it->second;
}

// e_k = dim O/(g + J_X(f_k))
inline long long e_k(const Problem& P, int k) {
    Polynomial fk = P.f_series(k);
    std::vector<Polynomial> gens = P.sigma().generators();
    gens.push_back(apply_derivation(P.split().d0, fk));
    for (const auto& xi : P.split().d1) gens.push_back(apply_derivation(xi, fk));
    auto d = vdim(Ideal(P.space().ring(), std::move(gens), P.space().local_order()), P.limits());
    if (!d) throw InfiniteDimension("e_k is not finite at k = " + std::to_string(k));
    return *d;
}

// sigma(Sigma X, 0) = dim(O_Sigma / J_X(x)) and mult_x(Sigma) = dim(O_Sigma / (x)).
inline std::pair<long long, long long> sigma_mult(const Problem& P) {
    Polynomial x = Polynomial::variable(P.space().ring(), 0);
    std::vector<Polynomial> gens = P.sigma().generators();
    gens.push_back(apply_derivation(P.split().d0, x));
    for (const auto& xi : P.split().d1) gens.push_back(apply_derivation(xi, x));
    auto s = vdim(Ideal(P.space().ring(), std::move(gens), P.space().local_order()), P.limits());
    std::vector<Polynomial> mg = P.sigma().generators();
    mg.push_back(x);
    auto m = vdim(Ideal(P.space().ring(), std::move(mg), P.space().local_order()), P.limits());
    if (!s || !m) throw InfiniteDimension("sigma or mult is not finite");
    return {*s, *m};
}

namespace detail {

inline Polynomial poly_det(std::vector<std::vector<Polynomial>> M, const RingPtr& ring) {
    const std::size_t n = M.size();
    if (n == 0) return Polynomial::constant(ring, 1);
    if (n == 1) return M[0][0];
    Polynomial acc = Polynomial::zero(ring);
    for (std::size_t j = 0; j < n; ++j) {
        if (M[0][j].is_zero()) continue;
        std::vector<std::vector<Polynomial>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Polynomial> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(M[r][c]);
            minor.push_back(std::move(row));
        }
        Polynomial term = M[0][j] * poly_det(std::move(minor), ring);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// Linear-in-y coefficients of the equations, reduced mod g: b[i][k-1] collects
// the x^a y_k monomials of h_i. Throws NotAligned when a coefficient with
// k > p survives.
inline std::vector<std::vector<Polynomial>> aligned_b_matrix(const SpacePair& X) {
    const std::size_t nv = X.ring()->size();
    const std::size_t n = nv - 1;  // number of y variables
    const std::size_t p = static_cast<std::size_t>(X.p());
    std::vector<std::vector<Polynomial>> b(
        p, std::vector<Polynomial>(n, Polynomial::zero(X.ring())));
    for (std::size_t i = 0; i < p; ++i) {
        for (const Term& t : X.equations()[i].terms()) {
            int ydeg = 0;
            int yvar = -1;
            for (std::size_t v = 1; v < nv; ++v) {
                ydeg += t.mono[v];
                if (t.mono[v] > 0) yvar = static_cast<int>(v);
            }
            if (ydeg != 1) continue;  // constant-in-y is impossible (h in g); >= 2 is in g^2
            Monomial xpart = mono_one(nv);
            xpart[0] = t.mono[0];
            b[i][yvar - 1] =
                b[i][yvar - 1] + Polynomial::monomial(X.ring(), std::move(xpart), t.coeff);
        }
        for (std::size_t k = p; k < n; ++k)
            if (!b[i][k].is_zero())
                throw NotAligned("the linear part of h_" + std::to_string(i) + " involves " +
                                 X.ring()->vars[k + 1] +
                                 "; change the y-coordinates so it uses only y_1..y_p");
    }
    return b;
}

}  // namespace detail

// lambda(Sigma X) = ord_x det(b_ik) = dim O/(g + (b)).
inline long long torsion_number(const SpacePair& X, const Limits& lim = Limits{}) {
    auto b = detail::aligned_b_matrix(X);
    const std::size_t p = static_cast<std::size_t>(X.p());
    std::vector<std::vector<Polynomial>> B(p, std::vector<Polynomial>(p, Polynomial::zero(X.ring())));
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t k = 0; k < p; ++k) B[i][k] = b[i][k];
    Polynomial det = restrict_to_axis(detail::poly_det(std::move(B), X.ring()));
    if (det.is_zero())
        throw DegenerateTorsion("det(b_ik) vanishes mod g; it must be a non-zero divisor on Sigma");
    std::vector<Polynomial> gens = X.sigma_ideal().generators();
    gens.push_back(det);
    auto d = vdim(Ideal(X.ring(), std::move(gens), X.local_order()), lim);
    if (!d) throw DegenerateTorsion("torsion number is not finite");
    return *d;
}

enum class ExtractionRule { LeastPair, GreatestPair };

// delta_f = ord_x det of the free block of the quadric matrix H, where
// f = sum H_kl y_k y_l. A monomial is assigned to an extreme divisor pair and
// off-diagonal contributions are halved; entries are reduced mod g, so only
// monomials exactly quadratic in the y's survive and the result does not
// depend on the extraction rule.
inline long long delta_f(const SpacePair& X, const Polynomial& f,
                         ExtractionRule rule = ExtractionRule::LeastPair,
                         const Limits& lim = Limits{}) {
    if (!in_coordinate_ideal_squared(f))
        throw NotInGSquared("f is not in g^2 (monomial-wise check)");
    detail::aligned_b_matrix(X);  // alignment precondition

    const std::size_t nv = X.ring()->size();
    const std::size_t n = nv - 1;
    const Rational half = make_rational(1, 2);
    std::vector<std::vector<Polynomial>> H(
        n, std::vector<Polynomial>(n, Polynomial::zero(X.ring())));
    for (const Term& t : f.terms()) {
        int k = -1, l = -1;
        if (rule == ExtractionRule::LeastPair) {
            for (std::size_t v = 1; v < nv; ++v)
                if (t.mono[v] > 0) {
                    k = static_cast<int>(v);
                    break;
                }
            if (t.mono[k] >= 2)
                l = k;
            else
                for (std::size_t v = k + 1; v < nv; ++v)
                    if (t.mono[v] > 0) {
                        l = static_cast<int>(v);
                        break;
                    }
        } else {
            for (std::size_t v = nv; v-- > 1;)
                if (t.mono[v] > 0) {
                    l = static_cast<int>(v);
                    break;
                }
            if (t.mono[l] >= 2)
                k = l;
            else
                for (std::size_t v = l; v-- > 1;)
                    if (t.mono[v] > 0) {
                        k = static_cast<int>(v);
                        break;
                    }
        }
        Monomial q = t.mono;
        q[k] -= 1;
        q[l] -= 1;
        if (k == l) {
            H[k - 1][k - 1] = H[k - 1][k - 1] + Polynomial::monomial(X.ring(), q, t.coeff);
        } else {
            Polynomial contrib = Polynomial::monomial(X.ring(), q, t.coeff * half);
            H[k - 1][l - 1] = H[k - 1][l - 1] + contrib;
            H[l - 1][k - 1] = H[l - 1][k - 1] + contrib;
        }
    }

    const std::size_t p = static_cast<std::size_t>(X.p());
    const std::size_t bs = n - p;  // free block size
    std::vector<std::vector<Polynomial>> block(
        bs, std::vector<Polynomial>(bs, Polynomial::zero(X.ring())));
    for (std::size_t r = 0; r < bs; ++r)
        for (std::size_t c = 0; c < bs; ++c) block[r][c] = restrict_to_axis(H[p + r][p + c]);
    Polynomial det = restrict_to_axis(detail::poly_det(std::move(block), X.ring()));
    if (det.is_zero()) throw DegenerateQuadric("det of the free quadric block vanishes mod g");
    std::vector<Polynomial> gens = X.sigma_ideal().generators();
    gens.push_back(det);
    auto d = vdim(Ideal(X.ring(), std::move(gens), X.local_order()), lim);
    if (!d) throw DegenerateQuadric("delta_f is not finite");
    return *d;
}

// Does nu = 2*lambda + delta_f - 1 hold? Both sides are computed; nothing is
// assumed.
inline Q44Result q44_check(const Problem& P) {
    Q44Result r;
    try {
        long long lam = torsion_number(P.space(), P.limits());
        long long del = delta_f(P.space(), P.f(), ExtractionRule::LeastPair, P.limits());
        long long nv = nu(P);
        r.lambda = lam;
        r.delta = del;
        r.nu = nv;
        r.rhs = 2 * lam + del - 1;
        r.verdict = (nv == *r.rhs) ? Q44Verdict::Holds : Q44Verdict::Fails;
    } catch (const NotInGSquared& e) {
        r.verdict = Q44Verdict::Inapplicable;
        r.reason = e.what();
    } catch (const NotAligned& e) {
        r.verdict = Q44Verdict::Inapplicable;
        r.reason = e.what();
    } catch (const DegenerateTorsion& e) {
        r.verdict = Q44Verdict::Inapplicable;
        r.reason = e.what();
    } catch (const DegenerateQuadric& e) {
        r.verdict = Q44Verdict::Inapplicable;
        r.reason = e.what();
    }
    return r;
}

// xi_E(f) g + D^1(f) + h  =  (h + J_X(f_k)) cap g, for k large.
inline bool lemma42_check(const Problem& P, int k) {
    auto& memo = P.memo();
    std::lock_guard<std::recursive_mutex> lock(memo.mu);
    auto it = memo.lemma42.find(k);
    if (it != memo.lemma42.end()) return it->second;
    require_primitive(P);

    Ideal lhs = sum(sum(product(P.jacobian().j0, P.sigma()), P.jacobian().j1), P.space().h_ideal());

    Polynomial fk = P.f_series(k);
    std::vector<Polynomial> gens = P.space().equations();
    gens.push_back(apply_derivation(P.split().d0, fk));
    for (const auto& xi : P.split().d1) gens.push_back(apply_derivation(xi, fk));
    Ideal rhs = intersect(Ideal(P.space().ring(), std::move(gens), P.space().local_order()),
                          P.sigma(), P.limits());

    bool eq = ideal_equal(lhs, rhs, P.limits());
    memo.lemma42.emplace(k, eq);
    return eq;
}

// mu(f_k) = k + 1 + j(f) + nu, the Iomdin-Le consistency at level k.
inline bool iomdin_consistency(const Problem& P, int k) {
    return milnor_series(P, k) == k + 1 + jacobian_number(P) + nu(P);
}

// Least k such that the consistency holds at k, k+1 and k+2. Rows below the
// isolation threshold count as failures, not errors.
inline int find_consistent_k(const Problem& P) {
    auto ok = [&](int k) {
        try {
            return iomdin_consistency(P, k);
        } catch (const NotIsolatedSeries&) {
            return false;
        }
    };
    for (int k = 1; k + 2 <= P.limits().k_max; ++k)
        if (ok(k) && ok(k + 1) && ok(k + 2)) return k;
    throw NoStabilization("no k <= " + std::to_string(P.limits().k_max) +
                          " gives three consecutive consistent series values");
}

// Least k where the ideal equality first holds and persists for 3 consecutive k.
inline int find_lemma42_k(const Problem& P) {
    for (int k = 1; k + 2 <= P.limits().k_max; ++k)
        if (lemma42_check(P, k) && lemma42_check(P, k + 1) && lemma42_check(P, k + 2)) return k;
    throw NoStabilization("the ideal equality did not stabilize by k_max = " +
                          std::to_string(P.limits().k_max));
}

inline InvariantReport full_report(const Problem& P) {
    InvariantReport r;
    r.dim_x = P.space().dim_x();
    require_primitive(P);
    r.primitive_member = true;
    r.j = jacobian_number(P);
    r.nu = nu(P);
    r.chi = euler_characteristic(P);
    r.constancy = check_constancy(P);
    auto sm = sigma_mult(P);
    r.sigma = sm.first;
    r.mult = sm.second;
    try {
        r.lambda = torsion_number(P.space(), P.limits());
    } catch (const KernelError&) {
    }
    try {
        r.delta = delta_f(P.space(), P.f(), ExtractionRule::LeastPair, P.limits());
    } catch (const KernelError&) {
    }
    r.q44 = q44_check(P);
    int k0 = find_consistent_k(P);
    for (int k = k0; k < k0 + 3; ++k) {
        r.series.push_back(SeriesRow{k, milnor_series(P, k), iomdin_consistency(P, k)});
        r.e_k.push_back(EkSample{k, e_k(P, k)});
    }
    int sign = (r.dim_x - 1) % 2 == 0 ? 1 : -1;
    if (r.chi != 1 + sign * (r.j + r.nu))
        throw KernelError("report coherence violated");  // cannot happen
    return r;
}

}  // namespace milnor
