#pragma once

#include <limits>
#include <mutex>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "milnor/poly.hpp"

namespace milnor {

struct Limits {
    long long iteration_budget = 1'000'000;  // reduction steps per basis computation
    int n_max = 64;                          // truncation schedule bound
    int k_max = 24;                          // series sweep bound
};

// Witness for a weak normal form: unit * f = sum coefficients[i] * G[i] + r,
// with the leading monomial of `unit` equal to 1. Re-verifiable exactly.
struct MoraCertificate {
    Polynomial unit;
    std::vector<Polynomial> coefficients;

    MoraCertificate(const RingPtr& ring, std::size_t ngens)
        : unit(Polynomial::constant(ring, 1)),
          coefficients(ngens, Polynomial::zero(ring)) {}
};

struct StdBasis {
    std::vector<Polynomial> elements;
    MonomialOrder order;
    std::vector<Monomial> leads;  // leading monomials, parallel to elements
};

namespace detail {

// Working polynomial: terms sorted strictly descending under the active order.
struct WPoly {
    std::vector<Term> t;
    bool empty() const { return t.empty(); }
    const Term& lead() const { return t.front(); }
};

inline WPoly to_wpoly(const Polynomial& p, const MonomialOrder& ord) {
    WPoly w;
    w.t = p.terms();
    std::sort(w.t.begin(), w.t.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
    return w;
}

inline Polynomial from_wpoly(const RingPtr& ring, WPoly w) {
    return Polynomial(ring, std::move(w.t), true);
}

inline long long max_wdeg(const WPoly& p, const Weights& w) {
    long long d = std::numeric_limits<long long>::min();
    for (const Term& t : p.t) d = std::max(d, weighted_degree(t.mono, w));
    return d;
}

// ecart = max weighted degree - weighted degree of the leading monomial.
inline long long ecart(const WPoly& p, const MonomialOrder& ord) {
    return max_wdeg(p, ord.weights()) - weighted_degree(p.lead().mono, ord.weights());
}

struct Reducer {
    WPoly poly;
    Monomial lm;
    Rational lc;
    long long ec;
    int orig_index;  // index into G, or -1 for an intermediate reducer
    // identity for intermediates, tracked only in certificate mode:
    //   unit * f = sum coeffs[i] * G[i] + poly
    std::optional<Polynomial> unit;
    std::vector<Polynomial> coeffs;
};

// Divide out the integer content; expects integral coefficients.
inline void strip_integer_content(WPoly& p) {
    Integer g = 0;
    for (const Term& t : p.t) {
        g = int_gcd(g, numerator(t.coeff));
        if (g == 1) return;
    }
    if (g == 0) return;
    g = int_abs(g);
    for (Term& t : p.t) t.coeff = Rational(numerator(t.coeff) / g);
}

// Scale to integral coefficients with content 1 (sign preserved).
inline void make_primitive_integral(WPoly& p) {
    if (p.empty()) return;
    Integer den_lcm = 1;
    for (const Term& t : p.t) den_lcm = int_lcm(den_lcm, denominator(t.coeff));
    if (den_lcm != 1)
        for (Term& t : p.t) t.coeff *= den_lcm;
    strip_integer_content(p);
}

// result = a*sa + c * x^m * b, inputs sorted strictly descending under `before`.
template <class Before>
std::vector<Term> merge_scaled(const std::vector<Term>& a, const Rational& sa, const Rational& c,
                               const Monomial& m, const std::vector<Term>& b, Before before) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        bool take_a;
        Monomial mb;
        if (j < b.size()) mb = mono_mul(m, b[j].mono);
        if (i >= a.size())
            take_a = false;
        else if (j >= b.size())
            take_a = true;
        else if (a[i].mono == mb) {
            Rational s = a[i].coeff * sa + c * b[j].coeff;
            if (s != 0) out.push_back(Term{a[i].mono, std::move(s)});
            ++i;
            ++j;
            continue;
        } else
            take_a = before(a[i].mono, mb);
        if (take_a) {
            Rational s = a[i].coeff * sa;
            out.push_back(Term{a[i].mono, std::move(s)});
            ++i;
        } else {
            Rational s = c * b[j].coeff;
            if (s != 0) out.push_back(Term{std::move(mb), std::move(s)});
            ++j;
        }
    }
    return out;
}

struct BudgetCounter {
    long long used = 0;
    long long limit;
    explicit BudgetCounter(long long l) : limit(l) {}
    void step() {
        if (++used > limit)
            throw IterationBudgetExceeded("iteration budget of " + std::to_string(limit) +
                                          " reduction steps exceeded");
    }
};

// Mora weak normal form with ecart-based reducer selection. Reducers of
// minimal ecart are chosen (ties by position in T); when the chosen reducer
// has larger ecart than h, the current h joins T before the reduction, which
// is what guarantees termination for local and mixed orders.
//
// Without a certificate the reduction is fraction-free: h and all reducers
// are kept as primitive integer polynomials and each step combines
// (lc(g)/d)*h - (lc(h)/d)*mu*g followed by a content strip, so the result is
// the weak normal form up to a unit scalar. In certificate mode the exact
// rational identity is maintained instead.
inline WPoly mora_nf_core(WPoly h, const std::vector<Polynomial>& G, const MonomialOrder& ord,
                          BudgetCounter& budget, MoraCertificate* cert) {
    std::vector<Reducer> T;
    for (std::size_t i = 0; i < G.size(); ++i) {
        if (G[i].is_zero()) continue;
        Reducer r;
        r.poly = to_wpoly(G[i], ord);
        if (!cert) make_primitive_integral(r.poly);
        r.lm = r.poly.lead().mono;
        r.lc = r.poly.lead().coeff;
        r.ec = ecart(r.poly, ord);
        r.orig_index = static_cast<int>(i);
        T.push_back(std::move(r));
    }
    if (!cert) make_primitive_integral(h);

    // cert->unit is pre-seeded by the caller; it supplies the ring.
    std::optional<Polynomial> unit;
    std::vector<Polynomial> coeffs;
    if (cert) {
        unit = Polynomial::constant(cert->unit.ring(), 1);
        coeffs.assign(G.size(), Polynomial::zero(cert->unit.ring()));
    }

    auto before = [&](const Monomial& a, const Monomial& b) { return ord.greater(a, b); };

    while (!h.empty()) {
        const Monomial& hm = h.lead().mono;
        int chosen = -1;
        for (std::size_t i = 0; i < T.size(); ++i) {
            if (!mono_divides(T[i].lm, hm)) continue;
            if (chosen < 0 || T[i].ec < T[chosen].ec) chosen = static_cast<int>(i);
        }
        if (chosen < 0) break;

        if (T[chosen].ec > 0 && T[chosen].ec > ecart(h, ord)) {
            Reducer r;
            r.poly = h;
            r.lm = h.lead().mono;
            r.lc = h.lead().coeff;
            r.ec = ecart(h, ord);
            r.orig_index = -1;
            if (cert) {
                r.unit = unit;
                r.coeffs = coeffs;
            }
            T.push_back(std::move(r));
        }

        const Reducer& g = T[chosen];
        Monomial mu = mono_div(hm, g.lm);
        budget.step();
#ifdef MILNOR_TRACE_NF
        {
            std::size_t digits = 0;
            for (const Term& t : h.t)
                digits = std::max(digits, numerator(t.coeff).str().size() +
                                              denominator(t.coeff).str().size());
            std::string lead_str;
            for (int e : hm) lead_str += std::to_string(e) + ",";
            std::fprintf(stderr,
                         "[nf] step=%lld terms=%zu lead=(%s) chosen=%d ec=%lld T=%zu digs=%zu\n",
                         budget.used, h.t.size(), lead_str.c_str(), chosen,
                         static_cast<long long>(T[chosen].ec), T.size(), digits);
        }
#endif
        if (cert) {
            Rational c = h.lead().coeff / g.lc;
            h.t = merge_addmul(h.t, -c, mu, g.poly.t, before);
            Polynomial cmu = Polynomial::monomial(unit->ring(), mu, c);
            if (g.orig_index >= 0) {
                coeffs[g.orig_index] = coeffs[g.orig_index] + cmu;
            } else {
                unit = *unit - cmu * (*g.unit);
                for (std::size_t i = 0; i < coeffs.size(); ++i)
                    coeffs[i] = coeffs[i] - cmu * g.coeffs[i];
            }
        } else {
            Integer a = numerator(g.lc);
            Integer b = numerator(h.lead().coeff);
            Integer d = int_gcd(a, b);
            h.t = merge_scaled(h.t, Rational(a / d), Rational(-b / d), mu, g.poly.t, before);
            strip_integer_content(h);
        }
    }

    if (cert) {
        cert->unit = *unit;
        cert->coefficients = coeffs;
    }
    return h;
}

}  // namespace detail

// Weak normal form of f with respect to G: there is a unit u (leading monomial
// 1) and coefficients a_i with u*f = sum a_i G[i] + r, and no leading monomial
// of G divides the leading monomial of r.
inline Polynomial mora_nf(const Polynomial& f, const std::vector<Polynomial>& G,
                          const MonomialOrder& ord, const Limits& lim = Limits{}) {
    detail::BudgetCounter budget(lim.iteration_budget);
    detail::WPoly r = detail::mora_nf_core(detail::to_wpoly(f, ord), G, ord, budget, nullptr);
    return detail::from_wpoly(f.ring(), std::move(r));
}

// As above, also producing the certificate.
inline Polynomial mora_nf(const Polynomial& f, const std::vector<Polynomial>& G,
                          const MonomialOrder& ord, const Limits& lim,
                          MoraCertificate& cert_out) {
    cert_out = MoraCertificate(f.ring(), G.size());
    detail::BudgetCounter budget(lim.iteration_budget);
    detail::WPoly r = detail::mora_nf_core(detail::to_wpoly(f, ord), G, ord, budget, &cert_out);
    return detail::from_wpoly(f.ring(), std::move(r));
}

inline bool verify_certificate(const Polynomial& f, const std::vector<Polynomial>& G,
                               const Polynomial& r, const MoraCertificate& cert,
                               const MonomialOrder& ord) {
    if (cert.unit.is_zero()) return false;
    if (!mono_is_one(leading_term(cert.unit, ord).mono)) return false;
    Polynomial acc = cert.unit * f;
    for (std::size_t i = 0; i < G.size(); ++i) acc = acc - cert.coefficients[i] * G[i];
    return acc == r;
}

inline Polynomial spoly(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
    const Term& tf = leading_term(f, ord);
    const Term& tg = leading_term(g, ord);
    Monomial l = mono_lcm(tf.mono, tg.mono);
    return f.mul_term(mono_div(l, tf.mono), tg.coeff) - g.mul_term(mono_div(l, tg.mono), tf.coeff);
}

namespace detail {

// Comparator for the homogenized ring: one extra slot (last) for the
// homogenizing variable s of weight 1. Graded by weighted total degree
// first, ties broken by the base order on the original variables. For
// homogeneous polynomials the leading monomial's variable part equals the
// base-order leading monomial of the dehomogenization, which is what makes
// the dehomogenized Groebner basis a standard basis (Lazard).
struct HomOrder {
    const MonomialOrder& base;
    std::size_t n;  // number of base variables; monomials have size n+1

    long long graded_degree(const Monomial& m) const {
        long long d = m[n];
        for (std::size_t i = 0; i < n; ++i)
            d += static_cast<long long>(m[i]) * base.weights()[i];
        return d;
    }

    int compare(const Monomial& a, const Monomial& b) const {
        long long g1 = graded_degree(a), g2 = graded_degree(b);
        if (g1 != g2) return g1 > g2 ? 1 : -1;
        if (base.kind() == OrderKind::MixedElimination) {
            long long d1 = 0, d2 = 0;
            for (int i : base.global_block()) {
                d1 += a[i];
                d2 += b[i];
            }
            if (d1 != d2) return d1 > d2 ? 1 : -1;
        }
        long long w1 = 0, w2 = 0;
        for (std::size_t i = 0; i < n; ++i) {
            w1 += static_cast<long long>(a[i]) * base.weights()[i];
            w2 += static_cast<long long>(b[i]) * base.weights()[i];
        }
        if (w1 != w2) return w1 < w2 ? 1 : -1;
        for (std::size_t i = n; i-- > 0;)
            if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
        return 0;
    }

    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
};

// Homogenize by weighted degree: each term gains s^(D - wdeg), D = max wdeg.
inline WPoly homogenize(const Polynomial& p, const HomOrder& H) {
    long long D = 0;
    for (const Term& t : p.terms())
        D = std::max(D, weighted_degree(t.mono, H.base.weights()));
    WPoly w;
    for (const Term& t : p.terms()) {
        Monomial m = t.mono;
        m.push_back(static_cast<int>(D - weighted_degree(t.mono, H.base.weights())));
        w.t.push_back(Term{std::move(m), t.coeff});
    }
    std::sort(w.t.begin(), w.t.end(),
              [&](const Term& a, const Term& b) { return H.greater(a.mono, b.mono); });
    return w;
}

inline Polynomial dehomogenize(const WPoly& w, const RingPtr& ring) {
    std::vector<Term> t;
    t.reserve(w.t.size());
    for (const Term& tm : w.t) {
        Monomial m(tm.mono.begin(), tm.mono.end() - 1);
        t.push_back(Term{std::move(m), tm.coeff});
    }
    return Polynomial(ring, std::move(t), true);
}

// Fraction-free fully reduced normal form for the global homogenized order;
// the first reducer whose lead divides is used, tails included. Terminates
// because each step replaces a monomial by strictly smaller ones under a
// well-order.
inline WPoly buch_nf(WPoly h, const std::vector<WPoly>& R, const HomOrder& H,
                     BudgetCounter& budget) {
    auto before = [&](const Monomial& a, const Monomial& b) { return H.greater(a, b); };
    make_primitive_integral(h);
    std::size_t done = 0;  // h.t[0..done) is irreducible
    while (done < h.t.size()) {
        const Monomial hm = h.t[done].mono;
        const WPoly* red = nullptr;
        for (const auto& g : R)
            if (mono_divides(g.lead().mono, hm)) {
                red = &g;
                break;
            }
        if (!red) {
            ++done;
            continue;
        }
        budget.step();
        Integer a = numerator(red->lead().coeff);
        Integer b = numerator(h.t[done].coeff);
        Integer d = int_gcd(a, b);
        h.t = merge_scaled(h.t, Rational(a / d), Rational(-b / d), mono_div(hm, red->lead().mono),
                           red->t, before);
        strip_integer_content(h);
    }
    return h;
}

// Divide out the largest common power of the homogenizing variable. Sound
// for the dehomogenized result: it stays within the s-saturation, which has
// the same dehomogenization.
inline void strip_s_power(WPoly& p) {
    if (p.empty()) return;
    int m = p.t.front().mono.back();
    for (const Term& t : p.t) m = std::min(m, t.mono.back());
    if (m == 0) return;
    for (Term& t : p.t) t.mono.back() -= m;
}

}  // namespace detail

// Standard basis for a local or mixed order, computed by homogenizing the
// generators, running Buchberger under the graded extension of the order,
// and dehomogenizing (Lazard's method; the graded computation avoids the
// rational and degree blow-ups of a direct weak-normal-form loop). Pairs are
// selected by lowest graded lcm degree; the product and chain criteria
// discard pairs. Deterministic for fixed input.
inline StdBasis std_basis(const std::vector<Polynomial>& gens, const MonomialOrder& ord,
                          const Limits& lim = Limits{}) {
    StdBasis out{{}, ord, {}};

    RingPtr ring = nullptr;
    std::vector<Polynomial> orig;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        ring = g.ring();
        orig.push_back(primitive_part(g, ord));
    }
    if (orig.empty()) return out;

    detail::HomOrder H{ord, ring->size()};
    std::vector<detail::WPoly> G;
    std::vector<Monomial> lms;  // homogenized leads
    for (const auto& g : orig) {
        detail::WPoly w = detail::homogenize(g, H);
        detail::make_primitive_integral(w);
        lms.push_back(w.lead().mono);
        G.push_back(std::move(w));
    }

    struct PairKey {
        Monomial lcm;
        long long gd;
        int i, j;
    };
    auto pair_before = [&](const PairKey& a, const PairKey& b) {
        if (a.gd != b.gd) return a.gd < b.gd;  // lowest graded degree first
        int c = H.compare(a.lcm, b.lcm);
        if (c != 0) return c > 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::set<PairKey, decltype(pair_before)> pairs(pair_before);
    std::set<std::pair<int, int>> done;

    auto add_pairs_for = [&](int t) {
        for (int i = 0; i < t; ++i) {
            if (mono_coprime(lms[i], lms[t])) {
                done.insert({i, t});  // product criterion
                continue;
            }
            Monomial l = mono_lcm(lms[i], lms[t]);
            long long gd = H.graded_degree(l);
            pairs.insert(PairKey{std::move(l), gd, i, t});
        }
    };
    for (int t = 1; t < static_cast<int>(G.size()); ++t) add_pairs_for(t);

    detail::BudgetCounter budget(lim.iteration_budget);

    while (!pairs.empty()) {
        PairKey pk = *pairs.begin();
        pairs.erase(pairs.begin());
        done.insert({pk.i, pk.j});

        // chain criterion
        bool skip = false;
        for (int k = 0; k < static_cast<int>(G.size()) && !skip; ++k) {
            if (k == pk.i || k == pk.j) continue;
            if (!mono_divides(lms[k], pk.lcm)) continue;
            auto key_ik = std::minmax(pk.i, k);
            auto key_jk = std::minmax(pk.j, k);
            if (!done.count({key_ik.first, key_ik.second})) continue;
            if (!done.count({key_jk.first, key_jk.second})) continue;
            if (mono_lcm(lms[pk.i], lms[k]) == pk.lcm) continue;
            if (mono_lcm(lms[pk.j], lms[k]) == pk.lcm) continue;
            skip = true;
        }
        if (skip) continue;

        // homogeneous s-polynomial
        const detail::WPoly& f = G[pk.i];
        const detail::WPoly& g = G[pk.j];
        auto before = [&](const Monomial& a, const Monomial& b) { return H.greater(a, b); };
        detail::WPoly s;
        {
            Monomial mf = mono_div(pk.lcm, f.lead().mono);
            Monomial mg = mono_div(pk.lcm, g.lead().mono);
            std::vector<Term> left = f.t;
            for (auto& t : left) t.mono = mono_mul(t.mono, mf);
            s.t = detail::merge_scaled(left, g.lead().coeff, -f.lead().coeff, mg, g.t, before);
        }
        if (s.empty()) continue;
        detail::WPoly r = detail::buch_nf(std::move(s), G, H, budget);
        if (r.empty()) continue;
        detail::strip_s_power(r);

        lms.push_back(r.lead().mono);
        G.push_back(std::move(r));
        add_pairs_for(static_cast<int>(G.size()) - 1);
    }

    // Dehomogenize, then minimalize: drop elements whose lead under the base
    // order is divisible by another kept lead.
    std::vector<Polynomial> cand;
    std::vector<Monomial> clead;
    for (const auto& w : G) {
        Polynomial p = primitive_part(detail::dehomogenize(w, ring), ord);
        clead.push_back(leading_term(p, ord).mono);
        cand.push_back(std::move(p));
    }
    std::vector<int> idx(cand.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        int da = total_degree(clead[a]), db = total_degree(clead[b]);
        if (da != db) return da < db;
        if (clead[a] != clead[b]) return clead[a] < clead[b];
        return a < b;
    });
    std::vector<int> kept;
    for (int i : idx) {
        bool divisible = false;
        for (int k : kept)
            if (mono_divides(clead[k], clead[i])) {
                divisible = true;
                break;
            }
        if (!divisible) kept.push_back(i);
    }
    std::sort(kept.begin(), kept.end(),
              [&](int a, int b) { return ord.compare(clead[a], clead[b]) > 0; });

    for (int i : kept) {
        out.elements.push_back(cand[i]);
        out.leads.push_back(clead[i]);
    }
    return out;
}

// An ideal of the localized ring: nonzero generators, a monomial order, and a
// lazily computed standard basis shared by copies (single assignment).
class Ideal {
public:
    Ideal(RingPtr ring, std::vector<Polynomial> gens, MonomialOrder order)
        : ring_(std::move(ring)), order_(std::move(order)), cache_(std::make_shared<Cache>()) {
        for (auto& g : gens)
            if (!g.is_zero()) gens_.push_back(std::move(g));
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    const MonomialOrder& order() const { return order_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    const StdBasis& basis(const Limits& lim = Limits{}) const {
        std::call_once(cache_->once, [&] { cache_->basis.emplace(std_basis(gens_, order_, lim)); });
        return *cache_->basis;
    }

private:
    struct Cache {
        std::once_flag once;
        std::optional<StdBasis> basis;
    };
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    MonomialOrder order_;
    std::shared_ptr<Cache> cache_;
};

// f in I, in the localized ring.
inline bool is_member(const Polynomial& f, const Ideal& I, const Limits& lim = Limits{}) {
    if (f.is_zero()) return true;
    if (I.is_zero_ideal()) return false;
    return mora_nf(f, I.basis(lim).elements, I.order(), lim).is_zero();
}

inline bool ideal_equal(const Ideal& I, const Ideal& J, const Limits& lim = Limits{}) {
    if (!(I.order() == J.order()) || I.ring()->vars != J.ring()->vars)
        throw PreconditionViolation("ideal_equal requires the same ring and order");
    for (const auto& g : I.generators())
        if (!is_member(g, J, lim)) return false;
    for (const auto& g : J.generators())
        if (!is_member(g, I, lim)) return false;
    return true;
}

// Number of standard monomials (monomials outside the leading ideal);
// std::nullopt when infinite, i.e. some variable has no pure power in the
// leading ideal.
inline std::optional<long long> vdim_of_basis(const StdBasis& basis) {
    const std::size_t v = basis.order.weights().size();
    if (basis.elements.empty()) return std::nullopt;  // zero ideal
    for (const Monomial& m : basis.leads)
        if (mono_is_one(m)) return 0;

    std::vector<int> bound(v, -1);
    for (const Monomial& m : basis.leads) {
        int support = -1;
        bool pure = true;
        for (std::size_t i = 0; i < v; ++i) {
            if (m[i] == 0) continue;
            if (support >= 0) {
                pure = false;
                break;
            }
            support = static_cast<int>(i);
        }
        if (!pure || support < 0) continue;
        if (bound[support] < 0 || m[support] < bound[support]) bound[support] = m[support];
    }
    long long box = 1;
    for (std::size_t i = 0; i < v; ++i) {
        if (bound[i] < 0) return std::nullopt;
        box *= bound[i];
        if (box > 50'000'000)
            throw KernelError("vdim: standard monomial enumeration too large");
    }

    long long count = 0;
    Monomial m(v, 0);
    for (;;) {
        bool divisible = false;
        for (const Monomial& l : basis.leads)
            if (mono_divides(l, m)) {
                divisible = true;
                break;
            }
        if (!divisible) ++count;
        std::size_t i = 0;
        while (i < v) {
            if (++m[i] < bound[i]) break;
            m[i] = 0;
            ++i;
        }
        if (i == v) break;
    }
    return count;
}

inline std::optional<long long> vdim(const Ideal& I, const Limits& lim = Limits{}) {
    if (I.order().kind() != OrderKind::LocalWeighted)
        throw PreconditionViolation("vdim requires a local weighted order");
    return vdim_of_basis(I.basis(lim));
}

}  // namespace milnor
