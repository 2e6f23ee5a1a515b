#pragma once

#include <algorithm>
#include <cassert>
#include <utility>
#include <vector>

#include "milnor/order.hpp"
#include "milnor/rational.hpp"
#include "milnor/ring.hpp"

namespace milnor {

struct Term {
    Monomial mono;
    Rational coeff;

    bool operator==(const Term& o) const { return mono == o.mono && coeff == o.coeff; }
};

namespace detail {

// Fixed storage comparison, independent of any user-selected monomial order:
// higher total degree first, ties lexicographically (larger vector first).
inline bool storage_before(const Monomial& a, const Monomial& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
}

// result = a + c * x^m * b, both inputs sorted strictly descending under `before`.
template <class Before>
std::vector<Term> merge_addmul(const std::vector<Term>& a, const Rational& c, const Monomial& m,
                               const std::vector<Term>& b, Before before) {
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
            Rational s = a[i].coeff + c * b[j].coeff;
            if (s != 0) out.push_back(Term{a[i].mono, std::move(s)});
            ++i;
            ++j;
            continue;
        } else
            take_a = before(a[i].mono, mb);
        if (take_a) {
            out.push_back(a[i]);
            ++i;
        } else {
            Rational s = c * b[j].coeff;
            if (s != 0) out.push_back(Term{std::move(mb), std::move(s)});
            ++j;
        }
    }
    return out;
}

}  // namespace detail

// Sparse multivariate polynomial with exact rational coefficients. Terms are
// kept sorted under the fixed storage order with no zero coefficients, so two
// polynomials are equal iff their term vectors are equal.
class Polynomial {
public:
    Polynomial(RingPtr ring, std::vector<Term> terms, bool needs_normalize = true)
        : ring_(std::move(ring)), terms_(std::move(terms)) {
        if (needs_normalize) normalize();
    }

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring), {}, false); }

    static Polynomial constant(RingPtr ring, Rational c) {
        std::vector<Term> t;
        if (c != 0) t.push_back(Term{mono_one(ring->size()), std::move(c)});
        return Polynomial(std::move(ring), std::move(t), false);
    }

    static Polynomial variable(RingPtr ring, std::size_t i) {
        Monomial m = mono_one(ring->size());
        m[i] = 1;
        return monomial(std::move(ring), std::move(m), 1);
    }

    static Polynomial monomial(RingPtr ring, Monomial m, Rational c) {
        std::vector<Term> t;
        if (c != 0) t.push_back(Term{std::move(m), std::move(c)});
        return Polynomial(std::move(ring), std::move(t), false);
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial operator-() const {
        std::vector<Term> t = terms_;
        for (auto& tm : t) tm.coeff = -tm.coeff;
        return Polynomial(ring_, std::move(t), false);
    }

    Polynomial operator+(const Polynomial& o) const {
        check_ring(o);
        return Polynomial(ring_,
                          detail::merge_addmul(terms_, Rational(1), mono_one(ring_->size()),
                                               o.terms_, detail::storage_before),
                          false);
    }

    Polynomial operator-(const Polynomial& o) const {
        check_ring(o);
        return Polynomial(ring_,
                          detail::merge_addmul(terms_, Rational(-1), mono_one(ring_->size()),
                                               o.terms_, detail::storage_before),
                          false);
    }

    Polynomial operator*(const Polynomial& o) const {
        check_ring(o);
        std::vector<Term> acc;
        for (const Term& t : terms_)
            acc = detail::merge_addmul(acc, t.coeff, t.mono, o.terms_, detail::storage_before);
        return Polynomial(ring_, std::move(acc), false);
    }

    Polynomial scaled(const Rational& c) const {
        if (c == 0) return zero(ring_);
        std::vector<Term> t = terms_;
        for (auto& tm : t) tm.coeff *= c;
        return Polynomial(ring_, std::move(t), false);
    }

    Polynomial mul_term(const Monomial& m, const Rational& c) const {
        if (c == 0) return zero(ring_);
        std::vector<Term> t = terms_;
        for (auto& tm : t) {
            tm.mono = mono_mul(tm.mono, m);
            tm.coeff *= c;
        }
        return Polynomial(ring_, std::move(t), false);
    }

    Polynomial derivative(std::size_t var) const {
        std::vector<Term> t;
        t.reserve(terms_.size());
        for (const Term& tm : terms_) {
            if (tm.mono[var] == 0) continue;
            Monomial m = tm.mono;
            Rational c = tm.coeff * m[var];
            m[var] -= 1;
            t.push_back(Term{std::move(m), std::move(c)});
        }
        return Polynomial(ring_, std::move(t), true);
    }

    Rational constant_term() const {
        if (!terms_.empty() && mono_is_one(terms_.back().mono)) return terms_.back().coeff;
        return Rational(0);
    }

private:
    void check_ring(const Polynomial& o) const {
        if (ring_ != o.ring_ && ring_->vars != o.ring_->vars)
            throw PreconditionViolation("polynomials live in different rings");
    }

    void normalize() {
        std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
            return detail::storage_before(a.mono, b.mono);
        });
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().mono == t.mono)
                out.back().coeff += t.coeff;
            else
                out.push_back(std::move(t));
            if (!out.empty() && out.back().coeff == 0) out.pop_back();
        }
        terms_ = std::move(out);
    }

    RingPtr ring_;
    std::vector<Term> terms_;  // sorted descending under storage_before, no zeros
};

// The maximal term under ord. Errors on the zero polynomial.
inline const Term& leading_term(const Polynomial& p, const MonomialOrder& ord) {
    if (p.is_zero()) throw PreconditionViolation("leading term of the zero polynomial");
    const Term* best = &p.terms().front();
    for (const Term& t : p.terms())
        if (ord.greater(t.mono, best->mono)) best = &t;
    return *best;
}

inline long long min_weighted_degree(const Polynomial& p, const Weights& w) {
    assert(!p.is_zero());
    long long d = weighted_degree(p.terms().front().mono, w);
    for (const Term& t : p.terms()) d = std::min(d, weighted_degree(t.mono, w));
    return d;
}

inline long long max_weighted_degree(const Polynomial& p, const Weights& w) {
    assert(!p.is_zero());
    long long d = weighted_degree(p.terms().front().mono, w);
    for (const Term& t : p.terms()) d = std::max(d, weighted_degree(t.mono, w));
    return d;
}

// All monomials share one weighted degree (true for the zero polynomial).
inline bool is_weighted_homogeneous(const Polynomial& p, const Weights& w,
                                    long long* degree_out = nullptr) {
    if (p.is_zero()) return true;
    long long d = weighted_degree(p.terms().front().mono, w);
    for (const Term& t : p.terms())
        if (weighted_degree(t.mono, w) != d) return false;
    if (degree_out) *degree_out = d;
    return true;
}

// Restriction to the first axis: keep monomials supported on variable 0 only.
inline Polynomial restrict_to_axis(const Polynomial& p) {
    std::vector<Term> t;
    for (const Term& tm : p.terms()) {
        bool axis = true;
        for (std::size_t i = 1; i < tm.mono.size(); ++i)
            if (tm.mono[i] > 0) {
                axis = false;
                break;
            }
        if (axis) t.push_back(tm);
    }
    return Polynomial(p.ring(), std::move(t), true);
}

// Membership in the coordinate ideal generated by vars[from..]: every monomial
// must contain one of those variables. Exact for coordinate ideals.
inline bool in_coordinate_ideal(const Polynomial& p, std::size_t from = 1) {
    for (const Term& tm : p.terms()) {
        bool hit = false;
        for (std::size_t i = from; i < tm.mono.size(); ++i)
            if (tm.mono[i] > 0) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

// Membership in the square of that coordinate ideal (a monomial ideal):
// every monomial has total degree >= 2 in vars[from..].
inline bool in_coordinate_ideal_squared(const Polynomial& p, std::size_t from = 1) {
    for (const Term& tm : p.terms()) {
        int d = 0;
        for (std::size_t i = from; i < tm.mono.size(); ++i) d += tm.mono[i];
        if (d < 2) return false;
    }
    return true;
}

// Divide by x^1 (variable 0); requires every monomial to contain x.
inline Polynomial divide_by_axis_variable(const Polynomial& p) {
    std::vector<Term> t = p.terms();
    for (auto& tm : t) {
        if (tm.mono[0] < 1)
            throw PreconditionViolation("polynomial is not divisible by the axis variable");
        tm.mono[0] -= 1;
    }
    return Polynomial(p.ring(), std::move(t), true);
}

// Scale p so its coefficients become coprime integers and the leading
// coefficient under ord is positive. Returns the scaled polynomial.
inline Polynomial primitive_part(const Polynomial& p, const MonomialOrder& ord) {
    if (p.is_zero()) return p;
    Integer den_lcm = 1;
    for (const Term& t : p.terms()) den_lcm = int_lcm(den_lcm, denominator(t.coeff));
    Integer num_gcd = 0;
    for (const Term& t : p.terms())
        num_gcd = int_gcd(num_gcd, int_abs(numerator(t.coeff) * (den_lcm / denominator(t.coeff))));
    Rational scale = make_rational(den_lcm, num_gcd);
    if (leading_term(p, ord).coeff * scale < 0) scale = -scale;
    return p.scaled(scale);
}

}  // namespace milnor
