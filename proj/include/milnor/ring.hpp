#pragma once

#include <algorithm>
#include <cassert>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "milnor/errors.hpp"

namespace milnor {

// Exponent vector over a fixed variable list; the all-zeros vector is the monomial 1.
using Monomial = std::vector<int>;

struct Ring {
    std::vector<std::string> vars;

    std::size_t size() const { return vars.size(); }

    int var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        return -1;
    }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars) {
    if (vars.empty()) throw PreconditionViolation("a ring needs at least one variable");
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j])
                throw PreconditionViolation("duplicate variable name '" + vars[i] + "'");
    auto r = std::make_shared<Ring>();
    r->vars = std::move(vars);
    return r;
}

// One positive integer weight per variable; index 0 is the axis variable x.
struct Weights {
    std::vector<int> v;

    Weights() = default;
    explicit Weights(std::vector<int> w) : v(std::move(w)) {
        for (int wi : v)
            if (wi < 1) throw PreconditionViolation("weights must be positive integers");
    }

    std::size_t size() const { return v.size(); }
    int operator[](std::size_t i) const { return v[i]; }
    bool operator==(const Weights& o) const { return v == o.v; }
};

inline Monomial mono_one(std::size_t nvars) { return Monomial(nvars, 0); }

inline bool mono_is_one(const Monomial& m) {
    return std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
}

inline int total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

inline long long weighted_degree(const Monomial& m, const Weights& w) {
    assert(m.size() == w.size());
    long long d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<long long>(m[i]) * w[i];
    return d;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {  // a | b
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

// b / a, requires a | b
inline Monomial mono_div(const Monomial& b, const Monomial& a) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = b[i] - a[i];
        assert(r[i] >= 0);
    }
    return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

}  // namespace milnor
