#pragma once

#include <vector>

#include "milnor/poly.hpp"

namespace milnor {

// Smallest positive primitive integer weight vector making every h_i weighted
// homogeneous, when the solution cone is one dimensional. Each h_i with
// monomials m_0, m_1, ... contributes the linear constraints
// (exp(m_0) - exp(m_j)) . w = 0.
inline Weights infer_weights(const std::vector<Polynomial>& hs) {
    if (hs.empty()) throw PreconditionViolation("infer_weights: no equations given");
    for (const auto& h : hs)
        if (h.is_zero()) throw PreconditionViolation("infer_weights: zero equation");
    const std::size_t v = hs.front().ring()->size();

    std::vector<std::vector<Rational>> rows;
    for (const auto& h : hs) {
        const Monomial& anchor = h.terms().front().mono;
        for (std::size_t t = 1; t < h.terms().size(); ++t) {
            std::vector<Rational> row(v);
            for (std::size_t i = 0; i < v; ++i)
                row[i] = Rational(anchor[i] - h.terms()[t].mono[i]);
            rows.push_back(std::move(row));
        }
    }

    // Row-reduce; record pivot columns.
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < v && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        Rational inv = rows[r][c];
        for (std::size_t i = c; i < v; ++i) rows[r][i] /= inv;
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (k == r || rows[k][c] == 0) continue;
            Rational f = rows[k][c];
            for (std::size_t i = c; i < v; ++i) rows[k][i] -= f * rows[r][i];
        }
        pivot_col.push_back(static_cast<int>(c));
        ++r;
    }

    std::size_t kernel_dim = v - r;
    if (kernel_dim == 0)
        throw NoWeights("the homogeneity constraints admit only the zero weight vector");
    if (kernel_dim >= 2)
        throw AmbiguousWeights("the weight cone has dimension " + std::to_string(kernel_dim) +
                               "; supply weights explicitly");

    // One free column: set it to 1 and back-substitute the pivots.
    std::vector<bool> is_pivot(v, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::size_t free_col = 0;
    while (free_col < v && is_pivot[free_col]) ++free_col;

    std::vector<Rational> sol(v, Rational(0));
    sol[free_col] = 1;
    for (std::size_t k = 0; k < pivot_col.size(); ++k)
        sol[pivot_col[k]] = -rows[k][free_col];

    Integer den_lcm = 1;
    for (const auto& q : sol) den_lcm = int_lcm(den_lcm, denominator(q));
    std::vector<Integer> w(v);
    Integer g = 0;
    for (std::size_t i = 0; i < v; ++i) {
        w[i] = numerator(sol[i]) * (den_lcm / denominator(sol[i]));
        g = int_gcd(g, int_abs(w[i]));
    }
    for (auto& wi : w) wi /= g;
    bool all_pos = true, all_neg = true;
    for (const auto& wi : w) {
        if (wi <= 0) all_pos = false;
        if (wi >= 0) all_neg = false;
    }
    if (all_neg)
        for (auto& wi : w) wi = -wi;
    else if (!all_pos)
        throw NoWeights("the weight cone contains no positive vector");

    std::vector<int> out(v);
    for (std::size_t i = 0; i < v; ++i) out[i] = static_cast<int>(w[i]);
    return Weights(out);
}

}  // namespace milnor
