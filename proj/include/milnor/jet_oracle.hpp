#pragma once

#include <map>
#include <vector>

#include "milnor/ideal_ops.hpp"

namespace milnor {

// Brute-force verifier on truncated jet spaces. Dimensions and memberships
// are decided by exact integer row reduction over the monomials of degree
// < N; no standard-basis code is involved on this path.
class JetSpace {
public:
    JetSpace(const Ideal& I, int N) : N_(N), ring_(I.ring()) {
        if (N < 1) throw PreconditionViolation("jet space: N must be positive");
        index_monomials();
        for (const auto& g : I.generators()) {
            for (int d = 0; d < N_; ++d) {
                for (const auto& mu : monomials_of_total_degree(ring_->size(), d)) {
                    std::vector<Integer> row = truncate_to_row(g, mu);
                    insert_row(std::move(row));
                }
            }
        }
    }

    int truncation() const { return N_; }
    long long columns() const { return static_cast<long long>(cols_.size()); }
    long long rank() const { return static_cast<long long>(pivots_.size()); }

    // dim of O/(I + m^N)
    long long dim() const { return columns() - rank(); }

    // f mod m^N in the row space, i.e. f in I + m^N
    bool contains(const Polynomial& f) const {
        std::vector<Integer> row = truncate_to_row(f, mono_one(ring_->size()));
        return reduce(row);
    }

private:
    void index_monomials() {
        for (int d = 0; d < N_; ++d)
            for (const auto& m : monomials_of_total_degree(ring_->size(), d)) {
                col_of_[m] = static_cast<int>(cols_.size());
                cols_.push_back(m);
            }
    }

    std::vector<Integer> truncate_to_row(const Polynomial& p, const Monomial& mu) const {
        std::vector<Rational> acc(cols_.size(), Rational(0));
        bool any = false;
        for (const Term& t : p.terms()) {
            Monomial m = mono_mul(mu, t.mono);
            if (total_degree(m) >= N_) continue;
            acc[col_of_.at(m)] += t.coeff;
            any = true;
        }
        std::vector<Integer> row(cols_.size(), Integer(0));
        if (!any) return row;
        Integer den_lcm = 1;
        for (const auto& q : acc)
            if (q != 0) den_lcm = int_lcm(den_lcm, denominator(q));
        for (std::size_t i = 0; i < acc.size(); ++i)
            if (acc[i] != 0) row[i] = numerator(acc[i]) * (den_lcm / denominator(acc[i]));
        return row;
    }

    static void strip_content(std::vector<Integer>& row) {
        Integer g = 0;
        for (const auto& x : row) {
            if (x != 0) g = int_gcd(g, int_abs(x));
            if (g == 1) return;
        }
        if (g <= 1) return;
        for (auto& x : row) x /= g;
    }

    // Fraction-free forward elimination against the stored echelon rows.
    // Returns true if the row vanished.
    bool reduce(std::vector<Integer>& row) const {
        for (const auto& [lead, prow] : pivots_) {
            if (row[lead] == 0) continue;
            Integer a = prow[lead];
            Integer b = row[lead];
            Integer g = int_gcd(int_abs(a), int_abs(b));
            Integer ca = a / g, cb = b / g;
            for (std::size_t i = 0; i < row.size(); ++i)
                row[i] = row[i] * ca - prow[i] * cb;
            strip_content(row);
        }
        for (const auto& x : row)
            if (x != 0) return false;
        return true;
    }

    void insert_row(std::vector<Integer> row) {
        if (reduce(row)) return;
        std::size_t lead = 0;
        while (row[lead] == 0) ++lead;
        strip_content(row);
        pivots_.emplace(lead, std::move(row));
    }

    int N_;
    RingPtr ring_;
    std::vector<Monomial> cols_;
    std::map<Monomial, int> col_of_;
    std::map<std::size_t, std::vector<Integer>> pivots_;  // lead column -> row
};

inline long long jet_dim(const Ideal& I, int N) { return JetSpace(I, N).dim(); }

inline bool jet_member(const Polynomial& f, const Ideal& I, int N) {
    return JetSpace(I, N).contains(f);
}

}  // namespace milnor
