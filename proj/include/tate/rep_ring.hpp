#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "tate/laurent.hpp"
#include "tate/partition.hpp"

namespace tate {

// ---------------------------------------------------------------------------
// Murnaghan-Nakayama characters (test oracle for LR coefficients, and the
// character table used by the orthogonality checks).
// ---------------------------------------------------------------------------

namespace detail {

// Border-strip removal in beta-number form: beta is a strictly decreasing
// set of distinct non-negative integers b_i = lambda_i + (m-1-i). Removing a
// strip of length l replaces some b with b-l (which must be free); the sign
// is (-1)^(number of beta elements strictly between b-l and b).
inline long long mn_rec(std::vector<int>& beta, const std::vector<int>& rho,
                        std::size_t k) {
    if (k == rho.size()) return 1;
    const int len = rho[k];
    long long total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int b = beta[i];
        if (b < len) continue;
        const int target = b - len;
        int crossed = 0;
        bool occupied = false;
        for (int x : beta) {
            if (x == target) { occupied = true; break; }
            if (x > target && x < b) ++crossed;
        }
        if (occupied) continue;
        beta[i] = target;
        const long long sign = (crossed % 2 == 0) ? 1 : -1;
        total += sign * mn_rec(beta, rho, k + 1);
        beta[i] = b;
    }
    return total;
}

}  // namespace detail

/// chi^lambda evaluated on the conjugacy class of cycle type rho,
/// via the Murnaghan-Nakayama border-strip recursion.
inline long long mn_character(const Partition& lambda, const Partition& rho) {
    if (lambda.size() != rho.size())
        throw std::invalid_argument("mn_character: |lambda| != |rho|");
    if (lambda.empty()) return 1;
    std::vector<int> beta;
    const int m = lambda.rows();
    for (int i = 0; i < m; ++i) beta.push_back(lambda.part(i) + (m - 1 - i));
    return detail::mn_rec(beta, rho.parts(), 0);
}

/// |conjugacy class of cycle type rho| = n! / z_rho, z_rho = prod k^m_k m_k!.
inline long long conjugacy_class_size(const Partition& rho) {
    long long nfact = 1;
    for (int k = 2; k <= rho.size(); ++k) nfact *= k;
    long long z = 1;
    std::map<int, int> mult;
    for (int p : rho.parts()) ++mult[p];
    for (auto [k, m] : mult) {
        for (int i = 0; i < m; ++i) z *= k;
        for (int i = 2; i <= m; ++i) z *= i;
    }
    return nfact / z;
}

// ---------------------------------------------------------------------------
// Littlewood-Richardson coefficients by LR skew tableau enumeration.
// ---------------------------------------------------------------------------

namespace detail {

struct LrState {
    const Partition* lambda;
    const Partition* mu;
    std::vector<int> content_left;         // remaining count of each letter of eta
    std::vector<std::vector<int>> filling; // filling[i][j] for mu_i <= j < lambda_i, letter 1-based
    std::vector<int> word_count;           // occurrences of each letter so far in reading order
    long long count = 0;
};

// Cells are visited in reverse reading order (rows top to bottom, right to
// left within each row), so the lattice condition can be enforced online.
inline void lr_rec(LrState& s, int row, int col) {
    const int rows = s.lambda->rows();
    if (row == rows) { ++s.count; return; }
    if (col < s.mu->part(row)) { lr_rec(s, row + 1, s.lambda->part(row + 1) - 1); return; }
    if (col >= s.lambda->part(row)) { lr_rec(s, row + 1, s.lambda->part(row + 1) - 1); return; }
    const int nletters = static_cast<int>(s.content_left.size());
    for (int letter = 1; letter <= nletters; ++letter) {
        if (s.content_left[static_cast<std::size_t>(letter - 1)] == 0) continue;
        // semistandard: weakly increasing along rows (right neighbor already
        // placed), strictly increasing down columns (cell above already placed)
        if (col + 1 < s.lambda->part(row)) {
            int right = s.filling[static_cast<std::size_t>(row)][static_cast<std::size_t>(col + 1)];
            if (letter > right) continue;
        }
        if (row > 0 && col < s.lambda->part(row - 1) && col >= s.mu->part(row - 1)) {
            int above = s.filling[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col)];
            if (letter <= above) continue;
        }
        // lattice: after placing, count(letter) <= count(letter-1)
        if (letter > 1 &&
            s.word_count[static_cast<std::size_t>(letter - 1)] + 1 >
                s.word_count[static_cast<std::size_t>(letter - 2)])
            continue;
        s.filling[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = letter;
        --s.content_left[static_cast<std::size_t>(letter - 1)];
        ++s.word_count[static_cast<std::size_t>(letter - 1)];
        if (col > s.mu->part(row)) lr_rec(s, row, col - 1);
        else lr_rec(s, row + 1, s.lambda->part(row + 1) - 1);
        ++s.content_left[static_cast<std::size_t>(letter - 1)];
        --s.word_count[static_cast<std::size_t>(letter - 1)];
    }
}

}  // namespace detail

/// The Littlewood-Richardson coefficient [lambda : mu, eta]: the number of LR
/// skew tableaux of shape lambda/mu and content eta.
inline long long lr_coefficient(const Partition& lambda, const Partition& mu,
                                const Partition& eta) {
    if (mu.size() + eta.size() != lambda.size()) return 0;
    if (!diagram_contains(lambda, mu)) return 0;
    if (eta.empty()) return 1;  // lambda == mu here by the size check
    detail::LrState s;
    s.lambda = &lambda;
    s.mu = &mu;
    s.content_left = eta.parts();
    s.word_count.assign(static_cast<std::size_t>(eta.rows()), 0);
    s.filling.assign(static_cast<std::size_t>(lambda.rows()), {});
    for (int i = 0; i < lambda.rows(); ++i)
        s.filling[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(lambda.part(i)), 0);
    detail::lr_rec(s, 0, lambda.part(0) - 1);
    return s.count;
}

// ---------------------------------------------------------------------------
// The representation ring R = coprod R_n with the induction product.
// ---------------------------------------------------------------------------

/// Finitely supported integer combination of classes [V_lambda].
class RepRingElement {
public:
    RepRingElement() = default;

    static RepRingElement basis(const Partition& lambda, Int coeff = 1) {
        RepRingElement r;
        r.add(lambda, std::move(coeff));
        return r;
    }
    static RepRingElement one() { return basis(Partition{}); }

    const std::map<Partition, Int>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Int coeff(const Partition& lambda) const {
        auto it = coeffs_.find(lambda);
        return it == coeffs_.end() ? Int(0) : it->second;
    }

    void add(const Partition& lambda, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = coeffs_.try_emplace(lambda, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    RepRingElement& operator+=(const RepRingElement& o) {
        for (const auto& [p, c] : o.coeffs_) add(p, c);
        return *this;
    }
    friend RepRingElement operator+(RepRingElement a, const RepRingElement& b) { return a += b; }

    bool operator==(const RepRingElement& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const RepRingElement& o) const { return !(*this == o); }

private:
    std::map<Partition, Int> coeffs_;
};

/// Bilinear extension of [V_mu]*[V_eta] = sum_lambda [lambda:mu,eta][V_lambda].
inline RepRingElement induction_product(const RepRingElement& a, const RepRingElement& b) {
    RepRingElement out;
    for (const auto& [mu, ca] : a.coeffs()) {
        for (const auto& [eta, cb] : b.coeffs()) {
            for (const auto& lambda : partitions_of(mu.size() + eta.size())) {
                long long c = lr_coefficient(lambda, mu, eta);
                if (c) out.add(lambda, ca * cb * c);
            }
        }
    }
    return out;
}

}  // namespace tate
