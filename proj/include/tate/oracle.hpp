#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "tate/graded.hpp"
#include "tate/laurent.hpp"
#include "tate/partition.hpp"
#include "tate/schur.hpp"

namespace tate {

/// Thrown when an oracle computation exceeds its configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Size limits for the brute-force symmetrizer computation.
struct OracleBudget {
    int max_dim = 4;   // dimension of the super vector space
    int max_n = 5;     // |lambda|, the tensor power
};

/// Ordered basis of a super vector space, one vector per generator occurrence
/// of a GradedTateObject; parity is the degree mod 2.
struct SuperWeightedSpace {
    struct Vector {
        int a = 0;
        int w = 0;
        bool odd() const { return a % 2 != 0; }
    };
    std::vector<Vector> basis;

    static SuperWeightedSpace from_object(const GradedTateObject& x) {
        SuperWeightedSpace v;
        for (const auto& letter : generator_alphabet(x)) v.basis.push_back({letter.a, letter.w});
        return v;
    }

    /// Convenience: n_even even vectors then n_odd odd ones, all of weight 0.
    static SuperWeightedSpace plain(int n_even, int n_odd) {
        SuperWeightedSpace v;
        for (int i = 0; i < n_even; ++i) v.basis.push_back({0, 0});
        for (int i = 0; i < n_odd; ++i) v.basis.push_back({1, 0});
        return v;
    }

    int dim() const { return static_cast<int>(basis.size()); }
};

/// Applies sigma to the tensor positions of a basis word, accumulating the
/// Koszul sign: -1 for every pair of odd vectors whose order is inverted.
/// result[sigma(i)] = word[i].
inline std::pair<std::vector<int>, int> signed_permutation_action(
    const std::vector<int>& sigma, const std::vector<int>& word,
    const SuperWeightedSpace& space) {
    const std::size_t n = word.size();
    if (sigma.size() != n)
        throw std::invalid_argument("signed_permutation_action: length mismatch");
    std::vector<int> out(n);
    for (std::size_t i = 0; i < n; ++i) out[static_cast<std::size_t>(sigma[i])] = word[i];
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (sigma[i] > sigma[j] &&
                space.basis[static_cast<std::size_t>(word[i])].odd() &&
                space.basis[static_cast<std::size_t>(word[j])].odd())
                sign = -sign;
    return {std::move(out), sign};
}

namespace detail {

inline int permutation_sign(const std::vector<int>& p) {
    int sign = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) sign = -sign;
    return sign;
}

// Enumerates the group of permutations of 0..n-1 preserving the given cell
// groups (rows or columns of the canonical tableau).
inline std::vector<std::vector<int>> group_permutations(
    int n, const std::vector<std::vector<int>>& groups) {
    std::vector<std::vector<int>> result{std::vector<int>(static_cast<std::size_t>(n))};
    std::iota(result[0].begin(), result[0].end(), 0);
    for (const auto& cells : groups) {
        std::vector<int> perm(cells.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<std::vector<int>> grown;
        do {
            for (const auto& base : result) {
                std::vector<int> g = base;
                for (std::size_t i = 0; i < cells.size(); ++i)
                    g[static_cast<std::size_t>(cells[i])] =
                        base[static_cast<std::size_t>(cells[static_cast<std::size_t>(perm[i])])];
                grown.push_back(std::move(g));
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        result = std::move(grown);
    }
    return result;
}

/// Exact rank over Q of an integer matrix, by fraction-free (Bareiss)
/// elimination: the division by the previous pivot is always exact and keeps
/// entry growth polynomial.
inline int integer_matrix_rank(std::vector<std::vector<Int>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    std::size_t pr = 0;
    Int prev_pivot = 1;
    for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
        std::size_t pivot = pr;
        while (pivot < rows && m[pivot][pc] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pr], m[pivot]);
        const Int a = m[pr][pc];
        for (std::size_t r = pr + 1; r < rows; ++r) {
            const Int b = m[r][pc];
            for (std::size_t c = pc; c < cols; ++c)
                m[r][c] = (m[r][c] * a - m[pr][c] * b) / prev_pivot;
        }
        prev_pivot = a;
        ++pr;
        ++rank;
    }
    return rank;
}

struct SymmetrizerTerm {
    std::vector<int> perm;
    int sign;  // sign of the column permutation factor
};

// c_lambda = (sum over column group, signed) * (sum over row group), for the
// canonical tableau filled row by row with 0..n-1.
inline std::vector<SymmetrizerTerm> young_symmetrizer(const Partition& lambda) {
    const int n = lambda.size();
    std::vector<std::vector<int>> row_cells, col_cells;
    {
        int next = 0;
        std::vector<std::vector<int>> tableau;
        for (int i = 0; i < lambda.rows(); ++i) {
            std::vector<int> row;
            for (int j = 0; j < lambda.part(i); ++j) row.push_back(next++);
            tableau.push_back(row);
            if (row.size() > 1) row_cells.push_back(row);
        }
        const Partition t = transpose(lambda);
        for (int j = 0; j < t.rows(); ++j) {
            std::vector<int> col;
            for (int i = 0; i < t.part(j); ++i)
                col.push_back(tableau[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
            if (col.size() > 1) col_cells.push_back(col);
        }
    }
    auto rows = group_permutations(n, row_cells);
    auto cols = group_permutations(n, col_cells);
    std::vector<SymmetrizerTerm> terms;
    terms.reserve(rows.size() * cols.size());
    for (const auto& q : cols) {
        const int sgn = permutation_sign(q);
        for (const auto& p : rows) {
            // composite q after p: (q*p)(i) = q(p(i))
            std::vector<int> qp(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                qp[static_cast<std::size_t>(i)] =
                    q[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])];
            terms.push_back({std::move(qp), sgn});
        }
    }
    return terms;
}

}  // namespace detail

/// Exact rank of the Young symmetrizer c_lambda acting on V^{tensor n} with
/// Koszul signs; equals dim S_lambda(V).
inline long long young_symmetrizer_rank(const Partition& lambda, const SuperWeightedSpace& v,
                                        const OracleBudget& budget = {}) {
    const int n = lambda.size();
    if (n < 1) throw std::invalid_argument("young_symmetrizer_rank: |lambda| >= 1 required");
    if (v.dim() > budget.max_dim || n > budget.max_n)
        throw BudgetExceeded("young_symmetrizer_rank: dim " + std::to_string(v.dim()) +
                             ", n " + std::to_string(n) + " exceeds budget");
    if (v.dim() == 0) return 0;
    auto terms = detail::young_symmetrizer(lambda);
    // enumerate all basis words of V^{tensor n}
    std::vector<std::vector<int>> words;
    std::vector<int> word(static_cast<std::size_t>(n), 0);
    while (true) {
        words.push_back(word);
        int i = n - 1;
        while (i >= 0 && word[static_cast<std::size_t>(i)] == v.dim() - 1) {
            word[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++word[static_cast<std::size_t>(i)];
    }
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = i;
    std::vector<std::vector<Int>> matrix(words.size(), std::vector<Int>(words.size(), 0));
    for (std::size_t i = 0; i < words.size(); ++i)
        for (const auto& term : terms) {
            auto [img, koszul] = signed_permutation_action(term.perm, words[i], v);
            matrix[i][index[img]] += term.sign * koszul;
        }
    return detail::integer_matrix_rank(std::move(matrix));
}

/// Blockwise refinement: V^{tensor n} splits by (sum of degrees, sum of
/// weights), both preserved by the signed action; the rank on each block is
/// the multiplicity of 1(sum w)[sum a] in S_lambda(X).
inline GradedTateObject graded_schur_oracle(const Partition& lambda, const GradedTateObject& x,
                                            const OracleBudget& budget = {}) {
    if (lambda.empty()) return GradedTateObject::unit();
    if (x.is_zero()) return GradedTateObject::zero();
    const SuperWeightedSpace v = SuperWeightedSpace::from_object(x);
    const int n = lambda.size();
    if (v.dim() > budget.max_dim || n > budget.max_n)
        throw BudgetExceeded("graded_schur_oracle: dim " + std::to_string(v.dim()) +
                             ", n " + std::to_string(n) + " exceeds budget");
    auto terms = detail::young_symmetrizer(lambda);
    // group words by (sum a, sum w)
    std::map<GenKey, std::vector<std::vector<int>>> blocks;
    std::vector<int> word(static_cast<std::size_t>(n), 0);
    while (true) {
        int sa = 0, sw = 0;
        for (int i : word) {
            sa += v.basis[static_cast<std::size_t>(i)].a;
            sw += v.basis[static_cast<std::size_t>(i)].w;
        }
        blocks[{sa, sw}].push_back(word);
        int i = n - 1;
        while (i >= 0 && word[static_cast<std::size_t>(i)] == v.dim() - 1) {
            word[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++word[static_cast<std::size_t>(i)];
    }
    GradedTateObject result;
    for (const auto& [key, bwords] : blocks) {
        std::map<std::vector<int>, std::size_t> index;
        for (std::size_t i = 0; i < bwords.size(); ++i) index[bwords[i]] = i;
        std::vector<std::vector<Int>> matrix(bwords.size(), std::vector<Int>(bwords.size(), 0));
        for (std::size_t i = 0; i < bwords.size(); ++i)
            for (const auto& term : terms) {
                auto [img, koszul] = signed_permutation_action(term.perm, bwords[i], v);
                matrix[i][index.at(img)] += term.sign * koszul;
            }
        long long rank = detail::integer_matrix_rank(std::move(matrix));
        if (rank) result.add(key, rank);
    }
    return result;
}

}  // namespace tate
