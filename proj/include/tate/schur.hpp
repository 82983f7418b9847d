#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tate/graded.hpp"
#include "tate/partition.hpp"

namespace tate {

/// One letter of the generator alphabet of an object: a generator occurrence
/// with its degree, weight and parity.
struct AlphabetLetter {
    int a = 0;
    int w = 0;
    bool odd() const { return a % 2 != 0; }
};

/// Ordered generator alphabet: even occurrences first, then odd, each block
/// sorted by (w, a); one letter per multiplicity unit.
inline std::vector<AlphabetLetter> generator_alphabet(const GradedTateObject& x) {
    std::vector<AlphabetLetter> even, odd;
    for (const auto& [k, m] : x.multiplicities()) {
        auto& dst = (k.a % 2 == 0) ? even : odd;
        for (long long i = 0; i < m; ++i) dst.push_back({k.a, k.w});
    }
    auto by_weight = [](const AlphabetLetter& p, const AlphabetLetter& q) {
        return p.w != q.w ? p.w < q.w : p.a < q.a;
    };
    std::sort(even.begin(), even.end(), by_weight);
    std::sort(odd.begin(), odd.end(), by_weight);
    even.insert(even.end(), odd.begin(), odd.end());
    return even;
}

namespace detail {

struct TableauState {
    const Partition* shape;
    const std::vector<AlphabetLetter>* alphabet;
    std::vector<std::vector<int>> filling;  // letter index per cell
    GradedTateObject result;
    int sum_a = 0;
    int sum_w = 0;
};

// Super semistandard fillings: entries weakly increase along rows and down
// columns; equal letters may repeat along a row only if even, down a column
// only if odd.
inline void ssyt_rec(TableauState& s, int row, int col) {
    if (row == s.shape->rows()) {
        s.result.add({s.sum_a, s.sum_w}, 1);
        return;
    }
    if (col == s.shape->part(row)) { ssyt_rec(s, row + 1, 0); return; }
    const int n = static_cast<int>(s.alphabet->size());
    int lo = 0;
    if (col > 0) lo = s.filling[static_cast<std::size_t>(row)][static_cast<std::size_t>(col - 1)];
    int above = -1;
    if (row > 0) above = s.filling[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col)];
    if (above > lo) lo = above;
    for (int t = lo; t < n; ++t) {
        const AlphabetLetter& L = (*s.alphabet)[static_cast<std::size_t>(t)];
        if (col > 0 && t == s.filling[static_cast<std::size_t>(row)][static_cast<std::size_t>(col - 1)] && L.odd())
            continue;  // odd letters strict along rows
        if (row > 0 && t == above && !L.odd())
            continue;  // even letters strict down columns
        s.filling[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = t;
        s.sum_a += L.a;
        s.sum_w += L.w;
        ssyt_rec(s, row, col + 1);
        s.sum_a -= L.a;
        s.sum_w -= L.w;
    }
}

}  // namespace detail

/// S_lambda(X) by direct enumeration of super semistandard tableaux over the
/// generator alphabet of X: one summand 1(sum w)[sum a] per filling.
inline GradedTateObject schur_apply(const Partition& lambda, const GradedTateObject& x) {
    if (lambda.empty()) return GradedTateObject::unit();
    if (x.is_zero()) return GradedTateObject::zero();
    detail::TableauState s;
    s.shape = &lambda;
    auto alphabet = generator_alphabet(x);
    s.alphabet = &alphabet;
    s.filling.assign(static_cast<std::size_t>(lambda.rows()), {});
    for (int i = 0; i < lambda.rows(); ++i)
        s.filling[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(lambda.part(i)), -1);
    detail::ssyt_rec(s, 0, 0);
    return s.result;
}

namespace detail {

// All shapes obtained from mu by adding a horizontal strip of any size,
// staying inside bound.
inline void horizontal_strips(const Partition& mu, const Partition& bound,
                              std::vector<std::pair<Partition, int>>& out) {
    // row i may grow to at most min(bound_i, mu_{i-1}); choose new part values
    std::vector<int> parts;
    const int rows = bound.rows();
    std::vector<int> nu(static_cast<std::size_t>(rows), 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == rows) {
            std::vector<int> v;
            for (int r = 0; r < rows; ++r)
                if (nu[static_cast<std::size_t>(r)] > 0) v.push_back(nu[static_cast<std::size_t>(r)]);
            int added = 0;
            for (int r = 0; r < rows; ++r) added += nu[static_cast<std::size_t>(r)] - mu.part(r);
            out.emplace_back(Partition(v), added);
            return;
        }
        int hi = std::min(bound.part(i), i == 0 ? bound.part(0) : mu.part(i - 1));
        for (int v = mu.part(i); v <= hi; ++v) {
            if (i > 0 && v > nu[static_cast<std::size_t>(i - 1)]) continue;
            nu[static_cast<std::size_t>(i)] = v;
            self(self, i + 1);
        }
        nu[static_cast<std::size_t>(i)] = 0;
    };
    rec(rec, 0);
}

}  // namespace detail

/// Second evaluator: one letter at a time, adding horizontal strips for even
/// letters and vertical strips for odd ones (Pieri steps). Kept independent
/// of the direct tableau enumeration; equality of the two is a property test.
inline GradedTateObject schur_apply_pieri(const Partition& lambda, const GradedTateObject& x,
                                          const std::vector<AlphabetLetter>& alphabet) {
    if (lambda.empty()) return GradedTateObject::unit();
    if (x.is_zero()) return GradedTateObject::zero();
    const Partition lambda_t = transpose(lambda);
    // state: shape reached -> multiplicity map of accumulated (a, w)
    std::map<Partition, std::map<GenKey, long long>> state;
    state[Partition{}][{0, 0}] = 1;
    for (const auto& letter : alphabet) {
        std::map<Partition, std::map<GenKey, long long>> next;
        for (const auto& [mu, weights] : state) {
            std::vector<std::pair<Partition, int>> grown;
            if (!letter.odd()) {
                detail::horizontal_strips(mu, lambda, grown);
            } else {
                // vertical strip in lambda == horizontal strip in the transpose
                std::vector<std::pair<Partition, int>> tg;
                detail::horizontal_strips(transpose(mu), lambda_t, tg);
                for (auto& [nu_t, added] : tg) grown.emplace_back(transpose(nu_t), added);
            }
            for (const auto& [nu, added] : grown) {
                auto& dst = next[nu];
                for (const auto& [key, m] : weights) {
                    GenKey nk{key.a + added * letter.a, key.w + added * letter.w};
                    dst[nk] += m;
                }
            }
        }
        state = std::move(next);
    }
    GradedTateObject r;
    auto it = state.find(lambda);
    if (it != state.end())
        for (const auto& [k, m] : it->second) r.add(k, m);
    return r;
}

inline GradedTateObject schur_apply_pieri(const Partition& lambda, const GradedTateObject& x) {
    return schur_apply_pieri(lambda, x, generator_alphabet(x));
}

/// Vanishing criterion: S_lambda(X) = 0 iff [lambda] contains the
/// (d^+(X)+1) x (d^-(X)+1) rectangle. Computed from the criterion,
/// never from evaluation.
inline bool schur_vanishes(const Partition& lambda, const GradedTateObject& x) {
    if (lambda.empty())
        throw std::invalid_argument("schur_vanishes: S of the empty partition is the unit, never zero");
    return contains_rectangle(lambda, static_cast<int>(d_plus(x)) + 1,
                              static_cast<int>(d_minus(x)) + 1);
}

inline GradedTateObject alt_power(const GradedTateObject& x, int n) {
    if (n < 0) throw std::invalid_argument("alt_power: n must be >= 0");
    return schur_apply(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), x);
}

inline GradedTateObject sym_power(const GradedTateObject& x, int n) {
    if (n < 0) throw std::invalid_argument("sym_power: n must be >= 0");
    if (n == 0) return GradedTateObject::unit();
    return schur_apply(Partition{n}, x);
}

/// Finite-dimensionality classification of the split object X.
struct Classification {
    long long d_plus = 0;
    long long d_minus = 0;
    bool evenly_finite = false;            // Alt^n(X) = 0 for some n
    bool oddly_finite = false;             // Sym^n(X) = 0 for some n
    std::optional<long long> alt_vanishing_index;  // least n with Alt^n = 0
    std::optional<long long> sym_vanishing_index;  // least n with Sym^n = 0
    long long kimura_dimension = 0;        // d^+ + d^-
    long long square_vanishing_index = 0;  // least n with S_{n x n}(X) = 0
};

inline Classification classify(const GradedTateObject& x) {
    Classification c;
    c.d_plus = d_plus(x);
    c.d_minus = d_minus(x);
    c.evenly_finite = (c.d_minus == 0);
    c.oddly_finite = (c.d_plus == 0);
    if (c.evenly_finite) c.alt_vanishing_index = c.d_plus + 1;
    if (c.oddly_finite) c.sym_vanishing_index = c.d_minus + 1;
    c.kimura_dimension = c.d_plus + c.d_minus;
    c.square_vanishing_index = std::max(c.d_plus, c.d_minus) + 1;
    return c;
}

}  // namespace tate
