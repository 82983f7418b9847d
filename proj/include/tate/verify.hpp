#pragma once

#include <random>
#include <string>
#include <vector>

#include "tate/graded.hpp"
#include "tate/lambda.hpp"
#include "tate/oracle.hpp"
#include "tate/partition.hpp"
#include "tate/schur.hpp"

namespace tate {

struct VerifyReport {
    long long cases = 0;
    long long failures = 0;
    std::vector<std::string> messages;  // one per failure, sorted by case key

    void record(bool ok, const std::string& key) {
        ++cases;
        if (!ok) {
            ++failures;
            messages.push_back(key);
        }
    }
};

/// All objects built from generators on the given (degree, weight) grid with
/// total dimension <= max_dim, enumerated as multisets.
inline std::vector<GradedTateObject> enumerate_objects(const std::vector<int>& degrees,
                                                       const std::vector<int>& weights,
                                                       int max_dim) {
    std::vector<GenKey> kinds;
    for (int a : degrees)
        for (int w : weights) kinds.push_back({a, w});
    std::vector<GradedTateObject> out;
    GradedTateObject cur;
    auto rec = [&](auto&& self, std::size_t from, int remaining) -> void {
        out.push_back(cur);
        if (remaining == 0) return;
        for (std::size_t i = from; i < kinds.size(); ++i) {
            cur.add(kinds[i], 1);
            self(self, i, remaining - 1);
            cur.add(kinds[i], -1);
        }
    };
    rec(rec, 0, max_dim);
    return out;
}

/// Criterion == evaluator == oracle, pointwise over the budgeted grid;
/// additionally evaluator and oracle agree as multiplicity maps.
inline VerifyReport verify_triple_agreement(const std::vector<int>& degrees,
                                            const std::vector<int>& weights,
                                            int max_dim, int max_partition_size,
                                            const OracleBudget& budget = {}) {
    VerifyReport report;
    std::vector<Partition> shapes;
    for (int n = 1; n <= max_partition_size; ++n)
        for (const auto& p : partitions_of(n)) shapes.push_back(p);
    for (const auto& x : enumerate_objects(degrees, weights, max_dim)) {
        for (const auto& lambda : shapes) {
            const bool criterion = schur_vanishes(lambda, x);
            const GradedTateObject eval = schur_apply(lambda, x);
            const GradedTateObject oracle = graded_schur_oracle(lambda, x, budget);
            const bool ok = (criterion == eval.is_zero()) && (eval == oracle);
            report.record(ok, "triple lambda=" + lambda.to_string() + " X=" + x.to_string());
        }
    }
    return report;
}

inline Laurent random_laurent(std::mt19937& rng, int min_exp = -3, int max_exp = 3,
                              int min_coeff = -3, int max_coeff = 3) {
    std::uniform_int_distribution<int> cdist(min_coeff, max_coeff);
    Laurent x;
    for (int e = min_exp; e <= max_exp; ++e) x.add_term(e, cdist(rng));
    return x;
}

inline GradedTateObject random_object(std::mt19937& rng, int max_dim = 4,
                                      int max_abs_degree = 3, int max_abs_weight = 3) {
    std::uniform_int_distribution<int> ddist(0, max_dim);
    std::uniform_int_distribution<int> adist(-max_abs_degree, max_abs_degree);
    std::uniform_int_distribution<int> wdist(-max_abs_weight, max_abs_weight);
    GradedTateObject x;
    const int dim = ddist(rng);
    for (int i = 0; i < dim; ++i) x.add({adist(rng), wdist(rng)}, 1);
    return x;
}

/// Randomized lambda-ring property suite: group homomorphism, product
/// formula, sigma/lambda inversion, universal polynomials for n,m <= 2.
inline VerifyReport verify_lambda_ring_suite(int count, int order, unsigned seed) {
    VerifyReport report;
    std::mt19937 rng(seed);
    for (int i = 0; i < count; ++i) {
        Laurent x = random_laurent(rng), y = random_laurent(rng);
        const std::string key = "case " + std::to_string(i);
        report.record(lambda_t(x + y, order) == lambda_t(x, order) * lambda_t(y, order),
                      key + " homomorphism");
        report.record(product_formula_check(x, order), key + " product-formula");
        TruncatedSeries inv_check = zeta(x, order) * lambda_t(x, order).at_minus_t();
        report.record(inv_check == TruncatedSeries::one(order), key + " sigma-lambda-inverse");
        bool univ = true;
        for (int n = 1; n <= 2 && univ; ++n)
            for (int m = 1; m <= 2 && univ; ++m)
                univ = verify_lambda_ring(x, y, n, m);
        report.record(univ, key + " universal-polynomials");
    }
    return report;
}

}  // namespace tate
