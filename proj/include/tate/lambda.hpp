#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "tate/graded.hpp"
#include "tate/laurent.hpp"
#include "tate/partition.hpp"
#include "tate/rep_ring.hpp"
#include "tate/schur.hpp"
#include "tate/series.hpp"

namespace tate {

/// lambda_t(x): exp of the lambda-ring structure on Z[tau,tau^-1]. Extended
/// multiplicatively from lambda_t(tau^q) = 1 + tau^q t, with negative
/// multiples inverted as truncated series.
inline TruncatedSeries lambda_t(const Laurent& x, int order) {
    TruncatedSeries result = TruncatedSeries::one(order);
    for (const auto& [q, c] : x.coeffs()) {
        TruncatedSeries base = TruncatedSeries::one(order);
        if (order >= 1) base.coeff(1) = Laurent::monomial(q);
        Int count = c < 0 ? Int(-c) : c;
        if (c < 0) base = base.inverse();
        for (Int i = 0; i < count; ++i) result *= base;
    }
    return result;
}

/// lambda^i(x): the t^i coefficient of lambda_t(x).
inline Laurent lambda_i(const Laurent& x, int i) {
    if (i < 0) throw std::invalid_argument("lambda_i: i must be >= 0");
    return lambda_t(x, i).coeff(i);
}

/// zeta(x) = sigma_t(x) = 1 / lambda_{-t}(x); t^n coefficient is cl(Sym^n X).
inline TruncatedSeries zeta(const Laurent& x, int order) {
    return lambda_t(x, order).at_minus_t().inverse();
}

/// Rational form of the zeta function of X: numerator from odd-degree
/// generators, denominator from even-degree generators, factors (1 - tau^w t).
inline RationalSeries zeta_rational(const GradedTateObject& x) {
    RationalSeries r;
    for (const auto& [k, m] : x.multiplicities()) {
        auto& factors = (k.a % 2 != 0) ? r.numerator_factors : r.denominator_factors;
        factors[k.w] += m;
    }
    auto expand = [](const std::map<int, long long>& factors) {
        TPoly p{Laurent(1)};
        for (const auto& [w, m] : factors) {
            TPoly f{Laurent(1), -Laurent::monomial(w)};
            for (long long i = 0; i < m; ++i) p = tpoly_mul(p, f);
        }
        return p;
    };
    r.numerator = expand(r.numerator_factors);
    r.denominator = expand(r.denominator_factors);
    return r;
}

/// Cancels common (1 - tau^w t) factors between numerator and denominator.
inline RationalSeries reduce(const RationalSeries& r) {
    RationalSeries out = r;
    for (auto& [w, m] : out.numerator_factors) {
        auto it = out.denominator_factors.find(w);
        if (it == out.denominator_factors.end()) continue;
        long long common = std::min(m, it->second);
        m -= common;
        it->second -= common;
    }
    std::erase_if(out.numerator_factors, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(out.denominator_factors, [](const auto& kv) { return kv.second == 0; });
    auto expand = [](const std::map<int, long long>& factors) {
        TPoly p{Laurent(1)};
        for (const auto& [w, m] : factors) {
            TPoly f{Laurent(1), -Laurent::monomial(w)};
            for (long long i = 0; i < m; ++i) p = tpoly_mul(p, f);
        }
        return p;
    };
    out.numerator = expand(out.numerator_factors);
    out.denominator = expand(out.denominator_factors);
    return out;
}

/// Checks lambda(x) = prod over monomials pi_n(x) of lambda(pi_n(x)).
inline bool product_formula_check(const Laurent& x, int order) {
    TruncatedSeries lhs = lambda_t(x, order);
    TruncatedSeries rhs = TruncatedSeries::one(order);
    for (const auto& [q, c] : x.coeffs())
        rhs *= lambda_t(Laurent::monomial(q, c), order);
    return lhs == rhs;
}

namespace detail {

inline Laurent laurent_det(std::vector<std::vector<Laurent>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return Laurent(1);
    // permutation expansion; matrices here are at most 6x6
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    Laurent det;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Laurent term(1);
        bool zero = false;
        for (std::size_t i = 0; i < n && !zero; ++i) {
            if (m[i][perm[i]].is_zero()) zero = true;
            else term *= m[i][perm[i]];
        }
        if (!zero) {
            if (inversions % 2) det -= term;
            else det += term;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

}  // namespace detail

/// Schur operation on K_0 via the dual Jacobi-Trudi determinant
/// s_lambda = det(e_{lambda^t_i - i + j}) with e_k = lambda^k(x).
inline Laurent schur_op(const Partition& lambda, const Laurent& x) {
    if (lambda.empty()) return Laurent(1);
    const Partition lt = transpose(lambda);
    const int m = lt.rows();
    const int n = lambda.size();
    TruncatedSeries lam = lambda_t(x, n);
    auto e = [&](int k) -> Laurent {
        if (k < 0 || k > n) return Laurent();
        return lam.coeff(k);
    };
    std::vector<std::vector<Laurent>> mat(static_cast<std::size_t>(m),
                                          std::vector<Laurent>(static_cast<std::size_t>(m)));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            mat[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                e(lt.part(i - 1) - i + j);
    return detail::laurent_det(mat);
}

// ---------------------------------------------------------------------------
// Universal lambda-ring polynomials, generated from symmetric-function
// expansions over auxiliary variables.
// ---------------------------------------------------------------------------

namespace detail {

/// Sparse multivariate polynomial over a fixed number of variables.
using Exponents = std::vector<int>;
using MultiPoly = std::map<Exponents, Int>;

inline void mp_add_term(MultiPoly& p, const Exponents& e, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = p.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

inline MultiPoly mp_mul(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Exponents e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            mp_add_term(r, e, ca * cb);
        }
    return r;
}

/// e_k of a list of monomials (each a single-term polynomial), via the DP
/// expansion of prod (1 + m_i z) truncated at z^k.
inline MultiPoly elementary_symmetric(const std::vector<MultiPoly>& monomials, int k,
                                      std::size_t nvars) {
    std::vector<MultiPoly> ez(static_cast<std::size_t>(k) + 1);
    ez[0][Exponents(nvars, 0)] = 1;
    for (const auto& m : monomials)
        for (int d = k; d >= 1; --d) {
            MultiPoly add = mp_mul(ez[static_cast<std::size_t>(d - 1)], m);
            for (const auto& [e, c] : add) mp_add_term(ez[static_cast<std::size_t>(d)], e, c);
        }
    return ez[static_cast<std::size_t>(k)];
}

inline MultiPoly variable(std::size_t idx, std::size_t nvars) {
    Exponents e(nvars, 0);
    e[idx] = 1;
    MultiPoly p;
    p[e] = 1;
    return p;
}

/// A term of a decomposition into products of elementary symmetric
/// polynomials: one partition of e-indices per variable block.
struct EProductTerm {
    std::vector<std::vector<int>> e_indices;  // per block, the multiset of k's
    Int coeff;
};

/// Greedy decomposition of a polynomial symmetric within each variable block
/// into products of e_k per block, by lex-leading-term elimination.
inline std::vector<EProductTerm> decompose_symmetric(
    MultiPoly poly, const std::vector<std::pair<std::size_t, std::size_t>>& blocks,
    std::size_t nvars) {
    std::vector<EProductTerm> terms;
    while (!poly.empty()) {
        auto lead = std::prev(poly.end());  // lex-greatest exponent vector
        const Exponents& alpha = lead->first;
        Int coeff = lead->second;
        EProductTerm term;
        term.coeff = coeff;
        MultiPoly candidate;
        candidate[Exponents(nvars, 0)] = 1;
        for (const auto& [begin, end] : blocks) {
            // block exponents are weakly decreasing at the lex leading term
            std::vector<int> part;
            for (std::size_t i = begin; i < end; ++i)
                if (alpha[i] > 0) part.push_back(alpha[i]);
            // conjugate partition gives the e-indices
            std::vector<int> conj;
            if (!part.empty())
                for (int col = 0; col < part[0]; ++col)
                    conj.push_back(static_cast<int>(std::count_if(
                        part.begin(), part.end(), [&](int r) { return r > col; })));
            std::vector<MultiPoly> vars;
            for (std::size_t i = begin; i < end; ++i) vars.push_back(variable(i, nvars));
            for (int k : conj)
                candidate = mp_mul(candidate, elementary_symmetric(vars, k, nvars));
            term.e_indices.push_back(conj);
        }
        for (const auto& [e, c] : candidate) mp_add_term(poly, e, -coeff * c);
        terms.push_back(std::move(term));
    }
    return terms;
}

inline Laurent evaluate_eproduct(const std::vector<EProductTerm>& terms,
                                 const std::vector<std::vector<Laurent>>& lambda_values) {
    Laurent out;
    for (const auto& term : terms) {
        Laurent prod(term.coeff);
        for (std::size_t b = 0; b < term.e_indices.size(); ++b)
            for (int k : term.e_indices[b])
                prod *= lambda_values[b][static_cast<std::size_t>(k)];
        out += prod;
    }
    return out;
}

}  // namespace detail

/// Verifies the universal-polynomial lambda-ring axioms for x, y:
///   lambda^n(x*y) = P_n(lambda^1 x..lambda^n x; lambda^1 y..lambda^n y)
///   lambda^m(lambda^n(x)) = P_{m,n}(lambda^1 x..lambda^{mn} x)
/// with P_n, P_{m,n} generated from the splitting-principle expansions.
inline bool verify_lambda_ring(const Laurent& x, const Laurent& y, int n, int m) {
    if (n < 1 || m < 1 || n * m > 6)
        throw std::invalid_argument("verify_lambda_ring: need n,m >= 1 and n*m <= 6");
    using namespace detail;

    // --- P_n: e_n of the products x_i y_j over n+n auxiliary variables ---
    {
        const std::size_t nvars = 2 * static_cast<std::size_t>(n);
        std::vector<MultiPoly> products;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                products.push_back(mp_mul(variable(static_cast<std::size_t>(i), nvars),
                                          variable(static_cast<std::size_t>(n + j), nvars)));
        MultiPoly target = elementary_symmetric(products, n, nvars);
        auto terms = decompose_symmetric(
            std::move(target),
            {{0, static_cast<std::size_t>(n)},
             {static_cast<std::size_t>(n), nvars}},
            nvars);
        std::vector<Laurent> lx, ly;
        for (int k = 0; k <= n; ++k) {
            lx.push_back(lambda_i(x, k));
            ly.push_back(lambda_i(y, k));
        }
        Laurent rhs = evaluate_eproduct(terms, {lx, ly});
        if (lambda_i(x * y, n) != rhs) return false;
    }

    // --- P_{m,n}: e_m of the n-fold products over mn auxiliary variables ---
    {
        const int mn = m * n;
        const std::size_t nvars = static_cast<std::size_t>(mn);
        std::vector<MultiPoly> subset_products;
        std::vector<int> idx(static_cast<std::size_t>(n));
        // all n-element subsets of {0..mn-1}
        auto rec = [&](auto&& self, int start, int depth) -> void {
            if (depth == n) {
                MultiPoly p;
                p[Exponents(nvars, 0)] = 1;
                for (int i : idx) p = mp_mul(p, variable(static_cast<std::size_t>(i), nvars));
                subset_products.push_back(std::move(p));
                return;
            }
            for (int i = start; i < mn; ++i) {
                idx[static_cast<std::size_t>(depth)] = i;
                self(self, i + 1, depth + 1);
            }
        };
        rec(rec, 0, 0);
        MultiPoly target = elementary_symmetric(subset_products, m, nvars);
        auto terms = decompose_symmetric(std::move(target), {{0, nvars}}, nvars);
        std::vector<Laurent> lx;
        for (int k = 0; k <= mn; ++k) lx.push_back(lambda_i(x, k));
        Laurent rhs = evaluate_eproduct(terms, {lx});
        if (lambda_i(lambda_i(x, n), m) != rhs) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// The representation-ring-valued lambda_Sigma.
// ---------------------------------------------------------------------------

/// Series in t whose t^n coefficient is a map from partitions of n to K_0(D);
/// the coefficients live in K_0(D) tensored with R_n.
struct RepSeries {
    int order = 0;
    std::vector<std::map<Partition, Laurent>> coeffs;  // index = t-degree

    bool operator==(const RepSeries& o) const {
        return order == o.order && coeffs == o.coeffs;
    }
    bool operator!=(const RepSeries& o) const { return !(*this == o); }
};

/// lambda_Sigma(X) = sum over mu of cl(S_mu(X)) [V_mu] t^{|mu|}, to order N.
inline RepSeries lambda_sigma(const GradedTateObject& x, int order) {
    RepSeries s;
    s.order = order;
    s.coeffs.resize(static_cast<std::size_t>(order) + 1);
    s.coeffs[0][Partition{}] = Laurent(1);
    for (int n = 1; n <= order; ++n)
        for (const auto& mu : partitions_of(n)) {
            Laurent c = k0_class(schur_apply(mu, x));
            if (!c.is_zero()) s.coeffs[static_cast<std::size_t>(n)][mu] = c;
        }
    return s;
}

/// Coefficientwise induction product of RepSeries:
/// (fg)_n[lambda] = sum [lambda:mu,eta] f_p[mu] g_q[eta] over p+q=n.
inline RepSeries rep_series_product(const RepSeries& f, const RepSeries& g) {
    if (f.order != g.order)
        throw std::invalid_argument("rep series order mismatch");
    RepSeries r;
    r.order = f.order;
    r.coeffs.resize(static_cast<std::size_t>(r.order) + 1);
    for (int p = 0; p <= f.order; ++p)
        for (int q = 0; p + q <= f.order; ++q)
            for (const auto& [mu, cf] : f.coeffs[static_cast<std::size_t>(p)])
                for (const auto& [eta, cg] : g.coeffs[static_cast<std::size_t>(q)]) {
                    Laurent prod = cf * cg;
                    if (prod.is_zero()) continue;
                    for (const auto& lambda : partitions_of(p + q)) {
                        long long c = lr_coefficient(lambda, mu, eta);
                        if (!c) continue;
                        auto& dst = r.coeffs[static_cast<std::size_t>(p + q)];
                        auto [it, inserted] = dst.try_emplace(lambda, prod * Laurent(c));
                        if (!inserted) {
                            it->second += prod * Laurent(c);
                            if (it->second.is_zero()) dst.erase(it);
                        }
                    }
                }
    return r;
}

}  // namespace tate
