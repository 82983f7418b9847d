#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tate/laurent.hpp"

namespace tate {

/// Power series in t with Laurent coefficients, exact modulo t^(N+1).
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1) {
        if (order < 0) throw std::invalid_argument("series order must be >= 0");
    }

    static TruncatedSeries one(int order) {
        TruncatedSeries s(order);
        s.coeffs_[0] = Laurent(1);
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Laurent& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
    Laurent& coeff(int i) { return coeffs_.at(static_cast<std::size_t>(i)); }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (a.order() != b.order())
            throw std::invalid_argument("series order mismatch");
        TruncatedSeries r(a.order());
        for (int i = 0; i <= a.order(); ++i)
            for (int j = 0; i + j <= a.order(); ++j)
                r.coeffs_[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
        return r;
    }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (a.order() != b.order())
            throw std::invalid_argument("series order mismatch");
        TruncatedSeries r = a;
        for (int i = 0; i <= a.order(); ++i) r.coeffs_[static_cast<std::size_t>(i)] += b.coeff(i);
        return r;
    }

    /// Multiplicative inverse; requires constant coefficient 1.
    TruncatedSeries inverse() const {
        if (!(coeff(0) == Laurent(1)))
            throw std::invalid_argument("series inverse requires constant term 1");
        TruncatedSeries r(order());
        r.coeffs_[0] = Laurent(1);
        for (int n = 1; n <= order(); ++n) {
            Laurent s;
            for (int k = 1; k <= n; ++k) s += coeff(k) * r.coeff(n - k);
            r.coeffs_[static_cast<std::size_t>(n)] = -s;
        }
        return r;
    }

    /// Substitution t -> -t.
    TruncatedSeries at_minus_t() const {
        TruncatedSeries r = *this;
        for (int i = 1; i <= order(); i += 2)
            r.coeffs_[static_cast<std::size_t>(i)] = -r.coeffs_[static_cast<std::size_t>(i)];
        return r;
    }

    TruncatedSeries truncated(int new_order) const {
        TruncatedSeries r(new_order);
        for (int i = 0; i <= new_order && i <= order(); ++i)
            r.coeffs_[static_cast<std::size_t>(i)] = coeff(i);
        return r;
    }

    bool operator==(const TruncatedSeries& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (int i = 0; i <= order(); ++i) {
            if (coeff(i).is_zero()) continue;
            const bool neg = i > 0 && coeff(i).leading_negative();
            std::string term = term_string(neg ? -coeff(i) : coeff(i), i);
            if (first) os << (neg ? "-" + term : term);
            else os << (neg ? " - " : " + ") << term;
            first = false;
        }
        if (first) os << "0";
        os << " + O(t^" << order() + 1 << ")";
        return os.str();
    }

    /// Renders one coefficient*t^i term: "1", "tau*t", "-t^2", "(1 + tau)*t^2".
    static std::string term_string(const Laurent& c, int i) {
        std::string cs = c.to_string();
        if (i == 0) return cs;
        std::string out;
        if (cs == "1") out = "t";
        else if (cs == "-1") out = "-t";
        else {
            bool composite = cs.find(' ') != std::string::npos;
            out = (composite ? "(" + cs + ")" : cs) + "*t";
        }
        if (i != 1) out += "^" + std::to_string(i);
        return out;
    }

private:
    std::vector<Laurent> coeffs_;
};

/// Polynomial in t with Laurent coefficients (dense, degree = size-1).
using TPoly = std::vector<Laurent>;

inline TPoly tpoly_mul(const TPoly& a, const TPoly& b) {
    TPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    while (r.size() > 1 && r.back().is_zero()) r.pop_back();
    return r;
}

inline std::string tpoly_to_string(const TPoly& p) {
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i].is_zero()) continue;
        const bool neg = i > 0 && p[i].leading_negative();
        std::string term =
            TruncatedSeries::term_string(neg ? -p[i] : p[i], static_cast<int>(i));
        if (first) { out = neg ? "-" + term : term; first = false; }
        else out += (neg ? " - " : " + ") + term;
    }
    return first ? "0" : out;
}

/// u / v with v(0) = 1; product-form factors (1 - tau^w t)^mult retained for
/// display and reduction.
struct RationalSeries {
    TPoly numerator{Laurent(1)};
    TPoly denominator{Laurent(1)};
    std::map<int, long long> numerator_factors;    // weight -> multiplicity
    std::map<int, long long> denominator_factors;  // weight -> multiplicity

    /// Expand u * (1/v) as a series to the given order.
    TruncatedSeries expand(int order) const {
        TruncatedSeries u(order), v(order);
        for (std::size_t i = 0; i < numerator.size() && static_cast<int>(i) <= order; ++i)
            u.coeff(static_cast<int>(i)) = numerator[i];
        for (std::size_t i = 0; i < denominator.size() && static_cast<int>(i) <= order; ++i)
            v.coeff(static_cast<int>(i)) = denominator[i];
        return u * v.inverse();
    }
};

}  // namespace tate
