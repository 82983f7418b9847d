#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

namespace tate {

using Int = boost::multiprecision::cpp_int;

/// Element of Z[tau, tau^-1]: finitely supported integer coefficients over
/// integer exponents. Zero coefficients are never stored.
class Laurent {
public:
    Laurent() = default;
    Laurent(long long c) { if (c != 0) coeffs_[0] = c; }  // NOLINT(google-explicit-constructor)
    Laurent(const Int& c) { if (c != 0) coeffs_[0] = c; } // NOLINT(google-explicit-constructor)

    static Laurent monomial(int exponent, Int coeff = 1) {
        Laurent r;
        if (coeff != 0) r.coeffs_[exponent] = std::move(coeff);
        return r;
    }
    static Laurent tau() { return monomial(1); }

    const std::map<int, Int>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Int coeff(int exponent) const {
        auto it = coeffs_.find(exponent);
        return it == coeffs_.end() ? Int(0) : it->second;
    }

    Laurent& operator+=(const Laurent& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, c);
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
        return *this;
    }
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator-(const Laurent& a) { return Laurent() - a; }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_)
                r.add_term(ea + eb, ca * cb);
        return r;
    }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    bool operator==(const Laurent& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Laurent& o) const { return coeffs_ != o.coeffs_; }
    bool operator<(const Laurent& o) const { return coeffs_ < o.coeffs_; }

    /// Evaluation at tau = 1.
    Int at_one() const {
        Int s = 0;
        for (const auto& [e, c] : coeffs_) s += c;
        return s;
    }

    /// True when the lowest-exponent coefficient is negative; used by the
    /// printers to pull a minus sign out of a composite coefficient.
    bool leading_negative() const {
        return !coeffs_.empty() && coeffs_.begin()->second < 0;
    }

    void add_term(int exponent, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = coeffs_.try_emplace(exponent, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    /// "1 + tau + tau^2", "1 - tau^3", "-tau^-1 + 2*tau".
    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : coeffs_) {
            Int a = c;
            if (first) {
                if (a < 0) { os << "-"; a = -a; }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            if (e == 0) os << a;
            else {
                if (a != 1) os << a << "*";
                os << "tau";
                if (e != 1) os << "^" << e;
            }
            first = false;
        }
        return os.str();
    }

private:
    std::map<int, Int> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const Laurent& p) {
    return os << p.to_string();
}

}  // namespace tate
