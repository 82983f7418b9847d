#pragma once

#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "tate/laurent.hpp"

namespace tate {

/// Degree/weight position of a generator 1(w)[a].
struct GenKey {
    int a = 0;  // cohomological degree (shift)
    int w = 0;  // weight (twist)
    auto operator<=>(const GenKey&) const = default;
};

/// Dimensions of a graded vector space, indexed by cohomological degree.
using GradedVectorSpaceDims = std::map<int, long long>;

/// The associated-graded model of a mixed Tate object: a finitely supported
/// multiplicity map over generators 1(w)[a]. The zero object is the empty map.
/// Non-split extensions are outside this data model: every object is
/// identified with its weight-graded form.
class GradedTateObject {
public:
    GradedTateObject() = default;

    static GradedTateObject zero() { return {}; }

    /// The object 1(w)[a] with multiplicity 1.
    static GradedTateObject generator(int w, int a) {
        GradedTateObject x;
        x.mult_[{a, w}] = 1;
        return x;
    }
    static GradedTateObject unit() { return generator(0, 0); }

    const std::map<GenKey, long long>& multiplicities() const { return mult_; }
    bool is_zero() const { return mult_.empty(); }

    void add(GenKey key, long long m) {
        if (m == 0) return;
        auto [it, inserted] = mult_.try_emplace(key, m);
        if (!inserted) {
            it->second += m;
            if (it->second == 0) mult_.erase(it);
        }
    }

    bool operator==(const GradedTateObject& o) const { return mult_ == o.mult_; }
    bool operator!=(const GradedTateObject& o) const { return !(*this == o); }
    bool operator<(const GradedTateObject& o) const { return mult_ < o.mult_; }

    std::string to_string() const {
        if (mult_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, m] : mult_) {
            if (!first) os << " + ";
            if (m != 1) os << m << "*";
            os << "Q(" << k.w << ")[" << k.a << "]";
            first = false;
        }
        return os.str();
    }

private:
    std::map<GenKey, long long> mult_;
};

inline std::ostream& operator<<(std::ostream& os, const GradedTateObject& x) {
    return os << x.to_string();
}

inline GradedTateObject direct_sum(const GradedTateObject& x, const GradedTateObject& y) {
    GradedTateObject r = x;
    for (const auto& [k, m] : y.multiplicities()) r.add(k, m);
    return r;
}

/// X[k]: (a,w) -> (a+k,w).
inline GradedTateObject shift(const GradedTateObject& x, int k) {
    GradedTateObject r;
    for (const auto& [key, m] : x.multiplicities()) r.add({key.a + k, key.w}, m);
    return r;
}

/// X(n): (a,w) -> (a,w+n).
inline GradedTateObject twist(const GradedTateObject& x, int n) {
    GradedTateObject r;
    for (const auto& [key, m] : x.multiplicities()) r.add({key.a, key.w + n}, m);
    return r;
}

/// Kunneth convolution of multiplicities; unit 1 = Q(0)[0].
inline GradedTateObject tensor(const GradedTateObject& x, const GradedTateObject& y) {
    GradedTateObject r;
    for (const auto& [kx, mx] : x.multiplicities())
        for (const auto& [ky, my] : y.multiplicities())
            r.add({kx.a + ky.a, kx.w + ky.w}, mx * my);
    return r;
}

/// W_{<n}: keep generators with weight < n.
inline GradedTateObject weight_below(const GradedTateObject& x, int n) {
    GradedTateObject r;
    for (const auto& [k, m] : x.multiplicities())
        if (k.w < n) r.add(k, m);
    return r;
}

/// W_{>m}: keep generators with weight > m.
inline GradedTateObject weight_above(const GradedTateObject& x, int m) {
    GradedTateObject r;
    for (const auto& [k, mult] : x.multiplicities())
        if (k.w > m) r.add(k, mult);
    return r;
}

/// gr^W_n: the weight-n part.
inline GradedTateObject gr_n(const GradedTateObject& x, int n) {
    return weight_above(weight_below(x, n + 1), n - 1);
}

/// Cohomology dimensions of the weight-zero twist of the associated graded.
/// Convention: the generator 1(w)[a] contributes in cohomological degree -a.
inline GradedVectorSpaceDims gr_bar(const GradedTateObject& x) {
    GradedVectorSpaceDims dims;
    for (const auto& [k, m] : x.multiplicities()) dims[-k.a] += m;
    return dims;
}

/// d^+: total multiplicity in even cohomological degrees.
inline long long d_plus(const GradedTateObject& x) {
    long long d = 0;
    for (const auto& [k, m] : x.multiplicities())
        if (k.a % 2 == 0) d += m;
    return d;
}

/// d^-: total multiplicity in odd cohomological degrees.
inline long long d_minus(const GradedTateObject& x) {
    long long d = 0;
    for (const auto& [k, m] : x.multiplicities())
        if (k.a % 2 != 0) d += m;
    return d;
}

/// Class in K_0(D) = Z[tau,tau^-1]: sum m(a,w) * (-1)^a * tau^w.
inline Laurent k0_class(const GradedTateObject& x) {
    Laurent r;
    for (const auto& [k, m] : x.multiplicities())
        r.add_term(k.w, (k.a % 2 == 0) ? Int(m) : Int(-m));
    return r;
}

/// Augmentation K_0(D) -> Z: evaluation at tau = 1.
inline Int augmentation(const Laurent& x) { return x.at_one(); }

/// Named presets: A^n = 1; P^n = sum 1(i)[2i]; A^n minus origin = 1 + 1(n)[2n-1];
/// Gm = A^1 minus origin.
inline GradedTateObject preset(const std::string& name, int n) {
    if (name == "A") {
        if (n < 0) throw std::invalid_argument("preset A: n must be >= 0");
        return GradedTateObject::unit();
    }
    if (name == "P") {
        if (n < 0) throw std::invalid_argument("preset P: n must be >= 0");
        GradedTateObject x;
        for (int i = 0; i <= n; ++i) x.add({2 * i, i}, 1);
        return x;
    }
    if (name == "Am0") {
        if (n < 1) throw std::invalid_argument("preset Am0: n must be >= 1");
        GradedTateObject x = GradedTateObject::unit();
        x.add({2 * n - 1, n}, 1);
        return x;
    }
    if (name == "Gm") return preset("Am0", 1);
    throw std::invalid_argument("unknown preset: " + name);
}

}  // namespace tate
