#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tate {

/// A partition: weakly decreasing sequence of positive integers.
/// The empty sequence is the unique partition of 0.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw std::invalid_argument("partition parts must be positive");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// |lambda|, the sum of parts.
    int size() const {
        return std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    int part(int i) const {  // 0-based, 0 beyond the last row
        return i < rows() ? parts_[static_cast<std::size_t>(i)] : 0;
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s + "]";
    }

private:
    std::vector<int> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << p.to_string();
}

/// Parses "[3,1]" (whitespace tolerated around numbers and commas).
inline Partition parse_partition(const std::string& text) {
    std::size_t i = 0;
    auto skip = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip();
    if (i >= text.size() || text[i] != '[')
        throw std::invalid_argument("partition must start with '['");
    ++i;
    std::vector<int> parts;
    skip();
    if (i < text.size() && text[i] == ']') { ++i; }
    else {
        while (true) {
            skip();
            std::size_t end = i;
            while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
            if (end == i) throw std::invalid_argument("expected integer in partition at position " + std::to_string(i));
            parts.push_back(std::stoi(text.substr(i, end - i)));
            i = end;
            skip();
            if (i < text.size() && text[i] == ',') { ++i; continue; }
            if (i < text.size() && text[i] == ']') { ++i; break; }
            throw std::invalid_argument("expected ',' or ']' in partition at position " + std::to_string(i));
        }
    }
    skip();
    if (i != text.size())
        throw std::invalid_argument("trailing characters after partition");
    return Partition(parts);
}

/// Transpose partition: lambda^t_j = #{i : lambda_i >= j}. Involutive.
inline Partition transpose(const Partition& p) {
    std::vector<int> t;
    if (!p.empty()) {
        t.resize(static_cast<std::size_t>(p.parts()[0]));
        for (int col = 0; col < p.parts()[0]; ++col)
            t[static_cast<std::size_t>(col)] = static_cast<int>(std::count_if(
                p.parts().begin(), p.parts().end(), [&](int r) { return r > col; }));
    }
    return Partition(std::move(t));
}

/// True iff [mu] is contained in [lambda]: rowwise mu_i <= lambda_i.
inline bool diagram_contains(const Partition& lambda, const Partition& mu) {
    if (mu.rows() > lambda.rows()) return false;
    for (int i = 0; i < mu.rows(); ++i)
        if (mu.part(i) > lambda.part(i)) return false;
    return true;
}

/// True iff [mu] contains the rows x cols rectangle, i.e. mu_rows >= cols.
/// An empty rectangle (rows or cols zero) is contained in everything.
inline bool contains_rectangle(const Partition& mu, int rows, int cols) {
    if (rows <= 0 || cols <= 0) return true;
    return mu.rows() >= rows && mu.part(rows - 1) >= cols;
}

namespace detail {
inline void partitions_rec(int n, int max_part, std::vector<int>& cur,
                           std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}
}  // namespace detail

/// All partitions of n in reverse-lexicographic order: [n] first, [1,..,1] last.
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be non-negative");
    std::vector<Partition> out;
    std::vector<int> cur;
    detail::partitions_rec(n, n, cur, out);
    if (n == 0) out = {Partition{}};
    return out;
}

/// dim V_lambda by the hook length formula: |lambda|! / prod(hooks).
/// Counts standard Young tableaux of shape lambda.
inline long long irreducible_dimension(const Partition& lambda) {
    if (lambda.empty())
        throw std::invalid_argument("irreducible_dimension: partition must be nonempty");
    const Partition t = transpose(lambda);
    std::vector<long long> hs;
    for (int i = 0; i < lambda.rows(); ++i)
        for (int j = 0; j < lambda.part(i); ++j)
            hs.push_back((lambda.part(i) - j) + (t.part(j) - i) - 1);
    long long result = 1;
    for (int k = 1; k <= lambda.size(); ++k) {
        result *= k;
        for (auto& h : hs) {
            if (h != 1 && result % h == 0) {
                result /= h;
                h = 1;
            }
        }
    }
    for (auto h : hs)
        if (h != 1) result /= h;
    return result;
}

}  // namespace tate
