#pragma once

#include <cctype>
#include <stdexcept>
#include <string>

#include "tate/graded.hpp"

namespace tate {

/// Parse failure for object expressions; carries the offending position.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& expected)
        : std::runtime_error("parse error at position " + std::to_string(position) +
                             ": expected " + expected),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

namespace detail {

class ExprParser {
public:
    explicit ExprParser(const std::string& text) : text_(text) {}

    GradedTateObject parse() {
        GradedTateObject x = parse_term();
        skip_ws();
        while (pos_ < text_.size()) {
            expect('+', "'+' or end of expression");
            GradedTateObject t = parse_term();
            x = direct_sum(x, t);
            skip_ws();
        }
        return x;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char c, const std::string& what) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c) throw ParseError(pos_, what);
        ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    long long parse_int(const std::string& what) {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits) throw ParseError(start, what);
        return std::stoll(text_.substr(start, pos_ - start));
    }

    GradedTateObject parse_term() {
        skip_ws();
        if (pos_ >= text_.size())
            throw ParseError(pos_, "a term: [mult*]Q(w)[a], P:n, A:n, Am0:n or Gm");
        // optional "mult *"
        long long mult = 1;
        std::size_t save = pos_;
        if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            mult = parse_int("multiplicity");
            if (peek_is('*')) { ++pos_; }
            else { pos_ = save; mult = 1; }
        }
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == 'Q') {
            ++pos_;
            expect('(', "'(' after Q");
            long long w = parse_int("integer twist");
            expect(')', "')' closing the twist");
            expect('[', "'[' opening the shift");
            long long a = parse_int("integer shift");
            expect(']', "']' closing the shift");
            GradedTateObject x;
            x.add({static_cast<int>(a), static_cast<int>(w)}, mult);
            return x;
        }
        // preset name
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_]))))
            ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        if (name == "Gm") return scaled(preset("Gm", 1), mult);
        if (name == "P" || name == "A" || name == "Am0") {
            expect(':', "':' after preset name");
            long long n = parse_int("preset index");
            try {
                return scaled(preset(name, static_cast<int>(n)), mult);
            } catch (const std::invalid_argument&) {
                throw ParseError(start, "a valid preset index for " + name);
            }
        }
        throw ParseError(start, "'Q', 'P', 'A', 'Am0' or 'Gm'");
    }

    static GradedTateObject scaled(const GradedTateObject& x, long long mult) {
        GradedTateObject r;
        for (const auto& [k, m] : x.multiplicities()) r.add(k, m * mult);
        return r;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the object-expression grammar, e.g. "Q(0)[1] + 2*Q(1)[2] + P:2".
inline GradedTateObject parse_object(const std::string& text) {
    return detail::ExprParser(text).parse();
}

}  // namespace tate
