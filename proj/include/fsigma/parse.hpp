#pragma once

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fsigma/dyadic.hpp"
#include "fsigma/pl_map.hpp"
#include "fsigma/tree_pair.hpp"
#include "fsigma/words.hpp"

namespace fsigma {

class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t position, const std::string& what)
        : std::runtime_error("offset " + std::to_string(position) + ": " + what),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

namespace detail {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
    }
    bool eat(char c) {
        if (!done() && peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!eat(c)) throw parse_error(pos, std::string("expected ") + what);
    }

    BigInt integer() {
        std::size_t start = pos;
        bool neg = eat('-');
        if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw parse_error(start, "expected an integer");
        BigInt v = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            ++pos;
        }
        return neg ? -v : v;
    }

    // "n" or "n/m" with m a positive power of two
    Dyadic dyadic() {
        std::size_t start = pos;
        BigInt num = integer();
        if (!eat('/')) return Dyadic(num);
        BigInt den = integer();
        if (den <= 0) throw parse_error(start, "denominator must be positive");
        if ((den & (den - 1)) != 0)
            throw parse_error(start, "denominator " + den.str() +
                                         " is not a power of 2 (non-dyadic value)");
        return Dyadic(num, boost::multiprecision::msb(den));
    }

    // "p" or "p/q", q > 0 arbitrary
    Rational rational() {
        std::size_t start = pos;
        BigInt num = integer();
        if (!eat('/')) return Rational(num);
        BigInt den = integer();
        if (den <= 0) throw parse_error(start, "denominator must be positive");
        return Rational(num, den);
    }

    BinTree tree() {
        skip_ws();
        if (eat('*')) return BinTree::leaf();
        if (eat('(')) {
            BinTree l = tree();
            skip_ws();
            expect(',', "','");
            BinTree r = tree();
            skip_ws();
            expect(')', "')'");
            return BinTree::caret(std::move(l), std::move(r));
        }
        throw parse_error(pos, "expected '*' or '('");
    }
};

}  // namespace detail

inline Dyadic parse_dyadic(std::string_view text) {
    detail::Cursor c{text};
    c.skip_ws();
    Dyadic d = c.dyadic();
    c.skip_ws();
    if (!c.done()) throw parse_error(c.pos, "trailing characters after dyadic value");
    return d;
}

inline Rational parse_rational(std::string_view text) {
    detail::Cursor c{text};
    c.skip_ws();
    Rational r = c.rational();
    c.skip_ws();
    if (!c.done()) throw parse_error(c.pos, "trailing characters after rational value");
    return r;
}

// whitespace-separated letters "x3" / "x3^-1"; the empty word is valid
inline Word parse_word(std::string_view text) {
    detail::Cursor c{text};
    Word w;
    for (;;) {
        c.skip_ws();
        if (c.done()) return w;
        std::size_t start = c.pos;
        if (!c.eat('x')) throw parse_error(start, "expected a letter like x0 or x2^-1");
        BigInt idx = c.integer();
        if (idx < 0) throw parse_error(start, "generator index must be non-negative");
        int sign = +1;
        if (c.eat('^')) {
            bool neg = c.eat('-');
            BigInt e = c.integer();
            if (e != 1) throw parse_error(start, "only exponents 1 and -1 are accepted");
            if (neg) sign = -1;
        }
        w.push_back({static_cast<unsigned>(idx), sign});
    }
}

// "0:0; 1/2:1/4; 3/4:1/2; 1:1"
inline PLMap parse_breakpoints(std::string_view text) {
    detail::Cursor c{text};
    std::vector<PLMap::Breakpoint> pts;
    for (;;) {
        c.skip_ws();
        std::size_t start = c.pos;
        Dyadic u = c.dyadic();
        c.skip_ws();
        c.expect(':', "':' between the two coordinates");
        c.skip_ws();
        Dyadic v = c.dyadic();
        if (!in_unit_interval(u) || !in_unit_interval(v))
            throw parse_error(start, "breakpoint outside [0,1]");
        pts.emplace_back(std::move(u), std::move(v));
        c.skip_ws();
        if (c.done()) break;
        c.expect(';', "';' between breakpoints");
    }
    try {
        return PLMap::from_breakpoints(std::move(pts));
    } catch (const std::invalid_argument& e) {
        throw parse_error(0, e.what());
    }
}

inline BinTree parse_tree(std::string_view text) {
    detail::Cursor c{text};
    BinTree t = c.tree();
    c.skip_ws();
    if (!c.done()) throw parse_error(c.pos, "trailing characters after tree");
    return t;
}

// "domain|range", each side a tree like "((*,*),*)"
inline TreePair parse_tree_pair(std::string_view text) {
    std::size_t bar = text.find('|');
    if (bar == std::string_view::npos)
        throw parse_error(text.size(), "expected 'domain|range'");
    BinTree d = parse_tree(text.substr(0, bar));
    detail::Cursor c{text.substr(bar + 1)};
    BinTree r = c.tree();
    c.skip_ws();
    if (!c.done()) throw parse_error(bar + 1 + c.pos, "trailing characters after tree pair");
    try {
        return TreePair(std::move(d), std::move(r));
    } catch (const std::invalid_argument& e) {
        throw parse_error(0, e.what());
    }
}

// Accepts any of the three element grammars: a tree pair if the text
// contains '|', a breakpoint list if it contains ':', otherwise a word.
inline Element parse_element(std::string_view text) {
    if (text.find('|') != std::string_view::npos)
        return Element::from_pair(parse_tree_pair(text));
    if (text.find(':') != std::string_view::npos)
        return Element::from_map(parse_breakpoints(text));
    return eval_word(parse_word(text));
}

inline std::string breakpoints_to_string(const PLMap& f) {
    std::string s;
    for (const auto& p : f.breakpoints()) {
        if (!s.empty()) s += "; ";
        s += p.first.str() + ":" + p.second.str();
    }
    return s;
}

inline std::string pair_to_string(const TreePair& p) {
    return p.domain().str() + "|" + p.range().str();
}

inline std::string rational_to_string(const Rational& r) {
    if (boost::multiprecision::denominator(r) == 1)
        return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

}  // namespace fsigma
