#pragma once

// Symbolic integer sets and their text syntax.
//
//   expr  := union
//   union := inter ( "|" inter )*
//   inter := diff ( "&" diff )*
//   diff  := atom ( "\" atom )*
//   atom  := "Z" | "N" | "P" | "ap(" int "," int ")" | "apz(" int "," int ")"
//          | "{" [ int ( "," int )* ] "}" | "(" expr ")"
//   int   := ["-"] digit+
//
// N is {1, 2, 3, ...}, P the positive primes, ap(a,d) = a + dZ_{>=0},
// apz(a,d) = a + dZ. All operators are left-associative and whitespace is
// ignored everywhere, including inside keywords and numbers.

#include <algorithm>
#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lip/progression.hpp"

namespace lip {

struct SetExpr;
using SetExprPtr = std::shared_ptr<const SetExpr>;

struct AllIntegers {
    friend bool operator==(const AllIntegers&, const AllIntegers&) = default;
};
struct AllNaturals {
    friend bool operator==(const AllNaturals&, const AllNaturals&) = default;
};
struct AllPrimes {
    friend bool operator==(const AllPrimes&, const AllPrimes&) = default;
};
struct FiniteSet {
    std::vector<Integer> elements;  // sorted, unique

    friend bool operator==(const FiniteSet&, const FiniteSet&) = default;
};

enum class SetOp { unite, intersect, subtract };

struct SetBinary {
    SetOp op;
    SetExprPtr lhs;
    SetExprPtr rhs;
};

struct SetExpr {
    std::variant<AllIntegers, AllNaturals, AllPrimes, Progression, FiniteSet, SetBinary> node;
};

inline bool operator==(const SetExpr& a, const SetExpr& b);

inline bool operator==(const SetBinary& a, const SetBinary& b) {
    return a.op == b.op && *a.lhs == *b.lhs && *a.rhs == *b.rhs;
}

inline bool operator==(const SetExpr& a, const SetExpr& b) { return a.node == b.node; }

namespace set_expr {

inline SetExprPtr integers() { return std::make_shared<const SetExpr>(SetExpr{AllIntegers{}}); }
inline SetExprPtr naturals() { return std::make_shared<const SetExpr>(SetExpr{AllNaturals{}}); }
inline SetExprPtr primes() { return std::make_shared<const SetExpr>(SetExpr{AllPrimes{}}); }
inline SetExprPtr progression(Progression p) { return std::make_shared<const SetExpr>(SetExpr{std::move(p)}); }
inline SetExprPtr finite(std::vector<Integer> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return std::make_shared<const SetExpr>(SetExpr{FiniteSet{std::move(xs)}});
}
inline SetExprPtr binary(SetOp op, SetExprPtr l, SetExprPtr r) {
    return std::make_shared<const SetExpr>(SetExpr{SetBinary{op, std::move(l), std::move(r)}});
}
inline SetExprPtr unite(SetExprPtr l, SetExprPtr r) { return binary(SetOp::unite, std::move(l), std::move(r)); }
inline SetExprPtr intersect(SetExprPtr l, SetExprPtr r) {
    return binary(SetOp::intersect, std::move(l), std::move(r));
}
inline SetExprPtr subtract(SetExprPtr l, SetExprPtr r) { return binary(SetOp::subtract, std::move(l), std::move(r)); }

}  // namespace set_expr

// Direct membership from the tree.
inline bool contains(const SetExpr& e, const Integer& x) {
    struct Visitor {
        const Integer& x;
        bool operator()(const AllIntegers&) const { return true; }
        bool operator()(const AllNaturals&) const { return x >= 1; }
        bool operator()(const AllPrimes&) const { return is_prime(x); }
        bool operator()(const Progression& p) const { return p.contains(x); }
        bool operator()(const FiniteSet& f) const {
            return std::binary_search(f.elements.begin(), f.elements.end(), x);
        }
        bool operator()(const SetBinary& b) const {
            bool l = contains(*b.lhs, x);
            switch (b.op) {
                case SetOp::unite: return l || contains(*b.rhs, x);
                case SetOp::intersect: return l && contains(*b.rhs, x);
                case SetOp::subtract: return l && !contains(*b.rhs, x);
            }
            return false;
        }
    };
    return std::visit(Visitor{x}, e.node);
}

namespace detail {

// Binding strength: "|" < "&" < "\" < atoms.
inline int precedence(const SetExpr& e) {
    if (auto* b = std::get_if<SetBinary>(&e.node)) {
        switch (b->op) {
            case SetOp::unite: return 1;
            case SetOp::intersect: return 2;
            case SetOp::subtract: return 3;
        }
    }
    return 4;
}

inline void print_set(const SetExpr& e, int min_prec, std::string& out) {
    int prec = precedence(e);
    bool paren = prec < min_prec;
    if (paren) out += "(";
    struct Visitor {
        std::string& out;
        int prec;
        void operator()(const AllIntegers&) const { out += "Z"; }
        void operator()(const AllNaturals&) const { out += "N"; }
        void operator()(const AllPrimes&) const { out += "P"; }
        void operator()(const Progression& p) const { out += to_string(p); }
        void operator()(const FiniteSet& f) const {
            out += "{";
            for (std::size_t i = 0; i < f.elements.size(); ++i) {
                if (i) out += ",";
                out += f.elements[i].str();
            }
            out += "}";
        }
        void operator()(const SetBinary& b) const {
            print_set(*b.lhs, prec, out);
            out += b.op == SetOp::unite ? " | " : b.op == SetOp::intersect ? " & " : " \\ ";
            print_set(*b.rhs, prec + 1, out);
        }
    };
    std::visit(Visitor{out, prec}, e.node);
    if (paren) out += ")";
}

class SetParser {
public:
    explicit SetParser(std::string_view text) {
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
            chars_.push_back(text[i]);
            offsets_.push_back(i);
        }
        end_offset_ = text.size();
    }

    SetExprPtr parse() {
        auto e = parse_union();
        if (pos_ != chars_.size()) fail("'|', '&', '\\' or end of input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& expected) const {
        std::size_t at = pos_ < offsets_.size() ? offsets_[pos_] : end_offset_;
        std::string found = pos_ < chars_.size() ? std::string("'") + chars_[pos_] + "'" : "end of input";
        throw ParseError("set expression: expected " + expected + " at offset " + std::to_string(at) + ", found " +
                             found,
                         at);
    }

    bool peek(char c) const { return pos_ < chars_.size() && chars_[pos_] == c; }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }
    bool accept_word(std::string_view w) {
        if (chars_.size() - pos_ < w.size()) return false;
        if (std::string_view(chars_).substr(pos_, w.size()) != w) return false;
        pos_ += w.size();
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("'") + c + "'");
    }

    Integer parse_int() {
        std::size_t start = pos_;
        accept('-');
        std::size_t digits = pos_;
        while (pos_ < chars_.size() && std::isdigit(static_cast<unsigned char>(chars_[pos_]))) ++pos_;
        if (pos_ == digits) {
            pos_ = start;
            fail("an integer");
        }
        return parse_integer(std::string_view(chars_).substr(start, pos_ - start));
    }

    SetExprPtr parse_union() {
        auto lhs = parse_inter();
        while (accept('|')) lhs = set_expr::unite(lhs, parse_inter());
        return lhs;
    }
    SetExprPtr parse_inter() {
        auto lhs = parse_diff();
        while (accept('&')) lhs = set_expr::intersect(lhs, parse_diff());
        return lhs;
    }
    SetExprPtr parse_diff() {
        auto lhs = parse_atom();
        while (accept('\\')) lhs = set_expr::subtract(lhs, parse_atom());
        return lhs;
    }

    SetExprPtr parse_progression(bool two_sided) {
        std::size_t at = pos_;
        Integer a = parse_int();
        expect(',');
        Integer d = parse_int();
        expect(')');
        if (d < 1) {
            pos_ = at;
            throw ParseError("set expression: progression step must be >= 1 at offset " +
                                 std::to_string(offsets_[at]),
                             offsets_[at]);
        }
        return set_expr::progression(two_sided ? Progression::two_sided(a, d) : Progression::ascending(a, d));
    }

    SetExprPtr parse_atom() {
        if (accept_word("apz(")) return parse_progression(true);
        if (accept_word("ap(")) return parse_progression(false);
        if (accept('Z')) return set_expr::integers();
        if (accept('N')) return set_expr::naturals();
        if (accept('P')) return set_expr::primes();
        if (accept('{')) {
            std::vector<Integer> xs;
            if (!accept('}')) {
                xs.push_back(parse_int());
                while (accept(',')) xs.push_back(parse_int());
                expect('}');
            }
            return set_expr::finite(std::move(xs));
        }
        if (accept('(')) {
            auto e = parse_union();
            expect(')');
            return e;
        }
        fail("one of 'Z', 'N', 'P', 'ap(', 'apz(', '{', '('");
    }

    std::string chars_;
    std::vector<std::size_t> offsets_;
    std::size_t end_offset_ = 0;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline SetExprPtr parse_set(std::string_view text) { return detail::SetParser(text).parse(); }

inline std::string to_string(const SetExpr& e) {
    std::string out;
    detail::print_set(e, 0, out);
    return out;
}

}  // namespace lip
