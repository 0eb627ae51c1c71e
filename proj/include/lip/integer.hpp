#pragma once

// Exact integer and rational scalars plus the number theory the rest of the
// library leans on: gcd/lcm, Bezout pairs, CRT, factorials, primality and
// squarefreeness at desk scale.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "lip/error.hpp"

namespace lip {

// Expression templates off: every arithmetic result is a plain value, so
// `auto` never captures a dangling temporary.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
// Always canonical: gcd(num, den) = 1, den >= 1, zero is 0/1.
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }
inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

inline Integer abs(const Integer& v) { return v < 0 ? Integer(-v) : v; }
inline Rational abs(const Rational& v) { return v < 0 ? Rational(-v) : v; }

inline std::string to_string(const Integer& v) { return v.str(); }

inline std::string to_string(const Rational& q) {
    if (is_integral(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

// Optional leading '-', then decimal digits. Nothing else is accepted.
inline Integer parse_integer(std::string_view text) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    if (i == text.size()) throw ParseError("expected an integer, got '" + std::string(text) + "'");
    for (std::size_t j = i; j < text.size(); ++j) {
        if (text[j] < '0' || text[j] > '9') {
            throw ParseError("expected an integer, got '" + std::string(text) + "'", j);
        }
    }
    Integer v(std::string(text.substr(i)));
    return text[0] == '-' ? Integer(-v) : v;
}

// "p" or "p/q".
// num/den in lowest terms; den may be negative.
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("zero denominator");
    return den < 0 ? Rational(Integer(-num), Integer(-den)) : Rational(num, den);
}

inline Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return make_rational(num, den);
}

// gcd(0, n) = |n|; the result is never negative.
inline Integer gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(abs(a), abs(b));
}

inline Integer lcm(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return 0;
    return abs(a) / gcd(a, b) * abs(b);
}

// Representative in [0, m) for m >= 1.
// Result lies in [0, |m|).
inline Integer floor_mod(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0) r += abs(m);
    return r;
}

inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Integer ceil_div(const Integer& a, const Integer& b) {
    return -floor_div(-a, b);
}

struct BezoutResult {
    Integer gcd;
    Integer x;
    Integer y;
};

// a*x + b*y = gcd >= 0, via the classical iteration. The pair is the one the
// Euclidean recurrence produces, so |x| <= |b|/gcd and |y| <= |a|/gcd; it is
// fully determined by (a, b).
inline BezoutResult extended_gcd(const Integer& a, const Integer& b) {
    Integer old_r = a, r = b;
    Integer old_s = 1, s = 0;
    Integer old_t = 0, t = 1;
    while (r != 0) {
        Integer q = old_r / r;
        Integer tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_r, old_s, old_t};
}

struct Congruence {
    Integer residue;  // in [0, modulus)
    Integer modulus;  // >= 1
};

// Solve x = r1 (mod m1), x = r2 (mod m2). Empty when gcd(m1, m2) does not
// divide r2 - r1. Moduli are taken in absolute value and must be nonzero.
inline std::optional<Congruence> crt(const Integer& r1, const Integer& m1,
                                     const Integer& r2, const Integer& m2) {
    Integer n1 = abs(m1), n2 = abs(m2);
    if (n1 == 0 || n2 == 0) throw DomainError("crt: zero modulus");
    auto [g, p, q] = extended_gcd(n1, n2);
    (void)q;
    Integer diff = r2 - r1;
    if (diff % g != 0) return std::nullopt;
    Integer m = n1 / g * n2;
    Integer step = n2 / g;
    // n1*p = g (mod n2), so t = (diff/g)*p solves n1*t = diff (mod n2).
    Integer t = floor_mod((diff / g) * p, step);
    return Congruence{floor_mod(r1 + n1 * t, m), m};
}

inline Integer factorial(unsigned n) {
    Integer r = 1;
    for (unsigned k = 2; k <= n; ++k) r *= k;
    return r;
}

inline Integer pow(const Integer& base, unsigned exponent) {
    return boost::multiprecision::pow(base, exponent);
}

inline unsigned to_unsigned(const Integer& v, const char* what) {
    if (v < 0 || v > std::numeric_limits<unsigned>::max()) {
        throw LimitExceeded(std::string(what) + " out of range: " + v.str());
    }
    return v.convert_to<unsigned>();
}

inline std::int64_t to_int64(const Integer& v, const char* what) {
    if (v < std::numeric_limits<std::int64_t>::min() || v > std::numeric_limits<std::int64_t>::max()) {
        throw LimitExceeded(std::string(what) + " does not fit in 64 bits: " + v.str());
    }
    return v.convert_to<std::int64_t>();
}

// Deterministic Miller-Rabin. The base set {2..41} is exact below 3.3e24.
inline bool is_prime(const Integer& n) {
    if (n < 2) return false;
    static const unsigned small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (unsigned p : small) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n >= Integer("3317044064679887385961981")) {
        throw LimitExceeded("primality test beyond 3.3e24 is not supported: " + n.str());
    }
    Integer d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (unsigned a : small) {
        Integer x = boost::multiprecision::powm(Integer(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Trial division; d <= 1e12.
inline bool is_squarefree(const Integer& d) {
    if (d < 1) throw DomainError("squarefreeness is defined for d >= 1");
    if (d > Integer(1000000000000LL)) throw LimitExceeded("squarefree test supports d <= 10^12");
    auto n = d.convert_to<std::uint64_t>();
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return false;
        }
    }
    return true;
}

}  // namespace lip
