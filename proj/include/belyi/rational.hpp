#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace belyi {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Error hierarchy shared by all modules.  value_error maps to CLI exit 2,
// cap_error to exit 3, internal_error to exit 4.
struct value_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct internal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rational& q) { return boost::multiprecision::denominator(q); }

// "num/den" with "/den" omitted for integers.
inline std::string to_string(const Rational& q) {
    if (den(q) == 1) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw value_error("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int n(s.substr(0, slash));
        Int d(s.substr(slash + 1));
        if (d == 0) throw value_error("zero denominator in rational literal: " + s);
        return Rational(n, d);
    } catch (const std::runtime_error&) {
        throw value_error("malformed rational literal: " + s);
    }
}

// p-adic valuation of a nonzero integer.
inline long valuation(Int n, const Int& p) {
    if (n == 0) throw value_error("valuation of zero");
    if (p < 2) throw value_error("valuation at non-prime");
    long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

// p-adic valuation of a nonzero rational.
inline long valuation(const Rational& q, const Int& p) {
    return valuation(num(q), p) - valuation(den(q), p);
}

inline Int pow_int(Int base, unsigned long e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Rational pow_rational(const Rational& base, long e) {
    if (e < 0) {
        if (base == 0) throw value_error("zero to negative power");
        return Rational(pow_int(den(base), static_cast<unsigned long>(-e)),
                        pow_int(num(base), static_cast<unsigned long>(-e)));
    }
    return Rational(pow_int(num(base), static_cast<unsigned long>(e)),
                    pow_int(den(base), static_cast<unsigned long>(e)));
}

// Deterministic Miller-Rabin, valid for all n < 3.3e24 with this base set.
inline bool is_probable_prime(const Int& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    int r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        Int x = boost::multiprecision::powm(Int(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < r - 1; ++i) {
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

// Trial division up to the cap, then Miller-Rabin on the cofactor.
// Factors are returned sorted; throws internal_error on an unfactorable
// composite cofactor (does not occur at the scales this toolkit targets).
inline std::vector<std::pair<Int, long>> factor(Int n, const Int& trial_cap = Int(1000000)) {
    if (n == 0) throw value_error("factor(0)");
    if (n < 0) n = -n;
    std::vector<std::pair<Int, long>> out;
    auto push = [&](const Int& p) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1);
    };
    for (Int p = 2; p * p <= n && p <= trial_cap; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            push(p);
            n /= p;
        }
    }
    if (n > 1) {
        if (!is_probable_prime(n))
            throw internal_error("unfactored composite cofactor: " + n.str());
        push(n);
    }
    return out;
}

// Exact integer square root test.
inline std::optional<Int> exact_sqrt(const Int& n) {
    if (n < 0) return std::nullopt;
    Int r = boost::multiprecision::sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

inline std::optional<Rational> exact_sqrt(const Rational& q) {
    auto n = exact_sqrt(num(q));
    auto d = exact_sqrt(den(q));
    if (!n || !d) return std::nullopt;
    return Rational(*n, *d);
}

}  // namespace belyi
