#pragma once

#include "belyi/rational.hpp"

#include <algorithm>
#include <cassert>
#include <initializer_list>
#include <vector>

namespace belyi {

// Coefficient-ring glue.  Poly<K> requires ring ops on K plus exact
// division; specializations below cover Rational, Int and nested Poly.
template <class K>
struct ring_traits;

template <>
struct ring_traits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& a) { return a == 0; }
    // Exact division (always defined in a field).
    static Rational div(const Rational& a, const Rational& b) {
        if (b == 0) throw value_error("division by zero");
        return a / b;
    }
};

template <>
struct ring_traits<Int> {
    static Int zero() { return Int(0); }
    static Int one() { return Int(1); }
    static bool is_zero(const Int& a) { return a == 0; }
    static Int div(const Int& a, const Int& b) {
        if (b == 0) throw value_error("division by zero");
        Int q = a / b;
        if (q * b != a) throw internal_error("inexact integer division in PRS");
        return q;
    }
};

// Dense univariate polynomial, lowest degree first, leading coeff nonzero.
template <class K>
class Poly {
   public:
    Poly() = default;
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<K> coeffs) : c_(coeffs) { trim(); }
    static Poly constant(const K& a) { return Poly(std::vector<K>{a}); }
    static Poly x() { return Poly(std::vector<K>{ring_traits<K>::zero(), ring_traits<K>::one()}); }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    // Degree of the zero polynomial is -1 by convention.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<K>& coeffs() const { return c_; }
    const K& operator[](size_t i) const {
        static const K z = ring_traits<K>::zero();
        return i < c_.size() ? c_[i] : z;
    }
    const K& lc() const {
        if (c_.empty()) throw value_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    friend bool operator==(const Poly& a, const Poly& b) = default;

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), ring_traits<K>::zero());
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), ring_traits<K>::zero());
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] - b.c_[i];
        return Poly(std::move(r));
    }
    Poly operator-() const {
        std::vector<K> r(c_.size(), ring_traits<K>::zero());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = ring_traits<K>::zero() - c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, ring_traits<K>::zero());
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const K& s) {
        std::vector<K> r = a.c_;
        for (auto& x : r) x = x * s;
        return Poly(std::move(r));
    }
    friend Poly operator*(const K& s, const Poly& a) { return a * s; }

    // Exact scalar division; throws if any coefficient fails to divide.
    Poly divided_by(const K& s) const {
        std::vector<K> r = c_;
        for (auto& x : r) x = ring_traits<K>::div(x, s);
        return Poly(std::move(r));
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<K> r(c_.size() - 1, ring_traits<K>::zero());
        K k = ring_traits<K>::zero();
        for (size_t i = 1; i < c_.size(); ++i) {
            k = k + ring_traits<K>::one();
            r[i - 1] = c_[i] * k;
        }
        return Poly(std::move(r));
    }

    K eval(const K& x) const {
        K r = ring_traits<K>::zero();
        for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    // p(q(x)), Horner on polynomials.
    Poly compose(const Poly& q) const {
        Poly r;
        for (size_t i = c_.size(); i-- > 0;) r = r * q + constant(c_[i]);
        return r;
    }

    Poly shifted(size_t k) const {  // multiply by x^k
        if (is_zero()) return Poly();
        std::vector<K> r(c_.size() + k, ring_traits<K>::zero());
        std::copy(c_.begin(), c_.end(), r.begin() + static_cast<long>(k));
        return Poly(std::move(r));
    }

   private:
    void trim() {
        while (!c_.empty() && ring_traits<K>::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<K> c_;
};

// Nested polynomials (bivariate via Poly<Poly<Rational>>).
template <class K>
struct ring_traits<Poly<K>> {
    static Poly<K> zero() { return Poly<K>(); }
    static Poly<K> one() { return Poly<K>::constant(ring_traits<K>::one()); }
    static bool is_zero(const Poly<K>& a) { return a.is_zero(); }
    static Poly<K> div(const Poly<K>& a, const Poly<K>& b);  // defined after exact_divide
};

// Division with remainder; requires the divisor's leading coefficient to be
// invertible (fields) or all divisions to be exact.
template <class K>
std::pair<Poly<K>, Poly<K>> divrem(const Poly<K>& a, const Poly<K>& b) {
    if (b.is_zero()) throw value_error("polynomial division by zero");
    std::vector<K> rem(a.coeffs());
    std::vector<K> quo;
    long db = b.degree();
    if (a.degree() >= db) quo.assign(static_cast<size_t>(a.degree() - db) + 1, ring_traits<K>::zero());
    for (long i = a.degree(); i >= db; --i) {
        const K& top = rem[static_cast<size_t>(i)];
        if (ring_traits<K>::is_zero(top)) continue;
        K q = ring_traits<K>::div(top, b.lc());
        quo[static_cast<size_t>(i - db)] = q;
        for (long j = 0; j <= db; ++j)
            rem[static_cast<size_t>(i - db + j)] = rem[static_cast<size_t>(i - db + j)] - q * b[static_cast<size_t>(j)];
    }
    return {Poly<K>(std::move(quo)), Poly<K>(std::move(rem))};
}

// Exact division; throws internal_error when the remainder is nonzero.
template <class K>
Poly<K> exact_divide(const Poly<K>& a, const Poly<K>& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw internal_error("inexact polynomial division");
    return q;
}

template <class K>
Poly<K> ring_traits<Poly<K>>::div(const Poly<K>& a, const Poly<K>& b) {
    return exact_divide(a, b);
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, ring ops only.
template <class K>
Poly<K> pseudo_rem(const Poly<K>& a, const Poly<K>& b) {
    if (b.is_zero()) throw value_error("pseudo-division by zero");
    long db = b.degree();
    Poly<K> r = a;
    while (!r.is_zero() && r.degree() >= db) {
        long shift = r.degree() - db;
        Poly<K> t = (b * r.lc()).shifted(static_cast<size_t>(shift));
        r = r * b.lc() - t;
    }
    return r;
}

template <class K>
Poly<K> pow_poly(Poly<K> base, unsigned long e) {
    Poly<K> r = Poly<K>::constant(ring_traits<K>::one());
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

}  // namespace belyi
