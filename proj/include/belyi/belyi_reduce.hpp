#pragma once

#include "belyi/rational_map.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace belyi {

// beta_{m,n}(x) = ((m+n)^(m+n) / (m^m n^n)) x^m (1-x)^n.
// Maps 0 and 1 to 0, m/(m+n) to 1, infinity to infinity; all critical
// values lie in {0, 1, infinity}.
inline UniPoly belyi_poly(long m, long n) {
    if (m < 1 || n < 1) throw value_error("belyi_poly requires positive exponents");
    Rational c = pow_rational(Rational(m + n), m + n) /
                 (pow_rational(Rational(m), m) * pow_rational(Rational(n), n));
    UniPoly p = pow_poly(UniPoly{Rational(0), Rational(1)}, static_cast<unsigned long>(m)) *
                pow_poly(UniPoly{Rational(1), Rational(-1)}, static_cast<unsigned long>(n));
    return p * c;
}

// The six Moebius maps permuting {0, 1, infinity}, in the fixed tie-break
// order used by s3_shift.
enum class S3Label { identity, one_minus_x, inv_x, inv_one_minus_x, x_over_x_minus_1, x_minus_1_over_x };

inline std::string to_string(S3Label l) {
    switch (l) {
        case S3Label::identity: return "x";
        case S3Label::one_minus_x: return "1-x";
        case S3Label::inv_x: return "1/x";
        case S3Label::inv_one_minus_x: return "1/(1-x)";
        case S3Label::x_over_x_minus_1: return "x/(x-1)";
        case S3Label::x_minus_1_over_x: return "(x-1)/x";
    }
    throw internal_error("unknown S3 label");
}

inline Rational apply_s3(S3Label l, const Rational& x) {
    switch (l) {
        case S3Label::identity: return x;
        case S3Label::one_minus_x: return 1 - x;
        case S3Label::inv_x: return Rational(1) / x;
        case S3Label::inv_one_minus_x: return Rational(1) / (1 - x);
        case S3Label::x_over_x_minus_1: return x / (x - 1);
        case S3Label::x_minus_1_over_x: return (x - 1) / x;
    }
    throw internal_error("unknown S3 label");
}

// First map in the fixed label order whose image of lambda lies in the open
// interval (0, 1).
inline std::pair<S3Label, Rational> s3_shift(const Rational& lambda) {
    if (lambda == 0 || lambda == 1) throw value_error("s3_shift requires lambda outside {0,1}");
    for (S3Label l : {S3Label::identity, S3Label::one_minus_x, S3Label::inv_x,
                      S3Label::inv_one_minus_x, S3Label::x_over_x_minus_1,
                      S3Label::x_minus_1_over_x}) {
        Rational im = apply_s3(l, lambda);
        if (im > 0 && im < 1) return {l, im};
    }
    throw internal_error("no S3 shift moved lambda into (0,1)");
}

struct ReduceCaps {
    long max_total_degree = 1'000'000;
    long max_coeff_bits = 100'000;
};

struct BelyiCertificate {
    std::vector<UniPoly> steps;  // in application order; total = last o ... o first
    UniPoly total;               // composition of the steps (identity map if none)
    AlgebraicSet final_branch_set;
};

namespace detail {

inline long rational_bits(const Rational& q) {
    Int n = num(q) < 0 ? Int(-num(q)) : num(q);
    long bits = n == 0 ? 0 : static_cast<long>(boost::multiprecision::msb(n)) + 1;
    long dbits = static_cast<long>(boost::multiprecision::msb(den(q))) + 1;
    return std::max(bits, dbits);
}

inline void check_coeff_bits(const UniPoly& p, const ReduceCaps& caps) {
    for (const auto& c : p.coeffs())
        if (rational_bits(c) > caps.max_coeff_bits)
            throw cap_error("coefficient bit length exceeds the configured cap");
}

inline long max_coeff_bits(const UniPoly& p) {
    long bits = 0;
    for (const auto& c : p.coeffs()) bits = std::max(bits, rational_bits(c));
    return bits;
}

}  // namespace detail

// Belyi's algorithm, rational stage: produce a polynomial g over Q with
// g(S) and every critical value created along the way inside {0,1,inf}.
//
// If some point lies outside [0,1], one affine step maps the least and
// greatest finite points to 0 and 1.  After that every remaining point is
// in (0,1), so each beta step needs only the identity shift, keeping all
// certificate steps polynomial.  Points are then removed smallest
// denominator first (ties by numerator).
inline BelyiCertificate reduce_rational(const std::set<Rational>& branch_set,
                                        const ReduceCaps& caps = {}) {
    BelyiCertificate cert;
    cert.total = UniPoly{Rational(0), Rational(1)};
    std::set<Rational> points = branch_set;
    points.insert(Rational(0));
    points.insert(Rational(1));

    std::set<Rational> pending;  // non-special points, all kept inside (0,1)
    if (*points.begin() < 0 || *points.rbegin() > 1) {
        Rational a = *points.begin(), b = *points.rbegin();
        UniPoly g{-a / (b - a), Rational(1) / (b - a)};
        for (const auto& r : points) {
            Rational im = g.eval(r);
            if (im != 0 && im != 1) pending.insert(im);
        }
        cert.steps.push_back(g);
        cert.total = g;
    } else {
        for (const auto& r : points)
            if (r != 0 && r != 1) pending.insert(r);
    }

    while (!pending.empty()) {
        // smallest denominator, ties by numerator
        Rational lambda = *pending.begin();
        for (const auto& r : pending)
            if (den(r) < den(lambda) || (den(r) == den(lambda) && num(r) < num(lambda)))
                lambda = r;
        long m = static_cast<long>(num(lambda));
        long d = static_cast<long>(den(lambda));
        if (Int(m) != num(lambda) || Int(d) != den(lambda))
            throw cap_error("branch point denominator exceeds the machine range");
        long total_deg = std::max<long>(cert.total.degree(), 1);
        if (d > caps.max_total_degree / total_deg)
            throw cap_error("total degree exceeds the configured cap");
        UniPoly beta = belyi_poly(m, d - m);
        std::set<Rational> next;
        for (const auto& r : pending) {
            // image heights grow like height(r)^deg(beta); cap them like
            // coefficients so a blowup surfaces as a structured cap error
            if (detail::rational_bits(r) > caps.max_coeff_bits / std::max<long>(beta.degree(), 1))
                throw cap_error("branch point height exceeds the configured cap");
            Rational im = beta.eval(r);
            if (im != 0 && im != 1) next.insert(im);
        }
        if (next.size() >= pending.size())
            throw internal_error("non-special point count failed to decrease");
        cert.steps.push_back(beta);
        // composing beta with the running total multiplies coefficient bit
        // lengths by roughly deg(beta); refuse up front when the result is
        // certain to blow past the cap, since the check after the fact would
        // come only after an unbounded amount of work
        if (static_cast<long>(beta.degree()) *
                std::max(detail::max_coeff_bits(cert.total), 1L) >
            caps.max_coeff_bits)
            throw cap_error("coefficient bit length exceeds the configured cap");
        cert.total = beta.compose(cert.total);
        detail::check_coeff_bits(cert.total, caps);
        pending = std::move(next);
    }
    cert.final_branch_set = AlgebraicSet{UniPoly{Rational(0), Rational(1)} *
                                             UniPoly{Rational(-1), Rational(1)},
                                         true};
    return cert;
}

// Critical values of the polynomial m: roots of the squarefree part of
// Res_x(m'(x), y - m(x)) in y.
inline UniPoly critical_value_polynomial(const UniPoly& m) {
    if (m.degree() < 2) return UniPoly{Rational(1)};
    UniPoly dm = m.derivative();
    // y - m(x) as a polynomial in x over Q[y]
    std::vector<UniPoly> cx(static_cast<size_t>(m.degree()) + 1);
    cx[0] = UniPoly{-m[0], Rational(1)};
    for (long i = 1; i <= m.degree(); ++i) cx[static_cast<size_t>(i)] = UniPoly{-m[static_cast<size_t>(i)]};
    BiPoly F(std::move(cx));
    std::vector<UniPoly> dx(static_cast<size_t>(dm.degree()) + 1);
    for (long i = 0; i <= dm.degree(); ++i) dx[static_cast<size_t>(i)] = UniPoly{dm[static_cast<size_t>(i)]};
    UniPoly res = resultant_bivariate(BiPoly(std::move(dx)), F);
    return squarefree_part(res);
}

// Belyi's algorithm, full version: stage (a) repeatedly composes with the
// monic squarefree defining polynomial of the non-rational branch locus
// (sending all its roots to 0); the new branch data are the images of the
// rational points plus the critical values of the applied polynomial, whose
// defining degree strictly decreases.  Stage (b) delegates to
// reduce_rational.
inline BelyiCertificate reduce_algebraic(const AlgebraicSet& locus,
                                         std::set<Rational> rational_points = {},
                                         const ReduceCaps& caps = {}) {
    if (locus.defining.is_zero()) throw value_error("zero defining polynomial");
    BelyiCertificate cert;
    cert.total = UniPoly{Rational(0), Rational(1)};
    UniPoly d = squarefree_part(locus.defining);
    rational_points.insert(Rational(0));
    rational_points.insert(Rational(1));
    while (d.degree() >= 1) {
        auto [pts, rest] = split_rational_roots(d);
        for (const auto& r : pts) rational_points.insert(r);
        d = rest;
        if (d.degree() < 1) break;
        // compose with the defining polynomial itself
        std::set<Rational> images;
        for (const auto& r : rational_points) images.insert(d.eval(r));
        images.insert(Rational(0));  // the irrational locus maps to 0
        UniPoly cv = critical_value_polynomial(d);
        auto [cv_pts, cv_rest] = split_rational_roots(cv);
        for (const auto& r : cv_pts) images.insert(r);
        if (cv_rest.degree() >= d.degree())
            throw internal_error("stage (a) failed to decrease the defining degree");
        cert.steps.push_back(d);
        cert.total = d.compose(cert.total);
        detail::check_coeff_bits(cert.total, caps);
        rational_points = std::move(images);
        d = cv_rest;
    }
    BelyiCertificate rat = reduce_rational(rational_points, caps);
    for (const auto& s : rat.steps) cert.steps.push_back(s);
    cert.total = rat.total.compose(cert.total);
    detail::check_coeff_bits(cert.total, caps);
    cert.final_branch_set = rat.final_branch_set;
    return cert;
}

// Independent certificate check: the recorded total is the composition of
// the steps, every input branch point maps into {0,1,inf} by exact
// evaluation, and the total passes the analyzer's Belyi verification.
// Degrees above verify_degree_cap raise cap_error (the discriminant
// pipeline cost grows quickly with degree).
inline bool verify_certificate(const BelyiCertificate& cert, const std::set<Rational>& branch_set,
                               const UniPoly& algebraic_defining = UniPoly{Rational(1)},
                               long verify_degree_cap = 400) {
    UniPoly composed{Rational(0), Rational(1)};
    for (const auto& s : cert.steps) composed = s.compose(composed);
    if (composed != cert.total) return false;
    for (const auto& r : branch_set) {
        Rational v = cert.total.eval(r);
        if (v != 0 && v != 1) return false;
    }
    if (algebraic_defining.degree() >= 1) {
        // total(alpha) in {0,1} for every root alpha of the defining poly
        auto [q1, t0] = divrem(cert.total, algebraic_defining);
        UniPoly t1 = t0 - UniPoly{Rational(1)};
        auto [q2, rem] = divrem(t0 * t1, algebraic_defining);
        if (!rem.is_zero()) return false;
    }
    if (cert.total.degree() < 1) return branch_set.empty() || cert.total.is_zero();
    if (cert.total.degree() > verify_degree_cap)
        throw cap_error("certificate total degree exceeds the verification cap");
    return is_belyi(RationalMap(cert.total)).is_belyi;
}

}  // namespace belyi
