#pragma once

#include "belyi/poly.hpp"
#include "belyi/rational.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace belyi {

using UniPoly = Poly<Rational>;
using ZPoly = Poly<Int>;
using BiPoly = Poly<UniPoly>;  // polynomials in x with coefficients in Q[y]

// ---------------------------------------------------------------------------
// conversions

// p = scale * primitive, primitive integral with positive leading coeff.
inline std::pair<ZPoly, Rational> to_primitive(const UniPoly& p) {
    if (p.is_zero()) return {ZPoly(), Rational(1)};
    Int l = 1;
    for (const auto& c : p.coeffs()) l = boost::multiprecision::lcm(l, den(c));
    std::vector<Int> ic;
    ic.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) ic.push_back(num(c) * (l / den(c)));
    Int g = 0;
    for (const auto& c : ic) g = boost::multiprecision::gcd(g, c);
    if (ic.back() < 0) g = -g;
    for (auto& c : ic) c /= g;
    return {ZPoly(std::move(ic)), Rational(g, l)};
}

inline UniPoly to_rational(const ZPoly& p) {
    std::vector<Rational> c;
    c.reserve(p.coeffs().size());
    for (const auto& a : p.coeffs()) c.emplace_back(a);
    return UniPoly(std::move(c));
}

inline UniPoly monic(const UniPoly& p) {
    if (p.is_zero()) return p;
    return p.divided_by(p.lc());
}

// ---------------------------------------------------------------------------
// gcd over Q[x] via the primitive PRS over Z

inline Int content(const ZPoly& p) {
    Int g = 0;
    for (const auto& c : p.coeffs()) g = boost::multiprecision::gcd(g, c);
    return g;
}

inline ZPoly primitive_part(const ZPoly& p) {
    if (p.is_zero()) return p;
    Int g = content(p);
    if (p.lc() < 0) g = -g;
    return p.divided_by(g);
}

// Monic gcd; gcd(0,0) = 0.
inline UniPoly poly_gcd(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero()) return monic(q);
    if (q.is_zero()) return monic(p);
    ZPoly a = to_primitive(p).first;
    ZPoly b = to_primitive(q).first;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        ZPoly r = primitive_part(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return monic(to_rational(a));
}

// ---------------------------------------------------------------------------
// resultants: subresultant PRS (Cohen alg. 3.3.7), generic over a UFD

namespace detail {

// lc(b)^(delta+1) * a mod b with the exact power of lc(b), as the
// subresultant bookkeeping requires.
template <class K>
Poly<K> prem_exact(const Poly<K>& a, const Poly<K>& b) {
    long delta = a.degree() - b.degree();
    Poly<K> r = a;
    long applied = 0;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        long shift = r.degree() - b.degree();
        r = r * b.lc() - (b * r.lc()).shifted(static_cast<size_t>(shift));
        ++applied;
    }
    for (; applied < delta + 1; ++applied) r = r * b.lc();
    return r;
}

template <class K>
K pow_ring(K base, long e) {
    K r = ring_traits<K>::one();
    while (e-- > 0) r = r * base;
    return r;
}

}  // namespace detail

// Resultant over any UFD K with exact division (used with K = Int and
// K = UniPoly).  Inputs nonzero.
template <class K>
K resultant_prs(Poly<K> a, Poly<K> b) {
    using T = ring_traits<K>;
    if (a.is_zero() || b.is_zero()) throw value_error("resultant of zero polynomial");
    bool negate = false;
    if (a.degree() < b.degree()) {
        if ((a.degree() & 1) && (b.degree() & 1)) negate = true;
        std::swap(a, b);
    }
    if (b.degree() == 0) {
        K r = detail::pow_ring(b.lc(), a.degree());
        return negate ? T::zero() - r : r;
    }
    K g = T::one(), h = T::one();
    int s = negate ? -1 : 1;
    while (true) {
        long delta = a.degree() - b.degree();
        if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
        Poly<K> r = detail::prem_exact(a, b);
        a = std::move(b);
        // b <- r / (g * h^delta)
        K divisor = g * detail::pow_ring(h, delta);
        b = r.divided_by(divisor);
        g = a.lc();
        // h <- g^delta / h^(delta-1)
        if (delta > 0) h = T::div(detail::pow_ring(g, delta), detail::pow_ring(h, delta - 1));
        if (b.is_zero()) return T::zero();
        if (b.degree() == 0) break;
    }
    // res = s * lc(b)^deg(a) / h^(deg(a)-1)
    K r = T::div(detail::pow_ring(b.lc(), a.degree()), detail::pow_ring(h, a.degree() - 1));
    return s < 0 ? T::zero() - r : r;
}

// Resultant over Q[x], routed through the primitive integer PRS.
inline Rational resultant(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() || q.is_zero()) throw value_error("resultant of zero polynomial");
    if (p.degree() == 0) return pow_rational(p.lc(), q.degree());
    if (q.degree() == 0) return pow_rational(q.lc(), p.degree());
    auto [a, sa] = to_primitive(p);
    auto [b, sb] = to_primitive(q);
    Rational scale = pow_rational(sa, q.degree()) * pow_rational(sb, p.degree());
    return scale * Rational(resultant_prs(a, b));
}

// Newton interpolation through exact rational points (xs distinct).
inline UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    if (xs.size() != ys.size() || xs.empty()) throw value_error("interpolation size mismatch");
    size_t n = xs.size();
    std::vector<Rational> coef = ys;  // divided differences
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n - 1; i >= j; --i) coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
    UniPoly p;
    UniPoly basis{Rational(1)};
    for (size_t i = 0; i < n; ++i) {
        p = p + basis * UniPoly{coef[i]};
        basis = basis * UniPoly{-xs[i], Rational(1)};
    }
    return p;
}

// Resultant in x of two bivariate polynomials (coefficients in Q[y]);
// contents in y are stripped up front and restored by the scaling rule.
// Computed by specialization at integer values of y (avoiding the finitely
// many points where either leading x-coefficient vanishes, so the degrees
// are preserved and specialization commutes with the resultant) followed by
// exact interpolation — far cheaper than a pseudo-remainder sequence over
// Q[y] at the degrees the analyzer meets.
inline UniPoly resultant_bivariate(const BiPoly& p, const BiPoly& q) {
    if (p.is_zero() || q.is_zero()) throw value_error("resultant of zero polynomial");
    auto strip = [](const BiPoly& f, UniPoly& cont) {
        cont = UniPoly();
        for (const auto& c : f.coeffs()) cont = poly_gcd(cont, c);
        std::vector<UniPoly> out;
        out.reserve(f.coeffs().size());
        for (const auto& c : f.coeffs()) out.push_back(exact_divide(c, cont));
        return BiPoly(std::move(out));
    };
    UniPoly cp, cq;
    BiPoly a = strip(p, cp);
    BiPoly b = strip(q, cq);
    UniPoly scale = pow_poly(cp, static_cast<unsigned long>(q.degree())) *
                    pow_poly(cq, static_cast<unsigned long>(p.degree()));
    if (a.degree() == 0) return scale * pow_poly(a.lc(), static_cast<unsigned long>(b.degree()));
    if (b.degree() == 0) return scale * pow_poly(b.lc(), static_cast<unsigned long>(a.degree()));
    auto ydeg = [](const BiPoly& f) {
        long d = 0;
        for (const auto& c : f.coeffs()) d = std::max(d, c.degree());
        return d;
    };
    long bound = b.degree() * ydeg(a) + a.degree() * ydeg(b);
    auto specialize = [](const BiPoly& f, const Rational& y0) {
        std::vector<Rational> c;
        c.reserve(f.coeffs().size());
        for (const auto& co : f.coeffs()) c.push_back(co.eval(y0));
        return UniPoly(std::move(c));
    };
    std::vector<Rational> xs, ys;
    for (long k = 0; static_cast<long>(xs.size()) <= bound; ++k) {
        Rational y0 = (k % 2 == 0) ? Rational(k / 2) : Rational(-(k / 2) - 1);
        if (a.lc().eval(y0) == 0 || b.lc().eval(y0) == 0) continue;
        xs.push_back(y0);
        ys.push_back(resultant(specialize(a, y0), specialize(b, y0)));
    }
    return scale * interpolate(xs, ys);
}

// disc(p) = (-1)^(n(n-1)/2) Res(p, p') / lc(p)
inline Rational discriminant(const UniPoly& p) {
    if (p.degree() < 1) throw value_error("discriminant of a constant polynomial");
    UniPoly d = p.derivative();
    long n = p.degree();
    Rational r = resultant(p, d) / p.lc();
    if (((n * (n - 1)) / 2) % 2 != 0) r = -r;
    return r;
}

// ---------------------------------------------------------------------------
// squarefree structure (Yun) and rational roots

// p = lc * prod factors[i].first ^ factors[i].second, factors monic
// squarefree and pairwise coprime, multiplicities strictly increasing.
inline std::vector<std::pair<UniPoly, long>> squarefree_decomposition(const UniPoly& p) {
    if (p.is_zero()) throw value_error("squarefree decomposition of zero");
    std::vector<std::pair<UniPoly, long>> out;
    if (p.degree() == 0) return out;
    UniPoly m = monic(p);
    UniPoly g = poly_gcd(m, m.derivative());
    UniPoly w = exact_divide(m, g);
    UniPoly y = exact_divide(m.derivative(), g);
    UniPoly z = y - w.derivative();
    long i = 1;
    while (w.degree() > 0) {
        UniPoly h = poly_gcd(w, z);
        if (h.degree() > 0) out.emplace_back(h, i);
        w = exact_divide(w, h);
        y = exact_divide(z, h);
        z = y - w.derivative();
        ++i;
    }
    return out;
}

// Monic polynomial with the same roots, all simple.
inline UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero()) throw value_error("squarefree part of zero");
    if (p.degree() == 0) return UniPoly{Rational(1)};
    return monic(exact_divide(p, poly_gcd(p, p.derivative())));
}

namespace detail {

inline void divisors_from_factorization(const std::vector<std::pair<Int, long>>& f,
                                        std::vector<Int>& out, size_t cap = 200000) {
    out = {Int(1)};
    for (const auto& [p, e] : f) {
        size_t base = out.size();
        if (base * static_cast<size_t>(e + 1) > cap)
            throw cap_error("too many divisor candidates in rational root search");
        Int pk = 1;
        for (long k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
}

}  // namespace detail

// Exactly the rational roots, by divisor enumeration on the primitive
// integer form (u/v with u | trailing, v | leading coefficient).
inline std::set<Rational> rational_roots(const UniPoly& p) {
    if (p.is_zero()) throw value_error("rational roots of zero polynomial");
    std::set<Rational> roots;
    ZPoly z = to_primitive(squarefree_part(p)).first;
    if (z.degree() == 0) return roots;
    // strip x^k
    size_t k = 0;
    while (ring_traits<Int>::is_zero(z[k])) ++k;
    if (k > 0) {
        roots.insert(Rational(0));
        std::vector<Int> c(z.coeffs().begin() + static_cast<long>(k), z.coeffs().end());
        z = ZPoly(std::move(c));
    }
    if (z.degree() == 0) return roots;
    std::vector<Int> us, vs;
    detail::divisors_from_factorization(factor(z[0]), us);
    detail::divisors_from_factorization(factor(z.lc()), vs);
    for (const Int& v : vs) {
        for (const Int& u : us) {
            if (boost::multiprecision::gcd(u, v) != 1) continue;
            for (int sign : {1, -1}) {
                Rational cand(sign * u, v);
                if (z.degree() >= 0) {
                    // integer evaluation of z(u/v) * v^deg
                    Int acc = 0, vp = 1;
                    Int su = sign * u;
                    for (long i = z.degree(); i >= 0; --i) {
                        acc = acc * su + z[static_cast<size_t>(i)] * vp;
                        vp *= v;
                    }
                    // undo the extra v factor accumulated on the constant term
                    if (acc == 0) roots.insert(cand);
                }
            }
        }
    }
    return roots;
}

// ---------------------------------------------------------------------------
// formatting (serialization lives in json_io.hpp; this is for diagnostics)

inline std::string to_string(const UniPoly& p, const std::string& var = "x") {
    if (p.is_zero()) return "0";
    std::string s;
    for (long i = p.degree(); i >= 0; --i) {
        const Rational& c = p[static_cast<size_t>(i)];
        if (c == 0) continue;
        if (!s.empty()) s += (c > 0 ? " + " : " - ");
        else if (c < 0) s += "-";
        Rational a = c > 0 ? c : Rational(-c);
        if (a != 1 || i == 0) s += to_string(a);
        if (i > 0) {
            if (a != 1) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// AlgebraicSet: a finite subset of P^1(Qbar) cut out by a squarefree
// polynomial, plus an infinity flag.

struct AlgebraicSet {
    UniPoly defining{Rational(1)};  // squarefree monic; constant 1 = empty affine part
    bool includes_infinity = false;

    static AlgebraicSet from_poly(const UniPoly& p, bool infinity) {
        if (p.is_zero()) throw value_error("algebraic set from zero polynomial");
        AlgebraicSet s;
        s.defining = p.degree() == 0 ? UniPoly{Rational(1)} : squarefree_part(p);
        s.includes_infinity = infinity;
        return s;
    }
    bool is_empty() const { return defining.degree() <= 0 && !includes_infinity; }
};

// Split off the rational points of a squarefree polynomial: returns the
// rational roots and the (monic, squarefree) cofactor with no rational root.
inline std::pair<std::set<Rational>, UniPoly> split_rational_roots(const UniPoly& squarefree) {
    std::set<Rational> pts = rational_roots(squarefree);
    UniPoly rest = monic(squarefree);
    for (const auto& r : pts) rest = exact_divide(rest, UniPoly{-r, Rational(1)});
    return {pts, rest};
}

}  // namespace belyi
