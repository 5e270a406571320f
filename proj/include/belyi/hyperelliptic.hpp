#pragma once

#include "belyi/rational_map.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace belyi {

// y^2 = phi(x), phi squarefree of degree >= 3.
struct HyperellipticCurve {
    UniPoly phi;

    explicit HyperellipticCurve(UniPoly p) : phi(std::move(p)) {
        if (phi.degree() < 3) throw value_error("hyperelliptic model requires deg phi >= 3");
        if (squarefree_part(phi) != monic(phi)) throw value_error("phi must be squarefree");
    }
    // g = ceil(deg phi / 2) - 1
    long genus() const { return (phi.degree() + 1) / 2 - 1; }
    bool odd_model() const { return phi.degree() % 2 == 1; }
    // half-degree k for the even model (y/x^k is a unit at infinity)
    long half_degree() const { return (phi.degree() + 1) / 2; }
};

// (a + b*y)/d on y^2 = phi(x); d nonzero, gcd(a,b,d) constant.
struct HyperellipticFunction {
    UniPoly a, b, d;

    HyperellipticFunction(UniPoly a_, UniPoly b_, UniPoly d_)
        : a(std::move(a_)), b(std::move(b_)), d(std::move(d_)) {
        if (d.is_zero()) throw value_error("hyperelliptic function with zero denominator");
        normalize();
    }

    void normalize() {
        UniPoly g = poly_gcd(poly_gcd(a, b), d);
        if (g.degree() > 0) {
            a = a.is_zero() ? a : exact_divide(a, g);
            b = b.is_zero() ? b : exact_divide(b, g);
            d = exact_divide(d, g);
        }
    }

    bool is_constant() const { return b.is_zero() && d.degree() == 0 && a.degree() <= 0; }

    friend bool operator==(const HyperellipticFunction& f, const HyperellipticFunction& h) {
        // (a1 + b1 y)/d1 == (a2 + b2 y)/d2 iff a1 d2 == a2 d1 and b1 d2 == b2 d1
        return f.a * h.d == h.a * f.d && f.b * h.d == h.b * f.d;
    }
};

inline HyperellipticFunction hf_add(const HyperellipticFunction& f, const HyperellipticFunction& h) {
    return HyperellipticFunction(f.a * h.d + h.a * f.d, f.b * h.d + h.b * f.d, f.d * h.d);
}

inline HyperellipticFunction hf_mul(const HyperellipticCurve& curve, const HyperellipticFunction& f,
                                    const HyperellipticFunction& h) {
    return HyperellipticFunction(f.a * h.a + f.b * h.b * curve.phi, f.a * h.b + f.b * h.a,
                                 f.d * h.d);
}

inline HyperellipticFunction hf_conjugate(const HyperellipticFunction& f) {
    return HyperellipticFunction(f.a, -f.b, f.d);
}

// N(f) = f * conj(f) = (a^2 - b^2 phi) / d^2, a rational function of x.
inline RationalMap hf_norm(const HyperellipticCurve& curve, const HyperellipticFunction& f) {
    return RationalMap(f.a * f.a - f.b * f.b * curve.phi, f.d * f.d);
}

namespace detail {

inline constexpr long kOrdInfinity = -1;  // sentinel: the polynomial is identically zero

// Split the monic squarefree polynomial s into pairwise coprime monic
// clusters on which every root has the same multiplicity in p.
// Returns (cluster, multiplicity) pairs covering all of s; multiplicity is
// kOrdInfinity when p == 0.
inline std::vector<std::pair<UniPoly, long>> split_by_ord(UniPoly s, const UniPoly& p) {
    std::vector<std::pair<UniPoly, long>> out;
    if (s.degree() < 1) return out;
    if (p.is_zero()) {
        out.emplace_back(std::move(s), kOrdInfinity);
        return out;
    }
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        UniPoly g = poly_gcd(s, factor);
        if (g.degree() > 0) {
            out.emplace_back(g, mult);
            s = monic(exact_divide(s, g));
        }
    }
    if (s.degree() > 0) out.emplace_back(std::move(s), 0);
    return out;
}

// Refine a clustering of squarefree polynomials by another ord split.
// Each output cluster carries the accumulated ord vector.
struct Cluster {
    UniPoly support;  // monic squarefree
    std::vector<long> ords;
};

inline std::vector<Cluster> refine(const std::vector<Cluster>& in, const UniPoly& p) {
    std::vector<Cluster> out;
    for (const auto& c : in)
        for (auto& [sub, o] : split_by_ord(c.support, p)) {
            Cluster n{sub, c.ords};
            n.ords.push_back(o);
            out.push_back(std::move(n));
        }
    return out;
}

inline std::vector<Cluster> cluster_by(const UniPoly& support, const std::vector<UniPoly>& polys) {
    std::vector<Cluster> cur{Cluster{support, {}}};
    for (const auto& p : polys) cur = refine(cur, p);
    return cur;
}

}  // namespace detail

// One group of conjugate places together with a common valuation.
struct PlaceGroup {
    std::string place;  // human-readable descriptor
    long count;         // number of conjugate places in the group
    long valuation;     // common valuation of the function at each place
};

// The full divisor of (A + b*y)/d on y^2 = phi: every place where the
// valuation is nonzero, grouped by Galois-conjugate clusters.
//
// Valuation rules (x0 a finite point, ord = multiplicity of x - x0):
//   - Weierstrass x0 (phi(x0) = 0): one place, v(x-x0) = 2, v(y) = 1, so
//     v(A + b y) = min(2 ord A, 2 ord b + 1) -- opposite parities, no
//     cancellation.
//   - phi(x0) != 0: two places y = +-sqrt(phi) with
//     {v+, v-} = {alpha, m - alpha}, alpha = ord gcd(A, b),
//     m = ord(A^2 - b^2 phi): the two valuations sum to the valuation of
//     the norm, and cancellation can occur on at most one branch, pinning
//     the minimum at alpha.
//   - infinity, deg phi odd: one place, v(x) = -2, v(y) = -deg phi, so
//     v(A + b y) = -max(2 deg A, 2 deg b + deg phi) (opposite parities).
//   - infinity, deg phi = 2k: two places, v(x) = -1 and y/x^k a unit, so
//     the pole orders are {M, deg(A^2 - b^2 phi) - M} with
//     M = max(deg A, deg b + k) (same two-branch argument in 1/x).
// The b == 0 projection case falls out of the same formulas.
inline std::vector<PlaceGroup> hf_divisor(const HyperellipticCurve& curve, const UniPoly& A,
                                          const UniPoly& b, const UniPoly& d) {
    if (A.is_zero() && b.is_zero()) throw value_error("divisor of the zero function");
    std::vector<PlaceGroup> out;
    const UniPoly norm = A * A - b * b * curve.phi;
    if (norm.is_zero()) throw internal_error("vanishing norm on a squarefree model");

    // all finite places with nonzero valuation lie over roots of norm * d
    UniPoly support = squarefree_part(norm * d);
    for (auto& [wcluster, one] : detail::split_by_ord(support, curve.phi)) {
        if (one == 0) continue;  // handled below as non-Weierstrass
        // Weierstrass roots: v(d) = 2 ord d, v(A + b y) = min(2 ord A, 2 ord b + 1)
        for (const auto& c : detail::cluster_by(wcluster, {A, b, d})) {
            long ordA = c.ords[0], ordB = c.ords[1], ordD = c.ords[2];
            long vn;
            if (ordA == detail::kOrdInfinity)
                vn = 2 * ordB + 1;
            else if (ordB == detail::kOrdInfinity)
                vn = 2 * ordA;
            else
                vn = std::min(2 * ordA, 2 * ordB + 1);
            long v = vn - 2 * ordD;
            if (v != 0)
                out.push_back({"W:" + to_string(c.support), c.support.degree(), v});
        }
    }
    UniPoly nonw = support;
    {
        UniPoly g = poly_gcd(support, curve.phi);
        if (g.degree() > 0) nonw = monic(exact_divide(support, g));
    }
    const UniPoly gab = poly_gcd(A, b);
    for (const auto& c : detail::cluster_by(nonw, {gab, norm, d})) {
        long alpha = c.ords[0] == detail::kOrdInfinity ? 0 : c.ords[0];
        long m = c.ords[1];
        long ordD = c.ords[2];
        long vplus = alpha - ordD;
        long vminus = (m - alpha) - ordD;
        if (vplus != 0) out.push_back({"+:" + to_string(c.support), c.support.degree(), vplus});
        if (vminus != 0) out.push_back({"-:" + to_string(c.support), c.support.degree(), vminus});
    }

    long degA = A.degree(), degB = b.degree(), degD = d.degree();
    if (curve.odd_model()) {
        long wn;  // pole order of A + b y at the single infinite place
        if (A.is_zero())
            wn = 2 * degB + curve.phi.degree();
        else if (b.is_zero())
            wn = 2 * degA;
        else
            wn = std::max(2 * degA, 2 * degB + curve.phi.degree());
        long v = 2 * degD - wn;
        if (v != 0) out.push_back({"inf", 1, v});
    } else {
        long k = curve.half_degree();
        long M = A.is_zero() ? degB + k : (b.is_zero() ? degA : std::max(degA, degB + k));
        long w1 = M, w2 = norm.degree() - M;
        if (degD - w1 != 0) out.push_back({"inf+", 1, degD - w1});
        if (degD - w2 != 0) out.push_back({"inf-", 1, degD - w2});
    }
    return out;
}

inline std::vector<PlaceGroup> hf_divisor(const HyperellipticCurve& curve,
                                          const HyperellipticFunction& f) {
    return hf_divisor(curve, f.a, f.b, f.d);
}

// [K : Q(f)] = degree of the polar divisor of f.
inline long hf_degree(const HyperellipticCurve& curve, const HyperellipticFunction& f) {
    if (f.is_constant()) throw value_error("degree of a constant function");
    long deg = 0;
    for (const auto& g : hf_divisor(curve, f))
        if (g.valuation < 0) deg += g.count * (-g.valuation);
    return deg;
}

struct PlacePassport {
    std::optional<Rational> value;  // nullopt = infinity
    std::vector<PlaceGroup> entries;
    std::vector<long> partition;  // ramification indices, sorted descending
};

// Ramification data of the fiber of f over t (nullopt = infinity): places
// where f = t together with the local indices e = v(f - t) (pole orders for
// t = infinity).
inline PlacePassport fiber_passport(const HyperellipticCurve& curve,
                                    const HyperellipticFunction& f, std::optional<Rational> t) {
    if (f.is_constant()) throw value_error("fiber of a constant function");
    PlacePassport pp;
    pp.value = t;
    std::vector<PlaceGroup> div =
        t ? hf_divisor(curve, f.a - f.d * (*t), f.b, f.d) : hf_divisor(curve, f);
    for (const auto& g : div) {
        long e = t ? g.valuation : -g.valuation;
        if (e <= 0) continue;
        pp.entries.push_back({g.place, g.count, e});
        for (long i = 0; i < g.count; ++i) pp.partition.push_back(e);
    }
    std::sort(pp.partition.rbegin(), pp.partition.rend());
    long sum = 0;
    for (long e : pp.partition) sum += e;
    if (sum != hf_degree(curve, f)) throw internal_error("fiber degree does not sum to deg f");
    return pp;
}

// F_t(x) = (t d(x) - a(x))^2 - b(x)^2 phi(x), as a polynomial in x with
// coefficients in Q[t]; for generic t its x-roots carry the affine fiber.
inline BiPoly fiber_polynomial(const HyperellipticCurve& curve, const HyperellipticFunction& f) {
    UniPoly c2 = f.d * f.d;
    UniPoly c1 = f.a * f.d * Rational(-2);
    UniPoly c0 = f.a * f.a - f.b * f.b * curve.phi;
    long n = std::max({c2.degree(), c1.degree(), c0.degree()});
    std::vector<UniPoly> cx(static_cast<size_t>(n) + 1);
    for (long i = 0; i <= n; ++i)
        cx[static_cast<size_t>(i)] = UniPoly{c0[static_cast<size_t>(i)], c1[static_cast<size_t>(i)],
                                             c2[static_cast<size_t>(i)]};
    return BiPoly(std::move(cx));
}

struct HyperBranchReport {
    long degree = 0;
    long genus = 0;
    std::set<Rational> branch_values;       // finite rational branch values, confirmed
    bool infinity_branched = false;
    AlgebraicSet irrational_branch_values;  // empty when the budget is exhausted
    std::map<std::string, PlacePassport> passports;  // keyed "0", "1", "inf" when requested
    bool is_belyi = false;
};

namespace detail {

inline long excess(const PlacePassport& pp) {
    long s = 0;
    for (long e : pp.partition) s += e - 1;
    return s;
}

}  // namespace detail

// Branch values of f.  For b != 0 the candidates are the roots of the
// squarefree part of D(t) = disc_x of the fiber polynomial with its
// x-content removed: any ramification in the fiber over t0 -- at a finite
// place, at a place hiding over a root of d, or at infinity (which forces
// the leading x-coefficient, hence a whole Sylvester column, to vanish) --
// makes D(t0) = 0.  For b == 0 the map factors through the x-projection
// r = a/d, and the candidates are the branch values of r plus the values of
// r at the Weierstrass locus (where the double cover always ramifies).
// Rational candidates are confirmed against their fiber passports.  The
// irrational cofactor is certified spurious (and dropped) when the
// confirmed fibers already exhaust the Riemann-Hurwitz budget
// 2g - 2 + 2 deg f; otherwise it is reported as-is.
inline HyperBranchReport branch_locus_hyper(const HyperellipticCurve& curve,
                                            const HyperellipticFunction& f) {
    if (f.is_constant()) throw value_error("branch locus of a constant function");
    HyperBranchReport rep;
    rep.degree = hf_degree(curve, f);
    rep.genus = curve.genus();

    std::set<Rational> candidates;
    UniPoly irrational{Rational(1)};
    if (!f.b.is_zero()) {
        UniPoly c2 = f.d * f.d;
        UniPoly c1 = f.a * f.d * Rational(-2);
        UniPoly c0 = f.a * f.a - f.b * f.b * curve.phi;
        UniPoly content = poly_gcd(poly_gcd(c2, c1), c0);
        if (content.degree() > 0) {
            c2 = exact_divide(c2, content);
            c1 = exact_divide(c1, content);
            c0 = exact_divide(c0, content);
        }
        long n = std::max({c2.degree(), c1.degree(), c0.degree()});
        std::vector<UniPoly> cx(static_cast<size_t>(n) + 1);
        for (long i = 0; i <= n; ++i)
            cx[static_cast<size_t>(i)] =
                UniPoly{c0[static_cast<size_t>(i)], c1[static_cast<size_t>(i)],
                        c2[static_cast<size_t>(i)]};
        BiPoly F(std::move(cx));
        if (F.degree() < 1) throw internal_error("degenerate fiber polynomial");
        UniPoly disc_t =
            F.degree() >= 2 ? resultant_bivariate(F, F.derivative()) : UniPoly{Rational(1)};
        if (disc_t.is_zero()) throw internal_error("identically vanishing fiber discriminant");
        if (disc_t.degree() >= 1) {
            auto [pts, rest] = split_rational_roots(squarefree_part(disc_t));
            candidates = std::move(pts);
            irrational = rest;
        }
    } else {
        RationalMap r(f.a, f.d);
        BranchReport base = branch_locus(r);
        candidates = base.branch_values;
        irrational = base.irrational_branch_values.defining;
        // values of r over the Weierstrass locus: t with Res_x(phi, a - t d) = 0
        std::vector<UniPoly> cx(static_cast<size_t>(std::max(f.a.degree(), f.d.degree())) + 1);
        for (size_t i = 0; i < cx.size(); ++i)
            cx[i] = UniPoly{f.a[i], -f.d[i]};
        BiPoly A(std::move(cx));
        std::vector<UniPoly> px(static_cast<size_t>(curve.phi.degree()) + 1);
        for (size_t i = 0; i < px.size(); ++i) px[i] = UniPoly{curve.phi[i]};
        UniPoly wvals = resultant_bivariate(BiPoly(std::move(px)), A);
        if (wvals.is_zero()) throw internal_error("vanishing Weierstrass-value resultant");
        if (wvals.degree() >= 1) {
            auto [pts, rest] = split_rational_roots(squarefree_part(wvals));
            for (const auto& t : pts) candidates.insert(t);
            irrational = squarefree_part(irrational * rest);
        }
        // value of r at x = infinity (the fiber polynomial degree argument
        // does not see it when deg_x(a - t d) stays at 1)
        if (f.a.degree() < f.d.degree())
            candidates.insert(Rational(0));
        else if (f.a.degree() == f.d.degree())
            candidates.insert(f.a.lc() / f.d.lc());
    }

    long budget = 2 * rep.genus - 2 + 2 * rep.degree;
    long used = 0;
    PlacePassport inf_pp = fiber_passport(curve, f, std::nullopt);
    rep.infinity_branched = detail::excess(inf_pp) > 0;
    used += detail::excess(inf_pp);
    for (const auto& t : candidates) {
        PlacePassport pp = fiber_passport(curve, f, t);
        long ex = detail::excess(pp);
        if (ex > 0) {
            rep.branch_values.insert(t);
            used += ex;
        }
    }
    if (used > budget) throw internal_error("ramification exceeds the Riemann-Hurwitz budget");
    if (used == budget || irrational.degree() < 1)
        rep.irrational_branch_values = AlgebraicSet{UniPoly{Rational(1)}, false};
    else
        rep.irrational_branch_values = AlgebraicSet{monic(irrational), false};
    return rep;
}

// Belyi check with the Riemann-Hurwitz budget: sum of (e-1) over the fibers
// of 0, 1, infinity equals 2g - 2 + 2 deg f exactly when no other fiber
// ramifies.
inline HyperBranchReport is_belyi_hyper(const HyperellipticCurve& curve,
                                        const HyperellipticFunction& f) {
    HyperBranchReport rep = branch_locus_hyper(curve, f);
    rep.passports["0"] = fiber_passport(curve, f, Rational(0));
    rep.passports["1"] = fiber_passport(curve, f, Rational(1));
    rep.passports["inf"] = fiber_passport(curve, f, std::nullopt);
    long special = detail::excess(rep.passports["0"]) + detail::excess(rep.passports["1"]) +
                   detail::excess(rep.passports["inf"]);
    rep.is_belyi = special == 2 * rep.genus - 2 + 2 * rep.degree;
    bool locus_ok = rep.irrational_branch_values.is_empty();
    for (const auto& t : rep.branch_values)
        if (t != 0 && t != 1) locus_ok = false;
    if (rep.is_belyi != locus_ok)
        throw internal_error("hyperelliptic budget disagrees with the computed branch locus");
    return rep;
}

// A candidate automorphism of y^2 = phi(x):
//   x -> (alpha x + beta)/(gamma x + delta),  y -> c y / (gamma x + delta)^k
// with k = ceil(deg phi / 2).
struct CurveAutomorphism {
    Rational alpha, beta, gamma, delta, c;
};

inline CurveAutomorphism hyperelliptic_involution() {
    return CurveAutomorphism{Rational(1), Rational(0), Rational(0), Rational(1), Rational(-1)};
}

namespace detail {

// p((alpha x + beta)/(gamma x + delta)) * (gamma x + delta)^e, e >= deg p.
inline UniPoly homogeneous_substitute(const UniPoly& p, const CurveAutomorphism& s, long e) {
    if (e < p.degree()) throw internal_error("homogenization exponent too small");
    UniPoly up{s.beta, s.alpha};
    UniPoly vp{s.delta, s.gamma};
    UniPoly acc;
    UniPoly vpow{Rational(1)};
    std::vector<UniPoly> upows{UniPoly{Rational(1)}};
    for (long i = 1; i <= e; ++i) upows.push_back(upows.back() * up);
    for (long i = e; i >= 0; --i) {
        acc = acc + upows[static_cast<size_t>(i)] * vpow * UniPoly{p[static_cast<size_t>(i)]};
        vpow = vpow * vp;
    }
    return acc;
}

}  // namespace detail

// Checks the candidate maps the curve to itself:
// phi(mu(x)) (gamma x + delta)^(2k) == c^2 phi(x).
inline bool is_curve_automorphism(const HyperellipticCurve& curve, const CurveAutomorphism& s) {
    if (s.alpha * s.delta - s.beta * s.gamma == 0 || s.c == 0) return false;
    long k = curve.half_degree();
    UniPoly lhs = detail::homogeneous_substitute(curve.phi, s, 2 * k);
    return lhs == curve.phi * (s.c * s.c);
}

struct AutomorphismReport {
    std::vector<size_t> fixing;      // indices of candidates with f o sigma = f
    bool involution_fixes_f = false;
};

// Candidate-list decision: for each candidate sigma (the hyperelliptic
// involution is always included first), decide exactly whether f o sigma = f
// as elements of the function field.
inline AutomorphismReport automorphism_candidates_check(
    const HyperellipticCurve& curve, const HyperellipticFunction& f,
    const std::vector<CurveAutomorphism>& candidates = {}) {
    std::vector<CurveAutomorphism> all{hyperelliptic_involution()};
    all.insert(all.end(), candidates.begin(), candidates.end());
    AutomorphismReport rep;
    long k = curve.half_degree();
    for (size_t i = 0; i < all.size(); ++i) {
        const CurveAutomorphism& s = all[i];
        if (!is_curve_automorphism(curve, s))
            throw value_error("candidate does not preserve the curve");
        long L = std::max({f.a.degree(), f.b.degree() + k, f.d.degree()});
        UniPoly abar = detail::homogeneous_substitute(f.a, s, L);
        UniPoly bbar = detail::homogeneous_substitute(f.b, s, L - k) * s.c;
        UniPoly dbar = detail::homogeneous_substitute(f.d, s, L);
        // f o sigma = (abar + bbar y)/dbar; equality with f componentwise
        bool fixes = abar * f.d == f.a * dbar && bbar * f.d == f.b * dbar;
        if (fixes) rep.fixing.push_back(i);
        if (i == 0) rep.involution_fixes_f = fixes;
    }
    return rep;
}

}  // namespace belyi
