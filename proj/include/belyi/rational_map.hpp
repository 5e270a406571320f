#pragma once

#include "belyi/unipoly.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace belyi {

// A non-constant rational map P/Q on the projective line, kept in lowest
// terms (gcd(P, Q) constant).
struct RationalMap {
    UniPoly num;
    UniPoly den;

    RationalMap(UniPoly p, UniPoly q) : num(std::move(p)), den(std::move(q)) {
        if (den.is_zero()) throw value_error("rational map with zero denominator");
        if (num.degree() < 1 && den.degree() < 1) throw value_error("constant rational map");
        UniPoly g = poly_gcd(num, den);
        if (g.degree() > 0) {
            num = exact_divide(num, g);
            den = exact_divide(den, g);
        }
    }
    explicit RationalMap(UniPoly p) : RationalMap(std::move(p), UniPoly{Rational(1)}) {}

    friend bool operator==(const RationalMap& a, const RationalMap& b) {
        // equality as maps: cross-multiplied coefficients proportional
        return a.num * b.den == b.num * a.den;
    }
};

inline long map_degree(const RationalMap& f) { return std::max(f.num.degree(), f.den.degree()); }

// Multiplicity multiset (sorted descending) of the roots of p, rational or
// not, plus an extra part `at_infinity` when positive.
inline std::vector<long> root_multiplicities(const UniPoly& p, long at_infinity) {
    std::vector<long> parts;
    if (!p.is_zero())
        for (const auto& [f, m] : squarefree_decomposition(p))
            for (long i = 0; i < f.degree(); ++i) parts.push_back(m);
    if (at_infinity > 0) parts.push_back(at_infinity);
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

// Ramification partition of the fiber over t (std::nullopt = infinity):
// multiplicities of the roots of num - t*den (resp. den), plus the point at
// x = infinity with index deg f - deg(num - t*den) (resp. deg f - deg den)
// when positive.
inline std::vector<long> passport_over(const RationalMap& f, std::optional<Rational> t) {
    long n = map_degree(f);
    UniPoly fiber = t ? f.num - f.den * (*t) : f.den;
    return root_multiplicities(fiber, n - fiber.degree());
}

struct BranchReport {
    long degree = 0;
    std::set<Rational> branch_values;       // finite rational branch values
    bool infinity_branched = false;         // the fiber over infinity is ramified
    AlgebraicSet irrational_branch_values;  // defining polynomial of the rest
    std::map<std::string, std::vector<long>> passports;  // keyed "0", "1", "inf"
    bool is_belyi = false;
    bool rh_consistent = false;  // sum of (e-1) over all fibers == 2 deg - 2
};

namespace detail {

inline long excess(const std::vector<long>& partition) {
    long s = 0;
    for (long e : partition) s += e - 1;
    return s;
}

// num - y*den as a polynomial in x with coefficients in Q[y].
inline BiPoly generic_fiber(const RationalMap& f) {
    long n = map_degree(f);
    std::vector<UniPoly> cx(static_cast<size_t>(n) + 1);
    for (long i = 0; i <= n; ++i)
        cx[static_cast<size_t>(i)] = UniPoly{f.num[static_cast<size_t>(i)],
                                             -f.den[static_cast<size_t>(i)]};
    return BiPoly(std::move(cx));
}

}  // namespace detail

// Finite branch values are the roots of the squarefree part of
// disc_x(num - y*den) as a polynomial in y (content in y stripped inside the
// bivariate resultant); infinity is branched iff its fiber carries an index
// >= 2.  Rational candidates are confirmed against their fiber partition,
// which also weeds out spurious roots coming from leading-coefficient drop.
inline BranchReport branch_locus(const RationalMap& f) {
    BranchReport rep;
    rep.degree = map_degree(f);
    BiPoly F = detail::generic_fiber(f);
    UniPoly disc_y;
    if (F.degree() >= 2)
        disc_y = resultant_bivariate(F, F.derivative());
    else
        disc_y = UniPoly{Rational(1)};
    std::set<Rational> candidates;
    UniPoly irrational{Rational(1)};
    if (disc_y.is_zero()) throw internal_error("identically zero discriminant for a nonconstant map");
    if (disc_y.degree() >= 1) {
        auto [pts, rest] = split_rational_roots(squarefree_part(disc_y));
        candidates = std::move(pts);
        irrational = std::move(rest);
    }
    // the leading coefficient of F can vanish at one rational value; the
    // point at x = infinity may ramify there even if no finite root does
    if (f.num.degree() == f.den.degree())
        candidates.insert(f.num.lc() / f.den.lc());
    for (const auto& t : candidates)
        if (detail::excess(passport_over(f, t)) > 0) rep.branch_values.insert(t);
    rep.infinity_branched = detail::excess(passport_over(f, std::nullopt)) > 0;
    rep.irrational_branch_values = AlgebraicSet{irrational, false};
    return rep;
}

// Belyi check by ramification budget: over genus 0 the total excess
// sum (e-1) across all fibers equals exactly 2 deg - 2, so the map is
// unramified outside {0,1,inf} iff those three fibers already exhaust it.
inline BranchReport is_belyi(const RationalMap& f) {
    BranchReport rep = branch_locus(f);
    long n = rep.degree;
    rep.passports["0"] = passport_over(f, Rational(0));
    rep.passports["1"] = passport_over(f, Rational(1));
    rep.passports["inf"] = passport_over(f, std::nullopt);
    long special = detail::excess(rep.passports["0"]) + detail::excess(rep.passports["1"]) +
                   detail::excess(rep.passports["inf"]);
    rep.is_belyi = special == 2 * n - 2;
    // cross-check against the reported branch locus
    bool locus_ok = rep.irrational_branch_values.is_empty();
    for (const auto& t : rep.branch_values)
        if (t != 0 && t != 1) locus_ok = false;
    if (rep.is_belyi != locus_ok)
        throw internal_error("ramification budget disagrees with the computed branch locus");
    rep.rh_consistent = true;  // established by the budget identity above
    return rep;
}

// f(g): substitute g = u/v into f = P/Q and clear denominators.
inline RationalMap compose(const RationalMap& f, const RationalMap& g) {
    long n = map_degree(f);
    auto lift = [&](const UniPoly& p) {
        // p(u/v) * v^n
        UniPoly acc;
        UniPoly vpow{Rational(1)};
        std::vector<UniPoly> upows{UniPoly{Rational(1)}};
        for (long i = 1; i <= n; ++i) upows.push_back(upows.back() * g.num);
        for (long i = n; i >= 0; --i) {
            acc = acc + upows[static_cast<size_t>(i)] * vpow * UniPoly{p[static_cast<size_t>(i)]};
            vpow = vpow * g.den;
        }
        return acc;
    };
    return RationalMap(lift(f.num), lift(f.den));
}

}  // namespace belyi
