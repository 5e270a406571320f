#include "belyi/rational_map.hpp"

#include "test_helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace belyi;
using namespace belyi::testing;

namespace {

RationalMap poly_map(std::vector<long> coeffs) { return RationalMap(P(std::move(coeffs))); }

long excess_sum(const RationalMap& f) {
    // independent Riemann-Hurwitz oracle: every finite point contributes
    // (e-1) = its multiplicity as a root of the Wronskian W = P'Q - PQ',
    // and the point at x = infinity contributes its own index minus one.
    UniPoly w = f.num.derivative() * f.den - f.num * f.den.derivative();
    long total = w.degree();  // counts all finite (e-1) with multiplicity
    long n = map_degree(f);
    long einf;
    if (f.num.degree() > f.den.degree())
        einf = f.num.degree() - f.den.degree();
    else if (f.num.degree() < f.den.degree())
        einf = f.den.degree() - f.num.degree();
    else {
        Rational t0 = f.num.lc() / f.den.lc();
        einf = n - (f.num - f.den * t0).degree();
    }
    return total + (einf - 1);
}

}  // namespace

TEST_CASE("map_degree") {
    CHECK(map_degree(poly_map({0, 0, 1})) == 2);
    CHECK(map_degree(poly_map({0, 4, -4})) == 2);
    CHECK(map_degree(RationalMap(P({1, 0, 0, 1}), P({0, 1}))) == 3);
    CHECK_THROWS_AS(RationalMap(P({5}), P({2})), value_error);
    CHECK_THROWS_AS(RationalMap(P({1, 1}), UniPoly()), value_error);
}

TEST_CASE("rational map reduces to lowest terms") {
    RationalMap f(P({0, 1}) * P({1, 1}), P({1, 1}));
    CHECK(f.num == P({0, 1}));
    CHECK(f.den == P({1}));
}

TEST_CASE("passport_over examples") {
    CHECK(passport_over(poly_map({0, 0, 1}), Rational(0)) == std::vector<long>{2});
    CHECK(passport_over(poly_map({0, 4, -4}), Rational(1)) == std::vector<long>{2});
    CHECK(passport_over(poly_map({0, 0, 1}), Rational(4)) == std::vector<long>{1, 1});
    CHECK(passport_over(poly_map({0, 0, 1}), std::nullopt) == std::vector<long>{2});
    // fiber with an irrational double root: (x^2-2)^2 over 0
    UniPoly q = P({-2, 0, 1});
    CHECK(passport_over(RationalMap(q * q), Rational(0)) == std::vector<long>{2, 2});
}

TEST_CASE("branch_locus examples") {
    auto r1 = branch_locus(poly_map({0, 0, 1}));  // x^2
    CHECK(r1.branch_values == std::set<Rational>{Q(0)});
    CHECK(r1.infinity_branched);
    CHECK(r1.irrational_branch_values.is_empty());

    auto r2 = branch_locus(poly_map({0, 4, -4}));  // 4x(1-x)
    CHECK(r2.branch_values == std::set<Rational>{Q(1)});
    CHECK(r2.infinity_branched);

    auto r3 = branch_locus(poly_map({0, -3, 0, 1}));  // x^3-3x
    CHECK(r3.branch_values == std::set<Rational>{Q(2), Q(-2)});
    CHECK(r3.infinity_branched);
    CHECK(r3.irrational_branch_values.is_empty());

    // x^3 - x: critical values +-2/(3 sqrt 3), irrational
    auto r4 = branch_locus(poly_map({0, -1, 0, 1}));
    CHECK(r4.branch_values.empty());
    CHECK(!r4.irrational_branch_values.is_empty());
    CHECK(r4.irrational_branch_values.defining.degree() == 2);
}

TEST_CASE("is_belyi examples") {
    CHECK(is_belyi(poly_map({0, 0, 1})).is_belyi);

    // beta_{1,2} = (27/4) x (1-x)^2
    UniPoly beta = P({0, 1}) * P({1, -1}) * P({1, -1});
    std::vector<Rational> c;
    for (const auto& a : beta.coeffs()) c.push_back(a * Rational(27, 4));
    auto rep = is_belyi(RationalMap(UniPoly(c)));
    CHECK(rep.is_belyi);
    CHECK(rep.passports["0"] == std::vector<long>{2, 1});
    CHECK(rep.passports["1"] == std::vector<long>{2, 1});
    CHECK(rep.passports["inf"] == std::vector<long>{3});

    CHECK(!is_belyi(poly_map({0, -3, 0, 1})).is_belyi);
}

TEST_CASE("passport sums and Riemann-Hurwitz on random maps") {
    Rng rng(1111);
    int done = 0;
    while (done < 100) {
        UniPoly p = rng.poly(rng.integer(1, 4));
        UniPoly q = rng.poly(rng.integer(0, 3));
        if (q.is_zero() || poly_gcd(p, q).degree() > 0) continue;
        RationalMap f(p, q);
        Rational t = rng.rational(5, 3);
        std::vector<long> part = passport_over(f, t);
        long sum = 0;
        for (long e : part) sum += e;
        CHECK(sum == map_degree(f));
        // full branch report agrees with the Wronskian excess oracle
        CHECK(excess_sum(f) == 2 * map_degree(f) - 2);
        ++done;
    }
}

TEST_CASE("budget-based is_belyi agrees with a direct fiber scan") {
    // scan candidate values from the branch report and confirm only 0,1,inf
    // are ramified exactly when is_belyi says so
    Rng rng(2222);
    int done = 0;
    while (done < 30) {
        UniPoly p = rng.poly(rng.integer(1, 3));
        UniPoly q = rng.poly(rng.integer(0, 2));
        if (q.is_zero() || poly_gcd(p, q).degree() > 0) continue;
        RationalMap f(p, q);
        auto rep = is_belyi(f);  // throws internal_error on any inconsistency
        bool outside = !rep.irrational_branch_values.is_empty();
        for (const auto& t : rep.branch_values)
            if (t != 0 && t != 1) outside = true;
        CHECK(rep.is_belyi == !outside);
        ++done;
    }
}

TEST_CASE("Moebius invariance of the branch locus") {
    Rng rng(3333);
    int done = 0;
    while (done < 20) {
        UniPoly p = rng.poly(rng.integer(1, 3));
        UniPoly q = rng.poly(rng.integer(0, 2));
        if (q.is_zero() || poly_gcd(p, q).degree() > 0) continue;
        RationalMap f(p, q);
        // precompose with a random degree-1 map
        Rational a = rng.rational(4, 2), b = rng.rational(4, 2);
        if (a == 0) continue;
        RationalMap mu(UniPoly{b, a});
        RationalMap fm = compose(f, mu);
        auto r1 = branch_locus(f);
        auto r2 = branch_locus(fm);
        CHECK(r1.branch_values == r2.branch_values);
        CHECK(r1.infinity_branched == r2.infinity_branched);
        CHECK(r1.irrational_branch_values.defining == r2.irrational_branch_values.defining);
        ++done;
    }
}

TEST_CASE("postcomposition with maps permuting {0,1,inf} preserves is_belyi") {
    UniPoly beta = P({0, 4, -4});  // 4x(1-x), Belyi
    RationalMap f(beta);
    // 1-x, 1/x, 1/(1-x), x/(x-1), (x-1)/x
    std::vector<RationalMap> s3 = {
        RationalMap(P({1, -1})),
        RationalMap(P({1}), P({0, 1})),
        RationalMap(P({1}), P({1, -1})),
        RationalMap(P({0, 1}), P({-1, 1})),
        RationalMap(P({-1, 1}), P({0, 1})),
    };
    for (const auto& mu : s3) CHECK(is_belyi(compose(mu, f)).is_belyi);
    RationalMap g(P({0, -3, 0, 1}));  // not Belyi
    for (const auto& mu : s3) CHECK(!is_belyi(compose(mu, g)).is_belyi);
}

TEST_CASE("compose agrees with pointwise evaluation") {
    Rng rng(4444);
    for (int i = 0; i < 20; ++i) {
        UniPoly p = rng.poly(rng.integer(1, 3)), q = rng.poly(rng.integer(0, 2));
        UniPoly u = rng.poly(rng.integer(1, 2)), v = rng.poly(rng.integer(0, 1));
        if (q.is_zero() || v.is_zero()) continue;
        if (poly_gcd(p, q).degree() > 0 || poly_gcd(u, v).degree() > 0) continue;
        RationalMap f(p, q), g(u, v);
        RationalMap h = compose(f, g);
        for (long x0 = -3; x0 <= 3; ++x0) {
            Rational x(x0);
            if (v.eval(x) == 0 || h.den.eval(x) == 0) continue;
            Rational gx = u.eval(x) / v.eval(x);
            if (q.eval(gx) == 0) continue;
            CHECK(h.num.eval(x) / h.den.eval(x) == p.eval(gx) / q.eval(gx));
        }
    }
}
