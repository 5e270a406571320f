#include "belyi/unipoly.hpp"

#include "test_helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace belyi;
using namespace belyi::testing;

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("207646/6561") == Rational(207646, 6561));
    CHECK(parse_rational("-3") == Rational(-3));
    CHECK(to_string(Rational(4, 2)) == "2");
    CHECK(to_string(Rational(-1, 3)) == "-1/3");
    CHECK_THROWS_AS(parse_rational("1/0"), value_error);
    CHECK_THROWS_AS(parse_rational("abc"), value_error);
}

TEST_CASE("poly_gcd on the named examples") {
    // (x^2-1, x-1) -> x-1
    CHECK(poly_gcd(P({-1, 0, 1}), P({-1, 1})) == P({-1, 1}));
    // (x^2+1, x^2+2) -> 1
    CHECK(poly_gcd(P({1, 0, 1}), P({2, 0, 1})) == P({1}));
    // (x^3-x, x^2-1) -> x^2-1, oracle: divides both inputs
    UniPoly g = poly_gcd(P({0, -1, 0, 1}), P({-1, 0, 1}));
    CHECK(g == P({-1, 0, 1}));
    CHECK(divrem(P({0, -1, 0, 1}), g).second.is_zero());
    CHECK(divrem(P({-1, 0, 1}), g).second.is_zero());
    CHECK(poly_gcd(UniPoly(), UniPoly()).is_zero());
}

TEST_CASE("poly_gcd divides both inputs and is divided by common divisors") {
    Rng rng(101);
    for (int i = 0; i < 60; ++i) {
        UniPoly common = rng.poly(rng.integer(0, 2));
        UniPoly p = rng.poly(rng.integer(0, 3)) * common;
        UniPoly q = rng.poly(rng.integer(0, 3)) * common;
        if (p.is_zero() || q.is_zero()) continue;
        UniPoly g = poly_gcd(p, q);
        CHECK(divrem(p, g).second.is_zero());
        CHECK(divrem(q, g).second.is_zero());
        CHECK(divrem(g, monic(common)).second.is_zero());
    }
}

TEST_CASE("resultant on the named examples") {
    // Res(x-3, x^2-2) = q(3) = 7
    CHECK(resultant(P({-3, 1}), P({-2, 0, 1})) == Q(7));
    CHECK(resultant(P({-2, 0, 1}), P({-2, 0, 1})) == Q(0));
    // Res(x^2-2, x^2-3): oracle = prod of root differences (sqrt2 +- sqrt3)
    // pairwise: ((2-3))^2 = 1, frozen
    CHECK(resultant(P({-2, 0, 1}), P({-3, 0, 1})) == Q(1));
    CHECK_THROWS_AS(resultant(UniPoly(), P({1, 1})), value_error);
}

TEST_CASE("resultant vs product over roots on split polynomials") {
    Rng rng(202);
    for (int i = 0; i < 40; ++i) {
        // oracle: for monic split p, q: Res(p,q) = prod q(root of p)
        UniPoly p = rng.split_poly(rng.integer(1, 3));
        UniPoly q = rng.poly(rng.integer(1, 3));
        std::set<Rational> roots = rational_roots(p);
        // use distinct-root p only, multiplicity handling via set would be wrong
        if (static_cast<long>(roots.size()) != p.degree()) continue;
        // Res(p,q) = lc(p)^deg q * prod q(alpha_i); lc(p) = 1 here
        Rational prod(1);
        for (const auto& r : roots) prod = prod * q.eval(r);
        CHECK(resultant(p, q) == prod);
    }
}

TEST_CASE("resultant multiplicativity Res(p, q*r) = Res(p,q)*Res(p,r)") {
    Rng rng(303);
    for (int i = 0; i < 40; ++i) {
        UniPoly p = rng.poly(rng.integer(1, 3));
        UniPoly q = rng.poly(rng.integer(1, 3));
        UniPoly r = rng.poly(rng.integer(1, 3));
        CHECK(resultant(p, q * r) == resultant(p, q) * resultant(p, r));
    }
}

TEST_CASE("resultant zero iff nontrivial gcd") {
    Rng rng(404);
    for (int i = 0; i < 40; ++i) {
        UniPoly p = rng.poly(rng.integer(1, 3));
        UniPoly q = rng.poly(rng.integer(1, 3));
        bool planted = i % 2 == 0;
        if (planted) {
            UniPoly common = rng.poly(1);
            p = p * common;
            q = q * common;
        }
        bool res_zero = resultant(p, q) == 0;
        bool gcd_nontrivial = poly_gcd(p, q).degree() >= 1;
        CHECK(res_zero == gcd_nontrivial);
        if (planted) CHECK(res_zero);
    }
}

TEST_CASE("discriminant on the named examples") {
    // quadratic b^2 - 4c
    CHECK(discriminant(P({6, -5, 1})) == Q(1));
    // depressed cubic -4a^3 - 27b^2: x^3 - x -> 4
    CHECK(discriminant(P({0, -1, 0, 1})) == Q(4));
    // multiple root
    CHECK(discriminant(P({1, -2, 1}) * P({0, 1})) == Q(0));
    CHECK_THROWS_AS(discriminant(P({5})), value_error);
}

TEST_CASE("discriminant of split monic = product of squared root differences") {
    Rng rng(505);
    for (int i = 0; i < 30; ++i) {
        long n = rng.integer(2, 4);
        std::vector<Rational> roots;
        UniPoly p{Rational(1)};
        for (long j = 0; j < n; ++j) {
            Rational r = rng.rational(6, 3);
            roots.push_back(r);
            p = p * UniPoly{-r, Rational(1)};
        }
        Rational expect(1);
        for (size_t a = 0; a < roots.size(); ++a)
            for (size_t b = a + 1; b < roots.size(); ++b)
                expect = expect * (roots[a] - roots[b]) * (roots[a] - roots[b]);
        CHECK(discriminant(p) == expect);
    }
}

TEST_CASE("squarefree_part on the named examples") {
    CHECK(squarefree_part(P({1, -2, 1}) * P({2, 1})) == monic(P({-1, 1}) * P({2, 1})));
    CHECK(squarefree_part(P({-2, 0, 1})) == P({-2, 0, 1}));
    // x^4 - 2x^2 + 1 -> x^2 - 1, oracle p / gcd(p, p')
    UniPoly p = P({1, 0, -2, 0, 1});
    UniPoly oracle = monic(exact_divide(p, poly_gcd(p, p.derivative())));
    CHECK(oracle == P({-1, 0, 1}));
    CHECK(squarefree_part(p) == oracle);
}

TEST_CASE("squarefree_part has nonzero discriminant") {
    Rng rng(606);
    for (int i = 0; i < 40; ++i) {
        UniPoly p = rng.poly(rng.integer(1, 3));
        if (i % 2 == 0) p = p * p * rng.poly(1);
        UniPoly s = squarefree_part(p);
        if (s.degree() >= 1) CHECK(discriminant(s) != 0);
    }
}

TEST_CASE("squarefree decomposition reconstructs the input") {
    Rng rng(707);
    for (int i = 0; i < 30; ++i) {
        UniPoly p = rng.poly(rng.integer(1, 2));
        UniPoly q = rng.poly(1);
        UniPoly prod = p * q * q;
        auto dec = squarefree_decomposition(prod);
        UniPoly rebuilt = UniPoly{prod.lc()};
        for (const auto& [f, m] : dec) rebuilt = rebuilt * pow_poly(f, static_cast<unsigned long>(m));
        CHECK(rebuilt == prod);
    }
}

TEST_CASE("rational_roots on the named examples") {
    CHECK(rational_roots(P({1, -3, 2})) == std::set<Rational>{Q(1), Q(1, 2)});
    CHECK(rational_roots(P({-2, 0, 1})).empty());
    // x^3 - 6x^2 + 11x - 6: oracle = scan all small candidates
    UniPoly p = P({-6, 11, -6, 1});
    std::set<Rational> oracle;
    for (long u = -20; u <= 20; ++u)
        for (long v = 1; v <= 20; ++v)
            if (p.eval(Rational(u, v)) == 0) oracle.insert(Rational(u, v));
    CHECK(oracle == std::set<Rational>{Q(1), Q(2), Q(3)});
    CHECK(rational_roots(p) == oracle);
}

TEST_CASE("rational_roots finds planted roots") {
    Rng rng(808);
    for (int i = 0; i < 30; ++i) {
        std::set<Rational> planted;
        UniPoly p{Rational(1)};
        long n = rng.integer(1, 4);
        for (long j = 0; j < n; ++j) {
            Rational r = rng.rational(8, 5);
            planted.insert(r);
            p = p * UniPoly{-r, Rational(1)};
        }
        if (i % 3 == 0) p = p * P({1, 0, 1});  // irrational (complex) factor
        CHECK(rational_roots(p) == planted);
    }
}

TEST_CASE("bivariate resultant agrees with specialization") {
    // Res_x of p(x) - y and p'(x), evaluated at y0, equals the univariate
    // resultant of p - y0 and p'.
    Rng rng(909);
    for (int i = 0; i < 20; ++i) {
        UniPoly p = rng.poly(rng.integer(2, 4));
        // build p(x) - y as BiPoly in x over Q[y]
        std::vector<UniPoly> cx;
        for (const auto& c : p.coeffs()) cx.push_back(UniPoly{c});
        cx[0] = cx[0] - UniPoly{Rational(0), Rational(1)};
        BiPoly F(cx);
        UniPoly dp = p.derivative();
        std::vector<UniPoly> dx;
        for (const auto& c : dp.coeffs()) dx.push_back(UniPoly{c});
        BiPoly dF(dx);
        UniPoly R = resultant_bivariate(F, dF);
        for (long y0 : {-2L, 0L, 1L, 3L}) {
            UniPoly shifted = p - UniPoly{Rational(y0)};
            CHECK(R.eval(Rational(y0)) == resultant(shifted, p.derivative()));
        }
    }
}

TEST_CASE("algebraic set construction") {
    auto s = AlgebraicSet::from_poly(P({1, -2, 1}), true);
    CHECK(s.defining == P({-1, 1}));
    CHECK(s.includes_infinity);
    auto [pts, rest] = split_rational_roots(P({-2, 0, 1}) * P({-1, 1}));
    CHECK(pts == std::set<Rational>{Q(1)});
    CHECK(rest == P({-2, 0, 1}));
}

TEST_CASE("integer utilities") {
    CHECK(valuation(Int(48), Int(2)) == 4);
    CHECK(valuation(Rational(207646, 6561), Int(3)) == -8);
    auto f = factor(Int(-7140934453248));
    // -2^11 * 3^20... factor ignores sign
    std::map<Int, long> fm(f.begin(), f.end());
    CHECK(fm[Int(2)] == 11);
    CHECK(fm[Int(3)] == 20);
    CHECK(is_probable_prime(Int(1000003)));
    CHECK(!is_probable_prime(Int(1000001)));
}
