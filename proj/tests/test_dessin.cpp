#include "belyi/dessin.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace belyi;

namespace {

Permutation cyc(long n, std::vector<std::vector<long>> cycles) {
    return Permutation::from_cycles(n, cycles);
}

std::vector<Permutation> symmetric_group(long n) {
    std::vector<long> im(static_cast<size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(std::vector<long>(im));
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

}  // namespace

TEST_CASE("permutation basics") {
    Permutation p = cyc(3, {{1, 2, 3}});
    CHECK(p.apply(1) == 2);
    CHECK(p.apply(3) == 1);
    CHECK((p * p * p).is_identity());
    CHECK(p.inverse() == cyc(3, {{1, 3, 2}}));
    CHECK(p.cycle_type() == std::vector<long>{3});
    CHECK(cyc(4, {{1, 2}}).cycle_type() == std::vector<long>{2, 1, 1});
    CHECK_THROWS_AS(Permutation({1, 1, 3}), value_error);
}

TEST_CASE("sigma_infinity convention") {
    Dessin d(cyc(3, {{1, 2, 3}}), cyc(3, {{1, 2, 3}}));
    CHECK(sigma_infinity(d) == cyc(3, {{1, 2, 3}}));
    // composing all three in order gives the identity
    CHECK((d.sigma0 * d.sigma1 * sigma_infinity(d)).is_identity());

    Dessin e(Permutation::identity(2), cyc(2, {{1, 2}}));
    CHECK(sigma_infinity(e) == cyc(2, {{1, 2}}));
    Dessin f(cyc(2, {{1, 2}}), cyc(2, {{1, 2}}));
    CHECK(sigma_infinity(f).is_identity());
}

TEST_CASE("genus") {
    CHECK(genus(Dessin(cyc(3, {{1, 2, 3}}), cyc(3, {{1, 2, 3}}))) == 1);
    CHECK(genus(Dessin(cyc(2, {{1, 2}}), Permutation::identity(2))) == 0);
    CHECK(genus(Dessin(cyc(3, {{1, 2, 3}}), cyc(3, {{1, 3, 2}}))) == 0);
}

TEST_CASE("passport") {
    Passport p = passport(Dessin(cyc(3, {{1, 2, 3}}), cyc(3, {{1, 2, 3}})));
    CHECK(p.over_infinity == std::vector<long>{3});
    CHECK(p.over_zero == std::vector<long>{3});
    CHECK(p.over_one == std::vector<long>{3});

    Passport q = passport(Dessin(cyc(2, {{1, 2}}), Permutation::identity(2)));
    CHECK(q.over_infinity == std::vector<long>{2});
    CHECK(q.over_zero == std::vector<long>{2});
    CHECK(q.over_one == std::vector<long>{1, 1});
}

TEST_CASE("canonical_form properties") {
    Dessin a(cyc(3, {{1, 2, 3}}), cyc(3, {{1, 2, 3}}));
    Dessin b(cyc(3, {{1, 3, 2}}), cyc(3, {{1, 3, 2}}));
    CHECK(canonical_form(a) == canonical_form(b));  // conjugate by (2 3)
    CHECK(canonical_form(canonical_form(a)) == canonical_form(a));

    // random conjugates of random transitive pairs agree with the original
    std::mt19937 gen(42);
    long n = 6;
    auto sn = symmetric_group(n);
    std::uniform_int_distribution<size_t> pick(0, sn.size() - 1);
    int done = 0;
    while (done < 25) {
        Permutation s0 = sn[pick(gen)], s1 = sn[pick(gen)], t = sn[pick(gen)];
        try {
            Dessin d(s0, s1);
            Dessin conj(t * s0 * t.inverse(), t * s1 * t.inverse());
            CHECK(canonical_form(d) == canonical_form(conj));
            CHECK(monodromy_order(d) == monodromy_order(conj));
            ++done;
        } catch (const value_error&) {
            // non-transitive draw, try again
        }
    }
}

TEST_CASE("enumerate_dessins small degrees") {
    auto d1 = enumerate_dessins(1);
    REQUIRE(d1.size() == 1);
    CHECK(genus(d1[0]) == 0);

    auto d2 = enumerate_dessins(2);
    CHECK(d2.size() == 3);
    for (const auto& d : d2) CHECK(genus(d) == 0);

    auto d3g1 = enumerate_dessins(3, 1);
    REQUIRE(d3g1.size() == 1);
    CHECK(sigma_infinity(d3g1[0]).cycle_type() == std::vector<long>{3});
    CHECK(d3g1[0].sigma0.cycle_type() == std::vector<long>{3});
    CHECK(d3g1[0].sigma1.cycle_type() == std::vector<long>{3});

    CHECK_THROWS_AS(enumerate_dessins(9), cap_error);
    CHECK_THROWS_AS(enumerate_dessins(0), value_error);
}

TEST_CASE("enumerated dessins satisfy the Euler characteristic identity") {
    for (long n = 1; n <= 6; ++n) {
        for (const auto& d : enumerate_dessins(n)) {
            long g = genus(d);
            long c = d.sigma0.cycle_count() + d.sigma1.cycle_count() +
                     sigma_infinity(d).cycle_count();
            CHECK(g >= 0);
            CHECK(2 - 2 * g == c - n);
            for (long p : beckmann_primes(d)) {
                CHECK(p <= n);
                CHECK(is_probable_prime(Int(p)));
            }
        }
    }
}

TEST_CASE("class count matches labeled-pair count via orbit sizes") {
    // Each isomorphism class contributes an S_n-orbit of labeled pairs of
    // size n!/|centralizer of the pair|; the orbit sizes must sum to the
    // number of transitive pairs counted directly over S_n x S_n.
    for (long n = 1; n <= 5; ++n) {
        auto sn = symmetric_group(n);
        long labeled = 0;
        for (const auto& s0 : sn)
            for (const auto& s1 : sn) {
                try {
                    Dessin d(s0, s1);
                    ++labeled;
                } catch (const value_error&) {
                }
            }
        long orbit_total = 0;
        for (const auto& d : enumerate_dessins(n)) {
            long centralizer = 0;
            for (const auto& t : sn)
                if (t * d.sigma0 == d.sigma0 * t && t * d.sigma1 == d.sigma1 * t) ++centralizer;
            long factorial = 1;
            for (long k = 2; k <= n; ++k) factorial *= k;
            REQUIRE(factorial % centralizer == 0);
            orbit_total += factorial / centralizer;
        }
        CHECK(orbit_total == labeled);
    }
}

TEST_CASE("monodromy_order and beckmann_primes") {
    CHECK(monodromy_order(Dessin(cyc(3, {{1, 2, 3}}), cyc(3, {{1, 2, 3}}))) == 3);
    CHECK(monodromy_order(Dessin(cyc(3, {{1, 2}}), cyc(3, {{2, 3}}))) == 6);
    CHECK(monodromy_order(Dessin(Permutation::identity(1), Permutation::identity(1))) == 1);

    CHECK(beckmann_primes(Dessin(cyc(3, {{1, 2, 3}}), cyc(3, {{1, 2, 3}}))) == std::set<long>{3});
    CHECK(beckmann_primes(Dessin(cyc(3, {{1, 2}}), cyc(3, {{2, 3}}))) == std::set<long>{2, 3});
    CHECK(beckmann_primes(Dessin(Permutation::identity(1), Permutation::identity(1))).empty());
}
