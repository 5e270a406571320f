#pragma once

#include "belyi/unipoly.hpp"

#include <random>
#include <vector>

namespace belyi::testing {

// lowest degree first
inline UniPoly P(std::vector<long> coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (long a : coeffs) c.emplace_back(a);
    return UniPoly(std::move(c));
}

inline Rational Q(long n, long d = 1) { return Rational(n, d); }

struct Rng {
    std::mt19937 gen;
    explicit Rng(unsigned seed) : gen(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen);
    }
    Rational rational(long num_max, long den_max) {
        return Rational(integer(-num_max, num_max), integer(1, den_max));
    }
    // random polynomial of exact degree d with small integer coefficients
    UniPoly poly(long d, long coeff_max = 5) {
        std::vector<Rational> c(static_cast<size_t>(d) + 1);
        for (auto& a : c) a = Rational(integer(-coeff_max, coeff_max));
        while (c.back() == 0) c.back() = Rational(integer(-coeff_max, coeff_max));
        return UniPoly(std::move(c));
    }
    // monic polynomial split over Q with the given roots count
    UniPoly split_poly(long nroots, long root_max = 6) {
        UniPoly p{Rational(1)};
        for (long i = 0; i < nroots; ++i) {
            Rational r(integer(-root_max, root_max));
            p = p * UniPoly{-r, Rational(1)};
        }
        return p;
    }
};

}  // namespace belyi::testing
