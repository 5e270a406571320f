#pragma once

#include "belyi/unipoly.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace belyi {

// Long Weierstrass model y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6
// with the standard derived invariants.
struct WeierstrassModel {
    Rational a1, a2, a3, a4, a6;

    WeierstrassModel(Rational a1_, Rational a2_, Rational a3_, Rational a4_, Rational a6_)
        : a1(std::move(a1_)), a2(std::move(a2_)), a3(std::move(a3_)), a4(std::move(a4_)),
          a6(std::move(a6_)) {
        if (disc() == 0) throw value_error("singular Weierstrass model");
        if (1728 * disc() != c4() * c4() * c4() - c6() * c6())
            throw internal_error("invariant identity 1728*disc = c4^3 - c6^2 failed");
    }

    // y^2 = phi(x) for a monic cubic phi
    static WeierstrassModel from_cubic(const UniPoly& phi) {
        if (phi.degree() != 3 || phi.lc() != 1)
            throw value_error("short model requires a monic cubic");
        return WeierstrassModel(Rational(0), phi[2], Rational(0), phi[1], phi[0]);
    }

    Rational b2() const { return a1 * a1 + 4 * a2; }
    Rational b4() const { return 2 * a4 + a1 * a3; }
    Rational b6() const { return a3 * a3 + 4 * a6; }
    Rational b8() const {
        return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    }
    Rational c4() const { return b2() * b2() - 24 * b4(); }
    Rational c6() const { return -b2() * b2() * b2() + 36 * b2() * b4() - 216 * b6(); }
    Rational disc() const {
        return -b2() * b2() * b8() - 8 * b4() * b4() * b4() - 27 * b6() * b6() +
               9 * b2() * b4() * b6();
    }
    Rational j() const { return c4() * c4() * c4() / disc(); }

    bool is_integral() const {
        return den(a1) == 1 && den(a2) == 1 && den(a3) == 1 && den(a4) == 1 && den(a6) == 1;
    }

    friend bool operator==(const WeierstrassModel& m, const WeierstrassModel& n) {
        return m.a1 == n.a1 && m.a2 == n.a2 && m.a3 == n.a3 && m.a4 == n.a4 && m.a6 == n.a6;
    }
};

// Admissible change of variables x = u^2 x' + r, y = u^3 y' + s u^2 x' + t.
struct ModelTransformation {
    Rational u, r, s, t;
};

inline WeierstrassModel transform(const WeierstrassModel& m, const ModelTransformation& g) {
    if (g.u == 0) throw value_error("transformation with u = 0");
    const Rational &u = g.u, &r = g.r, &s = g.s, &t = g.t;
    Rational a1 = (m.a1 + 2 * s) / u;
    Rational a2 = (m.a2 - s * m.a1 + 3 * r - s * s) / (u * u);
    Rational a3 = (m.a3 + r * m.a1 + 2 * t) / (u * u * u);
    Rational a4 =
        (m.a4 - s * m.a3 + 2 * r * m.a2 - (t + r * s) * m.a1 + 3 * r * r - 2 * s * t) /
        (u * u * u * u);
    Rational a6 = (m.a6 + r * m.a4 + r * r * m.a2 + r * r * r - t * m.a3 - t * t - r * t * m.a1) /
                  pow_rational(u, 6);
    return WeierstrassModel(a1, a2, a3, a4, a6);
}

namespace detail {

// Kraus' criterion: (c4, c6) with 1728 | c4^3 - c6^2 arise from an integral
// model iff v3(c6) != 2 and either c6 = -1 (mod 4), or 16 | c4 and
// c6 = 0 or 8 (mod 32).
inline bool kraus(const Int& c4, const Int& c6) {
    if (c6 != 0 && valuation(c6, 3) == 2) return false;
    Int r4 = ((c6 % 4) + 4) % 4;
    if (r4 == 3) return true;  // c6 = -1 (mod 4)
    if (c4 % 16 != 0) return false;
    Int r32 = ((c6 % 32) + 32) % 32;
    return r32 == 0 || r32 == 8;
}

// Connell's reconstruction of the integral model with the given invariants.
inline WeierstrassModel model_from_c4c6(const Int& c4, const Int& c6) {
    Int b2 = ((-c6 % 12) + 12) % 12;
    if (b2 > 6) b2 -= 12;
    Int b4num = b2 * b2 - c4;
    Int b6num = -c6 - b2 * b2 * b2 + Int(36) * b2 * (b4num / 24);
    if (b4num % 24 != 0 || b6num % 216 != 0)
        throw internal_error("Connell reconstruction produced fractional b-invariants");
    Int b4 = b4num / 24;
    Int b6 = b6num / 216;
    Int a1 = ((b2 % 4) + 4) % 4;  // 0 or 1 once Kraus holds
    Int a3 = ((b6 % 4) + 4) % 4;
    if (a1 > 1 || a3 > 1 || (b4 - a1 * a3) % 2 != 0)
        throw internal_error("Connell reconstruction produced fractional coefficients");
    Int a2 = (b2 - a1) / 4;
    Int a4 = (b4 - a1 * a3) / 2;
    Int a6 = (b6 - a3) / 4;
    WeierstrassModel out{Rational(a1), Rational(a2), Rational(a3), Rational(a4), Rational(a6)};
    if (out.c4() != c4 || out.c6() != c6)
        throw internal_error("Connell reconstruction did not reproduce c4, c6");
    return out;
}

}  // namespace detail

struct MinimalModelResult {
    WeierstrassModel model;
    ModelTransformation trans;  // input -> minimal model; disc = u^12 * disc_min
};

// Global minimal model over Z by the Laska-Kraus-Connell procedure: clear
// denominators, take u0 = prod p^min(floor(v_p(c4)/4), floor(v_p(c6)/6)),
// and test the candidates u0, u0/2, u0/3, u0/6 against Kraus' criterion and
// exact divisibility of the discriminant.
inline MinimalModelResult minimal_model(const WeierstrassModel& input) {
    // integralize: scaling by 1/lambda multiplies a_i by lambda^i
    Int lambda = 1;
    for (const Rational& a : {input.a1, input.a2, input.a3, input.a4, input.a6})
        lambda = boost::multiprecision::lcm(lambda, den(a));
    WeierstrassModel m =
        transform(input, ModelTransformation{Rational(1, lambda), Rational(0), Rational(0),
                                             Rational(0)});
    if (!m.is_integral()) throw internal_error("integralization failed");
    Int c4 = num(m.c4()), c6 = num(m.c6()), disc = num(m.disc());

    Int base = c4 == 0 ? Int(boost::multiprecision::abs(c6))
                       : (c6 == 0 ? Int(boost::multiprecision::abs(c4))
                                  : Int(boost::multiprecision::gcd(c4, c6)));
    Int u0 = 1;
    for (const auto& [p, e] : factor(base)) {
        long k = c4 == 0 ? valuation(c6, p) / 6
                         : (c6 == 0 ? valuation(c4, p) / 4
                                    : std::min(valuation(c4, p) / 4, valuation(c6, p) / 6));
        u0 *= pow_int(p, static_cast<unsigned long>(k));
    }
    for (const Int& div : {Int(1), Int(2), Int(3), Int(6)}) {
        if (u0 % div != 0) continue;
        Int u = u0 / div;
        Int u4 = pow_int(u, 4), u6 = pow_int(u, 6);
        Int u12 = u6 * u6;
        if (c4 % u4 != 0 || c6 % u6 != 0 || disc % u12 != 0) continue;
        if (!detail::kraus(c4 / u4, c6 / u6)) continue;
        WeierstrassModel out = detail::model_from_c4c6(c4 / u4, c6 / u6);
        // recover (r, s, t) from the coefficient transformation rules
        Rational uu = Rational(u) / lambda;
        Rational s = (uu * out.a1 - input.a1) / 2;
        Rational r = (uu * uu * out.a2 - input.a2 + s * input.a1 + s * s) / 3;
        Rational t = (uu * uu * uu * out.a3 - input.a3 - r * input.a1) / 2;
        ModelTransformation g{uu, r, s, t};
        if (!(transform(input, g) == out))
            throw internal_error("minimal-model transformation self-check failed");
        return {out, g};
    }
    throw internal_error("no Kraus-admissible scaling found");
}

// Kodaira symbol of the reduction at p >= 5, from the minimal model's
// valuations: v(disc) = 0 good; v(c4) = 0 multiplicative I_n; otherwise the
// standard additive table.
inline std::string kodaira_type(const WeierstrassModel& input, const Int& p) {
    if (p < 5 || !is_probable_prime(p))
        throw value_error("Kodaira classification requires a prime p >= 5");
    WeierstrassModel m = minimal_model(input).model;
    long vd = valuation(Rational(m.disc()), p);
    if (vd == 0) return "good";
    long vc4 = num(m.c4()) == 0 ? vd : valuation(m.c4(), p);  // c4 = 0: treat as large
    if (vc4 == 0) return "I" + std::to_string(vd);
    switch (vd) {
        case 2: return "II";
        case 3: return "III";
        case 4: return "IV";
        case 6: return "I0*";
    }
    if (vc4 == 2 && vd >= 7) return "I" + std::to_string(vd - 6) + "*";
    switch (vd) {
        case 8: return "IV*";
        case 9: return "III*";
        case 10: return "II*";
    }
    throw internal_error("valuation pattern outside the Kodaira table at p = " + p.str());
}

inline std::set<Int> bad_primes(const WeierstrassModel& input) {
    WeierstrassModel m = minimal_model(input).model;
    std::set<Int> out;
    for (const auto& [p, e] : factor(num(m.disc()))) out.insert(p);
    return out;
}

// Stable (potentially) bad primes: v_p(j) < 0.
inline std::set<Int> stable_bad_primes(const WeierstrassModel& input) {
    std::set<Int> out;
    Rational j = input.j();
    if (num(j) == 0) return out;
    for (const auto& [p, e] : factor(den(j))) out.insert(p);
    return out;
}

struct Bounds {
    Int absolute_lb = 1;  // largest stable bad prime, 1 when none
    Int relative_lb = 1;  // largest bad prime, 1 when none
    Int genus_lb = 1;     // 2g + 1
};

inline Int genus_lower_bound(long g) {
    if (g < 0) throw value_error("negative genus");
    return Int(2 * g + 1);
}

inline Bounds lower_bounds(const WeierstrassModel& m) {
    Bounds b;
    std::set<Int> stable = stable_bad_primes(m);
    std::set<Int> bad = bad_primes(m);
    if (!stable.empty()) b.absolute_lb = *stable.rbegin();
    if (!bad.empty()) b.relative_lb = *bad.rbegin();
    b.genus_lb = genus_lower_bound(1);
    return b;
}

struct PrimeRecord {
    Int p;
    long v_disc = 0;
    long v_c4 = 0;  // v(disc_min) when c4 = 0
    std::string kodaira;  // "n/a" for p in {2, 3}
    bool good = true;
};

struct ReductionReport {
    WeierstrassModel minimal;
    ModelTransformation trans;
    Rational disc_min;
    Rational j;
    std::vector<PrimeRecord> primes;
    std::set<Int> bad;
    std::set<Int> stable_bad;
    Bounds bounds;
};

inline ReductionReport reduction_report(const WeierstrassModel& input) {
    MinimalModelResult mm = minimal_model(input);
    ReductionReport rep{mm.model, mm.trans, mm.model.disc(), input.j(), {}, {}, {}, {}};
    rep.bad = bad_primes(input);
    rep.stable_bad = stable_bad_primes(input);
    rep.bounds = lower_bounds(input);
    for (const Int& p : rep.bad) {
        PrimeRecord r;
        r.p = p;
        r.v_disc = valuation(rep.disc_min, p);
        r.v_c4 = num(mm.model.c4()) == 0 ? r.v_disc : valuation(mm.model.c4(), p);
        r.good = r.v_disc == 0;
        r.kodaira = p >= 5 ? kodaira_type(input, p) : "n/a";
        rep.primes.push_back(std::move(r));
    }
    return rep;
}

// One-sided candidate set for the bad primes of y^2 = phi(x) in genus >= 2:
// primes dividing the resultant of the primitive integral model and its
// derivative (a superset in general; no minimality is attempted).
inline std::set<Int> candidate_bad_primes(const UniPoly& phi) {
    if (phi.degree() < 3) throw value_error("candidate bad primes require deg phi >= 3");
    if (squarefree_part(phi) != monic(phi)) throw value_error("phi must be squarefree");
    ZPoly z = to_primitive(phi).first;
    Rational res = resultant(to_rational(z), to_rational(z.derivative()));
    if (den(res) != 1) throw internal_error("non-integral resultant of an integral model");
    std::set<Int> out;
    out.insert(2);  // the double cover itself can misbehave at 2
    if (num(res) != 0)
        for (const auto& [p, e] : factor(num(res))) out.insert(p);
    for (const auto& [p, e] : factor(z.lc())) out.insert(p);
    return out;
}

}  // namespace belyi
