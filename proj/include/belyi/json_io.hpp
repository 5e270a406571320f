#pragma once

#include "belyi/belyi_reduce.hpp"
#include "belyi/hyperelliptic.hpp"
#include "belyi/sharp.hpp"
#include "belyi/weierstrass.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace belyi {

using json = nlohmann::ordered_json;

// Exact values cross the JSON boundary as strings; polynomials as arrays of
// coefficient strings, lowest degree first.

inline json poly_to_json(const UniPoly& p) {
    json a = json::array();
    for (size_t i = 0; i <= static_cast<size_t>(std::max<long>(p.degree(), 0)); ++i)
        a.push_back(to_string(p[i]));
    return a;
}

inline UniPoly poly_from_json(const json& a) {
    if (!a.is_array() || a.empty()) throw value_error("polynomial must be a nonempty array");
    std::vector<Rational> c;
    for (const auto& e : a) {
        if (e.is_string())
            c.push_back(parse_rational(e.get<std::string>()));
        else if (e.is_number_integer())
            c.push_back(Rational(e.get<long long>()));
        else
            throw value_error("polynomial coefficients must be strings or integers");
    }
    return UniPoly(std::move(c));
}

inline json rationals_to_json(const std::set<Rational>& s) {
    json a = json::array();
    for (const auto& r : s) a.push_back(to_string(r));
    return a;
}

inline std::set<Rational> rationals_from_json(const json& a) {
    if (!a.is_array()) throw value_error("expected an array of rationals");
    std::set<Rational> out;
    for (const auto& e : a) {
        if (e.is_string())
            out.insert(parse_rational(e.get<std::string>()));
        else if (e.is_number_integer())
            out.insert(Rational(e.get<long long>()));
        else
            throw value_error("rational values must be strings or integers");
    }
    return out;
}

inline json ints_to_json(const std::set<Int>& s) {
    json a = json::array();
    for (const auto& p : s) a.push_back(p.str());
    return a;
}

inline json algebraic_set_to_json(const AlgebraicSet& s) {
    return json{{"defining", poly_to_json(s.defining)},
                {"includes_infinity", s.includes_infinity},
                {"empty", s.is_empty()}};
}

inline json passport_to_json(const Passport& pp) {
    return json{{"infinity", pp.over_infinity}, {"zero", pp.over_zero}, {"one", pp.over_one}};
}

inline json branch_report_to_json(const BranchReport& rep) {
    json passports = json::object();
    for (const auto& [key, partition] : rep.passports) passports[key] = partition;
    return json{{"type", "rational"},
                {"degree", rep.degree},
                {"branch_values", rationals_to_json(rep.branch_values)},
                {"infinity_branched", rep.infinity_branched},
                {"irrational_branch_values", algebraic_set_to_json(rep.irrational_branch_values)},
                {"passports", passports},
                {"is_belyi", rep.is_belyi},
                {"rh_consistent", rep.rh_consistent},
                {"provenance", "computed"}};
}

inline json place_passport_to_json(const PlacePassport& pp) {
    json places = json::array();
    for (const auto& g : pp.entries)
        places.push_back(json{{"place", g.place}, {"count", g.count}, {"e", g.valuation}});
    return json{{"value", pp.value ? json(to_string(*pp.value)) : json("inf")},
                {"partition", pp.partition},
                {"places", places}};
}

inline json hyper_report_to_json(const HyperBranchReport& rep) {
    json passports = json::object();
    for (const auto& [key, pp] : rep.passports) passports[key] = place_passport_to_json(pp);
    return json{{"type", "hyperelliptic"},
                {"degree", rep.degree},
                {"genus", rep.genus},
                {"branch_values", rationals_to_json(rep.branch_values)},
                {"infinity_branched", rep.infinity_branched},
                {"irrational_branch_values", algebraic_set_to_json(rep.irrational_branch_values)},
                {"passports", passports},
                {"is_belyi", rep.is_belyi},
                {"provenance", "computed"}};
}

inline json certificate_to_json(const BelyiCertificate& cert) {
    json steps = json::array();
    for (const auto& s : cert.steps) steps.push_back(poly_to_json(s));
    return json{{"steps", steps},
                {"total", poly_to_json(cert.total)},
                {"total_degree", cert.total.degree()},
                {"final_branch_set", algebraic_set_to_json(cert.final_branch_set)},
                {"provenance", "computed"}};
}

inline json model_to_json(const WeierstrassModel& m) {
    return json{{"a1", to_string(m.a1)}, {"a2", to_string(m.a2)}, {"a3", to_string(m.a3)},
                {"a4", to_string(m.a4)}, {"a6", to_string(m.a6)}};
}

inline json reduction_report_to_json(const ReductionReport& rep) {
    json primes = json::array();
    for (const auto& r : rep.primes)
        primes.push_back(json{{"p", r.p.str()},
                              {"v_disc", r.v_disc},
                              {"v_c4", r.v_c4},
                              {"kodaira", r.kodaira},
                              {"good", r.good}});
    return json{{"minimal_model", model_to_json(rep.minimal)},
                {"transformation",
                 json{{"u", to_string(rep.trans.u)},
                      {"r", to_string(rep.trans.r)},
                      {"s", to_string(rep.trans.s)},
                      {"t", to_string(rep.trans.t)}}},
                {"disc_min", to_string(rep.disc_min)},
                {"j", to_string(rep.j)},
                {"primes", primes},
                {"bad_primes", ints_to_json(rep.bad)},
                {"stable_bad_primes", ints_to_json(rep.stable_bad)},
                {"bounds",
                 json{{"absolute_lb", rep.bounds.absolute_lb.str()},
                      {"relative_lb", rep.bounds.relative_lb.str()},
                      {"genus_lb", rep.bounds.genus_lb.str()}}},
                {"provenance", "computed"}};
}

inline json dessin_to_json(const Dessin& d) {
    std::vector<long> s0, s1;
    for (long v = 1; v <= d.degree(); ++v) {
        s0.push_back(d.sigma0.apply(v));
        s1.push_back(d.sigma1.apply(v));
    }
    return json{{"sigma0", s0},
                {"sigma1", s1},
                {"genus", genus(d)},
                {"passport", passport_to_json(passport(d))}};
}

}  // namespace belyi
