#pragma once

#include "belyi/dessin.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <string>

namespace belyi {

namespace detail {

inline void validate_sharp_params(long g, long p) {
    if (g < 1) throw value_error("sharp construction requires genus >= 1");
    if (!is_probable_prime(Int(p))) throw value_error("sharp construction requires a prime p");
    if (p < 2 * g + 3) throw value_error("sharp construction requires p >= 2g + 3");
}

inline long partition_sum(const std::vector<long>& parts) {
    long s = 0;
    for (long e : parts) s += e;
    return s;
}

}  // namespace detail

// Degree and genus of a three-fiber passport via Riemann-Hurwitz; throws
// internal_error when the partition sums disagree or the parity fails.
inline long passport_degree(const Passport& pp) {
    long n = detail::partition_sum(pp.over_infinity);
    if (detail::partition_sum(pp.over_zero) != n || detail::partition_sum(pp.over_one) != n)
        throw internal_error("passport partition sums disagree");
    return n;
}

inline long passport_genus(const Passport& pp) {
    long n = passport_degree(pp);
    long c = static_cast<long>(pp.over_infinity.size() + pp.over_zero.size() + pp.over_one.size());
    if ((n + c) % 2 != 0) throw internal_error("passport genus parity violation");
    long g = (n + 2 - c) / 2;
    if (g < 0) throw internal_error("negative passport genus");
    return g;
}

// The genus-0, degree-p passport of f:
// infinity: [p]; 0: [2g+1, 2^((p-3)/2 - g), 1, 1]; 1: [2^((p+1)/2 - g), 1^(2g-1)].
inline Passport passport_f(long g, long p) {
    detail::validate_sharp_params(g, p);
    Passport pp;
    pp.over_infinity = {p};
    pp.over_zero.push_back(2 * g + 1);
    pp.over_zero.insert(pp.over_zero.end(), static_cast<size_t>((p - 3) / 2 - g), 2);
    pp.over_zero.insert(pp.over_zero.end(), 2, 1);
    pp.over_one.insert(pp.over_one.end(), static_cast<size_t>((p + 1) / 2 - g), 2);
    pp.over_one.insert(pp.over_one.end(), static_cast<size_t>(2 * g - 1), 1);
    if (passport_degree(pp) != p || passport_genus(pp) != 0)
        throw internal_error("passport_f failed its degree/genus checks");
    return pp;
}

// The genus-g, degree-2p passport of the lift through the double cover:
// infinity: [p, p]; 0: [4g+2, 2^(p-2g-1)]; 1: [2^p].
inline Passport passport_tilde(long g, long p) {
    detail::validate_sharp_params(g, p);
    Passport pp;
    pp.over_infinity = {p, p};
    pp.over_zero.push_back(4 * g + 2);
    pp.over_zero.insert(pp.over_zero.end(), static_cast<size_t>(p - 2 * g - 1), 2);
    pp.over_one.insert(pp.over_one.end(), static_cast<size_t>(p), 2);
    if (passport_degree(pp) != 2 * p || passport_genus(pp) != g)
        throw internal_error("passport_tilde failed its degree/genus checks");
    return pp;
}

// The genus-g, degree-p passport of the Abhyankar quotient:
// infinity: [p]; 0: [p]; 1: [2g+1, 1^(p-2g-1)].
inline Passport passport_h(long g, long p) {
    detail::validate_sharp_params(g, p);
    Passport pp;
    pp.over_infinity = {p};
    pp.over_zero = {p};
    pp.over_one.push_back(2 * g + 1);
    pp.over_one.insert(pp.over_one.end(), static_cast<size_t>(p - 2 * g - 1), 1);
    if (passport_degree(pp) != p || passport_genus(pp) != g)
        throw internal_error("passport_h failed its degree/genus checks");
    return pp;
}

// Bookkeeping for the unramified points lying in the ramified fibers of f:
// the computed count is 2g+1 (two parts equal to 1 over 0, 2g-1 over 1),
// one less than the claimed 2g+2, so the discrepancy flag always fires for
// these passports.
struct UnramifiedCount {
    long over_zero = 0;
    long over_one = 0;
    long total = 0;
    long claimed = 0;  // 2g + 2
    bool discrepancy = false;
};

inline UnramifiedCount unramified_in_ramified_fibers(const Passport& pf, long g) {
    UnramifiedCount c;
    c.over_zero = static_cast<long>(std::count(pf.over_zero.begin(), pf.over_zero.end(), 1L));
    c.over_one = static_cast<long>(std::count(pf.over_one.begin(), pf.over_one.end(), 1L));
    c.total = c.over_zero + c.over_one;
    c.claimed = 2 * g + 2;
    c.discrepancy = c.total != c.claimed;
    return c;
}

// Compare three-fiber passports as unordered multisets of partitions.
inline bool passports_isomorphic(const Passport& a, const Passport& b) {
    std::array<std::vector<long>, 3> fa{a.over_infinity, a.over_zero, a.over_one};
    std::array<std::vector<long>, 3> fb{b.over_infinity, b.over_zero, b.over_one};
    std::sort(fa.begin(), fa.end());
    std::sort(fb.begin(), fb.end());
    return fa == fb;
}

// Factor a degree-2p cover through a degree-2 cover of the target line
// branched over its 0 and 1 values (Abhyankar's lemma): ramification indices
// over 0 and 1 are halved, the unbranched fiber over infinity splits into
// two fibers, and the all-unramified fiber is dropped.  The surviving three
// fibers form the quotient passport (compare with passports_isomorphic).
inline Passport abhyankar_factor(const Passport& tilde) {
    auto halve = [](const std::vector<long>& parts) {
        std::vector<long> out;
        for (long e : parts) {
            if (e % 2 != 0)
                throw value_error("Abhyankar factoring needs even indices over branch values");
            out.push_back(e / 2);
        }
        return out;
    };
    if (tilde.over_infinity.size() != 2)
        throw value_error("Abhyankar factoring expects two points over infinity");
    std::vector<std::vector<long>> fibers;
    fibers.push_back({tilde.over_infinity[0]});
    fibers.push_back({tilde.over_infinity[1]});
    fibers.push_back(halve(tilde.over_zero));
    fibers.push_back(halve(tilde.over_one));
    // drop generic (all-unramified) fibers
    std::erase_if(fibers, [](const std::vector<long>& f) {
        return std::all_of(f.begin(), f.end(), [](long e) { return e == 1; });
    });
    if (fibers.size() != 3)
        throw value_error("Abhyankar factoring did not leave exactly three branched fibers");
    std::sort(fibers.begin(), fibers.end(), std::greater<>());
    return Passport{fibers[0], fibers[1], fibers[2]};
}

inline constexpr long kRealizeCeiling = 13;
inline constexpr long kRealizeBudget = 20'000'000;

namespace detail {

// Enumerate permutations with the given cycle type (multiset of lengths),
// anchoring each cycle at its smallest unplaced element; calls visit(sigma0)
// and stops when it returns true.  Returns true when stopped early; throws
// cap_error when the candidate budget runs out.
inline bool for_each_with_type(long n, std::vector<long> type, std::vector<long>& image,
                               std::vector<bool>& used, long& budget,
                               const std::function<bool(const std::vector<long>&)>& visit) {
    long anchor = 0;
    while (anchor < n && used[static_cast<size_t>(anchor)]) ++anchor;
    if (anchor == n) {
        if (--budget < 0) throw cap_error("realization search budget exceeded");
        return visit(image);
    }
    std::vector<long> tried;
    for (size_t ti = 0; ti < type.size(); ++ti) {
        long len = type[ti];
        if (std::find(tried.begin(), tried.end(), len) != tried.end()) continue;
        tried.push_back(len);
        std::vector<long> rest = type;
        rest.erase(rest.begin() + static_cast<long>(ti));
        // choose the remaining len-1 cycle members (ordered: the cyclic order
        // matters) from the unused elements greater than... any unused element
        std::vector<long> cycle{anchor};
        used[static_cast<size_t>(anchor)] = true;
        std::function<bool()> extend = [&]() -> bool {
            if (static_cast<long>(cycle.size()) == len) {
                for (size_t i = 0; i < cycle.size(); ++i)
                    image[static_cast<size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
                bool stop = for_each_with_type(n, rest, image, used, budget, visit);
                for (long v : cycle) image[static_cast<size_t>(v)] = -1;
                return stop;
            }
            for (long v = 0; v < n; ++v) {
                if (used[static_cast<size_t>(v)]) continue;
                used[static_cast<size_t>(v)] = true;
                cycle.push_back(v);
                if (extend()) return true;
                cycle.pop_back();
                used[static_cast<size_t>(v)] = false;
            }
            return false;
        };
        bool stop = extend();
        used[static_cast<size_t>(anchor)] = false;
        if (stop) return true;
    }
    return false;
}

}  // namespace detail

// Search for a transitive pair realizing passport_f(g, p): sigma_inf is
// fixed as the canonical p-cycle (its conjugacy class is forced), sigma0
// runs over permutations with the 0-fiber cycle type, and sigma1 =
// sigma0^-1 sigma_inf^-1 is kept when its cycle type matches the 1-fiber.
// Returns the first dessin found, or nullopt after exhausting the space
// (which does not disprove existence for larger budgets of other shapes);
// throws cap_error when the candidate budget is exceeded.
inline std::optional<Dessin> realize(long g, long p, long budget = kRealizeBudget) {
    detail::validate_sharp_params(g, p);
    if (p > kRealizeCeiling) throw cap_error("realization degree exceeds the configured ceiling");
    Passport target = passport_f(g, p);
    std::vector<long> cyc(static_cast<size_t>(p));
    for (long i = 0; i < p; ++i) cyc[static_cast<size_t>(i)] = i + 1;
    Permutation sigma_inf = Permutation::from_cycles(p, {cyc});
    Permutation sigma_inf_inv = sigma_inf.inverse();

    std::optional<Dessin> found;
    std::vector<long> image(static_cast<size_t>(p), -1);
    std::vector<bool> used(static_cast<size_t>(p), false);
    long remaining = budget;
    detail::for_each_with_type(
        p, target.over_zero, image, used, remaining,
        [&](const std::vector<long>& im) -> bool {
            std::vector<long> one_based(im.size());
            for (size_t i = 0; i < im.size(); ++i) one_based[i] = im[i] + 1;
            Permutation s0{std::move(one_based)};
            Permutation s1 = s0.inverse() * sigma_inf_inv;
            if (s1.cycle_type() != target.over_one) return false;
            Dessin d(std::move(s0), std::move(s1));
            if (passport(d) != target || genus(d) != 0)
                throw internal_error("realization failed its passport cross-check");
            found = std::move(d);
            return true;
        });
    return found;
}

}  // namespace belyi
