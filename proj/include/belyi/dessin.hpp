#pragma once

#include "belyi/permutation.hpp"

#include <numeric>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

namespace belyi {

// A dessin d'enfant: a transitive pair of permutations of {1..n}.  The
// permutation over infinity follows the convention sigma_inf = (sigma0 *
// sigma1)^-1, so the ordered product sigma0 * sigma1 * sigma_inf is the
// identity.
struct Dessin {
    Permutation sigma0;
    Permutation sigma1;

    Dessin(Permutation s0, Permutation s1) : sigma0(std::move(s0)), sigma1(std::move(s1)) {
        if (sigma0.degree() != sigma1.degree()) throw value_error("dessin permutation degrees differ");
        if (!is_transitive()) throw value_error("dessin permutation pair is not transitive");
    }

    long degree() const { return sigma0.degree(); }

    bool is_transitive() const {
        long n = degree();
        std::vector<bool> reached(static_cast<size_t>(n), false);
        std::vector<long> stack{1};
        reached[0] = true;
        long count = 1;
        while (!stack.empty()) {
            long v = stack.back();
            stack.pop_back();
            for (long w : {sigma0.apply(v), sigma1.apply(v)}) {
                if (!reached[static_cast<size_t>(w - 1)]) {
                    reached[static_cast<size_t>(w - 1)] = true;
                    ++count;
                    stack.push_back(w);
                }
            }
        }
        return count == n;
    }

    friend bool operator==(const Dessin& a, const Dessin& b) = default;
    friend auto operator<=>(const Dessin& a, const Dessin& b) = default;
};

inline Permutation sigma_infinity(const Dessin& d) { return (d.sigma0 * d.sigma1).inverse(); }

// Partitions of n (sorted descending), one per cycle type of S_n.
struct Passport {
    std::vector<long> over_infinity;
    std::vector<long> over_zero;
    std::vector<long> over_one;

    friend bool operator==(const Passport& a, const Passport& b) = default;
    friend auto operator<=>(const Passport& a, const Passport& b) = default;
};

inline Passport passport(const Dessin& d) {
    return Passport{sigma_infinity(d).cycle_type(), d.sigma0.cycle_type(), d.sigma1.cycle_type()};
}

// g = (n + 2 - c0 - c1 - cinf) / 2 (Riemann-Hurwitz for a three-point cover).
inline long genus(const Dessin& d) {
    long n = d.degree();
    long c = d.sigma0.cycle_count() + d.sigma1.cycle_count() + sigma_infinity(d).cycle_count();
    if ((n + c) % 2 != 0) throw internal_error("genus parity violation");
    long g = (n + 2 - c) / 2;
    if (g < 0) throw internal_error("negative genus from a transitive pair");
    return g;
}

// Canonical representative of the simultaneous-conjugacy class: relabel
// {1..n} by BFS from each start vertex (visiting sigma0-image then
// sigma1-image) and keep the lexicographically least (sigma0, sigma1) image
// pair.  Two dessins are isomorphic iff their canonical forms are equal.
inline Dessin canonical_form(const Dessin& d) {
    long n = d.degree();
    std::vector<long> best0, best1;
    std::vector<long> label(static_cast<size_t>(n));  // old -> new
    std::vector<long> order;                          // new-1 -> old
    for (long start = 1; start <= n; ++start) {
        std::fill(label.begin(), label.end(), 0);
        order.clear();
        order.push_back(start);
        label[static_cast<size_t>(start - 1)] = 1;
        for (size_t head = 0; head < order.size(); ++head) {
            long v = order[head];
            for (long w : {d.sigma0.apply(v), d.sigma1.apply(v)}) {
                if (label[static_cast<size_t>(w - 1)] == 0) {
                    order.push_back(w);
                    label[static_cast<size_t>(w - 1)] = static_cast<long>(order.size());
                }
            }
        }
        std::vector<long> im0(static_cast<size_t>(n)), im1(static_cast<size_t>(n));
        for (long v = 1; v <= n; ++v) {
            long nv = label[static_cast<size_t>(v - 1)];
            im0[static_cast<size_t>(nv - 1)] = label[static_cast<size_t>(d.sigma0.apply(v) - 1)];
            im1[static_cast<size_t>(nv - 1)] = label[static_cast<size_t>(d.sigma1.apply(v) - 1)];
        }
        if (best0.empty() || std::tie(im0, im1) < std::tie(best0, best1)) {
            best0 = std::move(im0);
            best1 = std::move(im1);
        }
    }
    return Dessin(Permutation(std::move(best0)), Permutation(std::move(best1)));
}

namespace detail {

inline void partitions_rec(long n, long max_part, std::vector<long>& cur,
                           std::vector<std::vector<long>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (long p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace detail

// All partitions of n, each sorted descending, in deterministic order.
inline std::vector<std::vector<long>> partitions(long n) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    detail::partitions_rec(n, n, cur, out);
    return out;
}

// The canonical permutation with the given cycle type: consecutive cycles
// (1..k1)(k1+1..k1+k2)...
inline Permutation permutation_with_cycle_type(long n, const std::vector<long>& parts) {
    std::vector<std::vector<long>> cycles;
    long next = 1;
    for (long p : parts) {
        std::vector<long> cyc(static_cast<size_t>(p));
        std::iota(cyc.begin(), cyc.end(), next);
        next += p;
        cycles.push_back(std::move(cyc));
    }
    if (next != n + 1) throw value_error("partition does not sum to n");
    return Permutation::from_cycles(n, cycles);
}

inline constexpr long kEnumerationCeiling = 8;

// One representative per isomorphism class (simultaneous conjugacy) of
// transitive pairs of degree n, optionally restricted to a genus.
// Deterministic order.  sigma0 ranges over conjugacy-class representatives
// only; every class of pairs is still hit because conjugating any pair moves
// sigma0 to its representative.
inline std::vector<Dessin> enumerate_dessins(long n, std::optional<long> genus_filter = {}) {
    if (n < 1) throw value_error("degree must be positive");
    if (n > kEnumerationCeiling) throw cap_error("enumeration degree exceeds the configured ceiling");
    std::set<Dessin> classes;
    std::vector<long> base(static_cast<size_t>(n));
    std::iota(base.begin(), base.end(), 1);
    for (const auto& parts : partitions(n)) {
        Permutation s0 = permutation_with_cycle_type(n, parts);
        std::vector<long> im = base;
        do {
            Permutation s1{std::vector<long>(im)};
            long reached = 1;
            {
                std::vector<bool> seen(static_cast<size_t>(n), false);
                std::vector<long> stack{1};
                seen[0] = true;
                while (!stack.empty()) {
                    long v = stack.back();
                    stack.pop_back();
                    for (long w : {s0.apply(v), s1.apply(v)})
                        if (!seen[static_cast<size_t>(w - 1)]) {
                            seen[static_cast<size_t>(w - 1)] = true;
                            ++reached;
                            stack.push_back(w);
                        }
                }
            }
            if (reached != n) continue;
            classes.insert(canonical_form(Dessin(s0, s1)));
        } while (std::next_permutation(im.begin(), im.end()));
    }
    std::vector<Dessin> out;
    for (const auto& d : classes)
        if (!genus_filter || genus(d) == *genus_filter) out.push_back(d);
    return out;
}

inline constexpr long kGroupOrderCap = 50000;

// |<sigma0, sigma1>| by breadth-first closure under right multiplication by
// the generators.
inline long monodromy_order(const Dessin& d, long cap = kGroupOrderCap) {
    std::set<Permutation> elements{Permutation::identity(d.degree())};
    std::vector<Permutation> frontier{Permutation::identity(d.degree())};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& g : frontier)
            for (const auto& s : {d.sigma0, d.sigma1}) {
                Permutation h = g * s;
                if (elements.insert(h).second) {
                    if (static_cast<long>(elements.size()) > cap)
                        throw cap_error("monodromy group exceeds the element cap");
                    next.push_back(std::move(h));
                }
            }
        frontier = std::move(next);
    }
    return static_cast<long>(elements.size());
}

// Prime divisors of the monodromy group order; each is <= n because the
// group embeds in S_n.
inline std::set<long> beckmann_primes(const Dessin& d) {
    long order = monodromy_order(d);
    std::set<long> out;
    for (const auto& [p, e] : factor(Int(order))) out.insert(static_cast<long>(p));
    return out;
}

}  // namespace belyi
