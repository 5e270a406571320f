#pragma once

#include "belyi/rational.hpp"

#include <algorithm>
#include <vector>

namespace belyi {

// Permutation of {1..n}, stored as the 1-based image array: images[i-1] is
// the image of i.
class Permutation {
   public:
    Permutation() = default;
    static Permutation identity(long n) {
        std::vector<long> im(static_cast<size_t>(n));
        for (long i = 0; i < n; ++i) im[static_cast<size_t>(i)] = i + 1;
        return Permutation(std::move(im));
    }
    explicit Permutation(std::vector<long> images) : im_(std::move(images)) {
        std::vector<bool> seen(im_.size(), false);
        for (long v : im_) {
            if (v < 1 || v > degree() || seen[static_cast<size_t>(v - 1)])
                throw value_error("permutation images are not a bijection of {1..n}");
            seen[static_cast<size_t>(v - 1)] = true;
        }
    }
    // Build from disjoint cycles over {1..n}; points not mentioned are fixed.
    static Permutation from_cycles(long n, const std::vector<std::vector<long>>& cycles) {
        Permutation p = identity(n);
        for (const auto& cyc : cycles)
            for (size_t i = 0; i < cyc.size(); ++i) {
                long from = cyc[i], to = cyc[(i + 1) % cyc.size()];
                if (from < 1 || from > n) throw value_error("cycle entry out of range");
                p.im_[static_cast<size_t>(from - 1)] = to;
            }
        return Permutation(std::move(p.im_));  // re-validate
    }

    long degree() const { return static_cast<long>(im_.size()); }
    long apply(long i) const { return im_[static_cast<size_t>(i - 1)]; }
    const std::vector<long>& images() const { return im_; }

    // (a*b)(i) = a(b(i))
    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        if (a.degree() != b.degree()) throw value_error("permutation degree mismatch");
        std::vector<long> im(a.im_.size());
        for (long i = 1; i <= a.degree(); ++i)
            im[static_cast<size_t>(i - 1)] = a.apply(b.apply(i));
        return Permutation(std::move(im));
    }
    Permutation inverse() const {
        std::vector<long> im(im_.size());
        for (long i = 1; i <= degree(); ++i) im[static_cast<size_t>(apply(i) - 1)] = i;
        return Permutation(std::move(im));
    }
    bool is_identity() const {
        for (long i = 1; i <= degree(); ++i)
            if (apply(i) != i) return false;
        return true;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

    // Cycle type as a partition of n, sorted descending; fixed points included.
    std::vector<long> cycle_type() const {
        std::vector<long> parts;
        std::vector<bool> seen(im_.size(), false);
        for (long i = 1; i <= degree(); ++i) {
            if (seen[static_cast<size_t>(i - 1)]) continue;
            long len = 0, j = i;
            do {
                seen[static_cast<size_t>(j - 1)] = true;
                j = apply(j);
                ++len;
            } while (j != i);
            parts.push_back(len);
        }
        std::sort(parts.rbegin(), parts.rend());
        return parts;
    }
    long cycle_count() const {
        long c = 0;
        std::vector<bool> seen(im_.size(), false);
        for (long i = 1; i <= degree(); ++i) {
            if (seen[static_cast<size_t>(i - 1)]) continue;
            ++c;
            for (long j = i; !seen[static_cast<size_t>(j - 1)]; j = apply(j))
                seen[static_cast<size_t>(j - 1)] = true;
        }
        return c;
    }

   private:
    std::vector<long> im_;
};

}  // namespace belyi
