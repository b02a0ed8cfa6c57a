#pragma once

// Internal to the core library: bit-parallel class tables used by the
// closed-range sweeps. One bit per traeger and branch; anti-diagonal pair
// counts reduce to shifted AND + popcount over 64-bit words, which is what
// keeps full-range scans cheap on a single core.

#include <cstdint>
#include <vector>

#include "hlattice/hcore.hpp"

namespace hlattice::detail {

struct BranchTable {
    std::int64_t t_max = 0; // highest traeger covered, inclusive

    // bit t: member at traeger t on the branch is prime / multiple.
    // Traeger 0 (the units) is set in neither.
    std::vector<std::uint64_t> prime_plus, mult_plus, prime_minus, mult_minus;
    // Same bitmaps mirrored over [0, t_max]: rev bit j = bit (t_max - j).
    std::vector<std::uint64_t> rev_prime_plus, rev_mult_plus;
    std::vector<std::uint64_t> rev_prime_minus, rev_mult_minus;
    // pref[t] = number of prime bits among traeger [0, t).
    std::vector<std::uint32_t> pref_prime_plus, pref_prime_minus;

    static BranchTable build(std::int64_t t_max);

    bool bit(const std::vector<std::uint64_t>& v, std::int64_t t) const {
        return (v[static_cast<std::size_t>(t >> 6)] >> (t & 63)) & 1;
    }
    // primes among traeger [lo, hi] on the plus / minus branch
    std::int64_t primes_plus_in(std::int64_t lo, std::int64_t hi) const {
        return static_cast<std::int64_t>(pref_prime_plus[static_cast<std::size_t>(hi + 1)]) -
               pref_prime_plus[static_cast<std::size_t>(lo)];
    }
    std::int64_t primes_minus_in(std::int64_t lo, std::int64_t hi) const {
        return static_cast<std::int64_t>(pref_prime_minus[static_cast<std::size_t>(hi + 1)]) -
               pref_prime_minus[static_cast<std::size_t>(lo)];
    }
    // prime lookup by member value (positive), false off-table
    bool prime_value(std::int64_t v) const {
        if (v < 5 || v > 6 * t_max + 1) return false;
        switch (v % 6) {
            case 1: return bit(prime_plus, (v - 1) / 6);
            case 5: return bit(prime_minus, (v + 1) / 6);
            default: return false;
        }
    }
};

// sum over i in [i_lo, i_hi] of a[i] * b[S - i], where brev is b mirrored
// over [0, t_max]. Out-of-range b positions count as zero.
std::uint64_t diagonal_count(const std::vector<std::uint64_t>& a,
                             const std::vector<std::uint64_t>& brev,
                             std::int64_t t_max, std::int64_t S,
                             std::int64_t i_lo, std::int64_t i_hi);

// Ordered pairs (x, y) of primes > 3 with x + y = m, for even m >= 10.
// The residue of m picks the branch combination; 6 | m has two mirror-equal
// cross-branch families, hence the factor 2.
std::uint64_t ordered_pair_count(const BranchTable& bt, std::int64_t m);

} // namespace hlattice::detail
