#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hlattice/hcore.hpp"

namespace hlattice::sieve {

// Deterministic 64-bit primality: small inputs answered from a lazily built
// sieve cache, larger ones by a strong-pseudoprime test with a witness set
// proven exhaustive for all n < 2^64. 2 and 3 count as primes here even
// though they are not lattice members.
bool is_prime(std::uint64_t n);

// unit / prime / multiple of |value|; throws NotHMember off the lattice.
MemberClass member_class(std::int64_t value);

// Primes q with 3 < q <= p, ascending. These are exactly the generators
// whose multiple progressions can reach into the interval [p^2, q^2).
// Throws NotPrime unless p is prime, OutOfDomain for p <= 3.
std::vector<std::int64_t> relevant_primes(std::int64_t p);

struct SegmentClassification {
    Branch branch;
    std::int64_t traeger_lo; // inclusive
    std::int64_t traeger_hi; // exclusive
    std::vector<MemberClass> classes; // classes[t - traeger_lo]

    std::int64_t value_at(std::int64_t traeger) const {
        return 6 * traeger + (branch == Branch::plus ? 1 : -1);
    }
    std::int64_t count(MemberClass c) const;
};

// Classify one branch over a traeger window [lo, hi). Within a branch a
// prime q > 3 divides members at exactly one traeger residue mod q (the
// solution of 6t = -+1 mod q), so marking strides by q in traeger space,
// i.e. 6q in value space. Throws RangeTooLarge past the segment budget.
SegmentClassification classify_segment(Branch branch, std::int64_t traeger_lo,
                                       std::int64_t traeger_hi);

// The progression of multiples generated by a prime p > 3: first square
// term p^2, value stride 6p per branch.
struct MultipleProgression {
    std::int64_t generator;
    std::int64_t start; // p^2
    std::int64_t step;  // 6p
};

MultipleProgression progression_of(std::int64_t p);

// Terms of p*H inside [lo, hi) as positive values, ascending; restricted to
// one branch when given, both branches interleaved otherwise.
std::vector<std::int64_t> progression_members_in(const MultipleProgression& prog,
                                                 std::int64_t lo, std::int64_t hi,
                                                 std::optional<Branch> branch = std::nullopt);

// Segment memory budget in traeger entries (default 2^24). The CLI wires
// the HLATTICE_SEGMENT_BUDGET environment variable through here.
std::int64_t segment_budget();
void set_segment_budget(std::int64_t entries);

// Integer square root, floor(sqrt(n)). Exposed because several modules need
// exact square bounds and floating point is banned throughout.
std::uint64_t isqrt(std::uint64_t n);

} // namespace hlattice::sieve
