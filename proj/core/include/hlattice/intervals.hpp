#pragma once

#include <cstdint>
#include <vector>

#include "hlattice/sieve.hpp"

namespace hlattice::intervals {

// Smallest prime greater than p. Throws OverflowError if the search would
// leave the signed 64-bit range.
std::int64_t next_prime(std::int64_t p);

// The window [p^2, q^2) for consecutive primes p < q, carried on both
// branches over the identical traeger range [ (p^2-1)/6, (q^2-1)/6 ). The
// minus branch holds the same traeger window shifted to values v-2.
struct RelevanceInterval {
    std::int64_t p;
    std::int64_t q;
    std::int64_t length; // (q^2 - p^2)/6, member count per branch
    std::int64_t gap;    // q - p
    sieve::SegmentClassification plus;
    sieve::SegmentClassification minus;
};

RelevanceInterval relevance_interval(std::int64_t p);

struct IntervalCounts {
    std::int64_t p;
    std::int64_t q;
    std::int64_t length;
    std::int64_t primes_plus;
    std::int64_t primes_minus;
    std::int64_t multiples_plus;
    std::int64_t multiples_minus;
    std::int64_t gap;
};

IntervalCounts interval_counts(std::int64_t p);

enum class TableOrder {
    ascending_p, // one row per prime 5 <= p <= p_max, by p
    by_gap,      // same rows grouped by gap q-p ascending, then by p
};

std::vector<IntervalCounts> interval_table(std::int64_t p_max,
                                           TableOrder order = TableOrder::ascending_p);

} // namespace hlattice::intervals
