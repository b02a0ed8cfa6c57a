#include "hlattice/intervals.hpp"

#include <algorithm>
#include <limits>

namespace hlattice::intervals {

std::int64_t next_prime(std::int64_t p) {
    if (p < 2) return 2;
    std::int64_t n = p + 1 + (p % 2); // next odd beyond p (or 3 for p=2)
    if (p == 2) n = 3;
    for (;; n += 2) {
        if (n < 0 || n > std::numeric_limits<std::int64_t>::max() - 2)
            throw OverflowError("next_prime leaves the 64-bit range");
        if (sieve::is_prime(static_cast<std::uint64_t>(n))) return n;
    }
}

RelevanceInterval relevance_interval(std::int64_t p) {
    if (p <= 3)
        throw OutOfDomain("relevance intervals are defined for primes p > 3");
    if (!sieve::is_prime(static_cast<std::uint64_t>(p)))
        throw NotPrime(p);
    const std::int64_t q = next_prime(p);
    std::int64_t psq = 0, qsq = 0;
    if (__builtin_mul_overflow(p, p, &psq) || __builtin_mul_overflow(q, q, &qsq))
        throw OverflowError("interval bounds overflow 64-bit");
    const std::int64_t t_lo = (psq - 1) / 6;
    const std::int64_t t_hi = (qsq - 1) / 6;
    RelevanceInterval iv{p, q, t_hi - t_lo, q - p,
                         sieve::classify_segment(Branch::plus, t_lo, t_hi),
                         sieve::classify_segment(Branch::minus, t_lo, t_hi)};
    return iv;
}

IntervalCounts interval_counts(std::int64_t p) {
    const RelevanceInterval iv = relevance_interval(p);
    return IntervalCounts{
        iv.p,
        iv.q,
        iv.length,
        iv.plus.count(MemberClass::prime),
        iv.minus.count(MemberClass::prime),
        iv.plus.count(MemberClass::multiple),
        iv.minus.count(MemberClass::multiple),
        iv.gap,
    };
}

std::vector<IntervalCounts> interval_table(std::int64_t p_max, TableOrder order) {
    std::vector<IntervalCounts> rows;
    for (std::int64_t p = 5; p <= p_max; p = next_prime(p))
        rows.push_back(interval_counts(p));
    if (order == TableOrder::by_gap) {
        std::stable_sort(rows.begin(), rows.end(),
                         [](const IntervalCounts& a, const IntervalCounts& b) {
                             return a.gap < b.gap;
                         });
    }
    return rows;
}

} // namespace hlattice::intervals
