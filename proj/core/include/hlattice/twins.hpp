#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hlattice/goldbach2.hpp"
#include "hlattice/hcore.hpp"

namespace hlattice::twins {

using goldbach2::PairCensus;

// One traeger position seen across both branches: the value pair
// (6s-1, 6s+1). Type letters read minus branch first, plus branch second.
struct TwinPoint {
    std::int64_t traeger;
    std::int64_t minus_value;
    std::int64_t plus_value;
    PairType pair_type;
    bool operator==(const TwinPoint&) const = default;
};

// All s >= 1 with both 6s-1 and 6s+1 prime and 6s+1 <= limit, ascending.
// Returns an empty list below the first twin (limit < 7).
std::vector<TwinPoint> twin_pairs(std::int64_t limit);

// Row of the paired relevance interval [p^2, q^2): position inside the
// interval (1-based), shared traeger, both values, and the pair type.
struct DiagonalRow {
    std::int64_t row;
    std::int64_t traeger;
    std::int64_t minus_value;
    std::int64_t plus_value;
    PairType type;
    bool operator==(const DiagonalRow&) const = default;
};

// Pair-type census over the two parallel intervals [p^2, q^2). The embedded
// counts use first = minus branch, second = plus branch, a = length; the
// rhombus fields e and quadrant stay zero. Classification here is memberwise
// primality, deliberately a different route than the intervals module.
struct DiagonalCensus {
    std::int64_t p;
    std::int64_t q;
    std::int64_t length;
    PairCensus counts;
    std::vector<DiagonalRow> rows;
};

DiagonalCensus diagonal_census(std::int64_t p);

// Two-step overhang removal on the diagonal census of [p^2, q^2).
// Step 1 lists the interval, step 2 sorts by type (vv, pv, vp, pp; row
// ascending within a type), step 3 strikes the vv overhang v_minus - p_plus
// from the top, step 4 strikes |n_vp - n_pv| rows from the larger of the
// mixed types, step 5 presents the survivors in row order. Which rows
// survive is a convention (strike from the top of the sorted listing); only
// the counts carry meaning.
struct StreichungTrace {
    std::int64_t p;
    DiagonalCensus initial;                  // step 1
    std::vector<DiagonalRow> sorted_rows;    // step 2
    std::int64_t k3;                         // vv rows struck in step 3
    std::vector<DiagonalRow> after_overhang; // step 3
    std::int64_t k4;                         // mixed rows struck in step 4
    PairType k4_type;                        // which mixed type was struck
    std::vector<DiagonalRow> after_balance;  // step 4
    std::vector<DiagonalRow> final_rows;     // step 5
    PairCensus final_counts;
};

StreichungTrace streichung(std::int64_t p);

// Prime pairs (a, b) with a - b = offset, b >= 5, a <= limit, ascending b.
// Offsets 6i land on one branch, 6i+2 and 6i+4 cross branches; odd or
// negative offsets are rejected.
std::vector<std::pair<std::int64_t, std::int64_t>>
generalized_twins(std::int64_t offset, std::int64_t limit);

} // namespace hlattice::twins
