#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hlattice/hcore.hpp"

namespace hlattice::goldbach2 {

// Even numbers above 8 split by residue mod 6: +2 decomposes inside
// quadrant 1, 0 inside quadrants 2/4, -2 inside quadrant 3. The traeger
// sum s_e satisfies e = 6*s_e + residue.
struct EvenClass {
    std::int64_t e;
    int residue; // +2, 0, -2
    std::int64_t traeger_sum;
};

EvenClass classify_even(std::int64_t e);

// Quadrants whose component branches can sum to e, ascending.
std::vector<int> compatible_quadrants(std::int64_t e);

struct TypedPair {
    std::int64_t x;
    std::int64_t y;
    PairType type;
};

// One side of the rhombus x + y = e inside a quadrant: every decomposition
// of e into two lattice members of the quadrant's branch signature, listed
// by ascending first component. A is the side length.
struct RhombusSide {
    std::int64_t e;
    int quadrant;
    std::int64_t a;
    std::vector<TypedPair> pairs;
};

RhombusSide rhombus_side(std::int64_t e, int quadrant);

// Exact counts over one side. Marginals count each axis independently of
// the per-pair tallies, so the closed-form identity below cross-checks the
// two routes against each other.
struct PairCensus {
    std::int64_t e;
    int quadrant;
    std::int64_t a;
    std::int64_t p_first, v_first;   // classes of first components
    std::int64_t p_second, v_second; // classes of second components
    std::int64_t n_pp, n_pv, n_vp, n_vv;
};

PairCensus pair_census(const RhombusSide& side);

// Same census computed without materializing the side; suited to sweeps.
PairCensus census(std::int64_t e, int quadrant);

// True iff the closed forms reproduce the tallies exactly:
//   n_pp = [A - (n_pv + n_vp) - (v_first - p_second)] / 2
//   n_vv = n_pp + (v_first - p_second)
// plus all four marginal equations. Theorem-level; failure means code bug.
bool census_identity_check(const PairCensus& c);

// Unordered prime decompositions e = p + q, 3 < p <= q, ascending by p.
// An empty list is the distinguished no-solution outcome, never an error.
struct Solutions {
    std::int64_t e;
    int residue;
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
};

Solutions goldbach_solutions(std::int64_t e);

// Closed sweep over every even e in [e_lo, e_hi]. counts[(e-e_lo)/2] is the
// unordered solution count; identity checks run per e on the canonical
// quadrant with independently counted marginals.
struct ScanReport {
    std::int64_t e_lo;
    std::int64_t e_hi;
    std::vector<std::uint32_t> counts;
    std::vector<std::int64_t> no_solution;
    std::uint32_t min_count;
    std::int64_t min_count_e;
    std::int64_t identity_checked;
    std::int64_t identity_failures;
};

ScanReport scan_goldbach(std::int64_t e_lo, std::int64_t e_hi, int jobs = 0);

// Census identity verification over every even e in [e_lo, e_hi] and every
// quadrant compatible with e (one census for residues +-2, two for residue
// 0). Deliberately single-threaded: it is the reproducible reference sweep.
struct IdentitySweepReport {
    std::int64_t e_lo;
    std::int64_t e_hi;
    std::int64_t censuses_checked;
    std::int64_t failures;
};

IdentitySweepReport identity_sweep(std::int64_t e_lo, std::int64_t e_hi);

} // namespace hlattice::goldbach2
