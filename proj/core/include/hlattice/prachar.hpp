#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hlattice/hcore.hpp"

namespace hlattice::prachar {

// Line through two lattice points, slope dy/dx in lowest terms with dx > 0.
// Vertical lines are not representable; horizontal ones (dy = 0) are.
struct LatticeLine {
    LatticePoint anchor;
    LatticePoint second;
    std::int64_t dy;
    std::int64_t dx;
};

LatticeLine line_through(const LatticePoint& second,
                         const LatticePoint& anchor = lattice_point(1, 1));

// All lattice points on y = (x+1)/2 with |x| <= limit: x = 12k+1, y = 6k+1.
// Ascending x; empty when limit < 1.
std::vector<LatticePoint> ppt_lattice_points(std::int64_t limit);

// The points above whose coordinates are both prime in absolute value,
// as signed value pairs (x, y), ascending x.
std::vector<std::pair<std::int64_t, std::int64_t>> ppt_solutions(std::int64_t limit);

// All lattice points (x, y) on the line with |x|, |y| <= limit, both
// coordinates on the lattice and prime in absolute value, ascending x.
// Integer points are parameterized as anchor + k*(dx, dy); the admissible k
// form a union of residue classes mod 6 (both coordinates must be = +-1
// mod 6), so the walk visits each class separately.
std::vector<std::pair<std::int64_t, std::int64_t>>
line_solutions(const LatticeLine& line, std::int64_t limit);

} // namespace hlattice::prachar
