#include "hlattice/prachar.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>

#include "hlattice/errors.hpp"
#include "hlattice/sieve.hpp"

namespace hlattice::prachar {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    const std::int64_t q = a / b;
    const std::int64_t r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

int mod6(std::int64_t v) {
    const int m = static_cast<int>(v % 6);
    return m < 0 ? m + 6 : m;
}

bool admissible(std::int64_t v) {
    const int m = mod6(v);
    return m == 1 || m == 5;
}

// k-interval with c + k*d in [lo, hi], d != 0.
std::pair<std::int64_t, std::int64_t> k_range(std::int64_t c, std::int64_t d,
                                              std::int64_t lo, std::int64_t hi) {
    if (d > 0) return {ceil_div(lo - c, d), floor_div(hi - c, d)};
    return {ceil_div(hi - c, d), floor_div(lo - c, d)};
}

} // namespace

LatticeLine line_through(const LatticePoint& second, const LatticePoint& anchor) {
    const std::int64_t x1 = anchor.x.value();
    const std::int64_t y1 = anchor.y.value();
    const std::int64_t x2 = second.x.value();
    const std::int64_t y2 = second.y.value();
    if (x1 == x2 && y1 == y2)
        throw DegeneratePoints("two distinct points are needed to span a line");
    if (x1 == x2)
        throw AxisParallel("vertical line through x = " + std::to_string(x1) +
                           " has no slope");
    std::int64_t dy = y2 - y1;
    std::int64_t dx = x2 - x1;
    const std::int64_t g = std::gcd(std::abs(dy), std::abs(dx));
    dy /= g;
    dx /= g;
    if (dx < 0) {
        dx = -dx;
        dy = -dy;
    }
    return LatticeLine{anchor, second, dy, dx};
}

std::vector<LatticePoint> ppt_lattice_points(std::int64_t limit) {
    std::vector<LatticePoint> out;
    if (limit < 1) return out;
    const std::int64_t k_lo = ceil_div(-limit - 1, 12);
    const std::int64_t k_hi = floor_div(limit - 1, 12);
    out.reserve(static_cast<std::size_t>(k_hi - k_lo + 1));
    for (std::int64_t k = k_lo; k <= k_hi; ++k)
        out.push_back(lattice_point(12 * k + 1, 6 * k + 1));
    return out;
}

std::vector<std::pair<std::int64_t, std::int64_t>> ppt_solutions(std::int64_t limit) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (const LatticePoint& pt : ppt_lattice_points(limit)) {
        const std::int64_t x = pt.x.value();
        const std::int64_t y = pt.y.value();
        if (sieve::is_prime(static_cast<std::uint64_t>(std::abs(x))) &&
            sieve::is_prime(static_cast<std::uint64_t>(std::abs(y))))
            out.emplace_back(x, y);
    }
    return out;
}

std::vector<std::pair<std::int64_t, std::int64_t>>
line_solutions(const LatticeLine& line, std::int64_t limit) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    if (limit <= 0) return out;
    const std::int64_t x1 = line.anchor.x.value();
    const std::int64_t y1 = line.anchor.y.value();

    auto [k_lo, k_hi] = k_range(x1, line.dx, -limit, limit);
    if (line.dy != 0) {
        const auto [ky_lo, ky_hi] = k_range(y1, line.dy, -limit, limit);
        k_lo = std::max(k_lo, ky_lo);
        k_hi = std::min(k_hi, ky_hi);
    } else if (std::abs(y1) > limit) {
        return out;
    }

    std::array<bool, 6> valid{};
    for (int r = 0; r < 6; ++r)
        valid[static_cast<std::size_t>(r)] =
            admissible(x1 + r * line.dx) && admissible(y1 + r * line.dy);

    for (int r = 0; r < 6; ++r) {
        if (!valid[static_cast<std::size_t>(r)]) continue;
        std::int64_t k = k_lo + ((r - k_lo) % 6 + 6) % 6;
        std::int64_t x = x1 + k * line.dx;
        std::int64_t y = y1 + k * line.dy;
        for (; k <= k_hi; k += 6, x += 6 * line.dx, y += 6 * line.dy) {
            if (sieve::is_prime(static_cast<std::uint64_t>(std::abs(x))) &&
                sieve::is_prime(static_cast<std::uint64_t>(std::abs(y))))
                out.emplace_back(x, y);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace hlattice::prachar
