#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace hlattice::goldbach3 {

// One of the eight sign patterns of a layer's solution cube, with the
// fixed numbering 1..8 and the rest-sum it contributes to 6s.
struct SubCube {
    int index;
    std::array<int, 3> signs; // each +1 or -1
    int rest_sum;             // sum of the signs: +3, +1, -1 or -3
    bool operator==(const SubCube&) const = default;
};

// Layer s of the octahedron: the four odd numbers 6s + {-3, -1, +1, +3}
// and the eight sub-cubes realizing them as sums of three branch signs.
struct OctahedronLayer {
    std::int64_t s;
    std::array<std::int64_t, 4> odd_numbers; // ascending
    std::array<SubCube, 8> subcubes;         // in numbering order
};

OctahedronLayer octahedron_layer(std::int64_t s);

// Numbering: (+,+,+) -> 1, (-,+,+) -> 2, (+,-,+) -> 3, (-,-,+) -> 4,
// (-,-,-) -> 5, (+,-,-) -> 6, (+,+,-) -> 7, (-,+,-) -> 8.
int subcube_of(const std::array<int, 3>& signs);

// The layer realizing odd n >= 9 with the largest rest-sum: 6s+3 for
// n = 3 mod 6, 6s+1 and 6s-1 for the two prime-carrying residues.
std::int64_t layer_of(std::int64_t n);

// Ordered prime triple x + y + z = n with per-component traeger and sign.
struct TripleSolution {
    std::array<std::int64_t, 3> components; // all prime > 3
    std::array<std::int64_t, 3> traegers;
    std::array<int, 3> signs;
    int subcube;
    bool operator==(const TripleSolution&) const = default;
};

// All ordered triples of primes > 3 summing to odd n >= 15, ascending
// lexicographically by components.
std::vector<TripleSolution> triple_solutions(std::int64_t n);

// The nondecreasing representatives x <= y <= z only.
std::vector<std::array<std::int64_t, 3>> unordered_triples(std::int64_t n);

// Per-n triple counts over the odd numbers of [n_lo, n_hi]; index i holds
// n = n_lo + 2i. min_component is 0 where no solution exists.
struct ScanReport3 {
    std::int64_t n_lo = 0;
    std::int64_t n_hi = 0;
    std::vector<std::uint32_t> unordered;
    std::vector<std::uint64_t> ordered;
    std::vector<std::int64_t> min_component;
    std::vector<std::int64_t> no_solution;
    std::uint32_t min_unordered = 0;
    std::int64_t min_unordered_n = 0;
};

// jobs = 0 means hardware parallelism. Output is independent of jobs.
ScanReport3 scan_3gh(std::int64_t n_lo, std::int64_t n_hi, int jobs = 0);

} // namespace hlattice::goldbach3
