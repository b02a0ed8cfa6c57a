#pragma once

// Slow, obviously-correct reference implementations the tests compare the
// library against: trial division and brute force only, no shared code.

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

bool is_prime(std::int64_t n);

// Byte map of primality for 0..limit inclusive.
std::vector<std::uint8_t> prime_table(std::int64_t limit);

// -1 not a lattice member, 0 unit, 1 prime, 2 multiple.
int h_class(std::int64_t x);

// Prime pairs 3 < p <= q with p + q = e, ascending p.
std::vector<std::pair<std::int64_t, std::int64_t>> goldbach_pairs(std::int64_t e);

// Prime triples 3 < x <= y <= z with x + y + z = n, ascending.
std::vector<std::array<std::int64_t, 3>> prime_triples(std::int64_t n);

// Twin pairs (p, p+2), p >= 5, p + 2 <= limit.
std::int64_t twin_count(std::int64_t limit);

} // namespace oracle
