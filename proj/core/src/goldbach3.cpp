#include "hlattice/goldbach3.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "branch_table.hpp"
#include "hlattice/errors.hpp"
#include "hlattice/sieve.hpp"

namespace hlattice::goldbach3 {

namespace {

constexpr std::array<std::array<int, 3>, 8> kSubcubeSigns{{
    {+1, +1, +1},
    {-1, +1, +1},
    {+1, -1, +1},
    {-1, -1, +1},
    {-1, -1, -1},
    {+1, -1, -1},
    {+1, +1, -1},
    {-1, +1, -1},
}};

int sign_of(std::int64_t v) { return v % 6 == 1 ? +1 : -1; }

TripleSolution make_solution(const std::array<std::int64_t, 3>& comps) {
    TripleSolution ts;
    ts.components = comps;
    for (std::size_t i = 0; i < 3; ++i) {
        ts.signs[i] = sign_of(comps[i]);
        ts.traegers[i] = (comps[i] - ts.signs[i]) / 6;
    }
    ts.subcube = subcube_of(ts.signs);
    return ts;
}

// next value on the merged 6k+-1 walk: 5, 7, 11, 13, 17, ...
std::int64_t next_h(std::int64_t v) { return v + (v % 6 == 5 ? 2 : 4); }

void check_odd_n(std::int64_t n) {
    if (n % 2 == 0 || n < 15)
        throw OutOfDomain("triple decompositions over the lattice need odd n >= 15");
}

} // namespace

OctahedronLayer octahedron_layer(std::int64_t s) {
    if (s < 2)
        throw OutOfDomain("octahedron layers start at traeger sum s = 2");
    OctahedronLayer layer;
    layer.s = s;
    layer.odd_numbers = {6 * s - 3, 6 * s - 1, 6 * s + 1, 6 * s + 3};
    for (std::size_t i = 0; i < 8; ++i) {
        const auto& sg = kSubcubeSigns[i];
        layer.subcubes[i] = SubCube{static_cast<int>(i) + 1, sg,
                                    sg[0] + sg[1] + sg[2]};
    }
    return layer;
}

int subcube_of(const std::array<int, 3>& signs) {
    for (int c : signs)
        if (c != 1 && c != -1)
            throw OutOfDomain("sub-cube signs must be +1 or -1");
    for (std::size_t i = 0; i < 8; ++i)
        if (kSubcubeSigns[i] == signs) return static_cast<int>(i) + 1;
    return 0; // unreachable
}

std::int64_t layer_of(std::int64_t n) {
    if (n % 2 == 0 || n < 9)
        throw OutOfDomain("layers cover odd numbers from 9 on");
    switch (n % 6) {
        case 3: return (n - 3) / 6;
        case 1: return (n - 1) / 6;
        default: return (n + 1) / 6;
    }
}

std::vector<std::array<std::int64_t, 3>> unordered_triples(std::int64_t n) {
    check_odd_n(n);
    std::vector<std::array<std::int64_t, 3>> out;
    for (std::int64_t x = 5; 3 * x <= n; x = next_h(x)) {
        if (!sieve::is_prime(static_cast<std::uint64_t>(x))) continue;
        for (std::int64_t y = x; 2 * y <= n - x; y = next_h(y)) {
            if (!sieve::is_prime(static_cast<std::uint64_t>(y))) continue;
            const std::int64_t z = n - x - y;
            if (z % 6 != 1 && z % 6 != 5) continue;
            if (sieve::is_prime(static_cast<std::uint64_t>(z)))
                out.push_back({x, y, z});
        }
    }
    return out;
}

std::vector<TripleSolution> triple_solutions(std::int64_t n) {
    std::vector<TripleSolution> out;
    for (const auto& rep : unordered_triples(n)) {
        std::array<std::int64_t, 3> perm = rep;
        do {
            out.push_back(make_solution(perm));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    std::sort(out.begin(), out.end(),
              [](const TripleSolution& a, const TripleSolution& b) {
                  return a.components < b.components;
              });
    return out;
}

ScanReport3 scan_3gh(std::int64_t n_lo, std::int64_t n_hi, int jobs) {
    if (n_lo < 15)
        throw OutOfDomain("triple scans start at n = 15");
    if (n_hi < n_lo)
        throw OutOfDomain("empty scan range");
    const std::int64_t lo = n_lo % 2 == 0 ? n_lo + 1 : n_lo;
    const std::int64_t hi = n_hi % 2 == 0 ? n_hi - 1 : n_hi;
    if (hi < lo)
        throw OutOfDomain("scan range holds no odd number");

    const detail::BranchTable bt = detail::BranchTable::build(hi / 6 + 2);

    // Ordered two-prime counts g2o[m/2] for every even pair sum m <= hi - 5.
    std::vector<std::uint32_t> g2o(static_cast<std::size_t>(hi / 2 + 1), 0);
    for (std::int64_t m = 10; m <= hi - 5; m += 2)
        g2o[static_cast<std::size_t>(m / 2)] =
            static_cast<std::uint32_t>(detail::ordered_pair_count(bt, m));

    // Ascending primes > 3 up to the table bound, straight off the bitmaps.
    std::vector<std::int64_t> primes;
    for (std::int64_t t = 1; t <= bt.t_max; ++t) {
        if (bt.bit(bt.prime_minus, t)) primes.push_back(6 * t - 1);
        if (bt.bit(bt.prime_plus, t)) primes.push_back(6 * t + 1);
    }

    const std::int64_t n_odds = (hi - lo) / 2 + 1;
    ScanReport3 rep;
    rep.n_lo = lo;
    rep.n_hi = hi;
    rep.unordered.assign(static_cast<std::size_t>(n_odds), 0);
    rep.ordered.assign(static_cast<std::size_t>(n_odds), 0);
    rep.min_component.assign(static_cast<std::size_t>(n_odds), 0);

    if (jobs <= 0)
        jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    const std::int64_t chunk = 4096;
    const std::int64_t n_chunks = (n_odds + chunk - 1) / chunk;
    std::vector<std::vector<std::int64_t>> chunk_empty(static_cast<std::size_t>(n_chunks));
    std::atomic<std::int64_t> next{0};

    auto solve_one = [&](std::int64_t n, std::size_t idx) {
        std::uint64_t t = 0;
        std::int64_t min_comp = 0;
        for (std::int64_t x : primes) {
            if (x > n - 10) break;
            const std::uint32_t pairs = g2o[static_cast<std::size_t>((n - x) / 2)];
            t += pairs;
            if (min_comp == 0 && pairs > 0) min_comp = x;
        }
        std::int64_t m2 = 0;
        for (std::int64_t b : primes) {
            if (2 * b > n - 5) break;
            if (bt.prime_value(n - 2 * b)) ++m2;
        }
        const std::int64_t d1 =
            n % 3 == 0 && bt.prime_value(n / 3) ? 1 : 0;
        // t counts each all-distinct triple 6 times, each two-equal triple 3
        // times and a three-equal one once; m2 holds the latter two kinds.
        const std::int64_t num = static_cast<std::int64_t>(t) - 3 * m2 + 2 * d1;
        if (num < 0 || num % 6 != 0)
            throw IdentityViolation("ordered/unordered triple bookkeeping broke at n = " +
                                    std::to_string(n));
        rep.ordered[idx] = t;
        rep.unordered[idx] = static_cast<std::uint32_t>(num / 6 + m2);
        rep.min_component[idx] = min_comp;
    };

    auto worker = [&] {
        for (;;) {
            const std::int64_t ci = next.fetch_add(1);
            if (ci >= n_chunks) break;
            const std::int64_t first = ci * chunk;
            const std::int64_t last = std::min(first + chunk, n_odds);
            for (std::int64_t idx = first; idx < last; ++idx) {
                const std::int64_t n = lo + 2 * idx;
                solve_one(n, static_cast<std::size_t>(idx));
                if (rep.unordered[static_cast<std::size_t>(idx)] == 0)
                    chunk_empty[static_cast<std::size_t>(ci)].push_back(n);
            }
        }
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back([&, j] {
                try {
                    worker();
                } catch (...) {
                    errors[static_cast<std::size_t>(j)] = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        for (const auto& err : errors)
            if (err) std::rethrow_exception(err);
    }

    for (auto& v : chunk_empty)
        rep.no_solution.insert(rep.no_solution.end(), v.begin(), v.end());
    rep.min_unordered = rep.unordered.empty() ? 0 : rep.unordered[0];
    rep.min_unordered_n = lo;
    for (std::int64_t idx = 0; idx < n_odds; ++idx) {
        if (rep.unordered[static_cast<std::size_t>(idx)] < rep.min_unordered) {
            rep.min_unordered = rep.unordered[static_cast<std::size_t>(idx)];
            rep.min_unordered_n = lo + 2 * idx;
        }
    }
    return rep;
}

} // namespace hlattice::goldbach3
