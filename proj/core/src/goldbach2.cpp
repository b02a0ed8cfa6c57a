#include "hlattice/goldbach2.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "branch_table.hpp"
#include "hlattice/sieve.hpp"

namespace hlattice::goldbach2 {

namespace {

// Geometry of one rhombus side as index arithmetic: first components run
// over traeger i in [1, a], second components sit at j = S - i with
// S = a + 1 in every quadrant.
struct SideShape {
    std::int64_t a;
    std::int64_t S;
    bool first_minus;
    bool second_minus;
};

SideShape side_shape(std::int64_t e, int quadrant) {
    switch (quadrant) {
        case 1: {
            const std::int64_t m = (e - 8) / 6;
            return {m, m + 1, false, false};
        }
        case 2: {
            const std::int64_t k = e / 6;
            return {k - 1, k, true, false};
        }
        case 3: {
            const std::int64_t m = (e - 4) / 6;
            return {m, m + 1, true, true};
        }
        default: {
            const std::int64_t k = e / 6;
            return {k - 1, k, false, true};
        }
    }
}

std::int64_t component_value(std::int64_t traeger, bool minus) {
    return 6 * traeger + (minus ? -1 : 1);
}

PairCensus census_from_table(const detail::BranchTable& bt, std::int64_t e,
                             int quadrant) {
    const SideShape sh = side_shape(e, quadrant);
    const auto& p1 = sh.first_minus ? bt.prime_minus : bt.prime_plus;
    const auto& m1 = sh.first_minus ? bt.mult_minus : bt.mult_plus;
    const auto& rp2 = sh.second_minus ? bt.rev_prime_minus : bt.rev_prime_plus;
    const auto& rm2 = sh.second_minus ? bt.rev_mult_minus : bt.rev_mult_plus;

    PairCensus c{};
    c.e = e;
    c.quadrant = quadrant;
    c.a = sh.a;
    c.n_pp = static_cast<std::int64_t>(
        detail::diagonal_count(p1, rp2, bt.t_max, sh.S, 1, sh.a));
    c.n_pv = static_cast<std::int64_t>(
        detail::diagonal_count(p1, rm2, bt.t_max, sh.S, 1, sh.a));
    c.n_vp = static_cast<std::int64_t>(
        detail::diagonal_count(m1, rp2, bt.t_max, sh.S, 1, sh.a));
    c.n_vv = static_cast<std::int64_t>(
        detail::diagonal_count(m1, rm2, bt.t_max, sh.S, 1, sh.a));
    if (sh.a > 0) {
        c.p_first = sh.first_minus ? bt.primes_minus_in(1, sh.a)
                                   : bt.primes_plus_in(1, sh.a);
        c.p_second = sh.second_minus ? bt.primes_minus_in(1, sh.a)
                                     : bt.primes_plus_in(1, sh.a);
    }
    c.v_first = sh.a - c.p_first;
    c.v_second = sh.a - c.p_second;
    return c;
}

// Unordered solutions of e from table bitmaps, exploiting side symmetry.
std::uint32_t unordered_from_table(const detail::BranchTable& bt, std::int64_t e,
                                   const PairCensus& c) {
    if (c.quadrant == 2 || c.quadrant == 4)
        return static_cast<std::uint32_t>(c.n_pp);
    const SideShape sh = side_shape(e, c.quadrant);
    std::int64_t middle = 0;
    if (sh.S % 2 == 0 && sh.S / 2 >= 1 && sh.S / 2 <= sh.a) {
        const auto& p = sh.first_minus ? bt.prime_minus : bt.prime_plus;
        middle = bt.bit(p, sh.S / 2) ? 1 : 0;
    }
    return static_cast<std::uint32_t>((c.n_pp + middle) / 2);
}

} // namespace

EvenClass classify_even(std::int64_t e) {
    if (e % 2 != 0)
        throw OutOfDomain("even classification needs an even number, got " +
                          std::to_string(e));
    if (e <= 8)
        throw OutOfDomain("even numbers decompose over the lattice only above 8");
    switch (e % 6) {
        case 2: return {e, +2, (e - 2) / 6};
        case 4: return {e, -2, (e + 2) / 6};
        default: return {e, 0, e / 6};
    }
}

std::vector<int> compatible_quadrants(std::int64_t e) {
    switch (classify_even(e).residue) {
        case +2: return {1};
        case -2: return {3};
        default: return {2, 4};
    }
}

RhombusSide rhombus_side(std::int64_t e, int quadrant) {
    if (quadrant < 1 || quadrant > 4)
        throw OutOfDomain("quadrant must be 1..4");
    const EvenClass ec = classify_even(e);
    const auto compat = compatible_quadrants(e);
    if (std::find(compat.begin(), compat.end(), quadrant) == compat.end())
        throw QuadrantMismatch("residue " + std::to_string(ec.residue) +
                               " of e = " + std::to_string(e) +
                               " does not decompose in quadrant " +
                               std::to_string(quadrant));
    const SideShape sh = side_shape(e, quadrant);
    RhombusSide side{e, quadrant, sh.a, {}};
    side.pairs.reserve(static_cast<std::size_t>(std::max<std::int64_t>(sh.a, 0)));
    for (std::int64_t i = 1; i <= sh.a; ++i) {
        const std::int64_t x = component_value(i, sh.first_minus);
        const std::int64_t y = component_value(sh.S - i, sh.second_minus);
        side.pairs.push_back(TypedPair{
            x, y, pair_type_of(sieve::member_class(x), sieve::member_class(y))});
    }
    return side;
}

PairCensus pair_census(const RhombusSide& side) {
    PairCensus c{};
    c.e = side.e;
    c.quadrant = side.quadrant;
    c.a = side.a;
    for (const TypedPair& tp : side.pairs) {
        switch (tp.type) {
            case PairType::pp: ++c.n_pp; break;
            case PairType::pv: ++c.n_pv; break;
            case PairType::vp: ++c.n_vp; break;
            case PairType::vv: ++c.n_vv; break;
        }
    }
    c.p_first = c.n_pp + c.n_pv;
    c.v_first = c.n_vp + c.n_vv;
    c.p_second = c.n_pp + c.n_vp;
    c.v_second = c.n_pv + c.n_vv;
    if (!census_identity_check(c))
        throw IdentityViolation("pair census failed its counting identity at e = " +
                                std::to_string(side.e));
    return c;
}

PairCensus census(std::int64_t e, int quadrant) {
    if (quadrant < 1 || quadrant > 4)
        throw OutOfDomain("quadrant must be 1..4");
    const auto compat = compatible_quadrants(e);
    if (std::find(compat.begin(), compat.end(), quadrant) == compat.end())
        throw QuadrantMismatch("residue of e = " + std::to_string(e) +
                               " does not decompose in quadrant " +
                               std::to_string(quadrant));
    const detail::BranchTable bt = detail::BranchTable::build(e / 6 + 2);
    PairCensus c = census_from_table(bt, e, quadrant);
    if (!census_identity_check(c))
        throw IdentityViolation("census failed its counting identity at e = " +
                                std::to_string(e));
    return c;
}

bool census_identity_check(const PairCensus& c) {
    if (c.n_pp + c.n_pv + c.n_vp + c.n_vv != c.a) return false;
    if (c.n_pp + c.n_pv != c.p_first) return false;
    if (c.n_vp + c.n_vv != c.v_first) return false;
    if (c.n_pp + c.n_vp != c.p_second) return false;
    if (c.n_pv + c.n_vv != c.v_second) return false;
    const std::int64_t d = c.v_first - c.p_second;
    const std::int64_t num = c.a - (c.n_pv + c.n_vp) - d;
    if (num % 2 != 0) return false;
    if (c.n_pp != num / 2) return false;
    if (c.n_vv != c.n_pp + d) return false;
    return true;
}

Solutions goldbach_solutions(std::int64_t e) {
    const EvenClass ec = classify_even(e);
    const int quadrant = ec.residue == 0 ? 2 : (ec.residue == 2 ? 1 : 3);
    const RhombusSide side = rhombus_side(e, quadrant);
    Solutions sol{e, ec.residue, {}};
    for (const TypedPair& tp : side.pairs) {
        if (tp.type != PairType::pp) continue;
        const std::int64_t lo = std::min(tp.x, tp.y);
        const std::int64_t hi = std::max(tp.x, tp.y);
        if (ec.residue != 0 && tp.x > tp.y) continue; // mirror duplicate
        sol.pairs.emplace_back(lo, hi);
    }
    std::sort(sol.pairs.begin(), sol.pairs.end());
    return sol;
}

ScanReport scan_goldbach(std::int64_t e_lo, std::int64_t e_hi, int jobs) {
    if (e_lo < 10)
        throw OutOfDomain("goldbach scans start at e = 10");
    if (e_hi < e_lo)
        throw OutOfDomain("empty scan range");
    const std::int64_t lo = e_lo + (e_lo % 2);
    const std::int64_t hi = e_hi - (e_hi % 2);
    if (hi < lo)
        throw OutOfDomain("scan range holds no even number");

    const detail::BranchTable bt = detail::BranchTable::build(hi / 6 + 2);
    const std::int64_t n_evens = (hi - lo) / 2 + 1;

    ScanReport rep{lo, hi, {}, {}, 0, 0, 0, 0};
    rep.counts.assign(static_cast<std::size_t>(n_evens), 0);

    if (jobs <= 0)
        jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    const std::int64_t chunk = 8192;
    const std::int64_t n_chunks = (n_evens + chunk - 1) / chunk;
    std::vector<std::vector<std::int64_t>> chunk_empty(static_cast<std::size_t>(n_chunks));
    std::atomic<std::int64_t> next{0};
    std::atomic<std::int64_t> failures{0};

    auto worker = [&] {
        for (;;) {
            const std::int64_t ci = next.fetch_add(1);
            if (ci >= n_chunks) break;
            const std::int64_t first = ci * chunk;
            const std::int64_t last = std::min(first + chunk, n_evens);
            std::int64_t local_fail = 0;
            for (std::int64_t idx = first; idx < last; ++idx) {
                const std::int64_t e = lo + 2 * idx;
                const int quadrant = e % 6 == 2 ? 1 : (e % 6 == 4 ? 3 : 2);
                const PairCensus c = census_from_table(bt, e, quadrant);
                if (!census_identity_check(c)) ++local_fail;
                const std::uint32_t cnt = unordered_from_table(bt, e, c);
                rep.counts[static_cast<std::size_t>(idx)] = cnt;
                if (cnt == 0) chunk_empty[static_cast<std::size_t>(ci)].push_back(e);
            }
            failures.fetch_add(local_fail);
        }
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (auto& v : chunk_empty)
        rep.no_solution.insert(rep.no_solution.end(), v.begin(), v.end());
    rep.identity_checked = n_evens;
    rep.identity_failures = failures.load();
    rep.min_count = rep.counts.empty() ? 0 : rep.counts[0];
    rep.min_count_e = lo;
    for (std::int64_t idx = 0; idx < n_evens; ++idx) {
        if (rep.counts[static_cast<std::size_t>(idx)] < rep.min_count) {
            rep.min_count = rep.counts[static_cast<std::size_t>(idx)];
            rep.min_count_e = lo + 2 * idx;
        }
    }
    return rep;
}

IdentitySweepReport identity_sweep(std::int64_t e_lo, std::int64_t e_hi) {
    if (e_lo < 10 || e_hi < e_lo)
        throw OutOfDomain("identity sweep needs 10 <= e_lo <= e_hi");
    const std::int64_t lo = e_lo + (e_lo % 2);
    const std::int64_t hi = e_hi - (e_hi % 2);
    const detail::BranchTable bt = detail::BranchTable::build(hi / 6 + 2);
    IdentitySweepReport rep{lo, hi, 0, 0};
    for (std::int64_t e = lo; e <= hi; e += 2) {
        for (int quadrant : compatible_quadrants(e)) {
            const PairCensus c = census_from_table(bt, e, quadrant);
            ++rep.censuses_checked;
            if (!census_identity_check(c)) ++rep.failures;
        }
    }
    return rep;
}

} // namespace hlattice::goldbach2
