#include "hlattice/twins.hpp"

#include <algorithm>
#include <limits>

#include "hlattice/errors.hpp"
#include "hlattice/intervals.hpp"
#include "hlattice/sieve.hpp"

namespace hlattice::twins {

namespace {

int type_rank(PairType t) {
    switch (t) {
        case PairType::vv: return 0;
        case PairType::pv: return 1;
        case PairType::vp: return 2;
        default: return 3;
    }
}

// Marginals from the type letters; a census built this way always satisfies
// the counting identity, so no separate check is needed here.
PairCensus tally(const std::vector<DiagonalRow>& rows) {
    PairCensus c{};
    c.a = static_cast<std::int64_t>(rows.size());
    for (const DiagonalRow& r : rows) {
        switch (r.type) {
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
    return c;
}

} // namespace

std::vector<TwinPoint> twin_pairs(std::int64_t limit) {
    std::vector<TwinPoint> out;
    if (limit < 7) return out;
    const std::int64_t s_max = (limit - 1) / 6; // 6s+1 <= limit
    const std::int64_t chunk =
        std::min<std::int64_t>(sieve::segment_budget(), std::int64_t{1} << 22);
    for (std::int64_t lo = 1; lo <= s_max; lo += chunk) {
        const std::int64_t hi = std::min(lo + chunk, s_max + 1);
        const auto minus = sieve::classify_segment(Branch::minus, lo, hi);
        const auto plus = sieve::classify_segment(Branch::plus, lo, hi);
        for (std::int64_t s = lo; s < hi; ++s) {
            const auto i = static_cast<std::size_t>(s - lo);
            if (minus.classes[i] == MemberClass::prime &&
                plus.classes[i] == MemberClass::prime)
                out.push_back(TwinPoint{s, 6 * s - 1, 6 * s + 1, PairType::pp});
        }
    }
    return out;
}

DiagonalCensus diagonal_census(std::int64_t p) {
    if (p <= 3)
        throw OutOfDomain("diagonal census is defined for primes p > 3");
    if (!sieve::is_prime(static_cast<std::uint64_t>(p)))
        throw NotPrime(p);
    const std::int64_t q = intervals::next_prime(p);
    std::int64_t p2 = 0;
    std::int64_t q2 = 0;
    if (__builtin_mul_overflow(p, p, &p2) || __builtin_mul_overflow(q, q, &q2))
        throw OverflowError("interval bounds overflow 64-bit");
    const std::int64_t t_lo = (p2 - 1) / 6;
    const std::int64_t t_hi = (q2 - 1) / 6;

    DiagonalCensus dc;
    dc.p = p;
    dc.q = q;
    dc.length = t_hi - t_lo;
    dc.rows.reserve(static_cast<std::size_t>(dc.length));
    for (std::int64_t t = t_lo; t < t_hi; ++t) {
        const std::int64_t mv = 6 * t - 1;
        const std::int64_t pv = 6 * t + 1;
        const PairType ty =
            pair_type_of(sieve::member_class(mv), sieve::member_class(pv));
        dc.rows.push_back(DiagonalRow{t - t_lo + 1, t, mv, pv, ty});
    }
    dc.counts = tally(dc.rows);
    if (!goldbach2::census_identity_check(dc.counts))
        throw IdentityViolation("diagonal census failed its counting identity at p = " +
                                std::to_string(p));
    return dc;
}

StreichungTrace streichung(std::int64_t p) {
    if (p > 3 && !sieve::is_prime(static_cast<std::uint64_t>(p)))
        throw NotPrime(p);
    if (p < 23)
        throw NotInSecondSection(p);

    StreichungTrace tr;
    tr.p = p;
    tr.initial = diagonal_census(p);
    const PairCensus& c = tr.initial.counts;

    tr.sorted_rows = tr.initial.rows;
    std::stable_sort(tr.sorted_rows.begin(), tr.sorted_rows.end(),
                     [](const DiagonalRow& a, const DiagonalRow& b) {
                         const int ra = type_rank(a.type);
                         const int rb = type_rank(b.type);
                         return ra != rb ? ra < rb : a.row < b.row;
                     });

    tr.k3 = c.v_first - c.p_second; // = n_vv - n_pp, the vv overhang
    if (tr.k3 < 0)
        throw OverhangNegative("v_minus < p_plus at p = " + std::to_string(p) +
                               "; no vv overhang to strike");
    tr.after_overhang.assign(tr.sorted_rows.begin() + tr.k3, tr.sorted_rows.end());

    tr.k4 = c.n_vp > c.n_pv ? c.n_vp - c.n_pv : c.n_pv - c.n_vp;
    tr.k4_type = c.n_vp > c.n_pv ? PairType::vp : PairType::pv;
    tr.after_balance.reserve(tr.after_overhang.size() -
                             static_cast<std::size_t>(tr.k4));
    std::int64_t left = tr.k4;
    for (const DiagonalRow& r : tr.after_overhang) {
        if (left > 0 && r.type == tr.k4_type) {
            --left;
            continue;
        }
        tr.after_balance.push_back(r);
    }

    tr.final_rows = tr.after_balance;
    std::sort(tr.final_rows.begin(), tr.final_rows.end(),
              [](const DiagonalRow& a, const DiagonalRow& b) { return a.row < b.row; });
    tr.final_counts = tally(tr.final_rows);
    return tr;
}

std::vector<std::pair<std::int64_t, std::int64_t>>
generalized_twins(std::int64_t offset, std::int64_t limit) {
    if (offset < 0 || offset % 2 != 0)
        throw BadOffset(offset);
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    if (limit < 5 || limit - offset < 5) return out;
    for (std::int64_t b = 5; b <= limit - offset; b += 2) {
        if (b % 3 == 0) continue;
        const std::int64_t a = b + offset;
        if (a % 3 == 0) continue; // cross-branch offsets skip one residue
        if (sieve::is_prime(static_cast<std::uint64_t>(b)) &&
            sieve::is_prime(static_cast<std::uint64_t>(a)))
            out.emplace_back(a, b);
    }
    return out;
}

} // namespace hlattice::twins
