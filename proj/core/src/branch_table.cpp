#include "branch_table.hpp"

#include <algorithm>
#include <bit>

#include "hlattice/sieve.hpp"

namespace hlattice::detail {

namespace {

std::vector<std::uint64_t> reverse_bits(const std::vector<std::uint64_t>& v,
                                        std::int64_t t_max) {
    std::vector<std::uint64_t> out(v.size(), 0);
    for (std::int64_t t = 0; t <= t_max; ++t) {
        if ((v[static_cast<std::size_t>(t >> 6)] >> (t & 63)) & 1) {
            const std::int64_t j = t_max - t;
            out[static_cast<std::size_t>(j >> 6)] |= std::uint64_t{1} << (j & 63);
        }
    }
    return out;
}

} // namespace

BranchTable BranchTable::build(std::int64_t t_max) {
    BranchTable bt;
    bt.t_max = t_max;
    const std::size_t words = static_cast<std::size_t>(t_max / 64 + 1);
    bt.prime_plus.assign(words, 0);
    bt.mult_plus.assign(words, 0);
    bt.prime_minus.assign(words, 0);
    bt.mult_minus.assign(words, 0);
    bt.pref_prime_plus.assign(static_cast<std::size_t>(t_max) + 2, 0);
    bt.pref_prime_minus.assign(static_cast<std::size_t>(t_max) + 2, 0);

    const std::int64_t chunk = std::min<std::int64_t>(sieve::segment_budget(), 1 << 22);
    for (std::int64_t lo = 0; lo <= t_max; lo += chunk) {
        const std::int64_t hi = std::min(lo + chunk, t_max + 1);
        const auto plus = sieve::classify_segment(Branch::plus, lo, hi);
        const auto minus = sieve::classify_segment(Branch::minus, lo, hi);
        for (std::int64_t t = lo; t < hi; ++t) {
            const auto cp = plus.classes[static_cast<std::size_t>(t - lo)];
            const auto cm = minus.classes[static_cast<std::size_t>(t - lo)];
            const std::size_t w = static_cast<std::size_t>(t >> 6);
            const std::uint64_t m = std::uint64_t{1} << (t & 63);
            if (cp == MemberClass::prime) bt.prime_plus[w] |= m;
            else if (cp == MemberClass::multiple) bt.mult_plus[w] |= m;
            if (cm == MemberClass::prime) bt.prime_minus[w] |= m;
            else if (cm == MemberClass::multiple) bt.mult_minus[w] |= m;
        }
    }

    for (std::int64_t t = 0; t <= t_max; ++t) {
        bt.pref_prime_plus[static_cast<std::size_t>(t + 1)] =
            bt.pref_prime_plus[static_cast<std::size_t>(t)] +
            (bt.bit(bt.prime_plus, t) ? 1 : 0);
        bt.pref_prime_minus[static_cast<std::size_t>(t + 1)] =
            bt.pref_prime_minus[static_cast<std::size_t>(t)] +
            (bt.bit(bt.prime_minus, t) ? 1 : 0);
    }

    bt.rev_prime_plus = reverse_bits(bt.prime_plus, t_max);
    bt.rev_mult_plus = reverse_bits(bt.mult_plus, t_max);
    bt.rev_prime_minus = reverse_bits(bt.prime_minus, t_max);
    bt.rev_mult_minus = reverse_bits(bt.mult_minus, t_max);
    return bt;
}

std::uint64_t diagonal_count(const std::vector<std::uint64_t>& a,
                             const std::vector<std::uint64_t>& brev,
                             std::int64_t t_max, std::int64_t S,
                             std::int64_t i_lo, std::int64_t i_hi) {
    // clamp so that 0 <= S - i <= t_max
    i_lo = std::max(i_lo, S - t_max);
    i_hi = std::min({i_hi, S, t_max});
    if (i_lo > i_hi) return 0;

    // b[S - i] = brev[i + shift] with shift = t_max - S
    const std::int64_t shift = t_max - S;
    const auto word_of = [&](const std::vector<std::uint64_t>& v, std::int64_t k) {
        return (k >= 0 && k < static_cast<std::int64_t>(v.size())) ? v[static_cast<std::size_t>(k)]
                                                                   : std::uint64_t{0};
    };
    // 64 bits of brev starting at (possibly negative) bit position q
    const auto gather = [&](std::int64_t q) -> std::uint64_t {
        const std::int64_t wi = q >> 6;        // floor division
        const int off = static_cast<int>(q & 63);
        const std::uint64_t lo = word_of(brev, wi) >> off;
        const std::uint64_t hi = off ? word_of(brev, wi + 1) << (64 - off) : 0;
        return lo | hi;
    };

    std::uint64_t acc = 0;
    const std::int64_t w_first = i_lo >> 6;
    const std::int64_t w_last = i_hi >> 6;
    for (std::int64_t w = w_first; w <= w_last; ++w) {
        std::uint64_t bits = word_of(a, w) & gather(w * 64 + shift);
        if (w == w_first && (i_lo & 63))
            bits &= ~std::uint64_t{0} << (i_lo & 63);
        if (w == w_last && ((i_hi & 63) != 63))
            bits &= ~std::uint64_t{0} >> (63 - (i_hi & 63));
        acc += static_cast<std::uint64_t>(std::popcount(bits));
    }
    return acc;
}

std::uint64_t ordered_pair_count(const BranchTable& bt, std::int64_t m) {
    switch (m % 6) {
        case 2: { // both components on the plus branch
            const std::int64_t a = (m - 8) / 6;
            return diagonal_count(bt.prime_plus, bt.rev_prime_plus, bt.t_max,
                                  a + 1, 1, a);
        }
        case 4: { // both on the minus branch
            const std::int64_t a = (m - 4) / 6;
            return diagonal_count(bt.prime_minus, bt.rev_prime_minus, bt.t_max,
                                  a + 1, 1, a);
        }
        default: { // cross-branch, and its mirror with the roles swapped
            const std::int64_t k = m / 6;
            return 2 * diagonal_count(bt.prime_minus, bt.rev_prime_plus,
                                      bt.t_max, k, 1, k - 1);
        }
    }
}

} // namespace hlattice::detail
