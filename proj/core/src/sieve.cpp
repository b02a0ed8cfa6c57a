#include "hlattice/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <memory>
#include <mutex>

namespace hlattice::sieve {

namespace {

std::atomic<std::int64_t> g_segment_budget{std::int64_t{1} << 24};

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Strong pseudoprime test. The witness set is proven to be exhaustive for
// every n < 2^64, so the answer is exact, not probabilistic.
bool miller_rabin64(u64 n) {
    static constexpr u64 witnesses[] = {2, 325, 9375, 28178, 450775, 9780504, 1795265022};
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : witnesses) {
        a %= n;
        if (a == 0) continue;
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Odd-only bitmap of primality below kSmallLimit, built on first use.
constexpr u64 kSmallLimit = u64{1} << 22;

const std::vector<u64>& small_sieve_words() {
    static const std::vector<u64> words = [] {
        const u64 half = kSmallLimit / 2; // bit i represents 2i+1
        std::vector<u64> w(half / 64 + 1, ~u64{0});
        auto clear_bit = [&](u64 i) { w[i >> 6] &= ~(u64{1} << (i & 63)); };
        clear_bit(0); // 1 is not prime
        for (u64 n = 3; n * n < kSmallLimit; n += 2) {
            if (w[(n >> 1) >> 6] & (u64{1} << ((n >> 1) & 63))) {
                for (u64 m = n * n; m < kSmallLimit; m += 2 * n) clear_bit(m >> 1);
            }
        }
        return w;
    }();
    return words;
}

// Primes <= bound, grown on demand; readers take an atomic snapshot so the
// list is safe to consult from parallel scans once prebuilt.
struct PrimeCache {
    std::mutex grow_mutex;
    std::atomic<std::int64_t> bound{0};
    std::shared_ptr<const std::vector<std::int64_t>> primes{
        std::make_shared<const std::vector<std::int64_t>>()};
};

PrimeCache& prime_cache() {
    static PrimeCache cache;
    return cache;
}

std::shared_ptr<const std::vector<std::int64_t>> primes_up_to(std::int64_t bound) {
    auto& cache = prime_cache();
    if (cache.bound.load(std::memory_order_acquire) >= bound)
        return std::atomic_load(&cache.primes);
    std::lock_guard<std::mutex> lock(cache.grow_mutex);
    if (cache.bound.load(std::memory_order_acquire) >= bound)
        return std::atomic_load(&cache.primes);
    const std::int64_t target = std::max<std::int64_t>(bound * 2, 1 << 16);
    std::vector<std::uint8_t> comp(static_cast<std::size_t>(target) + 1, 0);
    auto list = std::make_shared<std::vector<std::int64_t>>();
    for (std::int64_t n = 2; n <= target; ++n) {
        if (!comp[static_cast<std::size_t>(n)]) {
            list->push_back(n);
            for (std::int64_t m = n * n; m <= target; m += n)
                comp[static_cast<std::size_t>(m)] = 1;
        }
    }
    std::atomic_store(&cache.primes,
                      std::shared_ptr<const std::vector<std::int64_t>>(list));
    cache.bound.store(target, std::memory_order_release);
    return std::atomic_load(&cache.primes);
}

// Modular inverse of 6 mod q for prime q > 3.
std::int64_t inv6_mod(std::int64_t q) {
    return static_cast<std::int64_t>(powmod(6 % static_cast<u64>(q),
                                            static_cast<u64>(q - 2),
                                            static_cast<u64>(q)));
}

} // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    if (n < kSmallLimit) {
        const u64 i = n >> 1;
        return (small_sieve_words()[i >> 6] >> (i & 63)) & 1;
    }
    if (n % 3 == 0) return false;
    return miller_rabin64(n);
}

MemberClass member_class(std::int64_t value) {
    const auto [s, b] = traeger_of(value);
    (void)b;
    if (s == 0) return MemberClass::unit;
    const std::int64_t a = value < 0 ? -value : value;
    return is_prime(static_cast<u64>(a)) ? MemberClass::prime : MemberClass::multiple;
}

std::vector<std::int64_t> relevant_primes(std::int64_t p) {
    if (p <= 3)
        throw OutOfDomain("relevant primes are defined for p > 3");
    if (!is_prime(static_cast<u64>(p)))
        throw NotPrime(p);
    auto primes = primes_up_to(p);
    std::vector<std::int64_t> out;
    for (std::int64_t q : *primes) {
        if (q > p) break;
        if (q > 3) out.push_back(q);
    }
    return out;
}

std::int64_t SegmentClassification::count(MemberClass c) const {
    return std::count(classes.begin(), classes.end(), c);
}

SegmentClassification classify_segment(Branch branch, std::int64_t traeger_lo,
                                       std::int64_t traeger_hi) {
    if (traeger_lo < 0 || traeger_hi < traeger_lo)
        throw OutOfDomain("traeger window must satisfy 0 <= lo <= hi");
    const std::int64_t len = traeger_hi - traeger_lo;
    if (len > segment_budget())
        throw RangeTooLarge("segment of " + std::to_string(len) +
                            " traeger exceeds budget of " +
                            std::to_string(segment_budget()));

    SegmentClassification seg{branch, traeger_lo, traeger_hi, {}};
    seg.classes.assign(static_cast<std::size_t>(len), MemberClass::prime);
    if (len == 0) return seg;

    if (traeger_hi - 1 > (std::numeric_limits<std::int64_t>::max() - 1) / 6)
        throw OverflowError("segment values overflow 64-bit");
    const std::int64_t vmax = seg.value_at(traeger_hi - 1);
    if (traeger_lo == 0)
        seg.classes[0] = MemberClass::unit; // value +1 or -1

    if (vmax < 25) return seg; // no composite fits below 5^2

    const std::int64_t root = static_cast<std::int64_t>(isqrt(static_cast<u64>(vmax)));
    auto primes = primes_up_to(root);
    const int sign = branch == Branch::plus ? 1 : -1;
    for (std::int64_t q : *primes) {
        if (q < 5) continue;
        if (q > root) break;
        // Branch members divisible by q: 6t + sign = 0 mod q.
        const std::int64_t inv6 = inv6_mod(q);
        std::int64_t t0 = ((-sign * inv6) % q + q) % q;
        // First multiple of q at or after max(q^2, window start); everything
        // composite below q^2 carries a smaller prime factor and is marked
        // by that prime's progression instead.
        const std::int64_t vfirst = q * q;
        std::int64_t t = (vfirst - sign + 5) / 6; // ceil((q^2 - sign)/6)
        if (t < traeger_lo) t = traeger_lo;
        std::int64_t delta = (t0 - t) % q;
        if (delta < 0) delta += q;
        for (t += delta; t < traeger_hi; t += q)
            seg.classes[static_cast<std::size_t>(t - traeger_lo)] = MemberClass::multiple;
    }
    return seg;
}

MultipleProgression progression_of(std::int64_t p) {
    if (p <= 3 || !is_prime(static_cast<u64>(p)))
        throw NotPrime(p);
    std::int64_t sq = 0;
    if (__builtin_mul_overflow(p, p, &sq))
        throw OverflowError("p^2 overflows 64-bit");
    return MultipleProgression{p, sq, 6 * p};
}

std::vector<std::int64_t> progression_members_in(const MultipleProgression& prog,
                                                 std::int64_t lo, std::int64_t hi,
                                                 std::optional<Branch> branch) {
    if (lo < 0 || hi < lo)
        throw OutOfDomain("progression window must satisfy 0 <= lo <= hi");
    const std::int64_t p = prog.generator;
    std::vector<std::int64_t> out;
    // Terms are p*h for |h| in the lattice; h walks 1, 5, 7, 11, ... so the
    // per-branch stride is 6p and the two branches interleave.
    std::int64_t h = lo / p;
    if (h < 1) h = 1;
    while ((h % 6) != 1 && (h % 6) != 5) ++h;
    const std::int64_t h_max = (hi - 1) / p; // p*h < hi without overflow
    for (; h <= h_max; h += (h % 6 == 1) ? 4 : 2) {
        const std::int64_t v = p * h;
        if (v < lo) continue;
        if (branch) {
            const Branch b = (v % 6 == 1) ? Branch::plus : Branch::minus;
            if (b != *branch) continue;
        }
        out.push_back(v);
    }
    return out;
}

std::int64_t segment_budget() { return g_segment_budget.load(std::memory_order_relaxed); }

void set_segment_budget(std::int64_t entries) {
    if (entries < 1)
        throw OutOfDomain("segment budget must be positive");
    g_segment_budget.store(entries, std::memory_order_relaxed);
}

std::uint64_t isqrt(std::uint64_t n) {
    if (n == 0) return 0;
    u64 x = n;
    u64 bit = 0;
    for (u64 t = n; t; t >>= 2) ++bit;
    x = u64{1} << bit; // initial guess >= sqrt(n)
    while (true) {
        const u64 y = (x + n / x) / 2;
        if (y >= x) break;
        x = y;
    }
    while (u128(x) * x > n) --x; // x may sit one above the root
    return x;
}

} // namespace hlattice::sieve
