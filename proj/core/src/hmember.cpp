#include "hlattice/hcore.hpp"

#include <cstdlib>
#include <limits>

namespace hlattice {

const char* to_string(MemberClass c) {
    switch (c) {
        case MemberClass::unit: return "unit";
        case MemberClass::prime: return "prime";
        case MemberClass::multiple: return "multiple";
    }
    return "?";
}

const char* to_string(PairType t) {
    switch (t) {
        case PairType::pp: return "pp";
        case PairType::pv: return "pv";
        case PairType::vp: return "vp";
        case PairType::vv: return "vv";
    }
    return "?";
}

PairType pair_type_of(MemberClass first, MemberClass second) {
    if (first == MemberClass::unit || second == MemberClass::unit)
        throw OutOfDomain("pair type is defined for prime/multiple components only");
    const bool fp = first == MemberClass::prime;
    const bool sp = second == MemberClass::prime;
    if (fp) return sp ? PairType::pp : PairType::pv;
    return sp ? PairType::vp : PairType::vv;
}

HMember HMember::from_value(std::int64_t value) {
    auto [s, b] = traeger_of(value);
    return HMember(value, s, b);
}

HMember HMember::from_traeger(std::int64_t traeger, Branch branch) {
    return member_from_traeger(traeger, branch);
}

HMember member_from_traeger(std::int64_t traeger, Branch branch) {
    if (traeger < 0)
        throw OutOfDomain("traeger must be non-negative");
    if (traeger > (std::numeric_limits<std::int64_t>::max() - 1) / 6)
        throw OverflowError("traeger too large for 64-bit value");
    const std::int64_t v = 6 * traeger + (branch == Branch::plus ? 1 : -1);
    return HMember::from_value(v);
}

std::pair<std::int64_t, Branch> traeger_of(std::int64_t x) {
    if (x == std::numeric_limits<std::int64_t>::min())
        throw NotHMember(x);
    if (x == -1)
        return {0, Branch::minus};
    const std::int64_t a = x < 0 ? -x : x;
    switch (a % 6) {
        case 1: return {(a - 1) / 6, Branch::plus};
        case 5: return {(a + 1) / 6, Branch::minus};
        default: throw NotHMember(x);
    }
}

HMember h_product(const HMember& x, const HMember& y) {
    std::int64_t v = 0;
    if (__builtin_mul_overflow(x.value(), y.value(), &v))
        throw OverflowError("h_product overflows 64-bit");
    HMember r = HMember::from_value(v);
    // Closure sanity: for non-unit factors the branch of the product is the
    // product of the branch signs. The unit -1 sits on branch - by canonical
    // coordinates but multiplies as |1|, so it is exempt.
    if (!x.is_unit() && !y.is_unit()) {
        const Branch expected =
            x.branch() == y.branch() ? Branch::plus : Branch::minus;
        if (r.branch() != expected)
            throw IdentityViolation("branch rule violated in h_product");
    }
    return r;
}

Branch power_branch(const HMember& p, std::uint64_t n) {
    if (p.branch() == Branch::plus || n % 2 == 0)
        return Branch::plus;
    return Branch::minus;
}

LatticePoint lattice_point(std::int64_t x, std::int64_t y) {
    return LatticePoint{HMember::from_value(x), HMember::from_value(y)};
}

int quadrant_of(const LatticePoint& pt) {
    const bool xp = pt.x.branch() == Branch::plus;
    const bool yp = pt.y.branch() == Branch::plus;
    if (xp && yp) return 1;
    if (!xp && yp) return 2;
    if (!xp && !yp) return 3;
    return 4;
}

} // namespace hlattice
