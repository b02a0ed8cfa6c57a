#pragma once

#include <cstdint>
#include <utility>

#include "hlattice/errors.hpp"

namespace hlattice {

// The lattice H is the pair of arithmetic progressions 6k+1 / 6k-1. It is
// the smallest multiplicatively closed superset of the primes > 3; the units
// +1/-1 are its only invertible members.
enum class Branch : std::int8_t { minus = -1, plus = +1 };

enum class MemberClass : std::uint8_t { unit, prime, multiple };

// pp/pv/vp/vv: first letter classifies the first component of a pair,
// p = prime, v = multiple. Units never occur in censused pairs.
enum class PairType : std::uint8_t { pp, pv, vp, vv };

constexpr char branch_char(Branch b) { return b == Branch::plus ? '+' : '-'; }

const char* to_string(MemberClass c);
const char* to_string(PairType t);
PairType pair_type_of(MemberClass first, MemberClass second);

// A member carries its true signed value plus the traeger/branch coordinates
// of |value|: |value| = 6s+1 on branch +, 6s-1 on branch -. At s = 0 the two
// branches give the units +1 and -1; the sign disambiguates them.
class HMember {
  public:
    static HMember from_value(std::int64_t value);
    static HMember from_traeger(std::int64_t traeger, Branch branch);

    std::int64_t value() const { return value_; }
    std::int64_t traeger() const { return traeger_; }
    Branch branch() const { return branch_; }
    bool is_unit() const { return traeger_ == 0; }

    friend bool operator==(const HMember&, const HMember&) = default;

  private:
    HMember(std::int64_t value, std::int64_t traeger, Branch branch)
        : value_(value), traeger_(traeger), branch_(branch) {}

    std::int64_t value_;
    std::int64_t traeger_;
    Branch branch_;
};

// value = 6s+1 (branch +) or 6s-1 (branch -); at s = 0 this yields +1 / -1.
HMember member_from_traeger(std::int64_t traeger, Branch branch);

// Coordinates of |x|; throws NotHMember unless |x| = +-1 mod 6. The caller
// keeps the sign of x; -1 maps to (0, minus) so round trips are exact.
std::pair<std::int64_t, Branch> traeger_of(std::int64_t x);

// Product in H. Branch follows the sign rule (+,+)->+, (-,-)->+, mixed -> -;
// throws OverflowError when the signed 64-bit product would wrap.
HMember h_product(const HMember& x, const HMember& y);

// Branch of p^n: + when p is on branch + or n is even, - otherwise.
Branch power_branch(const HMember& p, std::uint64_t n);

struct LatticePoint {
    HMember x;
    HMember y;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

LatticePoint lattice_point(std::int64_t x, std::int64_t y);

// Quadrants count counterclockwise from the all-plus one:
//   1: x on branch +, y on branch +     2: x on branch -, y on branch +
//   3: x on branch -, y on branch -     4: x on branch +, y on branch -
int quadrant_of(const LatticePoint& pt);

} // namespace hlattice
