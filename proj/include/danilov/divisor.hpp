#pragma once

#include <cstdint>
#include <vector>

#include "danilov/context.hpp"
#include "danilov/scalar.hpp"

// Divisor combinatorics of the resolution.  A divisor is a coefficient
// vector over the frozen ray order [E1, D_0, ..., D_r]: slot 0 carries E1,
// slot i+1 carries D_i, total length r + 2.

namespace danilov {

// The vertex permutation driving the divisor tables, its inverse xi, and
// the chamber ordering phi(j) = <xi(j) - a>_r = <xi(j) + (r-a)>_r.
struct Permutations {
  std::vector<long> tau, xi, phi;
};

long tau_value(const Context& c, long i);
Permutations permutations(const Context& c);

enum class Side { left, right };

// Maximal arithmetic progression inside [0, r) with step r-a (left) or a
// (right).  Left bricks are the residue classes mod r-a, right bricks the
// classes mod a; each side partitions {0, ..., r-1}.
struct Brick {
  long start = 0, step = 0, length = 0;
  std::vector<long> members;
};

std::vector<Brick> bricks(const Context& c, Side side);

// All divisor tables of a context.  Entries are stored scaled by r, which
// keeps every table integral: X/Y/Z are integral divisors and the
// denominators of D_X/D_Y/D_Z/R_i divide r.  The default scalar is int64;
// entries are bounded by 2r^2, far below its range for any r whose tables
// fit in memory.  The mpz instantiation exists as an overflow cross-check.
template <typename Scalar = std::int64_t>
struct DivisorFamily {
  Context ctx = Context::trivial();
  Permutations perm;
  std::vector<VecX<Scalar>> X, Y, Z, R;
  VecX<Scalar> DX, DY, DZ;
};

// Builds every table:
//   Y_{<i-a>} = sum of D_0..D_{tau(i)},  Z_i = sum of D_{tau(i)+1}..D_r,
//   X_0 = E1 extended along the a-orbit by X_i + Z_{i+1} = Z_i + X_{i-a},
//   D_X = E1 + sum <-i*b>_r/r D_i,  D_Y = sum (r-i)/r D_i,  D_Z = sum i/r D_i,
//   R_0 = 0 extended along the a-orbit by Z_i = D_Z + R_i - R_{i-a}.
// Both orbit recurrences must close after r steps; failure throws
// consistency_error.
template <typename Scalar = std::int64_t>
DivisorFamily<Scalar> divisor_family(const Context& c);

// Exact rational view of a scaled coefficient vector (divides by r).
template <typename Scalar>
RVecX unscale(const Context& c, const VecX<Scalar>& v);

// Restriction to the sub-resolution: left keeps [E1, D_0..D_{r-a}], right
// keeps [E1, D_{r-a}..D_r], both re-scaled to the sub-context denominator.
// Throws consistency_error if a coefficient is not representable there.
template <typename Scalar>
VecX<Scalar> restrict_divisor(const Context& c, const VecX<Scalar>& v, Side side);

}  // namespace danilov
