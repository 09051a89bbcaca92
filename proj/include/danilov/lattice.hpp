#pragma once

#include <array>
#include <optional>
#include <vector>

#include "danilov/context.hpp"
#include "danilov/scalar.hpp"

// Toric side of the resolution.  All lattice points are integer 3-vectors
// scaled by the r of their context: the vector u stands for u/r inside
// N(r, a) = Z^3 + Z * (1/r)(1, a, r-a).

namespace danilov {

using ScaledPoint = IVec3;

// Membership of u/r in N(r, a): u2 = a*u1 and u3 = -a*u1 mod r.
bool lattice_member(const Context& c, const ScaledPoint& u);

// u/r is not a proper integer multiple of another lattice point.
bool is_primitive(const Context& c, const ScaledPoint& u);

// e_k scaled, k in {1, 2, 3}.
ScaledPoint axis_point(const Context& c, int k);

// p_i = (1/r)(<-i*b>_r, r - i, i) scaled, i in [0, r].  p_0 = e2, p_r = e3.
ScaledPoint ray_point(const Context& c, long i);

// Discrepancy of the divisor attached to p_i: <-i*b>_r / r.
Rat discrepancy(const Context& c, long i);

// Lattice isomorphism N(source) -> N(target) stored as the integer matrix
// num = target.r * M, so a source-scaled u maps to num * u / source.r.
struct LatticeMap {
  Context source, target;
  IMat3 num;
};

LatticeMap identity_map(const Context& c);
// Sends e1 -> e1, e2 -> e2, e3 -> p_{r-a}; image cone is <e1, e2, p_{r-a}>.
LatticeMap map_left(const Context& c);
// Sends e1 -> e1, e2 -> p_{r-a}, e3 -> e3; image cone is <e1, e3, p_{r-a}>.
LatticeMap map_right(const Context& c);
LatticeMap compose(const LatticeMap& outer, const LatticeMap& inner);
ScaledPoint apply(const LatticeMap& m, const ScaledPoint& u);

// Which of the three top-level regions a maximal cone came from.
enum class ConeTag { central, left, right };

// Simplicial 3-dimensional cone.  Generators are kept sorted
// lexicographically on scaled coordinates, which makes cone identity
// canonical; rays[j] is the index of gens[j] in the frozen ray order
// [e1, p_0, ..., p_r], so the pairing survives normalization.
struct Cone {
  std::array<ScaledPoint, 3> gens;
  std::array<int, 3> rays;
  ConeTag tag;
};

bool same_cone(const Cone& lhs, const Cone& rhs);

struct Fan {
  Context ctx = Context::trivial();
  std::vector<ScaledPoint> rays;  // frozen order [e1, p_0, ..., p_r]
  std::vector<Cone> cones;        // sorted by ray index triple
  int ray_index(const ScaledPoint& u) const;  // -1 if not a ray
};

// The resolution fan: recursive subdivision of the positive octant.
// 2r - 1 maximal cones, all smooth, with rays exactly {e1, p_0, ..., p_r}.
Fan danilov_fan(const Context& c);

// <p_i, p_{i+1}, e1> in canonical form, i in [0, r-1]; these are exactly the
// maximal cones containing e1.
Cone sigma_cone(const Context& c, long i);

// Unimodularity with respect to N(r, a): |det of scaled generators| = r^2.
bool is_smooth(const Context& c, const Cone& k);

// 3x3 determinant of the scaled generators, sign included.
Int cone_volume(const Cone& k);

// Exact membership u/r in the cone spanned by k's generators.
bool cone_contains(const Cone& k, const ScaledPoint& u);

// Dual basis of a smooth cone: rows m_1, m_2, m_3 with m_j . gens[l] being
// r * delta_{jl}; each row pairs integrally with all of N(r, a).
// Throws chart_error if the cone is not smooth.
IMat3 chart_basis(const Context& c, const Cone& k);

struct chart_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Every pair of maximal cones meets in a common face (exact check; quadratic
// in the number of cones, meant for tests and certification sweeps).
bool fan_is_coherent(const Fan& f);

}  // namespace danilov
