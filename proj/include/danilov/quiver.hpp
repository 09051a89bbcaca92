#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "danilov/divisor.hpp"
#include "danilov/lattice.hpp"

// McKay quiver of 1/r(1, a, r-a): r vertices indexed by Z/r and 3r arrows
//   x_i: i -> i+1,   y_i: i -> i+a,   z_i: i -> i-a.
// Dimension vector (1, ..., 1), so a representation is one scalar per
// arrow.  Arrow id = kind * r + i with kind 0 = x, 1 = y, 2 = z.

namespace danilov {

enum class ArrowKind { x = 0, y = 1, z = 2 };

struct Arrow {
  ArrowKind kind;
  long i;
};

long arrow_id(const Context& c, Arrow w);
Arrow arrow_from_id(const Context& c, long id);
long arrow_tail(const Context& c, Arrow w);
long arrow_head(const Context& c, Arrow w);
std::string arrow_name(Arrow w);

// The divisor carried by an arrow: x_i -> X_i, y_i -> Y_i, z_i -> Z_i.
const VecX<std::int64_t>& arrow_divisor(const DivisorFamily<>& f, Arrow w);

struct Representation {
  long r = 0, a = 0;
  RVecX values;  // indexed by arrow id, length 3r
};

// The commutation relations y x = x y, z x = x z, y z = z y along matching
// vertex routes, checked exactly.
bool relations_hold(const Context& c, const Representation& v);

// An arrow is distinguished for a cone when its divisor has coefficient 0
// on all three rays of the cone.
bool is_distinguished(const DivisorFamily<>& f, const Cone& k, Arrow w);
std::vector<Arrow> distinguished_arrows(const Context& c, const DivisorFamily<>& f, const Cone& k);

// Value 1 on distinguished arrows, 0 elsewhere; the torus-fixed point of
// the chart.  Equals rep_at with t = (0, 0, 0).
Representation fixed_point_rep(const Context& c, const DivisorFamily<>& f, const Cone& k);

// Arrow values as monomials in the chart coordinates of a smooth cone:
// the exponent of t_l is the divisor coefficient on the ray gens[l], with
// the convention 0^0 = 1.
Representation rep_at(const Context& c, const DivisorFamily<>& f, const Cone& k, const RVec3& t);

// Isomorphism of one-dimensional representations: equal zero patterns plus
// a consistent vertex rescaling, found by gauge-fixing a spanning forest of
// the undirected support graph.
bool isomorphic(const Context& c, const Representation& v, const Representation& w);

// The undirected graph on the vertices spanned by the distinguished arrows
// other than x_{r-1} is connected.
bool connected_without_last_x(const Context& c, const DivisorFamily<>& f, const Cone& k);

// Search for arrows x_{i'}, y_{j'}, z_{k'} whose divisors restrict to the
// three coordinate divisors of the chart (one ray each, all three rays
// covered).  index[l] is the arrow index of kind l, pos[l] the position in
// k.gens it covers.  Reports absence instead of repairing it.
struct CoordinateArrows {
  std::array<long, 3> index;
  std::array<int, 3> pos;
};
std::optional<CoordinateArrows> coordinate_arrows(const Context& c, const DivisorFamily<>& f,
                                                  const Cone& k, bool exclude_last_x);

}  // namespace danilov
