#include "doctest.h"

#include <numeric>
#include <set>

#include "danilov/quiver.hpp"
#include "danilov/lattice.hpp"

using namespace danilov;

namespace {

std::vector<Context> coprime_contexts(long max_r) {
  std::vector<Context> out;
  for (long r = 2; r <= max_r; ++r)
    for (long a = 1; a < r; ++a)
      if (std::gcd(a, r) == 1) out.emplace_back(r, a);
  return out;
}

std::set<std::string> names(const std::vector<Arrow>& arrows) {
  std::set<std::string> out;
  for (Arrow w : arrows) out.insert(arrow_name(w));
  return out;
}

const Cone& cone_with_slots(const Fan& f, std::array<int, 3> want) {
  for (const Cone& k : f.cones) {
    std::array<int, 3> s = k.rays;
    std::sort(s.begin(), s.end());
    if (s == want) return k;
  }
  throw std::logic_error("cone not found");
}

}  // namespace

TEST_CASE("arrow bookkeeping") {
  Context c(5, 2);
  CHECK(arrow_head(c, {ArrowKind::x, 4}) == 0);
  CHECK(arrow_head(c, {ArrowKind::y, 3}) == 0);
  CHECK(arrow_head(c, {ArrowKind::y, 0}) == 2);
  CHECK(arrow_head(c, {ArrowKind::z, 0}) == 3);
  CHECK(arrow_head(c, {ArrowKind::z, 2}) == 0);
  CHECK(arrow_tail(c, {ArrowKind::z, 2}) == 2);
  CHECK(arrow_name({ArrowKind::x, 0}) == "x0");
  CHECK(arrow_name({ArrowKind::z, 4}) == "z4");
  for (long id = 0; id < 15; ++id) {
    Arrow w = arrow_from_id(c, id);
    CHECK(arrow_id(c, w) == id);
  }
  DivisorFamily<> f = divisor_family(c);
  CHECK(&arrow_divisor(f, {ArrowKind::x, 1}) == &f.X[1]);
  CHECK(&arrow_divisor(f, {ArrowKind::y, 2}) == &f.Y[2]);
  CHECK(&arrow_divisor(f, {ArrowKind::z, 0}) == &f.Z[0]);
}

TEST_CASE("distinguished arrows of 1/5(1,2,3)") {
  Context c(5, 2);
  Fan fan = danilov_fan(c);
  DivisorFamily<> f = divisor_family(c);

  const Cone sigma0 = sigma_cone(c, 0);
  CHECK(names(distinguished_arrows(c, f, sigma0)) ==
        std::set<std::string>{"z0", "z1", "z3", "z4"});

  Representation f0 = fixed_point_rep(c, f, sigma0);
  // z-values (1,1,0,1,1), all x and y zero
  for (long i = 0; i < 5; ++i) {
    CHECK(f0.values[arrow_id(c, {ArrowKind::x, i})] == 0);
    CHECK(f0.values[arrow_id(c, {ArrowKind::y, i})] == 0);
    CHECK(f0.values[arrow_id(c, {ArrowKind::z, i})] == (i == 2 ? 0 : 1));
  }

  // the interior cone <p0 p3 p5> keeps exactly x_0..x_3
  const Cone& central = cone_with_slots(fan, {1, 4, 6});
  CHECK(names(distinguished_arrows(c, f, central)) ==
        std::set<std::string>{"x0", "x1", "x2", "x3"});

  // no x-arrow is distinguished on any e1 chart
  for (long j = 0; j < 5; ++j)
    for (Arrow w : distinguished_arrows(c, f, sigma_cone(c, j)))
      CHECK(w.kind != ArrowKind::x);
}

TEST_CASE("relations and fixed points across a sweep") {
  for (const Context& c : coprime_contexts(24)) {
    Fan fan = danilov_fan(c);
    DivisorFamily<> f = divisor_family(c);
    const auto perm = permutations(c);
    for (const Cone& k : fan.cones) {
      Representation v = fixed_point_rep(c, f, k);
      CHECK(relations_hold(c, v));
      CHECK(connected_without_last_x(c, f, k));
    }
    for (long j = 0; j < c.r(); ++j) {
      const Cone sigma = sigma_cone(c, j);
      for (Arrow w : distinguished_arrows(c, f, sigma)) CHECK(w.kind != ArrowKind::x);
      // exactly one residue, xi(j), has neither z_i nor y_{i+(r-a)}
      // distinguished; every other residue has exactly one of the two
      for (long i = 0; i < c.r(); ++i) {
        const bool z_dist = is_distinguished(f, sigma, {ArrowKind::z, i});
        const bool y_dist =
            is_distinguished(f, sigma, {ArrowKind::y, c.mod(i + c.r() - c.a())});
        if (i == perm.xi[j]) {
          CHECK(!z_dist);
          CHECK(!y_dist);
        } else {
          CHECK(z_dist != y_dist);
        }
      }
    }
  }
}

TEST_CASE("representations vary as monomials over a chart") {
  Context c(5, 2);
  Fan fan = danilov_fan(c);
  DivisorFamily<> f = divisor_family(c);
  for (const Cone& k : fan.cones) {
    RVec3 zero, ones, generic;
    zero << Rat(0), Rat(0), Rat(0);
    ones << Rat(1), Rat(1), Rat(1);
    generic << Rat(2, 3), Rat(5), Rat(7, 2);

    Representation at0 = rep_at(c, f, k, zero);
    Representation fixed = fixed_point_rep(c, f, k);
    CHECK(at0.values == fixed.values);

    Representation at1 = rep_at(c, f, k, ones);
    for (long id = 0; id < 15; ++id) CHECK(at1.values[id] == 1);
    CHECK(relations_hold(c, at1));

    Representation atg = rep_at(c, f, k, generic);
    CHECK(relations_hold(c, atg));
    for (long id = 0; id < 15; ++id) CHECK(atg.values[id] != 0);
  }

  // exponents are the divisor coefficients: on sigma_0 the arrow z2 carries
  // coefficient 1 on D1 = gens position of p1
  const Cone sigma0 = sigma_cone(c, 0);
  RVec3 t;
  t << Rat(2), Rat(3), Rat(5);
  Representation v = rep_at(c, f, sigma0, t);
  int d1_pos = -1;
  for (int l = 0; l < 3; ++l)
    if (sigma0.rays[l] == 2) d1_pos = l;
  REQUIRE(d1_pos >= 0);
  CHECK(v.values[arrow_id(c, {ArrowKind::z, 2})] == t[d1_pos]);
}

TEST_CASE("isomorphism is gauge invariance") {
  Context c(5, 2);
  Fan fan = danilov_fan(c);
  DivisorFamily<> f = divisor_family(c);

  std::vector<Representation> fixed;
  for (const Cone& k : fan.cones) fixed.push_back(fixed_point_rep(c, f, k));
  for (std::size_t i = 0; i < fixed.size(); ++i)
    for (std::size_t j = 0; j < fixed.size(); ++j)
      CHECK(isomorphic(c, fixed[i], fixed[j]) == (i == j));

  // rescaling every arrow at one vertex by the gauge action preserves the
  // isomorphism class
  Representation scaled = fixed[0];
  for (long id = 0; id < 15; ++id) {
    Arrow w = arrow_from_id(c, id);
    if (arrow_head(c, w) == 3) scaled.values[id] *= 7;
    if (arrow_tail(c, w) == 3) scaled.values[id] /= 7;
  }
  CHECK(isomorphic(c, fixed[0], scaled));

  // the support of F_0 is a tree, so even an arbitrary nonzero rescaling of
  // a single arrow stays isomorphic
  Representation bent = fixed[0];
  bent.values[arrow_id(c, {ArrowKind::z, 0})] = 9;
  CHECK(isomorphic(c, fixed[0], bent));

  // with a cycle in the support the cycle product is an invariant
  Context c2(2, 1);
  Representation ones;
  ones.r = 2;
  ones.a = 1;
  ones.values = RVecX::Zero(6);
  for (long id = 0; id < 6; ++id) ones.values[id] = 1;
  REQUIRE(relations_hold(c2, ones));
  Representation twisted = ones;
  twisted.values[arrow_id(c2, {ArrowKind::x, 0})] = 2;
  CHECK(!isomorphic(c2, ones, twisted));
  Representation gauged = ones;
  for (long id = 0; id < 6; ++id) {
    Arrow w = arrow_from_id(c2, id);
    if (arrow_head(c2, w) == 1) gauged.values[id] *= 3;
    if (arrow_tail(c2, w) == 1) gauged.values[id] /= 3;
  }
  CHECK(isomorphic(c2, ones, gauged));

  // distinct zero patterns are never isomorphic
  Representation dropped = fixed[0];
  dropped.values[arrow_id(c, {ArrowKind::z, 0})] = 0;
  CHECK(!isomorphic(c, fixed[0], dropped));
}

TEST_CASE("fixed points are pairwise non-isomorphic across a sweep") {
  for (const Context& c : coprime_contexts(16)) {
    Fan fan = danilov_fan(c);
    DivisorFamily<> f = divisor_family(c);
    std::vector<Representation> fixed;
    for (const Cone& k : fan.cones) fixed.push_back(fixed_point_rep(c, f, k));
    for (std::size_t i = 0; i < fixed.size(); ++i)
      for (std::size_t j = i + 1; j < fixed.size(); ++j)
        CHECK(!isomorphic(c, fixed[i], fixed[j]));
  }
}

TEST_CASE("coordinate arrows are reported honestly") {
  Context c(5, 2);
  Fan fan = danilov_fan(c);
  DivisorFamily<> f = divisor_family(c);

  const Cone sigma0 = sigma_cone(c, 0);
  auto found = coordinate_arrows(c, f, sigma0, true);
  REQUIRE(found.has_value());
  CHECK(found->index == std::array<long, 3>{0, 0, 2});  // x0, y0, z2

  // on the interior cone <p0 p3 p5> only x_{r-1} covers the D3 coordinate,
  // so excluding it makes the search fail; the failure is reported instead
  // of repaired
  const Cone& central = cone_with_slots(fan, {1, 4, 6});
  CHECK(!coordinate_arrows(c, f, central, true).has_value());
  auto relaxed = coordinate_arrows(c, f, central, false);
  REQUIRE(relaxed.has_value());
  CHECK(relaxed->index[0] == 4);  // x4 is the only x covering D3

  // every e1 chart of every small case admits coordinate arrows even
  // without x_{r-1}
  for (const Context& ctx : coprime_contexts(20)) {
    DivisorFamily<> fam = divisor_family(ctx);
    for (long j = 0; j < ctx.r(); ++j) {
      auto hit = coordinate_arrows(ctx, fam, sigma_cone(ctx, j), true);
      CHECK(hit.has_value());
      if (!hit) continue;
      // the three unit positions really cover all three rays
      std::set<int> pos(hit->pos.begin(), hit->pos.end());
      CHECK(pos.size() == 3);
      for (int kind = 0; kind < 3; ++kind) {
        Arrow w{static_cast<ArrowKind>(kind), hit->index[kind]};
        const auto& d = arrow_divisor(fam, w);
        const Cone sigma = sigma_cone(ctx, j);
        for (int l = 0; l < 3; ++l)
          CHECK(d[sigma.rays[l]] == (l == hit->pos[kind] ? ctx.r() : 0));
      }
    }
  }
}
