#include "danilov/lattice.hpp"

#include <algorithm>
#include <map>

namespace danilov {

namespace {

Int det3(const IMat3& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

// adj(m) * m = det(m) * I.
IMat3 adjugate(const IMat3& m) {
  IMat3 a;
  a(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
  a(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
  a(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
  a(1, 0) = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
  a(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
  a(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
  a(2, 0) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
  a(2, 1) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
  a(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  return a;
}

IVec3 cross3(const IVec3& u, const IVec3& v) {
  IVec3 w;
  w[0] = u[1] * v[2] - u[2] * v[1];
  w[1] = u[2] * v[0] - u[0] * v[2];
  w[2] = u[0] * v[1] - u[1] * v[0];
  return w;
}

IMat3 gens_matrix(const Cone& k) {
  IMat3 g;
  for (int j = 0; j < 3; j++) g.col(j) = k.gens[j];
  return g;
}

bool lex_less(const ScaledPoint& lhs, const ScaledPoint& rhs) {
  for (int k = 0; k < 3; k++) {
    if (lhs[k] != rhs[k]) return lhs[k] < rhs[k];
  }
  return false;
}

std::array<long, 3> as_longs(const ScaledPoint& u) {
  return {static_cast<long>(u[0]), static_cast<long>(u[1]), static_cast<long>(u[2])};
}

ScaledPoint reduce_direction(const ScaledPoint& u) {
  Int g = boost::multiprecision::gcd(boost::multiprecision::gcd(abs(u[0]), abs(u[1])), abs(u[2]));
  if (g <= 1) return u;
  ScaledPoint v;
  for (int k = 0; k < 3; k++) v[k] = u[k] / g;
  return v;
}

// Normalizes generator order (lexicographic on scaled coordinates) keeping
// each generator paired with its ray slot.
Cone make_cone(std::array<ScaledPoint, 3> gens, std::array<int, 3> slots, ConeTag tag) {
  std::array<int, 3> order{0, 1, 2};
  std::sort(order.begin(), order.end(),
            [&](int lhs, int rhs) { return lex_less(gens[lhs], gens[rhs]); });
  Cone k;
  for (int j = 0; j < 3; j++) {
    k.gens[j] = gens[order[j]];
    k.rays[j] = slots[order[j]];
  }
  k.tag = tag;
  return k;
}

std::array<int, 3> sorted_slots(const Cone& k) {
  std::array<int, 3> s = k.rays;
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

bool lattice_member(const Context& c, const ScaledPoint& u) {
  Int r = c.r(), a = c.a();
  return (u[1] - a * u[0]) % r == 0 && (u[2] + a * u[0]) % r == 0;
}

bool is_primitive(const Context& c, const ScaledPoint& u) {
  if (!lattice_member(c, u) || u == ScaledPoint::Zero()) return false;
  Int g = boost::multiprecision::gcd(boost::multiprecision::gcd(abs(u[0]), abs(u[1])), abs(u[2]));
  for (Int q = 2; q * q <= g; q++) {
    if (g % q == 0) {
      if (lattice_member(c, ScaledPoint(u / q))) return false;
      while (g % q == 0) g /= q;
    }
  }
  if (g > 1 && lattice_member(c, ScaledPoint(u / g))) return false;
  return true;
}

ScaledPoint axis_point(const Context& c, int k) {
  if (k < 1 || k > 3) throw std::invalid_argument("axis_point: k in {1, 2, 3}");
  ScaledPoint u = ScaledPoint::Zero();
  u[k - 1] = c.r();
  return u;
}

ScaledPoint ray_point(const Context& c, long i) {
  if (i < 0 || i > c.r()) throw std::invalid_argument("ray_point: i in [0, r]");
  ScaledPoint u;
  u[0] = c.mod(-i * c.b());
  u[1] = c.r() - i;
  u[2] = i;
  return u;
}

Rat discrepancy(const Context& c, long i) {
  if (i < 1 || i > c.r() - 1)
    throw std::invalid_argument("discrepancy: i in [1, r-1], the boundary rays are not exceptional");
  return Rat(c.mod(-i * c.b()), c.r());
}

namespace {

LatticeMap make_map(Context source, Context target, IMat3 num) {
  Int want = Int(source.r()) * target.r() * target.r();
  if (abs(det3(num)) != want)
    throw consistency_error("lattice map: determinant is not source_r * target_r^2");
  return LatticeMap{source, target, std::move(num)};
}

}  // namespace

LatticeMap identity_map(const Context& c) {
  IMat3 num = IMat3::Zero();
  for (int k = 0; k < 3; k++) num(k, k) = c.r();
  return make_map(c, c, num);
}

LatticeMap map_left(const Context& c) {
  IMat3 num;
  num.col(0) = axis_point(c, 1);
  num.col(1) = axis_point(c, 2);
  num.col(2) = ray_point(c, c.r() - c.a());
  return make_map(c.left(), c, num);
}

LatticeMap map_right(const Context& c) {
  IMat3 num;
  num.col(0) = axis_point(c, 1);
  num.col(1) = ray_point(c, c.r() - c.a());
  num.col(2) = axis_point(c, 3);
  return make_map(c.right(), c, num);
}

LatticeMap compose(const LatticeMap& outer, const LatticeMap& inner) {
  if (!(inner.target == outer.source))
    throw std::invalid_argument("compose: inner target must equal outer source");
  IMat3 prod = outer.num * inner.num;
  Int mid = outer.source.r();
  IMat3 num;
  for (int i = 0; i < 3; i++) {
    for (int j = 0; j < 3; j++) {
      if (prod(i, j) % mid != 0) throw consistency_error("compose: non-integral composite");
      num(i, j) = prod(i, j) / mid;
    }
  }
  return make_map(inner.source, outer.target, num);
}

ScaledPoint apply(const LatticeMap& m, const ScaledPoint& u) {
  ScaledPoint w = m.num * u;
  Int s = m.source.r();
  for (int k = 0; k < 3; k++) {
    if (w[k] % s != 0) throw consistency_error("lattice map: image is not a lattice point");
    w[k] /= s;
  }
  if (!lattice_member(m.target, w))
    throw consistency_error("lattice map: image fails target membership");
  return w;
}

bool same_cone(const Cone& lhs, const Cone& rhs) { return lhs.gens == rhs.gens; }

int Fan::ray_index(const ScaledPoint& u) const {
  for (int i = 0; i < static_cast<int>(rays.size()); i++) {
    if (rays[i] == u) return i;
  }
  return -1;
}

namespace {

struct FanBuilder {
  const Context& top;
  std::map<std::array<long, 3>, int> index;
  std::vector<Cone> cones;

  void emit(const LatticeMap& to_top, std::array<ScaledPoint, 3> local, ConeTag tag) {
    std::array<ScaledPoint, 3> gens;
    std::array<int, 3> slots;
    for (int j = 0; j < 3; j++) {
      gens[j] = apply(to_top, local[j]);
      auto it = index.find(as_longs(gens[j]));
      if (it == index.end())
        throw consistency_error("fan: cone generator is not one of e1, p_0..p_r");
      slots[j] = it->second;
    }
    Cone k = make_cone(gens, slots, tag);
    if (abs(det3(gens_matrix(k))) != Int(top.r()) * top.r())
      throw consistency_error("fan: non-smooth maximal cone");
    cones.push_back(std::move(k));
  }

  // depth = 0 only at the top call, where the three regions get their tags.
  void build(const Context& loc, const LatticeMap& to_top, ConeTag tag, int depth) {
    if (loc.is_trivial()) {
      emit(to_top, {axis_point(loc, 1), axis_point(loc, 2), axis_point(loc, 3)}, tag);
      return;
    }
    ScaledPoint p = ray_point(loc, loc.r() - loc.a());
    emit(to_top, {axis_point(loc, 2), axis_point(loc, 3), p},
         depth == 0 ? ConeTag::central : tag);
    build(loc.left(), compose(to_top, map_left(loc)),
          depth == 0 ? ConeTag::left : tag, depth + 1);
    build(loc.right(), compose(to_top, map_right(loc)),
          depth == 0 ? ConeTag::right : tag, depth + 1);
  }
};

}  // namespace

Fan danilov_fan(const Context& c) {
  Fan f;
  f.ctx = c;
  f.rays.push_back(axis_point(c, 1));
  for (long i = 0; i <= c.r(); i++) f.rays.push_back(ray_point(c, i));

  FanBuilder builder{c};
  for (int i = 0; i < static_cast<int>(f.rays.size()); i++)
    builder.index[as_longs(f.rays[i])] = i;

  builder.build(c, identity_map(c), ConeTag::central, 0);

  std::sort(builder.cones.begin(), builder.cones.end(),
            [](const Cone& lhs, const Cone& rhs) { return sorted_slots(lhs) < sorted_slots(rhs); });
  for (size_t i = 1; i < builder.cones.size(); i++) {
    if (sorted_slots(builder.cones[i - 1]) == sorted_slots(builder.cones[i]))
      throw consistency_error("fan: duplicate maximal cone");
  }
  if (static_cast<long>(builder.cones.size()) != 2 * c.r() - 1)
    throw consistency_error("fan: expected 2r - 1 maximal cones");
  f.cones = std::move(builder.cones);
  return f;
}

Cone sigma_cone(const Context& c, long i) {
  if (i < 0 || i >= c.r()) throw std::invalid_argument("sigma_cone: i in [0, r-1]");
  std::array<ScaledPoint, 3> gens{ray_point(c, i), ray_point(c, i + 1), axis_point(c, 1)};
  std::array<int, 3> slots{static_cast<int>(i) + 1, static_cast<int>(i) + 2, 0};
  ConeTag tag = ConeTag::central;
  if (!c.is_trivial()) tag = i < c.r() - c.a() ? ConeTag::left : ConeTag::right;
  return make_cone(gens, slots, tag);
}

Int cone_volume(const Cone& k) { return det3(gens_matrix(k)); }

bool is_smooth(const Context& c, const Cone& k) {
  return abs(cone_volume(k)) == Int(c.r()) * c.r();
}

bool cone_contains(const Cone& k, const ScaledPoint& u) {
  IMat3 g = gens_matrix(k);
  Int d = det3(g);
  if (d == 0) throw std::invalid_argument("cone_contains: degenerate cone");
  IVec3 lambda = adjugate(g) * u;
  if (d < 0) lambda = -lambda;
  return lambda[0] >= 0 && lambda[1] >= 0 && lambda[2] >= 0;
}

IMat3 chart_basis(const Context& c, const Cone& k) {
  if (!is_smooth(c, k)) throw chart_error("chart is not smooth");
  IMat3 g = gens_matrix(k);
  Int d = det3(g);
  // M = r * g^{-1} = r * adj(g) / d, and |d| = r^2, so M = adj(g) / (d / r)
  Int q = d / c.r();
  IMat3 m = adjugate(g);
  for (int i = 0; i < 3; i++) {
    for (int j = 0; j < 3; j++) {
      if (m(i, j) % q != 0) throw consistency_error("chart basis: non-integral dual");
      m(i, j) /= q;
    }
  }
  // rows must pair integrally with the lattice generator (1/r)(1, a, r-a)
  for (int i = 0; i < 3; i++) {
    Int pair = m(i, 0) + m(i, 1) * c.a() + m(i, 2) * (c.r() - c.a());
    if (pair % c.r() != 0) throw consistency_error("chart basis: dual outside M(r, a)");
  }
  return m;
}

namespace {

// Extreme ray candidates of the intersection of two simplicial cones:
// generators of one lying in the other, plus pairwise facet-plane
// intersections.  Every extreme ray of the intersection is of one of these
// two kinds, so the candidate list is complete.
std::vector<ScaledPoint> intersection_rays(const Cone& lhs, const Cone& rhs) {
  std::vector<ScaledPoint> found;
  auto push = [&](const ScaledPoint& u) {
    if (u == ScaledPoint::Zero()) return;
    if (!cone_contains(lhs, u) || !cone_contains(rhs, u)) return;
    ScaledPoint v = reduce_direction(u);
    for (const auto& w : found) {
      if (w == v) return;
    }
    found.push_back(v);
  };
  for (int j = 0; j < 3; j++) {
    push(lhs.gens[j]);
    push(rhs.gens[j]);
  }
  IMat3 nl = adjugate(gens_matrix(lhs)), nr = adjugate(gens_matrix(rhs));
  for (int i = 0; i < 3; i++) {
    for (int j = 0; j < 3; j++) {
      IVec3 d = cross3(nl.row(i).transpose(), nr.row(j).transpose());
      push(d);
      push(ScaledPoint(-d));
    }
  }
  return found;
}

}  // namespace

bool fan_is_coherent(const Fan& f) {
  size_t n = f.cones.size();
  for (size_t s = 0; s < n; s++) {
    for (size_t t = s + 1; t < n; t++) {
      const Cone& lhs = f.cones[s];
      const Cone& rhs = f.cones[t];
      std::vector<ScaledPoint> shared;
      for (int i = 0; i < 3; i++) {
        for (int j = 0; j < 3; j++) {
          if (lhs.rays[i] == rhs.rays[j]) shared.push_back(reduce_direction(lhs.gens[i]));
        }
      }
      std::vector<ScaledPoint> rays = intersection_rays(lhs, rhs);
      if (rays.size() != shared.size()) return false;
      for (const auto& u : rays) {
        bool ok = false;
        for (const auto& v : shared) {
          if (u == v) ok = true;
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

}  // namespace danilov
