#include "danilov/quiver.hpp"

#include <cassert>
#include <cstdint>
#include <numeric>

namespace danilov {

namespace {

long kind_shift(const Context& c, ArrowKind k) {
  switch (k) {
    case ArrowKind::x: return 1;
    case ArrowKind::y: return c.a();
    case ArrowKind::z: return c.r() - c.a();
  }
  throw std::logic_error("bad arrow kind");
}

}  // namespace

long arrow_id(const Context& c, Arrow w) {
  assert(0 <= w.i && w.i < c.r());
  return static_cast<long>(w.kind) * c.r() + w.i;
}

Arrow arrow_from_id(const Context& c, long id) {
  assert(0 <= id && id < 3 * c.r());
  return Arrow{static_cast<ArrowKind>(id / c.r()), id % c.r()};
}

long arrow_tail(const Context&, Arrow w) { return w.i; }

long arrow_head(const Context& c, Arrow w) { return c.mod(w.i + kind_shift(c, w.kind)); }

std::string arrow_name(Arrow w) {
  static const char* names = "xyz";
  return std::string(1, names[static_cast<int>(w.kind)]) + std::to_string(w.i);
}

const VecX<std::int64_t>& arrow_divisor(const DivisorFamily<>& f, Arrow w) {
  switch (w.kind) {
    case ArrowKind::x: return f.X[w.i];
    case ArrowKind::y: return f.Y[w.i];
    case ArrowKind::z: return f.Z[w.i];
  }
  throw std::logic_error("bad arrow kind");
}

bool relations_hold(const Context& c, const Representation& v) {
  const long r = c.r(), a = c.a();
  auto val = [&](ArrowKind k, long i) -> const Rat& {
    return v.values[arrow_id(c, Arrow{k, c.mod(i)})];
  };
  for (long i = 0; i < r; ++i) {
    if (val(ArrowKind::y, i + 1) * val(ArrowKind::x, i) !=
        val(ArrowKind::x, i + a) * val(ArrowKind::y, i))
      return false;
    if (val(ArrowKind::z, i + 1) * val(ArrowKind::x, i) !=
        val(ArrowKind::x, i - a) * val(ArrowKind::z, i))
      return false;
    if (val(ArrowKind::y, i - a) * val(ArrowKind::z, i) !=
        val(ArrowKind::z, i + a) * val(ArrowKind::y, i))
      return false;
  }
  return true;
}

bool is_distinguished(const DivisorFamily<>& f, const Cone& k, Arrow w) {
  const VecX<std::int64_t>& d = arrow_divisor(f, w);
  for (int l = 0; l < 3; ++l)
    if (d[k.rays[l]] != 0) return false;
  return true;
}

std::vector<Arrow> distinguished_arrows(const Context& c, const DivisorFamily<>& f, const Cone& k) {
  std::vector<Arrow> out;
  for (long id = 0; id < 3 * c.r(); ++id) {
    Arrow w = arrow_from_id(c, id);
    if (is_distinguished(f, k, w)) out.push_back(w);
  }
  return out;
}

Representation fixed_point_rep(const Context& c, const DivisorFamily<>& f, const Cone& k) {
  Representation v;
  v.r = c.r();
  v.a = c.a();
  v.values = RVecX::Zero(3 * c.r());
  for (long id = 0; id < 3 * c.r(); ++id)
    if (is_distinguished(f, k, arrow_from_id(c, id))) v.values[id] = 1;
  return v;
}

namespace {

// t^e with 0^0 = 1
Rat rat_pow(const Rat& t, long e) {
  assert(e >= 0);
  Rat out = 1;
  Rat base = t;
  for (long n = e; n > 0; n >>= 1) {
    if (n & 1) out *= base;
    if (n > 1) base *= base;
  }
  return out;
}

}  // namespace

Representation rep_at(const Context& c, const DivisorFamily<>& f, const Cone& k, const RVec3& t) {
  Representation v;
  v.r = c.r();
  v.a = c.a();
  v.values = RVecX::Zero(3 * c.r());
  for (long id = 0; id < 3 * c.r(); ++id) {
    const VecX<std::int64_t>& d = arrow_divisor(f, arrow_from_id(c, id));
    Rat m = 1;
    for (int l = 0; l < 3; ++l) {
      const std::int64_t scaled = d[k.rays[l]];
      if (scaled % c.r() != 0 || scaled < 0)
        throw consistency_error("rep_at: divisor coefficient is not a nonnegative integer");
      m *= rat_pow(t[l], scaled / c.r());
    }
    v.values[id] = m;
  }
  return v;
}

bool isomorphic(const Context& c, const Representation& v, const Representation& w) {
  const long r = c.r();
  if (v.r != w.r || v.a != w.a) return false;
  for (long id = 0; id < 3 * r; ++id)
    if ((v.values[id] == 0) != (w.values[id] == 0)) return false;

  // Gauge transform acts by g(head) * value / g(tail).  Fix g on a BFS
  // forest of the support, then verify every nonzero arrow.
  std::vector<std::vector<long>> incident(r);
  for (long id = 0; id < 3 * r; ++id) {
    if (v.values[id] == 0) continue;
    Arrow wr = arrow_from_id(c, id);
    incident[arrow_tail(c, wr)].push_back(id);
    incident[arrow_head(c, wr)].push_back(id);
  }
  std::vector<Rat> g(r, Rat(0));
  std::vector<long> queue;
  for (long root = 0; root < r; ++root) {
    if (g[root] != 0) continue;
    g[root] = 1;
    queue.assign(1, root);
    while (!queue.empty()) {
      long u = queue.back();
      queue.pop_back();
      for (long id : incident[u]) {
        Arrow wr = arrow_from_id(c, id);
        long tl = arrow_tail(c, wr), hd = arrow_head(c, wr);
        long other = (u == tl) ? hd : tl;
        if (g[other] != 0) continue;
        if (u == tl)
          g[other] = w.values[id] * g[u] / v.values[id];
        else
          g[other] = g[u] * v.values[id] / w.values[id];
        queue.push_back(other);
      }
    }
  }
  for (long id = 0; id < 3 * r; ++id) {
    if (v.values[id] == 0) continue;
    Arrow wr = arrow_from_id(c, id);
    if (g[arrow_head(c, wr)] * v.values[id] != w.values[id] * g[arrow_tail(c, wr)]) return false;
  }
  return true;
}

bool connected_without_last_x(const Context& c, const DivisorFamily<>& f, const Cone& k) {
  const long r = c.r();
  std::vector<long> parent(r);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](long x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const long last_x = arrow_id(c, Arrow{ArrowKind::x, r - 1});
  for (long id = 0; id < 3 * r; ++id) {
    if (id == last_x) continue;
    Arrow w = arrow_from_id(c, id);
    if (!is_distinguished(f, k, w)) continue;
    parent[find(arrow_tail(c, w))] = find(arrow_head(c, w));
  }
  for (long u = 1; u < r; ++u)
    if (find(u) != find(0)) return false;
  return true;
}

std::optional<CoordinateArrows> coordinate_arrows(const Context& c, const DivisorFamily<>& f,
                                                  const Cone& k, bool exclude_last_x) {
  const long r = c.r();
  // candidate[kind][pos]: smallest arrow index of that kind whose divisor
  // restricts to the chart coordinate divisor at gens[pos]
  long candidate[3][3];
  for (auto& row : candidate) row[0] = row[1] = row[2] = -1;
  for (long id = 0; id < 3 * r; ++id) {
    Arrow w = arrow_from_id(c, id);
    if (exclude_last_x && w.kind == ArrowKind::x && w.i == r - 1) continue;
    const VecX<std::int64_t>& d = arrow_divisor(f, w);
    int unit_pos = -1;
    bool ok = true;
    for (int l = 0; l < 3 && ok; ++l) {
      if (d[k.rays[l]] == 0) continue;
      if (d[k.rays[l]] == r && unit_pos < 0)
        unit_pos = l;
      else
        ok = false;
    }
    if (!ok || unit_pos < 0) continue;
    long& slot = candidate[static_cast<int>(w.kind)][unit_pos];
    if (slot < 0) slot = w.i;
  }
  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const int* p : perms) {
    if (candidate[0][p[0]] < 0 || candidate[1][p[1]] < 0 || candidate[2][p[2]] < 0) continue;
    CoordinateArrows found;
    for (int kind = 0; kind < 3; ++kind) {
      found.index[kind] = candidate[kind][p[kind]];
      found.pos[kind] = p[kind];
    }
    return found;
  }
  return std::nullopt;
}

}  // namespace danilov
