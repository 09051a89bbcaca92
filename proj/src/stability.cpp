#include "danilov/stability.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <limits>

namespace danilov {

namespace {

using Mask = std::uint64_t;

// out-neighbor lists of the support digraph (no self-loops for r >= 2)
std::vector<std::vector<int>> support_out(const Context& c, const Representation& v) {
  std::vector<std::vector<int>> out(c.r());
  for (long id = 0; id < 3 * c.r(); ++id) {
    if (v.values[id] == 0) continue;
    Arrow w = arrow_from_id(c, id);
    out[arrow_tail(c, w)].push_back(static_cast<int>(arrow_head(c, w)));
  }
  return out;
}

// Walks all proper nonempty subsets in Gray-code order, maintaining the
// number of closure violations incrementally, and folds theta over the
// closed ones.  Sum is the scalar type of the integer-cleared theta.
template <typename Sum, typename Fold>
void fold_closed_subsets(const std::vector<std::vector<int>>& out, const std::vector<Sum>& theta,
                         Fold&& fold) {
  const int r = static_cast<int>(out.size());
  const Mask full = (r == 64) ? ~Mask{0} : ((Mask{1} << r) - 1);
  std::vector<int> demand(r, 0);  // demand[w] = #{u in S : w in out(u)}
  Mask mask = 0;
  int violations = 0;  // #{w not in S : demand[w] > 0}
  Sum sum = 0;
  const Mask steps = full;  // 2^r - 1 toggles
  for (Mask k = 1; k <= steps; ++k) {
    const int v = std::countr_zero(k);
    const Mask bit = Mask{1} << v;
    if (mask & bit) {
      mask ^= bit;
      sum -= theta[v];
      if (demand[v] > 0) ++violations;
      for (int w : out[v]) {
        if (--demand[w] == 0 && !(mask & (Mask{1} << w))) --violations;
      }
    } else {
      mask |= bit;
      sum += theta[v];
      if (demand[v] > 0) --violations;
      for (int w : out[v]) {
        if (demand[w]++ == 0 && !(mask & (Mask{1} << w))) ++violations;
      }
    }
    if (violations == 0 && mask != full) fold(mask, sum);
  }
}

std::vector<long> mask_to_vertices(Mask m) {
  std::vector<long> out;
  for (int v = 0; m; ++v, m >>= 1)
    if (m & 1) out.push_back(v);
  return out;
}

}  // namespace

StabilityReport check_stability(const Context& c, const Representation& v, const RVecX& theta) {
  const long r = c.r();
  if (theta.size() != r) throw std::invalid_argument("check_stability: theta has wrong length");
  if (theta.sum() != 0) throw std::invalid_argument("check_stability: theta must sum to zero");
  if (v.r != r || v.values.size() != 3 * r)
    throw std::invalid_argument("check_stability: representation has wrong shape");
  if (r > 30) throw std::invalid_argument("check_stability: brute force is capped at r <= 30");

  StabilityReport report;
  if (r < 2) return report;  // no proper nonempty subsets

  // clear denominators once; verdicts only need signs and comparisons
  Int scale = 1;
  for (long i = 0; i < r; ++i) scale = boost::multiprecision::lcm(scale, denominator(theta[i]));
  std::vector<Int> cleared(r);
  Int max_abs = 0;
  for (long i = 0; i < r; ++i) {
    cleared[i] = numerator(theta[i]) * (scale / denominator(theta[i]));
    Int mag = abs(cleared[i]);
    if (mag > max_abs) max_abs = mag;
  }

  const auto out = support_out(c, v);
  bool seen = false;
  Mask best_mask = 0;
  Int best_sum = 0;
  auto take = [&](Mask mask, const Int& sum) {
    if (!seen || sum < best_sum || (sum == best_sum && mask < best_mask)) {
      seen = true;
      best_mask = mask;
      best_sum = sum;
    }
  };

  if (max_abs * r <= Int(std::numeric_limits<std::int64_t>::max() / 2)) {
    std::vector<std::int64_t> narrow(r);
    for (long i = 0; i < r; ++i) narrow[i] = static_cast<std::int64_t>(cleared[i]);
    fold_closed_subsets<std::int64_t>(out, narrow,
                                      [&](Mask mask, std::int64_t sum) { take(mask, Int(sum)); });
  } else {
    fold_closed_subsets<Int>(out, cleared, take);
  }

  if (!seen) return report;  // support has no proper nonempty closed subset
  report.min_value = Rat(best_sum) / scale;
  if (best_sum > 0) {
    report.verdict = Verdict::stable;
  } else {
    report.verdict = (best_sum == 0) ? Verdict::strictly_semistable : Verdict::unstable;
    report.witness = mask_to_vertices(best_mask);
  }
  return report;
}

namespace {

struct Condensation {
  int count = 0;
  std::vector<int> comp;            // vertex -> component id
  std::vector<Mask> comp_vertices;  // component id -> vertex mask
  std::vector<Mask> comp_succ;      // component id -> successor components
};

// iterative Tarjan; component ids come out in reverse topological order
Condensation condense(const std::vector<std::vector<int>>& out) {
  const int n = static_cast<int>(out.size());
  Condensation c;
  c.comp.assign(n, -1);
  std::vector<int> index(n, -1), low(n, 0), on(n, 0), stack, call, child;
  int next = 0;
  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    call.assign(1, root);
    child.assign(1, 0);
    while (!call.empty()) {
      int u = call.back();
      if (child.back() == 0) {
        index[u] = low[u] = next++;
        stack.push_back(u);
        on[u] = 1;
      }
      bool descended = false;
      while (child.back() < static_cast<int>(out[u].size())) {
        int w = out[u][child.back()++];
        if (index[w] < 0) {
          call.push_back(w);
          child.push_back(0);
          descended = true;
          break;
        }
        if (on[w]) low[u] = std::min(low[u], index[w]);
      }
      if (descended) continue;
      if (low[u] == index[u]) {
        Mask members = 0;
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on[w] = 0;
          c.comp[w] = c.count;
          members |= Mask{1} << w;
        } while (w != u);
        c.comp_vertices.push_back(members);
        ++c.count;
      }
      call.pop_back();
      child.pop_back();
      if (!call.empty()) low[call.back()] = std::min(low[call.back()], low[u]);
    }
  }
  c.comp_succ.assign(c.count, 0);
  for (int u = 0; u < n; ++u)
    for (int w : out[u])
      if (c.comp[u] != c.comp[w]) c.comp_succ[c.comp[u]] |= Mask{1} << c.comp[w];
  return c;
}

void emit_down_sets(const Condensation& c, int from, Mask chosen, std::vector<Mask>& out) {
  if (from == c.count) {
    Mask vertices = 0;
    for (int i = 0; i < c.count; ++i)
      if (chosen & (Mask{1} << i)) vertices |= c.comp_vertices[i];
    out.push_back(vertices);
    return;
  }
  emit_down_sets(c, from + 1, chosen, out);
  // including a component demands all of its successors; Tarjan's id order
  // makes successors smaller, hence already decided
  if ((c.comp_succ[from] & chosen) == c.comp_succ[from])
    emit_down_sets(c, from + 1, chosen | (Mask{1} << from), out);
}

}  // namespace

std::vector<std::vector<long>> closed_subsets(const Context& c, const Representation& v) {
  const long r = c.r();
  if (v.r != r || v.values.size() != 3 * r)
    throw std::invalid_argument("closed_subsets: representation has wrong shape");
  if (r > 62) throw std::invalid_argument("closed_subsets: masks are capped at r <= 62");
  const Mask full = (Mask{1} << r) - 1;
  Condensation cond = condense(support_out(c, v));
  std::vector<Mask> masks;
  emit_down_sets(cond, 0, 0, masks);
  std::sort(masks.begin(), masks.end());
  std::vector<std::vector<long>> sets;
  sets.reserve(masks.size());
  for (Mask m : masks) {
    if (m == 0 || m == full) continue;
    sets.push_back(mask_to_vertices(m));
  }
  return sets;
}

RVecX chamber_theta(const Context& c, const RVecX& n) {
  const long r = c.r();
  if (n.size() != r) throw std::invalid_argument("chamber_theta: n has wrong length");
  RVecX theta(r);
  for (long i = 0; i < r; ++i) theta[i] = n[i] - n[c.mod(i + r - c.a())];
  return theta;
}

std::vector<long> chamber_order(const Context& c) { return permutations(c).phi; }

RVecX default_chamber_point(const Context& c) {
  RVecX n(c.r());
  const auto phi = chamber_order(c);
  for (long j = 0; j < c.r(); ++j) n[phi[j]] = j;
  return n;
}

ChamberCertificate certify_chamber(const Context& c, const Fan& fan, const DivisorFamily<>& f,
                                   const RVecX& n) {
  const long r = c.r();
  const RVecX theta = chamber_theta(c, n);
  const auto phi = chamber_order(c);

  ChamberCertificate cert;
  cert.chain_strict = cert.chain_weak = true;
  for (long j = 0; j + 1 < r; ++j) {
    if (!(n[phi[j]] < n[phi[j + 1]])) cert.chain_strict = false;
    if (!(n[phi[j]] <= n[phi[j + 1]])) cert.chain_weak = false;
  }

  cert.all_stable = true;
  std::vector<int> e1_verdicts(r, -1);
  for (std::size_t ci = 0; ci < fan.cones.size(); ++ci) {
    const Cone& cone = fan.cones[ci];
    StabilityReport report = check_stability(c, fixed_point_rep(c, f, cone), theta);
    if (report.verdict != Verdict::stable) {
      cert.all_stable = false;
      cert.failing.push_back(static_cast<long>(ci));
    }
    if (cone.rays[0] == 0 || cone.rays[1] == 0 || cone.rays[2] == 0) {
      // e1 cone <p_i, p_{i+1}, e1>: the non-axis slots are i+1, i+2
      long slots[2];
      int k = 0;
      for (int l = 0; l < 3; ++l)
        if (cone.rays[l] != 0) slots[k++] = cone.rays[l];
      long i = std::min(slots[0], slots[1]) - 1;
      assert(std::max(slots[0], slots[1]) == i + 2);
      e1_verdicts[i] = static_cast<int>(report.verdict);
    }
    cert.reports.push_back(std::move(report));
  }

  bool e1_all_stable = true, e1_all_semi = true;
  for (long i = 0; i < r; ++i) {
    if (e1_verdicts[i] < 0) throw consistency_error("certify_chamber: missing e1 chart");
    if (e1_verdicts[i] != static_cast<int>(Verdict::stable)) e1_all_stable = false;
    if (e1_verdicts[i] == static_cast<int>(Verdict::unstable)) e1_all_semi = false;
  }
  if (e1_all_stable != cert.chain_strict)
    throw consistency_error("certify_chamber: e1 stability disagrees with the strict chain");
  if (e1_all_semi != cert.chain_weak)
    throw consistency_error("certify_chamber: e1 semistability disagrees with the weak chain");
  return cert;
}

std::vector<PathSubrep> path_subreps(const Context& c, const DivisorFamily<>& f, long j) {
  const long r = c.r();
  assert(0 <= j && j < r);
  const auto perm = permutations(c);
  const long step = r - c.a();
  std::vector<long> v(r);
  for (long k = 0; k < r; ++k) v[k] = c.mod(perm.xi[j] + (k + 1) * step);
  assert(v[r - 1] == perm.xi[j]);
  const Cone sigma = sigma_cone(c, j);

  std::vector<PathSubrep> out;
  for (long s = 1; s < r; ++s) {
    Arrow gate{ArrowKind::z, v[s - 1]};
    if (!is_distinguished(f, sigma, gate)) continue;
    PathSubrep rec;
    rec.kind = 'V';
    rec.support.assign(v.begin() + s, v.end());
    rec.gate = gate;
    rec.pos_index = v[s];
    rec.neg_index = v[0];
    out.push_back(std::move(rec));
  }
  for (long e = 0; e + 1 < r; ++e) {
    Arrow gate{ArrowKind::y, v[e + 1]};
    if (!is_distinguished(f, sigma, gate)) continue;
    PathSubrep rec;
    rec.kind = 'W';
    rec.support.assign(v.begin(), v.begin() + e + 1);
    rec.gate = gate;
    rec.pos_index = v[0];
    rec.neg_index = v[e + 1];
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace danilov
