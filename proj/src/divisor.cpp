#include "danilov/divisor.hpp"

#include <limits>

namespace danilov {

long tau_value(const Context& c, long i) {
  if (i < 0 || i >= c.r()) throw std::invalid_argument("tau: i in [0, r-1]");
  if (c.is_trivial()) return 0;
  long r = c.r(), a = c.a();
  if (a == 1 || a == r - 1) return mod_floor(a * i - 1, r);
  if (i >= a) return tau_value(c.left(), mod_floor(i, r - a));
  return (r - a) + tau_value(c.right(), i);
}

Permutations permutations(const Context& c) {
  long r = c.r();
  Permutations p;
  p.tau.resize(r);
  p.xi.assign(r, -1);
  p.phi.resize(r);
  for (long i = 0; i < r; i++) {
    long t = tau_value(c, i);
    p.tau[i] = t;
    if (p.xi[t] != -1) throw consistency_error("tau is not a bijection");
    p.xi[t] = i;
  }
  for (long j = 0; j < r; j++) {
    p.phi[j] = c.mod(p.xi[j] - c.a());
    if (p.phi[j] != c.mod(p.xi[j] + (r - c.a())))
      throw consistency_error("phi: the two defining forms disagree");
  }
  return p;
}

std::vector<Brick> bricks(const Context& c, Side side) {
  if (c.is_trivial()) throw std::invalid_argument("bricks: trivial context");
  long step = side == Side::left ? c.r() - c.a() : c.a();
  std::vector<Brick> out;
  out.reserve(step);
  for (long start = 0; start < step; start++) {
    Brick b{start, step, 0, {}};
    for (long m = start; m < c.r(); m += step) b.members.push_back(m);
    b.length = static_cast<long>(b.members.size());
    out.push_back(std::move(b));
  }
  return out;
}

namespace {

// slot 0 is E1, slot i+1 is D_i
constexpr long kE1 = 0;
long slot(long i) { return i + 1; }

template <typename Scalar>
void guard_width(const Context& c) {
  if constexpr (std::numeric_limits<Scalar>::is_bounded) {
    // entries stay below 2r^2 and restriction forms entry * r, so r <= 1e6
    // keeps every intermediate below 2^63; far beyond any r whose
    // r * (r+2) table fits in memory anyway
    if (c.r() > 1000000) throw std::invalid_argument("divisor family: r too large for int64 entries");
  }
}

}  // namespace

template <typename Scalar>
DivisorFamily<Scalar> divisor_family(const Context& c) {
  guard_width<Scalar>(c);
  long r = c.r(), a = c.a(), n = r + 2;
  DivisorFamily<Scalar> f;
  f.ctx = c;
  f.perm = permutations(c);

  auto zero = [&] { return VecX<Scalar>::Zero(n).eval(); };

  f.Y.assign(r, zero());
  f.Z.assign(r, zero());
  for (long i = 0; i < r; i++) {
    long t = f.perm.tau[i];
    for (long k = 0; k <= t; k++) f.Y[c.mod(i - a)][slot(k)] = Scalar(r);
    for (long k = t + 1; k <= r; k++) f.Z[i][slot(k)] = Scalar(r);
  }

  f.DX = zero();
  f.DY = zero();
  f.DZ = zero();
  f.DX[kE1] = Scalar(r);
  for (long i = 0; i <= r; i++) {
    f.DX[slot(i)] = Scalar(c.mod(-i * c.b()));
    f.DY[slot(i)] = Scalar(r - i);
    f.DZ[slot(i)] = Scalar(i);
  }

  f.X.assign(r, zero());
  f.R.assign(r, zero());
  f.X[0][kE1] = Scalar(r);
  if (r > 1) {
    // both recurrences walk the a-orbit 0, -a, -2a, ... and must return to
    // their seed value after r steps
    long cur = 0;
    for (long step = 0; step < r; step++) {
      long nxt = c.mod(cur - a);
      VecX<Scalar> xc = f.X[cur] + f.Z[c.mod(cur + 1)] - f.Z[cur];
      VecX<Scalar> rc = f.R[cur] + f.DZ - f.Z[cur];
      if (nxt == 0) {
        if (xc != f.X[0]) throw consistency_error("X recurrence does not close");
        if (rc != f.R[0]) throw consistency_error("R recurrence does not close");
      } else {
        f.X[nxt] = std::move(xc);
        f.R[nxt] = std::move(rc);
      }
      cur = nxt;
    }
  }
  return f;
}

template <typename Scalar>
RVecX unscale(const Context& c, const VecX<Scalar>& v) {
  RVecX out(v.size());
  for (long k = 0; k < v.size(); k++) out[k] = Rat(Int(v[k])) / Int(c.r());
  return out;
}

template <typename Scalar>
VecX<Scalar> restrict_divisor(const Context& c, const VecX<Scalar>& v, Side side) {
  if (c.is_trivial()) throw std::invalid_argument("restrict: trivial context");
  if (v.size() != c.r() + 2) throw std::invalid_argument("restrict: wrong length");
  Context sub = side == Side::left ? c.left() : c.right();
  long base = side == Side::left ? 0 : c.r() - c.a();
  VecX<Scalar> out(sub.r() + 2);
  auto rescale = [&](Scalar entry) {
    // entry/r must be representable over the sub denominator
    Scalar num = entry * Scalar(sub.r());
    if (num % Scalar(c.r()) != Scalar(0))
      throw consistency_error("restrict: coefficient not representable in sub-context");
    return Scalar(num / Scalar(c.r()));
  };
  out[kE1] = rescale(v[kE1]);
  for (long j = 0; j <= sub.r(); j++) out[slot(j)] = rescale(v[slot(base + j)]);
  return out;
}

template struct DivisorFamily<std::int64_t>;
template struct DivisorFamily<Int>;
template DivisorFamily<std::int64_t> divisor_family<std::int64_t>(const Context&);
template DivisorFamily<Int> divisor_family<Int>(const Context&);
template RVecX unscale<std::int64_t>(const Context&, const VecX<std::int64_t>&);
template RVecX unscale<Int>(const Context&, const VecX<Int>&);
template VecX<std::int64_t> restrict_divisor<std::int64_t>(const Context&, const VecX<std::int64_t>&, Side);
template VecX<Int> restrict_divisor<Int>(const Context&, const VecX<Int>&, Side);

}  // namespace danilov
