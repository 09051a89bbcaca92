#include "danilov/cli.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "danilov/divisor.hpp"
#include "danilov/lattice.hpp"
#include "danilov/quiver.hpp"
#include "danilov/serialize.hpp"
#include "danilov/stability.hpp"

namespace danilov {

namespace {

RVecX parse_rat_list(const std::string& text, long expect, const char* what) {
  std::vector<Rat> vals;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) vals.push_back(parse_rat(tok));
  if (static_cast<long>(vals.size()) != expect)
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(expect) +
                                " comma-separated rationals");
  RVecX out(expect);
  for (long i = 0; i < expect; ++i) out[i] = vals[i];
  return out;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (format == f) return;
  std::string msg = "unsupported format '" + format + "', expected one of:";
  for (const char* f : allowed) msg += std::string(" ") + f;
  throw std::invalid_argument(msg);
}

template <typename Scalar>
bool vec_eq(const VecX<Scalar>& lhs, const VecX<Scalar>& rhs) {
  if (lhs.size() != rhs.size()) return false;
  for (long i = 0; i < lhs.size(); ++i)
    if (lhs[i] != rhs[i]) return false;
  return true;
}

bool point_eq(const ScaledPoint& lhs, const ScaledPoint& rhs) {
  for (int k = 0; k < 3; ++k)
    if (lhs[k] != rhs[k]) return false;
  return true;
}

// ----- subcommands -----

int cmd_fan(long r, long a, const std::string& format, std::ostream& out) {
  require_format(format, {"text", "structured", "svg"});
  Context c(r, a);
  Fan f = danilov_fan(c);
  if (format == "text")
    out << print_fan_text(f);
  else if (format == "structured")
    out << print_fan_structured(f);
  else
    out << print_fan_svg(f);
  return 0;
}

int cmd_quiver(long r, long a, const std::string& format, bool with_divisors, std::ostream& out) {
  require_format(format, {"text", "structured", "dot"});
  Context c(r, a);
  DivisorDoc d = make_divisor_doc(c, divisor_family(c));
  if (format == "text")
    out << print_quiver_text(c, d);
  else if (format == "structured")
    out << print_quiver_structured(c);
  else
    out << print_quiver_dot(c, d, with_divisors);
  return 0;
}

int cmd_divisors(long r, long a, const std::string& format, std::ostream& out) {
  require_format(format, {"text", "structured"});
  Context c(r, a);
  DivisorDoc d = make_divisor_doc(c, divisor_family(c));
  RVecX expected = d.DX;
  expected[0] -= 1;
  const bool r1_ok = vec_eq(d.R[1], expected);
  if (format == "text")
    out << print_divisors_text(d);
  else
    out << print_divisors_structured(d);
  return r1_ok ? 0 : 1;
}

int cmd_theta(long r, long a, const std::string& format, const std::string& n_arg,
              std::ostream& out) {
  require_format(format, {"text", "structured"});
  Context c(r, a);
  RVecX n = n_arg.empty() ? default_chamber_point(c) : parse_rat_list(n_arg, c.r(), "--n");
  ThetaDoc d = make_theta_doc(c, n);
  out << (format == "text" ? print_theta_text(d) : print_theta_structured(d));
  return 0;
}

int cmd_check(long r, long a, const std::string& format, const std::string& n_arg,
              const std::string& theta_arg, bool force, std::ostream& out) {
  require_format(format, {"text", "structured"});
  Context c(r, a);
  if (!n_arg.empty() && !theta_arg.empty())
    throw std::invalid_argument("--n and --theta are mutually exclusive");
  if (c.r() > 30) throw std::invalid_argument("check: brute force is capped at r <= 30");
  if (c.r() > 20 && !force)
    throw std::invalid_argument("check: refusing the 2^r brute force above r = 20 (pass --force)");
  Fan fan = danilov_fan(c);
  DivisorFamily<> fam = divisor_family(c);

  CheckDoc doc;
  doc.r = c.r();
  doc.a = c.a();
  std::vector<StabilityReport> reports;
  if (!theta_arg.empty()) {
    doc.theta = parse_rat_list(theta_arg, c.r(), "--theta");
    for (const Cone& cone : fan.cones)
      reports.push_back(check_stability(c, fixed_point_rep(c, fam, cone), doc.theta));
  } else {
    RVecX n = n_arg.empty() ? default_chamber_point(c) : parse_rat_list(n_arg, c.r(), "--n");
    doc.theta = chamber_theta(c, n);
    ChamberCertificate cert = certify_chamber(c, fan, fam, n);
    reports = std::move(cert.reports);
  }

  bool all_stable = true;
  for (std::size_t ci = 0; ci < reports.size(); ++ci) {
    VerdictLine line;
    line.cone = static_cast<long>(ci);
    line.verdict = reports[ci].verdict;
    line.min_value = reports[ci].min_value;
    line.witness = reports[ci].witness;
    if (line.verdict != Verdict::stable) all_stable = false;
    doc.verdicts.push_back(std::move(line));
  }

  std::vector<Representation> fixed;
  for (const Cone& cone : fan.cones) fixed.push_back(fixed_point_rep(c, fam, cone));
  const long m = static_cast<long>(fixed.size());
  doc.pair_count = m * (m - 1) / 2;
  for (long i = 0; i < m; ++i)
    for (long j = i + 1; j < m; ++j)
      if (isomorphic(c, fixed[i], fixed[j])) doc.iso_pairs.push_back({i, j});
  for (long i = 0; i < m; ++i) {
    if (!connected_without_last_x(c, fam, fan.cones[i])) doc.disconnected.push_back(i);
    if (!relations_hold(c, fixed[i])) doc.bad_relations.push_back(i);
  }
  doc.pass = all_stable && doc.iso_pairs.empty() && doc.disconnected.empty() &&
             doc.bad_relations.empty();
  out << (format == "text" ? print_check_text(doc, fan) : print_check_structured(doc));
  return doc.pass ? 0 : 1;
}

// ----- verify sweep -----

std::vector<long> sample_as(long r, bool all_a) {
  std::vector<long> out;
  if (all_a) {
    for (long a = 1; a < r; ++a)
      if (std::gcd(a, r) == 1) out.push_back(a);
    return out;
  }
  auto nearest_coprime = [&](long target) -> long {
    for (long d = 0; d < r; ++d) {
      if (target - d >= 1 && std::gcd(target - d, r) == 1) return target - d;
      if (target + d <= r - 1 && std::gcd(target + d, r) == 1) return target + d;
    }
    return 1;
  };
  std::vector<long> cand = {1, r - 1};
  for (long a = 2; a < r; ++a)
    if (std::gcd(a, r) == 1) {
      cand.push_back(a);
      break;
    }
  cand.push_back(nearest_coprime(r / 2));
  cand.push_back(nearest_coprime(r / 3));
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  for (long a : cand)
    if (a >= 1 && a < r && std::gcd(a, r) == 1) out.push_back(a);
  return out;
}

bool verify_fan(const Context& c, const Fan& fan, std::string& msg) {
  const long r = c.r();
  if (static_cast<long>(fan.rays.size()) != r + 2) {
    msg = "wrong ray count";
    return false;
  }
  if (static_cast<long>(fan.cones.size()) != 2 * r - 1) {
    msg = "wrong cone count";
    return false;
  }
  if (!point_eq(fan.rays[0], axis_point(c, 1))) {
    msg = "ray 0 is not e1";
    return false;
  }
  for (long i = 0; i <= r; ++i)
    if (!point_eq(fan.rays[i + 1], ray_point(c, i))) {
      msg = "ray table mismatch at p" + std::to_string(i);
      return false;
    }
  for (const ScaledPoint& u : fan.rays)
    if (!lattice_member(c, u) || !is_primitive(c, u)) {
      msg = "non-primitive or non-member ray";
      return false;
    }
  long e1_cones = 0;
  for (const Cone& k : fan.cones) {
    if (!is_smooth(c, k)) {
      msg = "singular cone";
      return false;
    }
    if (k.rays[0] == 0 || k.rays[1] == 0 || k.rays[2] == 0) ++e1_cones;
  }
  if (e1_cones != r) {
    msg = "wrong number of e1 cones";
    return false;
  }
  for (long i = 0; i < r; ++i) {
    const Cone sigma = sigma_cone(c, i);
    bool found = false;
    for (const Cone& k : fan.cones)
      if (same_cone(k, sigma)) {
        found = true;
        break;
      }
    if (!found) {
      msg = "sigma cone " + std::to_string(i) + " missing";
      return false;
    }
  }
  for (long i = 1; i < r; ++i) {
    const Rat d = discrepancy(c, i);
    if (!(d > 0 && d < 1)) {
      msg = "discrepancy out of range at " + std::to_string(i);
      return false;
    }
  }
  if (r <= 60 && !fan_is_coherent(fan)) {
    msg = "fan is not coherent";
    return false;
  }
  return true;
}

bool verify_divisors(const Context& c, const DivisorFamily<>& fam, std::string& msg) {
  const long r = c.r(), a = c.a();
  const DivisorFamily<Int> wide = divisor_family<Int>(c);
  auto same = [](const VecX<std::int64_t>& narrow, const VecX<Int>& big) {
    if (narrow.size() != big.size()) return false;
    for (long k = 0; k < narrow.size(); ++k)
      if (Int(narrow[k]) != big[k]) return false;
    return true;
  };
  for (long i = 0; i < r; ++i)
    if (!same(fam.X[i], wide.X[i]) || !same(fam.Y[i], wide.Y[i]) || !same(fam.Z[i], wide.Z[i]) ||
        !same(fam.R[i], wide.R[i])) {
      msg = "int64/mpz table mismatch";
      return false;
    }
  if (!same(fam.DX, wide.DX) || !same(fam.DY, wide.DY) || !same(fam.DZ, wide.DZ)) {
    msg = "int64/mpz principal divisor mismatch";
    return false;
  }

  auto at = [&](const std::vector<VecX<std::int64_t>>& t, long i) -> const VecX<std::int64_t>& {
    return t[c.mod(i)];
  };
  VecX<std::int64_t> full = VecX<std::int64_t>::Zero(r + 2);
  for (long k = 1; k <= r + 1; ++k) full[k] = r;
  for (long i = 0; i < r; ++i) {
    if (!vec_eq<std::int64_t>(at(fam.Y, i + 1) + fam.X[i], at(fam.X, i + a) + fam.Y[i])) {
      msg = "xy commutativity fails";
      return false;
    }
    if (!vec_eq<std::int64_t>(at(fam.Z, i + 1) + fam.X[i], at(fam.X, i - a) + fam.Z[i])) {
      msg = "xz commutativity fails";
      return false;
    }
    if (!vec_eq<std::int64_t>(at(fam.Y, i - a) + fam.Z[i], at(fam.Z, i + a) + fam.Y[i])) {
      msg = "yz commutativity fails";
      return false;
    }
    if (!vec_eq<std::int64_t>(at(fam.Y, i - a) + fam.Z[i], full)) {
      msg = "Y+Z is not the full boundary sum";
      return false;
    }
    if (fam.X[i][0] != r || fam.X[i].minCoeff() < 0) {
      msg = "X effectiveness fails";
      return false;
    }
    if (fam.Y[i][1] != r || fam.Y[i][0] != 0 || fam.Y[i].minCoeff() < 0) {
      msg = "Y effectiveness fails";
      return false;
    }
    if (fam.Z[i][r + 1] != r || fam.Z[i][0] != 0 || fam.Z[i].minCoeff() < 0) {
      msg = "Z effectiveness fails";
      return false;
    }
    if (!vec_eq<std::int64_t>(fam.X[i], fam.DX + fam.R[i] - at(fam.R, i + 1))) {
      msg = "X reductor identity fails";
      return false;
    }
    if (!vec_eq<std::int64_t>(fam.Y[i], fam.DY + fam.R[i] - at(fam.R, i + a))) {
      msg = "Y reductor identity fails";
      return false;
    }
    if (!vec_eq<std::int64_t>(fam.Z[i], fam.DZ + fam.R[i] - at(fam.R, i - a))) {
      msg = "Z reductor identity fails";
      return false;
    }
  }
  VecX<std::int64_t> xsum = VecX<std::int64_t>::Zero(r + 2);
  for (long i = 0; i < r; ++i) xsum += fam.X[i];
  if (!vec_eq<std::int64_t>(xsum, VecX<std::int64_t>(fam.DX * r))) {
    msg = "sum of X_i is not r * DX";
    return false;
  }
  VecX<std::int64_t> r1 = fam.DX;
  r1[0] -= r;
  if (!vec_eq<std::int64_t>(fam.R[1], r1)) {
    msg = "R1 != DX - E1";
    return false;
  }

  const Context left = c.left();
  if (!left.is_trivial()) {
    const DivisorFamily<> sub = divisor_family(left);
    for (long i = 0; i < r; ++i) {
      if (i + (r - a) < r) continue;  // only L-brick top elements
      if (!vec_eq<std::int64_t>(restrict_divisor(c, fam.Z[i], Side::left),
                                sub.Z[i % (r - a)])) {
        msg = "Z left restriction fails";
        return false;
      }
    }
    for (long i = 0; i + 1 < r; ++i)
      if (!vec_eq<std::int64_t>(restrict_divisor(c, fam.X[i], Side::left),
                                sub.X[i % (r - a)])) {
        msg = "X left restriction fails";
        return false;
      }
  }
  const Context right = c.right();
  if (!right.is_trivial()) {
    const DivisorFamily<> sub = divisor_family(right);
    for (long i = 0; i < a; ++i)
      if (!vec_eq<std::int64_t>(restrict_divisor(c, fam.Z[i], Side::right), sub.Z[i])) {
        msg = "Z right restriction fails";
        return false;
      }
    for (long i = 0; i + 1 < r; ++i)
      if (!vec_eq<std::int64_t>(restrict_divisor(c, fam.X[i], Side::right), sub.X[i % a])) {
        msg = "X right restriction fails";
        return false;
      }
  }
  return true;
}

bool verify_quiver(const Context& c, const Fan& fan, const DivisorFamily<>& fam,
                   std::string& msg) {
  const long r = c.r();
  std::vector<Representation> fixed;
  for (const Cone& k : fan.cones) {
    Representation v = fixed_point_rep(c, fam, k);
    if (!relations_hold(c, v)) {
      msg = "fixed rep violates relations";
      return false;
    }
    if (!connected_without_last_x(c, fam, k)) {
      msg = "connectedness fails";
      return false;
    }
    RVec3 zero;
    zero << Rat(0), Rat(0), Rat(0);
    Representation at0 = rep_at(c, fam, k, zero);
    if (!vec_eq<Rat>(at0.values, v.values)) {
      msg = "rep_at(0) differs from fixed rep";
      return false;
    }
    RVec3 ones;
    ones << Rat(1), Rat(1), Rat(1);
    Representation at1 = rep_at(c, fam, k, ones);
    for (long id = 0; id < 3 * r; ++id)
      if (at1.values[id] != 1) {
        msg = "rep_at(1,1,1) is not all ones";
        return false;
      }
    RVec3 generic;
    generic << Rat(2) / 3, Rat(5), Rat(7) / 2;
    if (!relations_hold(c, rep_at(c, fam, k, generic))) {
      msg = "rep_at violates relations at a generic point";
      return false;
    }
    fixed.push_back(std::move(v));
  }
  const auto perm = permutations(c);
  for (long j = 0; j < r; ++j) {
    const Cone sigma = sigma_cone(c, j);
    for (const Arrow w : distinguished_arrows(c, fam, sigma))
      if (w.kind == ArrowKind::x) {
        msg = "x arrow distinguished on a sigma cone";
        return false;
      }
    for (long i = 0; i < r; ++i) {
      const bool z_dist = is_distinguished(fam, sigma, Arrow{ArrowKind::z, i});
      const bool y_dist = is_distinguished(fam, sigma, Arrow{ArrowKind::y, c.mod(i + r - c.a())});
      if (i == perm.xi[j]) {
        if (z_dist || y_dist) {
          msg = "xi pair unexpectedly distinguished";
          return false;
        }
      } else if (z_dist == y_dist) {
        msg = "z/y pair not exclusive";
        return false;
      }
    }
  }
  for (std::size_t i = 0; i < fixed.size(); ++i)
    for (std::size_t j = i + 1; j < fixed.size(); ++j)
      if (isomorphic(c, fixed[i], fixed[j])) {
        msg = "fixed reps isomorphic";
        return false;
      }
  // gauge invariance spot check: rescale one vertex
  Representation scaled = fixed[0];
  for (long id = 0; id < 3 * r; ++id) {
    Arrow w = arrow_from_id(c, id);
    if (arrow_head(c, w) == 1) scaled.values[id] *= 7;
    if (arrow_tail(c, w) == 1) scaled.values[id] /= 7;
  }
  if (!isomorphic(c, fixed[0], scaled)) {
    msg = "gauge rescaling breaks isomorphism";
    return false;
  }
  return true;
}

Representation random_sparse_rep(const Context& c, std::mt19937_64& rng) {
  Representation v;
  v.r = c.r();
  v.a = c.a();
  v.values = RVecX::Zero(3 * c.r());
  for (long id = 0; id < 3 * c.r(); ++id) {
    switch (rng() % 6) {
      case 0: v.values[id] = 1; break;
      case 1: v.values[id] = 2; break;
      case 2: v.values[id] = Rat(1) / 2; break;
      default: break;  // zero
    }
  }
  return v;
}

std::vector<std::vector<long>> naive_closed_subsets(const Context& c, const Representation& v) {
  const long r = c.r();
  std::vector<std::pair<long, long>> arcs;
  for (long id = 0; id < 3 * r; ++id) {
    if (v.values[id] == 0) continue;
    Arrow w = arrow_from_id(c, id);
    arcs.emplace_back(arrow_tail(c, w), arrow_head(c, w));
  }
  std::vector<std::vector<long>> out;
  const unsigned long full = (1ul << r) - 1;
  for (unsigned long mask = 1; mask < full; ++mask) {
    bool closed = true;
    for (const auto& [tl, hd] : arcs)
      if ((mask >> tl & 1) && !(mask >> hd & 1)) {
        closed = false;
        break;
      }
    if (!closed) continue;
    std::vector<long> s;
    for (long u = 0; u < r; ++u)
      if (mask >> u & 1) s.push_back(u);
    out.push_back(std::move(s));
  }
  return out;
}

char verify_stability(const Context& c, const Fan& fan, const DivisorFamily<>& fam, bool force,
                      std::string& msg) {
  const long r = c.r();
  if (r > 30 || (r > 20 && !force)) return 's';
  const auto phi = chamber_order(c);
  try {
    const RVecX n0 = default_chamber_point(c);
    ChamberCertificate cert = certify_chamber(c, fan, fam, n0);
    if (!cert.all_stable || !cert.chain_strict) {
      msg = "default chamber point is not simultaneously stable";
      return 'f';
    }
    if (r > 14) return 'o';

    auto e1_semistable = [&](const ChamberCertificate& cc) {
      for (std::size_t ci = 0; ci < fan.cones.size(); ++ci) {
        const Cone& k = fan.cones[ci];
        if (k.rays[0] != 0 && k.rays[1] != 0 && k.rays[2] != 0) continue;
        if (cc.reports[ci].verdict == Verdict::strictly_semistable) return true;
      }
      return false;
    };
    for (long w = 0; w + 1 < r; ++w) {
      RVecX n = n0;
      n[phi[w + 1]] = n[phi[w]];
      ChamberCertificate wall = certify_chamber(c, fan, fam, n);
      if (wall.chain_strict || !wall.chain_weak || wall.all_stable || !e1_semistable(wall)) {
        msg = "wall " + std::to_string(w) + " does not yield a strictly semistable chart";
        return 'f';
      }
    }
    std::mt19937_64 rng(0x5eed0000u + 1000003ul * r + c.a());
    for (int trial = 0; trial < 30; ++trial) {
      RVecX n(r);
      for (long i = 0; i < r; ++i) {
        n[i] = Rat(static_cast<long>(rng() % r));
        if (rng() % 3 == 0) n[i] += Rat(1) / 2;
      }
      certify_chamber(c, fan, fam, n);  // throws on chain/verdict mismatch
    }
    for (const Cone& k : fan.cones) {
      Representation v = fixed_point_rep(c, fam, k);
      if (closed_subsets(c, v) != naive_closed_subsets(c, v)) {
        msg = "closed subset enumerator disagrees with the naive filter";
        return 'f';
      }
    }
    for (int trial = 0; trial < 10; ++trial) {
      Representation v = random_sparse_rep(c, rng);
      if (closed_subsets(c, v) != naive_closed_subsets(c, v)) {
        msg = "closed subset enumerator disagrees on a random representation";
        return 'f';
      }
    }
  } catch (const std::exception& e) {
    msg = e.what();
    return 'f';
  }
  return 'o';
}

bool verify_roundtrip(const Context& c, const Fan& fan, const DivisorFamily<>& fam,
                      std::string& msg) {
  if (!same_fan(parse_fan(print_fan_structured(fan)), fan)) {
    msg = "fan round trip fails";
    return false;
  }
  const DivisorDoc d = make_divisor_doc(c, fam);
  if (!(parse_divisors(print_divisors_structured(d)) == d)) {
    msg = "divisor round trip fails";
    return false;
  }
  const ThetaDoc t = make_theta_doc(c, default_chamber_point(c));
  if (!(parse_theta(print_theta_structured(t)) == t)) {
    msg = "theta round trip fails";
    return false;
  }
  if (c.r() <= 14) {
    CheckDoc doc;
    doc.r = c.r();
    doc.a = c.a();
    doc.theta = t.theta;
    ChamberCertificate cert = certify_chamber(c, fan, fam, t.n);
    for (std::size_t ci = 0; ci < cert.reports.size(); ++ci) {
      VerdictLine line;
      line.cone = static_cast<long>(ci);
      line.verdict = cert.reports[ci].verdict;
      line.min_value = cert.reports[ci].min_value;
      line.witness = cert.reports[ci].witness;
      doc.verdicts.push_back(std::move(line));
    }
    const long m = static_cast<long>(fan.cones.size());
    doc.pair_count = m * (m - 1) / 2;
    doc.pass = cert.all_stable;
    if (!(parse_check(print_check_structured(doc)) == doc)) {
      msg = "check round trip fails";
      return false;
    }
  }
  return true;
}

int cmd_verify(long max_r, bool all_a, bool force, std::ostream& out) {
  if (max_r < 2) throw std::invalid_argument("verify: --max-r must be at least 2");
  struct Suite {
    const char* name;
    long ok = 0, fail = 0, skip = 0;
  };
  Suite suites[5] = {{"fan"}, {"divisors"}, {"quiver"}, {"stability"}, {"roundtrip"}};
  std::vector<std::string> failures;
  long pairs = 0;

  for (long r = 2; r <= max_r; ++r) {
    for (long a : sample_as(r, all_a)) {
      ++pairs;
      Context c(r, a);
      Fan fan = danilov_fan(c);
      DivisorFamily<> fam = divisor_family(c);
      auto record = [&](Suite& s, bool ok, const std::string& msg) {
        if (ok) {
          ++s.ok;
        } else {
          ++s.fail;
          failures.push_back("fail " + std::string(s.name) + " " + std::to_string(r) + " " +
                             std::to_string(a) + ": " + msg);
        }
      };
      std::string msg;
      record(suites[0], verify_fan(c, fan, msg), msg);
      msg.clear();
      record(suites[1], verify_divisors(c, fam, msg), msg);
      msg.clear();
      record(suites[2], verify_quiver(c, fan, fam, msg), msg);
      msg.clear();
      switch (verify_stability(c, fan, fam, force, msg)) {
        case 'o': ++suites[3].ok; break;
        case 's': ++suites[3].skip; break;
        default:
          ++suites[3].fail;
          failures.push_back("fail stability " + std::to_string(r) + " " + std::to_string(a) +
                             ": " + msg);
      }
      msg.clear();
      record(suites[4], verify_roundtrip(c, fan, fam, msg), msg);
    }
  }

  out << "verify max-r " << max_r << " mode " << (all_a ? "all-a" : "sampled-a") << '\n';
  out << "pairs " << pairs << '\n';
  bool pass = true;
  for (const Suite& s : suites) {
    out << "suite " << s.name << " ok " << s.ok << " fail " << s.fail << " skip " << s.skip
        << '\n';
    if (s.fail > 0) pass = false;
  }
  if (suites[3].skip > 0)
    out << "note stability brute force skipped above r 20 (pass --force to run it)\n";
  for (const std::string& f : failures) out << f << '\n';
  out << (pass ? "PASS" : "FAIL") << '\n';
  return pass ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact Danilov resolution, McKay quiver and stability chamber toolkit for "
               "1/r(1,a,r-a)",
               "danilov"};
  app.require_subcommand(1);

  long fan_r = 0, fan_a = 0;
  std::string fan_format = "text";
  CLI::App* fan_cmd = app.add_subcommand("fan", "resolution fan: rays and maximal cones");
  fan_cmd->add_option("-r", fan_r, "order of the cyclic group")->required();
  fan_cmd->add_option("-a", fan_a, "weight of the second coordinate")->required();
  fan_cmd->add_option("--format", fan_format, "text, structured or svg");

  long qv_r = 0, qv_a = 0;
  std::string qv_format = "text";
  bool qv_dot = false, qv_divisors = false;
  CLI::App* qv_cmd = app.add_subcommand("quiver", "McKay quiver arrows and divisors");
  qv_cmd->add_option("-r", qv_r, "order of the cyclic group")->required();
  qv_cmd->add_option("-a", qv_a, "weight of the second coordinate")->required();
  qv_cmd->add_option("--format", qv_format, "text, structured or dot");
  qv_cmd->add_flag("--dot", qv_dot, "shorthand for --format dot");
  qv_cmd->add_flag("--divisors", qv_divisors, "annotate DOT edges with arrow divisors");

  long dv_r = 0, dv_a = 0;
  std::string dv_format = "text";
  CLI::App* dv_cmd = app.add_subcommand("divisors", "divisor tables X, Y, Z, R and principals");
  dv_cmd->add_option("-r", dv_r, "order of the cyclic group")->required();
  dv_cmd->add_option("-a", dv_a, "weight of the second coordinate")->required();
  dv_cmd->add_option("--format", dv_format, "text or structured");

  long th_r = 0, th_a = 0;
  std::string th_format = "text", th_n;
  CLI::App* th_cmd = app.add_subcommand("theta", "chamber order and weights");
  th_cmd->add_option("-r", th_r, "order of the cyclic group")->required();
  th_cmd->add_option("-a", th_a, "weight of the second coordinate")->required();
  th_cmd->add_option("--format", th_format, "text or structured");
  th_cmd->add_option("--n", th_n, "comma-separated rational n-vector");

  long ck_r = 0, ck_a = 0;
  std::string ck_format = "text", ck_n, ck_theta;
  bool ck_force = false;
  CLI::App* ck_cmd = app.add_subcommand("check", "certify stability of all fixed points");
  ck_cmd->add_option("-r", ck_r, "order of the cyclic group")->required();
  ck_cmd->add_option("-a", ck_a, "weight of the second coordinate")->required();
  ck_cmd->add_option("--format", ck_format, "text or structured");
  ck_cmd->add_option("--n", ck_n, "comma-separated rational n-vector");
  ck_cmd->add_option("--theta", ck_theta, "comma-separated rational weights (sum 0)");
  ck_cmd->add_flag("--force", ck_force, "allow the 2^r brute force above r = 20");

  long vf_max_r = 0;
  bool vf_all_a = false, vf_force = false;
  CLI::App* vf_cmd = app.add_subcommand("verify", "run every property suite up to a bound");
  vf_cmd->add_option("--max-r", vf_max_r, "largest r to sweep")->required();
  vf_cmd->add_flag("--all-a", vf_all_a, "sweep every coprime a instead of a sample");
  vf_cmd->add_flag("--force", vf_force, "run the 2^r brute force above r = 20");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*fan_cmd) return cmd_fan(fan_r, fan_a, fan_format, out);
    if (*qv_cmd)
      return cmd_quiver(qv_r, qv_a, qv_dot ? std::string("dot") : qv_format, qv_divisors, out);
    if (*dv_cmd) return cmd_divisors(dv_r, dv_a, dv_format, out);
    if (*th_cmd) return cmd_theta(th_r, th_a, th_format, th_n, out);
    if (*ck_cmd) return cmd_check(ck_r, ck_a, ck_format, ck_n, ck_theta, ck_force, out);
    if (*vf_cmd) return cmd_verify(vf_max_r, vf_all_a, vf_force, out);
  } catch (const parse_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    return 1;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace danilov
