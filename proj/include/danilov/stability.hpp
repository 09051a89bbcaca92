#pragma once

#include <vector>

#include "danilov/lattice.hpp"
#include "danilov/quiver.hpp"

// King stability for dimension vector (1, ..., 1): a representation is
// theta-stable when every proper nonempty closed subset S of its support
// quiver has theta(S) > 0.  S is closed when every nonzero arrow with tail
// in S has its head in S.  Verdicts are decided by brute force over all
// 2^r - 2 candidate subsets, so r is capped at 30 here and callers are
// expected to guard long before that.

namespace danilov {

enum class Verdict { stable, strictly_semistable, unstable };

struct StabilityReport {
  Verdict verdict = Verdict::stable;
  // minimum of theta over proper nonempty closed subsets; 0 when none exist
  Rat min_value;
  // the minimizer, empty when stable; ties break to the smallest bitmask
  std::vector<long> witness;
};

// throws std::invalid_argument unless theta has length r and sums to zero
StabilityReport check_stability(const Context& c, const Representation& v, const RVecX& theta);

// All proper nonempty closed subsets, each sorted, in increasing bitmask
// order.  Enumerates down-sets of the strongly connected component
// condensation, so the cost is proportional to the output, not to 2^r.
std::vector<std::vector<long>> closed_subsets(const Context& c, const Representation& v);

// theta_i = n_i - n_{i + (r-a)}; sums to zero by construction
RVecX chamber_theta(const Context& c, const RVecX& n);

// The vertex order phi along which n must strictly increase for every
// chart's fixed representation to be stable at chamber_theta(n).
std::vector<long> chamber_order(const Context& c);

// n with n[phi[j]] = j, the canonical interior point of the chamber
RVecX default_chamber_point(const Context& c);

struct ChamberCertificate {
  bool all_stable = false;      // every chart's fixed rep is theta-stable
  bool chain_strict = false;    // n increases strictly along chamber_order
  bool chain_weak = false;      // n increases weakly along chamber_order
  std::vector<long> failing;    // fan cone indices with non-stable verdict
  std::vector<StabilityReport> reports;  // one per fan cone, same order
};

// Checks every fixed representation of the fan against chamber_theta(n)
// and cross-validates the e1-chart verdicts against the chain comparisons:
// the e1 charts are all stable iff chain_strict, all semistable iff
// chain_weak.  A mismatch there is a consistency_error, not a certificate
// failure.
ChamberCertificate certify_chamber(const Context& c, const Fan& fan, const DivisorFamily<>& f,
                                   const RVecX& n);

// The subrepresentations of the e1-chart fixed rep F_j supported on runs of
// its z/y path v_0, v_1, ..., v_{r-1} = xi(j), v_k = xi(j) + (k+1)(r-a).
// A suffix V = {v_s, ...} exists when its gate z_{v_{s-1}} is distinguished,
// a prefix W = {..., v_e} when y_{v_{e+1}} is; theta of the subrep is
// n[pos_index] - n[neg_index] for theta = chamber_theta(n).
struct PathSubrep {
  char kind = 'V';  // 'V' suffix or 'W' prefix
  std::vector<long> support;
  Arrow gate;
  long pos_index = 0, neg_index = 0;
};

std::vector<PathSubrep> path_subreps(const Context& c, const DivisorFamily<>& f, long j);

}  // namespace danilov
