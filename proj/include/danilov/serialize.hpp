#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "danilov/divisor.hpp"
#include "danilov/lattice.hpp"
#include "danilov/quiver.hpp"
#include "danilov/stability.hpp"

// Deterministic text serialization.  The structured format is one versioned
// document per command, first line "danilov 1 <kind>", then "group r a",
// then the payload; every rational prints as "num/den".  parse(print(x))
// is the identity for fans, divisor tables, chamber data and check
// reports.  Text, DOT and SVG are write-only human formats; SVG
// coordinates are rendered with exactly two decimals computed in integer
// arithmetic, so every format is byte-deterministic.

namespace danilov {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "num/den" with den >= 1; den == 1 prints as num alone iff plain is set
std::string format_rat(const Rat& q, bool plain = false);
Rat parse_rat(std::string_view token);  // accepts "n" and "n/d"

std::string ray_label(long slot);     // e1, p0, p1, ...
std::string slot_label(long slot);    // E1, D0, D1, ...

// Human form of a coefficient vector in the frozen ray order, e.g.
// "E1 + 2/5 D1 + 4/5 D2"; the zero vector prints as "0".
std::string format_divisor(const RVecX& coeffs);

// ----- fan -----
std::string print_fan_structured(const Fan& f);
Fan parse_fan(const std::string& text);
bool same_fan(const Fan& lhs, const Fan& rhs);
std::string print_fan_text(const Fan& f);
std::string print_fan_svg(const Fan& f);

// ----- divisors -----
struct DivisorDoc {
  long r = 0, a = 0;
  std::vector<long> tau, xi, phi;
  std::vector<RVecX> X, Y, Z, R;
  RVecX DX, DY, DZ;
};
bool operator==(const DivisorDoc& lhs, const DivisorDoc& rhs);
DivisorDoc make_divisor_doc(const Context& c, const DivisorFamily<>& f);
std::string print_divisors_structured(const DivisorDoc& d);
DivisorDoc parse_divisors(const std::string& text);
std::string print_divisors_text(const DivisorDoc& d);

// ----- quiver -----
std::string print_quiver_text(const Context& c, const DivisorDoc& d);
std::string print_quiver_structured(const Context& c);
std::string print_quiver_dot(const Context& c, const DivisorDoc& d, bool with_divisors);

// ----- chamber / theta -----
struct ThetaDoc {
  long r = 0, a = 0;
  std::vector<long> phi;
  RVecX n, theta;
};
bool operator==(const ThetaDoc& lhs, const ThetaDoc& rhs);
ThetaDoc make_theta_doc(const Context& c, const RVecX& n);
std::string print_theta_structured(const ThetaDoc& d);
ThetaDoc parse_theta(const std::string& text);
std::string print_theta_text(const ThetaDoc& d);

// ----- check report -----
struct VerdictLine {
  long cone = 0;
  Verdict verdict = Verdict::stable;
  Rat min_value;
  std::vector<long> witness;
};
bool operator==(const VerdictLine& lhs, const VerdictLine& rhs);

struct CheckDoc {
  long r = 0, a = 0;
  RVecX theta;
  std::vector<VerdictLine> verdicts;             // one per fan cone
  long pair_count = 0;                           // fixed-point pairs tested
  std::vector<std::array<long, 2>> iso_pairs;    // unexpectedly isomorphic
  std::vector<long> disconnected;                // cones failing connectedness
  std::vector<long> bad_relations;               // cones violating relations
  bool pass = false;
};
bool operator==(const CheckDoc& lhs, const CheckDoc& rhs);
std::string print_check_structured(const CheckDoc& d);
CheckDoc parse_check(const std::string& text);
std::string print_check_text(const CheckDoc& d, const Fan& f);

const char* verdict_name(Verdict v);  // stable / strictly-semistable / unstable

}  // namespace danilov
