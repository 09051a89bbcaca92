#include "doctest.h"

#include <numeric>

#include "danilov/serialize.hpp"
#include "danilov/stability.hpp"

using namespace danilov;

namespace {

std::vector<Context> coprime_contexts(long max_r) {
  std::vector<Context> out;
  for (long r = 2; r <= max_r; ++r)
    for (long a = 1; a < r; ++a)
      if (std::gcd(a, r) == 1) out.emplace_back(r, a);
  return out;
}

bool starts_with(const std::string& text, const std::string& prefix) {
  return text.rfind(prefix, 0) == 0;
}

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

CheckDoc certified_doc(const Context& c) {
  Fan fan = danilov_fan(c);
  DivisorFamily<> f = divisor_family(c);
  ChamberCertificate cert = certify_chamber(c, fan, f, default_chamber_point(c));
  CheckDoc d;
  d.r = c.r();
  d.a = c.a();
  d.theta = chamber_theta(c, default_chamber_point(c));
  for (std::size_t ci = 0; ci < cert.reports.size(); ++ci) {
    VerdictLine line;
    line.cone = static_cast<long>(ci);
    line.verdict = cert.reports[ci].verdict;
    line.min_value = cert.reports[ci].min_value;
    line.witness = cert.reports[ci].witness;
    d.verdicts.push_back(std::move(line));
  }
  const long m = static_cast<long>(fan.cones.size());
  d.pair_count = m * (m - 1) / 2;
  d.pass = cert.all_stable;
  return d;
}

}  // namespace

TEST_CASE("rational formatting") {
  CHECK(format_rat(Rat(3, 4)) == "3/4");
  CHECK(format_rat(Rat(-3, 4)) == "-3/4");
  CHECK(format_rat(Rat(2)) == "2/1");
  CHECK(format_rat(Rat(2), true) == "2");
  CHECK(format_rat(Rat(0)) == "0/1");
  CHECK(format_rat(Rat(6, 4)) == "3/2");
  CHECK(parse_rat("3/4") == Rat(3, 4));
  CHECK(parse_rat("-3/4") == Rat(-3, 4));
  CHECK(parse_rat("7") == Rat(7));
  CHECK(parse_rat("2/4") == Rat(1, 2));
  CHECK_THROWS_AS(parse_rat(""), parse_error);
  CHECK_THROWS_AS(parse_rat("x"), parse_error);
  CHECK_THROWS_AS(parse_rat("1/0"), parse_error);
  CHECK_THROWS_AS(parse_rat("1/2/3"), parse_error);
}

TEST_CASE("labels and divisor pretty printing") {
  CHECK(ray_label(0) == "e1");
  CHECK(ray_label(1) == "p0");
  CHECK(ray_label(6) == "p5");
  CHECK(slot_label(0) == "E1");
  CHECK(slot_label(3) == "D2");

  RVecX v = RVecX::Zero(7);
  CHECK(format_divisor(v) == "0");
  v[0] = 1;
  v[3] = Rat(2, 5);
  CHECK(format_divisor(v) == "E1 + 2/5 D2");
  v[0] = -1;
  CHECK(format_divisor(v) == "-E1 + 2/5 D2");
  v[0] = 0;
  v[4] = 2;
  CHECK(format_divisor(v) == "2/5 D2 + 2 D3");
}

TEST_CASE("fan documents round trip") {
  for (const Context& c : coprime_contexts(20)) {
    Fan f = danilov_fan(c);
    const std::string text = print_fan_structured(f);
    CHECK(text == print_fan_structured(f));  // deterministic
    Fan back = parse_fan(text);
    CHECK(same_fan(back, f));
    CHECK(print_fan_structured(back) == text);
    // the parser restores the generator pairing too
    for (std::size_t i = 0; i < f.cones.size(); ++i)
      for (int l = 0; l < 3; ++l) {
        CHECK(back.cones[i].rays[l] == f.cones[i].rays[l]);
        CHECK(back.cones[i].gens[l] == f.cones[i].gens[l]);
      }
  }

  Fan f = danilov_fan(Context(5, 2));
  CHECK_THROWS_AS(parse_fan("danilov 1 theta\n"), parse_error);
  CHECK_THROWS_AS(parse_fan("nonsense"), parse_error);
  CHECK_THROWS_AS(parse_fan(print_fan_structured(f) + "extra\n"), parse_error);
  std::string damaged = print_fan_structured(f);
  damaged.replace(damaged.find("central"), 7, "middle!");
  CHECK_THROWS_AS(parse_fan(damaged), parse_error);

  const std::string text = print_fan_text(f);
  CHECK(starts_with(text, "fan of 1/5(1,2,3)\nrays 7\nray 0: e1 = (5 0 0)/5\n"));
  CHECK(contains(text, "cone 6: <p0 p3 p5> central"));
}

TEST_CASE("fan svg output is exact and self-describing") {
  Fan f = danilov_fan(Context(5, 2));
  const std::string svg = print_fan_svg(f);
  CHECK(starts_with(svg, "<svg xmlns=\"http://www.w3.org/2000/svg\""));
  CHECK(contains(svg, "<title>fan of 1/5(1,2,3)</title>"));
  CHECK(contains(svg, "barycentric projection"));
  CHECK(contains(svg, ">e1</text>"));
  CHECK(contains(svg, ">p5</text>"));
  // e1 projects to the top corner, exactly
  CHECK(contains(svg, "<circle cx=\"320.00\" cy=\"80.00\" r=\"4\"/>"));
  // p3 = (1,2,3)/5 projects to (a + 2b + 3c)/6, an exact rational rounded
  // to two decimals: x = (320 + 160 + 1680)/6 = 360, y = (80 + 1120 + 1680)/6 = 480
  CHECK(contains(svg, "<circle cx=\"360.00\" cy=\"480.00\" r=\"4\"/>"));
  CHECK(svg == print_fan_svg(f));
}

TEST_CASE("divisor documents round trip") {
  for (const Context& c : coprime_contexts(16)) {
    DivisorDoc d = make_divisor_doc(c, divisor_family(c));
    const std::string text = print_divisors_structured(d);
    DivisorDoc back = parse_divisors(text);
    CHECK(back == d);
    CHECK(print_divisors_structured(back) == text);
  }
  Context c(5, 2);
  DivisorDoc d = make_divisor_doc(c, divisor_family(c));
  const std::string text = print_divisors_text(d);
  CHECK(contains(text, "X4 = E1 + D1 + 2 D2 + D3 + D4"));
  CHECK(contains(text, "DX = E1 + 2/5 D1 + 4/5 D2 + 1/5 D3 + 3/5 D4"));
  CHECK(contains(text, "check: R1 = DX - E1 passed"));

  DivisorDoc lied = d;
  lied.R[1][1] += 1;
  CHECK(contains(print_divisors_text(lied), "check: R1 = DX - E1 FAILED"));
  CHECK_THROWS_AS(parse_divisors("danilov 1 divisors\ngroup 4 2\n"), parse_error);
}

TEST_CASE("quiver printers") {
  Context c(5, 2);
  DivisorDoc d = make_divisor_doc(c, divisor_family(c));
  const std::string text = print_quiver_text(c, d);
  CHECK(starts_with(text, "mckay quiver of 1/5(1,2,3)\nvertices 5\narrows 15\n"));
  CHECK(contains(text, "x0: 0 -> 1  [X0 = E1]"));
  CHECK(contains(text, "z2: 2 -> 0  [Z2 = D1 + D2 + D3 + D4 + D5]"));

  const std::string structured = print_quiver_structured(c);
  CHECK(starts_with(structured, "danilov 1 quiver\ngroup 5 2\nvertices 5\narrows 15\n"));
  CHECK(contains(structured, "arrow x 0 0 1\n"));
  CHECK(contains(structured, "arrow z 2 2 0\n"));

  const std::string dot = print_quiver_dot(c, d, false);
  CHECK(starts_with(dot, "digraph mckay_5_2 {\n  rankdir=LR;\n  node [shape=circle];\n"));
  CHECK(contains(dot, "v0 -> v1 [label=\"x0\"];"));
  CHECK(!contains(dot, "E1"));
  const std::string dotd = print_quiver_dot(c, d, true);
  CHECK(contains(dotd, "v0 -> v1 [label=\"x0: X0 = E1\"];"));
}

TEST_CASE("theta documents round trip") {
  for (const Context& c : coprime_contexts(16)) {
    ThetaDoc d = make_theta_doc(c, default_chamber_point(c));
    ThetaDoc back = parse_theta(print_theta_structured(d));
    CHECK(back == d);
    CHECK(print_theta_structured(back) == print_theta_structured(d));
  }
  Context c(5, 2);
  RVecX n(5);
  n << Rat(0), Rat(1, 2), Rat(1), Rat(7, 3), Rat(2);
  ThetaDoc d = make_theta_doc(c, n);
  ThetaDoc back = parse_theta(print_theta_structured(d));
  CHECK(back == d);
  const std::string text = print_theta_text(make_theta_doc(c, default_chamber_point(c)));
  CHECK(contains(text, "chain: n0 < n2 < n1 < n4 < n3"));
  CHECK(contains(text, "theta: -4 -1 1 2 2"));
}

TEST_CASE("check documents round trip") {
  for (const Context& c : coprime_contexts(12)) {
    CheckDoc d = certified_doc(c);
    CheckDoc back = parse_check(print_check_structured(d));
    CHECK(back == d);
    CHECK(print_check_structured(back) == print_check_structured(d));
  }

  // a fabricated failing report keeps witnesses and failure lists intact
  CheckDoc d = certified_doc(Context(5, 2));
  d.pass = false;
  d.verdicts[0].verdict = Verdict::strictly_semistable;
  d.verdicts[0].min_value = 0;
  d.verdicts[0].witness = {2, 4};
  d.verdicts[3].verdict = Verdict::unstable;
  d.verdicts[3].min_value = Rat(-7, 2);
  d.verdicts[3].witness = {0};
  d.iso_pairs.push_back({1, 4});
  d.disconnected.push_back(6);
  d.bad_relations.push_back(2);
  CheckDoc back = parse_check(print_check_structured(d));
  CHECK(back == d);

  const Fan fan = danilov_fan(Context(5, 2));
  const std::string text = print_check_text(d, fan);
  CHECK(contains(text, "strictly-semistable, min 0, witness {2 4}"));
  CHECK(contains(text, "unstable, min -7/2, witness {0}"));
  CHECK(contains(text, "FAIL"));

  CheckDoc clean = certified_doc(Context(5, 2));
  const std::string good = print_check_text(clean, fan);
  CHECK(contains(good, "PASS (9 fixed points stable, 36 pairs non-isomorphic)"));
  CHECK(contains(good, "cone 0 <e1 p0 p1>: stable, min 1"));
}
