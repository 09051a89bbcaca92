#include "danilov/serialize.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>
#include <utility>

namespace danilov {

namespace {

std::string group_name(long r, long a) {
  std::ostringstream os;
  os << "1/" << r << "(1," << a << "," << r - a << ")";
  return os.str();
}

bool rvec_eq(const RVecX& lhs, const RVecX& rhs) {
  if (lhs.size() != rhs.size()) return false;
  for (long i = 0; i < lhs.size(); ++i)
    if (lhs[i] != rhs[i]) return false;
  return true;
}

bool ivec_eq(const IVec3& lhs, const IVec3& rhs) {
  for (int k = 0; k < 3; ++k)
    if (lhs[k] != rhs[k]) return false;
  return true;
}

using Row = std::vector<std::string>;

long to_long(const std::string& s) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    throw parse_error("bad integer: " + s);
  }
  if (used != s.size()) throw parse_error("bad integer: " + s);
  return v;
}

struct Scanner {
  std::vector<Row> rows;
  std::size_t pos = 0;

  explicit Scanner(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      Row row;
      std::istringstream ls(line);
      std::string tok;
      while (ls >> tok) row.push_back(std::move(tok));
      if (!row.empty()) rows.push_back(std::move(row));
    }
  }

  const Row& next(const char* what) {
    if (pos >= rows.size()) throw parse_error(std::string("unexpected end, wanted ") + what);
    return rows[pos++];
  }

  const Row* peek() const { return pos < rows.size() ? &rows[pos] : nullptr; }

  void finish() const {
    if (pos != rows.size()) throw parse_error("trailing content after document");
  }
};

void expect_header(Scanner& sc, const char* kind) {
  const Row& row = sc.next("header");
  if (row.size() != 3 || row[0] != "danilov" || row[1] != "1" || row[2] != kind)
    throw parse_error(std::string("expected header: danilov 1 ") + kind);
}

std::pair<long, long> read_group(Scanner& sc) {
  const Row& row = sc.next("group");
  if (row.size() != 3 || row[0] != "group") throw parse_error("expected group line");
  long r = to_long(row[1]), a = to_long(row[2]);
  try {
    Context probe(r, a);
  } catch (const std::invalid_argument& e) {
    throw parse_error(std::string("bad group: ") + e.what());
  }
  return {r, a};
}

long read_count(Scanner& sc, const char* label) {
  const Row& row = sc.next(label);
  if (row.size() != 2 || row[0] != label) throw parse_error(std::string("expected line: ") + label);
  long n = to_long(row[1]);
  if (n < 0) throw parse_error(std::string("negative count in ") + label);
  return n;
}

std::vector<long> read_longs(const Row& row, std::size_t from, long n, const char* what) {
  if (row.size() != from + static_cast<std::size_t>(n))
    throw parse_error(std::string("wrong arity in ") + what);
  std::vector<long> out;
  out.reserve(n);
  for (long k = 0; k < n; ++k) out.push_back(to_long(row[from + k]));
  return out;
}

RVecX read_rats(const Row& row, std::size_t from, long n, const char* what) {
  if (row.size() != from + static_cast<std::size_t>(n))
    throw parse_error(std::string("wrong arity in ") + what);
  RVecX out(n);
  for (long k = 0; k < n; ++k) out[k] = parse_rat(row[from + k]);
  return out;
}

void put_longs(std::ostream& os, const std::vector<long>& v) {
  for (long x : v) os << ' ' << x;
}

void put_rats(std::ostream& os, const RVecX& v, bool plain = false) {
  for (long k = 0; k < v.size(); ++k) os << ' ' << format_rat(v[k], plain);
}

std::array<int, 3> sorted_slots(const Cone& k) {
  std::array<int, 3> s = k.rays;
  std::sort(s.begin(), s.end());
  return s;
}

const char* tag_name(ConeTag t) {
  switch (t) {
    case ConeTag::central: return "central";
    case ConeTag::left: return "left";
    case ConeTag::right: return "right";
  }
  throw std::logic_error("bad cone tag");
}

ConeTag parse_tag(const std::string& s) {
  if (s == "central") return ConeTag::central;
  if (s == "left") return ConeTag::left;
  if (s == "right") return ConeTag::right;
  throw parse_error("bad cone tag: " + s);
}

}  // namespace

std::string format_rat(const Rat& q, bool plain) {
  const Int den = denominator(q);
  if (plain && den == 1) return numerator(q).str();
  return numerator(q).str() + "/" + den.str();
}

Rat parse_rat(std::string_view token) {
  const auto slash = token.find('/');
  if (token.empty() || slash == 0 || slash == token.size() - 1)
    throw parse_error("bad rational: " + std::string(token));
  try {
    Int num(std::string(token.substr(0, slash)));
    if (slash == std::string_view::npos) return Rat(num);
    Int den(std::string(token.substr(slash + 1)));
    if (den == 0) throw parse_error("zero denominator");
    return Rat(num) / den;
  } catch (const std::runtime_error&) {
    throw parse_error("bad rational: " + std::string(token));
  }
}

std::string ray_label(long slot) {
  return slot == 0 ? std::string("e1") : "p" + std::to_string(slot - 1);
}

std::string slot_label(long slot) {
  return slot == 0 ? std::string("E1") : "D" + std::to_string(slot - 1);
}

std::string format_divisor(const RVecX& coeffs) {
  std::ostringstream os;
  bool first = true;
  for (long k = 0; k < coeffs.size(); ++k) {
    const Rat& c = coeffs[k];
    if (c == 0) continue;
    const bool neg = c < 0;
    if (first) {
      if (neg) os << '-';
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    const Rat mag = neg ? Rat(-c) : c;
    if (mag != 1) os << format_rat(mag, true) << ' ';
    os << slot_label(k);
  }
  if (first) return "0";
  return os.str();
}

// ----- fan -----

std::string print_fan_structured(const Fan& f) {
  std::ostringstream os;
  os << "danilov 1 fan\n";
  os << "group " << f.ctx.r() << ' ' << f.ctx.a() << '\n';
  os << "rays " << f.rays.size() << '\n';
  for (std::size_t k = 0; k < f.rays.size(); ++k) {
    os << "ray " << k;
    for (int l = 0; l < 3; ++l) os << ' ' << f.rays[k][l];
    os << '\n';
  }
  os << "cones " << f.cones.size() << '\n';
  for (std::size_t i = 0; i < f.cones.size(); ++i) {
    const auto s = sorted_slots(f.cones[i]);
    os << "cone " << i << ' ' << s[0] << ' ' << s[1] << ' ' << s[2] << ' '
       << tag_name(f.cones[i].tag) << '\n';
  }
  return os.str();
}

Fan parse_fan(const std::string& text) {
  Scanner sc(text);
  expect_header(sc, "fan");
  auto [r, a] = read_group(sc);
  Fan f{Context(r, a), {}, {}};
  const long nrays = read_count(sc, "rays");
  for (long k = 0; k < nrays; ++k) {
    const Row& row = sc.next("ray");
    if (row.size() != 5 || row[0] != "ray" || to_long(row[1]) != k)
      throw parse_error("bad ray line");
    ScaledPoint u;
    try {
      for (int l = 0; l < 3; ++l) u[l] = Int(row[2 + l]);
    } catch (const std::runtime_error&) {
      throw parse_error("bad ray coordinate");
    }
    f.rays.push_back(u);
  }
  const long ncones = read_count(sc, "cones");
  for (long i = 0; i < ncones; ++i) {
    const Row& row = sc.next("cone");
    if (row.size() != 6 || row[0] != "cone" || to_long(row[1]) != i)
      throw parse_error("bad cone line");
    Cone k;
    for (int l = 0; l < 3; ++l) {
      long slot = to_long(row[2 + l]);
      if (slot < 0 || slot >= nrays) throw parse_error("cone slot out of range");
      k.rays[l] = static_cast<int>(slot);
      k.gens[l] = f.rays[slot];
    }
    k.tag = parse_tag(row[5]);
    // restore the lexicographic generator order the library maintains
    auto lex_less = [](const ScaledPoint& x, const ScaledPoint& y) {
      for (int l = 0; l < 3; ++l) {
        if (x[l] != y[l]) return x[l] < y[l];
      }
      return false;
    };
    for (int m = 0; m < 3; ++m)
      for (int l = 0; l + 1 < 3 - m; ++l)
        if (lex_less(k.gens[l + 1], k.gens[l])) {
          std::swap(k.gens[l], k.gens[l + 1]);
          std::swap(k.rays[l], k.rays[l + 1]);
        }
    f.cones.push_back(std::move(k));
  }
  sc.finish();
  return f;
}

bool same_fan(const Fan& lhs, const Fan& rhs) {
  if (!(lhs.ctx == rhs.ctx)) return false;
  if (lhs.rays.size() != rhs.rays.size() || lhs.cones.size() != rhs.cones.size()) return false;
  for (std::size_t k = 0; k < lhs.rays.size(); ++k)
    if (!ivec_eq(lhs.rays[k], rhs.rays[k])) return false;
  for (std::size_t i = 0; i < lhs.cones.size(); ++i) {
    if (sorted_slots(lhs.cones[i]) != sorted_slots(rhs.cones[i])) return false;
    if (lhs.cones[i].tag != rhs.cones[i].tag) return false;
  }
  return true;
}

std::string print_fan_text(const Fan& f) {
  std::ostringstream os;
  os << "fan of " << group_name(f.ctx.r(), f.ctx.a()) << '\n';
  os << "rays " << f.rays.size() << '\n';
  for (std::size_t k = 0; k < f.rays.size(); ++k) {
    os << "ray " << k << ": " << ray_label(k) << " = (";
    for (int l = 0; l < 3; ++l) os << (l ? " " : "") << f.rays[k][l];
    os << ")/" << f.ctx.r() << '\n';
  }
  os << "cones " << f.cones.size() << '\n';
  for (std::size_t i = 0; i < f.cones.size(); ++i) {
    const auto s = sorted_slots(f.cones[i]);
    os << "cone " << i << ": <" << ray_label(s[0]) << ' ' << ray_label(s[1]) << ' '
       << ray_label(s[2]) << "> " << tag_name(f.cones[i].tag) << '\n';
  }
  return os.str();
}

namespace {

// floor(q), exact
Int rat_floor(const Rat& q) {
  Int n = numerator(q), d = denominator(q);
  Int quo = n / d;
  if (n < 0 && quo * d != n) --quo;
  return quo;
}

// fixed-point decimal with exactly two digits, computed in integer
// arithmetic: round(q * 100) half up
std::string fixed2(const Rat& q) {
  Int cents = rat_floor(q * 100 + Rat(1) / 2);
  assert(cents >= 0);
  Int whole = cents / 100;
  long frac = static_cast<long>(cents % 100);
  std::ostringstream os;
  os << whole << '.' << (frac < 10 ? "0" : "") << frac;
  return os.str();
}

}  // namespace

std::string print_fan_svg(const Fan& f) {
  // corners of the display simplex: e1 top, e2 bottom left, e3 bottom right
  const long ax = 320, ay = 80, bx = 80, by = 560, cx = 560, cy = 560;
  auto project = [&](const ScaledPoint& u) {
    Rat s = Rat(Int(u[0] + u[1] + u[2]));
    Rat x = (Rat(Int(u[0])) * ax + Rat(Int(u[1])) * bx + Rat(Int(u[2])) * cx) / s;
    Rat y = (Rat(Int(u[0])) * ay + Rat(Int(u[1])) * by + Rat(Int(u[2])) * cy) / s;
    return std::pair<Rat, Rat>(x, y);
  };

  std::set<std::pair<int, int>> edges;
  for (const Cone& k : f.cones) {
    const auto s = sorted_slots(k);
    edges.insert({s[0], s[1]});
    edges.insert({s[0], s[2]});
    edges.insert({s[1], s[2]});
  }

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
        "viewBox=\"0 0 640 640\">\n";
  os << "<title>fan of " << group_name(f.ctx.r(), f.ctx.a()) << "</title>\n";
  os << "<rect x=\"0\" y=\"0\" width=\"640\" height=\"640\" fill=\"white\"/>\n";
  os << "<g stroke=\"#666666\" stroke-width=\"1\">\n";
  for (const auto& [p, q] : edges) {
    auto [x1, y1] = project(f.rays[p]);
    auto [x2, y2] = project(f.rays[q]);
    os << "<line x1=\"" << fixed2(x1) << "\" y1=\"" << fixed2(y1) << "\" x2=\"" << fixed2(x2)
       << "\" y2=\"" << fixed2(y2) << "\"/>\n";
  }
  os << "</g>\n";
  os << "<g fill=\"#1f6feb\">\n";
  for (std::size_t k = 0; k < f.rays.size(); ++k) {
    auto [x, y] = project(f.rays[k]);
    os << "<circle cx=\"" << fixed2(x) << "\" cy=\"" << fixed2(y) << "\" r=\"4\"/>\n";
  }
  os << "</g>\n";
  os << "<g font-family=\"monospace\" font-size=\"13\" fill=\"#111111\">\n";
  for (std::size_t k = 0; k < f.rays.size(); ++k) {
    auto [x, y] = project(f.rays[k]);
    os << "<text x=\"" << fixed2(x + 6) << "\" y=\"" << fixed2(y - 6) << "\">" << ray_label(k)
       << "</text>\n";
  }
  os << "<text x=\"16\" y=\"24\">fan of " << group_name(f.ctx.r(), f.ctx.a()) << ": "
     << f.rays.size() << " rays, " << f.cones.size() << " cones</text>\n";
  os << "<text x=\"16\" y=\"44\">barycentric projection: each ray u/" << f.ctx.r()
     << " is plotted at u divided by its coordinate sum</text>\n";
  os << "</g>\n";
  os << "</svg>\n";
  return os.str();
}

// ----- divisors -----

bool operator==(const DivisorDoc& lhs, const DivisorDoc& rhs) {
  if (lhs.r != rhs.r || lhs.a != rhs.a) return false;
  if (lhs.tau != rhs.tau || lhs.xi != rhs.xi || lhs.phi != rhs.phi) return false;
  auto rows_eq = [](const std::vector<RVecX>& x, const std::vector<RVecX>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!rvec_eq(x[i], y[i])) return false;
    return true;
  };
  return rows_eq(lhs.X, rhs.X) && rows_eq(lhs.Y, rhs.Y) && rows_eq(lhs.Z, rhs.Z) &&
         rows_eq(lhs.R, rhs.R) && rvec_eq(lhs.DX, rhs.DX) && rvec_eq(lhs.DY, rhs.DY) &&
         rvec_eq(lhs.DZ, rhs.DZ);
}

DivisorDoc make_divisor_doc(const Context& c, const DivisorFamily<>& f) {
  DivisorDoc d;
  d.r = c.r();
  d.a = c.a();
  d.tau = f.perm.tau;
  d.xi = f.perm.xi;
  d.phi = f.perm.phi;
  for (long i = 0; i < c.r(); ++i) {
    d.X.push_back(unscale(c, f.X[i]));
    d.Y.push_back(unscale(c, f.Y[i]));
    d.Z.push_back(unscale(c, f.Z[i]));
    d.R.push_back(unscale(c, f.R[i]));
  }
  d.DX = unscale(c, f.DX);
  d.DY = unscale(c, f.DY);
  d.DZ = unscale(c, f.DZ);
  return d;
}

std::string print_divisors_structured(const DivisorDoc& d) {
  std::ostringstream os;
  os << "danilov 1 divisors\n";
  os << "group " << d.r << ' ' << d.a << '\n';
  os << "tau";
  put_longs(os, d.tau);
  os << "\nxi";
  put_longs(os, d.xi);
  os << "\nphi";
  put_longs(os, d.phi);
  os << '\n';
  auto rows = [&](const char* label, const std::vector<RVecX>& t) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      os << label << ' ' << i;
      put_rats(os, t[i]);
      os << '\n';
    }
  };
  rows("X", d.X);
  rows("Y", d.Y);
  rows("Z", d.Z);
  rows("R", d.R);
  os << "DX";
  put_rats(os, d.DX);
  os << "\nDY";
  put_rats(os, d.DY);
  os << "\nDZ";
  put_rats(os, d.DZ);
  os << '\n';
  return os.str();
}

DivisorDoc parse_divisors(const std::string& text) {
  Scanner sc(text);
  expect_header(sc, "divisors");
  auto [r, a] = read_group(sc);
  DivisorDoc d;
  d.r = r;
  d.a = a;
  auto perm_line = [&](const char* label) {
    const Row& row = sc.next(label);
    if (row.empty() || row[0] != label) throw parse_error(std::string("expected ") + label);
    auto v = read_longs(row, 1, r, label);
    return v;
  };
  d.tau = perm_line("tau");
  d.xi = perm_line("xi");
  d.phi = perm_line("phi");
  auto table = [&](const char* label, std::vector<RVecX>& t) {
    for (long i = 0; i < r; ++i) {
      const Row& row = sc.next(label);
      if (row.size() < 2 || row[0] != label || to_long(row[1]) != i)
        throw parse_error(std::string("bad table row in ") + label);
      t.push_back(read_rats(row, 2, r + 2, label));
    }
  };
  table("X", d.X);
  table("Y", d.Y);
  table("Z", d.Z);
  table("R", d.R);
  auto principal = [&](const char* label) {
    const Row& row = sc.next(label);
    if (row.empty() || row[0] != label) throw parse_error(std::string("expected ") + label);
    return read_rats(row, 1, r + 2, label);
  };
  d.DX = principal("DX");
  d.DY = principal("DY");
  d.DZ = principal("DZ");
  sc.finish();
  return d;
}

std::string print_divisors_text(const DivisorDoc& d) {
  std::ostringstream os;
  os << "divisors of " << group_name(d.r, d.a) << '\n';
  os << "rays:";
  for (long k = 0; k < d.r + 2; ++k) os << ' ' << slot_label(k);
  os << "\ntau:";
  put_longs(os, d.tau);
  os << "\nxi:";
  put_longs(os, d.xi);
  os << "\nphi:";
  put_longs(os, d.phi);
  os << '\n';
  auto rows = [&](const char* label, const std::vector<RVecX>& t) {
    for (std::size_t i = 0; i < t.size(); ++i)
      os << label << i << " = " << format_divisor(t[i]) << '\n';
  };
  rows("X", d.X);
  rows("Y", d.Y);
  rows("Z", d.Z);
  rows("R", d.R);
  os << "DX = " << format_divisor(d.DX) << '\n';
  os << "DY = " << format_divisor(d.DY) << '\n';
  os << "DZ = " << format_divisor(d.DZ) << '\n';
  RVecX expected = d.DX;
  expected[0] -= 1;
  os << "check: R1 = DX - E1 " << (rvec_eq(d.R[1], expected) ? "passed" : "FAILED") << '\n';
  return os.str();
}

// ----- quiver -----

namespace {

const char* kind_letter(ArrowKind k) {
  switch (k) {
    case ArrowKind::x: return "x";
    case ArrowKind::y: return "y";
    case ArrowKind::z: return "z";
  }
  throw std::logic_error("bad arrow kind");
}

std::string arrow_divisor_label(const DivisorDoc& d, Arrow w) {
  std::ostringstream os;
  const std::vector<RVecX>* table = nullptr;
  const char* name = "";
  switch (w.kind) {
    case ArrowKind::x: table = &d.X; name = "X"; break;
    case ArrowKind::y: table = &d.Y; name = "Y"; break;
    case ArrowKind::z: table = &d.Z; name = "Z"; break;
  }
  os << name << w.i << " = " << format_divisor((*table)[w.i]);
  return os.str();
}

}  // namespace

std::string print_quiver_text(const Context& c, const DivisorDoc& d) {
  std::ostringstream os;
  os << "mckay quiver of " << group_name(c.r(), c.a()) << '\n';
  os << "vertices " << c.r() << '\n';
  os << "arrows " << 3 * c.r() << '\n';
  for (long i = 0; i < c.r(); ++i)
    for (ArrowKind kind : {ArrowKind::x, ArrowKind::y, ArrowKind::z}) {
      Arrow w{kind, i};
      os << kind_letter(kind) << i << ": " << arrow_tail(c, w) << " -> " << arrow_head(c, w)
         << "  [" << arrow_divisor_label(d, w) << "]\n";
    }
  return os.str();
}

std::string print_quiver_structured(const Context& c) {
  std::ostringstream os;
  os << "danilov 1 quiver\n";
  os << "group " << c.r() << ' ' << c.a() << '\n';
  os << "vertices " << c.r() << '\n';
  os << "arrows " << 3 * c.r() << '\n';
  for (long i = 0; i < c.r(); ++i)
    for (ArrowKind kind : {ArrowKind::x, ArrowKind::y, ArrowKind::z}) {
      Arrow w{kind, i};
      os << "arrow " << kind_letter(kind) << ' ' << i << ' ' << arrow_tail(c, w) << ' '
         << arrow_head(c, w) << '\n';
    }
  return os.str();
}

std::string print_quiver_dot(const Context& c, const DivisorDoc& d, bool with_divisors) {
  std::ostringstream os;
  os << "digraph mckay_" << c.r() << '_' << c.a() << " {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=circle];\n";
  for (long i = 0; i < c.r(); ++i)
    for (ArrowKind kind : {ArrowKind::x, ArrowKind::y, ArrowKind::z}) {
      Arrow w{kind, i};
      os << "  v" << arrow_tail(c, w) << " -> v" << arrow_head(c, w) << " [label=\""
         << kind_letter(kind) << i;
      if (with_divisors) os << ": " << arrow_divisor_label(d, w);
      os << "\"];\n";
    }
  os << "}\n";
  return os.str();
}

// ----- chamber / theta -----

bool operator==(const ThetaDoc& lhs, const ThetaDoc& rhs) {
  return lhs.r == rhs.r && lhs.a == rhs.a && lhs.phi == rhs.phi && rvec_eq(lhs.n, rhs.n) &&
         rvec_eq(lhs.theta, rhs.theta);
}

ThetaDoc make_theta_doc(const Context& c, const RVecX& n) {
  ThetaDoc d;
  d.r = c.r();
  d.a = c.a();
  d.phi = chamber_order(c);
  d.n = n;
  d.theta = chamber_theta(c, n);
  return d;
}

std::string print_theta_structured(const ThetaDoc& d) {
  std::ostringstream os;
  os << "danilov 1 theta\n";
  os << "group " << d.r << ' ' << d.a << '\n';
  os << "phi";
  put_longs(os, d.phi);
  os << "\nn";
  put_rats(os, d.n);
  os << "\ntheta";
  put_rats(os, d.theta);
  os << '\n';
  return os.str();
}

ThetaDoc parse_theta(const std::string& text) {
  Scanner sc(text);
  expect_header(sc, "theta");
  auto [r, a] = read_group(sc);
  ThetaDoc d;
  d.r = r;
  d.a = a;
  const Row& phi_row = sc.next("phi");
  if (phi_row.empty() || phi_row[0] != "phi") throw parse_error("expected phi");
  d.phi = read_longs(phi_row, 1, r, "phi");
  const Row& n_row = sc.next("n");
  if (n_row.empty() || n_row[0] != "n") throw parse_error("expected n");
  d.n = read_rats(n_row, 1, r, "n");
  const Row& t_row = sc.next("theta");
  if (t_row.empty() || t_row[0] != "theta") throw parse_error("expected theta");
  d.theta = read_rats(t_row, 1, r, "theta");
  sc.finish();
  return d;
}

std::string print_theta_text(const ThetaDoc& d) {
  std::ostringstream os;
  os << "chamber of " << group_name(d.r, d.a) << '\n';
  os << "phi:";
  put_longs(os, d.phi);
  os << '\n';
  os << "chain:";
  for (std::size_t j = 0; j < d.phi.size(); ++j)
    os << (j ? " < n" : " n") << d.phi[j];
  os << '\n';
  os << "n:";
  put_rats(os, d.n, true);
  os << '\n';
  os << "theta:";
  put_rats(os, d.theta, true);
  os << '\n';
  return os.str();
}

// ----- check report -----

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::stable: return "stable";
    case Verdict::strictly_semistable: return "strictly-semistable";
    case Verdict::unstable: return "unstable";
  }
  throw std::logic_error("bad verdict");
}

namespace {

Verdict parse_verdict(const std::string& s) {
  if (s == "stable") return Verdict::stable;
  if (s == "strictly-semistable") return Verdict::strictly_semistable;
  if (s == "unstable") return Verdict::unstable;
  throw parse_error("bad verdict: " + s);
}

}  // namespace

bool operator==(const VerdictLine& lhs, const VerdictLine& rhs) {
  return lhs.cone == rhs.cone && lhs.verdict == rhs.verdict && lhs.min_value == rhs.min_value &&
         lhs.witness == rhs.witness;
}

bool operator==(const CheckDoc& lhs, const CheckDoc& rhs) {
  return lhs.r == rhs.r && lhs.a == rhs.a && rvec_eq(lhs.theta, rhs.theta) &&
         lhs.verdicts == rhs.verdicts && lhs.pair_count == rhs.pair_count &&
         lhs.iso_pairs == rhs.iso_pairs && lhs.disconnected == rhs.disconnected &&
         lhs.bad_relations == rhs.bad_relations && lhs.pass == rhs.pass;
}

std::string print_check_structured(const CheckDoc& d) {
  std::ostringstream os;
  os << "danilov 1 check\n";
  os << "group " << d.r << ' ' << d.a << '\n';
  os << "theta";
  put_rats(os, d.theta);
  os << '\n';
  os << "cones " << d.verdicts.size() << '\n';
  for (const VerdictLine& v : d.verdicts) {
    os << "verdict " << v.cone << ' ' << verdict_name(v.verdict) << ' ' << format_rat(v.min_value)
       << '\n';
    if (!v.witness.empty()) {
      os << "witness " << v.cone;
      put_longs(os, v.witness);
      os << '\n';
    }
  }
  os << "pairs " << d.pair_count << ' ' << (d.iso_pairs.empty() ? "ok" : "fail") << '\n';
  for (const auto& p : d.iso_pairs) os << "isopair " << p[0] << ' ' << p[1] << '\n';
  os << "connected " << (d.disconnected.empty() ? "ok" : "fail") << '\n';
  for (long i : d.disconnected) os << "badcone " << i << '\n';
  os << "relations " << (d.bad_relations.empty() ? "ok" : "fail") << '\n';
  for (long i : d.bad_relations) os << "badrel " << i << '\n';
  os << "summary " << (d.pass ? "PASS" : "FAIL") << '\n';
  return os.str();
}

CheckDoc parse_check(const std::string& text) {
  Scanner sc(text);
  expect_header(sc, "check");
  auto [r, a] = read_group(sc);
  CheckDoc d;
  d.r = r;
  d.a = a;
  const Row& t_row = sc.next("theta");
  if (t_row.empty() || t_row[0] != "theta") throw parse_error("expected theta");
  d.theta = read_rats(t_row, 1, r, "theta");
  const long ncones = read_count(sc, "cones");
  for (long i = 0; i < ncones; ++i) {
    const Row& row = sc.next("verdict");
    if (row.size() != 4 || row[0] != "verdict") throw parse_error("bad verdict line");
    VerdictLine v;
    v.cone = to_long(row[1]);
    v.verdict = parse_verdict(row[2]);
    v.min_value = parse_rat(row[3]);
    const Row* w = sc.peek();
    if (w && !w->empty() && (*w)[0] == "witness") {
      const Row& wrow = sc.next("witness");
      if (wrow.size() < 3 || to_long(wrow[1]) != v.cone) throw parse_error("bad witness line");
      for (std::size_t k = 2; k < wrow.size(); ++k) v.witness.push_back(to_long(wrow[k]));
    }
    d.verdicts.push_back(std::move(v));
  }
  const Row& pairs_row = sc.next("pairs");
  if (pairs_row.size() != 3 || pairs_row[0] != "pairs") throw parse_error("expected pairs");
  d.pair_count = to_long(pairs_row[1]);
  while (sc.peek() && !sc.peek()->empty() && (*sc.peek())[0] == "isopair") {
    const Row& row = sc.next("isopair");
    if (row.size() != 3) throw parse_error("bad isopair line");
    d.iso_pairs.push_back({to_long(row[1]), to_long(row[2])});
  }
  const Row& conn_row = sc.next("connected");
  if (conn_row.size() != 2 || conn_row[0] != "connected") throw parse_error("expected connected");
  while (sc.peek() && !sc.peek()->empty() && (*sc.peek())[0] == "badcone")
    d.disconnected.push_back(to_long(sc.next("badcone")[1]));
  const Row& rel_row = sc.next("relations");
  if (rel_row.size() != 2 || rel_row[0] != "relations") throw parse_error("expected relations");
  while (sc.peek() && !sc.peek()->empty() && (*sc.peek())[0] == "badrel")
    d.bad_relations.push_back(to_long(sc.next("badrel")[1]));
  const Row& sum_row = sc.next("summary");
  if (sum_row.size() != 2 || sum_row[0] != "summary") throw parse_error("expected summary");
  if (sum_row[1] != "PASS" && sum_row[1] != "FAIL") throw parse_error("bad summary");
  d.pass = sum_row[1] == "PASS";
  sc.finish();
  return d;
}

std::string print_check_text(const CheckDoc& d, const Fan& f) {
  std::ostringstream os;
  os << "stability check of " << group_name(d.r, d.a) << '\n';
  os << "theta:";
  put_rats(os, d.theta, true);
  os << '\n';
  long stable_count = 0;
  for (const VerdictLine& v : d.verdicts) {
    const auto s = sorted_slots(f.cones[v.cone]);
    os << "cone " << v.cone << " <" << ray_label(s[0]) << ' ' << ray_label(s[1]) << ' '
       << ray_label(s[2]) << ">: " << verdict_name(v.verdict) << ", min "
       << format_rat(v.min_value, true);
    if (!v.witness.empty()) {
      os << ", witness {";
      for (std::size_t k = 0; k < v.witness.size(); ++k) os << (k ? " " : "") << v.witness[k];
      os << '}';
    }
    os << '\n';
    if (v.verdict == Verdict::stable) ++stable_count;
  }
  os << "nonisomorphic pairs: " << d.pair_count << ' ' << (d.iso_pairs.empty() ? "ok" : "FAILED")
     << '\n';
  for (const auto& p : d.iso_pairs)
    os << "isomorphic fixed points: cones " << p[0] << " and " << p[1] << '\n';
  os << "connectedness: " << (d.disconnected.empty() ? "ok" : "FAILED") << '\n';
  for (long i : d.disconnected) os << "disconnected cone: " << i << '\n';
  os << "relations: " << (d.bad_relations.empty() ? "ok" : "FAILED") << '\n';
  for (long i : d.bad_relations) os << "relations fail at cone: " << i << '\n';
  if (d.pass)
    os << "PASS (" << stable_count << " fixed points stable, " << d.pair_count
       << " pairs non-isomorphic)\n";
  else
    os << "FAIL (" << stable_count << " of " << d.verdicts.size() << " fixed points stable)\n";
  return os.str();
}

}  // namespace danilov
