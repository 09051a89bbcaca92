#pragma once

#include <numeric>
#include <stdexcept>

#include "danilov/scalar.hpp"

namespace danilov {

// Parameters of the quotient singularity 1/r(1, a, r-a), with b = a^{-1} mod r
// cached.  The resolution recursion descends through left() and right(); its
// base is the trivial context r = 1 (a = b = 0), which public validation
// rejects but trivial() constructs.
class Context {
 public:
  Context(long r, long a) : r_(r), a_(a) {
    if (r < 2) throw std::invalid_argument("context: r must be >= 2");
    if (a <= 0 || a >= r) throw std::invalid_argument("context: need 0 < a < r");
    if (std::gcd(a, r) != 1) throw std::invalid_argument("context: a, r must be coprime");
    b_ = inverse_mod(a, r);
  }

  static Context trivial() { return Context(); }

  long r() const { return r_; }
  long a() const { return a_; }
  long b() const { return b_; }
  bool is_trivial() const { return r_ == 1; }

  // Sub-context resolving the cone <e1, e2, p_{r-a}>: (r-a, <r>_{r-a}).
  Context left() const {
    if (is_trivial()) throw std::logic_error("context: trivial has no left");
    return sub(r_ - a_, mod_floor(r_, r_ - a_));
  }

  // Sub-context resolving the cone <e1, e3, p_{r-a}>: (a, <-r>_a).
  Context right() const {
    if (is_trivial()) throw std::logic_error("context: trivial has no right");
    return sub(a_, mod_floor(-r_, a_));
  }

  // Least non-negative residue mod r.
  long mod(long s) const { return mod_floor(s, r_); }

  friend bool operator==(const Context& lhs, const Context& rhs) {
    return lhs.r_ == rhs.r_ && lhs.a_ == rhs.a_;
  }

 private:
  Context() : r_(1), a_(0), b_(0) {}

  static Context sub(long r, long a) {
    if (r == 1) return trivial();
    return Context(r, a);
  }

  long r_, a_, b_;
};

}  // namespace danilov
