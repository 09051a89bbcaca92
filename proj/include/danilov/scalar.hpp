#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>

// Exact scalar layer: GMP-backed integers/rationals as Eigen scalars.
// Everything downstream is exact; no floating point enters any verdict.

namespace danilov {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

template <typename Scalar> using Vec3 = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar> using Mat3 = Eigen::Matrix<Scalar, 3, 3>;
template <typename Scalar> using VecX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IVec3 = Vec3<Int>;
using IMat3 = Mat3<Int>;
using RVec3 = Vec3<Rat>;
using RMat3 = Mat3<Rat>;
using RVecX = VecX<Rat>;

// Least non-negative representative of s mod t.  Requires t >= 1.
template <typename T>
T mod_floor(T s, T t) {
  if (t < 1) throw std::invalid_argument("mod_floor: modulus must be positive");
  T m = s % t;
  if (m < 0) m += t;
  return m;
}

// Multiplicative inverse of a mod r, in [1, r).  Requires gcd(a, r) = 1 and
// 0 < a < r (so r >= 2).
inline long inverse_mod(long a, long r) {
  if (r < 2 || a <= 0 || a >= r)
    throw std::invalid_argument("inverse_mod: need 0 < a < r with r >= 2");
  // extended Euclid on (a, r); old_s tracks the coefficient of a
  long old_r = a, cur_r = r;
  long old_s = 1, cur_s = 0;
  while (cur_r != 0) {
    long q = old_r / cur_r;
    long t = old_r - q * cur_r;
    old_r = cur_r;
    cur_r = t;
    t = old_s - q * cur_s;
    old_s = cur_s;
    cur_s = t;
  }
  if (old_r != 1) throw std::invalid_argument("inverse_mod: not invertible");
  return mod_floor(old_s, r);
}

// Raised when a computed object contradicts an identity that is supposed to
// hold unconditionally; indicates a bug, never bad user input.
struct consistency_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace danilov
