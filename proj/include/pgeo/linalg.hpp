#ifndef PGEO_LINALG_HPP
#define PGEO_LINALG_HPP

#include <Eigen/Dense>

#include <vector>

#include "pgeo/rat.hpp"

namespace pgeo {

using Vec3 = Eigen::Matrix<Rat, 3, 1>;
using Vec2 = Eigen::Matrix<Rat, 2, 1>;
using Mat2 = Eigen::Matrix<Rat, 2, 2>;
using Mat3 = Eigen::Matrix<Rat, 3, 3>;
using MatX = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;

inline Vec3 vec3(Rat x, Rat y, Rat z) {
  Vec3 v;
  v << std::move(x), std::move(y), std::move(z);
  return v;
}

template <typename Derived>
bool exactly_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (m(r, c).sign() != 0) return false;
  return true;
}

template <typename A, typename B>
bool exactly_equal(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return exactly_zero((a - b).eval());
}

/// Scales a nonzero rational vector/matrix to the unique primitive integer
/// representative with positive first nonzero entry (scanning in storage order
/// of the passed coefficients, row-major for matrices). Throws ZeroVector on 0.
template <typename Derived>
typename Derived::PlainObject primitive_canonical(const Eigen::MatrixBase<Derived>& m) {
  BigInt num_gcd = 0;
  BigInt den_lcm = 1;
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const Rat& x = m(r, c);
      if (x.sign() == 0) continue;
      num_gcd = gcd(num_gcd, x.num());
      den_lcm = lcm(den_lcm, x.den());
    }
  if (num_gcd == 0) throw Error("ZeroVector", "cannot canonicalize the zero vector");
  Rat scale = Rat::normalized(den_lcm, num_gcd);
  typename Derived::PlainObject out = m * scale;
  for (Eigen::Index r = 0; r < out.rows(); ++r)
    for (Eigen::Index c = 0; c < out.cols(); ++c) {
      int s = out(r, c).sign();
      if (s == 0) continue;
      if (s < 0) out = -out;
      return out;
    }
  return out;  // unreachable
}

template <typename Derived>
bool is_primitive_canonical(const Eigen::MatrixBase<Derived>& m) {
  if (exactly_zero(m)) return false;
  return exactly_equal(m, primitive_canonical(m));
}

inline Rat det2(const Rat& a, const Rat& b, const Rat& c, const Rat& d) { return a * d - b * c; }

inline Mat3 adjugate(const Mat3& m) {
  Mat3 a;
  a(0, 0) = det2(m(1, 1), m(1, 2), m(2, 1), m(2, 2));
  a(0, 1) = -det2(m(0, 1), m(0, 2), m(2, 1), m(2, 2));
  a(0, 2) = det2(m(0, 1), m(0, 2), m(1, 1), m(1, 2));
  a(1, 0) = -det2(m(1, 0), m(1, 2), m(2, 0), m(2, 2));
  a(1, 1) = det2(m(0, 0), m(0, 2), m(2, 0), m(2, 2));
  a(1, 2) = -det2(m(0, 0), m(0, 2), m(1, 0), m(1, 2));
  a(2, 0) = det2(m(1, 0), m(1, 1), m(2, 0), m(2, 1));
  a(2, 1) = -det2(m(0, 0), m(0, 1), m(2, 0), m(2, 1));
  a(2, 2) = det2(m(0, 0), m(0, 1), m(1, 0), m(1, 1));
  return a;
}

/// Exact kernel basis of a (possibly rank-deficient) rational matrix.
std::vector<Eigen::Matrix<Rat, Eigen::Dynamic, 1>> exact_kernel(MatX a);

/// Coefficients (s, t) with e = s*b0 + t*b1, for e in the span of the
/// independent triples b0, b1. Throws DegenerateBasis when b0, b1 are
/// proportional; internal error when e is outside the span.
std::pair<Rat, Rat> span_coefficients(const Vec3& b0, const Vec3& b1, const Vec3& e);

/// Exact integer square root test; returns true and sets root when n is a
/// perfect square (n >= 0).
bool perfect_square(const BigInt& n, BigInt& root);

/// Rational square root: true when x is the square of a rational, which is then
/// written to root (non-negative).
bool rational_square_root(const Rat& x, Rat& root);

}  // namespace pgeo

#endif
