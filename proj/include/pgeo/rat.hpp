#ifndef PGEO_RAT_HPP
#define PGEO_RAT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>

#include "pgeo/error.hpp"

namespace pgeo {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Exact rational scalar. Thin value wrapper around cpp_rational: always fully
/// reduced with positive denominator, equality and ordering are exact and total.
/// The wrapper exists so the type plugs into Eigen as a scalar (the raw
/// multiprecision types have constructors too greedy for Eigen's overload sets).
class Rat {
 public:
  Rat() = default;
  template <typename T, typename = std::enable_if_t<std::is_integral_v<T>>>
  Rat(T v) : v_(static_cast<long long>(v)) {}
  Rat(BigInt v) : v_(std::move(v)) {}
  explicit Rat(BigRat v) : v_(std::move(v)) {}

  /// Reduced representative of n/d. Throws DivisionByZero when d = 0.
  static Rat normalized(const BigInt& n, const BigInt& d) {
    if (d == 0) throw Error("DivisionByZero", "denominator is zero");
    if (d < 0) return Rat(BigRat(-n, -d));
    return Rat(BigRat(n, d));
  }

  const BigRat& raw() const { return v_; }
  BigInt num() const { return numerator(v_); }
  BigInt den() const { return denominator(v_); }
  bool is_integer() const { return denominator(v_) == 1; }
  int sign() const { return v_.sign(); }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(BigRat(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(BigRat(a.v_ - b.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(BigRat(a.v_ * b.v_)); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.v_.is_zero()) throw Error("DivisionByZero", "division by zero");
    return Rat(BigRat(a.v_ / b.v_));
  }
  Rat operator-() const { return Rat(BigRat(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

 private:
  BigRat v_;
};

/// -1, 0, +1 according to the exact order against zero.
inline int sign(const Rat& x) { return x.sign(); }

inline Rat abs(const Rat& x) { return x.sign() < 0 ? -x : x; }

/// max(x, 0); the positive part of the decomposition x = pos_part - neg_part.
inline Rat pos_part(const Rat& x) { return x.sign() > 0 ? x : Rat(0); }

/// max(-x, 0).
inline Rat neg_part(const Rat& x) { return x.sign() < 0 ? -x : Rat(0); }

/// Text form "n/d", with "/d" omitted for integers.
std::string to_string(const Rat& x);

/// Parses "n", "n/d", optional leading sign, no interior whitespace.
/// Throws Error("BadScalar") on malformed input, DivisionByZero on "n/0".
Rat parse_rat(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Rat& x);

}  // namespace pgeo

namespace Eigen {

template <>
struct NumTraits<pgeo::Rat> : GenericNumTraits<pgeo::Rat> {
  typedef pgeo::Rat Real;
  typedef pgeo::Rat NonInteger;
  typedef pgeo::Rat Nested;
  static inline Real epsilon() { return pgeo::Rat(0); }
  static inline Real dummy_precision() { return pgeo::Rat(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 40
  };
};

}  // namespace Eigen

#endif
