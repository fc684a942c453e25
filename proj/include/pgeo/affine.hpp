#ifndef PGEO_AFFINE_HPP
#define PGEO_AFFINE_HPP

#include <string>
#include <vector>

#include "pgeo/rat.hpp"

namespace pgeo {

/// Prime field of order P with everything decidable.
template <int P>
struct Fp {
  static_assert(P >= 2);
  int v = 0;

  Fp() = default;
  Fp(long long x) : v(static_cast<int>(((x % P) + P) % P)) {}

  friend Fp operator+(Fp a, Fp b) { return Fp(a.v + b.v); }
  friend Fp operator-(Fp a, Fp b) { return Fp(a.v - b.v); }
  friend Fp operator*(Fp a, Fp b) { return Fp(static_cast<long long>(a.v) * b.v); }
  Fp operator-() const { return Fp(-v); }
  Fp inverse() const {
    if (v == 0) throw Error("DivisionByZero", "no inverse of zero");
    // Fermat: v^(P-2) mod P
    long long base = v, acc = 1;
    int e = P - 2;
    while (e > 0) {
      if (e & 1) acc = acc * base % P;
      base = base * base % P;
      e >>= 1;
    }
    return Fp(acc);
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
  friend bool operator!=(Fp a, Fp b) { return a.v != b.v; }
  friend bool operator<(Fp a, Fp b) { return a.v < b.v; }
};

template <int P>
std::string to_string(const Fp<P>& x) {
  return std::to_string(x.v);
}

template <class F>
struct FieldTraits {
  static constexpr bool finite = false;
};

template <int P>
struct FieldTraits<Fp<P>> {
  static constexpr bool finite = true;
  static constexpr int order = P;
  static std::vector<Fp<P>> all() {
    std::vector<Fp<P>> out;
    for (int i = 0; i < P; ++i) out.push_back(Fp<P>(i));
    return out;
  }
};

template <class F>
struct AffPoint {
  F x{}, y{};

  friend bool operator==(const AffPoint& a, const AffPoint& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const AffPoint& a, const AffPoint& b) { return !(a == b); }
  friend bool operator<(const AffPoint& a, const AffPoint& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

/// Parallel class, i.e. the coefficient pair (a, b) of a line up to scale,
/// normalized so the first nonzero entry is 1.
template <class F>
struct Direction {
  F a{}, b{};

  static Direction of(F a, F b) {
    if (a != F(0)) {
      F inv = F(1) / a;
      return Direction{F(1), b * inv};
    }
    if (b == F(0)) throw Error("ZeroVector", "direction needs a nonzero coefficient pair");
    return Direction{F(0), F(1)};
  }

  friend bool operator==(const Direction& d, const Direction& e) { return d.a == e.a && d.b == e.b; }
  friend bool operator!=(const Direction& d, const Direction& e) { return !(d == e); }
  friend bool operator<(const Direction& d, const Direction& e) {
    if (d.a != e.a) return d.a < e.a;
    return d.b < e.b;
  }
};

/// Affine line a x + b y + c = 0 with (a, b) nonzero, normalized like Direction.
template <class F>
struct AffLine {
  F a{}, b{F(1)}, c{};

  static AffLine of(F a, F b, F c) {
    if (a != F(0)) {
      F inv = F(1) / a;
      return AffLine{F(1), b * inv, c * inv};
    }
    if (b == F(0)) throw Error("ZeroVector", "a line needs a nonzero coefficient pair");
    F inv = F(1) / b;
    return AffLine{F(0), F(1), c * inv};
  }

  Direction<F> direction() const { return Direction<F>{a, b}; }

  friend bool operator==(const AffLine& l, const AffLine& m) {
    return l.a == m.a && l.b == m.b && l.c == m.c;
  }
  friend bool operator!=(const AffLine& l, const AffLine& m) { return !(l == m); }
  friend bool operator<(const AffLine& l, const AffLine& m) {
    if (l.a != m.a) return l.a < m.a;
    if (l.b != m.b) return l.b < m.b;
    return l.c < m.c;
  }
};

template <class F>
bool incident(const AffPoint<F>& p, const AffLine<F>& l) {
  return l.a * p.x + l.b * p.y + l.c == F(0);
}

template <class F>
bool parallel(const AffLine<F>& l, const AffLine<F>& m) {
  return l.direction() == m.direction();
}

/// Line through two distinct points; throws CoincidentPoints.
template <class F>
AffLine<F> join_points(const AffPoint<F>& p, const AffPoint<F>& q) {
  if (p == q) throw Error("CoincidentPoints", "join of equal affine points");
  F dx = q.x - p.x;
  F dy = q.y - p.y;
  F a = dy;
  F b = -dx;
  return AffLine<F>::of(a, b, -(a * p.x + b * p.y));
}

/// The one line of the parallel class through a point.
template <class F>
AffLine<F> line_through(const AffPoint<F>& p, const Direction<F>& d) {
  return AffLine<F>::of(d.a, d.b, -(d.a * p.x + d.b * p.y));
}

/// Common point of two nonparallel lines.
template <class F>
AffPoint<F> intersect(const AffLine<F>& l, const AffLine<F>& m) {
  F det = l.a * m.b - m.a * l.b;
  if (det == F(0)) throw Error("CoincidentLines", "lines are parallel or equal");
  F x = (m.c * l.b - l.c * m.b) / det;
  F y = (l.c * m.a - m.c * l.a) / det;
  return AffPoint<F>{x, y};
}

template <int P>
std::vector<AffPoint<Fp<P>>> all_points() {
  std::vector<AffPoint<Fp<P>>> out;
  for (const auto& x : FieldTraits<Fp<P>>::all())
    for (const auto& y : FieldTraits<Fp<P>>::all()) out.push_back(AffPoint<Fp<P>>{x, y});
  return out;
}

template <int P>
std::vector<AffLine<Fp<P>>> all_lines() {
  std::vector<AffLine<Fp<P>>> out;
  for (const auto& b : FieldTraits<Fp<P>>::all())
    for (const auto& c : FieldTraits<Fp<P>>::all())
      out.push_back(AffLine<Fp<P>>{Fp<P>(1), b, c});
  for (const auto& c : FieldTraits<Fp<P>>::all())
    out.push_back(AffLine<Fp<P>>{Fp<P>(0), Fp<P>(1), c});
  return out;
}

template <class F>
std::string to_string(const AffPoint<F>& p) {
  return "(" + to_string(p.x) + "," + to_string(p.y) + ")";
}

template <class F>
std::string to_string(const AffLine<F>& l) {
  return "[" + to_string(l.a) + "," + to_string(l.b) + "," + to_string(l.c) + "]";
}

template <class F>
std::string to_string(const Direction<F>& d) {
  return "dir[" + to_string(d.a) + "," + to_string(d.b) + "]";
}

}  // namespace pgeo

#endif
