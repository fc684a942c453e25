#ifndef PGEO_PLANE_HPP
#define PGEO_PLANE_HPP

#include <array>
#include <string>

#include "pgeo/linalg.hpp"
#include "pgeo/spiral.hpp"

namespace pgeo {

/// Point of the rational projective plane, stored as the unique primitive
/// integer triple with positive leading entry. Equality of canonical triples is
/// point equality, and apartness is its exact complement.
struct HomPoint {
  Vec3 v;

  HomPoint() : v(vec3(0, 0, 1)) {}
  explicit HomPoint(const Vec3& raw) : v(primitive_canonical(raw)) {}
  HomPoint(Rat x, Rat y, Rat z) : HomPoint(vec3(std::move(x), std::move(y), std::move(z))) {}

  const Rat& x() const { return v(0); }
  const Rat& y() const { return v(1); }
  const Rat& z() const { return v(2); }

  bool at_infinity() const { return v(2).sign() == 0; }

  friend bool operator==(const HomPoint& a, const HomPoint& b) { return exactly_equal(a.v, b.v); }
  friend bool operator!=(const HomPoint& a, const HomPoint& b) { return !(a == b); }
};

/// Line ax + by + cz = 0, same canonical form as HomPoint (the two types are
/// coordinate-duals of each other).
struct HomLine {
  Vec3 v;

  HomLine() : v(vec3(0, 0, 1)) {}
  explicit HomLine(const Vec3& raw) : v(primitive_canonical(raw)) {}
  HomLine(Rat a, Rat b, Rat c) : HomLine(vec3(std::move(a), std::move(b), std::move(c))) {}

  const Rat& a() const { return v(0); }
  const Rat& b() const { return v(1); }
  const Rat& c() const { return v(2); }

  friend bool operator==(const HomLine& a, const HomLine& b) { return exactly_equal(a.v, b.v); }
  friend bool operator!=(const HomLine& a, const HomLine& b) { return !(a == b); }
};

inline HomPoint affine_point(Rat x, Rat y) { return HomPoint(std::move(x), std::move(y), 1); }

std::string to_string(const HomPoint& p);
std::string to_string(const HomLine& l);

inline Vec3 cross(const Vec3& a, const Vec3& b) { return a.cross(b); }

inline bool apart(const HomPoint& p, const HomPoint& q) { return p != q; }
inline bool apart(const HomLine& l, const HomLine& m) { return l != m; }

/// Incidence is the vanishing of the inner product of representatives.
inline bool incident(const HomPoint& p, const HomLine& l) { return p.v.dot(l.v).sign() == 0; }

/// The outside relation; in this decidable model it coincides with the negation
/// of incidence.
inline bool outside(const HomPoint& p, const HomLine& l) { return !incident(p, l); }
inline bool avoids(const HomLine& l, const HomPoint& p) { return outside(p, l); }

/// Line through two points apart from each other; throws CoincidentPoints.
HomLine join(const HomPoint& p, const HomPoint& q);

/// Common point of two lines apart from each other; throws CoincidentLines.
HomPoint meet(const HomLine& l, const HomLine& m);

inline HomLine dualize(const HomPoint& p) { HomLine l; l.v = p.v; return l; }
inline HomPoint dualize(const HomLine& l) { HomPoint p; p.v = l.v; return p; }

enum class CotransSide { Left, Right };

/// Witness for cotransitivity: given p apart from q, decides r apart from p
/// (Left) or r apart from q (Right); Left when both hold.
CotransSide cotransitive_witness(const HomPoint& p, const HomPoint& q, const HomPoint& r);
CotransSide cotransitive_witness(const HomLine& l, const HomLine& m, const HomLine& n);

enum class C7Side { OutsideL, OutsideM };

/// Witness for the two-line outside alternative: given l apart from m and p
/// apart from their common point, decides p outside l (OutsideL) or p outside m
/// (OutsideM); OutsideL when both hold. Throws CoincidentLines /
/// PointOnBothLines on precondition failure.
C7Side c7_witness(const HomLine& l, const HomLine& m, const HomPoint& p);
C7Side c7_witness(const HomPoint& a, const HomPoint& b, const HomLine& l);  // dual form

inline bool collinear(const HomPoint& a, const HomPoint& b, const HomPoint& c) {
  Mat3 m;
  m.col(0) = a.v;
  m.col(1) = b.v;
  m.col(2) = c.v;
  return m.determinant().sign() == 0;
}

inline bool concurrent(const HomLine& a, const HomLine& b, const HomLine& c) {
  Mat3 m;
  m.col(0) = a.v;
  m.col(1) = b.v;
  m.col(2) = c.v;
  return m.determinant().sign() == 0;
}

/// Nondegenerate triangle: pairwise-apart vertices, each vertex outside the
/// opposite side. side[i] joins the two vertices other than vertex[i].
struct Triangle {
  std::array<HomPoint, 3> vertex;
  std::array<HomLine, 3> side;
};

/// Throws DegenerateTriangle when the three points are collinear.
Triangle make_triangle(const HomPoint& p, const HomPoint& q, const HomPoint& r);

/// Axis from center perspectivity (the Desargues configuration): validates that
/// the triangles are distinct, the joins of corresponding vertices concur at
/// center with center outside all six sides, then returns the line carrying the
/// meets of corresponding sides. Throws NotPerspectiveFromCenter.
HomLine desargues_axis(const Triangle& t1, const Triangle& t2, const HomPoint& center);

/// Center from axis perspectivity, computed through the converse proof: the
/// auxiliary triangles (A,Q,Q') and (B,P,P') are perspective from C, and the
/// axis produced for them is the join RR' carrying the center.
/// Throws NotPerspectiveFromAxis.
HomPoint desargues_center(const Triangle& t1, const Triangle& t2, const HomLine& axis);

/// Diagonal points (AB.CD, AC.BD, AD.BC) of a quadrangle; verifies they are
/// pairwise apart and noncollinear. Throws DegenerateQuadrangle.
std::array<HomPoint, 3> fano_diagonals(const HomPoint& a, const HomPoint& b, const HomPoint& c,
                                       const HomPoint& d);

/// Enumerates the canonical triples orthogonal to a fixed base triple, in the
/// deterministic pair-spiral order of coordinates over two generators. For a
/// line's triple this walks the points of its range; for a point's triple, the
/// lines of its pencil.
class SubspaceSweep {
 public:
  explicit SubspaceSweep(const Vec3& base);
  Vec3 next();

 private:
  Vec3 g0_, g1_;
  PairSpiral pairs_;
};

/// k-th point on l in sweep order (k = 0, 1, ...).
HomPoint point_on_line(const HomLine& l, std::size_t k);
/// k-th line through p in sweep order.
HomLine line_through_point(const HomPoint& p, std::size_t k);

}  // namespace pgeo

#endif
