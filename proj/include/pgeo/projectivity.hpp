#ifndef PGEO_PROJECTIVITY_HPP
#define PGEO_PROJECTIVITY_HPP

#include <array>
#include <optional>
#include <vector>

#include "pgeo/plane.hpp"

namespace pgeo {

enum class CarrierKind { Range, Pencil };

/// A one-dimensional carrier: the range of points on a line, or the pencil of
/// lines through a point. Either way its elements are the canonical triples
/// orthogonal to the base triple, which is what makes every construction here
/// self-dual.
struct Carrier {
  CarrierKind kind;
  Vec3 base;

  friend bool operator==(const Carrier& a, const Carrier& b) {
    return a.kind == b.kind && exactly_equal(a.base, b.base);
  }
  friend bool operator!=(const Carrier& a, const Carrier& b) { return !(a == b); }
};

inline Carrier range_of(const HomLine& l) { return Carrier{CarrierKind::Range, l.v}; }
inline Carrier pencil_of(const HomPoint& v) { return Carrier{CarrierKind::Pencil, v.v}; }
inline Carrier dualize(const Carrier& c) {
  return Carrier{c.kind == CarrierKind::Range ? CarrierKind::Pencil : CarrierKind::Range, c.base};
}

inline bool on_carrier(const Carrier& c, const Vec3& elem) {
  return c.base.dot(elem).sign() == 0;
}

std::string to_string(const Carrier& c);

/// Elementary projective map. With a via element it is a projection
/// (range-to-range through a center, or pencil-to-pencil through an axis);
/// without one it is a section pairing a range with a pencil. In coordinates
/// every case is one or two cross products.
struct Perspectivity {
  Carrier src, dst;
  std::optional<Vec3> via;
};

Perspectivity persp_center(const HomLine& from, const HomLine& to, const HomPoint& center);
Perspectivity persp_axis(const HomPoint& from, const HomPoint& to, const HomLine& axis);
Perspectivity section(const Carrier& from, const Carrier& to);
Perspectivity inverse(const Perspectivity& p);
Vec3 apply(const Perspectivity& p, const Vec3& elem);

/// A finite chain of perspectivities with matching carriers.
class Projectivity {
 public:
  explicit Projectivity(std::vector<Perspectivity> chain);

  const Carrier& src() const { return chain_.front().src; }
  const Carrier& dst() const { return chain_.back().dst; }
  std::size_t length() const { return chain_.size(); }
  const std::vector<Perspectivity>& chain() const { return chain_; }

  /// Image of a carrier element; throws ElementNotOnCarrier.
  Vec3 apply_raw(const Vec3& elem) const;

  Projectivity inverse() const;
  Projectivity then(const Projectivity& next) const;

 private:
  std::vector<Perspectivity> chain_;
};

/// Typed application for chains between ranges / between pencils.
HomPoint apply(const Projectivity& p, const HomPoint& x);
HomLine apply(const Projectivity& p, const HomLine& x);

Projectivity dualize(const Projectivity& p);

/// Chain mapping three pairwise-apart source elements onto three pairwise-apart
/// destination elements, in order. Auxiliary elements come from the
/// deterministic spiral; `variant` skips that many valid auxiliary choices, so
/// different variants give independently built chains for the same data.
/// Chain length is at most 2 between distinct carriers of the same kind, at
/// most 3 otherwise. Throws DegenerateTriple.
Projectivity projectivity_from_triples(const Carrier& src, const std::array<Vec3, 3>& s,
                                       const Carrier& dst, const std::array<Vec3, 3>& d,
                                       unsigned variant = 0);

Projectivity projectivity_from_triples(const HomLine& src, const HomPoint& p, const HomPoint& q,
                                       const HomPoint& r, const HomLine& dst, const HomPoint& p2,
                                       const HomPoint& q2, const HomPoint& r2,
                                       unsigned variant = 0);

/// Homogeneous parameter frame on a carrier: every element is s*b0 + t*b1.
struct RangeParam {
  Carrier carrier;
  Vec3 b0, b1;
};

/// Frame from the two sweep-least elements of the carrier.
RangeParam default_param(const Carrier& c);

/// Exact homogeneous parameter (s : t) of a canonical carrier element.
std::pair<Rat, Rat> param_of(const RangeParam& p, const Vec3& elem);

/// Canonical element at parameter (s : t).
Vec3 elem_at(const RangeParam& p, const Rat& s, const Rat& t);

/// Exact 2x2 matrix acting on source parameters as the chain acts on elements;
/// determined up to a rational scale.
Mat2 matrix_oracle(const Projectivity& p, const RangeParam& src_param,
                   const RangeParam& dst_param);

/// Primitive integer representative with positive first nonzero entry.
Mat2 mat2_canonical(const Mat2& m);
bool is_scalar_matrix(const Mat2& m);

struct FixedElements {
  enum class Kind { Identity, NoRealFixed, IrrationalPair, One, Two } kind;
  std::vector<Vec3> elems;
};

/// Fixed elements of a self-map of a carrier, through the exact eigenproblem of
/// the oracle matrix. Distinguishes the identity, no real fixed elements
/// (negative discriminant), a real-but-irrational pair, and one or two rational
/// fixed elements.
FixedElements fixed_elements(const Projectivity& p);

/// True when the square of the chain acts as the identity (oracle matrix
/// squares to a scalar).
bool is_involution(const Projectivity& p);

/// Whether the self-explanatory decidable surrogate for "nonperspective" holds:
/// the common element of two distinct same-kind carriers moves.
bool nonperspective(const Projectivity& p);

/// Axis of homology of a nonperspective chain between distinct ranges: the join
/// of the image and preimage of the common point. Throws
/// PerspectivityHasNoAxis when the common point is fixed.
HomLine axis_of_homology(const Projectivity& p);

/// The point (A B^pi) . (B A^pi); lies on the axis of homology.
HomPoint cross_axis_point(const Projectivity& p, const HomPoint& a, const HomPoint& b);

/// Projective collineation of the whole plane as a primitive integer matrix
/// pair (point action and line action).
struct Collineation {
  Mat3 point_map;
  Mat3 line_map;
};

/// Exact collineation taking one four-point frame to another (no three points
/// of either quadruple collinear). Throws DegenerateQuad.
Collineation collineation_from_quads(const std::array<HomPoint, 4>& src,
                                     const std::array<HomPoint, 4>& dst);

HomPoint apply(const Collineation& t, const HomPoint& p);
HomLine apply(const Collineation& t, const HomLine& l);

}  // namespace pgeo

#endif
