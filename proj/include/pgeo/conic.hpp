#ifndef PGEO_CONIC_HPP
#define PGEO_CONIC_HPP

#include <array>
#include <utility>
#include <vector>

#include "pgeo/harmonic.hpp"
#include "pgeo/projectivity.hpp"

namespace pgeo {

/// Nondegenerate conic in its two cross-validating representations: the
/// generating pencil-to-pencil chain with its base points, and the symmetric
/// matrix of the quadratic form (primitive integer entries, positive first
/// nonzero entry). The two must agree everywhere; any discrepancy is an
/// internal error, never a recoverable condition.
class Conic {
 public:
  /// Conic generated by a nonperspective chain between two pencils.
  /// Throws PerspectiveProjectivity / DegenerateConic.
  static Conic steiner(const Projectivity& pi, const HomPoint& u, const HomPoint& v);

  /// Unique conic through five points, no three collinear; the generating chain
  /// is based at the first two points. Throws DuplicatePoints / ThreeCollinear.
  static Conic through5(const HomPoint& a, const HomPoint& b, const HomPoint& c,
                        const HomPoint& d, const HomPoint& e);

  const Projectivity& steiner_map() const { return pi_; }
  const HomPoint& base_u() const { return u_; }
  const HomPoint& base_v() const { return v_; }
  const Mat3& matrix() const { return m_; }

  friend bool operator==(const Conic& a, const Conic& b) { return exactly_equal(a.m_, b.m_); }
  friend bool operator!=(const Conic& a, const Conic& b) { return !(a == b); }

 private:
  Conic(Projectivity pi, HomPoint u, HomPoint v, Mat3 m);

  Projectivity pi_;
  HomPoint u_, v_;
  Mat3 m_;
};

std::string to_string(const Conic& k);

/// Membership, evaluated through both representations and cross-checked.
bool on_conic(const Conic& k, const HomPoint& x);
inline bool outside_conic(const Conic& k, const HomPoint& x) { return !on_conic(k, x); }

/// n pairwise-apart points of the locus, swept deterministically.
std::vector<HomPoint> conic_points(const Conic& k, std::size_t n);

/// Pascal line of an inscribed hexagon: carries AB.DE, BC.EF, CD.FA.
/// Throws NotOnConic / DegenerateHexagon.
HomLine pascal_line(const Conic& k, const std::array<HomPoint, 6>& hex);

/// Sixth conic point on a secant l through e, by the Pascal-line formula
/// l . A(CD.(AB.DE)(BC.l)). Throws LineAvoidanceViolated / TangentLine.
HomPoint pascal_sixth_point(const Conic& k, const HomPoint& a, const HomPoint& b,
                            const HomPoint& c, const HomPoint& d, const HomPoint& e,
                            const HomLine& l);

/// Tangent at a point of the conic; the matrix route M.p, verified against the
/// image of a secant under the chain rebased at that point. Throws NotOnConic.
HomLine tangent_at(const Conic& k, const HomPoint& p);

/// The second point of the conic on a non-tangent line through a point of the
/// conic; exact quadratic factoring against the known root. Throws TangentLine.
HomPoint second_intersection(const Conic& k, const HomPoint& p, const HomLine& l);

/// Two distinct secants through an arbitrary point, by the tangent-triple
/// algorithm (tangents at three conic points, apartness witnesses to select a
/// contact point the given point avoids, repeat avoiding the used points).
std::pair<HomLine, HomLine> secants_through(const Conic& k, const HomPoint& p);

/// All rational points of the conic on a line: zero, one (tangent) or two.
/// Throws OutOfRationalScope when the intersections exist only over a
/// quadratic extension.
std::vector<HomPoint> line_conic_intersection(const Conic& k, const HomLine& l);

/// Polar of an arbitrary point: tangents at the two intersections of a secant
/// through it, their meet joined with the harmonic conjugate. Built for three
/// secant choices, all verified equal to each other and to M.p.
HomLine polar(const Conic& k, const HomPoint& p);

/// Polar from one explicit secant with a known conic point on it.
HomLine polar_via_secant(const Conic& k, const HomPoint& p, const HomLine& secant,
                         const HomPoint& secant_point);

/// Pole of a line: meet of the polars of two of its points, verified against
/// adj(M).l.
HomPoint pole(const Conic& k, const HomLine& l);

/// For an inscribed quadrangle and one of its diagonal points, the join of the
/// other two diagonal points; equals the polar of the given one.
/// Throws DegenerateQuadrangle / NotADiagonalPoint / NotOnConic.
HomLine quadrangle_polar_check(const Conic& k, const std::array<HomPoint, 4>& quad,
                               const HomPoint& diagonal);

/// Tangents at three distinct conic points are nonconcurrent; returns the
/// verdict for one triple. Throws NotOnConic.
bool axiom_p_check(const Conic& k, const HomPoint& a, const HomPoint& b, const HomPoint& c);

}  // namespace pgeo

#endif
