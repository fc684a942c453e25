#ifndef PGEO_HARMONIC_HPP
#define PGEO_HARMONIC_HPP

#include <optional>

#include "pgeo/plane.hpp"

namespace pgeo {

/// Auxiliary elements for the harmonic construction: a line through C apart
/// from the base line, and a point outside both.
struct AuxSelection {
  HomLine l;
  HomPoint r;
};

/// k-th valid auxiliary selection (spiral order) for h(a, b; c).
AuxSelection find_aux(const HomPoint& a, const HomPoint& b, const HomPoint& c, std::size_t k = 0);

/// Harmonic conjugate of c with respect to a, b through an explicit auxiliary
/// selection: P = BR.l, Q = AR.l, S = AP.BQ, D = AB.RS.
/// Throws CNotOnBaseLine / InvalidAuxiliary.
HomPoint harmonic_with_aux(const HomPoint& a, const HomPoint& b, const HomPoint& c,
                           const AuxSelection& aux);

/// Harmonic conjugate under the deterministic auxiliary search; the result is
/// independent of the selection.
HomPoint harmonic(const HomPoint& a, const HomPoint& b, const HomPoint& c);

/// Cross ratio value: a rational or the point at infinity of the parameter line.
struct CrossRatio {
  bool infinite = false;
  Rat value;

  static CrossRatio inf() { return CrossRatio{true, Rat(0)}; }
  static CrossRatio of(Rat v) { return CrossRatio{false, std::move(v)}; }

  friend bool operator==(const CrossRatio& a, const CrossRatio& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
  friend bool operator!=(const CrossRatio& a, const CrossRatio& b) { return !(a == b); }
};

std::string to_string(const CrossRatio& r);

/// Classical cross ratio (a,b; c,d) through the projective parameter on the
/// carrier line with basis (a, b). Requires a, b, c pairwise apart and all four
/// collinear. Throws NotCollinear / DegenerateBasis.
CrossRatio cross_ratio(const HomPoint& a, const HomPoint& b, const HomPoint& c, const HomPoint& d);

/// Quadrangle with vertices outside the base line realizing d = h(a, b; c):
/// sides ps, qr meet at a; pr, qs meet at b; pq passes through c; rs through d.
struct Quadrangle {
  HomPoint p, q, r, s;
};

/// Throws HarmonicMismatch when d is not the harmonic conjugate or c is not
/// apart from both base points.
Quadrangle quadrangle_witness(const HomPoint& a, const HomPoint& b, const HomPoint& c,
                              const HomPoint& d);

}  // namespace pgeo

#endif
