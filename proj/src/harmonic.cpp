#include "pgeo/harmonic.hpp"

namespace pgeo {

AuxSelection find_aux(const HomPoint& a, const HomPoint& b, const HomPoint& c, std::size_t k) {
  HomLine base = join(a, b);
  if (!incident(c, base)) throw Error("CNotOnBaseLine", "c must lie on the base line");

  std::size_t remaining = k;
  SubspaceSweep lines(c.v);  // lines through c
  for (int guard = 0; guard < 4096; ++guard) {
    HomLine l;
    l.v = lines.next();
    if (l == base) continue;
    TripleSpiral pts;
    for (int pguard = 0; pguard < 4096; ++pguard) {
      HomPoint r;
      r.v = pts.next();
      if (!outside(r, base) || !outside(r, l)) continue;
      if (remaining == 0) return AuxSelection{l, r};
      --remaining;
      break;  // one point per line keeps the selections spread out
    }
  }
  throw InternalError("auxiliary search exhausted");
}

HomPoint harmonic_with_aux(const HomPoint& a, const HomPoint& b, const HomPoint& c,
                           const AuxSelection& aux) {
  HomLine base = join(a, b);
  if (!incident(c, base)) throw Error("CNotOnBaseLine", "c must lie on the base line");
  if (!incident(c, aux.l) || aux.l == base)
    throw Error("InvalidAuxiliary", "auxiliary line must pass through c and differ from the base");
  if (!outside(aux.r, base) || !outside(aux.r, aux.l))
    throw Error("InvalidAuxiliary", "auxiliary point must lie outside the base line and l");

  HomPoint p = meet(join(b, aux.r), aux.l);
  HomPoint q = meet(join(a, aux.r), aux.l);
  HomPoint s = meet(join(a, p), join(b, q));
  HomPoint d = meet(base, join(aux.r, s));

  if (c == a) check_internal(d == a, "harmonic conjugate of a base point moved");
  if (c == b) check_internal(d == b, "harmonic conjugate of a base point moved");
  return d;
}

HomPoint harmonic(const HomPoint& a, const HomPoint& b, const HomPoint& c) {
  return harmonic_with_aux(a, b, c, find_aux(a, b, c));
}

std::string to_string(const CrossRatio& r) { return r.infinite ? "inf" : to_string(r.value); }

CrossRatio cross_ratio(const HomPoint& a, const HomPoint& b, const HomPoint& c,
                       const HomPoint& d) {
  if (a == b) throw Error("DegenerateBasis", "base points coincide");
  HomLine l = join(a, b);
  if (!incident(c, l) || !incident(d, l))
    throw Error("NotCollinear", "cross ratio needs four collinear points");
  if (c == d) return CrossRatio::of(1);

  auto [sc, tc] = span_coefficients(a.v, b.v, c.v);
  auto [sd, td] = span_coefficients(a.v, b.v, d.v);
  // (a,b; c,d) = (tc/sc) / (td/sd).
  Rat numer = tc * sd;
  Rat denom = sc * td;
  if (denom.sign() == 0) return CrossRatio::inf();
  return CrossRatio::of(numer / denom);
}

Quadrangle quadrangle_witness(const HomPoint& a, const HomPoint& b, const HomPoint& c,
                              const HomPoint& d) {
  if (c == a || c == b)
    throw Error("HarmonicMismatch", "c must be apart from both base points");
  if (d != harmonic(a, b, c))
    throw Error("HarmonicMismatch", "d is not the harmonic conjugate of c");

  AuxSelection aux = find_aux(a, b, c);
  HomLine base = join(a, b);
  HomPoint p = meet(join(b, aux.r), aux.l);
  HomPoint q = meet(join(a, aux.r), aux.l);
  HomPoint r = aux.r;
  HomPoint s = meet(join(a, p), join(b, q));

  Quadrangle quad{p, q, r, s};
  check_internal(outside(p, base) && outside(q, base) && outside(r, base) && outside(s, base),
                 "quadrangle vertex on the base line");
  check_internal(incident(a, join(quad.p, quad.s)) && incident(a, join(quad.q, quad.r)),
                 "sides ps, qr must meet at a");
  check_internal(incident(b, join(quad.p, quad.r)) && incident(b, join(quad.q, quad.s)),
                 "sides pr, qs must meet at b");
  check_internal(incident(c, join(quad.p, quad.q)), "side pq must pass through c");
  check_internal(incident(d, join(quad.r, quad.s)), "side rs must pass through d");
  return quad;
}

}  // namespace pgeo
