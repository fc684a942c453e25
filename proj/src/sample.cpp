#include "pgeo/sample.hpp"

namespace pgeo {

namespace {

Vec3 random_triple(Rng& rng, long long bound) {
  for (;;) {
    Vec3 v = vec3(Rat(rng.range(-bound, bound)), Rat(rng.range(-bound, bound)),
                  Rat(rng.range(-bound, bound)));
    if (!exactly_zero(v)) return v;
  }
}

}  // namespace

HomPoint random_point(Rng& rng, long long bound) { return HomPoint(random_triple(rng, bound)); }

HomLine random_line(Rng& rng, long long bound) { return HomLine(random_triple(rng, bound)); }

HomPoint random_point_apart(Rng& rng, long long bound, const HomPoint& avoid) {
  for (;;) {
    HomPoint p = random_point(rng, bound);
    if (p != avoid) return p;
  }
}

HomPoint random_point_on_line(Rng& rng, long long bound, const HomLine& l) {
  SubspaceSweep sweep(l.v);
  Vec3 g0 = sweep.next();
  Vec3 g1 = sweep.next();
  for (;;) {
    Rat s = Rat(rng.range(-bound, bound));
    Rat t = Rat(rng.range(-bound, bound));
    if (s.sign() == 0 && t.sign() == 0) continue;
    HomPoint p;
    p.v = primitive_canonical((s * g0 + t * g1).eval());
    return p;
  }
}

HomLine random_line_through(Rng& rng, long long bound, const HomPoint& p) {
  return dualize(random_point_on_line(rng, bound, dualize(p)));
}

Triangle random_triangle(Rng& rng, long long bound) {
  for (;;) {
    HomPoint p = random_point(rng, bound);
    HomPoint q = random_point(rng, bound);
    HomPoint r = random_point(rng, bound);
    if (p == q || p == r || q == r || collinear(p, q, r)) continue;
    return make_triangle(p, q, r);
  }
}

PerspectivePair random_perspective_pair(Rng& rng, long long bound) {
  for (;;) {
    Triangle t1 = random_triangle(rng, bound);
    HomPoint center = random_point(rng, bound);
    bool center_ok = true;
    for (int i = 0; i < 3; ++i)
      if (!outside(center, t1.side[i])) center_ok = false;
    if (!center_ok) continue;

    // Slide each vertex along its join with the center by a random ratio.
    std::array<HomPoint, 3> moved;
    bool ok = true;
    for (int i = 0; i < 3 && ok; ++i) {
      Rat s = Rat(rng.range(1, bound + 1));
      Rat t = Rat(rng.range(1, bound + 1)) * Rat(rng.chance(1, 2) ? 1 : -1);
      Vec3 cand = (s * t1.vertex[i].v + t * center.v).eval();
      if (exactly_zero(cand)) {
        ok = false;
        break;
      }
      moved[i].v = primitive_canonical(cand);
      if (moved[i] == t1.vertex[i] || moved[i] == center) ok = false;
    }
    if (!ok) continue;
    if (moved[0] == moved[1] || moved[0] == moved[2] || moved[1] == moved[2]) continue;
    if (collinear(moved[0], moved[1], moved[2])) continue;
    Triangle t2 = make_triangle(moved[0], moved[1], moved[2]);

    bool distinct = true;
    for (int i = 0; i < 3; ++i) {
      if (t1.vertex[i] == t2.vertex[i] || t1.side[i] == t2.side[i]) distinct = false;
      if (!outside(center, t2.side[i])) distinct = false;
    }
    if (!distinct) continue;
    return PerspectivePair{t1, t2, center};
  }
}

std::array<HomPoint, 3> random_triple_on_line(Rng& rng, long long bound, const HomLine& l) {
  for (;;) {
    std::array<HomPoint, 3> out = {random_point_on_line(rng, bound, l),
                                   random_point_on_line(rng, bound, l),
                                   random_point_on_line(rng, bound, l)};
    if (out[0] != out[1] && out[0] != out[2] && out[1] != out[2]) return out;
  }
}

Conic random_conic(Rng& rng, long long bound) {
  for (;;) {
    std::array<HomPoint, 5> p;
    for (auto& x : p) x = random_point(rng, bound);
    try {
      return Conic::through5(p[0], p[1], p[2], p[3], p[4]);
    } catch (const Error&) {
      continue;  // rejected: duplicate or collinear sample
    }
  }
}

Projectivity random_range_projectivity(Rng& rng, long long bound, bool require_nonperspective) {
  for (;;) {
    HomLine l = random_line(rng, bound);
    HomLine m = random_line(rng, bound);
    if (l == m) continue;
    auto s = random_triple_on_line(rng, bound, l);
    auto d = random_triple_on_line(rng, bound, m);
    try {
      Projectivity p = projectivity_from_triples(l, s[0], s[1], s[2], m, d[0], d[1], d[2]);
      if (require_nonperspective && !nonperspective(p)) continue;
      return p;
    } catch (const Error&) {
      continue;
    }
  }
}

}  // namespace pgeo
