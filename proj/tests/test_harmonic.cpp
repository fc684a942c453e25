#include <doctest.h>

#include "pgeo/harmonic.hpp"
#include "pgeo/projectivity.hpp"
#include "pgeo/sample.hpp"

using namespace pgeo;

namespace {
HomPoint pt(long long x, long long y, long long z) { return HomPoint(Rat(x), Rat(y), Rat(z)); }

HomPoint affine_on_x_axis(const Rat& t) { return HomPoint(t, Rat(0), Rat(1)); }
}  // namespace

TEST_CASE("cross ratio on affine parameters of the x axis") {
  HomPoint a = affine_on_x_axis(0);
  HomPoint b = affine_on_x_axis(1);
  HomPoint c = affine_on_x_axis(2);
  HomPoint d = affine_on_x_axis(Rat::normalized(2, 3));
  CHECK(cross_ratio(a, b, c, d) == CrossRatio::of(-1));
  CHECK(cross_ratio(a, b, c, c) == CrossRatio::of(1));
  CHECK(cross_ratio(a, b, a, d) == CrossRatio::of(0));
  CHECK(cross_ratio(a, b, c, a) == CrossRatio::inf());
  CHECK_THROWS_WITH_AS(cross_ratio(a, b, c, pt(1, 1, 1)), doctest::Contains("NotCollinear"),
                       Error);
  CHECK_THROWS_WITH_AS(cross_ratio(a, a, c, d), doctest::Contains("DegenerateBasis"), Error);
}

TEST_CASE("harmonic conjugate on the x axis") {
  HomPoint a = pt(0, 0, 1), b = pt(1, 0, 1), c = pt(2, 0, 1);
  HomPoint d = harmonic(a, b, c);
  CHECK(d == pt(2, 0, 3));
  CHECK(cross_ratio(a, b, c, d) == CrossRatio::of(-1));

  // explicit auxiliary selections agree
  for (std::size_t k = 0; k < 10; ++k) {
    AuxSelection aux = find_aux(a, b, c, k);
    CHECK(harmonic_with_aux(a, b, c, aux) == d);
  }
}

TEST_CASE("midpoint maps to the point at infinity") {
  HomPoint a = pt(0, 0, 1), b = pt(2, 0, 1), c = pt(1, 0, 1);
  CHECK(harmonic(a, b, c) == pt(1, 0, 0));
}

TEST_CASE("base points are fixed") {
  HomPoint a = pt(0, 0, 1), b = pt(1, 0, 1);
  CHECK(harmonic(a, b, a) == a);
  CHECK(harmonic(a, b, b) == b);
}

TEST_CASE("involution and symmetry on random collinear triples") {
  Rng rng(31);
  for (int i = 0; i < 60; ++i) {
    HomLine l = random_line(rng, 10);
    auto t = random_triple_on_line(rng, 10, l);
    HomPoint d = harmonic(t[0], t[1], t[2]);
    CHECK(incident(d, l));
    CHECK(harmonic(t[0], t[1], d) == t[2]);       // involution
    CHECK(harmonic(t[1], t[0], t[2]) == d);       // symmetry in the base pair
    if (t[2] != t[0] && t[2] != t[1]) {
      CHECK(cross_ratio(t[0], t[1], t[2], d) == CrossRatio::of(-1));
      CHECK(d != t[2]);
    }
  }
}

TEST_CASE("invariance over ten distinct auxiliary selections") {
  Rng rng(37);
  for (int i = 0; i < 20; ++i) {
    HomLine l = random_line(rng, 10);
    auto t = random_triple_on_line(rng, 10, l);
    HomPoint expected = harmonic(t[0], t[1], t[2]);
    std::vector<AuxSelection> seen;
    for (std::size_t k = 0; k < 10; ++k) {
      AuxSelection aux = find_aux(t[0], t[1], t[2], k);
      for (const auto& prev : seen) CHECK((prev.l != aux.l || prev.r != aux.r));
      seen.push_back(aux);
      CHECK(harmonic_with_aux(t[0], t[1], t[2], aux) == expected);
    }
  }
}

TEST_CASE("invalid auxiliaries are rejected") {
  HomPoint a = pt(0, 0, 1), b = pt(1, 0, 1), c = pt(2, 0, 1);
  HomLine base = join(a, b);
  CHECK_THROWS_WITH_AS(harmonic_with_aux(a, b, c, AuxSelection{base, pt(0, 1, 0)}),
                       doctest::Contains("InvalidAuxiliary"), Error);
  CHECK_THROWS_WITH_AS(harmonic(a, b, pt(5, 3, 1)), doctest::Contains("CNotOnBaseLine"), Error);
}

TEST_CASE("quadrangle witness has the eight incidences") {
  HomPoint a = pt(0, 0, 1), b = pt(1, 0, 1), c = pt(2, 0, 1);
  HomPoint d = harmonic(a, b, c);
  Quadrangle quad = quadrangle_witness(a, b, c, d);
  HomLine base = join(a, b);
  for (const HomPoint* v : {&quad.p, &quad.q, &quad.r, &quad.s}) CHECK(outside(*v, base));
  CHECK(incident(a, join(quad.p, quad.s)));
  CHECK(incident(a, join(quad.q, quad.r)));
  CHECK(incident(b, join(quad.p, quad.r)));
  CHECK(incident(b, join(quad.q, quad.s)));
  CHECK(incident(c, join(quad.p, quad.q)));
  CHECK(incident(d, join(quad.r, quad.s)));

  CHECK_THROWS_WITH_AS(quadrangle_witness(a, b, a, a), doctest::Contains("HarmonicMismatch"),
                       Error);
  CHECK_THROWS_WITH_AS(quadrangle_witness(a, b, c, c), doctest::Contains("HarmonicMismatch"),
                       Error);

  Rng rng(41);
  for (int i = 0; i < 20; ++i) {
    HomLine l = random_line(rng, 8);
    auto t = random_triple_on_line(rng, 8, l);
    HomPoint h = harmonic(t[0], t[1], t[2]);
    if (t[2] == t[0] || t[2] == t[1]) continue;
    Quadrangle q = quadrangle_witness(t[0], t[1], t[2], h);
    CHECK(incident(t[2], join(q.p, q.q)));
    CHECK(incident(h, join(q.r, q.s)));
  }
}

TEST_CASE("projectivities preserve harmonic conjugates") {
  Rng rng(43);
  for (int i = 0; i < 15; ++i) {
    Projectivity pi = random_range_projectivity(rng, 6, false);
    HomLine l;
    l.v = pi.src().base;
    auto t = random_triple_on_line(rng, 6, l);
    HomPoint h = harmonic(t[0], t[1], t[2]);
    HomPoint a2, b2, c2, h2;
    a2.v = pi.apply_raw(t[0].v);
    b2.v = pi.apply_raw(t[1].v);
    c2.v = pi.apply_raw(t[2].v);
    h2.v = pi.apply_raw(h.v);
    CHECK(harmonic(a2, b2, c2) == h2);
  }
}
