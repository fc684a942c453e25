#include <doctest.h>

#include "pgeo/harmonic.hpp"
#include "pgeo/projectivity.hpp"
#include "pgeo/sample.hpp"

using namespace pgeo;

namespace {
HomPoint pt(long long x, long long y, long long z) { return HomPoint(Rat(x), Rat(y), Rat(z)); }
HomLine ln(long long a, long long b, long long c) { return HomLine(Rat(a), Rat(b), Rat(c)); }

HomPoint x_axis_point(const Rat& t) { return HomPoint(t, Rat(0), Rat(1)); }

// chain on the x axis prescribed by three affine parameter pairs
Projectivity x_axis_map(std::array<std::pair<Rat, Rat>, 3> pairs) {
  HomLine l = ln(0, 1, 0);
  std::array<Vec3, 3> s, d;
  for (int i = 0; i < 3; ++i) {
    s[i] = x_axis_point(pairs[i].first).v;
    d[i] = x_axis_point(pairs[i].second).v;
  }
  return projectivity_from_triples(range_of(l), s, range_of(l), d);
}
}  // namespace

TEST_CASE("perspectivity application: vertical projection between two lines") {
  Projectivity pi(
      {persp_center(ln(0, 1, 0), HomLine(Rat(0), Rat(1), Rat(-1)), pt(0, 1, 0))});
  CHECK(apply(pi, pt(2, 0, 1)) == pt(2, 1, 1));
  CHECK_THROWS_WITH_AS(apply(pi, pt(2, 1, 1)), doctest::Contains("ElementNotOnCarrier"), Error);

  Projectivity there_and_back = pi.then(pi.inverse());
  CHECK(apply(there_and_back, pt(3, 0, 1)) == pt(3, 0, 1));
  CHECK(there_and_back.length() == 2);
}

TEST_CASE("three-point construction hits its data and stays short") {
  HomLine l = ln(0, 1, 0);
  HomLine m = ln(1, 0, 0);
  Projectivity pi = projectivity_from_triples(l, pt(0, 0, 1), pt(1, 0, 1), pt(1, 0, 0), m,
                                              pt(0, 0, 1), pt(0, 1, 1), pt(0, 1, 0));
  CHECK(apply(pi, pt(2, 0, 1)) == pt(0, 2, 1));
  CHECK(pi.length() <= 4);

  // same source and destination data: acts as the identity
  Projectivity ident = projectivity_from_triples(l, pt(0, 0, 1), pt(1, 0, 1), pt(1, 0, 0), l,
                                                 pt(0, 0, 1), pt(1, 0, 1), pt(1, 0, 0));
  for (long long t : {-3, 2, 7}) CHECK(apply(ident, x_axis_point(Rat(t))) == x_axis_point(Rat(t)));

  CHECK_THROWS_WITH_AS(projectivity_from_triples(l, pt(0, 0, 1), pt(0, 0, 1), pt(1, 0, 0), m,
                                                 pt(0, 0, 1), pt(0, 1, 1), pt(0, 1, 0)),
                       doctest::Contains("DegenerateTriple"), Error);
}

TEST_CASE("three-point construction on random data, twice, with the oracle") {
  Rng rng(19);
  for (int i = 0; i < 15; ++i) {
    HomLine l = random_line(rng, 8);
    HomLine m = random_line(rng, 8);
    if (l == m) continue;
    auto s = random_triple_on_line(rng, 8, l);
    auto d = random_triple_on_line(rng, 8, m);
    Projectivity pi = projectivity_from_triples(l, s[0], s[1], s[2], m, d[0], d[1], d[2], 0);
    Projectivity pi2 = projectivity_from_triples(l, s[0], s[1], s[2], m, d[0], d[1], d[2], 1);
    for (int k = 0; k < 3; ++k) {
      CHECK(apply(pi, s[k]) == d[k]);
      CHECK(apply(pi2, s[k]) == d[k]);
    }
    CHECK(pi.length() <= 4);
    CHECK(pi2.length() <= 4);

    RangeParam pl = default_param(pi.src());
    RangeParam pm = default_param(pi.dst());
    Mat2 o1 = matrix_oracle(pi, pl, pm);
    Mat2 o2 = matrix_oracle(pi2, pl, pm);
    CHECK(exactly_equal(mat2_canonical(o1), mat2_canonical(o2)));  // uniqueness

    // the two independently built chains agree on many points
    for (int k = 0; k < 20; ++k) {
      HomPoint x = random_point_on_line(rng, 8, l);
      CHECK(apply(pi, x) == apply(pi2, x));
    }
  }
}

TEST_CASE("matrix oracle is sound and multiplicative") {
  Rng rng(23);
  for (int i = 0; i < 10; ++i) {
    Projectivity p1 = random_range_projectivity(rng, 6, false);
    HomLine mid;
    mid.v = p1.dst().base;
    HomLine last = random_line(rng, 6);
    if (last == mid) continue;
    auto s = random_triple_on_line(rng, 6, mid);
    auto d = random_triple_on_line(rng, 6, last);
    Projectivity p2 = projectivity_from_triples(mid, s[0], s[1], s[2], last, d[0], d[1], d[2]);

    RangeParam fa = default_param(p1.src());
    RangeParam fb = default_param(p1.dst());
    RangeParam fc = default_param(p2.dst());
    Mat2 m1 = matrix_oracle(p1, fa, fb);
    Mat2 m2 = matrix_oracle(p2, fb, fc);
    Projectivity comp = p1.then(p2);
    Mat2 mc = matrix_oracle(comp, fa, fc);
    CHECK(exactly_equal(mat2_canonical((m2 * m1).eval()), mat2_canonical(mc)));

    // oracle reproduces apply through parameters
    for (int k = 0; k < 20; ++k) {
      HomPoint x = random_point_on_line(rng, 6, HomLine(p1.src().base));
      auto [s0, t0] = param_of(fa, x.v);
      Vec2 mapped = m1 * (Vec2() << s0, t0).finished();
      Vec3 expect = p1.apply_raw(x.v);
      CHECK(exactly_equal(elem_at(fb, mapped(0), mapped(1)), expect));
    }

    // a six-perspectivity chain still matches its oracle everywhere sampled
    Projectivity longer = comp.then(comp.inverse()).then(comp);
    CHECK(longer.length() >= 6);
    Mat2 ml = matrix_oracle(longer, fa, fc);
    CHECK(exactly_equal(mat2_canonical(ml), mat2_canonical(mc)));
    for (int k = 0; k < 5; ++k) {
      HomPoint x = random_point_on_line(rng, 6, HomLine(p1.src().base));
      CHECK(exactly_equal(longer.apply_raw(x.v), comp.apply_raw(x.v)));
    }
  }
}

TEST_CASE("fixed elements: identity, translation, quarter turn, sqrt2") {
  HomLine l = ln(0, 1, 0);
  Projectivity ident = projectivity_from_triples(l, pt(0, 0, 1), pt(1, 0, 1), pt(1, 0, 0), l,
                                                 pt(0, 0, 1), pt(1, 0, 1), pt(1, 0, 0));
  CHECK(fixed_elements(ident).kind == FixedElements::Kind::Identity);
  CHECK(is_involution(ident));

  // t -> t + 1 fixes exactly the point at infinity
  Projectivity shift = projectivity_from_triples(l, pt(0, 0, 1), pt(1, 0, 1), pt(1, 0, 0), l,
                                                 pt(1, 0, 1), pt(2, 0, 1), pt(1, 0, 0));
  FixedElements shift_fixed = fixed_elements(shift);
  CHECK(shift_fixed.kind == FixedElements::Kind::One);
  REQUIRE(shift_fixed.elems.size() == 1);
  CHECK(HomPoint(shift_fixed.elems[0]) == pt(1, 0, 0));
  CHECK_FALSE(is_involution(shift));

  // t -> -1/t has no real fixed parameter
  Projectivity quarter = x_axis_map({{{Rat(1), Rat(-1)},
                                      {Rat(-1), Rat(1)},
                                      {Rat(2), Rat::normalized(-1, 2)}}});
  CHECK(fixed_elements(quarter).kind == FixedElements::Kind::NoRealFixed);
  CHECK(is_involution(quarter));

  // t -> 2/t fixes +-sqrt(2), real but irrational
  Projectivity sqrt2 = x_axis_map({{{Rat(1), Rat(2)}, {Rat(2), Rat(1)}, {Rat(-1), Rat(-2)}}});
  CHECK(fixed_elements(sqrt2).kind == FixedElements::Kind::IrrationalPair);

  // t -> 4/t fixes +-2, two rational fixed points
  Projectivity four = x_axis_map({{{Rat(1), Rat(4)}, {Rat(4), Rat(1)}, {Rat(-1), Rat(-4)}}});
  FixedElements f4 = fixed_elements(four);
  CHECK(f4.kind == FixedElements::Kind::Two);
  REQUIRE(f4.elems.size() == 2);
  CHECK(((HomPoint(f4.elems[0]) == pt(2, 0, 1) && HomPoint(f4.elems[1]) == pt(-2, 0, 1)) ||
         (HomPoint(f4.elems[0]) == pt(-2, 0, 1) && HomPoint(f4.elems[1]) == pt(2, 0, 1))));
}

TEST_CASE("harmonic conjugation is an involution as a chain") {
  HomLine l = ln(0, 1, 0);
  HomPoint a = pt(0, 0, 1), b = pt(4, 0, 1);
  auto h = [&](const Rat& t) { return harmonic(a, b, x_axis_point(t)); };
  Projectivity upsilon = projectivity_from_triples(
      range_of(l), {x_axis_point(1).v, x_axis_point(2).v, x_axis_point(3).v}, range_of(l),
      {h(1).v, h(2).v, h(3).v});
  CHECK(is_involution(upsilon));
  // chain agrees with the construction everywhere sampled
  for (long long t : {-5, -1, 5, 7}) {
    CHECK(apply(upsilon, x_axis_point(Rat(t))) == h(Rat(t)));
  }
  FixedElements fixed = fixed_elements(upsilon);
  CHECK(fixed.kind == FixedElements::Kind::Two);
  for (const Vec3& e : fixed.elems) {
    HomPoint fp(e);
    CHECK((fp == a || fp == b));
  }
}

TEST_CASE("chains fixing three elements are the identity; two fixed points stay two") {
  Rng rng(29);
  for (int i = 0; i < 10; ++i) {
    HomLine l = random_line(rng, 8);
    auto t = random_triple_on_line(rng, 8, l);
    Projectivity pi =
        projectivity_from_triples(l, t[0], t[1], t[2], l, t[0], t[1], t[2], i % 2);
    RangeParam frame = default_param(pi.src());
    CHECK(is_scalar_matrix(matrix_oracle(pi, frame, frame)));

    // fixing two points and moving a third leaves exactly those two fixed
    HomPoint t3 = random_point_on_line(rng, 8, l);
    if (t3 == t[2] || t3 == t[0] || t3 == t[1]) continue;
    Projectivity two_fixed = projectivity_from_triples(l, t[0], t[1], t[2], l, t[0], t[1], t3);
    FixedElements fixed = fixed_elements(two_fixed);
    CHECK(fixed.kind == FixedElements::Kind::Two);
    for (const Vec3& e : fixed.elems) {
      HomPoint fp(e);
      CHECK((fp == t[0] || fp == t[1]));
    }
  }
}

TEST_CASE("axis of homology and the cross-axis theorem") {
  // a perspectivity fixes the common point: no axis
  HomLine l = ln(0, 1, 0), m = ln(1, 0, 0);
  Projectivity persp(std::vector<Perspectivity>{persp_center(l, m, pt(1, 1, 1))});
  CHECK_FALSE(nonperspective(persp));
  CHECK_THROWS_WITH_AS(axis_of_homology(persp), doctest::Contains("PerspectivityHasNoAxis"),
                       Error);

  Rng rng(59);
  for (int i = 0; i < 12; ++i) {
    Projectivity pi = random_range_projectivity(rng, 6, true);
    HomLine axis = axis_of_homology(pi);
    HomLine src;
    src.v = pi.src().base;
    HomLine dst;
    dst.v = pi.dst().base;
    HomPoint common = meet(src, dst);
    for (int k = 0; k < 10; ++k) {
      HomPoint a = random_point_on_line(rng, 6, src);
      HomPoint b = random_point_on_line(rng, 6, src);
      if (a == b || a == common || b == common) continue;
      CHECK(incident(cross_axis_point(pi, a, b), axis));
    }
  }
}

TEST_CASE("a chain between distinct ranges fixing the common point acts as one perspectivity") {
  Rng rng(61);
  for (int i = 0; i < 10; ++i) {
    Projectivity p1 = random_range_projectivity(rng, 6, false);
    HomLine l;
    l.v = p1.src().base;
    HomLine m;
    m.v = p1.dst().base;
    HomPoint common = meet(l, m);
    Vec3 image = p1.apply_raw(common.v);

    // correct on the destination so the common point is fixed
    auto fix = random_triple_on_line(rng, 6, m);
    HomPoint img(image);
    if (img == fix[0] || img == fix[1] || common == fix[0] || common == fix[1]) continue;
    Projectivity fixer = projectivity_from_triples(m, img, fix[0], fix[1], m, common, fix[0],
                                                   fix[1]);
    Projectivity rho = p1.then(fixer);
    CHECK(HomPoint(rho.apply_raw(common.v)) == common);

    // find the center from two point images and check everywhere else
    HomPoint a = random_point_on_line(rng, 6, l);
    HomPoint b = random_point_on_line(rng, 6, l);
    HomPoint a2(rho.apply_raw(a.v)), b2(rho.apply_raw(b.v));
    if (a == b || a == common || b == common || a == a2 || b == b2) continue;
    HomPoint center = meet(join(a, a2), join(b, b2));
    for (int k = 0; k < 10; ++k) {
      HomPoint x = random_point_on_line(rng, 6, l);
      HomPoint x2(rho.apply_raw(x.v));
      if (x == common) {
        CHECK(x2 == common);
        continue;
      }
      if (x == x2) continue;
      CHECK(incident(center, join(x, x2)));
    }
  }
}

TEST_CASE("duality: pencil chains mirror range chains") {
  Rng rng(67);
  for (int i = 0; i < 8; ++i) {
    Projectivity pi = random_range_projectivity(rng, 6, false);
    Projectivity dual = dualize(pi);
    HomLine l;
    l.v = pi.src().base;
    for (int k = 0; k < 10; ++k) {
      HomPoint x = random_point_on_line(rng, 6, l);
      Vec3 forward = pi.apply_raw(x.v);
      Vec3 dual_forward = dual.apply_raw(x.v);
      CHECK(exactly_equal(forward, dual_forward));
    }
  }
}

TEST_CASE("collineations from quadruples") {
  std::array<HomPoint, 4> frame = {pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1), pt(1, 1, 1)};
  Collineation ident = collineation_from_quads(frame, frame);
  CHECK(exactly_equal(ident.point_map, Mat3::Identity().eval()));

  std::array<HomPoint, 4> swapped = {pt(0, 1, 0), pt(1, 0, 0), pt(0, 0, 1), pt(1, 1, 1)};
  Collineation perm = collineation_from_quads(frame, swapped);
  Mat3 expect;
  expect << Rat(0), Rat(1), Rat(0), Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1);
  CHECK(exactly_equal(perm.point_map, expect));

  CHECK_THROWS_WITH_AS(
      collineation_from_quads({pt(0, 0, 1), pt(1, 0, 1), pt(2, 0, 1), pt(1, 1, 1)}, frame),
      doctest::Contains("DegenerateQuad"), Error);

  Rng rng(71);
  for (int i = 0; i < 10; ++i) {
    std::array<HomPoint, 4> quad;
    bool ok = true;
    for (auto& q : quad) q = random_point(rng, 8);
    try {
      Collineation fix = collineation_from_quads(quad, quad);
      CHECK(exactly_equal(fix.point_map, Mat3::Identity().eval()));
    } catch (const Error&) {
      ok = false;  // degenerate sample
    }
    if (!ok) continue;

    // collineations preserve collinearity and noncollinearity
    std::array<HomPoint, 4> target;
    for (auto& q : target) q = random_point(rng, 8);
    try {
      Collineation t = collineation_from_quads(quad, target);
      HomPoint a = random_point(rng, 8), b = random_point(rng, 8), c = random_point(rng, 8);
      if (a == b || b == c || a == c) continue;
      CHECK(collinear(a, b, c) ==
            collinear(apply(t, a), apply(t, b), apply(t, c)));
      HomLine l = random_line(rng, 8);
      HomPoint p = random_point_on_line(rng, 8, l);
      CHECK(incident(apply(t, p), apply(t, l)));
    } catch (const Error&) {
      continue;
    }
  }
}

TEST_CASE("pencil carriers run the same constructions by duality") {
  // pencil-to-pencil three-line construction
  HomPoint u = pt(-1, 0, 1), v = pt(1, 0, 1);
  auto lines_u = std::array<Vec3, 3>{join(u, pt(0, 1, 1)).v, join(u, pt(0, -1, 1)).v,
                                     join(u, HomPoint(Rat::normalized(3, 5), Rat::normalized(4, 5), Rat(1))).v};
  auto lines_v = std::array<Vec3, 3>{join(v, pt(0, 1, 1)).v, join(v, pt(0, -1, 1)).v,
                                     join(v, HomPoint(Rat::normalized(3, 5), Rat::normalized(4, 5), Rat(1))).v};
  Projectivity pi = projectivity_from_triples(pencil_of(u), lines_u, pencil_of(v), lines_v);
  for (int i = 0; i < 3; ++i)
    CHECK(exactly_equal(pi.apply_raw(lines_u[i]), primitive_canonical(lines_v[i])));
  CHECK(nonperspective(pi));
}
