#include "pgeo/plane.hpp"

#include <sstream>

namespace pgeo {

std::string to_string(const HomPoint& p) {
  std::ostringstream os;
  os << '<' << p.x() << ',' << p.y() << ',' << p.z() << '>';
  return os.str();
}

std::string to_string(const HomLine& l) {
  std::ostringstream os;
  os << '[' << l.a() << ',' << l.b() << ',' << l.c() << ']';
  return os.str();
}

HomLine join(const HomPoint& p, const HomPoint& q) {
  if (p == q) throw Error("CoincidentPoints", "join of " + to_string(p) + " with itself");
  return HomLine(cross(p.v, q.v));
}

HomPoint meet(const HomLine& l, const HomLine& m) {
  if (l == m) throw Error("CoincidentLines", "meet of " + to_string(l) + " with itself");
  return HomPoint(cross(l.v, m.v));
}

CotransSide cotransitive_witness(const HomPoint& p, const HomPoint& q, const HomPoint& r) {
  if (p == q) throw Error("CoincidentPoints", "cotransitivity needs p apart from q");
  if (r != p) return CotransSide::Left;
  return CotransSide::Right;  // r = p forces r apart from q
}

CotransSide cotransitive_witness(const HomLine& l, const HomLine& m, const HomLine& n) {
  if (l == m) throw Error("CoincidentLines", "cotransitivity needs l apart from m");
  if (n != l) return CotransSide::Left;
  return CotransSide::Right;
}

C7Side c7_witness(const HomLine& l, const HomLine& m, const HomPoint& p) {
  HomPoint o = meet(l, m);
  if (p == o) throw Error("PointOnBothLines", to_string(p) + " is the common point");
  if (outside(p, l)) return C7Side::OutsideL;
  return C7Side::OutsideM;  // p on l and p != l.m imply p outside m
}

C7Side c7_witness(const HomPoint& a, const HomPoint& b, const HomLine& l) {
  HomLine ab = join(a, b);
  if (l == ab) throw Error("CoincidentLines", "l equals the join of a and b");
  if (outside(a, l)) return C7Side::OutsideL;
  return C7Side::OutsideM;
}

Triangle make_triangle(const HomPoint& p, const HomPoint& q, const HomPoint& r) {
  if (collinear(p, q, r))
    throw Error("DegenerateTriangle", "vertices are collinear");
  Triangle t;
  t.vertex = {p, q, r};
  t.side = {join(q, r), join(p, r), join(p, q)};
  return t;
}

namespace {

bool triangles_distinct(const Triangle& t1, const Triangle& t2) {
  for (int i = 0; i < 3; ++i) {
    if (t1.vertex[i] == t2.vertex[i]) return false;
    if (t1.side[i] == t2.side[i]) return false;
  }
  return true;
}

}  // namespace

HomLine desargues_axis(const Triangle& t1, const Triangle& t2, const HomPoint& center) {
  auto reject = [](const std::string& why) -> Error {
    return Error("NotPerspectiveFromCenter", why);
  };
  if (!triangles_distinct(t1, t2)) throw reject("triangles are not distinct");
  for (int i = 0; i < 3; ++i) {
    if (center == t1.vertex[i] || center == t2.vertex[i])
      throw reject("center coincides with a vertex");
    if (!incident(center, join(t1.vertex[i], t2.vertex[i])))
      throw reject("vertex joins do not concur at the center");
    if (!outside(center, t1.side[i]) || !outside(center, t2.side[i]))
      throw reject("center lies on a side");
  }

  std::array<HomPoint, 3> meets;
  for (int i = 0; i < 3; ++i) meets[i] = meet(t1.side[i], t2.side[i]);
  if (meets[0] == meets[1] || meets[0] == meets[2] || meets[1] == meets[2])
    throw reject("side meets are not pairwise apart");
  HomLine axis = join(meets[0], meets[1]);
  check_internal(incident(meets[2], axis), "Desargues side meets not collinear");
  for (int i = 0; i < 3; ++i)
    check_internal(outside(t1.vertex[i], axis) && outside(t2.vertex[i], axis),
                   "Desargues axis hits a vertex");
  return axis;
}

HomPoint desargues_center(const Triangle& t1, const Triangle& t2, const HomLine& axis) {
  auto reject = [](const std::string& why) -> Error {
    return Error("NotPerspectiveFromAxis", why);
  };
  if (!triangles_distinct(t1, t2)) throw reject("triangles are not distinct");
  for (int i = 0; i < 3; ++i)
    if (!outside(t1.vertex[i], axis) || !outside(t2.vertex[i], axis))
      throw reject("axis passes through a vertex");
  std::array<HomPoint, 3> meets;
  for (int i = 0; i < 3; ++i) {
    if (t1.side[i] == t2.side[i]) throw reject("corresponding sides coincide");
    meets[i] = meet(t1.side[i], t2.side[i]);
    if (!incident(meets[i], axis)) throw reject("side meets are not on the axis");
  }

  // Proof construction of the converse: with vertices (P,Q,R), (P',Q',R') and
  // side meets A = QR.Q'R', B = PR.P'R', C = PQ.P'Q', the triangles AQQ' and
  // BPP' are perspective from C, and the axis this produces is RR'.
  const HomPoint& a = meets[0];
  const HomPoint& b = meets[1];
  const HomPoint& c = meets[2];
  HomLine rr;
  try {
    Triangle ta = make_triangle(a, t1.vertex[1], t2.vertex[1]);
    Triangle tb = make_triangle(b, t1.vertex[0], t2.vertex[0]);
    rr = desargues_axis(ta, tb, c);
  } catch (const Error& e) {
    throw reject("auxiliary triangles degenerate (" + e.code() + ")");
  }
  check_internal(rr == join(t1.vertex[2], t2.vertex[2]),
                 "auxiliary Desargues axis is not RR'");

  HomPoint center = meet(join(t1.vertex[0], t2.vertex[0]), join(t1.vertex[1], t2.vertex[1]));
  check_internal(incident(center, rr), "center not on RR'");
  for (int i = 0; i < 3; ++i)
    check_internal(outside(center, t1.side[i]) && outside(center, t2.side[i]),
                   "recovered center lies on a side");
  return center;
}

std::array<HomPoint, 3> fano_diagonals(const HomPoint& a, const HomPoint& b, const HomPoint& c,
                                       const HomPoint& d) {
  const std::array<const HomPoint*, 4> pts = {&a, &b, &c, &d};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (*pts[i] == *pts[j]) throw Error("DegenerateQuadrangle", "repeated vertex");
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k)
        if (collinear(*pts[i], *pts[j], *pts[k]))
          throw Error("DegenerateQuadrangle", "three vertices collinear");

  std::array<HomPoint, 3> diag = {meet(join(a, b), join(c, d)), meet(join(a, c), join(b, d)),
                                  meet(join(a, d), join(b, c))};
  check_internal(diag[0] != diag[1] && diag[0] != diag[2] && diag[1] != diag[2],
                 "diagonal points not pairwise apart");
  check_internal(!collinear(diag[0], diag[1], diag[2]), "diagonal points collinear");
  return diag;
}

SubspaceSweep::SubspaceSweep(const Vec3& base) {
  // Two integer generators of { v : v . base = 0 }.
  const Rat& a = base(0);
  const Rat& b = base(1);
  const Rat& c = base(2);
  if (c.sign() != 0) {
    g0_ = vec3(c, 0, -a);
    g1_ = vec3(0, c, -b);
  } else if (b.sign() != 0) {
    g0_ = vec3(b, -a, 0);
    g1_ = vec3(0, 0, 1);
  } else {
    g0_ = vec3(0, 1, 0);
    g1_ = vec3(0, 0, 1);
  }
}

Vec3 SubspaceSweep::next() {
  auto [s, t] = pairs_.next();
  return primitive_canonical((Rat(s) * g0_ + Rat(t) * g1_).eval());
}

HomPoint point_on_line(const HomLine& l, std::size_t k) {
  SubspaceSweep sweep(l.v);
  for (std::size_t i = 0; i < k; ++i) sweep.next();
  HomPoint p;
  p.v = sweep.next();
  return p;
}

HomLine line_through_point(const HomPoint& p, std::size_t k) {
  SubspaceSweep sweep(p.v);
  for (std::size_t i = 0; i < k; ++i) sweep.next();
  HomLine l;
  l.v = sweep.next();
  return l;
}

}  // namespace pgeo
