#include "pgeo/conic.hpp"

#include <sstream>

namespace pgeo {

namespace {

Rat quad_eval(const Mat3& m, const Vec3& x) { return x.dot(m * x); }

Rat quad_pair(const Mat3& m, const Vec3& x, const Vec3& y) { return x.dot(m * y); }

// Fits the symmetric matrix through five points; kernel of the 5x6 system in
// the coefficients (m00, m01, m02, m11, m12, m22).
Mat3 fit_conic_matrix(const std::array<Vec3, 5>& pts) {
  MatX a(5, 6);
  for (int i = 0; i < 5; ++i) {
    const Vec3& p = pts[i];
    a(i, 0) = p(0) * p(0);
    a(i, 1) = Rat(2) * p(0) * p(1);
    a(i, 2) = Rat(2) * p(0) * p(2);
    a(i, 3) = p(1) * p(1);
    a(i, 4) = Rat(2) * p(1) * p(2);
    a(i, 5) = p(2) * p(2);
  }
  auto kernel = exact_kernel(a);
  if (kernel.size() != 1)
    throw Error("DegenerateConic", "five points do not determine a unique conic");
  const auto& k = kernel.front();
  Mat3 m;
  m << k(0), k(1), k(2), k(1), k(3), k(4), k(2), k(4), k(5);
  m = primitive_canonical(m);
  if (m.determinant().sign() == 0)
    throw Error("DegenerateConic", "fitted quadratic form is singular");
  return m;
}

// Membership through the generating chain alone.
bool steiner_member(const Projectivity& pi, const HomPoint& u, const HomPoint& v,
                    const HomPoint& x) {
  if (x == u || x == v) return true;
  Vec3 l = primitive_canonical(u.v.cross(x.v).eval());
  Vec3 img = pi.apply_raw(l);
  return img.dot(x.v).sign() == 0;
}

HomLine tangent_matrix_route(const Mat3& m, const HomPoint& p) { return HomLine(m * p.v); }

}  // namespace

Conic::Conic(Projectivity pi, HomPoint u, HomPoint v, Mat3 m)
    : pi_(std::move(pi)), u_(std::move(u)), v_(std::move(v)), m_(std::move(m)) {}

Conic Conic::steiner(const Projectivity& pi, const HomPoint& u, const HomPoint& v) {
  if (u == v) throw Error("CoincidentPoints", "base points of a conic must be apart");
  if (pi.src() != pencil_of(u) || pi.dst() != pencil_of(v))
    throw Error("CarrierMismatch", "chain must map the pencil at u onto the pencil at v");
  if (!nonperspective(pi))
    throw Error("PerspectiveProjectivity", "a perspectivity generates a line pair, not a conic");

  // Sweep locus points; fit on five, verify on the rest.
  std::vector<HomPoint> sample;
  SubspaceSweep lines(u.v);
  while (sample.size() < 10) {
    Vec3 l = lines.next();
    Vec3 img = pi.apply_raw(l);
    HomPoint x;
    x.v = primitive_canonical(l.cross(img).eval());
    sample.push_back(x);
  }
  Mat3 m = fit_conic_matrix({sample[0].v, sample[1].v, sample[2].v, sample[3].v, sample[4].v});
  for (const HomPoint& x : sample)
    check_internal(quad_eval(m, x.v).sign() == 0, "swept locus point off the fitted conic");
  check_internal(quad_eval(m, u.v).sign() == 0 && quad_eval(m, v.v).sign() == 0,
                 "base point off the fitted conic");
  return Conic(pi, u, v, std::move(m));
}

Conic Conic::through5(const HomPoint& a, const HomPoint& b, const HomPoint& c, const HomPoint& d,
                      const HomPoint& e) {
  const std::array<const HomPoint*, 5> pts = {&a, &b, &c, &d, &e};
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (*pts[i] == *pts[j]) throw Error("DuplicatePoints", "five points must be pairwise apart");
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      for (int k = j + 1; k < 5; ++k)
        if (collinear(*pts[i], *pts[j], *pts[k]))
          throw Error("ThreeCollinear", "no three of the five points may be collinear");

  Projectivity pi = projectivity_from_triples(
      pencil_of(a), {a.v.cross(c.v), a.v.cross(d.v), a.v.cross(e.v)}, pencil_of(b),
      {b.v.cross(c.v), b.v.cross(d.v), b.v.cross(e.v)});
  check_internal(nonperspective(pi), "five general points induced a perspectivity");

  Mat3 m = fit_conic_matrix({a.v, b.v, c.v, d.v, e.v});
  Conic k(std::move(pi), a, b, std::move(m));
  for (const HomPoint* p : pts) check_internal(on_conic(k, *p), "input point off its own conic");
  return k;
}

std::string to_string(const Conic& k) {
  std::ostringstream os;
  os << "conic[";
  for (int r = 0; r < 3; ++r) {
    os << (r ? ",[" : "[");
    for (int c = 0; c < 3; ++c) os << (c ? "," : "") << k.matrix()(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

bool on_conic(const Conic& k, const HomPoint& x) {
  bool by_matrix = quad_eval(k.matrix(), x.v).sign() == 0;
  bool by_steiner = steiner_member(k.steiner_map(), k.base_u(), k.base_v(), x);
  check_internal(by_matrix == by_steiner, "matrix and chain disagree on membership");
  return by_matrix;
}

std::vector<HomPoint> conic_points(const Conic& k, std::size_t n) {
  std::vector<HomPoint> out;
  SubspaceSweep lines(k.base_u().v);
  while (out.size() < n) {
    Vec3 l = lines.next();
    Vec3 img = k.steiner_map().apply_raw(l);
    HomPoint x;
    x.v = primitive_canonical(l.cross(img).eval());
    out.push_back(x);
  }
  return out;
}

HomLine pascal_line(const Conic& k, const std::array<HomPoint, 6>& hex) {
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (hex[i] == hex[j]) throw Error("DegenerateHexagon", "hexagon vertices must be apart");
  for (const HomPoint& p : hex)
    if (!on_conic(k, p)) throw Error("NotOnConic", to_string(p) + " is not on the conic");

  HomPoint x = meet(join(hex[0], hex[1]), join(hex[3], hex[4]));
  HomPoint y = meet(join(hex[1], hex[2]), join(hex[4], hex[5]));
  HomPoint z = meet(join(hex[2], hex[3]), join(hex[5], hex[0]));
  check_internal(x != y && x != z && y != z, "opposite-side meets are not pairwise apart");
  HomLine p = join(x, y);
  check_internal(incident(z, p), "opposite-side meets are not collinear");
  return p;
}

HomPoint pascal_sixth_point(const Conic& k, const HomPoint& a, const HomPoint& b,
                            const HomPoint& c, const HomPoint& d, const HomPoint& e,
                            const HomLine& l) {
  for (const HomPoint* p : {&a, &b, &c, &d, &e})
    if (!on_conic(k, *p)) throw Error("NotOnConic", "the five base points must lie on the conic");
  if (!incident(e, l)) throw Error("LineAvoidanceViolated", "l must pass through e");
  for (const HomPoint* p : {&a, &b, &c, &d})
    if (incident(*p, l))
      throw Error("LineAvoidanceViolated", "l must avoid the other four points");
  if (l == tangent_at(k, e)) throw Error("TangentLine", "no distinct sixth point on a tangent");

  HomPoint x = meet(join(a, b), join(d, e));
  HomPoint y1 = meet(join(b, c), l);
  HomPoint z = meet(join(c, d), join(x, y1));
  HomPoint f = meet(l, join(a, z));

  check_internal(on_conic(k, f), "sixth point fell off the conic");
  check_internal(f == second_intersection(k, e, l), "formula and factoring disagree");
  return f;
}

HomLine tangent_at(const Conic& k, const HomPoint& p) {
  if (!on_conic(k, p)) throw Error("NotOnConic", to_string(p) + " is not on the conic");
  HomLine t = tangent_matrix_route(k.matrix(), p);

  // Rebase the chain at (q, p) and take the image of the secant qp.
  std::vector<HomPoint> pts = conic_points(k, 6);
  std::vector<HomPoint> others;
  for (const HomPoint& x : pts)
    if (x != p) others.push_back(x);
  check_internal(others.size() >= 4, "not enough rebase points");
  const HomPoint& q = others[0];
  Projectivity rebased = projectivity_from_triples(
      pencil_of(q), {q.v.cross(others[1].v), q.v.cross(others[2].v), q.v.cross(others[3].v)},
      pencil_of(p), {p.v.cross(others[1].v), p.v.cross(others[2].v), p.v.cross(others[3].v)});
  Vec3 synthetic = rebased.apply_raw(q.v.cross(p.v).eval());
  check_internal(exactly_equal(synthetic, t.v), "matrix tangent disagrees with chain tangent");
  return t;
}

HomPoint second_intersection(const Conic& k, const HomPoint& p, const HomLine& l) {
  if (!on_conic(k, p)) throw Error("NotOnConic", to_string(p) + " is not on the conic");
  if (!incident(p, l)) throw Error("LineAvoidanceViolated", "line must pass through the point");
  if (exactly_equal(primitive_canonical((k.matrix() * p.v).eval()), l.v))
    throw Error("TangentLine", "the tangent meets the conic only once");

  SubspaceSweep sweep(l.v);
  Vec3 b = sweep.next();
  while (exactly_equal(b, p.v)) b = sweep.next();
  Rat r = quad_pair(k.matrix(), p.v, b);
  check_internal(r.sign() != 0, "non-tangent line gave a double root");
  Rat s = quad_eval(k.matrix(), b);
  HomPoint out;
  out.v = primitive_canonical((s * p.v - Rat(2) * r * b).eval());
  check_internal(on_conic(k, out) && incident(out, l) && out != p,
                 "second intersection failed verification");
  return out;
}

namespace {

struct SecantWithPoint {
  HomLine line;
  HomPoint contact;
};

// One round of the tangent-triple selection: given three conic points with
// their tangents, produce a contact point whose tangent the given point avoids.
SecantWithPoint secant_round(const Conic& k, const HomPoint& p,
                             const std::array<HomPoint, 3>& abc) {
  std::array<HomLine, 3> t;
  for (int i = 0; i < 3; ++i) t[i] = tangent_at(k, abc[i]);
  HomPoint e = meet(t[0], t[1]);
  HomPoint f = meet(t[1], t[2]);
  check_internal(e != f, "tangent triple concurrent");
  int first, second;
  if (cotransitive_witness(e, f, p) == CotransSide::Left) {
    first = 0;
    second = 1;
  } else {
    first = 1;
    second = 2;
  }
  C7Side side = c7_witness(t[first], t[second], p);
  const HomPoint& contact = side == C7Side::OutsideL ? abc[first] : abc[second];
  check_internal(p != contact, "outside witness allowed a contact collision");
  return SecantWithPoint{join(p, contact), contact};
}

std::vector<SecantWithPoint> secants_with_points(const Conic& k, const HomPoint& p,
                                                 std::size_t count) {
  std::vector<HomPoint> pts = conic_points(k, 8 + 2 * count);
  std::vector<HomPoint> pool;
  for (const HomPoint& x : pts)
    if (x != p) pool.push_back(x);

  std::vector<SecantWithPoint> out;
  SecantWithPoint s1 = secant_round(k, p, {pool[0], pool[1], pool[2]});
  HomPoint r1 = second_intersection(k, s1.contact, s1.line);
  out.push_back(s1);

  std::vector<HomPoint> used = {s1.contact, r1};
  auto is_used = [&](const HomPoint& x) {
    for (const HomPoint& u : used)
      if (u == x) return true;
    return false;
  };

  std::size_t cursor = 0;
  auto next_fresh = [&]() {
    while (cursor < pool.size() && is_used(pool[cursor])) ++cursor;
    check_internal(cursor < pool.size(), "conic point pool exhausted");
    return pool[cursor++];
  };

  while (out.size() < count) {
    HomPoint a = next_fresh();
    HomPoint b = next_fresh();
    HomPoint c = next_fresh();
    SecantWithPoint s = secant_round(k, p, {a, b, c});
    HomPoint r = second_intersection(k, s.contact, s.line);
    bool fresh = true;
    for (const auto& prev : out)
      if (prev.line == s.line) fresh = false;
    if (!fresh) continue;
    used.push_back(s.contact);
    used.push_back(r);
    out.push_back(s);
  }
  return out;
}

}  // namespace

std::pair<HomLine, HomLine> secants_through(const Conic& k, const HomPoint& p) {
  auto s = secants_with_points(k, p, 2);
  check_internal(s[0].line != s[1].line, "secants through the point must be apart");
  for (const auto& sec : s) {
    HomPoint r = second_intersection(k, sec.contact, sec.line);
    check_internal(r != sec.contact, "secant does not meet the conic twice");
    check_internal(incident(p, sec.line), "secant misses the given point");
  }
  return {s[0].line, s[1].line};
}

std::vector<HomPoint> line_conic_intersection(const Conic& k, const HomLine& l) {
  SubspaceSweep sweep(l.v);
  Vec3 b0 = sweep.next();
  Vec3 b1 = sweep.next();
  Rat s = quad_eval(k.matrix(), b0);
  Rat r = quad_pair(k.matrix(), b0, b1);
  Rat t = quad_eval(k.matrix(), b1);

  auto at = [&](const Rat& mu, const Rat& nu) {
    HomPoint x;
    x.v = primitive_canonical((mu * b0 + nu * b1).eval());
    return x;
  };

  std::vector<HomPoint> out;
  if (s.sign() == 0) {
    out.push_back(at(1, 0));
    if (r.sign() != 0) {
      HomPoint second = at(-t, Rat(2) * r);
      if (second != out[0]) out.push_back(second);
    }
    return out;
  }
  Rat disc = r * r - s * t;
  int ds = disc.sign();
  if (ds < 0) return out;
  if (ds == 0) {
    out.push_back(at(-r, s));
    return out;
  }
  Rat w;
  if (!rational_square_root(disc, w))
    throw Error("OutOfRationalScope",
                "line meets the conic only over a quadratic extension");
  out.push_back(at(-r - w, s));
  out.push_back(at(-r + w, s));
  return out;
}

HomLine polar_via_secant(const Conic& k, const HomPoint& p, const HomLine& secant,
                         const HomPoint& secant_point) {
  if (!incident(p, secant))
    throw Error("LineAvoidanceViolated", "secant must pass through the point");
  if (!on_conic(k, secant_point)) throw Error("NotOnConic", "secant point must lie on the conic");
  HomPoint q1 = secant_point;
  HomPoint q2 = second_intersection(k, q1, secant);
  HomLine t1 = tangent_matrix_route(k.matrix(), q1);
  HomLine t2 = tangent_matrix_route(k.matrix(), q2);
  HomPoint q = meet(t1, t2);
  HomPoint qc = harmonic(q1, q2, p);
  return join(q, qc);
}

HomLine polar(const Conic& k, const HomPoint& p) {
  HomLine oracle = HomLine((k.matrix() * p.v).eval());
  auto secants = secants_with_points(k, p, 3);
  for (const auto& s : secants) {
    HomLine candidate = polar_via_secant(k, p, s.line, s.contact);
    check_internal(candidate == oracle, "secant construction disagrees with the matrix polar");
  }
  return oracle;
}

HomPoint pole(const Conic& k, const HomLine& l) {
  HomPoint x1 = point_on_line(l, 0);
  HomPoint x2 = point_on_line(l, 1);
  HomLine p1 = polar(k, x1);
  HomLine p2 = polar(k, x2);
  check_internal(p1 != p2, "polars of distinct points coincide");
  HomPoint result = meet(p1, p2);
  HomPoint oracle;
  oracle.v = primitive_canonical((adjugate(k.matrix()) * l.v).eval());
  check_internal(result == oracle, "dual construction disagrees with the matrix pole");
  return result;
}

HomLine quadrangle_polar_check(const Conic& k, const std::array<HomPoint, 4>& quad,
                               const HomPoint& diagonal) {
  for (const HomPoint& p : quad)
    if (!on_conic(k, p)) throw Error("NotOnConic", "quadrangle must be inscribed in the conic");
  auto diag = fano_diagonals(quad[0], quad[1], quad[2], quad[3]);
  int which = -1;
  for (int i = 0; i < 3; ++i)
    if (diag[i] == diagonal) which = i;
  if (which < 0)
    throw Error("NotADiagonalPoint", "given point is not a diagonal point of the quadrangle");
  HomLine p = join(diag[(which + 1) % 3], diag[(which + 2) % 3]);
  check_internal(p == polar(k, diagonal), "diagonal join is not the polar");
  return p;
}

bool axiom_p_check(const Conic& k, const HomPoint& a, const HomPoint& b, const HomPoint& c) {
  if (a == b || a == c || b == c)
    throw Error("NotOnConic", "tangent triple needs pairwise-apart conic points");
  HomLine ta = tangent_at(k, a);
  HomLine tb = tangent_at(k, b);
  HomLine tc = tangent_at(k, c);
  return outside(meet(ta, tb), tc);
}

}  // namespace pgeo
