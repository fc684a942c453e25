#include "pgeo/projectivity.hpp"

#include <sstream>

namespace pgeo {

namespace {

Vec3 canon_cross(const Vec3& a, const Vec3& b) { return primitive_canonical(a.cross(b).eval()); }

bool same_ray(const Vec3& a, const Vec3& b) { return exactly_zero(a.cross(b).eval()); }

void require_on_carrier(const Carrier& c, const Vec3& e) {
  if (!on_carrier(c, e))
    throw Error("ElementNotOnCarrier", "element does not belong to the carrier");
}

}  // namespace

std::string to_string(const Carrier& c) {
  std::ostringstream os;
  HomPoint p;
  p.v = c.base;
  if (c.kind == CarrierKind::Range)
    os << "range" << to_string(dualize(p));
  else
    os << "pencil" << to_string(p);
  return os.str();
}

Perspectivity persp_center(const HomLine& from, const HomLine& to, const HomPoint& center) {
  if (!outside(center, from) || !outside(center, to))
    throw Error("InvalidPerspectivity", "center must lie outside both range lines");
  return Perspectivity{range_of(from), range_of(to), center.v};
}

Perspectivity persp_axis(const HomPoint& from, const HomPoint& to, const HomLine& axis) {
  if (!outside(from, axis) || !outside(to, axis))
    throw Error("InvalidPerspectivity", "axis must avoid both pencil vertices");
  return Perspectivity{pencil_of(from), pencil_of(to), axis.v};
}

Perspectivity section(const Carrier& from, const Carrier& to) {
  if (from.kind == to.kind)
    throw Error("InvalidPerspectivity", "a section pairs a range with a pencil");
  if (from.base.dot(to.base).sign() == 0)
    throw Error("InvalidPerspectivity", "section vertex must lie outside the range line");
  return Perspectivity{from, to, std::nullopt};
}

Perspectivity inverse(const Perspectivity& p) { return Perspectivity{p.dst, p.src, p.via}; }

Vec3 apply(const Perspectivity& p, const Vec3& elem) {
  require_on_carrier(p.src, elem);
  if (p.via) return canon_cross(elem.cross(*p.via).eval(), p.dst.base);
  return canon_cross(elem, p.dst.base);
}

Projectivity::Projectivity(std::vector<Perspectivity> chain) : chain_(std::move(chain)) {
  if (chain_.empty()) throw Error("EmptyChain", "a projectivity needs at least one perspectivity");
  for (std::size_t i = 0; i + 1 < chain_.size(); ++i)
    if (chain_[i].dst != chain_[i + 1].src)
      throw Error("CarrierMismatch", "adjacent perspectivities do not share a carrier");
}

Vec3 Projectivity::apply_raw(const Vec3& elem) const {
  Vec3 e = primitive_canonical(elem);
  for (const Perspectivity& p : chain_) e = apply(p, e);
  return e;
}

Projectivity Projectivity::inverse() const {
  std::vector<Perspectivity> rev;
  rev.reserve(chain_.size());
  for (auto it = chain_.rbegin(); it != chain_.rend(); ++it) rev.push_back(pgeo::inverse(*it));
  return Projectivity(std::move(rev));
}

Projectivity Projectivity::then(const Projectivity& next) const {
  if (dst() != next.src())
    throw Error("CarrierMismatch", "composition needs matching carriers");
  std::vector<Perspectivity> all = chain_;
  all.insert(all.end(), next.chain_.begin(), next.chain_.end());
  return Projectivity(std::move(all));
}

HomPoint apply(const Projectivity& p, const HomPoint& x) {
  if (p.src().kind != CarrierKind::Range || p.dst().kind != CarrierKind::Range)
    throw Error("CarrierMismatch", "point application needs a range-to-range chain");
  HomPoint out;
  out.v = p.apply_raw(x.v);
  return out;
}

HomLine apply(const Projectivity& p, const HomLine& x) {
  if (p.src().kind != CarrierKind::Pencil || p.dst().kind != CarrierKind::Pencil)
    throw Error("CarrierMismatch", "line application needs a pencil-to-pencil chain");
  HomLine out;
  out.v = p.apply_raw(x.v);
  return out;
}

Projectivity dualize(const Projectivity& p) {
  std::vector<Perspectivity> chain;
  chain.reserve(p.length());
  for (const Perspectivity& step : p.chain())
    chain.push_back(Perspectivity{dualize(step.src), dualize(step.dst), step.via});
  return Projectivity(std::move(chain));
}

namespace {

// Generic two-perspectivity construction between distinct carriers of the same
// kind, written over raw triples so ranges and pencils share it by duality.
// The wording below speaks the range language: carrier bases are "lines",
// elements are "points".
Projectivity from_triples_distinct_same_kind(const Carrier& src, const std::array<Vec3, 3>& s_in,
                                             const Carrier& dst, const std::array<Vec3, 3>& d_in,
                                             unsigned variant) {
  auto persp = [&](const Carrier& from, const Carrier& to, const Vec3& via) {
    return Perspectivity{from, to, via};
  };

  // Anchor the construction on a pair avoiding the common element of the two
  // carriers: if the common element is among the data it occurs in at most one
  // source and one destination slot, so a clean anchor always exists (unless
  // the common element is fixed, which is the one-perspectivity case).
  std::array<Vec3, 3> s = s_in;
  std::array<Vec3, 3> d = d_in;
  Vec3 common = canon_cross(src.base, dst.base);
  int anchor = -1;
  for (int i = 0; i < 3 && anchor < 0; ++i)
    if (same_ray(s[i], d[i])) anchor = i;  // fixed element; necessarily the common one
  if (anchor < 0)
    for (int i = 0; i < 3 && anchor < 0; ++i)
      if (!same_ray(s[i], common) && !same_ray(d[i], common)) anchor = i;
  check_internal(anchor >= 0, "no usable anchor pair");
  std::swap(s[0], s[anchor]);
  std::swap(d[0], d[anchor]);

  const Vec3& p = s[0];
  const Vec3& q = s[1];
  const Vec3& r = s[2];
  const Vec3& p2 = d[0];
  const Vec3& q2 = d[1];
  const Vec3& r2 = d[2];

  if (same_ray(p, p2)) {
    // The common element is fixed, so the chain is a single perspectivity with
    // center q q2 . r r2.
    Vec3 center = canon_cross(q.cross(q2).eval(), Vec3(r.cross(r2)));
    check_internal(center.dot(src.base).sign() != 0 && center.dot(dst.base).sign() != 0,
                   "perspectivity center fell on a carrier");
    Projectivity result(std::vector<Perspectivity>{persp(src, dst, center)});
    return result;
  }

  // Generic case: project from a center A on the join of p and p2 onto an
  // auxiliary carrier n through p2, then fix up with a second center B.
  Vec3 pp2 = canon_cross(p, p2);
  SubspaceSweep centers(pp2);
  for (int attempts_a = 0; attempts_a < 512; ++attempts_a) {
    Vec3 a = centers.next();
    if (same_ray(a, p) || same_ray(a, p2)) continue;
    if (same_ray(a, q) || same_ray(a, r)) continue;
    if (a.dot(src.base).sign() == 0 || a.dot(dst.base).sign() == 0) continue;
    SubspaceSweep lines(p2);
    for (int attempts_n = 0; attempts_n < 512; ++attempts_n) {
      Vec3 n = lines.next();
      if (same_ray(n, dst.base) || same_ray(n, src.base)) continue;
      if (n.dot(a).sign() == 0) continue;
      Vec3 q1 = canon_cross(a.cross(q).eval(), n);
      Vec3 r1 = canon_cross(a.cross(r).eval(), n);
      check_internal(!same_ray(q1, q2) && !same_ray(r1, r2),
                     "intermediate image collides with a destination element");
      Vec3 b = canon_cross(q1.cross(q2).eval(), Vec3(r1.cross(r2)));
      if (b.dot(n).sign() == 0 || b.dot(dst.base).sign() == 0) continue;
      if (variant > 0) {
        --variant;
        continue;
      }
      Carrier aux{src.kind, n};
      return Projectivity({persp(src, aux, a), persp(aux, dst, b)});
    }
  }
  throw InternalError("auxiliary search for the three-element construction exhausted");
}

}  // namespace

Projectivity projectivity_from_triples(const Carrier& src, const std::array<Vec3, 3>& s_raw,
                                       const Carrier& dst, const std::array<Vec3, 3>& d_raw,
                                       unsigned variant) {
  std::array<Vec3, 3> s, d;
  for (int i = 0; i < 3; ++i) {
    s[i] = primitive_canonical(s_raw[i]);
    d[i] = primitive_canonical(d_raw[i]);
    require_on_carrier(src, s[i]);
    require_on_carrier(dst, d[i]);
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (same_ray(s[i], s[j]) || same_ray(d[i], d[j]))
        throw Error("DegenerateTriple", "the three elements must be pairwise apart");

  Projectivity result = [&]() -> Projectivity {
    if (src.kind == dst.kind && src == dst) {
      // Hop to an auxiliary carrier first, then come back with the generic
      // construction.
      TripleSpiral bases;
      for (int attempts = 0; attempts < 4096; ++attempts) {
        Vec3 n = bases.next();
        if (same_ray(n, src.base)) continue;
        TripleSpiral centers;
        Vec3 o;
        bool found = false;
        for (int c = 0; c < 4096 && !found; ++c) {
          o = centers.next();
          found = o.dot(src.base).sign() != 0 && o.dot(n).sign() != 0;
        }
        if (!found) continue;
        Carrier aux{src.kind, n};
        Perspectivity hop{src, aux, o};
        std::array<Vec3, 3> s1;
        for (int i = 0; i < 3; ++i) s1[i] = apply(hop, s[i]);
        Projectivity back = from_triples_distinct_same_kind(aux, s1, dst, d, variant);
        std::vector<Perspectivity> chain{hop};
        chain.insert(chain.end(), back.chain().begin(), back.chain().end());
        return Projectivity(std::move(chain));
      }
      throw InternalError("auxiliary carrier search exhausted");
    }
    if (src.kind == dst.kind)
      return from_triples_distinct_same_kind(src, s, dst, d, variant);

    // Mixed kinds: compose with a section so both triples live on carriers of
    // the source kind.
    TripleSpiral bases;
    for (int attempts = 0; attempts < 4096; ++attempts) {
      Vec3 n = bases.next();
      if (n.dot(dst.base).sign() == 0) continue;  // section needs base pair apart
      if (same_ray(n, src.base)) continue;
      Carrier aux{src.kind, n};
      Perspectivity cut = section(aux, dst);  // aux -> dst
      Perspectivity uncut = inverse(cut);     // dst -> aux
      std::array<Vec3, 3> d1;
      for (int i = 0; i < 3; ++i) d1[i] = apply(uncut, d[i]);
      Projectivity head = from_triples_distinct_same_kind(src, s, aux, d1, variant);
      std::vector<Perspectivity> chain = head.chain();
      chain.push_back(cut);
      return Projectivity(std::move(chain));
    }
    throw InternalError("section carrier search exhausted");
  }();

  for (int i = 0; i < 3; ++i)
    check_internal(same_ray(result.apply_raw(s[i]), d[i]),
                   "constructed chain misses a prescribed image");
  return result;
}

Projectivity projectivity_from_triples(const HomLine& src, const HomPoint& p, const HomPoint& q,
                                       const HomPoint& r, const HomLine& dst, const HomPoint& p2,
                                       const HomPoint& q2, const HomPoint& r2, unsigned variant) {
  return projectivity_from_triples(range_of(src), {p.v, q.v, r.v}, range_of(dst),
                                   {p2.v, q2.v, r2.v}, variant);
}

RangeParam default_param(const Carrier& c) {
  SubspaceSweep sweep(c.base);
  Vec3 b0 = sweep.next();
  Vec3 b1 = sweep.next();
  return RangeParam{c, b0, b1};
}

std::pair<Rat, Rat> param_of(const RangeParam& p, const Vec3& elem) {
  require_on_carrier(p.carrier, elem);
  return span_coefficients(p.b0, p.b1, elem);
}

Vec3 elem_at(const RangeParam& p, const Rat& s, const Rat& t) {
  return primitive_canonical((s * p.b0 + t * p.b1).eval());
}

Mat2 matrix_oracle(const Projectivity& p, const RangeParam& src_param,
                   const RangeParam& dst_param) {
  if (src_param.carrier != p.src() || dst_param.carrier != p.dst())
    throw Error("CarrierMismatch", "parameter frames do not match the chain carriers");
  Vec3 y0 = p.apply_raw(src_param.b0);
  Vec3 y1 = p.apply_raw(src_param.b1);
  Vec3 y2 = p.apply_raw(primitive_canonical((src_param.b0 + src_param.b1).eval()));
  auto [a, c] = param_of(dst_param, y0);
  auto [b, d] = param_of(dst_param, y1);
  auto [e, f] = param_of(dst_param, y2);
  Rat det = a * d - b * c;
  check_internal(det.sign() != 0, "images of basis elements are dependent");
  Rat lambda = (e * d - b * f) / det;
  Rat mu = (a * f - e * c) / det;
  check_internal(lambda.sign() != 0 && mu.sign() != 0, "unit element image is degenerate");
  Mat2 m;
  m << a * lambda, b * mu, c * lambda, d * mu;
  return m;
}

Mat2 mat2_canonical(const Mat2& m) { return primitive_canonical(m); }

bool is_scalar_matrix(const Mat2& m) {
  return m(0, 1).sign() == 0 && m(1, 0).sign() == 0 && m(0, 0) == m(1, 1);
}

FixedElements fixed_elements(const Projectivity& p) {
  if (p.src() != p.dst())
    throw Error("CarrierMismatch", "fixed elements need a self-map of one carrier");
  RangeParam frame = default_param(p.src());
  Mat2 m = matrix_oracle(p, frame, frame);
  if (is_scalar_matrix(m)) return FixedElements{FixedElements::Kind::Identity, {}};

  Rat tr = m(0, 0) + m(1, 1);
  Rat det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  Rat disc = tr * tr - Rat(4) * det;

  auto eigen_elem = [&](const Rat& eigenvalue) {
    // Kernel direction of (m - eigenvalue I); at least one row is nonzero here
    // because scalar matrices were dispatched above.
    Rat a = m(0, 0) - eigenvalue;
    Rat b = m(0, 1);
    Rat c = m(1, 0);
    Rat d = m(1, 1) - eigenvalue;
    Rat es, et;
    if (a.sign() != 0 || b.sign() != 0) {
      es = -b;
      et = a;
    } else {
      es = -d;
      et = c;
    }
    check_internal((a * es + b * et).sign() == 0 && (c * es + d * et).sign() == 0,
                   "eigenvector equation failed");
    return elem_at(frame, es, et);
  };

  int s = disc.sign();
  if (s < 0) return FixedElements{FixedElements::Kind::NoRealFixed, {}};
  if (s == 0) {
    Rat eigenvalue = tr / Rat(2);
    return FixedElements{FixedElements::Kind::One, {eigen_elem(eigenvalue)}};
  }
  Rat root;
  if (!rational_square_root(disc, root))
    return FixedElements{FixedElements::Kind::IrrationalPair, {}};
  Rat e1 = (tr - root) / Rat(2);
  Rat e2 = (tr + root) / Rat(2);
  return FixedElements{FixedElements::Kind::Two, {eigen_elem(e1), eigen_elem(e2)}};
}

bool is_involution(const Projectivity& p) {
  if (p.src() != p.dst())
    throw Error("CarrierMismatch", "involution test needs a self-map of one carrier");
  RangeParam frame = default_param(p.src());
  Mat2 m = matrix_oracle(p, frame, frame);
  Mat2 sq = m * m;
  return is_scalar_matrix(sq);
}

bool nonperspective(const Projectivity& p) {
  if (p.src().kind != p.dst().kind || p.src() == p.dst())
    throw Error("CarrierMismatch", "nonperspectivity is about distinct same-kind carriers");
  Vec3 common = canon_cross(p.src().base, p.dst().base);
  return !same_ray(p.apply_raw(common), common);
}

HomLine axis_of_homology(const Projectivity& p) {
  if (p.src().kind != CarrierKind::Range || p.dst().kind != CarrierKind::Range ||
      p.src() == p.dst())
    throw Error("CarrierMismatch", "axis of homology needs distinct ranges");
  Vec3 common = canon_cross(p.src().base, p.dst().base);
  Vec3 forward = p.apply_raw(common);
  if (same_ray(forward, common))
    throw Error("PerspectivityHasNoAxis", "the common point is fixed");
  Vec3 backward = p.inverse().apply_raw(common);
  HomPoint u, v;
  u.v = backward;
  v.v = forward;
  return join(u, v);
}

HomPoint cross_axis_point(const Projectivity& p, const HomPoint& a, const HomPoint& b) {
  HomLine axis = axis_of_homology(p);
  if (a == b) throw Error("CoincidentPoints", "cross-axis points must be apart");
  HomPoint a_img, b_img;
  a_img.v = p.apply_raw(a.v);
  b_img.v = p.apply_raw(b.v);
  HomPoint x = meet(join(a, b_img), join(b, a_img));
  check_internal(incident(x, axis), "cross-axis point missed the axis of homology");
  return x;
}

namespace {

// Columns scaled so the fourth point is the unit point of the frame.
Mat3 frame_matrix(const std::array<HomPoint, 4>& quad) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k)
        if (collinear(quad[i], quad[j], quad[k]))
          throw Error("DegenerateQuad", "three of the four points are collinear");
  Mat3 p;
  p.col(0) = quad[0].v;
  p.col(1) = quad[1].v;
  p.col(2) = quad[2].v;
  Vec3 lambda = adjugate(p) * quad[3].v;  // solves p * lambda ~ quad[3]
  Rat det = p.determinant();
  Mat3 out;
  for (int i = 0; i < 3; ++i) out.col(i) = (lambda(i) / det) * p.col(i);
  return out;
}

}  // namespace

Collineation collineation_from_quads(const std::array<HomPoint, 4>& src,
                                     const std::array<HomPoint, 4>& dst) {
  Mat3 ms = frame_matrix(src);
  Mat3 md = frame_matrix(dst);
  Mat3 t = primitive_canonical((md * adjugate(ms)).eval());
  Mat3 line_map = primitive_canonical(adjugate(t).transpose().eval());
  Collineation coll{t, line_map};
  for (int i = 0; i < 4; ++i)
    check_internal(apply(coll, src[i]) == dst[i], "collineation misses a frame point");
  return coll;
}

HomPoint apply(const Collineation& t, const HomPoint& p) { return HomPoint(t.point_map * p.v); }

HomLine apply(const Collineation& t, const HomLine& l) { return HomLine(t.line_map * l.v); }

}  // namespace pgeo
