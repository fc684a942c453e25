#include "pgeo/extension.hpp"

#include <map>

#include "pgeo/sample.hpp"
#include <sstream>

namespace pgeo {

namespace {

// Canonical value of the intersection of two lines: the whole line, one point,
// or nothing. Set equality of intersections reduces to equality of these.
template <class F>
struct IsectVal {
  enum class Kind { Whole, Point, Empty } kind;
  AffPoint<F> at{};
  AffLine<F> whole{};

  friend bool operator==(const IsectVal& a, const IsectVal& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == Kind::Point) return a.at == b.at;
    if (a.kind == Kind::Whole) return a.whole == b.whole;
    return true;
  }
};

template <class F>
IsectVal<F> isect(const AffLine<F>& l, const AffLine<F>& m) {
  if (l == m) return {IsectVal<F>::Kind::Whole, {}, l};
  if (parallel(l, m)) return {IsectVal<F>::Kind::Empty, {}, {}};
  return {IsectVal<F>::Kind::Point, intersect(l, m), {}};
}

}  // namespace

template <class F>
std::set<AffLine<F>> heyting_point(const std::vector<AffLine<F>>& universe, const AffLine<F>& l,
                                   const AffLine<F>& m) {
  if (l == m) throw Error("IdenticalArguments", "heyting point needs distinct lines");
  IsectVal<F> lm = isect(l, m);
  std::set<AffLine<F>> out;
  for (const AffLine<F>& n : universe)
    if (isect(n, l) == lm || isect(n, m) == lm) out.insert(n);
  return out;
}

template <class F>
std::set<std::size_t> heyting_line(const std::vector<std::set<AffLine<F>>>& points, std::size_t a,
                                   std::size_t b) {
  if (points[a] == points[b]) throw Error("IdenticalArguments", "heyting line needs distinct points");
  auto cap = [](const std::set<AffLine<F>>& x, const std::set<AffLine<F>>& y) {
    std::set<AffLine<F>> out;
    for (const auto& e : x)
      if (y.count(e)) out.insert(e);
    return out;
  };
  std::set<AffLine<F>> ab = cap(points[a], points[b]);
  std::set<std::size_t> out;
  for (std::size_t q = 0; q < points.size(); ++q)
    if (cap(points[q], points[a]) == ab || cap(points[q], points[b]) == ab) out.insert(q);
  return out;
}

template <int P>
HeytingReport verify_heyting() {
  using F = Fp<P>;
  std::vector<AffLine<F>> universe = all_lines<P>();

  std::vector<std::set<AffLine<F>>> points;
  for (std::size_t i = 0; i < universe.size(); ++i)
    for (std::size_t j = i + 1; j < universe.size(); ++j) {
      auto hp = heyting_point(universe, universe[i], universe[j]);
      bool seen = false;
      for (const auto& other : points)
        if (other == hp) seen = true;
      if (!seen) points.push_back(std::move(hp));
    }

  std::vector<std::set<std::size_t>> lines;
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      auto hl = heyting_line(points, a, b);
      bool seen = false;
      for (const auto& other : lines)
        if (other == hl) seen = true;
      if (!seen) lines.push_back(std::move(hl));
    }

  HeytingReport rep;
  rep.points = points.size();
  rep.lines = lines.size();
  rep.cpp = true;
  for (std::size_t a = 0; a < lines.size(); ++a)
    for (std::size_t b = a + 1; b < lines.size(); ++b) {
      bool shared = false;
      for (std::size_t q : lines[a])
        if (lines[b].count(q)) shared = true;
      if (!shared) rep.cpp = false;
    }
  return rep;
}

RationalExtensionReport verify_rational_extension(std::size_t trials, std::uint64_t seed,
                                                  long long bound) {
  using F = Rat;
  Rng rng(seed);
  RationalExtensionReport rep;
  rep.trials = trials;

  auto rand_rat = [&] { return Rat(rng.range(-bound, bound)); };
  auto rand_point = [&] { return AffPoint<F>{rand_rat(), rand_rat()}; };
  auto rand_line = [&]() -> AffLine<F> {
    for (;;) {
      Rat a = rand_rat(), b = rand_rat(), c = rand_rat();
      if (a.sign() != 0 || b.sign() != 0) return AffLine<F>::of(a, b, c);
    }
  };
  auto rand_epoint = [&]() -> EPoint<F> {
    if (rng.chance(1, 4)) return EPoint<F>::parallel(rand_line().direction());
    return EPoint<F>::point(rand_point());
  };
  auto rand_eline = [&]() -> ELine<F> {
    if (rng.chance(1, 6)) return ELine<F>::infinity();
    return ELine<F>::extended(rand_line());
  };

  for (std::size_t i = 0; i < trials; ++i) {
    EPoint<F> a = rand_epoint();
    EPoint<F> b = rand_epoint();
    if (a != b) {
      ELine<F> l = join_epoints(a, b);
      if (!e_incident(a, l) || !e_incident(b, l)) ++rep.join_failures;
    }
    ELine<F> l1 = rand_eline();
    ELine<F> l2 = rand_eline();
    EPoint<F> m = meet_elines(l1, l2);
    if (!e_incident(m, l1) || !e_incident(m, l2)) ++rep.meet_failures;
    EPoint<F> self = meet_elines(l1, l1);  // SCPP: no distinctness needed
    if (!e_incident(self, l1)) ++rep.scpp_failures;

    EPoint<F> c = rand_epoint();
    if (a != b && !(c != a || c != b)) ++rep.cotransitivity_failures;
  }
  return rep;
}

LlpoProbe brouwerian_probe(const Rat& alpha) {
  LlpoProbe probe;
  probe.alpha = alpha;
  probe.lambda = HomLine(pos_part(alpha), 0, 1);
  probe.mu = HomLine(0, neg_part(alpha), 1);
  std::ostringstream os;
  os << "alpha=" << to_string(alpha) << " lambda=" << to_string(probe.lambda)
     << " mu=" << to_string(probe.mu) << " -> ";
  if (probe.lambda == probe.mu) {
    probe.identical_lines = true;
    os << "IdenticalLines";
  } else {
    probe.common = meet(probe.lambda, probe.mu);
    os << "meet " << to_string(*probe.common);
  }
  probe.summary = os.str();
  return probe;
}

CotransProbe cotransitivity_probe(const Rat& c) {
  using F = Rat;
  CotransProbe probe;
  probe.c = c;

  AffLine<F> x_axis = AffLine<F>::of(0, 1, 0);  // y = 0
  AffLine<F> y_axis = AffLine<F>::of(1, 0, 0);  // x = 0
  VirtualLine<F> p = c.sign() == 0
                         ? VirtualLine<F>::inhabited(x_axis, "{(t,0)} since c = 0")
                         : VirtualLine<F>::inhabited(y_axis, "{(0,t)} since c != 0");
  probe.virtual_line = p.origin;

  EPoint<F> gamma = phi(p, p).pencil;
  EPoint<F> horizontal = EPoint<F>::parallel(x_axis.direction());
  EPoint<F> vertical = EPoint<F>::parallel(y_axis.direction());
  probe.gamma = to_string(gamma);
  probe.apart_from_horizontal = gamma != horizontal;
  probe.apart_from_vertical = gamma != vertical;
  probe.branch = probe.apart_from_horizontal ? "apart from l0* e-point (horizontal class)"
                                             : "apart from m0* e-point (vertical class)";

  std::ostringstream os;
  os << "c=" << to_string(c) << " p=" << probe.virtual_line << " gamma=" << probe.gamma << " -> "
     << probe.branch;
  probe.summary = os.str();
  return probe;
}

template std::set<AffLine<Rat>> heyting_point<Rat>(const std::vector<AffLine<Rat>>&,
                                                   const AffLine<Rat>&, const AffLine<Rat>&);
template std::set<AffLine<Fp<3>>> heyting_point<Fp<3>>(const std::vector<AffLine<Fp<3>>>&,
                                                       const AffLine<Fp<3>>&,
                                                       const AffLine<Fp<3>>&);
template std::set<AffLine<Fp<5>>> heyting_point<Fp<5>>(const std::vector<AffLine<Fp<5>>>&,
                                                       const AffLine<Fp<5>>&,
                                                       const AffLine<Fp<5>>&);
template std::set<std::size_t> heyting_line<Fp<3>>(const std::vector<std::set<AffLine<Fp<3>>>>&,
                                                   std::size_t, std::size_t);
template std::set<std::size_t> heyting_line<Fp<5>>(const std::vector<std::set<AffLine<Fp<5>>>>&,
                                                   std::size_t, std::size_t);
template ExtensionReport verify_extension<3>();
template ExtensionReport verify_extension<5>();
template HeytingReport verify_heyting<3>();
template HeytingReport verify_heyting<5>();

}  // namespace pgeo
