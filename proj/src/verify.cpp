#include "pgeo/verify.hpp"

#include <functional>
#include <sstream>

namespace pgeo {

namespace {

struct Suite {
  Rng rng;
  long long bound;
  std::vector<AxiomCheck> checks;

  Suite(std::uint64_t seed, long long bound) : rng(seed), bound(bound) {}

  void run(const std::string& name, std::size_t trials, const std::function<bool()>& one) {
    AxiomCheck c{name, trials, 0};
    for (std::size_t i = 0; i < trials; ++i)
      if (!one()) ++c.failures;
    checks.push_back(std::move(c));
  }
};

}  // namespace

AxiomSuiteResult run_axiom_suite(std::size_t trials, std::uint64_t seed, long long bound) {
  Suite s(seed, bound);
  Rng& rng = s.rng;
  const long long b = bound;

  auto fresh_pair = [&] {
    HomPoint p = random_point(rng, b);
    HomPoint q = random_point_apart(rng, b, p);
    return std::pair{p, q};
  };

  s.run("apartness: irreflexive, symmetric, tight", trials, [&] {
    HomPoint p = random_point(rng, b);
    if (apart(p, p)) return false;
    auto [x, y] = fresh_pair();
    if (apart(x, y) != apart(y, x)) return false;
    // tightness: a rescaled representative is not apart and is equal
    HomPoint scaled;
    scaled.v = primitive_canonical((Rat(7) * p.v).eval());
    return !apart(p, scaled) && p == scaled;
  });

  s.run("apartness: cotransitivity witness (points, lines)", trials, [&] {
    auto [p, q] = fresh_pair();
    HomPoint r = random_point(rng, b);
    CotransSide side = cotransitive_witness(p, q, r);
    bool point_ok = side == CotransSide::Left ? apart(r, p) : apart(r, q);
    HomLine l = random_line(rng, b);
    HomLine m = l;
    while (m == l) m = random_line(rng, b);
    HomLine n = random_line(rng, b);
    CotransSide lside = cotransitive_witness(l, m, n);
    bool line_ok = lside == CotransSide::Left ? apart(n, l) : apart(n, m);
    return point_ok && line_ok;
  });

  s.run("join of two distinct points exists and is unique", trials, [&] {
    auto [p, q] = fresh_pair();
    HomLine l = join(p, q);
    if (!incident(p, l) || !incident(q, l)) return false;
    HomPoint r = random_point_on_line(rng, b, l);
    if (r != p && join(p, r) != l) return false;
    if (r != q && join(q, r) != l) return false;
    return true;
  });

  s.run("meet of two distinct lines exists and is unique", trials, [&] {
    HomLine l = random_line(rng, b);
    HomLine m = l;
    while (m == l) m = random_line(rng, b);
    HomPoint o = meet(l, m);
    if (!incident(o, l) || !incident(o, m)) return false;
    HomLine n = random_line_through(rng, b, o);
    if (n != l && meet(l, n) != o) return false;
    return true;
  });

  s.run("every line carries at least six distinct points", trials, [&] {
    HomLine l = random_line(rng, b);
    std::array<HomPoint, 6> pts;
    for (int i = 0; i < 6; ++i) {
      pts[i] = point_on_line(l, static_cast<std::size_t>(i));
      if (!incident(pts[i], l)) return false;
    }
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        if (pts[i] == pts[j]) return false;
    return true;
  });

  s.run("a point on one line and outside another forces line apartness", trials, [&] {
    HomLine m = random_line(rng, b);
    HomPoint p = random_point(rng, b);
    while (incident(p, m)) p = random_point(rng, b);
    HomLine l = random_line_through(rng, b, p);
    return apart(l, m);
  });

  s.run("dually: a line through one point avoiding another forces point apartness", trials, [&] {
    HomPoint q = random_point(rng, b);
    HomLine l = random_line(rng, b);
    while (incident(q, l)) l = random_line(rng, b);
    HomPoint p = random_point_on_line(rng, b, l);
    return apart(p, q);
  });

  s.run("not-outside coincides with incidence", trials, [&] {
    HomLine l = random_line(rng, b);
    HomPoint on = random_point_on_line(rng, b, l);
    HomPoint any = random_point(rng, b);
    bool on_ok = !outside(on, l) && incident(on, l);
    bool any_ok = outside(any, l) == !incident(any, l);
    return on_ok && any_ok;
  });

  s.run("two-line outside witness asserts a true branch", trials, [&] {
    HomLine l = random_line(rng, b);
    HomLine m = l;
    while (m == l) m = random_line(rng, b);
    HomPoint o = meet(l, m);
    HomPoint p = random_point(rng, b);
    while (p == o) p = random_point(rng, b);
    C7Side side = c7_witness(l, m, p);
    return side == C7Side::OutsideL ? outside(p, l) : outside(p, m);
  });

  s.run("two-point outside witness asserts a true branch", trials, [&] {
    auto [a, q] = fresh_pair();
    HomLine ab = join(a, q);
    HomLine l = random_line(rng, b);
    while (l == ab) l = random_line(rng, b);
    C7Side side = c7_witness(a, q, l);
    return side == C7Side::OutsideL ? outside(a, l) : outside(q, l);
  });

  s.run("join/meet adjunction", trials, [&] {
    auto [p, q] = fresh_pair();
    HomLine l = random_line(rng, b);
    HomLine pq = join(p, q);
    if (pq != l && !incident(meet(pq, l), l)) return false;
    HomLine m = random_line(rng, b);
    while (m == l) m = random_line(rng, b);
    HomPoint o = meet(l, m);
    if (o != p && !incident(p, join(o, p))) return false;
    return true;
  });

  s.run("outside means apart from every line of the pencil", trials, [&] {
    HomLine l = random_line(rng, b);
    HomPoint p = random_point(rng, b);
    if (outside(p, l)) {
      for (int i = 0; i < 5; ++i)
        if (!apart(line_through_point(p, static_cast<std::size_t>(i)), l)) return false;
      return true;
    }
    // p on l: the pencil of p contains l itself
    HomLine witness = l;
    return !apart(witness, l);
  });

  s.run("duality involution", trials, [&] {
    HomPoint p = random_point(rng, b);
    HomLine l = random_line(rng, b);
    return dualize(dualize(p)) == p && dualize(dualize(l)) == l;
  });

  AxiomSuiteResult result;
  result.seed = seed;
  result.bound = bound;
  result.trials = trials;
  result.checks = std::move(s.checks);
  return result;
}

std::string to_text(const AxiomSuiteResult& r) {
  std::ostringstream os;
  os << "axiom suite: trials=" << r.trials << " seed=" << r.seed << " bound=" << r.bound << "\n";
  for (const auto& c : r.checks)
    os << (c.failures ? "FAIL " : "pass ") << c.name << " (" << (c.runs - c.failures) << "/"
       << c.runs << ")\n";
  os << (r.all_passed() ? "all axiom checks passed" : "AXIOM CHECKS FAILED") << "\n";
  return os.str();
}

}  // namespace pgeo
