#ifndef PGEO_SAMPLE_HPP
#define PGEO_SAMPLE_HPP

#include <cstdint>
#include <random>

#include "pgeo/conic.hpp"
#include "pgeo/plane.hpp"
#include "pgeo/projectivity.hpp"

namespace pgeo {

/// Seeded generator with self-contained integer draws (the standard
/// distributions are implementation-defined, which would break golden outputs).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform integer in [lo, hi], rejection-sampled from the raw stream.
  long long range(long long lo, long long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t draw;
    do {
      draw = gen_();
    } while (draw >= limit);
    return lo + static_cast<long long>(draw % span);
  }

  bool chance(int num, int den) { return range(1, den) <= num; }

 private:
  std::mt19937_64 gen_;
};

/// Point with coordinates in [-bound, bound].
HomPoint random_point(Rng& rng, long long bound);
HomLine random_line(Rng& rng, long long bound);
HomPoint random_point_apart(Rng& rng, long long bound, const HomPoint& avoid);
HomPoint random_point_on_line(Rng& rng, long long bound, const HomLine& l);
HomLine random_line_through(Rng& rng, long long bound, const HomPoint& p);

Triangle random_triangle(Rng& rng, long long bound);

struct PerspectivePair {
  Triangle t1, t2;
  HomPoint center;
};

/// Two triangles perspective from a random center, with all side/vertex
/// nondegeneracy conditions satisfied.
PerspectivePair random_perspective_pair(Rng& rng, long long bound);

/// Three pairwise-apart points on a line.
std::array<HomPoint, 3> random_triple_on_line(Rng& rng, long long bound, const HomLine& l);

/// Nondegenerate conic through five random points.
Conic random_conic(Rng& rng, long long bound);

/// Chain between the ranges of two distinct random lines built from random
/// triples; nonperspective unless allow_perspective.
Projectivity random_range_projectivity(Rng& rng, long long bound, bool require_nonperspective);

}  // namespace pgeo

#endif
