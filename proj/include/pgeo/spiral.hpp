#ifndef PGEO_SPIRAL_HPP
#define PGEO_SPIRAL_HPP

#include <array>
#include <cstdint>

#include "pgeo/linalg.hpp"

namespace pgeo {

/// Deterministic enumeration of primitive canonical integer triples, ordered by
/// max-abs coordinate, then lexicographically. Every auxiliary-element search
/// in the library draws candidates from this order, so constructions that admit
/// free choices are reproducible.
class TripleSpiral {
 public:
  TripleSpiral() = default;

  Vec3 next() {
    for (;;) {
      if (!advance_raw()) {
        ++shell_;
        a_ = -shell_;
        b_ = -shell_;
        c_ = -shell_;
        fresh_ = true;
      }
      if (a_ == 0 && b_ == 0 && c_ == 0) continue;
      // only shell members (max-abs exactly shell_)
      if (absval(a_) != shell_ && absval(b_) != shell_ && absval(c_) != shell_) continue;
      Vec3 v = vec3(Rat(a_), Rat(b_), Rat(c_));
      if (!is_primitive_canonical(v)) continue;
      return v;
    }
  }

 private:
  static std::int64_t absval(std::int64_t x) { return x < 0 ? -x : x; }

  bool advance_raw() {
    if (fresh_) {
      fresh_ = false;
      return true;
    }
    if (c_ < shell_) {
      ++c_;
      return true;
    }
    c_ = -shell_;
    if (b_ < shell_) {
      ++b_;
      return true;
    }
    b_ = -shell_;
    if (a_ < shell_) {
      ++a_;
      return true;
    }
    return false;
  }

  std::int64_t shell_ = 0;
  std::int64_t a_ = 0, b_ = 0, c_ = 0;
  bool fresh_ = false;
};

/// Same ordering over primitive sign-canonical integer pairs (s, t); drives the
/// enumeration of the elements of a carrier through its two generators.
class PairSpiral {
 public:
  std::array<std::int64_t, 2> next() {
    for (;;) {
      if (!advance_raw()) {
        ++shell_;
        s_ = -shell_;
        t_ = -shell_;
        fresh_ = true;
      }
      if (s_ == 0 && t_ == 0) continue;
      if (absval(s_) != shell_ && absval(t_) != shell_) continue;
      if (s_ < 0 || (s_ == 0 && t_ < 0)) continue;  // sign-canonical
      if (gcd64(absval(s_), absval(t_)) != 1) continue;
      return {s_, t_};
    }
  }

 private:
  static std::int64_t absval(std::int64_t x) { return x < 0 ? -x : x; }
  static std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    while (b != 0) {
      std::int64_t t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  bool advance_raw() {
    if (fresh_) {
      fresh_ = false;
      return true;
    }
    if (t_ < shell_) {
      ++t_;
      return true;
    }
    t_ = -shell_;
    if (s_ < shell_) {
      ++s_;
      return true;
    }
    return false;
  }

  std::int64_t shell_ = 0;
  std::int64_t s_ = 0, t_ = 0;
  bool fresh_ = false;
};

}  // namespace pgeo

#endif
