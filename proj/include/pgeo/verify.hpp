#ifndef PGEO_VERIFY_HPP
#define PGEO_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pgeo/sample.hpp"

namespace pgeo {

struct AxiomCheck {
  std::string name;
  std::size_t runs = 0;
  std::size_t failures = 0;
};

struct AxiomSuiteResult {
  std::uint64_t seed = 0;
  long long bound = 0;
  std::size_t trials = 0;
  std::vector<AxiomCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (c.failures) return false;
    return true;
  }
};

/// Randomized verification of the incidence axioms and their duals: joins and
/// meets with uniqueness, point counts on lines, the apartness axioms with
/// witness correctness, the outside-relation laws, and the two-line witness.
AxiomSuiteResult run_axiom_suite(std::size_t trials, std::uint64_t seed, long long bound);

std::string to_text(const AxiomSuiteResult& r);

}  // namespace pgeo

#endif
