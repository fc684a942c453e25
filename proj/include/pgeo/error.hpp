#ifndef PGEO_ERROR_HPP
#define PGEO_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace pgeo {

/// Construction error with a stable machine-readable code ("CoincidentPoints", ...).
/// These are the recoverable failures of geometric preconditions; the script
/// evaluator maps them to report entries.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

/// Violation of an internal cross-check (e.g. the Steiner representation and the
/// matrix cache of a conic disagree). Never recoverable; indicates a bug.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& message)
      : std::logic_error("internal check failed: " + message) {}
};

inline void check_internal(bool ok, const std::string& message) {
  if (!ok) throw InternalError(message);
}

}  // namespace pgeo

#endif
