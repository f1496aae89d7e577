#ifndef COXVAL_ERRORS_HPP
#define COXVAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace coxval {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed user input: bad JSON shape, out-of-range indices, unsupported
// rank/type, dimension mismatches. CLI maps this to exit code 2.
struct input_error : error {
  explicit input_error(const std::string& what) : error(what) {}
};

// Structurally valid input that the requested operation rejects
// (non-matroid fed to min_w, polytope failing the edge-root precondition,
// mismatched invariant kinds). CLI maps this to exit code 1.
struct domain_error : error {
  explicit domain_error(const std::string& what) : error(what) {}
};

// Input exceeds the documented exact-computation limits.
struct capacity_error : domain_error {
  explicit capacity_error(const std::string& what) : domain_error(what) {}
};

// An internal cross-check failed: two provably-equal computations disagreed.
// This always indicates a bug, never bad input.
struct consistency_error : error {
  explicit consistency_error(const std::string& what) : error(what) {}
};

}  // namespace coxval

#endif
