#pragma once

// Error hierarchy shared across the library.  The CLI maps these to its
// exit-code contract: infeasible -> 2, numeric certification -> 3,
// parse/config -> 4.

#include <stdexcept>
#include <string>

namespace confsect {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A requested (n, m) or parameter combination that no implemented
// construction covers (or that a theorem rules out).
class InfeasibleError : public Error {
 public:
  explicit InfeasibleError(const std::string& what) : Error(what) {}
};

// A numerical certificate failed: root residuals, separation, tracking
// margins.  Never silently degraded.
class NumericError : public Error {
 public:
  explicit NumericError(const std::string& what) : Error(what) {}
};

// Malformed input: braid-word syntax, JSON shape, invalid arguments.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace confsect
