#pragma once

#include <stdexcept>
#include <string>

namespace crx {

// Error taxonomy shared by all modules. Each kind corresponds to one
// failure class surfaced through the library API and the CLI exit path.
enum class ErrorKind {
  input,        // malformed or non-finite input
  numeric,      // iteration failed to converge within its budget
  domain,       // spectrum outside a function's stated domain
  singularity,  // resolvent requested too close to the spectrum
  containment,  // neighborhood does not contain the numerical range
  contour,      // contour fails to separate the targeted spectrum
  consistency,  // numerical classification contradicts an exact dichotomy
  degeneracy,   // similarity numerically singular
  internal,     // invariant violated; indicates a bug
  io            // file read/write failure
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::input: return "input-error";
    case ErrorKind::numeric: return "numeric-error";
    case ErrorKind::domain: return "domain-error";
    case ErrorKind::singularity: return "singularity-error";
    case ErrorKind::containment: return "containment-error";
    case ErrorKind::contour: return "contour-error";
    case ErrorKind::consistency: return "consistency-error";
    case ErrorKind::degeneracy: return "degeneracy-error";
    case ErrorKind::internal: return "internal-error";
    case ErrorKind::io: return "io-error";
  }
  return "error";
}

}  // namespace crx
