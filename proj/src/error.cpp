#include "assoc/error.hpp"

namespace assoc {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::out_of_range: return "range";
    case ErrorKind::not_present: return "not-present";
    case ErrorKind::capacity: return "capacity";
    case ErrorKind::convergence: return "convergence";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + " error: " + what),
      kind_(kind) {}

ConvergenceError::ConvergenceError(const std::string& what, double estimate,
                                   double residual, int iterations)
    : Error(ErrorKind::convergence, what),
      estimate_(estimate),
      residual_(residual),
      iterations_(iterations) {}

void throw_invalid(const std::string& what) {
  throw Error(ErrorKind::invalid_input, what);
}

void throw_range(const std::string& what) {
  throw Error(ErrorKind::out_of_range, what);
}

void throw_capacity(const std::string& what) {
  throw Error(ErrorKind::capacity, what);
}

}  // namespace assoc
