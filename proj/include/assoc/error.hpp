#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace assoc {

enum class ErrorKind {
  invalid_input,
  out_of_range,
  not_present,
  capacity,
  convergence,
};

const char* to_string(ErrorKind kind) noexcept;

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when an iterative eigensolver exhausts its budget. Carries the best
/// estimate seen so callers can still report something.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double estimate, double residual,
                   int iterations);
  double estimate() const noexcept { return estimate_; }
  double residual() const noexcept { return residual_; }
  int iterations() const noexcept { return iterations_; }

 private:
  double estimate_;
  double residual_;
  int iterations_;
};

[[noreturn]] void throw_invalid(const std::string& what);
[[noreturn]] void throw_range(const std::string& what);
[[noreturn]] void throw_capacity(const std::string& what);

/// Size ceilings for the expensive operations. Every field can be raised by the
/// caller; the CLI reads ASSOC_MAX_N from the environment.
struct Limits {
  int max_n = 14;
  std::size_t dense_max_vertices = 5000;
  std::size_t isomorphism_max_vertices = 5000;
  std::size_t product_max_vertices = 5'000'000;
  std::size_t oracle_max_vertices = 20000;
};

/// Polygon sizes above this do not fit the 128-bit diagonal mask.
inline constexpr int kHardMaxN = 16;

}  // namespace assoc
