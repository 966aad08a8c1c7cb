#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace framespec {

inline constexpr const char* kVersion = "0.1.0";

using cx = std::complex<double>;

// Base class for everything this library throws.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad arguments or an unsupported construction; message lists every problem found.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> problems)
      : Error(join(problems)), problems_(std::move(problems)) {}
  explicit ValidationError(const std::string& problem)
      : ValidationError(std::vector<std::string>{problem}) {}
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  static std::string join(const std::vector<std::string>& ps) {
    std::string out;
    for (const auto& p : ps) {
      if (!out.empty()) out += "; ";
      out += p;
    }
    return out;
  }
  std::vector<std::string> problems_;
};

// Input outside the mathematical domain of an operation (evaluation beyond a
// radius of convergence, spectrum not contained in a function's domain, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// An iteration stopped without meeting its target accuracy. Carries the best
// estimate reached and the residual that certifies how far off it may be.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double best_estimate, double residual)
      : Error(what), best_estimate_(best_estimate), residual_(residual) {}
  double best_estimate() const { return best_estimate_; }
  double residual() const { return residual_; }

 private:
  double best_estimate_;
  double residual_;
};

// Two independent computations of the same quantity disagreed.
class MismatchError : public Error {
 public:
  MismatchError(const std::string& what, long count_a, long count_b)
      : Error(what), count_a_(count_a), count_b_(count_b) {}
  long count_a() const { return count_a_; }
  long count_b() const { return count_b_; }

 private:
  long count_a_;
  long count_b_;
};

struct KernelOptions {
  double tol = 1e-10;
  int max_iter = 10000;
  // Residual acceptance factor for polynomial roots, relative to sum_j |a_j| |z|^j.
  double root_residual_factor = 1e-7;
  // Leading coefficients smaller than this are treated as underflow.
  double leading_underflow = 1e-280;
};

}  // namespace framespec
