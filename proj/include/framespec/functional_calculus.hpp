#pragma once

#include <iomanip>
#include <sstream>
#include <utility>
#include <vector>

#include "core.hpp"
#include "holo_function.hpp"
#include "operators.hpp"

namespace framespec {

namespace detail {

// Identifies the (operator, function) pair a result was produced from, so
// downstream stages can refuse to combine artifacts of different pipelines.
inline std::string pipeline_token(const OperatorModel& t, const HoloFunction& f) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << t.describe() << " ; " << f.describe();
  if (f.is_polynomial()) {
    for (const cx& a : f.coefficients()) os << ' ' << a.real() << ' ' << a.imag();
  } else {
    os << " ; radius " << f.convergence_radius();
  }
  return os.str();
}

}  // namespace detail

// f(T) plus the bookkeeping of how it was formed. Polynomials apply exactly.
// A power series is truncated at the operator's norm bound, and the unused
// tail is certified: the operator built here differs from the true f(T) by
// at most tail_bound in operator norm.
struct CalculusResult {
  OperatorModel op;
  std::vector<cx> coefficients;  // the polynomial actually applied
  bool truncated = false;
  double tail_bound = 0.0;
  double truncation_radius = 0.0;
  std::string provenance;
};

inline CalculusResult apply_function(const HoloFunction& f, const OperatorModel& t,
                                     double series_eps = 1e-12) {
  auto token = detail::pipeline_token(t, f);
  if (f.is_polynomial()) {
    auto coeffs = f.coefficients();
    return {OperatorModel::polynomial_of(coeffs, t), std::move(coeffs), false, 0.0, 0.0,
            std::move(token)};
  }
  const double radius = t.norm_bound();
  auto tr = f.truncate(radius, series_eps);
  return {OperatorModel::polynomial_of(tr.coeffs, t), std::move(tr.coeffs), true, tr.tail_bound,
          radius, std::move(token)};
}

}  // namespace framespec
