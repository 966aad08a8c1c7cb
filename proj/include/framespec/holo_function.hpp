#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "detail/polyops.hpp"

namespace framespec {

// A holomorphic function given either as a polynomial or as a power series
// about the origin. A series carries a coefficient callback together with a
// tail majorant: tail_bound(d, r) must dominate the sum of |a_j| r^j over
// j > d. That majorant is what makes truncation to a polynomial certifiable.
class HoloFunction {
 public:
  using CoeffFn = std::function<cx(std::size_t)>;
  using TailFn = std::function<double(std::size_t, double)>;

  static HoloFunction polynomial(std::vector<cx> coeffs) {
    if (coeffs.empty()) throw ValidationError("empty coefficient list for polynomial");
    HoloFunction f;
    f.coeffs_ = std::move(coeffs);
    f.name_ = "polynomial";
    return f;
  }

  static HoloFunction power_series(CoeffFn coeff, TailFn tail_bound, double convergence_radius,
                                   std::string name = "power series") {
    if (!coeff || !tail_bound) throw ValidationError("series needs coefficient and tail callbacks");
    if (!(convergence_radius > 0.0)) {
      throw ValidationError("series convergence radius must be positive");
    }
    HoloFunction f;
    f.coeff_ = std::move(coeff);
    f.tail_ = std::move(tail_bound);
    f.radius_ = convergence_radius;
    f.name_ = std::move(name);
    return f;
  }

  // the exponential, entire, with tail sum at radius r below e^r r^{d+1}/(d+1)!
  static HoloFunction exp_series() {
    return power_series(
        [](std::size_t j) {
          double fact = 1.0;
          for (std::size_t k = 2; k <= j; ++k) fact *= static_cast<double>(k);
          return cx(1.0 / fact);
        },
        [](std::size_t d, double r) {
          double term = std::exp(r);
          for (std::size_t k = 1; k <= d + 1; ++k) term *= r / static_cast<double>(k);
          return term;
        },
        std::numeric_limits<double>::infinity(), "exponential series");
  }

  // sum of z^j, converging to 1/(1-z) on the open unit disk
  static HoloFunction geometric_series() {
    return power_series([](std::size_t) { return cx(1.0); },
                        [](std::size_t d, double r) {
                          double p = r;  // builds r^{d+1}
                          for (std::size_t k = 1; k <= d; ++k) p *= r;
                          return p / (1.0 - r);
                        },
                        1.0, "geometric series");
  }

  bool is_polynomial() const { return !coeffs_.empty(); }

  const std::vector<cx>& coefficients() const {
    if (!is_polynomial()) throw DomainError("series form has no finite coefficient list");
    return coeffs_;
  }

  double convergence_radius() const {
    return is_polynomial() ? std::numeric_limits<double>::infinity() : radius_;
  }

  cx evaluate(cx z) const {
    if (is_polynomial()) return detail::poly_eval(coeffs_, z);
    const double az = std::abs(z);
    if (!(az < radius_)) {
      throw DomainError("evaluation point lies outside the series convergence disk");
    }
    cx acc(0.0);
    cx zp(1.0);
    for (std::size_t j = 0; j < kSeriesCap; ++j) {
      acc += coeff_(j) * zp;
      zp *= z;
      if (tail_(j, az) <= 1e-15 * std::max(1.0, std::abs(acc))) return acc;
    }
    throw ConvergenceError("series evaluation needs too many terms", std::abs(acc), tail_(kSeriesCap, az));
  }

  // Smallest degree d whose tail majorant at the given radius is at most eps,
  // returned with the truncated coefficients a_0..a_d.
  struct Truncation {
    std::vector<cx> coeffs;
    double tail_bound = 0.0;
  };

  Truncation truncate(double radius, double eps) const {
    if (!(radius >= 0.0)) throw ValidationError("truncation radius must be nonnegative");
    if (!(eps > 0.0)) throw ValidationError("truncation tolerance must be positive");
    if (is_polynomial()) return {coeffs_, 0.0};
    if (!(radius < radius_)) {
      throw DomainError("truncation radius reaches the series convergence boundary");
    }
    for (std::size_t d = 0; d < kSeriesCap; ++d) {
      const double t = tail_(d, radius);
      if (t <= eps) {
        std::vector<cx> out(d + 1);
        for (std::size_t j = 0; j <= d; ++j) out[j] = coeff_(j);
        return {std::move(out), t};
      }
    }
    throw ConvergenceError("series tail does not fall below the tolerance by the degree cap",
                           0.0, tail_(kSeriesCap, radius));
  }

  std::string describe() const {
    if (is_polynomial()) {
      std::ostringstream os;
      os << "polynomial of degree " << detail::poly_trim(coeffs_).size() - 1;
      return os.str();
    }
    return name_;
  }

 private:
  static constexpr std::size_t kSeriesCap = 4096;

  HoloFunction() = default;

  std::vector<cx> coeffs_;
  CoeffFn coeff_;
  TailFn tail_;
  double radius_ = 0.0;
  std::string name_;
};

}  // namespace framespec
