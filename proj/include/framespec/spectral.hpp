#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <vector>

#include "core.hpp"
#include "detail/polyops.hpp"
#include "numkernel.hpp"
#include "operators.hpp"
#include "spectrum_region.hpp"

namespace framespec {

// Winding number of the polynomial's image of the circle |z - center| = radius
// about the origin. Sampling doubles until consecutive image points turn by
// less than a quarter circle each; a floor on |p(z)| guards against contours
// that run through (or numerically graze) a zero.
inline int winding_number(const std::vector<cx>& poly, cx center, double radius,
                          const KernelOptions& opts = {}) {
  (void)opts;
  if (poly.empty()) throw ValidationError("empty polynomial for winding number");
  if (!(radius > 0.0)) throw ValidationError("winding contour radius must be positive");
  double scale = 0.0, rp = 1.0;
  const double reach = std::abs(center) + radius;
  for (const cx& a : poly) {
    scale += std::abs(a) * rp;
    rp *= reach;
  }
  const double floor_val = 10.0 * std::numeric_limits<double>::epsilon() * scale;
  for (std::size_t m = 64; m <= (std::size_t{1} << 20); m *= 2) {
    std::vector<cx> w(m);
    double min_abs = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < m; ++t) {
      const double th = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(m);
      const cx z = center + radius * cx(std::cos(th), std::sin(th));
      w[t] = detail::poly_eval(poly, z);
      min_abs = std::min(min_abs, std::abs(w[t]));
    }
    if (min_abs <= floor_val) {
      throw DomainError("winding contour passes through a zero of the function");
    }
    double total = 0.0;
    bool small_steps = true;
    for (std::size_t t = 0; t < m; ++t) {
      const double delta = std::arg(w[(t + 1) % m] / w[t]);
      if (!(std::abs(delta) < 0.5 * std::numbers::pi)) {
        small_steps = false;
        break;
      }
      total += delta;
    }
    if (!small_steps) continue;
    const double turns = total / (2.0 * std::numbers::pi);
    const long rounded = std::lround(turns);
    if (std::abs(turns - static_cast<double>(rounded)) > 0.25) continue;
    return static_cast<int>(rounded);
  }
  throw ConvergenceError("winding sampling did not stabilize", 0.0, 0.0);
}

// Where the zeros of a polynomial sit relative to the closed unit disk,
// resolved twice: once through explicit roots, once through winding numbers
// on circles just inside and just outside the unit circle. The two counts
// must agree or the scan refuses to answer.
struct UnitDiskZeroReport {
  Location location = Location::Outside;
  int interior_count = 0;  // roots strictly inside the inner validation circle
  int annulus_count = 0;   // roots between the two validation circles
  double delta = 0.0;      // effective band half-width actually used
};

inline UnitDiskZeroReport zero_in_unit_disk(const std::vector<cx>& poly, double tol,
                                            const KernelOptions& opts = {}) {
  if (!(tol >= 0.0)) throw ValidationError("tolerance must be nonnegative");
  const auto f = detail::poly_trim(poly);
  UnitDiskZeroReport rep;
  const double delta = std::min(std::max(tol, 1e-6), 0.5);
  rep.delta = delta;
  if (f.size() == 1) {
    // a constant: the zero function vanishes on the whole disk, anything else never
    rep.location = f[0] == cx(0.0) ? Location::Inside : Location::Outside;
    return rep;
  }
  const auto roots = numkernel::polynomial_roots(f, opts);

  // The winding contours cannot run arbitrarily close to a root: the sampler
  // resolves steps down to a few millionths of the circumference, and a
  // cluster of q nearby roots pushes |p| down by the q-th power of the gap.
  // Keep a per-root clearance and nudge each contour radius away from any
  // root modulus that violates it; the band the verdict reports is whatever
  // the contours end up spanning.
  const std::size_t nr = roots.size();
  std::vector<double> clearance(nr, 2e-5);
  for (std::size_t i = 0; i < nr; ++i) {
    int q = 0;
    for (std::size_t j = 0; j < nr; ++j) {
      if (std::abs(roots[i] - roots[j]) <= 1e-6) ++q;
    }
    if (q > 1) clearance[i] = std::max(2e-5, std::pow(1e-9, 1.0 / static_cast<double>(q)));
  }
  double r_in = 1.0 - delta;
  double r_out = 1.0 + delta;
  for (std::size_t pass = 0, moved = 1; moved && pass <= nr + 1; ++pass) {
    moved = 0;
    for (std::size_t i = 0; i < nr; ++i) {
      const double m = std::abs(roots[i]);
      if (std::abs(m - r_in) < clearance[i]) {
        r_in = m - clearance[i];
        moved = 1;
      }
      if (std::abs(m - r_out) < clearance[i]) {
        r_out = m + clearance[i];
        moved = 1;
      }
    }
  }
  if (!(r_in > 0.25) || !(r_out < 4.0)) {
    throw DomainError("zeros crowd the unit circle too densely to validate by winding");
  }
  rep.delta = std::max(1.0 - r_in, r_out - 1.0);

  for (const cx& r : roots) {
    const double m = std::abs(r);
    if (m < r_in) {
      ++rep.interior_count;
    } else if (m <= r_out) {
      ++rep.annulus_count;
    }
  }
  const int w_in = winding_number(f, cx(0.0), r_in, opts);
  const int w_out = winding_number(f, cx(0.0), r_out, opts);
  if (w_in != rep.interior_count) {
    throw MismatchError("interior root count and winding number disagree", rep.interior_count,
                        w_in);
  }
  if (w_out != rep.interior_count + rep.annulus_count) {
    throw MismatchError("annulus root count and winding number disagree",
                        rep.interior_count + rep.annulus_count, w_out);
  }
  if (rep.interior_count > 0) {
    rep.location = Location::Inside;
  } else if (rep.annulus_count > 0) {
    rep.location = Location::OnBoundary;
  } else {
    rep.location = Location::Outside;
  }
  return rep;
}

// Three-valued membership of a point in a region, with a tolerance band in
// which the answer is reported as boundary rather than forced either way.
inline Location region_membership(const SpectrumRegion& r, cx lambda, double tol,
                                  const KernelOptions& opts = {}) {
  if (!(tol > 0.0)) throw ValidationError("membership tolerance must be positive");
  switch (r.kind()) {
    case RegionKind::ClosedDisk: {
      const double s = std::abs(lambda - r.center()) - r.radius();
      if (s < -tol) return Location::Inside;
      if (s <= tol) return Location::OnBoundary;
      return Location::Outside;
    }
    case RegionKind::FinitePointSet: {
      double d = std::numeric_limits<double>::infinity();
      for (const cx& p : r.points()) d = std::min(d, std::abs(lambda - p));
      if (d <= tol) return Location::Inside;
      if (d <= 2.0 * tol) return Location::OnBoundary;
      return Location::Outside;
    }
    case RegionKind::SequenceClosure: {
      const double d = r.rule().distance_to_closure(lambda, 0.25 * tol);
      if (d <= tol) return Location::Inside;
      if (d <= 2.0 * tol) return Location::OnBoundary;
      return Location::Outside;
    }
    case RegionKind::PolynomialImageOfUnitDisk: {
      auto g = r.symbol();
      g[0] -= lambda;
      return zero_in_unit_disk(g, tol, opts).location;
    }
  }
  throw DomainError("unhandled region kind");
}

// Smallest singular value of the n-column truncation of (op - lambda): how
// far lambda is from being an approximate eigenvalue at this finite section.
// Nonincreasing in n, and it tends to zero exactly when lambda lies in the
// approximate point spectrum.
inline double ap_distance(const OperatorModel& op, cx lambda, std::size_t n,
                          const KernelOptions& opts = {}) {
  auto shifted = OperatorModel::polynomial_of({-lambda, cx(1.0)}, op);
  return numkernel::extremal_singular_value(shifted.truncate_columns(n),
                                            numkernel::Which::Smallest, opts)
      .value;
}

// Deterministic sample points of a region: for disk-like regions a ring of
// boundary points plus the center and a small interior ring, for discrete
// regions the points themselves.
inline std::vector<cx> spectrum_sample_points(const SpectrumRegion& r, std::size_t boundary = 16,
                                              std::size_t interior = 8) {
  std::vector<cx> pts;
  auto push_unique = [&pts](cx v) {
    if (std::find(pts.begin(), pts.end(), v) == pts.end()) pts.push_back(v);
  };
  auto disk_samples = [&](auto&& transform) {
    for (std::size_t t = 0; t < boundary; ++t) {
      const double th = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(boundary);
      push_unique(transform(cx(std::cos(th), std::sin(th))));
    }
    if (interior > 0) {
      push_unique(transform(cx(0.0)));
      for (std::size_t t = 0; t + 1 < interior; ++t) {
        const double th =
            2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(interior - 1);
        push_unique(transform(0.4 * cx(std::cos(th), std::sin(th))));
      }
    }
  };
  switch (r.kind()) {
    case RegionKind::ClosedDisk: {
      if (r.radius() == 0.0) {
        pts.push_back(r.center());
      } else {
        disk_samples([&](cx z) { return r.center() + r.radius() * z; });
      }
      break;
    }
    case RegionKind::FinitePointSet: {
      for (const cx& p : r.points()) {
        if (pts.size() >= boundary + interior) break;
        push_unique(p);
      }
      break;
    }
    case RegionKind::SequenceClosure: {
      push_unique(r.rule().limit());
      for (std::size_t n = 0; pts.size() < boundary + interior && n < 4 * (boundary + interior);
           ++n) {
        push_unique(r.rule().value(n));
      }
      break;
    }
    case RegionKind::PolynomialImageOfUnitDisk: {
      disk_samples([&](cx z) { return detail::poly_eval(r.symbol(), z); });
      break;
    }
  }
  return pts;
}

enum class ProbeOutcome { Consistent, Violation, Inconclusive };

inline const char* to_string(ProbeOutcome p) {
  switch (p) {
    case ProbeOutcome::Consistent:
      return "consistent";
    case ProbeOutcome::Violation:
      return "violation";
    case ProbeOutcome::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

struct ProbeOptions {
  double probe_tol = 0.05;           // a distance below this confirms the point
  std::size_t max_size = 1600;       // largest truncation in the sweep
  std::size_t boundary_points = 16;  // grid samples on the region boundary
  std::size_t interior_points = 8;   // grid samples spread through the interior
  KernelOptions kernel;
};

struct ProbePointResult {
  cx lambda{0.0};
  std::vector<double> distances;  // one per truncation size actually visited
  ProbeOutcome outcome = ProbeOutcome::Inconclusive;

  bool operator==(const ProbePointResult&) const = default;
};

struct ProbeReport {
  ProbeOutcome overall = ProbeOutcome::Inconclusive;
  std::vector<std::size_t> sizes;
  std::vector<ProbePointResult> points;

  bool operator==(const ProbeReport&) const = default;
};

inline std::vector<std::size_t> probe_truncation_sizes(std::size_t max_size) {
  if (max_size == 0) throw ValidationError("truncation sweep needs a positive size");
  std::vector<std::size_t> out;
  for (std::size_t n = 50; n < max_size; n *= 2) out.push_back(n);
  out.push_back(max_size);
  return out;
}

// Empirical test of the statement "every spectrum point of the adjoint is an
// approximate eigenvalue of the adjoint". Samples the adjoint's spectrum and
// watches the section distances shrink. A point is consistent once its
// distance falls under probe_tol; it is a violation when the distances have
// stabilized well above that; anything still drifting is inconclusive.
inline ProbeReport probe_ap_equals_spectrum(const OperatorModel& op, const ProbeOptions& popts = {}) {
  if (!(popts.probe_tol > 0.0)) throw ValidationError("probe tolerance must be positive");
  const auto adj = op.adjoint();
  const auto region = adj.spectrum();
  ProbeReport rep;
  rep.sizes = probe_truncation_sizes(popts.max_size);
  bool any_violation = false;
  bool any_inconclusive = false;
  for (const cx& lambda :
       spectrum_sample_points(region, popts.boundary_points, popts.interior_points)) {
    ProbePointResult pr;
    pr.lambda = lambda;
    for (std::size_t n : rep.sizes) {
      pr.distances.push_back(ap_distance(adj, lambda, n, popts.kernel));
      if (pr.distances.back() < popts.probe_tol) break;
    }
    const double last = pr.distances.back();
    if (last < popts.probe_tol) {
      pr.outcome = ProbeOutcome::Consistent;
    } else if (pr.distances.size() >= 3) {
      const std::size_t k = pr.distances.size();
      const double a = pr.distances[k - 3];
      const double b = pr.distances[k - 2];
      const bool stable = std::abs(b - a) < popts.probe_tol * b &&
                          std::abs(last - b) < popts.probe_tol * last;
      if (stable && last > 10.0 * popts.probe_tol) {
        pr.outcome = ProbeOutcome::Violation;
        any_violation = true;
      } else {
        pr.outcome = ProbeOutcome::Inconclusive;
        any_inconclusive = true;
      }
    } else {
      pr.outcome = ProbeOutcome::Inconclusive;
      any_inconclusive = true;
    }
    rep.points.push_back(std::move(pr));
  }
  rep.overall = any_violation
                    ? ProbeOutcome::Violation
                    : (any_inconclusive ? ProbeOutcome::Inconclusive : ProbeOutcome::Consistent);
  return rep;
}

}  // namespace framespec
