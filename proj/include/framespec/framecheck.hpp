#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "detail/polyops.hpp"
#include "functional_calculus.hpp"
#include "holo_function.hpp"
#include "numkernel.hpp"
#include "operators.hpp"
#include "spectral.hpp"
#include "spectrum_region.hpp"

namespace framespec {

// The decision layer. For a certified operator the sequence (f(T)e_n) is a
// frame exactly when f(T) is surjective, which for these operators happens
// exactly when f(T) is invertible, which reduces to: does f vanish anywhere
// on the spectrum of T. A zero on the spectrum, boundary included, sinks the
// frame property; no zero means the sequence is a full Riesz basis.

enum class Verdict { RieszBasis, NotFrame, Inconclusive };

enum class ZeroLocation { Interior, Boundary, Absent, NotApplicable };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::RieszBasis: return "riesz_basis";
    case Verdict::NotFrame: return "not_frame";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

inline const char* to_string(ZeroLocation z) {
  switch (z) {
    case ZeroLocation::Interior: return "interior";
    case ZeroLocation::Boundary: return "boundary";
    case ZeroLocation::Absent: return "absent";
    case ZeroLocation::NotApplicable: return "n/a";
  }
  return "?";
}

struct FrameVerdict {
  Verdict verdict = Verdict::Inconclusive;
  bool criterion_applicable = false;
  ZeroLocation zero_location = ZeroLocation::NotApplicable;
  std::optional<cx> witness;  // a spectrum point where f (nearly) vanishes
  double band = 0.0;          // half-width of the uncertainty band used
  std::string notes;
  std::string provenance;

  bool operator==(const FrameVerdict&) const = default;
};

namespace detail_fc {

// One zero decision on a unit-disk parameterization: g is the function pulled
// back to the closed unit disk, to_spectrum maps a disk parameter to the
// operator's spectrum. Fills location, witness, band and notes.
template <class MapFn>
void decide_on_disk(const std::vector<cx>& g, MapFn&& to_spectrum, double tol,
                    const KernelOptions& kernel, FrameVerdict& out) {
  const auto rep = zero_in_unit_disk(g, tol, kernel);
  out.band = rep.delta;
  if (rep.location == Location::Outside) {
    out.verdict = Verdict::RieszBasis;
    out.zero_location = ZeroLocation::Absent;
    out.notes = "no zero of the function meets the spectrum";
    return;
  }
  out.verdict = Verdict::NotFrame;
  out.zero_location =
      rep.location == Location::Inside ? ZeroLocation::Interior : ZeroLocation::Boundary;
  const auto gt = detail::poly_trim(g);
  if (gt.size() == 1) {
    // the function vanishes identically on the spectrum
    out.witness = to_spectrum(cx(0.0));
    out.notes = "the function is identically zero on the spectrum";
    return;
  }
  const auto roots = numkernel::polynomial_roots(gt, kernel);
  cx best = roots.front();
  if (rep.location == Location::Inside) {
    for (const cx& r : roots) {
      if (std::abs(r) < std::abs(best)) best = r;
    }
  } else {
    auto ring_gap = [](const cx& r) { return std::abs(std::abs(r) - 1.0); };
    for (const cx& r : roots) {
      if (ring_gap(r) < ring_gap(best)) best = r;
    }
  }
  // push a root that strayed just outside back onto the closed disk; the
  // function then stays within a Lipschitz multiple of the band from zero
  const double m = std::abs(best);
  if (m > 1.0) best /= m;
  out.witness = to_spectrum(best);
  std::ostringstream os;
  os << (rep.location == Location::Inside
             ? "a zero of the function lies strictly inside the spectrum"
             : "a zero of the function sits on the spectral boundary, within the band")
     << " (band half-width " << rep.delta << ")";
  out.notes = os.str();
}

// Zero decision on a spectrum with empty interior (finitely many points, or
// the closure of a sequence). Membership is measured by how small |f| gets
// on the set, against a band scaled to the coefficient mass.
inline void decide_on_thin_set(const SpectrumRegion& region, const std::vector<cx>& coeffs,
                               double tol, double tail, FrameVerdict& out) {
  const double rho = std::max(1.0, region.enclosing_radius());
  double scale = 0.0;
  double rp = 1.0;
  for (const cx& a : coeffs) {
    scale += std::abs(a) * rp;
    rp *= rho;
  }
  const double band = std::max(tol, 1e-12) * std::max(1.0, scale) + tail;
  out.band = band;

  double best_abs = std::numeric_limits<double>::infinity();
  cx best_point(0.0);
  auto consider = [&](const cx& p) {
    const double v = std::abs(detail::poly_eval(coeffs, p));
    if (v < best_abs) {
      best_abs = v;
      best_point = p;
    }
  };

  if (region.kind() == RegionKind::FinitePointSet) {
    for (const cx& p : region.points()) consider(p);
  } else {
    const SequenceRule& rule = region.rule();
    consider(rule.limit());
    // past the horizon the mapped values hug the mapped limit, so scanning
    // the prefix up to it sees every place |f| can dip
    auto mapped = rule.mapped(coeffs);
    const std::size_t cap = 200000;
    const std::size_t h = std::min<std::size_t>(mapped.horizon(0.5 * band), cap);
    for (std::size_t n = 0; n < h; ++n) consider(rule.value(n));
  }

  if (best_abs <= 2.0 * band) {
    out.verdict = Verdict::NotFrame;
    // every point of such a spectrum is a boundary point
    out.zero_location = ZeroLocation::Boundary;
    out.witness = best_point;
    std::ostringstream os;
    os << "the function reaches " << best_abs << " on the spectrum, inside the zero band "
       << 2.0 * band;
    out.notes = os.str();
  } else {
    out.verdict = Verdict::RieszBasis;
    out.zero_location = ZeroLocation::Absent;
    std::ostringstream os;
    os << "the function stays at or above " << best_abs << " on the spectrum, clear of the band "
       << 2.0 * band;
    out.notes = os.str();
  }
}

}  // namespace detail_fc

// Decide whether (f(T)e_n) is a frame / Riesz basis. Without the certificate
// that the adjoint's approximate point spectrum fills its spectrum the
// criterion is silent and the verdict is inconclusive by design.
inline FrameVerdict criterion_verdict(const OperatorModel& t, const HoloFunction& f,
                                      double tol = 1e-9, const KernelOptions& kernel = {},
                                      double series_eps = 1e-12) {
  if (!(tol > 0.0)) throw ValidationError("criterion tolerance must be positive");
  FrameVerdict out;
  out.provenance = detail::pipeline_token(t, f);
  if (!t.adjoint_ap_fills_spectrum()) {
    out.verdict = Verdict::Inconclusive;
    out.criterion_applicable = false;
    out.zero_location = ZeroLocation::NotApplicable;
    out.notes =
        "the operator carries no certificate that its adjoint's approximate point spectrum "
        "fills the spectrum, so the surjectivity criterion does not apply";
    return out;
  }
  out.criterion_applicable = true;
  const SpectrumRegion region = t.spectrum();

  std::vector<cx> coeffs;
  double tail = 0.0;
  if (f.is_polynomial()) {
    coeffs = f.coefficients();
  } else {
    auto tr = f.truncate(region.enclosing_radius(), series_eps);
    coeffs = std::move(tr.coeffs);
    tail = tr.tail_bound;
  }

  switch (region.kind()) {
    case RegionKind::ClosedDisk: {
      const cx c = region.center();
      const cx r(region.radius());
      auto g = detail::poly_compose(coeffs, {c, r});
      detail_fc::decide_on_disk(g, [&](cx z) { return c + r * z; }, tol, kernel, out);
      break;
    }
    case RegionKind::PolynomialImageOfUnitDisk: {
      const auto& sym = region.symbol();
      auto g = detail::poly_compose(coeffs, sym);
      detail_fc::decide_on_disk(g, [&](cx z) { return detail::poly_eval(sym, z); }, tol, kernel,
                                out);
      break;
    }
    case RegionKind::FinitePointSet:
    case RegionKind::SequenceClosure:
      detail_fc::decide_on_thin_set(region, coeffs, tol, tail, out);
      break;
  }
  if (tail > 0.0) {
    std::ostringstream os;
    os << out.notes << "; series truncated with certified tail bound " << tail;
    out.notes = os.str();
  }
  return out;
}

// Frame-bound estimates from exact finite truncations. The lower estimate at
// size N is the squared smallest singular value of the adjoint's exact
// N-column truncation: the worst analysis-map norm over the first N basis
// directions, an upper bound for the true lower frame bound and nonincreasing
// in N. The upper estimate mirrors it with the largest singular value of the
// operator's own truncation, a lower bound for the true upper frame bound.
struct FrameBoundEstimates {
  std::vector<std::size_t> sizes;
  std::vector<double> lower;
  std::vector<double> upper;
  double final_lower = 0.0;
  double final_upper = 0.0;
  bool lower_nonincreasing = true;
  bool upper_nondecreasing = true;
  std::string provenance;

  bool operator==(const FrameBoundEstimates&) const = default;
};

namespace detail_fc {

inline void validate_sweep_sizes(const std::vector<std::size_t>& sizes) {
  std::vector<std::string> problems;
  if (sizes.empty()) problems.push_back("the truncation sweep needs at least one size");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] == 0) {
      problems.push_back("truncation sizes must be positive");
      break;
    }
  }
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    if (sizes[i] <= sizes[i - 1]) {
      problems.push_back("truncation sizes must be strictly increasing");
      break;
    }
  }
  if (!problems.empty()) throw ValidationError(std::move(problems));
}

}  // namespace detail_fc

inline std::vector<std::size_t> default_sweep_sizes() { return {50, 100, 200, 500, 1000, 2000}; }

inline constexpr double kDefaultDecayThreshold = 1e-4;
inline constexpr double kDefaultStabilizationTol = 0.05;

inline FrameBoundEstimates estimate_frame_bounds(const OperatorModel& v,
                                                 const std::vector<std::size_t>& sizes,
                                                 const KernelOptions& kernel = {}) {
  detail_fc::validate_sweep_sizes(sizes);
  FrameBoundEstimates out;
  out.sizes = sizes;
  const auto adj = v.adjoint();
  for (std::size_t n : sizes) {
    const double smin =
        numkernel::extremal_singular_value(adj.truncate_columns(n), numkernel::Which::Smallest,
                                           kernel)
            .value;
    const double smax =
        numkernel::extremal_singular_value(v.truncate_columns(n), numkernel::Which::Largest,
                                           kernel)
            .value;
    out.lower.push_back(smin * smin);
    out.upper.push_back(smax * smax);
  }
  out.final_lower = out.lower.back();
  out.final_upper = out.upper.back();
  for (std::size_t i = 1; i < out.lower.size(); ++i) {
    if (out.lower[i] > out.lower[i - 1] + kernel.tol * (1.0 + out.lower[i - 1])) {
      out.lower_nonincreasing = false;
    }
    if (out.upper[i] < out.upper[i - 1] - kernel.tol * (1.0 + out.upper[i - 1])) {
      out.upper_nondecreasing = false;
    }
  }
  return out;
}

inline FrameBoundEstimates estimate_frame_bounds(const CalculusResult& calc,
                                                 const std::vector<std::size_t>& sizes,
                                                 const KernelOptions& kernel = {}) {
  auto out = estimate_frame_bounds(calc.op, sizes, kernel);
  out.provenance = calc.provenance;
  return out;
}

struct CrossValidation {
  bool consistent = true;
  std::string description;

  bool operator==(const CrossValidation&) const = default;
};

namespace detail_fc {

inline double rel_change(double from, double to) {
  return std::abs(to - from) / std::max(std::abs(from), 1e-300);
}

// true when the relative changes across the tail of the sweep (its last two
// gaps, or the single gap of a two-entry sweep) all sit below tol
inline bool tail_stabilized(const std::vector<double>& v, double tol) {
  const std::size_t k = v.size();
  if (k < 2) return true;
  for (std::size_t i = (k >= 3 ? k - 2 : 1); i < k; ++i) {
    if (!(rel_change(v[i - 1], v[i]) < tol)) return false;
  }
  return true;
}

}  // namespace detail_fc

// Checks the symbolic verdict against the numerical sweep. The numerics can
// only corroborate, never overrule: a lower estimate is an upper bound for
// the true lower frame bound, so a small value is evidence against a frame
// while a plateau is evidence for one. Disagreement is reported as tension
// with both numbers quoted.
inline CrossValidation cross_validate(const FrameVerdict& verdict,
                                      const FrameBoundEstimates& bounds,
                                      double decay_threshold = kDefaultDecayThreshold,
                                      double stabilization_tol = kDefaultStabilizationTol) {
  if (!(decay_threshold > 0.0)) throw ValidationError("decay threshold must be positive");
  if (!(stabilization_tol > 0.0)) throw ValidationError("stabilization tolerance must be positive");
  if (!verdict.provenance.empty() && !bounds.provenance.empty() &&
      verdict.provenance != bounds.provenance) {
    throw ValidationError("verdict and bound sweep come from different pipelines: \"" +
                          verdict.provenance + "\" vs \"" + bounds.provenance + "\"");
  }
  const std::vector<double>& low = bounds.lower;
  const std::size_t k = low.size();
  const double last = bounds.final_lower;
  const std::size_t last_n = bounds.sizes.back();
  const bool stabilized = detail_fc::tail_stabilized(low, stabilization_tol);
  const bool still_decreasing =
      k >= 2 && low[k - 1] < low[k - 2] &&
      detail_fc::rel_change(low[k - 2], low[k - 1]) > stabilization_tol;

  CrossValidation out;
  std::ostringstream os;
  switch (verdict.verdict) {
    case Verdict::Inconclusive:
      out.consistent = true;
      out.description = "criterion verdict is inconclusive; the bound sweep stands on its own";
      return out;
    case Verdict::NotFrame:
      if (last < decay_threshold) {
        os << "lower bound estimate " << last << " at N = " << last_n
           << " sits below the decay threshold " << decay_threshold
           << ", corroborating the verdict";
        out.consistent = true;
      } else if (still_decreasing) {
        os << "lower bound estimate " << last << " at N = " << last_n
           << " is still decreasing, consistent with eventual decay";
        out.consistent = true;
      } else {
        os << "verdict says not a frame, but the lower bound estimate stabilized at " << last
           << " by N = " << last_n << " (decay threshold " << decay_threshold << ")";
        out.consistent = false;
      }
      out.description = os.str();
      return out;
    case Verdict::RieszBasis:
      if (last >= decay_threshold && stabilized) {
        os << "lower bound estimate stabilized at " << last << " by N = " << last_n
           << ", above the decay threshold " << decay_threshold
           << ", corroborating the verdict";
        out.consistent = true;
      } else {
        os << "verdict says Riesz basis, but the lower bound estimate is " << last << " at N = "
           << last_n << " (decay threshold " << decay_threshold
           << (last >= decay_threshold ? ", not yet stabilized)" : ")");
        out.consistent = false;
      }
      out.description = os.str();
      return out;
  }
  throw DomainError("unhandled verdict");
}

// Direct numerical check of surjectivity through the adjoint: the operator
// is surjective exactly when its adjoint is bounded below, and the section
// distances of the adjoint at zero measure that bound. A plateau well above
// the tolerance is evidence of surjectivity, a persistent slide toward zero
// is evidence against; everything else stays inconclusive.
enum class SurjectivityEvidence { BoundedBelow, Decaying, Inconclusive };

inline const char* to_string(SurjectivityEvidence e) {
  switch (e) {
    case SurjectivityEvidence::BoundedBelow: return "bounded_below_evidence";
    case SurjectivityEvidence::Decaying: return "decaying";
    case SurjectivityEvidence::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct SurjectivityProbe {
  std::vector<std::size_t> sizes;
  std::vector<double> distances;  // adjoint section distance at zero, per size
  SurjectivityEvidence evidence = SurjectivityEvidence::Inconclusive;

  bool operator==(const SurjectivityProbe&) const = default;
};

inline SurjectivityProbe surjectivity_probe(const OperatorModel& op,
                                            const std::vector<std::size_t>& sizes,
                                            double tol = kDefaultStabilizationTol,
                                            const KernelOptions& kernel = {}) {
  detail_fc::validate_sweep_sizes(sizes);
  if (!(tol > 0.0)) throw ValidationError("probe tolerance must be positive");
  SurjectivityProbe out;
  out.sizes = sizes;
  const auto adj = op.adjoint();
  for (std::size_t n : sizes) out.distances.push_back(ap_distance(adj, cx(0.0), n, kernel));
  const std::vector<double>& d = out.distances;
  const std::size_t k = d.size();
  if (k >= 2 && detail_fc::tail_stabilized(d, tol) && d.back() > 10.0 * tol) {
    out.evidence = SurjectivityEvidence::BoundedBelow;
  } else if (k >= 2 && d[k - 1] < d[k - 2] &&
             detail_fc::rel_change(d[k - 2], d[k - 1]) > tol) {
    out.evidence = SurjectivityEvidence::Decaying;
  } else {
    out.evidence = SurjectivityEvidence::Inconclusive;
  }
  return out;
}

}  // namespace framespec
