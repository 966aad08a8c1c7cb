#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "detail/polyops.hpp"
#include "sequence_rule.hpp"

namespace framespec {

enum class RegionKind { ClosedDisk, FinitePointSet, SequenceClosure, PolynomialImageOfUnitDisk };

enum class Location { Inside, OnBoundary, Outside };

inline const char* to_string(Location loc) {
  switch (loc) {
    case Location::Inside:
      return "inside";
    case Location::OnBoundary:
      return "boundary";
    case Location::Outside:
      return "outside";
  }
  return "outside";
}

// A compact subset of the plane in one of four closed forms. Membership for
// the first three kinds is direct; the polynomial-image kind needs root
// finding and is resolved one layer up.
class SpectrumRegion {
 public:
  static SpectrumRegion closed_disk(cx center, double radius) {
    if (!(radius >= 0.0)) throw ValidationError("disk radius must be nonnegative");
    SpectrumRegion r(RegionKind::ClosedDisk);
    r.center_ = center;
    r.radius_ = radius;
    return r;
  }

  static SpectrumRegion finite_point_set(std::vector<cx> points) {
    if (points.empty()) throw ValidationError("finite point set must hold at least one point");
    std::sort(points.begin(), points.end(), [](const cx& a, const cx& b) {
      if (a.real() != b.real()) return a.real() < b.real();
      return a.imag() < b.imag();
    });
    SpectrumRegion r(RegionKind::FinitePointSet);
    r.points_ = std::move(points);
    return r;
  }

  static SpectrumRegion sequence_closure(SequenceRule rule) {
    SpectrumRegion r(RegionKind::SequenceClosure);
    r.rule_.push_back(std::move(rule));
    return r;
  }

  // the image of the closed unit disk under the given polynomial
  static SpectrumRegion polynomial_image_of_unit_disk(std::vector<cx> coeffs) {
    if (coeffs.empty()) throw ValidationError("empty polynomial for disk image");
    SpectrumRegion r(RegionKind::PolynomialImageOfUnitDisk);
    r.symbol_ = std::move(coeffs);
    return r;
  }

  RegionKind kind() const { return kind_; }

  cx center() const {
    require(RegionKind::ClosedDisk);
    return center_;
  }
  double radius() const {
    require(RegionKind::ClosedDisk);
    return radius_;
  }
  const std::vector<cx>& points() const {
    require(RegionKind::FinitePointSet);
    return points_;
  }
  const SequenceRule& rule() const {
    require(RegionKind::SequenceClosure);
    return rule_.front();
  }
  const std::vector<cx>& symbol() const {
    require(RegionKind::PolynomialImageOfUnitDisk);
    return symbol_;
  }

  // radius of a centered disk containing the whole region
  double enclosing_radius() const {
    switch (kind_) {
      case RegionKind::ClosedDisk:
        return std::abs(center_) + radius_;
      case RegionKind::FinitePointSet: {
        double m = 0.0;
        for (const cx& p : points_) m = std::max(m, std::abs(p));
        return m;
      }
      case RegionKind::SequenceClosure:
        return rule_.front().modulus_bound();
      case RegionKind::PolynomialImageOfUnitDisk: {
        double s = 0.0;
        for (const cx& a : symbol_) s += std::abs(a);
        return s;
      }
    }
    return 0.0;
  }

  std::string describe() const {
    std::ostringstream os;
    switch (kind_) {
      case RegionKind::ClosedDisk:
        os << "closed disk of radius " << radius_ << " about " << center_.real()
           << (center_.imag() < 0 ? "" : "+") << center_.imag() << "i";
        break;
      case RegionKind::FinitePointSet:
        os << "finite set of " << points_.size() << (points_.size() == 1 ? " point" : " points");
        break;
      case RegionKind::SequenceClosure:
        os << "closure of " << rule_.front().describe();
        break;
      case RegionKind::PolynomialImageOfUnitDisk:
        os << "image of the closed unit disk under a degree-" << symbol_.size() - 1
           << " polynomial";
        break;
    }
    return os.str();
  }

 private:
  explicit SpectrumRegion(RegionKind k) : kind_(k) {}

  void require(RegionKind k) const {
    if (kind_ != k) throw DomainError("region accessor used on the wrong kind");
  }

  RegionKind kind_;
  cx center_{0.0};
  double radius_ = 0.0;
  std::vector<cx> points_;
  std::vector<SequenceRule> rule_;  // holds one element for SequenceClosure
  std::vector<cx> symbol_;
};

namespace detail {

// Image of the closed unit disk under g, reduced to the simplest kind.
inline SpectrumRegion unit_disk_image(std::vector<cx> g) {
  g = poly_trim(std::move(g));
  if (g.size() == 1) return SpectrumRegion::finite_point_set({g[0]});
  if (g.size() == 2) return SpectrumRegion::closed_disk(g[0], std::abs(g[1]));
  return SpectrumRegion::polynomial_image_of_unit_disk(std::move(g));
}

}  // namespace detail

// The image f(R) of a region under a polynomial. Every kind maps back into
// one of the four kinds, which is what keeps the operator algebra closed.
inline SpectrumRegion polynomial_image(const SpectrumRegion& r, const std::vector<cx>& f) {
  if (f.empty()) throw ValidationError("empty polynomial for region image");
  const auto ft = detail::poly_trim(f);
  if (ft.size() == 1) return SpectrumRegion::finite_point_set({ft[0]});
  switch (r.kind()) {
    case RegionKind::ClosedDisk:
      return detail::unit_disk_image(detail::poly_compose(ft, {r.center(), cx(r.radius())}));
    case RegionKind::FinitePointSet: {
      std::vector<cx> out;
      out.reserve(r.points().size());
      for (const cx& p : r.points()) {
        const cx v = detail::poly_eval(ft, p);
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
      }
      return SpectrumRegion::finite_point_set(std::move(out));
    }
    case RegionKind::SequenceClosure:
      return SpectrumRegion::sequence_closure(r.rule().mapped(ft));
    case RegionKind::PolynomialImageOfUnitDisk:
      return detail::unit_disk_image(detail::poly_compose(ft, r.symbol()));
  }
  throw DomainError("unhandled region kind");
}

}  // namespace framespec
