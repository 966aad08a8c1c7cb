#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "detail/polyops.hpp"

namespace framespec {

enum class TailKind { Constant, Geometric, Reciprocal };

// A complex sequence (w_n), n >= 0, given by an explicit prefix followed by a
// structured tail. The tail always converges, so the sequence has exactly one
// accumulation value and its closure is easy to probe numerically. Rules stay
// closed under pointwise polynomial maps and conjugation, which is how the
// diagonal-operator algebra below reuses them.
class SequenceRule {
 public:
  static SequenceRule constant_tail(std::vector<cx> prefix, cx value) {
    auto n = std::make_shared<Node>();
    n->prefix = std::move(prefix);
    n->kind = TailKind::Constant;
    n->first = value;
    return SequenceRule(std::move(n));
  }

  // w_{p+j} = first * ratio^j, requires |ratio| < 1 so the tail converges
  static SequenceRule geometric_tail(std::vector<cx> prefix, cx first, cx ratio) {
    if (!(std::abs(ratio) < 1.0)) {
      throw ValidationError("geometric tail ratio must have modulus below one");
    }
    auto n = std::make_shared<Node>();
    n->prefix = std::move(prefix);
    n->kind = TailKind::Geometric;
    n->first = first;
    n->ratio = ratio;
    return SequenceRule(std::move(n));
  }

  // w_n = 1 / (n + offset) from the first tail index on
  static SequenceRule reciprocal_tail(std::vector<cx> prefix, long offset) {
    if (static_cast<long>(prefix.size()) + offset < 1) {
      throw ValidationError("reciprocal tail must start at a positive denominator");
    }
    auto n = std::make_shared<Node>();
    n->prefix = std::move(prefix);
    n->kind = TailKind::Reciprocal;
    n->offset = offset;
    return SequenceRule(std::move(n));
  }

  // pointwise p(w_n)
  SequenceRule mapped(std::vector<cx> poly_coeffs) const {
    if (poly_coeffs.empty()) throw ValidationError("empty polynomial for sequence map");
    auto n = std::make_shared<Node>();
    n->base = node_;
    n->poly = std::move(poly_coeffs);
    return SequenceRule(std::move(n));
  }

  // pointwise complex conjugate
  SequenceRule conjugated() const {
    auto n = std::make_shared<Node>();
    n->base = node_;
    n->conj = true;
    return SequenceRule(std::move(n));
  }

  cx value(std::size_t n) const { return node_->value(n); }

  // the tail's accumulation value
  cx limit() const { return node_->limit(); }

  bool tends_to_zero() const { return limit() == cx(0.0); }

  // upper bound for sup_n |w_n| (not necessarily attained)
  double modulus_bound() const { return node_->modulus_bound(); }

  // first index from which |w_n - limit| <= accuracy
  std::size_t horizon(double accuracy) const {
    if (!(accuracy > 0.0)) throw ValidationError("horizon accuracy must be positive");
    const double h = node_->horizon(accuracy);
    if (h >= static_cast<double>(kMaxHorizon)) return kMaxHorizon;
    return static_cast<std::size_t>(h);
  }

  // distance from lambda to the closure of {w_n}, within +-accuracy (subject
  // to the sampling cap, which bounds the achievable resolution for slowly
  // converging tails)
  double distance_to_closure(cx lambda, double accuracy) const {
    if (!(accuracy > 0.0)) throw ValidationError("distance accuracy must be positive");
    double acc = std::max(accuracy, 0.125 * modulus_bound() + accuracy);
    double d = std::abs(lambda - limit());
    for (int round = 0; round < 64; ++round) {
      const std::size_t h = horizon(acc);
      d = std::abs(lambda - limit());
      for (std::size_t n = 0; n < h; ++n) d = std::min(d, std::abs(lambda - value(n)));
      const double next = std::max(accuracy, 0.125 * d);
      if (next >= acc) break;
      acc = next;
    }
    return d;
  }

  std::string describe() const { return node_->describe(); }

 private:
  static constexpr std::size_t kMaxHorizon = 20'000'000;

  struct Node {
    // explicit form (used when base is null)
    std::vector<cx> prefix;
    TailKind kind = TailKind::Constant;
    cx first{0.0};
    cx ratio{0.0};
    long offset = 0;
    // wrapper form
    std::shared_ptr<const Node> base;
    std::vector<cx> poly;
    bool conj = false;

    cx value(std::size_t n) const {
      if (base) {
        cx v = base->value(n);
        if (!poly.empty()) v = detail::poly_eval(poly, v);
        if (conj) v = std::conj(v);
        return v;
      }
      if (n < prefix.size()) return prefix[n];
      switch (kind) {
        case TailKind::Constant:
          return first;
        case TailKind::Geometric: {
          cx v = first;
          for (std::size_t j = prefix.size(); j < n; ++j) v *= ratio;
          return v;
        }
        case TailKind::Reciprocal:
          return cx(1.0 / (static_cast<double>(n) + static_cast<double>(offset)));
      }
      return cx(0.0);
    }

    cx limit() const {
      if (base) {
        cx v = base->limit();
        if (!poly.empty()) v = detail::poly_eval(poly, v);
        if (conj) v = std::conj(v);
        return v;
      }
      return kind == TailKind::Constant ? first : cx(0.0);
    }

    double modulus_bound() const {
      if (base) {
        if (conj && poly.empty()) return base->modulus_bound();
        const double b = base->modulus_bound();
        double s = 0.0, bp = 1.0;
        for (const cx& a : poly) {
          s += std::abs(a) * bp;
          bp *= b;
        }
        return s;
      }
      double m = 0.0;
      for (const cx& p : prefix) m = std::max(m, std::abs(p));
      switch (kind) {
        case TailKind::Constant:
        case TailKind::Geometric:
          m = std::max(m, std::abs(first));
          break;
        case TailKind::Reciprocal:
          m = std::max(m, 1.0 / (static_cast<double>(prefix.size()) + static_cast<double>(offset)));
          break;
      }
      return m;
    }

    double horizon(double accuracy) const {
      if (base) {
        if (poly.empty()) return base->horizon(accuracy);  // conjugation is an isometry
        // Lipschitz bound for the polynomial on the disk holding the values
        const double b = base->modulus_bound();
        double lip = 0.0, bp = 1.0;
        for (std::size_t j = 1; j < poly.size(); ++j) {
          lip += static_cast<double>(j) * std::abs(poly[j]) * bp;
          bp *= b;
        }
        if (lip <= 0.0) return 0.0;  // constant map: every value equals the limit
        return base->horizon(accuracy / lip);
      }
      const double p = static_cast<double>(prefix.size());
      switch (kind) {
        case TailKind::Constant:
          return p;
        case TailKind::Geometric: {
          const double af = std::abs(first);
          if (af <= accuracy || af == 0.0) return p;
          const double ar = std::abs(ratio);
          if (ar == 0.0) return p + 1.0;
          return p + std::ceil(std::log(accuracy / af) / std::log(ar));
        }
        case TailKind::Reciprocal:
          return std::max(p, std::ceil(1.0 / accuracy) - static_cast<double>(offset));
      }
      return p;
    }

    std::string describe() const {
      std::ostringstream os;
      if (base) {
        os << base->describe();
        if (!poly.empty()) os << " mapped by degree-" << poly.size() - 1 << " polynomial";
        if (conj) os << " conjugated";
        return os.str();
      }
      os << "sequence(prefix " << prefix.size() << " terms, ";
      switch (kind) {
        case TailKind::Constant:
          os << "constant tail " << first.real() << (first.imag() < 0 ? "" : "+") << first.imag()
             << "i)";
          break;
        case TailKind::Geometric:
          os << "geometric tail, ratio modulus " << std::abs(ratio) << ")";
          break;
        case TailKind::Reciprocal:
          os << "reciprocal tail 1/(n" << (offset < 0 ? "" : "+") << offset << "))";
          break;
      }
      return os.str();
    }
  };

  explicit SequenceRule(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

}  // namespace framespec
