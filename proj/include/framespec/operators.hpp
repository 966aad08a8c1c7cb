#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "detail/polyops.hpp"
#include "numkernel.hpp"
#include "sequence_rule.hpp"
#include "spectrum_region.hpp"

namespace framespec {

// A bounded operator on square-summable sequences over the natural numbers,
// in one of four structured forms:
//   * one-sided banded Toeplitz: a polynomial in the right shift (lower form)
//     or in the left shift (upper form)
//   * diagonal with entries from a SequenceRule
//   * weighted shift, forward (subdiagonal) or backward (superdiagonal)
//   * a polynomial applied lazily to one of the above
// The class is closed under adjoints and under polynomial maps, and every
// instance knows its spectrum in closed form plus finite column truncations
// with exact entries.
class OperatorModel {
 public:
  static OperatorModel right_shift() {
    OperatorModel op(Kind::Toeplitz);
    op.symbol_ = {cx(0.0), cx(1.0)};
    op.upper_ = false;
    op.canonical_shift_ = true;
    return op;
  }

  static OperatorModel left_shift() {
    OperatorModel op(Kind::Toeplitz);
    op.symbol_ = {cx(0.0), cx(1.0)};
    op.upper_ = true;
    op.canonical_shift_ = true;
    return op;
  }

  // entries[k] is the constant on the k-th diagonal, k = row - col. All keys
  // must share a sign: a matrix with entries strictly on both sides of the
  // main diagonal has no one-sided shift representation here.
  static OperatorModel toeplitz(const std::map<int, cx>& entries) {
    int min_k = 0, max_k = 0;
    for (const auto& [k, v] : entries) {
      if (v == cx(0.0)) continue;
      min_k = std::min(min_k, k);
      max_k = std::max(max_k, k);
    }
    if (min_k < 0 && max_k > 0) {
      throw ValidationError(
          "Toeplitz entries on both sides of the main diagonal are not supported; "
          "use offsets of one sign only");
    }
    OperatorModel op(Kind::Toeplitz);
    op.upper_ = min_k < 0;
    const int deg = op.upper_ ? -min_k : max_k;
    op.symbol_.assign(static_cast<std::size_t>(deg) + 1, cx(0.0));
    for (const auto& [k, v] : entries) {
      if (v == cx(0.0)) continue;
      op.symbol_[static_cast<std::size_t>(op.upper_ ? -k : k)] = v;
    }
    if (op.symbol_.empty()) op.symbol_.push_back(cx(0.0));
    return op;
  }

  static OperatorModel diagonal(SequenceRule rule) {
    OperatorModel op(Kind::Diagonal);
    op.rule_.push_back(std::move(rule));
    return op;
  }

  // forward: maps e_n to w_n e_{n+1}
  static OperatorModel weighted_shift(SequenceRule weights) {
    OperatorModel op(Kind::WeightedShift);
    op.rule_.push_back(std::move(weights));
    op.upper_ = false;
    return op;
  }

  // backward: maps e_{n+1} to w_n e_n and annihilates e_0
  static OperatorModel backward_weighted_shift(SequenceRule weights) {
    OperatorModel op(Kind::WeightedShift);
    op.rule_.push_back(std::move(weights));
    op.upper_ = true;
    return op;
  }

  // p(base), collapsed to an explicit form wherever the algebra is exact:
  // a polynomial of a Toeplitz operator composes symbols, a polynomial of a
  // diagonal maps the entry rule, nested polynomials compose. Only weighted
  // shifts keep the lazy wrapper, whose action runs Horner over apply().
  static OperatorModel polynomial_of(std::vector<cx> coeffs, OperatorModel base) {
    if (coeffs.empty()) throw ValidationError("empty polynomial for operator map");
    switch (base.kind_) {
      case Kind::Toeplitz: {
        OperatorModel op(Kind::Toeplitz);
        op.symbol_ = detail::poly_trim(detail::poly_compose(coeffs, base.symbol_));
        op.upper_ = base.upper_;
        op.certified_lower_ = base.canonical_shift_ || base.certified_lower_;
        return op;
      }
      case Kind::Diagonal:
        return diagonal(base.rule_.front().mapped(std::move(coeffs)));
      case Kind::PolynomialOf:
        return polynomial_of(detail::poly_compose(coeffs, base.symbol_), *base.base_);
      case Kind::WeightedShift:
        break;
    }
    OperatorModel op(Kind::PolynomialOf);
    op.symbol_ = std::move(coeffs);
    op.base_ = std::make_shared<OperatorModel>(std::move(base));
    return op;
  }

  OperatorModel adjoint() const {
    switch (kind_) {
      case Kind::Toeplitz: {
        OperatorModel op(Kind::Toeplitz);
        op.symbol_ = symbol_;
        for (cx& a : op.symbol_) a = std::conj(a);
        op.upper_ = !upper_;
        op.canonical_shift_ = canonical_shift_;
        op.certified_lower_ = certified_lower_;
        return op;
      }
      case Kind::Diagonal:
        return diagonal(rule_.front().conjugated());
      case Kind::WeightedShift: {
        OperatorModel op(Kind::WeightedShift);
        op.rule_.push_back(rule_.front().conjugated());
        op.upper_ = !upper_;
        return op;
      }
      case Kind::PolynomialOf: {
        std::vector<cx> conj_coeffs = symbol_;
        for (cx& a : conj_coeffs) a = std::conj(a);
        return polynomial_of(std::move(conj_coeffs), base_->adjoint());
      }
    }
    throw DomainError("unhandled operator kind");
  }

  // exact image of a finitely supported vector (coordinates beyond the end
  // are zero); the result may be longer or shorter than the input
  std::vector<cx> apply(const std::vector<cx>& x) const {
    switch (kind_) {
      case Kind::Toeplitz: {
        if (x.empty()) return {};
        const std::size_t deg = symbol_.size() - 1;
        if (!upper_) {
          std::vector<cx> y(x.size() + deg, cx(0.0));
          for (std::size_t k = 0; k <= deg; ++k) {
            if (symbol_[k] == cx(0.0)) continue;
            for (std::size_t i = 0; i < x.size(); ++i) y[i + k] += symbol_[k] * x[i];
          }
          return y;
        }
        std::vector<cx> y(x.size(), cx(0.0));
        for (std::size_t k = 0; k <= deg; ++k) {
          if (symbol_[k] == cx(0.0)) continue;
          for (std::size_t i = 0; i + k < x.size(); ++i) y[i] += symbol_[k] * x[i + k];
        }
        return y;
      }
      case Kind::Diagonal: {
        std::vector<cx> y(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) y[i] = rule_.front().value(i) * x[i];
        return y;
      }
      case Kind::WeightedShift: {
        if (!upper_) {
          std::vector<cx> y(x.size() + 1, cx(0.0));
          for (std::size_t i = 0; i < x.size(); ++i) y[i + 1] = rule_.front().value(i) * x[i];
          return y;
        }
        if (x.size() <= 1) return {};
        std::vector<cx> y(x.size() - 1);
        for (std::size_t i = 0; i + 1 < x.size(); ++i) y[i] = rule_.front().value(i) * x[i + 1];
        return y;
      }
      case Kind::PolynomialOf: {
        std::vector<cx> y;
        for (std::size_t j = symbol_.size(); j-- > 0;) {
          y = base_->apply(y);
          if (symbol_[j] != cx(0.0)) {
            if (y.size() < x.size()) y.resize(x.size(), cx(0.0));
            for (std::size_t i = 0; i < x.size(); ++i) y[i] += symbol_[j] * x[i];
          }
        }
        return y;
      }
    }
    throw DomainError("unhandled operator kind");
  }

  int lower_bandwidth() const {
    switch (kind_) {
      case Kind::Toeplitz:
        return upper_ ? 0 : static_cast<int>(symbol_.size()) - 1;
      case Kind::Diagonal:
        return 0;
      case Kind::WeightedShift:
        return upper_ ? 0 : 1;
      case Kind::PolynomialOf:
        return static_cast<int>(symbol_.size() - 1) * base_->lower_bandwidth();
    }
    return 0;
  }

  int upper_bandwidth() const {
    switch (kind_) {
      case Kind::Toeplitz:
        return upper_ ? static_cast<int>(symbol_.size()) - 1 : 0;
      case Kind::Diagonal:
        return 0;
      case Kind::WeightedShift:
        return upper_ ? 1 : 0;
      case Kind::PolynomialOf:
        return static_cast<int>(symbol_.size() - 1) * base_->upper_bandwidth();
    }
    return 0;
  }

  // upper bound for the operator norm
  double norm_bound() const {
    switch (kind_) {
      case Kind::Toeplitz: {
        double s = 0.0;
        for (const cx& a : symbol_) s += std::abs(a);
        return s;
      }
      case Kind::Diagonal:
      case Kind::WeightedShift:
        return rule_.front().modulus_bound();
      case Kind::PolynomialOf: {
        const double b = base_->norm_bound();
        double s = 0.0, bp = 1.0;
        for (const cx& a : symbol_) {
          s += std::abs(a) * bp;
          bp *= b;
        }
        return s;
      }
    }
    return 0.0;
  }

  // True when it is known that the approximate point spectrum of the adjoint
  // fills the adjoint's whole spectrum. Deliberately conservative: only the
  // canonical right shift, diagonal operators, weighted shifts with weights
  // tending to zero, and polynomial images of those carry the certificate.
  // A generic banded Toeplitz form never does, even when its action happens
  // to coincide with a certified operator.
  bool adjoint_ap_fills_spectrum() const {
    switch (kind_) {
      case Kind::Toeplitz:
        return (canonical_shift_ || certified_lower_) && !upper_;
      case Kind::Diagonal:
        return true;
      case Kind::WeightedShift:
        return rule_.front().tends_to_zero();
      case Kind::PolynomialOf:
        return base_->adjoint_ap_fills_spectrum();
    }
    return false;
  }

  SpectrumRegion spectrum() const {
    switch (kind_) {
      case Kind::Toeplitz:
        // a polynomial in a shift; both shifts have the closed unit disk as
        // spectrum, and polynomials map spectra onto spectra
        return detail::unit_disk_image(symbol_);
      case Kind::Diagonal:
        return SpectrumRegion::sequence_closure(rule_.front());
      case Kind::WeightedShift: {
        if (rule_.front().tends_to_zero()) return SpectrumRegion::finite_point_set({cx(0.0)});
        return SpectrumRegion::closed_disk(cx(0.0), std::abs(rule_.front().limit()));
      }
      case Kind::PolynomialOf:
        return polynomial_image(base_->spectrum(), symbol_);
    }
    throw DomainError("unhandled operator kind");
  }

  // The first n columns as an exact (n + lower bandwidth) x n banded matrix.
  numkernel::ComplexMatrix truncate_columns(std::size_t n) const {
    if (n == 0) throw ValidationError("truncation size must be at least 1");
    const int l = lower_bandwidth();
    const int u = std::min<int>(upper_bandwidth(), static_cast<int>(n) - 1);
    const std::size_t rows = n + static_cast<std::size_t>(l);
    auto m = numkernel::ComplexMatrix::banded(rows, n, l, u);
    switch (kind_) {
      case Kind::Toeplitz: {
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t k = 0; k < symbol_.size(); ++k) {
            if (symbol_[k] == cx(0.0)) continue;
            if (!upper_) {
              m.set(j + k, j, symbol_[k]);
            } else if (j >= k) {
              m.set(j - k, j, symbol_[k]);
            }
          }
        }
        return m;
      }
      case Kind::Diagonal: {
        for (std::size_t j = 0; j < n; ++j) m.set(j, j, rule_.front().value(j));
        return m;
      }
      case Kind::WeightedShift: {
        for (std::size_t j = 0; j < n; ++j) {
          if (!upper_) {
            m.set(j + 1, j, rule_.front().value(j));
          } else if (j >= 1) {
            m.set(j - 1, j, rule_.front().value(j - 1));
          }
        }
        return m;
      }
      case Kind::PolynomialOf: {
        for (std::size_t j = 0; j < n; ++j) {
          std::vector<cx> e(j + 1, cx(0.0));
          e[j] = cx(1.0);
          const auto col = apply(e);
          const auto [r0, r1] = m.column_span(j);
          for (std::size_t r = r0; r < r1 && r < col.size(); ++r) {
            if (col[r] != cx(0.0)) m.set(r, j, col[r]);
          }
        }
        return m;
      }
    }
    throw DomainError("unhandled operator kind");
  }

  std::string describe() const {
    std::ostringstream os;
    switch (kind_) {
      case Kind::Toeplitz:
        if (canonical_shift_) return upper_ ? "left shift" : "right shift";
        os << (upper_ ? "upper" : "lower") << " banded Toeplitz operator of degree "
           << symbol_.size() - 1;
        return os.str();
      case Kind::Diagonal:
        os << "diagonal operator with " << rule_.front().describe();
        return os.str();
      case Kind::WeightedShift:
        os << (upper_ ? "backward" : "forward") << " weighted shift with "
           << rule_.front().describe();
        return os.str();
      case Kind::PolynomialOf:
        os << "degree-" << symbol_.size() - 1 << " polynomial of " << base_->describe();
        return os.str();
    }
    return "operator";
  }

 private:
  enum class Kind { Toeplitz, Diagonal, WeightedShift, PolynomialOf };

  explicit OperatorModel(Kind k) : kind_(k) {}

  Kind kind_;
  std::vector<cx> symbol_;          // Toeplitz symbol or PolynomialOf coefficients
  bool upper_ = false;              // Toeplitz/WeightedShift orientation
  bool canonical_shift_ = false;    // built by the named shift factories
  bool certified_lower_ = false;    // lower orientation descends from a certified shift
  std::vector<SequenceRule> rule_;  // one element for Diagonal/WeightedShift
  std::shared_ptr<const OperatorModel> base_;
};

}  // namespace framespec
