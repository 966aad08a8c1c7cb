#pragma once

#include <cstddef>
#include <vector>

#include "../core.hpp"

namespace framespec::detail {

// Dense polynomial helpers. Coefficients are ascending: a[0] + a[1] z + ...

inline cx poly_eval(const std::vector<cx>& a, cx z) {
  cx p(0.0);
  for (std::size_t i = a.size(); i-- > 0;) p = p * z + a[i];
  return p;
}

inline std::vector<cx> poly_trim(std::vector<cx> a) {
  while (a.size() > 1 && a.back() == cx(0.0)) a.pop_back();
  if (a.empty()) a.push_back(cx(0.0));
  return a;
}

inline std::vector<cx> poly_add(const std::vector<cx>& a, const std::vector<cx>& b) {
  std::vector<cx> out(std::max(a.size(), b.size()), cx(0.0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

inline std::vector<cx> poly_scale(std::vector<cx> a, cx s) {
  for (cx& v : a) v *= s;
  return a;
}

inline std::vector<cx> poly_multiply(const std::vector<cx>& a, const std::vector<cx>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<cx> out(a.size() + b.size() - 1, cx(0.0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// f(g(z)) by Horner over polynomials.
inline std::vector<cx> poly_compose(const std::vector<cx>& f, const std::vector<cx>& g) {
  std::vector<cx> out{cx(0.0)};
  for (std::size_t i = f.size(); i-- > 0;) {
    out = poly_multiply(out, g);
    if (out.empty()) out.push_back(cx(0.0));
    out[0] += f[i];
  }
  return out;
}

inline std::vector<cx> poly_derivative(const std::vector<cx>& a) {
  if (a.size() <= 1) return {cx(0.0)};
  std::vector<cx> out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = a[i] * static_cast<double>(i);
  return out;
}

}  // namespace framespec::detail
