#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "crx/error.hpp"
#include "crx/rng.hpp"

namespace crx {

using cx = std::complex<double>;

// Dense square complex matrix, row-major. Dimension 0 is allowed and
// stands for an empty block.
class CMatrix {
 public:
  CMatrix() : n_(0) {}
  explicit CMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {
    if (n < 0) fail(ErrorKind::input, "matrix dimension must be nonnegative");
  }
  CMatrix(int n, std::vector<cx> entries) : n_(n), a_(std::move(entries)) {
    if (n < 0 || a_.size() != static_cast<std::size_t>(n) * n)
      fail(ErrorKind::input, "entry count does not match dimension");
  }

  int n() const { return n_; }
  bool empty() const { return n_ == 0; }

  cx& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const cx& operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * n_ + j];
  }

  const std::vector<cx>& data() const { return a_; }

  static CMatrix identity(int n) {
    CMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static CMatrix diagonal(const std::vector<cx>& d) {
    CMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.n(); ++i) m(i, i) = d[i];
    return m;
  }

  // entries i.i.d. complex gaussian with E|z|^2 = 1
  static CMatrix random_gaussian(int n, std::uint64_t seed) {
    CMatrix m(n);
    Rng rng(seed);
    for (auto& e : m.a_) e = rng.cgaussian();
    return m;
  }

  CMatrix adjoint() const {
    CMatrix m(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
  }

  CMatrix block(int r0, int c0, int size) const {
    CMatrix m(size);
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
  }

  static CMatrix direct_sum(const CMatrix& a, const CMatrix& b) {
    CMatrix m(a.n() + b.n());
    for (int i = 0; i < a.n(); ++i)
      for (int j = 0; j < a.n(); ++j) m(i, j) = a(i, j);
    for (int i = 0; i < b.n(); ++i)
      for (int j = 0; j < b.n(); ++j) m(a.n() + i, a.n() + j) = b(i, j);
    return m;
  }

  std::vector<cx> diag() const {
    std::vector<cx> d(n_);
    for (int i = 0; i < n_; ++i) d[i] = (*this)(i, i);
    return d;
  }

  cx trace() const {
    cx t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  double frobenius() const {
    double s = 0.0;
    for (const auto& e : a_) s += std::norm(e);
    return std::sqrt(s);
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& e : a_) m = std::max(m, std::abs(e));
    return m;
  }

  bool all_finite() const {
    for (const auto& e : a_)
      if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
    return true;
  }

  CMatrix& operator+=(const CMatrix& o) {
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  CMatrix& operator-=(const CMatrix& o) {
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  CMatrix& operator*=(cx s) {
    for (auto& e : a_) e *= s;
    return *this;
  }

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(cx s, CMatrix a) { return a *= s; }
  friend CMatrix operator*(CMatrix a, cx s) { return a *= s; }

  friend CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    const int n = a.n_;
    CMatrix c(n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const cx aik = a(i, k);
        if (aik == cx(0.0)) continue;
        for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  std::vector<cx> apply(const std::vector<cx>& x) const {
    std::vector<cx> y(n_, 0.0);
    for (int i = 0; i < n_; ++i) {
      cx s = 0.0;
      for (int j = 0; j < n_; ++j) s += (*this)(i, j) * x[j];
      y[i] = s;
    }
    return y;
  }

 private:
  int n_;
  std::vector<cx> a_;
};

inline void require_finite(const CMatrix& a, const char* what) {
  if (!a.all_finite())
    fail(ErrorKind::input, std::string(what) + ": non-finite entries");
}

// Polynomial with complex coefficients c_0..c_d. The coefficient list is a
// capacity: the leading coefficient may be zero.
struct Polynomial {
  std::vector<cx> coeffs;

  Polynomial() : coeffs{cx(0.0)} {}
  explicit Polynomial(std::vector<cx> c) : coeffs(std::move(c)) {
    if (coeffs.empty()) coeffs.push_back(0.0);
  }

  static Polynomial one() { return Polynomial({cx(1.0)}); }

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  cx eval(cx z) const {
    cx v = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * z + *it;
    return v;
  }

  bool all_finite() const {
    for (const auto& c : coeffs)
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    return true;
  }
};

}  // namespace crx
