#pragma once

// Truncated formal power series with exact coefficients.
//
// UniSeries<T> holds the coefficients of x^0..x^N. BiSeries<T> holds a
// dense (orderX+1) x (orderY+1) grid of coefficients of x^n y^k. Every
// binary operation truncates to the smaller operand order.

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace lintree {

using BigInt = boost::multiprecision::mpz_int;

/// Thrown when a reciprocal is requested for a series whose constant term
/// is not a unit of the coefficient ring.
class NotInvertible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <class T = BigInt>
class UniSeries {
 public:
  using value_type = T;

  UniSeries() : coeffs_(1) {}
  explicit UniSeries(std::size_t order) : coeffs_(order + 1) {}
  UniSeries(std::size_t order, std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1);
  }

  static UniSeries one(std::size_t order) { return monomial(order, 0); }

  /// c * x^m truncated to `order` (zero series when m > order).
  static UniSeries monomial(std::size_t order, std::size_t m, T c = T(1)) {
    UniSeries s(order);
    if (m <= order) s.coeffs_[m] = std::move(c);
    return s;
  }

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const T& operator[](std::size_t i) const { return coeffs_[i]; }
  T& operator[](std::size_t i) { return coeffs_[i]; }
  std::span<const T> coeffs() const noexcept { return coeffs_; }

  UniSeries truncated(std::size_t order) const {
    std::vector<T> c(coeffs_.begin(), coeffs_.begin() + std::min(order, this->order()) + 1);
    return UniSeries(order, std::move(c));
  }

  UniSeries& operator+=(const UniSeries& b) {
    shrink_to(b.order());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
    return *this;
  }
  UniSeries& operator-=(const UniSeries& b) {
    shrink_to(b.order());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
    return *this;
  }
  UniSeries& operator*=(const T& c) {
    for (auto& v : coeffs_) v *= c;
    return *this;
  }

  friend UniSeries operator+(UniSeries a, const UniSeries& b) { return a += b; }
  friend UniSeries operator-(UniSeries a, const UniSeries& b) { return a -= b; }
  friend UniSeries operator*(UniSeries a, const T& c) { return a *= c; }

  /// Truncated Cauchy product.
  friend UniSeries operator*(const UniSeries& a, const UniSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    UniSeries c(n);
    for (std::size_t i = 0; i <= n; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; i + j <= n; ++j) c.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return c;
  }

  friend bool operator==(const UniSeries& a, const UniSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void shrink_to(std::size_t order) {
    if (order < this->order()) coeffs_.resize(order + 1);
  }

  std::vector<T> coeffs_;
};

/// Multiply by x^m, keeping the order.
template <class T>
UniSeries<T> scale_by_monomial(const UniSeries<T>& a, std::size_t m) {
  UniSeries<T> out(a.order());
  for (std::size_t i = 0; i + m <= a.order(); ++i) out[i + m] = a[i];
  return out;
}

/// a(x^2), same order as a; odd coefficients are zero.
template <class T>
UniSeries<T> substitute_x_squared(const UniSeries<T>& a) {
  UniSeries<T> out(a.order());
  for (std::size_t i = 0; 2 * i <= a.order(); ++i) out[2 * i] = a[i];
  return out;
}

/// Multiplicative inverse by long division. The constant term must be +1 or -1.
template <class T>
UniSeries<T> reciprocal(const UniSeries<T>& a) {
  const T& a0 = a[0];
  if (a0 != 1 && a0 != -1) throw NotInvertible("reciprocal: constant term is not a unit");
  const std::size_t n = a.order();
  UniSeries<T> b(n);
  b[0] = a0;  // a0^-1 == a0 for a0 = +-1
  for (std::size_t m = 1; m <= n; ++m) {
    T acc = 0;
    for (std::size_t i = 1; i <= m; ++i) {
      if (a[i] != 0) acc += a[i] * b[m - i];
    }
    b[m] = -a0 * acc;
  }
  return b;
}

/// 1/(1-x) = 1 + x + x^2 + ...
template <class T = BigInt>
UniSeries<T> geometric_gf(std::size_t order) {
  return UniSeries<T>(order, std::vector<T>(order + 1, T(1)));
}

/// Sum_{n<=N} p(n) x^n via Euler's pentagonal-number recurrence
///   p(n) = sum_{j>=1} (-1)^(j+1) [p(n - j(3j-1)/2) + p(n - j(3j+1)/2)].
template <class T = BigInt>
UniSeries<T> partition_gf(std::size_t order) {
  UniSeries<T> p(order);
  p[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    T acc = 0;
    for (std::size_t j = 1;; ++j) {
      const std::size_t g1 = j * (3 * j - 1) / 2;
      if (g1 > n) break;
      const std::size_t g2 = j * (3 * j + 1) / 2;
      if (j % 2 == 1) {
        acc += p[n - g1];
        if (g2 <= n) acc += p[n - g2];
      } else {
        acc -= p[n - g1];
        if (g2 <= n) acc -= p[n - g2];
      }
    }
    p[n] = std::move(acc);
  }
  return p;
}

template <class T = BigInt>
class BiSeries {
 public:
  using value_type = T;

  BiSeries() : BiSeries(0, 0) {}
  BiSeries(std::size_t orderX, std::size_t orderY)
      : orderX_(orderX), orderY_(orderY), coeffs_((orderX + 1) * (orderY + 1)) {}

  /// Embed a univariate series as the y^0 slice.
  static BiSeries lift(const UniSeries<T>& u, std::size_t orderY) {
    BiSeries b(u.order(), orderY);
    for (std::size_t n = 0; n <= u.order(); ++n) b.at(n, 0) = u[n];
    return b;
  }

  static BiSeries one(std::size_t orderX, std::size_t orderY) {
    BiSeries b(orderX, orderY);
    b.at(0, 0) = 1;
    return b;
  }

  std::size_t order_x() const noexcept { return orderX_; }
  std::size_t order_y() const noexcept { return orderY_; }

  /// Coefficient of x^n y^k; zero outside the stored range.
  T coeff(std::size_t n, std::size_t k) const {
    if (n > orderX_ || k > orderY_) return T(0);
    return coeffs_[index(n, k)];
  }
  const T& at(std::size_t n, std::size_t k) const { return coeffs_[index(n, k)]; }
  T& at(std::size_t n, std::size_t k) { return coeffs_[index(n, k)]; }

  /// Coefficients of y^k as a series in x.
  UniSeries<T> column(std::size_t k) const {
    UniSeries<T> c(orderX_);
    if (k <= orderY_)
      for (std::size_t n = 0; n <= orderX_; ++n) c[n] = at(n, k);
    return c;
  }

  BiSeries truncated(std::size_t orderX, std::size_t orderY) const {
    BiSeries out(orderX, orderY);
    for (std::size_t n = 0; n <= std::min(orderX, orderX_); ++n)
      for (std::size_t k = 0; k <= std::min(orderY, orderY_); ++k) out.at(n, k) = at(n, k);
    return out;
  }

  friend BiSeries operator+(const BiSeries& a, const BiSeries& b) { return combine(a, b, +1); }
  friend BiSeries operator-(const BiSeries& a, const BiSeries& b) { return combine(a, b, -1); }

  /// Truncated product in both variables. Iterates only over nonzero terms
  /// of each operand, so sparse (e.g. y-homogeneous) factors stay cheap.
  friend BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    const std::size_t nx = std::min(a.orderX_, b.orderX_);
    const std::size_t ny = std::min(a.orderY_, b.orderY_);
    BiSeries c(nx, ny);
    const auto sa = a.support(nx, ny);
    const auto sb = b.support(nx, ny);
    for (const auto& [i, k1] : sa) {
      const T& u = a.at(i, k1);
      for (const auto& [j, k2] : sb) {
        if (i + j > nx || k1 + k2 > ny) continue;
        c.at(i + j, k1 + k2) += u * b.at(j, k2);
      }
    }
    return c;
  }

  friend BiSeries operator*(const BiSeries& a, const UniSeries<T>& u) {
    return a * lift(u, a.orderY_);
  }

  friend bool operator==(const BiSeries& a, const BiSeries& b) {
    return a.orderX_ == b.orderX_ && a.orderY_ == b.orderY_ && a.coeffs_ == b.coeffs_;
  }

  /// Nonzero positions (n, k) with n <= nx, k <= ny.
  std::vector<std::pair<std::size_t, std::size_t>> support(std::size_t nx, std::size_t ny) const {
    std::vector<std::pair<std::size_t, std::size_t>> s;
    for (std::size_t n = 0; n <= std::min(nx, orderX_); ++n)
      for (std::size_t k = 0; k <= std::min(ny, orderY_); ++k)
        if (at(n, k) != 0) s.emplace_back(n, k);
    return s;
  }

 private:
  std::size_t index(std::size_t n, std::size_t k) const { return n * (orderY_ + 1) + k; }

  static BiSeries combine(const BiSeries& a, const BiSeries& b, int sign) {
    const std::size_t nx = std::min(a.orderX_, b.orderX_);
    const std::size_t ny = std::min(a.orderY_, b.orderY_);
    BiSeries c(nx, ny);
    for (std::size_t n = 0; n <= nx; ++n)
      for (std::size_t k = 0; k <= ny; ++k)
        if (sign > 0)
          c.at(n, k) = a.at(n, k) + b.at(n, k);
        else
          c.at(n, k) = a.at(n, k) - b.at(n, k);
    return c;
  }

  std::size_t orderX_;
  std::size_t orderY_;
  std::vector<T> coeffs_;
};

/// Multiply by x^a y^b, keeping both orders.
template <class T>
BiSeries<T> scale_by_monomial(const BiSeries<T>& s, std::size_t a, std::size_t b) {
  BiSeries<T> out(s.order_x(), s.order_y());
  for (std::size_t n = 0; n + a <= s.order_x(); ++n)
    for (std::size_t k = 0; k + b <= s.order_y(); ++k) out.at(n + a, k + b) = s.at(n, k);
  return out;
}

/// 1/(1 - u) = sum_j u^j. Requires u to have positive x-valuation, so the
/// sum stops once the power's x-valuation passes orderX.
template <class T>
BiSeries<T> geometric_inverse(const BiSeries<T>& u) {
  for (std::size_t k = 0; k <= u.order_y(); ++k)
    if (u.at(0, k) != 0) throw NotInvertible("geometric_inverse: u must have positive x-valuation");
  BiSeries<T> sum = BiSeries<T>::one(u.order_x(), u.order_y());
  BiSeries<T> power = u;
  for (std::size_t j = 1; j <= u.order_x(); ++j) {
    const auto terms = power.support(power.order_x(), power.order_y());
    if (terms.empty()) break;
    for (const auto& [n, k] : terms) sum.at(n, k) += power.at(n, k);
    if (j < u.order_x()) power = power * u;
  }
  return sum;
}

}  // namespace lintree
