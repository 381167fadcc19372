#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "catdpp/common.hpp"

namespace catdpp {

// Polynomial in q with exact integer coefficients, stored dense by
// exponent.  Trailing zero coefficients are always normalized away, so
// equality is coefficient-wise equality.
class QPolynomial {
 public:
  QPolynomial() = default;

  explicit QPolynomial(std::vector<BigInt> coefficients)
      : coeffs_(std::move(coefficients)) {
    normalize();
  }

  static QPolynomial zero() { return QPolynomial{}; }

  static QPolynomial one() { return QPolynomial{{BigInt(1)}}; }

  static QPolynomial monomial(std::size_t exponent, BigInt coefficient = 1) {
    std::vector<BigInt> c(exponent + 1);
    c[exponent] = std::move(coefficient);
    return QPolynomial{std::move(c)};
  }

  // The q-integer [m]_q = 1 + q + ... + q^{m-1}.
  static QPolynomial q_integer(int m) {
    if (m <= 0) return zero();
    return QPolynomial{std::vector<BigInt>(static_cast<std::size_t>(m), 1)};
  }

  // The q-factorial [m]_q! = [1]_q [2]_q ... [m]_q.
  static QPolynomial q_factorial(int m) {
    QPolynomial r = one();
    for (int i = 2; i <= m; ++i) r = r * q_integer(i);
    return r;
  }

  bool is_zero() const { return coeffs_.empty(); }

  // Degree of the zero polynomial is reported as -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  BigInt coeff(std::size_t exponent) const {
    return exponent < coeffs_.size() ? coeffs_[exponent] : BigInt(0);
  }

  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  BigInt eval_at_one() const {
    BigInt s = 0;
    for (const BigInt& c : coeffs_) s += c;
    return s;
  }

  friend bool operator==(const QPolynomial& a, const QPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  friend QPolynomial operator+(const QPolynomial& a, const QPolynomial& b) {
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return QPolynomial{std::move(c)};
  }

  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        c[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return QPolynomial{std::move(c)};
  }

  // Exact polynomial division; throws NonExactDivision if the divisor does
  // not divide *this, including any non-integral intermediate quotient.
  QPolynomial divide_exact(const QPolynomial& divisor) const {
    if (divisor.is_zero()) throw NonExactDivision("division by zero polynomial");
    if (is_zero()) return zero();
    if (degree() < divisor.degree()) {
      throw NonExactDivision("degree of dividend below degree of divisor");
    }
    std::vector<BigInt> rem = coeffs_;
    std::vector<BigInt> quot(coeffs_.size() - divisor.coeffs_.size() + 1);
    const BigInt& lead = divisor.coeffs_.back();
    for (std::size_t k = quot.size(); k-- > 0;) {
      BigInt top = rem[k + divisor.coeffs_.size() - 1];
      if (top == 0) continue;
      if (top % lead != 0) throw NonExactDivision("non-integral quotient term");
      BigInt q = top / lead;
      quot[k] = q;
      for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j) {
        rem[k + j] -= q * divisor.coeffs_[j];
      }
    }
    for (const BigInt& r : rem) {
      if (r != 0) throw NonExactDivision("nonzero remainder");
    }
    return QPolynomial{std::move(quot)};
  }

  // Human-readable form, ascending exponents: "1 + q^2 + 2q^3".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t e = 0; e < coeffs_.size(); ++e) {
      if (coeffs_[e] == 0) continue;
      if (!first) out << " + ";
      first = false;
      if (e == 0) {
        out << coeffs_[e];
        continue;
      }
      if (coeffs_[e] != 1) out << coeffs_[e];
      out << (e == 1 ? "q" : "q^" + std::to_string(e));
    }
    return out.str();
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

}  // namespace catdpp
