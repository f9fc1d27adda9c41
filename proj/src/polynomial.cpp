#include "hnr/polynomial.hpp"

#include <algorithm>

namespace hnr {

UniPolynomial::UniPolynomial(std::vector<Scalar> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

UniPolynomial UniPolynomial::linear_factor(const Scalar& root) {
  return UniPolynomial({-root, Scalar(1)});
}

void UniPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar UniPolynomial::coefficient(int i) const {
  return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : Scalar(0);
}

Scalar UniPolynomial::operator()(const Scalar& x) const {
  Scalar acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPolynomial operator+(const UniPolynomial& a, const UniPolynomial& b) {
  std::vector<Scalar> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return UniPolynomial(std::move(c));
}

UniPolynomial operator-(const UniPolynomial& a, const UniPolynomial& b) {
  return a + Scalar(-1) * b;
}

UniPolynomial operator*(const UniPolynomial& a, const UniPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPolynomial(std::move(c));
}

UniPolynomial operator*(const Scalar& s, const UniPolynomial& p) {
  std::vector<Scalar> c = p.coeffs_;
  for (auto& x : c) x *= s;
  return UniPolynomial(std::move(c));
}

}  // namespace hnr
