#ifndef HNR_POLYNOMIAL_HPP
#define HNR_POLYNOMIAL_HPP

#include <vector>

#include "hnr/scalar.hpp"

namespace hnr {

/// Dense univariate polynomial c_0 + c_1 X + ... with trailing zeros
/// trimmed; the zero polynomial has no coefficients.
class UniPolynomial {
public:
  UniPolynomial() = default;
  explicit UniPolynomial(std::vector<Scalar> coefficients);

  static UniPolynomial constant(const Scalar& c) { return UniPolynomial({c}); }
  /// X - root
  static UniPolynomial linear_factor(const Scalar& root);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Scalar coefficient(int i) const;
  const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }

  Scalar operator()(const Scalar& x) const;

  friend UniPolynomial operator+(const UniPolynomial& a, const UniPolynomial& b);
  friend UniPolynomial operator-(const UniPolynomial& a, const UniPolynomial& b);
  friend UniPolynomial operator*(const UniPolynomial& a, const UniPolynomial& b);
  friend UniPolynomial operator*(const Scalar& c, const UniPolynomial& p);
  friend bool operator==(const UniPolynomial&, const UniPolynomial&) = default;

private:
  void trim();
  std::vector<Scalar> coeffs_;
};

}  // namespace hnr

#endif  // HNR_POLYNOMIAL_HPP
