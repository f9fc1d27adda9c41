#ifndef HNR_SCALAR_HPP
#define HNR_SCALAR_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace hnr {

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Thin value wrapper over GMP's mpq_class.
class Scalar {
public:
  Scalar() = default;
  Scalar(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);
  explicit Scalar(mpq_class value) : value_(std::move(value)) {
    value_.canonicalize();
  }

  /// Parses "p" or "p/q" (decimal, optional leading minus).
  static Scalar parse(std::string_view text);

  std::string str() const;
  const mpq_class& raw() const noexcept { return value_; }

  bool is_zero() const noexcept { return sgn(value_) == 0; }
  bool is_one() const noexcept { return value_ == 1; }
  int sign() const noexcept { return sgn(value_); }

  Scalar inverse() const;
  Scalar pow(int exponent) const;
  Scalar abs() const { return Scalar(mpq_class(::abs(value_))); }

  Scalar& operator+=(const Scalar& o) { value_ += o.value_; return *this; }
  Scalar& operator-=(const Scalar& o) { value_ -= o.value_; return *this; }
  Scalar& operator*=(const Scalar& o) { value_ *= o.value_; return *this; }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a) { return Scalar(mpq_class(-a.value_)); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

void to_json(nlohmann::json& j, const Scalar& s);
void from_json(const nlohmann::json& j, Scalar& s);

/// Validated parameters (n, r, q, u_1..u_r) of the algebra.
struct ParameterSet {
  int n = 1;
  int r = 1;
  Scalar q{1};
  std::vector<Scalar> u;
  bool symmetrizing_ok = false;

  /// q - q^{-1}
  Scalar q_diff() const { return q - q.inverse(); }
  /// prod_{i>j} (u_i - u_j)
  Scalar delta() const;
  /// u_1 ... u_r
  Scalar sigma_r() const;

  friend bool operator==(const ParameterSet& a, const ParameterSet& b) {
    return a.n == b.n && a.r == b.r && a.q == b.q && a.u == b.u;
  }
};

ParameterSet validate_parameters(int n, int r, const Scalar& q,
                                 const std::vector<Scalar>& u);

/// sigma_j(u_1..u_r); sigma_0 = 1.
Scalar elementary_symmetric(const ParameterSet& p, int j);
/// h_s(u_1..u_r); h_0 = 1.
Scalar complete_homogeneous(const ParameterSet& p, int s);

void to_json(nlohmann::json& j, const ParameterSet& p);
/// Reads {"n","r","q","u"} and validates.
ParameterSet parameters_from_json(const nlohmann::json& j);

}  // namespace hnr

#endif  // HNR_SCALAR_HPP
