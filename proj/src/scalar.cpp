#include "hnr/scalar.hpp"

#include <cctype>
#include <ostream>

#include "hnr/error.hpp"

namespace hnr {

namespace {

bool is_decimal(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Scalar::Scalar(long num, long den) {
  if (den == 0) throw Error(ErrorCode::OutOfRange, "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_decimal(num) || !is_decimal(den))
    throw Error(ErrorCode::BadShape, "malformed rational '" + std::string(text) + "'");
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::OutOfRange, "zero denominator in '" + std::string(text) + "'");
  mpq_class v{mpz_class(std::string(num), 10), d};
  v.canonicalize();
  if (negative) v = -v;
  return Scalar(std::move(v));
}

std::string Scalar::str() const { return value_.get_str(10); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::OutOfRange, "inverse of zero");
  return Scalar(mpq_class(1 / value_));
}

Scalar Scalar::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Scalar result(1);
  Scalar base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error(ErrorCode::OutOfRange, "division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

void to_json(nlohmann::json& j, const Scalar& s) { j = s.str(); }

void from_json(const nlohmann::json& j, Scalar& s) {
  if (j.is_number_integer()) {
    s = Scalar(j.get<long>());
  } else if (j.is_string()) {
    s = Scalar::parse(j.get<std::string>());
  } else {
    throw Error(ErrorCode::BadShape, "scalar must be a string \"p/q\" or an integer");
  }
}

Scalar ParameterSet::delta() const {
  Scalar d(1);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < i; ++j) d *= u[i] - u[j];
  return d;
}

Scalar ParameterSet::sigma_r() const {
  Scalar s(1);
  for (const auto& x : u) s *= x;
  return s;
}

ParameterSet validate_parameters(int n, int r, const Scalar& q,
                                 const std::vector<Scalar>& u) {
  if (n < 1 || r < 1) throw Error(ErrorCode::BadShape, "n and r must be positive");
  if (static_cast<int>(u.size()) != r)
    throw Error(ErrorCode::BadShape, "expected " + std::to_string(r) + " u-parameters, got " +
                                         std::to_string(u.size()));
  if (q.is_zero()) throw Error(ErrorCode::ZeroQ, "q must be invertible");
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < i; ++j)
      if (u[i] == u[j])
        throw Error(ErrorCode::RepeatedU, "u_" + std::to_string(j + 1) + " = u_" +
                                              std::to_string(i + 1) + " = " + u[i].str());
  ParameterSet p;
  p.n = n;
  p.r = r;
  p.q = q;
  p.u = u;
  p.symmetrizing_ok = !p.sigma_r().is_zero();
  return p;
}

Scalar elementary_symmetric(const ParameterSet& p, int j) {
  if (j < 0 || j > p.r)
    throw Error(ErrorCode::OutOfRange, "sigma_" + std::to_string(j) + " with r = " + std::to_string(p.r));
  // e[m] = sigma_m of the prefix processed so far
  std::vector<Scalar> e(p.r + 1, Scalar(0));
  e[0] = Scalar(1);
  for (int i = 0; i < p.r; ++i)
    for (int m = i + 1; m >= 1; --m) e[m] += e[m - 1] * p.u[i];
  return e[j];
}

Scalar complete_homogeneous(const ParameterSet& p, int s) {
  if (s < 0) throw Error(ErrorCode::OutOfRange, "h_" + std::to_string(s));
  // h[m] over the prefix u_1..u_i: h_i[m] = h_{i-1}[m] + u_i h_i[m-1]
  std::vector<Scalar> h(s + 1, Scalar(0));
  h[0] = Scalar(1);
  for (int i = 0; i < p.r; ++i)
    for (int m = 1; m <= s; ++m) h[m] += p.u[i] * h[m - 1];
  return h[s];
}

void to_json(nlohmann::json& j, const ParameterSet& p) {
  j = nlohmann::json{{"n", p.n}, {"r", p.r}, {"q", p.q.str()}};
  auto arr = nlohmann::json::array();
  for (const auto& x : p.u) arr.push_back(x.str());
  j["u"] = arr;
}

ParameterSet parameters_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("r") || !j.contains("q") ||
      !j.contains("u") || !j["u"].is_array())
    throw Error(ErrorCode::BadShape, "parameter set needs keys n, r, q, u");
  int n = j["n"].get<int>();
  int r = j["r"].get<int>();
  Scalar q = j["q"].get<Scalar>();
  std::vector<Scalar> u;
  for (const auto& x : j["u"]) u.push_back(x.get<Scalar>());
  return validate_parameters(n, r, q, u);
}

}  // namespace hnr
