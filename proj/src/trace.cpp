#include "hnr/trace.hpp"

#include <map>
#include <mutex>
#include <random>
#include <string>

#include "hnr/basis.hpp"
#include "hnr/error.hpp"
#include "hnr/random.hpp"

namespace hnr {

namespace {

std::vector<Scalar> constant_terms(const ParameterSet& p) {
  std::vector<Scalar> out;
  for (int c = 1; c <= p.r; ++c) out.push_back(lagrange_polynomial(p, c).coefficient(0));
  return out;
}

Scalar sign_r(const ParameterSet& p) { return Scalar(p.r % 2 == 1 ? 1 : -1); }  // (-1)^{r+1}

nlohmann::json label_json(const Algebra& alg, std::uint64_t key) {
  return {{"c", exponent_vector(alg, alg.key_color(key))}, {"w", alg.perm(alg.key_perm(key)).one_line()}};
}

// gamma(k) = prod_i L_{k_i}(0) for every color index k.
std::vector<Scalar> closed_form_weights(const Algebra& alg) {
  const auto l0 = constant_terms(alg.params());
  std::vector<Scalar> out;
  for (std::size_t k = 0; k < alg.num_colors(); ++k) {
    Scalar w(1);
    for (int i = 1; i <= alg.n(); ++i) w *= l0[alg.color_entry(k, i) - 1];
    out.push_back(w);
  }
  return out;
}

Scalar apply_weights(const Element& x, const std::vector<Scalar>& weights) {
  const Algebra& alg = x.context();
  Scalar total(0);
  for (const auto& [key, c] : x.terms())
    if (alg.key_perm(key) == alg.identity_perm()) total += c * weights[alg.key_color(key)];
  return total;
}

// Weights are checked against the coordinate oracle the first time a
// parameter set is seen.
const std::vector<Scalar>& validated_weights(const AlgebraPtr& alg) {
  static std::mutex mutex;
  static std::map<std::string, std::vector<Scalar>> cache;
  nlohmann::json key;
  to_json(key, alg->params());
  std::lock_guard lock(mutex);
  auto it = cache.find(key.dump());
  if (it != cache.end()) return it->second;
  auto weights = closed_form_weights(*alg);
  for (std::size_t k = 0; k < alg->num_colors(); ++k)
    if (weights[k] != tau_via_coordinates(basis_element(alg, k, alg->identity_perm())))
      throw Error(ErrorCode::AssertFailed, "trace weight disagrees with the coordinate oracle");
  return cache.emplace(key.dump(), std::move(weights)).first->second;
}

}  // namespace

Scalar tau(const Element& x) { return apply_weights(x, validated_weights(x.algebra())); }

Scalar tau_via_coordinates(const Element& x) {
  auto v = to_coordinates(x, Basis::tg);
  auto it = v.entries.find(x.context().key(0, x.context().identity_perm()));
  return it == v.entries.end() ? Scalar(0) : it->second;
}

void validate_trace_weights(const AlgebraPtr& alg) {
  const auto weights = closed_form_weights(*alg);
  for (std::size_t k = 0; k < alg->num_colors(); ++k)
    if (weights[k] != tau_via_coordinates(basis_element(alg, k, alg->identity_perm())))
      throw Error(ErrorCode::AssertFailed, "trace weight disagrees with the coordinate oracle");
}

TracePowerCheck tau_power_check(const AlgebraPtr& alg, int s, int i) {
  const ParameterSet& p = alg->params();
  if (s < 0 || s > p.r - 1 || i < 1 || i > p.n)
    throw Error(ErrorCode::OutOfRange, "tau_power_check needs 0 <= s < r and 1 <= i <= n");
  TracePowerCheck out;
  out.lhs = tau(power(gen_t(alg, i), p.r + s));
  out.rhs = sign_r(p) * p.sigma_r() * complete_homogeneous(p, s);
  return out;
}

Element dual_t_power(const AlgebraPtr& alg, int i, int c) {
  const ParameterSet& p = alg->params();
  if (!p.symmetrizing_ok) throw Error(ErrorCode::NotSymmetrizing, "sigma_r = 0");
  if (c < 1 || c > p.r - 1) throw Error(ErrorCode::OutOfRange, "dual of t^c needs 1 <= c <= r-1");
  Element t = gen_t(alg, i);
  Element sum = zero(alg);
  for (int j = 0; j <= p.r - c - 1; ++j) {
    Scalar coeff = elementary_symmetric(p, j);
    if (j % 2) coeff = -coeff;
    sum += scale(coeff, power(t, p.r - c - j));
  }
  return scale(sign_r(p) / p.sigma_r(), sum);
}

Element dual_basis_element(const AlgebraPtr& alg, const std::vector<int>& c, const Permutation& w) {
  const ParameterSet& p = alg->params();
  if (!p.symmetrizing_ok) throw Error(ErrorCode::NotSymmetrizing, "sigma_r = 0");
  if (static_cast<int>(c.size()) != p.n) throw Error(ErrorCode::OutOfRange, "exponent vector length");
  for (int e : c)
    if (e < 0 || e > p.r - 1) throw Error(ErrorCode::OutOfRange, "exponent outside [0, r-1]");
  Element x = g_word(alg, w.inverse());
  for (int i = 1; i <= p.n; ++i)
    if (c[i - 1] != 0) x = x * dual_t_power(alg, i, c[i - 1]);
  return x;
}

GramReport gram_check(const AlgebraPtr& alg) {
  if (!alg->params().symmetrizing_ok) throw Error(ErrorCode::NotSymmetrizing, "sigma_r = 0");
  const std::size_t size = alg->dimension();
  if (size > kMaxGramSize)
    throw Error(ErrorCode::SizeGuard, "Gram matrix of size " + std::to_string(size) + " exceeds the guard");

  std::vector<Element> basis, duals;
  for (std::size_t key = 0; key < size; ++key) {
    const std::size_t label = alg->key_color(key);
    const std::size_t w = alg->key_perm(key);
    basis.push_back(from_coordinates(alg, CoordinateVector{Basis::tg, alg, {{key, Scalar(1)}}}));
    duals.push_back(dual_basis_element(alg, exponent_vector(*alg, label), alg->perm(w)));
  }

  GramReport report;
  report.algebra = alg;
  report.size = size;
  report.is_identity = true;
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b) {
      Scalar value = tau(basis[a] * duals[b]);
      if (!value.is_zero()) report.pairings.emplace(std::pair{a, b}, value);
      if (value != Scalar(a == b ? 1 : 0) && report.is_identity) {
        report.is_identity = false;
        report.counterexample = std::pair{a, b};
      }
    }
  return report;
}

bool trace_property_check(const AlgebraPtr& alg, int trials, std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorCode::OutOfRange, "trials must be positive");
  std::mt19937_64 rng(seed);
  bool ok = true;
  for (int t = 0; t < trials; ++t) {
    Element x = random_element(alg, rng);
    Element y = random_element(alg, rng);
    if (tau(x * y) != tau(y * x)) ok = false;
  }
  return ok;
}

nlohmann::json to_json(const GramReport& report) {
  const Algebra& alg = *report.algebra;
  nlohmann::json params;
  to_json(params, alg.params());
  auto entries = nlohmann::json::array();
  for (const auto& [ab, v] : report.pairings)
    entries.push_back({{"row", label_json(alg, ab.first)}, {"col", label_json(alg, ab.second)}, {"value", v.str()}});
  nlohmann::json j{{"context", params},
                   {"size", report.size},
                   {"is_identity", report.is_identity},
                   {"result", report.is_identity ? "IDENTITY" : "NOT_IDENTITY"},
                   {"pairings", entries}};
  if (report.counterexample)
    j["counterexample"] = {{"row", label_json(alg, report.counterexample->first)},
                           {"col", label_json(alg, report.counterexample->second)}};
  else
    j["counterexample"] = nullptr;
  return j;
}

}  // namespace hnr
