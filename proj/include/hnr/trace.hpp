#ifndef HNR_TRACE_HPP
#define HNR_TRACE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hnr/algebra.hpp"

namespace hnr {

/// tau(b_k g_w) = delta(w = id) * prod_i L_{k_i}(0). The weights are
/// validated against tau_via_coordinates once per parameter set.
Scalar tau(const Element& x);
/// The (c = 0, w = id) coordinate in the t^c g_w basis.
Scalar tau_via_coordinates(const Element& x);
/// Compares the closed-form weights with tau_via_coordinates on every
/// b_k; throws AssertFailed on the first disagreement.
void validate_trace_weights(const AlgebraPtr& alg);

struct TracePowerCheck {
  Scalar lhs;  // tau(t_i^{r+s})
  Scalar rhs;  // (-1)^{r+1} sigma_r h_s
};
/// Requires 0 <= s <= r-1 and 1 <= i <= n (OutOfRange otherwise).
TracePowerCheck tau_power_check(const AlgebraPtr& alg, int s, int i);

/// (t_i^c)^vee, 1 <= c <= r-1.
Element dual_t_power(const AlgebraPtr& alg, int i, int c);
/// (t^c g_w)^vee = g_{w^{-1}} prod_{c_i != 0} (t_i^{c_i})^vee.
/// Throws NotSymmetrizing when sigma_r = 0.
Element dual_basis_element(const AlgebraPtr& alg, const std::vector<int>& c, const Permutation& w);

/// Largest tg basis for which gram_check runs (pairings = size^2).
inline constexpr std::size_t kMaxGramSize = 1000;

struct GramReport {
  AlgebraPtr algebra;
  std::size_t size = 0;
  /// Nonzero pairings tau(x_a y_b) keyed by tg labels (a, b).
  std::map<std::pair<std::uint64_t, std::uint64_t>, Scalar> pairings;
  bool is_identity = false;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> counterexample;
};

/// Pairs every t^c g_w against every dual element.
GramReport gram_check(const AlgebraPtr& alg);

/// tau(xy) = tau(yx) on `trials` seeded random pairs.
bool trace_property_check(const AlgebraPtr& alg, int trials, std::uint64_t seed);

nlohmann::json to_json(const GramReport& report);

}  // namespace hnr

#endif  // HNR_TRACE_HPP
