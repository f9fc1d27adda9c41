#ifndef HNR_FIXED_HPP
#define HNR_FIXED_HPP

#include <cstddef>
#include <vector>

#include <json.hpp>

#include "hnr/algebra.hpp"
#include "hnr/linalg.hpp"

namespace hnr {

/// Independent elements together with the reduced row-echelon form of
/// their bg coordinates.
class SpanBasis {
public:
  explicit SpanBasis(AlgebraPtr algebra);

  /// Keeps `x` iff it is outside the current span; returns whether it did.
  bool insert(const Element& x);
  bool contains(const Element& x) const;

  std::size_t rank() const noexcept { return elements_.size(); }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  const AlgebraPtr& algebra() const noexcept { return algebra_; }

private:
  void check_context(const Element& x) const;

  AlgebraPtr algebra_;
  std::vector<Element> elements_;
  RowEchelon echelon_;
};

/// g_{j-1}...g_{i+1} e_i g_{i+1}^{-1}...g_{j-1}^{-1} by engine products.
Element conjugation_product(const AlgebraPtr& alg, int i, int j);
/// conjugation_product checked against e_{i,j}.
Element conjugated_idempotent(const AlgebraPtr& alg, int i, int j);

/// Sum of b_l over the Sym(r)-images l of k.
Element orbit_sum(const AlgebraPtr& alg, const ColorVector& k);
/// prod_{i<j} e_{i,j} or (1 - e_{i,j}) according to k_i = k_j.
Element orbit_product(const AlgebraPtr& alg, const ColorVector& k);

/// b_[k], the sum of b_l over the Sym(r)-orbit of k. Also rebuilt as a
/// product of e_{i,j} and (1 - e_{i,j}); AssertFailed if they differ.
Element orbit_idempotent(const AlgebraPtr& alg, const ColorVector& k);

struct FixedBasisElement {
  ColorVector orbit;  // canonical representative
  Permutation w;
  Element element;    // b_[orbit] g_w
};

/// sum_{k <= min(n, r)} S(n, k) * n!
std::size_t fixed_dimension(int n, int r);

std::vector<FixedBasisElement> fixed_basis(const AlgebraPtr& alg);

/// Invariance under (1 2) and (1 2 ... r).
bool is_fixed(const Element& x);

/// Largest algebra dimension accepted by generation_check.
inline constexpr std::size_t kMaxClosureDimension = 5000;

struct GenerationReport {
  std::size_t rank = 0;
  std::size_t expected = 0;
  bool all_fixed = true;
  bool passed = false;
};

/// Closes span{1, g_i, e_i} under left and right multiplication by the
/// generators g_i, e_i.
GenerationReport generation_report(const AlgebraPtr& alg);
inline bool generation_check(const AlgebraPtr& alg) { return generation_report(alg).passed; }

void to_json(nlohmann::json& j, const FixedBasisElement& b);

}  // namespace hnr

#endif  // HNR_FIXED_HPP
