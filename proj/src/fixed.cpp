#include "hnr/fixed.hpp"

#include <deque>
#include <numeric>
#include <set>
#include <string>

#include "hnr/error.hpp"

namespace hnr {

SpanBasis::SpanBasis(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}

void SpanBasis::check_context(const Element& x) const {
  if (x.algebra() != algebra_ && !(x.context().params() == algebra_->params()))
    throw Error(ErrorCode::ContextMismatch, "element belongs to another algebra");
}

bool SpanBasis::insert(const Element& x) {
  check_context(x);
  if (!echelon_.insert(x.terms())) return false;
  elements_.push_back(x);
  return true;
}

bool SpanBasis::contains(const Element& x) const {
  check_context(x);
  return echelon_.contains(x.terms());
}

Element conjugation_product(const AlgebraPtr& alg, int i, int j) {
  if (i < 1 || i >= j || j > alg->n())
    throw Error(ErrorCode::IndexOutOfRange, "conjugated idempotent needs 1 <= i < j <= n");
  Element x = gen_e(alg, i);
  for (int m = i + 1; m <= j - 1; ++m) x = gen_g(alg, m) * x * g_generator_inverse(alg, m);
  return x;
}

Element conjugated_idempotent(const AlgebraPtr& alg, int i, int j) {
  Element x = conjugation_product(alg, i, j);
  if (x != gen_e_pair(alg, i, j))
    throw Error(ErrorCode::AssertFailed, "conjugate of e_i differs from e_{i,j}");
  return x;
}

Element orbit_sum(const AlgebraPtr& alg, const ColorVector& k) {
  alg->color_index(k);  // validates shape and range
  std::set<std::size_t> members;
  for (const auto& sigma : all_permutations(alg->r())) members.insert(alg->color_index(color_act(sigma, k)));
  Element sum = zero(alg);
  for (std::size_t m : members) sum.add_term(m, alg->identity_perm(), Scalar(1));
  return sum;
}

Element orbit_product(const AlgebraPtr& alg, const ColorVector& k) {
  alg->color_index(k);
  Element product = one(alg);
  for (int i = 1; i <= alg->n(); ++i)
    for (int j = i + 1; j <= alg->n(); ++j)
      product = product * (k[i] == k[j] ? gen_e_pair(alg, i, j) : one(alg) - gen_e_pair(alg, i, j));
  return product;
}

Element orbit_idempotent(const AlgebraPtr& alg, const ColorVector& k) {
  Element sum = orbit_sum(alg, k);
  if (sum != orbit_product(alg, k)) throw Error(ErrorCode::AssertFailed, "orbit sum and product formula disagree");
  return sum;
}

std::size_t fixed_dimension(int n, int r) {
  std::size_t orbits = 0;
  for (int k = 1; k <= std::min(n, r); ++k) orbits += static_cast<std::size_t>(stirling2(n, k));
  std::size_t fact = 1;
  for (int i = 2; i <= n; ++i) fact *= static_cast<std::size_t>(i);
  return orbits * fact;
}

std::vector<FixedBasisElement> fixed_basis(const AlgebraPtr& alg) {
  std::vector<FixedBasisElement> out;
  for (const auto& orbit : enumerate_orbit_representatives(alg->n(), alg->r())) {
    Element b = orbit_idempotent(alg, orbit.representative);
    for (std::size_t w = 0; w < alg->num_perms(); ++w)
      out.push_back({orbit.representative, alg->perm(w), b * g_word(alg, alg->perm(w))});
  }
  return out;
}

bool is_fixed(const Element& x) {
  const int r = x.context().r();
  if (r == 1) return true;
  std::vector<int> swap(r), cycle(r);
  std::iota(swap.begin(), swap.end(), 1);
  std::swap(swap[0], swap[1]);
  for (int c = 0; c < r; ++c) cycle[c] = (c + 1) % r + 1;
  return sigma_action(Permutation(swap), x) == x && sigma_action(Permutation(cycle), x) == x;
}

GenerationReport generation_report(const AlgebraPtr& alg) {
  if (alg->dimension() > kMaxClosureDimension)
    throw Error(ErrorCode::SizeGuard, "algebra of dimension " + std::to_string(alg->dimension()) +
                                          " is too large for the generation closure");
  std::vector<Element> gens;
  for (int i = 1; i < alg->n(); ++i) {
    gens.push_back(gen_g(alg, i));
    gens.push_back(gen_e(alg, i));
  }

  SpanBasis span(alg);
  std::deque<Element> pending;
  auto offer = [&](const Element& x) {
    if (span.insert(x)) pending.push_back(x);
  };
  offer(one(alg));
  for (const auto& g : gens) offer(g);
  while (!pending.empty()) {
    Element x = pending.front();
    pending.pop_front();
    for (const auto& g : gens) {
      offer(x * g);
      offer(g * x);
    }
  }

  GenerationReport report;
  report.rank = span.rank();
  report.expected = fixed_dimension(alg->n(), alg->r());
  for (const auto& x : span.elements())
    if (!is_fixed(x)) report.all_fixed = false;
  report.passed = report.all_fixed && report.rank == report.expected;
  return report;
}

void to_json(nlohmann::json& j, const FixedBasisElement& b) {
  nlohmann::json orbit, w;
  to_json(orbit, b.orbit);
  to_json(w, b.w);
  j = {{"orbit", orbit}, {"w", w}};
}

}  // namespace hnr
