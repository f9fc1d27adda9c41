#include "hnr/random.hpp"

#include <algorithm>

namespace hnr {

Scalar random_scalar(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
  const long p = num(rng);
  return Scalar(p, den(rng));
}

Element random_element(const AlgebraPtr& alg, std::mt19937_64& rng, int max_terms, int bound) {
  std::uniform_int_distribution<int> count(1, max_terms);
  std::uniform_int_distribution<std::size_t> color(0, alg->num_colors() - 1);
  std::uniform_int_distribution<std::size_t> perm(0, alg->num_perms() - 1);
  Element x(alg);
  const int terms = count(rng);
  for (int i = 0; i < terms; ++i) {
    const std::size_t k = color(rng);
    const std::size_t w = perm(rng);
    x.add_term(k, w, random_scalar(rng, bound));
  }
  return x;
}

ParameterSet random_parameters(int n, int r, std::mt19937_64& rng, int bound) {
  std::vector<Scalar> u;
  while (static_cast<int>(u.size()) < r) {
    Scalar x = random_scalar(rng, bound);
    if (std::find(u.begin(), u.end(), x) == u.end()) u.push_back(x);
  }
  Scalar q(0);
  while (q.is_zero()) q = random_scalar(rng, bound);
  return validate_parameters(n, r, q, u);
}

}  // namespace hnr
