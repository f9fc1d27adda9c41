#ifndef HNR_RANDOM_HPP
#define HNR_RANDOM_HPP

#include <random>

#include "hnr/algebra.hpp"

namespace hnr {

/// Rational with numerator in [-bound, bound] and denominator in [1, bound].
Scalar random_scalar(std::mt19937_64& rng, int bound = 20);

/// Between 1 and `max_terms` random basis terms with random_scalar
/// coefficients. Deterministic for a given generator state.
Element random_element(const AlgebraPtr& alg, std::mt19937_64& rng, int max_terms = 8,
                       int bound = 20);

/// Distinct random rational u_i and a random nonzero q.
ParameterSet random_parameters(int n, int r, std::mt19937_64& rng, int bound = 20);

}  // namespace hnr

#endif  // HNR_RANDOM_HPP
