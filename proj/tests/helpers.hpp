#ifndef HNR_TESTS_HELPERS_HPP
#define HNR_TESTS_HELPERS_HPP

#include <string>
#include <vector>

#include "hnr/algebra.hpp"
#include "hnr/scalar.hpp"

namespace hnr::test {

inline Scalar S(const std::string& text) { return Scalar::parse(text); }

inline ParameterSet params(int n, int r, const std::string& q,
                           const std::vector<std::string>& u) {
  std::vector<Scalar> us;
  for (const auto& x : u) us.push_back(S(x));
  return validate_parameters(n, r, S(q), us);
}

inline AlgebraPtr algebra(int n, int r, const std::string& q,
                          const std::vector<std::string>& u) {
  return Algebra::create(params(n, r, q, u));
}

}  // namespace hnr::test

#endif
