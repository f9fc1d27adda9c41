#ifndef HNR_BASIS_HPP
#define HNR_BASIS_HPP

#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hnr/algebra.hpp"
#include "hnr/linalg.hpp"
#include "hnr/polynomial.hpp"

namespace hnr {

/// bg: b_k g_w.  tg: t^c g_w.  tT: t^c T_w.  (c in [0, r-1]^n)
enum class Basis { bg, tg, tT };

const char* to_string(Basis basis);
/// Throws BadLabel for anything but "bg", "tg", "tT".
Basis basis_from_string(std::string_view name);

/// Coordinates of an element in one of the three bases. Keys are
/// label * n! + perm, where label is the color index (bg) or the
/// lexicographic index of the exponent vector c (tg, tT).
struct CoordinateVector {
  Basis basis = Basis::bg;
  AlgebraPtr algebra;
  std::map<std::uint64_t, Scalar> entries;
};

/// Exponent vector with lexicographic index `label`; entries in [0, r-1].
std::vector<int> exponent_vector(const Algebra& alg, std::size_t label);
std::size_t exponent_index(const Algebra& alg, const std::vector<int>& c);

/// L_c with L_c(u_{c'}) = delta(c, c').
UniPolynomial lagrange_polynomial(const ParameterSet& p, int c);
/// F_c of degree r-1 with F_c(u_{c'}) = delta(c, c') * Delta.
UniPolynomial F_polynomial(const ParameterSet& p, int c);
/// V_{i,j} = u_j^{i-1}.
DenseMatrix vandermonde(const ParameterSet& p);
/// Row c holds the coefficients of F_c; equals Delta * V^{-1}.
DenseMatrix F_matrix(const ParameterSet& p);

/// f(x) evaluated in the algebra.
Element evaluate_at(const UniPolynomial& f, const Element& x);
/// t_1^{c_1} ... t_n^{c_n}.
Element t_monomial(const AlgebraPtr& alg, const std::vector<int>& exponents);

/// T_w for every w, in permutation-index order.
class TWordTable {
public:
  explicit TWordTable(const AlgebraPtr& alg);
  const Element& operator[](std::size_t w) const { return words_[w]; }

private:
  std::vector<Element> words_;
};

CoordinateVector to_coordinates(const Element& x, Basis basis);
CoordinateVector to_coordinates(const Element& x, Basis basis, const TWordTable& table);
/// Throws BadLabel for keys outside the basis, ContextMismatch for a
/// vector built over a different algebra.
Element from_coordinates(const AlgebraPtr& alg, const CoordinateVector& v);
Element from_coordinates(const AlgebraPtr& alg, const CoordinateVector& v, const TWordTable& table);

/// Column j holds the `to`-coordinates of the j-th `from`-basis element.
DenseMatrix change_of_basis_matrix(const AlgebraPtr& alg, Basis from, Basis to);

struct ParameterChange {
  std::vector<Scalar> a;                    // a_0 .. a_{r-1}
  std::vector<Element> images;              // sum_j a_j t_i^j
  std::vector<Element> images_via_idempotents;  // sum_k u~_{k_i} b_k
};

/// Images of the generators t~_i of the algebra with parameters
/// (q, u~). Throws ContextMismatch unless n, r, q agree, and
/// AssertFailed if the two expressions for t~_i disagree.
ParameterChange parameter_change_map(const AlgebraPtr& alg, const ParameterSet& target);

nlohmann::json to_json(const CoordinateVector& v);
CoordinateVector coordinates_from_json(const AlgebraPtr& alg, const nlohmann::json& j);

}  // namespace hnr

#endif  // HNR_BASIS_HPP
