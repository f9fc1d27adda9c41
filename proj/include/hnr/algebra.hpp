#ifndef HNR_ALGEBRA_HPP
#define HNR_ALGEBRA_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include <json.hpp>

#include "hnr/combinatorics.hpp"
#include "hnr/scalar.hpp"

namespace hnr {

/// Largest admissible basis size r^n * n!.
inline constexpr std::size_t kMaxBasisSize = 1'000'000;

/// Immutable algebra context: parameters plus the index tables the
/// rewriting engine runs on. Colors and permutations are indexed in
/// lexicographic order, so basis keys sort canonically.
class Algebra {
public:
  /// Throws SizeGuard when r^n * n! exceeds kMaxBasisSize.
  static std::shared_ptr<const Algebra> create(const ParameterSet& params);

  const ParameterSet& params() const noexcept { return params_; }
  int n() const noexcept { return params_.n; }
  int r() const noexcept { return params_.r; }
  std::size_t num_colors() const noexcept { return num_colors_; }
  std::size_t num_perms() const noexcept { return perms_.size(); }
  std::size_t dimension() const noexcept { return num_colors_ * perms_.size(); }

  /// Color k_i (1-based i) of the color vector with index `color`.
  int color_entry(std::size_t color, int i) const {
    return color_digits_[color * n() + (i - 1)];
  }
  ColorVector color(std::size_t color) const;
  std::size_t color_index(const ColorVector& k) const;

  const Permutation& perm(std::size_t w) const { return perms_[w]; }
  std::size_t perm_index(const Permutation& w) const;
  std::size_t identity_perm() const noexcept { return 0; }
  std::size_t inverse_perm(std::size_t w) const { return inverse_[w]; }
  /// Index of w s_i.
  std::size_t times_simple(std::size_t w, int i) const {
    return right_simple_[w * (n() - 1) + (i - 1)];
  }
  int perm_length(std::size_t w) const { return lengths_[w]; }
  const std::vector<int>& word(std::size_t w) const { return words_[w]; }

  /// Index of place_act(w, m).
  std::size_t place(std::size_t w, std::size_t color) const;

  static std::uint64_t key(std::size_t color, std::size_t perm, std::size_t num_perms) {
    return static_cast<std::uint64_t>(color) * num_perms + perm;
  }
  std::uint64_t key(std::size_t color, std::size_t perm) const {
    return key(color, perm, num_perms());
  }
  std::size_t key_color(std::uint64_t key) const { return key / num_perms(); }
  std::size_t key_perm(std::uint64_t key) const { return key % num_perms(); }

private:
  explicit Algebra(const ParameterSet& params);

  ParameterSet params_;
  std::size_t num_colors_ = 0;
  std::vector<int> color_digits_;
  std::vector<Permutation> perms_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> right_simple_;
  std::vector<int> lengths_;
  std::vector<std::vector<int>> words_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Sparse linear combination of b_k g_w. No stored coefficient is zero.
class Element {
public:
  using Terms = std::map<std::uint64_t, Scalar>;

  explicit Element(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}
  Element(AlgebraPtr algebra, Terms terms);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const Algebra& context() const noexcept { return *algebra_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Coefficient of b_k g_w (zero when absent).
  Scalar coefficient(std::size_t color, std::size_t perm) const;

  /// Adds c * b_k g_w.
  void add_term(std::size_t color, std::size_t perm, const Scalar& c);

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Scalar& c);

  friend bool operator==(const Element& a, const Element& b);

private:
  AlgebraPtr algebra_;
  Terms terms_;
};

/// Throws ContextMismatch unless both elements live in the same algebra.
void require_same_context(const Element& a, const Element& b);

Element zero(const AlgebraPtr& alg);
Element one(const AlgebraPtr& alg);
Element scalar_element(const AlgebraPtr& alg, const Scalar& c);
Element add(const Element& x, const Element& y);
Element negate(const Element& x);
Element scale(const Scalar& c, const Element& x);
bool equals(const Element& x, const Element& y);

Element multiply(const Element& x, const Element& y);
Element power(const Element& x, int exponent);

inline Element operator+(Element a, const Element& b) { return a += b; }
inline Element operator-(Element a, const Element& b) { return a -= b; }
inline Element operator-(const Element& a) { return negate(a); }
inline Element operator*(const Element& a, const Element& b) { return multiply(a, b); }
inline Element operator*(const Scalar& c, const Element& x) { return scale(c, x); }

/// b_k g_w for indexed k, w.
Element basis_element(const AlgebraPtr& alg, std::size_t color, std::size_t perm);

Element gen_b(const AlgebraPtr& alg, const ColorVector& k);
Element gen_g(const AlgebraPtr& alg, int i);
Element gen_t(const AlgebraPtr& alg, int i);
/// T_i = g_i - B'_{i,i+1}.
Element gen_T(const AlgebraPtr& alg, int i);
/// e_i = sum of b_k over k_i = k_{i+1}.
Element gen_e(const AlgebraPtr& alg, int i);
/// e_{i,j} = sum of b_k over k_i = k_j.
Element gen_e_pair(const AlgebraPtr& alg, int i, int j);
/// B'_{i,j} = -(q - q^{-1}) sum of b_k over k_i < k_j.
Element gen_Bprime(const AlgebraPtr& alg, int i, int j);
/// B_j = (q - q^{-1}) sum over k_j < k_{j+1} of (u_{k_j} - u_{k_{j+1}}) b_k.
Element gen_B(const AlgebraPtr& alg, int j);

struct GeneratorSpec {
  enum class Kind { b, g, t, T, e, e_pair, Bprime, B };
  Kind kind;
  int i = 0;
  int j = 0;
  ColorVector k;
};

Element generator(const AlgebraPtr& alg, const GeneratorSpec& spec);

/// Product of g generators along the canonical reduced word of w.
Element g_word(const AlgebraPtr& alg, const Permutation& w);
/// Product of T generators along the canonical reduced word of w.
Element T_word(const AlgebraPtr& alg, const Permutation& w);
/// g_i^{-1} = g_i - (q - q^{-1}) e_i.
Element g_generator_inverse(const AlgebraPtr& alg, int i);

/// Relabels colors by sigma in Sym(r); permutations and coefficients fixed.
Element sigma_action(const Permutation& sigma, const Element& x);

nlohmann::json to_json(const Element& x);
/// Reads the element JSON, checking its context against `alg`.
Element element_from_json(const AlgebraPtr& alg, const nlohmann::json& j);

}  // namespace hnr

#endif  // HNR_ALGEBRA_HPP
