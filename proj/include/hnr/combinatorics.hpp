#ifndef HNR_COMBINATORICS_HPP
#define HNR_COMBINATORICS_HPP

#include <compare>
#include <initializer_list>
#include <vector>

#include <json.hpp>

namespace hnr {

/// Element of Sym(n) in one-line notation: entries w(1), ..., w(n).
class Permutation {
public:
  Permutation() = default;
  /// Throws BadShape unless `one_line` is a bijection of [1, n].
  explicit Permutation(std::vector<int> one_line);
  Permutation(std::initializer_list<int> one_line)
      : Permutation(std::vector<int>(one_line)) {}

  static Permutation identity(int n);
  /// s_i swapping i and i+1, 1 <= i < n.
  static Permutation simple(int n, int i);
  /// Product s_{i_1} ... s_{i_l}.
  static Permutation from_word(int n, const std::vector<int>& word);

  int size() const noexcept { return static_cast<int>(one_line_.size()); }
  /// w(i), 1-based.
  int operator()(int i) const { return one_line_[i - 1]; }
  const std::vector<int>& one_line() const noexcept { return one_line_; }

  bool is_identity() const;
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> one_line_;
};

/// Element of [1, r]^n.
class ColorVector {
public:
  ColorVector() = default;
  /// Throws BadShape if some entry lies outside [1, r].
  ColorVector(std::vector<int> entries, int r);
  /// Only checks entries are positive.
  explicit ColorVector(std::vector<int> entries);

  int size() const noexcept { return static_cast<int>(entries_.size()); }
  int operator[](int i) const { return entries_[i - 1]; }  // 1-based
  const std::vector<int>& entries() const noexcept { return entries_; }

  friend bool operator==(const ColorVector&, const ColorVector&) = default;
  friend auto operator<=>(const ColorVector&, const ColorVector&) = default;

private:
  std::vector<int> entries_;
};

/// Inversion count.
int length(const Permutation& w);
/// (v o w)(i) = v(w(i)).
Permutation compose(const Permutation& v, const Permutation& w);
/// Smallest-descent-first reduced word; product of s_i over it equals w.
std::vector<int> reduced_word(const Permutation& w);
/// Bruhat order via the tableau criterion.
bool bruhat_leq(const Permutation& v, const Permutation& w);
/// All of Sym(n) in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

/// w.(k_1..k_n) = (k_{w^{-1}(1)}, ..., k_{w^{-1}(n)}).
ColorVector place_act(const Permutation& w, const ColorVector& k);
/// Entrywise relabeling k_i -> sigma(k_i), sigma in Sym(r).
ColorVector color_act(const Permutation& sigma, const ColorVector& k);
/// All of [1, r]^n in lexicographic order.
std::vector<ColorVector> all_color_vectors(int n, int r);

/// First-use relabeling: colors appear in order 1, 2, 3, ...
ColorVector canonical_representative(const ColorVector& k, int r);

struct ColorOrbit {
  ColorVector representative;
  std::vector<ColorVector> members;  // lexicographic
};

/// One entry per Sym(r)-orbit on [1, r]^n, ordered by representative.
std::vector<ColorOrbit> enumerate_orbit_representatives(int n, int r);

/// Stirling number of the second kind S(n, k).
long stirling2(int n, int k);

void to_json(nlohmann::json& j, const Permutation& w);
void to_json(nlohmann::json& j, const ColorVector& k);

}  // namespace hnr

#endif  // HNR_COMBINATORICS_HPP
