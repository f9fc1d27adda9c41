#include "hnr/combinatorics.hpp"

#include <algorithm>
#include <numeric>

#include "hnr/error.hpp"

namespace hnr {

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (int x : one_line_) {
    if (x < 1 || x > n || seen[x])
      throw Error(ErrorCode::BadShape, "not a permutation in one-line notation");
    seen[x] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::simple(int n, int i) {
  if (i < 1 || i >= n)
    throw Error(ErrorCode::IndexOutOfRange, "s_" + std::to_string(i) + " in Sym(" + std::to_string(n) + ")");
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::swap(v[i - 1], v[i]);
  return Permutation(std::move(v));
}

Permutation Permutation::from_word(int n, const std::vector<int>& word) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  // right-multiplying by s_i swaps positions i and i+1 of the one-line form
  for (int i : word) {
    if (i < 1 || i >= n)
      throw Error(ErrorCode::IndexOutOfRange, "s_" + std::to_string(i) + " in Sym(" + std::to_string(n) + ")");
    std::swap(v[i - 1], v[i]);
  }
  return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (one_line_[i] != i + 1) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> v(size());
  for (int i = 0; i < size(); ++i) v[one_line_[i] - 1] = i + 1;
  return Permutation(std::move(v));
}

ColorVector::ColorVector(std::vector<int> entries, int r) : entries_(std::move(entries)) {
  for (int c : entries_)
    if (c < 1 || c > r)
      throw Error(ErrorCode::BadShape, "color " + std::to_string(c) + " outside [1," + std::to_string(r) + "]");
}

ColorVector::ColorVector(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int c : entries_)
    if (c < 1) throw Error(ErrorCode::BadShape, "colors start at 1");
}

int length(const Permutation& w) {
  const auto& v = w.one_line();
  int inv = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) ++inv;
  return inv;
}

Permutation compose(const Permutation& v, const Permutation& w) {
  if (v.size() != w.size()) throw Error(ErrorCode::SizeMismatch, "compose: permutation sizes differ");
  std::vector<int> out(w.size());
  for (int i = 1; i <= w.size(); ++i) out[i - 1] = v(w(i));
  return Permutation(std::move(out));
}

std::vector<int> reduced_word(const Permutation& w) {
  // Peel right descents: if w(i) > w(i+1) then w = (w s_i) s_i with
  // l(w s_i) < l(w). Collected in reverse.
  std::vector<int> v = w.one_line();
  std::vector<int> reversed;
  for (;;) {
    int descent = 0;
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
      if (v[i] > v[i + 1]) {
        descent = static_cast<int>(i) + 1;
        break;
      }
    if (descent == 0) break;
    std::swap(v[descent - 1], v[descent]);
    reversed.push_back(descent);
  }
  return {reversed.rbegin(), reversed.rend()};
}

bool bruhat_leq(const Permutation& v, const Permutation& w) {
  if (v.size() != w.size()) throw Error(ErrorCode::SizeMismatch, "bruhat_leq: permutation sizes differ");
  const int n = v.size();
  std::vector<int> a, b;
  for (int i = 1; i < n; ++i) {
    a.assign(v.one_line().begin(), v.one_line().begin() + i);
    b.assign(w.one_line().begin(), w.one_line().begin() + i);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (int j = 0; j < i; ++j)
      if (a[j] > b[j]) return false;
  }
  return true;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

ColorVector place_act(const Permutation& w, const ColorVector& k) {
  if (w.size() != k.size()) throw Error(ErrorCode::SizeMismatch, "place_act: sizes differ");
  std::vector<int> out(k.size());
  // position w(i) receives k_i
  for (int i = 1; i <= k.size(); ++i) out[w(i) - 1] = k[i];
  return ColorVector(std::move(out));
}

ColorVector color_act(const Permutation& sigma, const ColorVector& k) {
  std::vector<int> out(k.size());
  for (int i = 1; i <= k.size(); ++i) {
    if (k[i] > sigma.size())
      throw Error(ErrorCode::SizeMismatch, "color_act: color exceeds the permuted range");
    out[i - 1] = sigma(k[i]);
  }
  return ColorVector(std::move(out), sigma.size());
}

std::vector<ColorVector> all_color_vectors(int n, int r) {
  std::vector<ColorVector> out;
  std::vector<int> k(n, 1);
  for (;;) {
    out.emplace_back(k, r);
    int i = n - 1;
    while (i >= 0 && k[i] == r) k[i--] = 1;
    if (i < 0) break;
    ++k[i];
  }
  return out;
}

ColorVector canonical_representative(const ColorVector& k, int r) {
  std::vector<int> relabel(r + 1, 0);
  int next = 0;
  std::vector<int> out(k.size());
  for (int i = 1; i <= k.size(); ++i) {
    if (k[i] > r) throw Error(ErrorCode::BadShape, "color outside [1,r]");
    if (relabel[k[i]] == 0) relabel[k[i]] = ++next;
    out[i - 1] = relabel[k[i]];
  }
  return ColorVector(std::move(out), r);
}

std::vector<ColorOrbit> enumerate_orbit_representatives(int n, int r) {
  std::vector<ColorOrbit> orbits;
  for (const auto& k : all_color_vectors(n, r)) {
    ColorVector rep = canonical_representative(k, r);
    auto it = std::lower_bound(orbits.begin(), orbits.end(), rep,
                               [](const ColorOrbit& o, const ColorVector& c) {
                                 return o.representative < c;
                               });
    if (it == orbits.end() || it->representative != rep)
      it = orbits.insert(it, ColorOrbit{rep, {}});
    it->members.push_back(k);
  }
  return orbits;
}

long stirling2(int n, int k) {
  if (n < 0 || k < 0) return 0;
  std::vector<std::vector<long>> s(n + 1, std::vector<long>(k + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= std::min(i, k); ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  return s[n][k];
}

void to_json(nlohmann::json& j, const Permutation& w) { j = w.one_line(); }
void to_json(nlohmann::json& j, const ColorVector& k) { j = k.entries(); }

}  // namespace hnr
