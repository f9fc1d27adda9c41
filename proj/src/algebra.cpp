#include "hnr/algebra.hpp"

#include <string>

#include "hnr/error.hpp"

namespace hnr {

namespace {

std::size_t lehmer_rank(const std::vector<int>& one_line) {
  const std::size_t n = one_line.size();
  std::size_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (one_line[j] < one_line[i]) ++smaller;
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

void check_index(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::IndexOutOfRange, what);
}

}  // namespace

std::shared_ptr<const Algebra> Algebra::create(const ParameterSet& params) {
  std::size_t size = 1;
  for (int i = 0; i < params.n; ++i) {
    size *= static_cast<std::size_t>(params.r) * (i + 1);
    if (size > kMaxBasisSize)
      throw Error(ErrorCode::SizeGuard, "r^n * n! exceeds " + std::to_string(kMaxBasisSize) +
                                            " for n = " + std::to_string(params.n) +
                                            ", r = " + std::to_string(params.r));
  }
  return std::shared_ptr<const Algebra>(new Algebra(params));
}

Algebra::Algebra(const ParameterSet& params) : params_(params) {
  const int n = params.n;
  const int r = params.r;
  num_colors_ = 1;
  for (int i = 0; i < n; ++i) num_colors_ *= r;
  color_digits_.resize(num_colors_ * n);
  for (std::size_t c = 0; c < num_colors_; ++c) {
    std::size_t rest = c;
    for (int i = n - 1; i >= 0; --i) {
      color_digits_[c * n + i] = static_cast<int>(rest % r) + 1;
      rest /= r;
    }
  }

  perms_ = all_permutations(n);
  const std::size_t np = perms_.size();
  inverse_.resize(np);
  lengths_.resize(np);
  words_.resize(np);
  right_simple_.resize(np * (n > 1 ? n - 1 : 0));
  for (std::size_t w = 0; w < np; ++w) {
    inverse_[w] = perm_index(perms_[w].inverse());
    lengths_[w] = hnr::length(perms_[w]);
    words_[w] = reduced_word(perms_[w]);
    for (int i = 1; i < n; ++i) {
      std::vector<int> v = perms_[w].one_line();
      std::swap(v[i - 1], v[i]);
      right_simple_[w * (n - 1) + (i - 1)] = lehmer_rank(v);
    }
  }
}

ColorVector Algebra::color(std::size_t color) const {
  std::vector<int> k(color_digits_.begin() + color * n(), color_digits_.begin() + (color + 1) * n());
  return ColorVector(std::move(k), r());
}

std::size_t Algebra::color_index(const ColorVector& k) const {
  if (k.size() != n())
    throw Error(ErrorCode::IndexOutOfRange, "color vector of length " + std::to_string(k.size()) +
                                                " in a context with n = " + std::to_string(n()));
  std::size_t idx = 0;
  for (int i = 1; i <= n(); ++i) {
    check_index(k[i] >= 1 && k[i] <= r(), "color " + std::to_string(k[i]) + " outside [1," +
                                              std::to_string(r()) + "]");
    idx = idx * r() + (k[i] - 1);
  }
  return idx;
}

std::size_t Algebra::perm_index(const Permutation& w) const {
  if (w.size() != n()) throw Error(ErrorCode::SizeMismatch, "permutation size differs from n");
  return lehmer_rank(w.one_line());
}

std::size_t Algebra::place(std::size_t w, std::size_t color) const {
  // (w.m)_{w(i)} = m_i
  std::size_t idx = 0;
  const int* digits = &color_digits_[color * n()];
  const Permutation& inv = perms_[inverse_[w]];
  for (int j = 1; j <= n(); ++j) idx = idx * r() + (digits[inv(j) - 1] - 1);
  return idx;
}

Element::Element(AlgebraPtr algebra, Terms terms)
    : algebra_(std::move(algebra)), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

Scalar Element::coefficient(std::size_t color, std::size_t perm) const {
  auto it = terms_.find(algebra_->key(color, perm));
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Element::add_term(std::size_t color, std::size_t perm, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(algebra_->key(color, perm), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& other) {
  require_same_context(*this, other);
  for (const auto& [key, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Element& Element::operator-=(const Element& other) {
  require_same_context(*this, other);
  for (const auto& [key, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(key, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Element& Element::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else {
    for (auto& kv : terms_) kv.second *= c;
  }
  return *this;
}

bool operator==(const Element& a, const Element& b) {
  require_same_context(a, b);
  return a.terms_ == b.terms_;
}

void require_same_context(const Element& a, const Element& b) {
  if (a.algebra() != b.algebra() && !(a.context().params() == b.context().params()))
    throw Error(ErrorCode::ContextMismatch, "elements belong to different algebras");
}

Element zero(const AlgebraPtr& alg) { return Element(alg); }

Element one(const AlgebraPtr& alg) { return scalar_element(alg, Scalar(1)); }

Element scalar_element(const AlgebraPtr& alg, const Scalar& c) {
  Element x(alg);
  for (std::size_t k = 0; k < alg->num_colors(); ++k) x.add_term(k, alg->identity_perm(), c);
  return x;
}

Element add(const Element& x, const Element& y) { return x + y; }
Element negate(const Element& x) { return scale(Scalar(-1), x); }
Element scale(const Scalar& c, const Element& x) {
  Element out = x;
  out *= c;
  return out;
}
bool equals(const Element& x, const Element& y) { return x == y; }

Element multiply(const Element& x, const Element& y) {
  require_same_context(x, y);
  const Algebra& alg = x.context();
  const Scalar qd = alg.params().q_diff();

  // y grouped by its color m: (b_k g_w)(b_m g_v) is nonzero only for k = w.m
  std::map<std::size_t, std::vector<std::pair<std::size_t, const Scalar*>>> by_color;
  for (const auto& [key, c] : y.terms())
    by_color[alg.key_color(key)].emplace_back(alg.key_perm(key), &c);

  Element result(x.algebra());
  std::map<std::size_t, Scalar> current, next;
  for (const auto& [xkey, xc] : x.terms()) {
    const std::size_t k = alg.key_color(xkey);
    const std::size_t w = alg.key_perm(xkey);
    const std::size_t m = alg.place(alg.inverse_perm(w), k);
    auto group = by_color.find(m);
    if (group == by_color.end()) continue;
    for (const auto& [v, yc] : group->second) {
      // fold (b_k g_w) g_{i_1} ... g_{i_l} over the reduced word of v
      current.clear();
      current.emplace(w, Scalar(1));
      for (int i : alg.word(v)) {
        next.clear();
        for (const auto& [p, c] : current) {
          const std::size_t ps = alg.times_simple(p, i);
          next[ps] += c;
          if (alg.perm_length(ps) < alg.perm_length(p)) {
            const Permutation& perm = alg.perm(p);
            if (alg.color_entry(k, perm(i)) == alg.color_entry(k, perm(i + 1))) next[p] += qd * c;
          }
        }
        std::swap(current, next);
      }
      const Scalar factor = xc * *yc;
      for (const auto& [p, c] : current) result.add_term(k, p, factor * c);
    }
  }
  return result;
}

Element power(const Element& x, int exponent) {
  if (exponent < 0) throw Error(ErrorCode::OutOfRange, "negative exponent");
  Element result = one(x.algebra());
  Element base = x;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Element basis_element(const AlgebraPtr& alg, std::size_t color, std::size_t perm) {
  Element x(alg);
  x.add_term(color, perm, Scalar(1));
  return x;
}

Element gen_b(const AlgebraPtr& alg, const ColorVector& k) {
  return basis_element(alg, alg->color_index(k), alg->identity_perm());
}

Element gen_g(const AlgebraPtr& alg, int i) {
  check_index(i >= 1 && i < alg->n(), "g_" + std::to_string(i));
  const std::size_t s = alg->perm_index(Permutation::simple(alg->n(), i));
  Element x(alg);
  for (std::size_t k = 0; k < alg->num_colors(); ++k) x.add_term(k, s, Scalar(1));
  return x;
}

Element gen_t(const AlgebraPtr& alg, int i) {
  check_index(i >= 1 && i <= alg->n(), "t_" + std::to_string(i));
  Element x(alg);
  for (std::size_t k = 0; k < alg->num_colors(); ++k)
    x.add_term(k, alg->identity_perm(), alg->params().u[alg->color_entry(k, i) - 1]);
  return x;
}

Element gen_T(const AlgebraPtr& alg, int i) {
  check_index(i >= 1 && i < alg->n(), "T_" + std::to_string(i));
  return gen_g(alg, i) - gen_Bprime(alg, i, i + 1);
}

Element gen_e(const AlgebraPtr& alg, int i) {
  check_index(i >= 1 && i < alg->n(), "e_" + std::to_string(i));
  return gen_e_pair(alg, i, i + 1);
}

Element gen_e_pair(const AlgebraPtr& alg, int i, int j) {
  check_index(i >= 1 && i <= alg->n() && j >= 1 && j <= alg->n(),
              "e_{" + std::to_string(i) + "," + std::to_string(j) + "}");
  Element x(alg);
  for (std::size_t k = 0; k < alg->num_colors(); ++k)
    if (alg->color_entry(k, i) == alg->color_entry(k, j)) x.add_term(k, alg->identity_perm(), Scalar(1));
  return x;
}

Element gen_Bprime(const AlgebraPtr& alg, int i, int j) {
  check_index(i >= 1 && i <= alg->n() && j >= 1 && j <= alg->n(),
              "B'_{" + std::to_string(i) + "," + std::to_string(j) + "}");
  const Scalar c = -alg->params().q_diff();
  Element x(alg);
  for (std::size_t k = 0; k < alg->num_colors(); ++k)
    if (alg->color_entry(k, i) < alg->color_entry(k, j)) x.add_term(k, alg->identity_perm(), c);
  return x;
}

Element gen_B(const AlgebraPtr& alg, int j) {
  check_index(j >= 1 && j < alg->n(), "B_" + std::to_string(j));
  const ParameterSet& p = alg->params();
  const Scalar qd = p.q_diff();
  Element x(alg);
  for (std::size_t k = 0; k < alg->num_colors(); ++k) {
    const int a = alg->color_entry(k, j);
    const int b = alg->color_entry(k, j + 1);
    if (a < b) x.add_term(k, alg->identity_perm(), qd * (p.u[a - 1] - p.u[b - 1]));
  }
  return x;
}

Element generator(const AlgebraPtr& alg, const GeneratorSpec& spec) {
  using Kind = GeneratorSpec::Kind;
  switch (spec.kind) {
    case Kind::b: return gen_b(alg, spec.k);
    case Kind::g: return gen_g(alg, spec.i);
    case Kind::t: return gen_t(alg, spec.i);
    case Kind::T: return gen_T(alg, spec.i);
    case Kind::e: return gen_e(alg, spec.i);
    case Kind::e_pair: return gen_e_pair(alg, spec.i, spec.j);
    case Kind::Bprime: return gen_Bprime(alg, spec.i, spec.j);
    case Kind::B: return gen_B(alg, spec.i);
  }
  throw Error(ErrorCode::BadShape, "unknown generator kind");
}

Element g_word(const AlgebraPtr& alg, const Permutation& w) {
  Element x = one(alg);
  for (int i : reduced_word(w)) x = x * gen_g(alg, i);
  return x;
}

Element T_word(const AlgebraPtr& alg, const Permutation& w) {
  Element x = one(alg);
  for (int i : reduced_word(w)) x = x * gen_T(alg, i);
  return x;
}

Element g_generator_inverse(const AlgebraPtr& alg, int i) {
  check_index(i >= 1 && i < alg->n(), "g_" + std::to_string(i) + "^{-1}");
  return gen_g(alg, i) - scale(alg->params().q_diff(), gen_e(alg, i));
}

Element sigma_action(const Permutation& sigma, const Element& x) {
  const Algebra& alg = x.context();
  if (sigma.size() != alg.r())
    throw Error(ErrorCode::SizeMismatch, "sigma must permute [1," + std::to_string(alg.r()) + "]");
  Element out(x.algebra());
  for (const auto& [key, c] : x.terms()) {
    std::size_t color = 0;
    const std::size_t k = alg.key_color(key);
    for (int i = 1; i <= alg.n(); ++i) color = color * alg.r() + (sigma(alg.color_entry(k, i)) - 1);
    out.add_term(color, alg.key_perm(key), c);
  }
  return out;
}

nlohmann::json to_json(const Element& x) {
  const Algebra& alg = x.context();
  nlohmann::json params;
  to_json(params, alg.params());
  auto terms = nlohmann::json::array();
  for (const auto& [key, c] : x.terms()) {
    nlohmann::json k, w;
    to_json(k, alg.color(alg.key_color(key)));
    to_json(w, alg.perm(alg.key_perm(key)));
    terms.push_back({{"k", k}, {"w", w}, {"c", c.str()}});
  }
  return {{"context", params}, {"terms", terms}};
}

Element element_from_json(const AlgebraPtr& alg, const nlohmann::json& j) {
  if (j.contains("context") && !(parameters_from_json(j["context"]) == alg->params()))
    throw Error(ErrorCode::ContextMismatch, "element JSON has a different context");
  if (!j.contains("terms") || !j["terms"].is_array())
    throw Error(ErrorCode::BadShape, "element JSON needs a terms array");
  Element x(alg);
  for (const auto& t : j["terms"]) {
    ColorVector k(t.at("k").get<std::vector<int>>(), alg->r());
    Permutation w(t.at("w").get<std::vector<int>>());
    x.add_term(alg->color_index(k), alg->perm_index(w), t.at("c").get<Scalar>());
  }
  return x;
}

}  // namespace hnr
