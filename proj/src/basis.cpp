#include "hnr/basis.hpp"

#include <optional>
#include <string>

#include "hnr/error.hpp"

namespace hnr {

namespace {

// table[c-1][d] = coefficient of X^d in L_c
std::vector<std::vector<Scalar>> lagrange_table(const ParameterSet& p) {
  std::vector<std::vector<Scalar>> table;
  for (int c = 1; c <= p.r; ++c) {
    auto poly = lagrange_polynomial(p, c);
    std::vector<Scalar> row(p.r, Scalar(0));
    for (int d = 0; d < p.r; ++d) row[d] = poly.coefficient(d);
    table.push_back(std::move(row));
  }
  return table;
}

// table[c-1][d] = u_c^d
std::vector<std::vector<Scalar>> power_table(const ParameterSet& p) {
  std::vector<std::vector<Scalar>> table;
  for (int c = 0; c < p.r; ++c) {
    std::vector<Scalar> row(p.r, Scalar(1));
    for (int d = 1; d < p.r; ++d) row[d] = row[d - 1] * p.u[c];
    table.push_back(std::move(row));
  }
  return table;
}

// prod_i table[k_i - 1][c_i]
Scalar tensor_weight(const Algebra& alg, const std::vector<std::vector<Scalar>>& table,
                     std::size_t color, std::size_t label) {
  Scalar w(1);
  std::size_t rest = label;
  for (int i = alg.n(); i >= 1; --i) {
    const int c = static_cast<int>(rest % alg.r());
    rest /= alg.r();
    const Scalar& f = table[alg.color_entry(color, i) - 1][c];
    if (f.is_zero()) return Scalar(0);
    w *= f;
  }
  return w;
}

void accumulate(std::map<std::uint64_t, Scalar>& target, std::uint64_t key, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = target.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) target.erase(it);
  }
}

// c * (b_k x) where left multiplication by b_k keeps the color-k terms.
void add_color_slice(Element& out, const Element& x, std::size_t color, const Scalar& c) {
  const Algebra& alg = x.context();
  auto first = x.terms().lower_bound(alg.key(color, 0));
  auto last = x.terms().lower_bound(alg.key(color + 1, 0));
  for (auto it = first; it != last; ++it) out.add_term(color, alg.key_perm(it->first), c * it->second);
}

void check_context(const AlgebraPtr& alg, const CoordinateVector& v) {
  if (v.algebra && v.algebra != alg && !(v.algebra->params() == alg->params()))
    throw Error(ErrorCode::ContextMismatch, "coordinate vector belongs to another algebra");
  for (const auto& [key, c] : v.entries)
    if (key >= alg->dimension())
      throw Error(ErrorCode::BadLabel, "coordinate label " + std::to_string(key) + " outside the basis");
}

CoordinateVector to_coordinates_impl(const Element& x, Basis basis, const TWordTable* table);
Element from_coordinates_impl(const AlgebraPtr& alg, const CoordinateVector& v, const TWordTable* table);

}  // namespace

const char* to_string(Basis basis) {
  switch (basis) {
    case Basis::bg: return "bg";
    case Basis::tg: return "tg";
    case Basis::tT: return "tT";
  }
  return "?";
}

Basis basis_from_string(std::string_view name) {
  if (name == "bg") return Basis::bg;
  if (name == "tg") return Basis::tg;
  if (name == "tT") return Basis::tT;
  throw Error(ErrorCode::BadLabel, "unknown basis '" + std::string(name) + "'");
}

std::vector<int> exponent_vector(const Algebra& alg, std::size_t label) {
  std::vector<int> c(alg.n());
  for (int i = alg.n() - 1; i >= 0; --i) {
    c[i] = static_cast<int>(label % alg.r());
    label /= alg.r();
  }
  return c;
}

std::size_t exponent_index(const Algebra& alg, const std::vector<int>& c) {
  if (static_cast<int>(c.size()) != alg.n())
    throw Error(ErrorCode::BadLabel, "exponent vector has the wrong length");
  std::size_t idx = 0;
  for (int e : c) {
    if (e < 0 || e >= alg.r()) throw Error(ErrorCode::BadLabel, "exponent outside [0, r-1]");
    idx = idx * alg.r() + e;
  }
  return idx;
}

UniPolynomial lagrange_polynomial(const ParameterSet& p, int c) {
  if (c < 1 || c > p.r) throw Error(ErrorCode::IndexOutOfRange, "L_" + std::to_string(c));
  UniPolynomial poly = UniPolynomial::constant(Scalar(1));
  for (int j = 1; j <= p.r; ++j) {
    if (j == c) continue;
    poly = (p.u[c - 1] - p.u[j - 1]).inverse() * (poly * UniPolynomial::linear_factor(p.u[j - 1]));
  }
  return poly;
}

DenseMatrix vandermonde(const ParameterSet& p) {
  DenseMatrix v(p.r, std::vector<Scalar>(p.r));
  for (int i = 0; i < p.r; ++i)
    for (int j = 0; j < p.r; ++j) v[i][j] = p.u[j].pow(i);
  return v;
}

UniPolynomial F_polynomial(const ParameterSet& p, int c) {
  if (c < 1 || c > p.r) throw Error(ErrorCode::IndexOutOfRange, "F_" + std::to_string(c));
  // sum_d h_d u_{c'}^d = delta(c, c') Delta, i.e. V^T h = Delta e_c
  DenseMatrix vt(p.r, std::vector<Scalar>(p.r));
  for (int i = 0; i < p.r; ++i)
    for (int d = 0; d < p.r; ++d) vt[i][d] = p.u[i].pow(d);
  std::vector<Scalar> rhs(p.r, Scalar(0));
  rhs[c - 1] = p.delta();
  return UniPolynomial(solve(std::move(vt), std::move(rhs)));
}

DenseMatrix F_matrix(const ParameterSet& p) {
  DenseMatrix h;
  for (int c = 1; c <= p.r; ++c) {
    auto f = F_polynomial(p, c);
    std::vector<Scalar> row(p.r);
    for (int d = 0; d < p.r; ++d) row[d] = f.coefficient(d);
    h.push_back(std::move(row));
  }
  return h;
}

Element evaluate_at(const UniPolynomial& f, const Element& x) {
  Element acc = zero(x.algebra());
  const auto& cs = f.coefficients();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it)
    acc = acc * x + scalar_element(x.algebra(), *it);
  return acc;
}

Element t_monomial(const AlgebraPtr& alg, const std::vector<int>& exponents) {
  if (static_cast<int>(exponents.size()) != alg->n())
    throw Error(ErrorCode::IndexOutOfRange, "exponent vector has the wrong length");
  // t^c = sum_k prod_i u_{k_i}^{c_i} b_k
  const ParameterSet& p = alg->params();
  Element x(alg);
  for (std::size_t k = 0; k < alg->num_colors(); ++k) {
    Scalar c(1);
    for (int i = 1; i <= alg->n(); ++i) c *= p.u[alg->color_entry(k, i) - 1].pow(exponents[i - 1]);
    x.add_term(k, alg->identity_perm(), c);
  }
  return x;
}

TWordTable::TWordTable(const AlgebraPtr& alg) {
  words_.reserve(alg->num_perms());
  for (std::size_t w = 0; w < alg->num_perms(); ++w) {
    // T_w = T_{w s_i} T_i along the last letter of the reduced word
    const auto& word = alg->word(w);
    if (word.empty()) {
      words_.push_back(one(alg));
    } else {
      const std::size_t prefix = alg->times_simple(w, word.back());
      words_.push_back(words_.at(prefix) * gen_T(alg, word.back()));
    }
  }
}

CoordinateVector to_coordinates(const Element& x, Basis basis) {
  if (basis == Basis::tT) return to_coordinates(x, basis, TWordTable(x.algebra()));
  return to_coordinates_impl(x, basis, nullptr);
}

CoordinateVector to_coordinates(const Element& x, Basis basis, const TWordTable& table) {
  return to_coordinates_impl(x, basis, &table);
}

Element from_coordinates(const AlgebraPtr& alg, const CoordinateVector& v) {
  if (v.basis == Basis::tT) return from_coordinates(alg, v, TWordTable(alg));
  return from_coordinates_impl(alg, v, nullptr);
}

Element from_coordinates(const AlgebraPtr& alg, const CoordinateVector& v, const TWordTable& table) {
  return from_coordinates_impl(alg, v, &table);
}

namespace {

CoordinateVector to_coordinates_impl(const Element& x, Basis basis, const TWordTable* table) {
  const Algebra& alg = x.context();
  CoordinateVector out{basis, x.algebra(), {}};
  if (basis == Basis::bg) {
    out.entries = x.terms();
    return out;
  }

  // coefficients y(k, w) of b_k g_w (tg) or of b_k T_w (tT)
  Element::Terms y;
  if (basis == Basis::tg) {
    y = x.terms();
  } else {
    Element rest = x;
    while (!rest.is_zero()) {
      std::size_t top = alg.key_perm(rest.terms().begin()->first);
      for (const auto& [key, c] : rest.terms())
        if (alg.perm_length(alg.key_perm(key)) > alg.perm_length(top)) top = alg.key_perm(key);
      std::vector<std::pair<std::size_t, Scalar>> leading;
      for (const auto& [key, c] : rest.terms())
        if (alg.key_perm(key) == top) leading.emplace_back(alg.key_color(key), c);
      Element correction(x.algebra());
      for (const auto& [k, c] : leading) {
        accumulate(y, alg.key(k, top), c);
        add_color_slice(correction, (*table)[top], k, c);
      }
      rest -= correction;
      for (const auto& [k, c] : leading)
        if (!rest.coefficient(k, top).is_zero())
          throw Error(ErrorCode::AssertFailed, "T_w is not unitriangular over g_w");
    }
  }

  const auto lagrange = lagrange_table(alg.params());
  for (const auto& [key, c] : y) {
    const std::size_t k = alg.key_color(key);
    const std::size_t w = alg.key_perm(key);
    for (std::size_t label = 0; label < alg.num_colors(); ++label) {
      const Scalar weight = tensor_weight(alg, lagrange, k, label);
      if (!weight.is_zero()) accumulate(out.entries, alg.key(label, w), c * weight);
    }
  }
  return out;
}

Element from_coordinates_impl(const AlgebraPtr& alg, const CoordinateVector& v, const TWordTable* table) {
  check_context(alg, v);
  if (v.basis == Basis::bg) return Element(alg, v.entries);

  const auto powers = power_table(alg->params());
  // a(k, w): coefficient of b_k in sum_c v(c, w) t^c
  Element::Terms a;
  for (const auto& [key, c] : v.entries) {
    const std::size_t label = alg->key_color(key);
    const std::size_t w = alg->key_perm(key);
    for (std::size_t k = 0; k < alg->num_colors(); ++k) {
      const Scalar weight = tensor_weight(*alg, powers, k, label);
      if (!weight.is_zero()) accumulate(a, alg->key(k, w), c * weight);
    }
  }
  if (v.basis == Basis::tg) return Element(alg, std::move(a));

  Element out(alg);
  for (const auto& [key, c] : a) add_color_slice(out, (*table)[alg->key_perm(key)], alg->key_color(key), c);
  return out;
}

}  // namespace

DenseMatrix change_of_basis_matrix(const AlgebraPtr& alg, Basis from, Basis to) {
  const std::size_t n = alg->dimension();
  std::optional<TWordTable> table;
  if (from == Basis::tT || to == Basis::tT) table.emplace(alg);
  DenseMatrix m(n, std::vector<Scalar>(n, Scalar(0)));
  for (std::size_t j = 0; j < n; ++j) {
    CoordinateVector unit{from, alg, {{j, Scalar(1)}}};
    const Element x = from_coordinates_impl(alg, unit, table ? &*table : nullptr);
    for (const auto& [key, c] : to_coordinates_impl(x, to, table ? &*table : nullptr).entries)
      m[key][j] = c;
  }
  return m;
}

ParameterChange parameter_change_map(const AlgebraPtr& alg, const ParameterSet& target) {
  const ParameterSet& p = alg->params();
  if (target.n != p.n || target.r != p.r || !(target.q == p.q))
    throw Error(ErrorCode::ContextMismatch, "parameter change needs equal n, r and q");
  DenseMatrix vt(p.r, std::vector<Scalar>(p.r));
  for (int i = 0; i < p.r; ++i)
    for (int j = 0; j < p.r; ++j) vt[i][j] = p.u[i].pow(j);
  ParameterChange out;
  out.a = solve(std::move(vt), target.u);
  const UniPolynomial poly(out.a);
  for (int i = 1; i <= p.n; ++i) {
    out.images.push_back(evaluate_at(poly, gen_t(alg, i)));
    Element direct(alg);
    for (std::size_t k = 0; k < alg->num_colors(); ++k)
      direct.add_term(k, alg->identity_perm(), target.u[alg->color_entry(k, i) - 1]);
    if (!(direct == out.images.back()))
      throw Error(ErrorCode::AssertFailed, "the two expressions for the image of t_" +
                                               std::to_string(i) + " differ");
    out.images_via_idempotents.push_back(std::move(direct));
  }
  return out;
}

nlohmann::json to_json(const CoordinateVector& v) {
  const Algebra& alg = *v.algebra;
  nlohmann::json params;
  to_json(params, alg.params());
  auto entries = nlohmann::json::array();
  for (const auto& [key, c] : v.entries) {
    nlohmann::json e;
    const std::size_t label = alg.key_color(key);
    if (v.basis == Basis::bg) {
      e["k"] = alg.color(label).entries();
    } else {
      e["c"] = exponent_vector(alg, label);
    }
    e["w"] = alg.perm(alg.key_perm(key)).one_line();
    e["v"] = c.str();
    entries.push_back(std::move(e));
  }
  return {{"basis", to_string(v.basis)}, {"context", params}, {"entries", entries}};
}

CoordinateVector coordinates_from_json(const AlgebraPtr& alg, const nlohmann::json& j) {
  if (!j.contains("basis") || !j.contains("entries") || !j["entries"].is_array())
    throw Error(ErrorCode::BadLabel, "coordinate JSON needs basis and entries");
  CoordinateVector v{basis_from_string(j["basis"].get<std::string>()), alg, {}};
  for (const auto& e : j["entries"]) {
    std::size_t label;
    if (v.basis == Basis::bg) {
      if (!e.contains("k")) throw Error(ErrorCode::BadLabel, "bg entries need k");
      try {
        label = alg->color_index(ColorVector(e["k"].get<std::vector<int>>(), alg->r()));
      } catch (const Error&) {
        throw Error(ErrorCode::BadLabel, "invalid color label " + e["k"].dump());
      }
    } else {
      if (!e.contains("c")) throw Error(ErrorCode::BadLabel, "tg/tT entries need c");
      label = exponent_index(*alg, e["c"].get<std::vector<int>>());
    }
    std::size_t w;
    try {
      w = alg->perm_index(Permutation(e.at("w").get<std::vector<int>>()));
    } catch (const Error&) {
      throw Error(ErrorCode::BadLabel, "invalid permutation label " + e.at("w").dump());
    }
    accumulate(v.entries, alg->key(label, w), e.at("v").get<Scalar>());
  }
  return v;
}

}  // namespace hnr
