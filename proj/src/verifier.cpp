#include "hnr/verifier.hpp"

#include <map>
#include <random>
#include <sstream>

#include "hnr/basis.hpp"
#include "hnr/error.hpp"
#include "hnr/fixed.hpp"
#include "hnr/polynomial.hpp"
#include "hnr/random.hpp"
#include "hnr/trace.hpp"

namespace hnr {

namespace {

std::string tag(const std::string& family, std::initializer_list<std::pair<const char*, long>> idx) {
  std::string out = family + "[";
  bool first = true;
  for (const auto& [name, value] : idx) {
    if (!first) out += ",";
    out += std::string(name) + "=" + std::to_string(value);
    first = false;
  }
  return out + "]";
}

std::string tag(const std::string& family, const std::string& label) { return family + "[" + label + "]"; }

std::string color_label(const ColorVector& k) {
  std::string out;
  for (int v : k.entries()) out += (out.empty() ? "" : ",") + std::to_string(v);
  return out;
}

std::string perm_label(const Permutation& w) {
  std::string out;
  for (int v : w.one_line()) out += (out.empty() ? "" : ",") + std::to_string(v);
  return out;
}

Element scalar_times_one(const AlgebraPtr& alg, const Scalar& c) { return scalar_element(alg, c); }

std::vector<Element> engine_t(const AlgebraPtr& alg) {
  std::vector<Element> out;
  for (int i = 1; i <= alg->n(); ++i) out.push_back(gen_t(alg, i));
  return out;
}

std::vector<Element> engine_g(const AlgebraPtr& alg) {
  std::vector<Element> out;
  for (int i = 1; i < alg->n(); ++i) out.push_back(gen_g(alg, i));
  return out;
}

std::vector<Element> engine_T(const AlgebraPtr& alg) {
  std::vector<Element> out;
  for (int i = 1; i < alg->n(); ++i) out.push_back(gen_T(alg, i));
  return out;
}

// (t_i - u_1) ... (t_i - u_r)
Element minimal_polynomial_at(const ParameterSet& p, const AlgebraPtr& alg, const Element& t) {
  Element x = one(alg);
  for (const auto& u : p.u) x = x * (t - scalar_times_one(alg, u));
  return x;
}

void check_commuting_t(RelationRecorder& rec, const std::vector<Element>& t) {
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      rec.expect_equal(tag("t_commute", {{"i", long(i + 1)}, {"j", long(j + 1)}}), t[i] * t[j], t[j] * t[i]);
}

// Braid and far-commutation relations shared by T and g.
void check_braid_family(RelationRecorder& rec, const std::string& name, const std::vector<Element>& x) {
  const long m = static_cast<long>(x.size());
  for (long i = 0; i + 1 < m; ++i)
    rec.expect_equal(tag(name + "_braid", {{"i", i + 1}}), x[i] * x[i + 1] * x[i], x[i + 1] * x[i] * x[i + 1]);
  for (long i = 0; i < m; ++i)
    for (long j = i + 2; j < m; ++j)
      rec.expect_equal(tag(name + "_commute", {{"i", i + 1}, {"j", j + 1}}), x[i] * x[j], x[j] * x[i]);
}

// -Delta^{-2} sum_{c1 < c2} (u_{c2} - u_{c1})(q - q^{-1}) F_{c1}(t_{j-1}) F_{c2}(t_j), j = jj + 2.
Element interpolated_B(const ParameterSet& p, const AlgebraPtr& alg, const std::vector<std::vector<Element>>& F,
                       int jj) {
  Element sum = zero(alg);
  for (int c1 = 0; c1 < p.r; ++c1)
    for (int c2 = c1 + 1; c2 < p.r; ++c2)
      sum += scale((p.u[c2] - p.u[c1]) * p.q_diff(), F[c1][jj] * F[c2][jj + 1]);
  Scalar d = p.delta();
  return scale(Scalar(-1) / (d * d), sum);
}

std::vector<std::vector<Element>> F_values(const ParameterSet& p, const std::vector<Element>& t) {
  std::vector<std::vector<Element>> F;
  for (int c = 1; c <= p.r; ++c) {
    UniPolynomial f = F_polynomial(p, c);
    std::vector<Element> row;
    for (const auto& ti : t) row.push_back(evaluate_at(f, ti));
    F.push_back(std::move(row));
  }
  return F;
}

// b_k rebuilt from t by Lagrange interpolation.
Element idempotent_from_t(const ParameterSet& p, const AlgebraPtr& alg, const std::vector<Element>& t,
                          const ColorVector& k) {
  Element x = one(alg);
  for (int i = 1; i <= k.size(); ++i) x = x * evaluate_at(lagrange_polynomial(p, k[i]), t[i - 1]);
  return x;
}

VerificationReport make_report(const std::string& suite, const AlgebraPtr& alg) {
  VerificationReport report;
  report.suite = suite;
  report.contexts.push_back(alg->params());
  return report;
}

}  // namespace

bool VerificationReport::pass() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  std::size_t n = 0;
  for (const auto& e : entries)
    if (!e.ok) ++n;
  return n;
}

void VerificationReport::absorb(const VerificationReport& other, const std::string& prefix) {
  for (const auto& c : other.contexts) {
    bool seen = false;
    for (const auto& mine : contexts) seen = seen || mine == c;
    if (!seen) contexts.push_back(c);
  }
  for (auto e : other.entries) {
    e.id = prefix + e.id;
    entries.push_back(std::move(e));
  }
}

void RelationRecorder::expect_zero(const std::string& id, const Element& difference) {
  if (difference.is_zero())
    report_.entries.push_back({id, true, nullptr});
  else
    report_.entries.push_back({id, false, to_json(difference)});
}

void RelationRecorder::expect_equal(const std::string& id, const Element& lhs, const Element& rhs) {
  expect_zero(id, lhs - rhs);
}

void RelationRecorder::expect_equal(const std::string& id, const Scalar& lhs, const Scalar& rhs) {
  if (lhs == rhs)
    report_.entries.push_back({id, true, nullptr});
  else
    report_.entries.push_back({id, false, {{"lhs", lhs.str()}, {"rhs", rhs.str()}}});
}

void RelationRecorder::expect(const std::string& id, bool ok, nlohmann::json witness) {
  report_.entries.push_back({id, ok, ok ? nlohmann::json(nullptr) : std::move(witness)});
}

void check_definition_relations(RelationRecorder& rec, const ParameterSet& p, const AlgebraPtr& alg,
                                const std::vector<Element>& t, const std::vector<Element>& T) {
  const long n = static_cast<long>(t.size());
  const Element q = scalar_element(alg, p.q);
  const Element q_inv = scalar_element(alg, p.q.inverse());
  for (long i = 0; i + 1 < n; ++i) rec.expect_zero(tag("quadratic_T", {{"i", i + 1}}), (T[i] - q) * (T[i] + q_inv));
  for (long i = 0; i < n; ++i) rec.expect_zero(tag("t_minimal", {{"i", i + 1}}), minimal_polynomial_at(p, alg, t[i]));
  check_braid_family(rec, "T", T);
  check_commuting_t(rec, t);
  for (long j = 0; j + 1 < n; ++j)
    for (long k = 0; k < n; ++k)
      if (k != j && k != j + 1)
        rec.expect_equal(tag("T_t_commute", {{"j", j + 1}, {"k", k + 1}}), T[j] * t[k], t[k] * T[j]);
  if (n < 2) return;
  auto F = F_values(p, t);
  for (long jj = 0; jj + 1 < n; ++jj) {
    Element B = interpolated_B(p, alg, F, static_cast<int>(jj));
    const long j = jj + 2;
    rec.expect_equal(tag("T_t_next", {{"j", j}}), T[jj] * t[jj + 1], t[jj] * T[jj] - B);
    rec.expect_equal(tag("T_t_same", {{"j", j}}), T[jj] * t[jj], t[jj + 1] * T[jj] + B);
  }
}

void check_yokonuma_relations(RelationRecorder& rec, const ParameterSet& p, const AlgebraPtr& alg,
                              const std::vector<Element>& t, const std::vector<Element>& g) {
  const long n = static_cast<long>(t.size());
  for (long i = 0; i < n; ++i) rec.expect_zero(tag("t_minimal", {{"i", i + 1}}), minimal_polynomial_at(p, alg, t[i]));
  check_commuting_t(rec, t);
  for (long j = 0; j + 1 < n; ++j)
    for (long i = 0; i < n; ++i) {
      long image = i == j ? j + 1 : i == j + 1 ? j : i;
      rec.expect_equal(tag("g_t_exchange", {{"j", j + 1}, {"i", i + 1}}), g[j] * t[i], t[image] * g[j]);
    }
  check_braid_family(rec, "g", g);
  std::vector<Element> lagrange;  // lagrange[a][i] flattened
  for (int a = 1; a <= p.r; ++a) {
    UniPolynomial L = lagrange_polynomial(p, a);
    for (long i = 0; i < n; ++i) lagrange.push_back(evaluate_at(L, t[i]));
  }
  for (long i = 0; i + 1 < n; ++i) {
    Element e = zero(alg);
    for (int a = 0; a < p.r; ++a) e += lagrange[a * n + i] * lagrange[a * n + i + 1];
    rec.expect_equal(tag("quadratic_g", {{"i", i + 1}}), g[i] * g[i], one(alg) + scale(p.q_diff(), e * g[i]));
  }
}

VerificationReport verify_definition_presentation(const AlgebraPtr& alg) {
  auto report = make_report("def", alg);
  RelationRecorder rec(report);
  auto t = engine_t(alg);
  check_definition_relations(rec, alg->params(), alg, t, engine_T(alg));
  auto F = F_values(alg->params(), t);
  for (int j = 2; j <= alg->n(); ++j)
    rec.expect_equal(tag("B_closed_form", {{"j", j}}), interpolated_B(alg->params(), alg, F, j - 2),
                     gen_B(alg, j - 1));
  return report;
}

VerificationReport verify_yokonuma_presentation(const AlgebraPtr& alg) {
  auto report = make_report("yh", alg);
  RelationRecorder rec(report);
  check_yokonuma_relations(rec, alg->params(), alg, engine_t(alg), engine_g(alg));
  return report;
}

VerificationReport verify_b_presentation(const AlgebraPtr& alg) {
  auto report = make_report("b", alg);
  RelationRecorder rec(report);
  const int n = alg->n();
  auto g = engine_g(alg);
  check_braid_family(rec, "g", g);

  const auto colors = all_color_vectors(n, alg->r());
  std::vector<Element> b;
  for (const auto& k : colors) b.push_back(gen_b(alg, k));

  for (int i = 1; i < n; ++i) {
    Element e = zero(alg);
    for (std::size_t m = 0; m < colors.size(); ++m)
      if (colors[m][i] == colors[m][i + 1]) e += b[m];
    rec.expect_equal(tag("quadratic_g", {{"i", i}}), g[i - 1] * g[i - 1],
                     one(alg) + scale(alg->params().q_diff(), e * g[i - 1]));
  }
  for (std::size_t x = 0; x < colors.size(); ++x)
    for (std::size_t y = 0; y < colors.size(); ++y)
      rec.expect_equal(tag("b_orthogonal", color_label(colors[x]) + ";" + color_label(colors[y])), b[x] * b[y],
                       x == y ? b[x] : zero(alg));
  for (int i = 1; i < n; ++i) {
    Permutation s = Permutation::simple(n, i);
    for (std::size_t x = 0; x < colors.size(); ++x)
      rec.expect_equal(tag("g_b_exchange", "i=" + std::to_string(i) + ";k=" + color_label(colors[x])), g[i - 1] * b[x],
                       gen_b(alg, place_act(s, colors[x])) * g[i - 1]);
  }
  Element total = zero(alg);
  for (const auto& x : b) total += x;
  rec.expect_equal("b_sum[]", total, one(alg));
  return report;
}

VerificationReport verify_lemma_suite(const AlgebraPtr& alg) {
  auto report = make_report("lemmas", alg);
  RelationRecorder rec(report);
  const ParameterSet& p = alg->params();
  const int n = alg->n();
  const int r = alg->r();
  const auto colors = all_color_vectors(n, r);
  const auto t = engine_t(alg);
  const auto T = engine_T(alg);
  const auto g = engine_g(alg);

  // Exchange of T_p with idempotents.
  for (int pp = 1; pp < n; ++pp) {
    Permutation s = Permutation::simple(n, pp);
    for (const auto& k : colors) {
      ColorVector sk = place_act(s, k);
      Element bk = gen_b(alg, k), bsk = gen_b(alg, sk);
      Element rhs = zero(alg);
      if (k[pp] < k[pp + 1]) rhs += bk;
      if (k[pp] > k[pp + 1]) rhs -= bsk;
      rec.expect_equal(tag("T_b_exchange", "p=" + std::to_string(pp) + ";k=" + color_label(k)),
                       T[pp - 1] * bk - bsk * T[pp - 1], scale(p.q_diff(), rhs));
    }
  }

  // Polynomials in t act on b_k by evaluation at u_k.
  Element f_sum = zero(alg), f_prod = one(alg);
  for (int i = 1; i <= n; ++i) {
    f_sum += power(t[i - 1], i);
    f_prod = f_prod * (t[i - 1] + scalar_element(alg, Scalar(i)));
  }
  for (const auto& k : colors) {
    Scalar v_sum(0), v_prod(1);
    for (int i = 1; i <= n; ++i) {
      const Scalar& u = p.u[k[i] - 1];
      v_sum += u.pow(i);
      v_prod *= u + Scalar(i);
    }
    Element bk = gen_b(alg, k);
    rec.expect_equal(tag("poly_on_b", "f=sum;k=" + color_label(k)), f_sum * bk, scale(v_sum, bk));
    rec.expect_equal(tag("poly_on_b", "f=prod;k=" + color_label(k)), f_prod * bk, scale(v_prod, bk));
    rec.expect_equal(tag("b_from_t", color_label(k)), idempotent_from_t(p, alg, t, k), bk);
  }
  for (int i = 1; i <= n; ++i) {
    Element x = zero(alg);
    for (const auto& k : colors) x += scale(p.u[k[i] - 1], gen_b(alg, k));
    rec.expect_equal(tag("t_from_b", {{"i", i}}), x, t[i - 1]);
  }

  // T_p commutes with s_p-symmetric polynomials.
  for (int pp = 1; pp < n; ++pp) {
    std::mt19937_64 rng(0x5eed + pp);
    Permutation s = Permutation::simple(n, pp);
    Element sym = zero(alg);
    for (const auto& k : colors)
      if (k[pp] <= k[pp + 1]) {
        Scalar c = random_scalar(rng, 9);
        sym += scale(c, gen_b(alg, k));
        if (k[pp] != k[pp + 1]) sym += scale(c, gen_b(alg, place_act(s, k)));
      }
    const Element& Tp = T[pp - 1];
    Element sum = t[pp - 1] + t[pp], prod = t[pp - 1] * t[pp];
    rec.expect_equal(tag("T_symmetric", "p=" + std::to_string(pp) + ";a=sum"), Tp * sum, sum * Tp);
    rec.expect_equal(tag("T_symmetric", "p=" + std::to_string(pp) + ";a=product"), Tp * prod, prod * Tp);
    rec.expect_equal(tag("T_symmetric", "p=" + std::to_string(pp) + ";a=random"), Tp * sym, sym * Tp);
  }

  // g_k and T_k against B'_{i,j}.
  for (int k = 1; k < n; ++k) {
    Permutation s = Permutation::simple(n, k);
    Element Bk = gen_Bprime(alg, k, k + 1);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        Element B = gen_Bprime(alg, i, j);
        Element Bs = gen_Bprime(alg, s(i), s(j));
        rec.expect_equal(tag("g_Bprime", {{"k", k}, {"i", i}, {"j", j}}), g[k - 1] * B, Bs * g[k - 1]);
        rec.expect_equal(tag("T_Bprime", {{"k", k}, {"i", i}, {"j", j}}), T[k - 1] * B,
                         Bs * T[k - 1] + (Bs - B) * Bk);
      }
  }

  // g_w times g_i on either side.
  std::vector<Element> gw;
  for (std::size_t w = 0; w < alg->num_perms(); ++w) gw.push_back(g_word(alg, alg->perm(w)));
  for (std::size_t w = 0; w < alg->num_perms(); ++w)
    for (int i = 1; i < n; ++i) {
      const Permutation& pw = alg->perm(w);
      Permutation s = Permutation::simple(n, i);
      std::size_t right = alg->perm_index(compose(pw, s));
      std::size_t left = alg->perm_index(compose(s, pw));
      Element e = gen_e(alg, i);
      Element expect_right = gw[right];
      if (alg->perm_length(right) < alg->perm_length(w)) expect_right += scale(p.q_diff(), gw[w] * e);
      Element expect_left = gw[left];
      if (alg->perm_length(left) < alg->perm_length(w)) expect_left += scale(p.q_diff(), e * gw[w]);
      rec.expect_equal(tag("g_w_times_g", "w=" + perm_label(pw) + ";i=" + std::to_string(i)), gw[w] * g[i - 1],
                       expect_right);
      rec.expect_equal(tag("g_times_g_w", "w=" + perm_label(pw) + ";i=" + std::to_string(i)), g[i - 1] * gw[w],
                       expect_left);
    }

  // g_w is unitriangular over the T_w basis with Bruhat support.
  TWordTable table(alg);
  for (std::size_t w = 0; w < alg->num_perms(); ++w) {
    auto coords = to_coordinates(gw[w], Basis::tT, table);
    bool ok = coords.entries.count(alg->key(0, w)) && coords.entries.at(alg->key(0, w)) == Scalar(1);
    for (const auto& [key, v] : coords.entries) {
      std::size_t wp = alg->key_perm(key);
      if (wp == w)
        ok = ok && alg->key_color(key) == 0;
      else
        ok = ok && bruhat_leq(alg->perm(wp), alg->perm(w));
    }
    rec.expect(tag("g_w_triangular", perm_label(alg->perm(w))), ok, to_json(coords));
  }

  // Trace on products of g_w, powers of t, and the dual pairing on one strand.
  for (std::size_t w = 0; w < alg->num_perms(); ++w)
    for (std::size_t v = 0; v < alg->num_perms(); ++v)
      rec.expect_equal(tag("tau_g_w_g_v", "w=" + perm_label(alg->perm(w)) + ";v=" + perm_label(alg->perm(v))),
                       tau(gw[w] * gw[v]), Scalar(alg->inverse_perm(w) == v ? 1 : 0));
  const Scalar sign(r % 2 ? 1 : -1);
  for (int i = 1; i <= n; ++i) {
    for (int s = 0; s < r; ++s) {
      auto check = tau_power_check(alg, s, i);
      rec.expect_equal(tag("tau_t_power", {{"i", i}, {"s", s}}), check.lhs, check.rhs);
    }
    for (int d = 0; d < r; ++d) {
      Element sum = zero(alg);
      for (int j = 0; j <= r - d - 1; ++j)
        sum += scale(elementary_symmetric(p, j) * Scalar(j % 2 ? -1 : 1), power(t[i - 1], r - d - j));
      for (int c = 0; c < r; ++c)
        rec.expect_equal(tag("tau_dual_pairing", {{"i", i}, {"c", c}, {"d", d}}), tau(power(t[i - 1], c) * sum),
                         c == d ? sign * p.sigma_r() : Scalar(0));
    }
  }

  // Conjugates of e_i and orbit idempotents.
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      rec.expect_equal(tag("e_conjugate", {{"i", i}, {"j", j}}), conjugation_product(alg, i, j),
                       gen_e_pair(alg, i, j));
  for (const auto& orbit : enumerate_orbit_representatives(n, r))
    rec.expect_equal(tag("orbit_product", color_label(orbit.representative)),
                     orbit_sum(alg, orbit.representative), orbit_product(alg, orbit.representative));

  if (r == 2 && p.u[0] == Scalar(1) && p.u[1] == Scalar(-1))
    for (int i = 1; i < n; ++i)
      rec.expect_equal(tag("e_from_t", {{"i", i}}), gen_e(alg, i),
                       scale(Scalar(1, 2), one(alg) + t[i - 1] * t[i]));

  // Each presentation's generators rebuilt from the other's.
  VerificationReport cross = make_report("cross", alg);
  RelationRecorder cross_rec(cross);
  std::vector<Element> T_from_g, g_from_T;
  for (int i = 1; i < n; ++i) {
    Element Bp = gen_Bprime(alg, i, i + 1);
    T_from_g.push_back(g[i - 1] - Bp);
    g_from_T.push_back(T[i - 1] + Bp);
    cross_rec.expect_equal(tag("round_trip_g", {{"i", i}}), (g[i - 1] - Bp) + Bp, g[i - 1]);
  }
  check_definition_relations(cross_rec, p, alg, t, T_from_g);
  check_yokonuma_relations(cross_rec, p, alg, t, g_from_T);
  report.absorb(cross, "cross/");
  return report;
}

VerificationReport verify_all(const AlgebraPtr& alg) {
  auto report = make_report("all", alg);
  report.absorb(verify_definition_presentation(alg), "def/");
  report.absorb(verify_yokonuma_presentation(alg), "yh/");
  report.absorb(verify_b_presentation(alg), "b/");
  report.absorb(verify_lemma_suite(alg), "lemmas/");
  return report;
}

VerificationReport multi_parameter_fuzz(int n, int r, int trials, std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorCode::OutOfRange, "trials must be positive");
  std::mt19937_64 rng(seed);
  VerificationReport report;
  report.suite = "fuzz";
  for (int trial = 0; trial < trials; ++trial) {
    auto alg = Algebra::create(random_parameters(n, r, rng));
    report.absorb(verify_all(alg), "trial" + std::to_string(trial) + "/");
  }
  return report;
}

nlohmann::json to_json(const VerificationReport& report) {
  auto contexts = nlohmann::json::array();
  for (const auto& c : report.contexts) {
    nlohmann::json j;
    to_json(j, c);
    contexts.push_back(j);
  }
  auto entries = nlohmann::json::array();
  for (const auto& e : report.entries) {
    nlohmann::json j{{"id", e.id}, {"status", e.ok ? "OK" : "FAIL"}};
    if (!e.ok) j["witness"] = e.witness;
    entries.push_back(j);
  }
  return {{"suite", report.suite},
          {"contexts", contexts},
          {"pass", report.pass()},
          {"instances", report.entries.size()},
          {"failures", report.failures()},
          {"entries", entries}};
}

std::string format_table(const VerificationReport& report) {
  std::map<std::string, std::pair<std::size_t, std::size_t>> families;  // total, failed
  for (const auto& e : report.entries) {
    auto& [total, failed] = families[e.id.substr(0, e.id.find('['))];
    ++total;
    if (!e.ok) ++failed;
  }
  std::size_t width = 8;
  for (const auto& [name, counts] : families) width = std::max(width, name.size());
  std::ostringstream out;
  out << std::left;
  out.width(static_cast<std::streamsize>(width));
  out << "relation" << "  instances  failures\n";
  for (const auto& [name, counts] : families) {
    out.width(static_cast<std::streamsize>(width));
    out << name << "  ";
    out.width(9);
    out << counts.first << "  " << counts.second << "\n";
  }
  out << "suite " << report.suite << ": " << (report.pass() ? "PASS" : "FAIL") << " (" << report.entries.size()
      << " instances, " << report.failures() << " failures)\n";
  return out.str();
}

}  // namespace hnr
