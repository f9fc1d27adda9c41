// Acceptance gate: one PASS/FAIL line per criterion, all checks exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hnr/basis.hpp"
#include "hnr/error.hpp"
#include "hnr/fixed.hpp"
#include "hnr/linalg.hpp"
#include "hnr/random.hpp"
#include "hnr/trace.hpp"
#include "hnr/verifier.hpp"

using namespace hnr;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

AlgebraPtr make(int n, int r, const std::string& q, const std::vector<std::string>& u) {
  std::vector<Scalar> us;
  for (const auto& x : u) us.push_back(Scalar::parse(x));
  return Algebra::create(validate_parameters(n, r, Scalar::parse(q), us));
}

std::string ctx(int n, int r) { return "(" + std::to_string(n) + "," + std::to_string(r) + ")"; }

// Every reduced word of w, by peeling right descents in all possible ways.
void reduced_words(const Permutation& w, std::vector<int>& suffix, std::vector<std::vector<int>>& out) {
  if (w.is_identity()) {
    out.emplace_back(suffix.rbegin(), suffix.rend());
    return;
  }
  for (int i = 1; i < w.size(); ++i)
    if (w(i) > w(i + 1)) {
      suffix.push_back(i);
      reduced_words(compose(w, Permutation::simple(w.size(), i)), suffix, out);
      suffix.pop_back();
    }
}

Outcome presentations() {
  Outcome o;
  std::size_t instances = 0;
  for (auto [n, r] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}}) {
    std::mt19937_64 rng(1000 + 10 * n + r);
    for (int set = 0; set < 3; ++set) {
      auto alg = Algebra::create(random_parameters(n, r, rng));
      for (auto* suite : {verify_definition_presentation, verify_yokonuma_presentation, verify_b_presentation}) {
        auto report = suite(alg);
        instances += report.entries.size();
        o.require(report.pass(), report.suite + " fails at " + ctx(n, r));
      }
    }
  }
  if (o.ok) o.detail = std::to_string(instances) + " relation instances, 0 failures";
  return o;
}

Outcome basis_ranks() {
  Outcome o;
  std::mt19937_64 rng(2);
  for (auto [n, r, size] : {std::tuple{3, 2, 48}, {3, 3, 162}}) {
    auto alg = Algebra::create(random_parameters(n, r, rng));
    auto bg_tg = change_of_basis_matrix(alg, Basis::bg, Basis::tg);
    auto tg_tT = change_of_basis_matrix(alg, Basis::tg, Basis::tT);
    auto tT_bg = change_of_basis_matrix(alg, Basis::tT, Basis::bg);
    o.require(bg_tg.size() == std::size_t(size), "wrong matrix size at " + ctx(n, r));
    for (const auto* m : {&bg_tg, &tg_tT, &tT_bg})
      o.require(rank(*m) == std::size_t(size), "singular change of basis at " + ctx(n, r));
    // Going once around the triangle must return the identity.
    o.require(matmul(tT_bg, matmul(tg_tT, bg_tg)) == identity_matrix(size), "cycle is not the identity at " + ctx(n, r));
  }
  if (o.ok) o.detail = "ranks 48 and 162, bg->tg->tT->bg is the identity";
  return o;
}

Outcome trace_duality() {
  Outcome o;
  auto alg = make(3, 2, "3/2", {"2", "-5"});
  for (const auto& w : all_permutations(3))
    for (const auto& v : all_permutations(3))
      o.require(tau(g_word(alg, w) * g_word(alg, v)) == Scalar(v == w.inverse() ? 1 : 0), "tau(g_w g_v) wrong");
  o.require(trace_property_check(alg, 100, 4242), "tau(xy) != tau(yx)");

  for (int r = 1; r <= 4; ++r) {
    std::vector<std::string> u{"3", "-1/2", "2/7", "-4"};
    u.resize(r);
    auto a = make(2, r, "2", u);
    const auto& p = a->params();
    const Scalar sign(r % 2 ? 1 : -1);
    for (int i = 1; i <= 2; ++i) {
      for (int s = 0; s < r; ++s) {
        auto check = tau_power_check(a, s, i);
        o.require(check.lhs == check.rhs, "tau(t^{r+s}) wrong at r=" + std::to_string(r));
      }
      for (int d = 0; d < r; ++d) {
        Element sum = zero(a);
        for (int j = 0; j <= r - d - 1; ++j)
          sum += scale(elementary_symmetric(p, j) * Scalar(j % 2 ? -1 : 1), power(gen_t(a, i), r - d - j));
        for (int c = 0; c < r; ++c)
          o.require(tau(power(gen_t(a, i), c) * sum) == (c == d ? sign * p.sigma_r() : Scalar(0)),
                    "dual pairing on one strand wrong at r=" + std::to_string(r));
      }
    }
  }

  for (const auto& a : {make(1, 2, "2", {"1", "-1"}), make(2, 2, "3/2", {"2", "5"}), make(2, 3, "-2", {"1", "-1/2", "3"})}) {
    validate_trace_weights(a);
    o.require(gram_check(a).is_identity, "Gram matrix not the identity at " + ctx(a->n(), a->r()));
  }
  bool refused = false;
  try {
    gram_check(make(2, 2, "2", {"0", "1"}));
  } catch (const Error& e) {
    refused = e.code() == ErrorCode::NotSymmetrizing;
  }
  o.require(refused, "gram_check accepted sigma_r = 0");
  if (o.ok) o.detail = "Gram = I at (1,2),(2,2),(2,3); refused for sigma_r = 0";
  return o;
}

Outcome parameter_change() {
  Outcome o;
  auto check = [&](const AlgebraPtr& alg, const ParameterSet& target) {
    ParameterChange change = parameter_change_map(alg, target);
    for (std::size_t i = 0; i < change.images.size(); ++i)
      o.require(change.images[i] == change.images_via_idempotents[i], "two images of t~ disagree");
    VerificationReport report;
    RelationRecorder rec(report);
    std::vector<Element> T;
    for (int i = 1; i < alg->n(); ++i) T.push_back(gen_T(alg, i));
    check_definition_relations(rec, target, alg, change.images, T);
    o.require(report.pass(), "images violate the target relations at " + ctx(alg->n(), alg->r()));
  };
  auto alg = make(2, 2, "3/2", {"1", "-1"});
  auto target = make(2, 2, "3/2", {"2", "5"})->params();
  check(alg, target);

  std::mt19937_64 rng(31);
  for (int n : {2, 3}) {
    auto source = random_parameters(n, 3, rng);
    auto other = random_parameters(n, 3, rng);
    other.q = source.q;
    check(Algebra::create(source), validate_parameters(n, 3, other.q, other.u));
  }
  if (o.ok) o.detail = "u=(1,-1) -> (2,5) and two random r=3 pairs";
  return o;
}

Outcome fixed_subalgebra() {
  Outcome o;
  o.require(fixed_basis(make(3, 2, "2", {"1", "3"})).size() == 24, "fixed basis at (3,2) is not 24");
  o.require(fixed_basis(make(3, 3, "2", {"1", "3", "-2"})).size() == 30, "fixed basis at (3,3) is not 30");
  for (int n = 1; n <= 4; ++n)
    for (int r = 1; r <= 3; ++r) {
      std::vector<std::string> u{"2", "-1/3", "5"};
      u.resize(r);
      auto alg = make(n, r, "3/2", u);
      o.require(enumerate_orbit_representatives(n, r).size() * alg->num_perms() == fixed_dimension(n, r),
                "orbit count differs from the Stirling count at " + ctx(n, r));
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          o.require(conjugation_product(alg, i, j) == gen_e_pair(alg, i, j), "conjugate of e_i wrong at " + ctx(n, r));
      for (const auto& orbit : enumerate_orbit_representatives(n, r))
        o.require(orbit_sum(alg, orbit.representative) == orbit_product(alg, orbit.representative),
                  "orbit idempotent product formula wrong at " + ctx(n, r));
    }
  std::string ranks;
  for (auto [n, r] : {std::pair{1, 2}, {2, 2}, {3, 2}, {3, 3}, {4, 2}}) {
    std::vector<std::string> u{"2", "-1/3", "5"};
    u.resize(r);
    auto report = generation_report(make(n, r, "-2/3", u));
    o.require(report.passed, "generation closure incomplete at " + ctx(n, r));
    ranks += (ranks.empty() ? "" : ", ") + std::to_string(report.rank);
  }
  if (o.ok) o.detail = "sizes 24 and 30; closure ranks " + ranks;
  return o;
}

Outcome yokonuma_specialization() {
  Outcome o;
  auto alg = make(3, 2, "3/2", {"1", "-1"});
  for (int i = 1; i <= 2; ++i)
    o.require(gen_e(alg, i) == scale(Scalar(1, 2), one(alg) + gen_t(alg, i) * gen_t(alg, i + 1)),
              "e_" + std::to_string(i) + " != (1 + t_i t_{i+1})/2");
  if (o.ok) o.detail = "e_1, e_2 at n=3, q=3/2";
  return o;
}

Outcome engine_properties() {
  Outcome o;
  std::mt19937_64 rng(77);
  for (auto [n, r] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    auto alg = Algebra::create(random_parameters(n, r, rng));
    for (int trial = 0; trial < 100; ++trial) {
      Element x = random_element(alg, rng), y = random_element(alg, rng), z = random_element(alg, rng);
      o.require((x * y) * z == x * (y * z), "associativity fails at " + ctx(n, r));
    }
  }
  auto alg = make(3, 2, "5/3", {"2", "7"});
  TWordTable table(alg);
  std::size_t words = 0;
  for (const auto& w : all_permutations(3)) {
    std::vector<int> suffix;
    std::vector<std::vector<int>> all;
    reduced_words(w, suffix, all);
    Element gw = g_word(alg, w);
    for (const auto& word : all) {
      Element x = one(alg);
      for (int i : word) x = x * gen_g(alg, i);
      o.require(x == gw, "g_w depends on the reduced word");
      ++words;
    }
    auto coords = to_coordinates(gw, Basis::tT, table);
    std::size_t wi = alg->perm_index(w);
    auto lead = coords.entries.find(alg->key(0, wi));
    o.require(lead != coords.entries.end() && lead->second == Scalar(1), "g_w lacks leading T_w");
    for (const auto& [key, v] : coords.entries) {
      std::size_t wp = alg->key_perm(key);
      o.require(wp == wi ? alg->key_color(key) == 0 : bruhat_leq(alg->perm(wp), w), "g_w support not Bruhat-below w");
    }
  }
  if (o.ok) o.detail = "400 triples, " + std::to_string(words) + " reduced words, unitriangular";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"presentation equivalence", presentations},
      {"basis ranks", basis_ranks},
      {"trace and duality", trace_duality},
      {"parameter independence", parameter_change},
      {"fixed subalgebra", fixed_subalgebra},
      {"Yokonuma specialization", yokonuma_specialization},
      {"engine properties", engine_properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %zu %s: %s (%.2fs)\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.ok) ++failed;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
