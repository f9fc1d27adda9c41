#include <doctest.h>

#include <map>
#include <random>

#include "helpers.hpp"
#include "hnr/error.hpp"
#include "hnr/fixed.hpp"
#include "hnr/random.hpp"

using namespace hnr;

namespace {

// Orbit label of a color: the pattern of equalities between positions.
std::vector<int> pattern(const Algebra& alg, std::size_t color) {
  std::vector<int> out;
  for (int i = 1; i <= alg.n(); ++i)
    for (int j = i + 1; j <= alg.n(); ++j) out.push_back(alg.color_entry(color, i) == alg.color_entry(color, j));
  return out;
}

// Replaces each bg coefficient by its average over the orbit class.
Element symmetrize(const Element& x) {
  const Algebra& alg = x.context();
  std::map<std::pair<std::vector<int>, std::size_t>, std::pair<Scalar, long>> classes;
  for (std::size_t k = 0; k < alg.num_colors(); ++k)
    for (std::size_t w = 0; w < alg.num_perms(); ++w) {
      auto& [sum, count] = classes[{pattern(alg, k), w}];
      sum += x.coefficient(k, w);
      ++count;
    }
  Element out = zero(x.algebra());
  for (std::size_t k = 0; k < alg.num_colors(); ++k)
    for (std::size_t w = 0; w < alg.num_perms(); ++w) {
      const auto& [sum, count] = classes[{pattern(alg, k), w}];
      out.add_term(k, w, sum / Scalar(count));
    }
  return out;
}

}  // namespace

TEST_CASE("conjugated idempotents") {
  for (int n = 2; n <= 4; ++n)
    for (int r = 1; r <= 3; ++r) {
      std::vector<std::string> u{"2", "-3", "1/2"};
      u.resize(r);
      auto alg = hnr::test::algebra(n, r, "3/2", u);
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) CHECK(conjugated_idempotent(alg, i, j) == gen_e_pair(alg, i, j));
      CHECK(conjugated_idempotent(alg, 1, 2) == gen_e(alg, 1));
    }
  auto alg = hnr::test::algebra(3, 2, "2", {"1", "5"});
  CHECK(gen_g(alg, 2) * gen_e(alg, 1) * g_generator_inverse(alg, 2) == gen_e_pair(alg, 1, 3));
  CHECK_THROWS_AS(conjugated_idempotent(alg, 2, 2), Error);
  CHECK_THROWS_AS(conjugated_idempotent(alg, 1, 4), Error);
}

TEST_CASE("orbit idempotents") {
  auto alg = hnr::test::algebra(3, 2, "2", {"1", "5"});
  CHECK(orbit_idempotent(alg, ColorVector({1, 2, 1}, 2)) ==
        gen_b(alg, ColorVector({1, 2, 1}, 2)) + gen_b(alg, ColorVector({2, 1, 2}, 2)));
  CHECK(orbit_idempotent(alg, ColorVector({1, 1, 1}, 2)) ==
        gen_b(alg, ColorVector({1, 1, 1}, 2)) + gen_b(alg, ColorVector({2, 2, 2}, 2)));

  for (int n = 1; n <= 4; ++n)
    for (int r = 1; r <= 3; ++r) {
      std::vector<std::string> u{"2", "-3", "1/2"};
      u.resize(r);
      auto a = hnr::test::algebra(n, r, "-2", u);
      Element total = zero(a);
      for (const auto& orbit : enumerate_orbit_representatives(n, r)) {
        Element b = orbit_idempotent(a, orbit.representative);
        CHECK(b * b == b);
        CHECK(is_fixed(b));
        CHECK(b.size() == orbit.members.size());
        total += b;
      }
      CHECK(total == one(a));
    }
}

TEST_CASE("fixed basis sizes and independence") {
  CHECK(fixed_dimension(3, 2) == 24);
  CHECK(fixed_dimension(3, 3) == 30);
  CHECK(fixed_dimension(2, 5) == 4);
  CHECK(fixed_dimension(1, 4) == 1);

  for (auto [n, r] : {std::pair{1, 2}, {2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    std::vector<std::string> u{"2", "-3", "1/2"};
    u.resize(r);
    auto alg = hnr::test::algebra(n, r, "5/3", u);
    auto basis = fixed_basis(alg);
    CHECK(basis.size() == fixed_dimension(n, r));
    SpanBasis span(alg);
    for (const auto& b : basis) {
      CHECK(is_fixed(b.element));
      CHECK(span.insert(b.element));
    }
    CHECK(span.rank() == basis.size());
  }
  auto n1 = hnr::test::algebra(1, 3, "2", {"1", "2", "3"});
  CHECK(fixed_basis(n1).front().element == one(n1));
}

TEST_CASE("is_fixed examples") {
  auto alg = hnr::test::algebra(3, 3, "2", {"1", "2", "3"});
  for (const auto& w : all_permutations(3)) CHECK(is_fixed(g_word(alg, w)));
  CHECK(is_fixed(gen_e(alg, 1)));
  CHECK_FALSE(is_fixed(gen_t(alg, 1)));
  CHECK_FALSE(is_fixed(gen_b(alg, ColorVector({1, 1, 3}, 3))));
  auto alg2 = hnr::test::algebra(2, 2, "2", {"1", "2"});
  CHECK_FALSE(is_fixed(gen_b(alg2, ColorVector({1, 2}, 2))));
}

TEST_CASE("fixed iff coefficients are constant on orbit classes") {
  auto alg = hnr::test::algebra(2, 2, "3", {"1", "-4"});
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    Element x = random_element(alg, rng);
    Element s = symmetrize(x);
    CHECK(is_fixed(s));
    CHECK(is_fixed(x) == (x == s));
    CHECK_FALSE(is_fixed(s + gen_b(alg, ColorVector({1, 2}, 2))));
  }
}

TEST_CASE("fixed subalgebra is closed under products") {
  for (auto [n, r] : {std::pair{2, 2}, {3, 2}}) {
    auto alg = hnr::test::algebra(n, r, "2/5", {"3", "-1"});
    auto basis = fixed_basis(alg);
    SpanBasis span(alg);
    for (const auto& b : basis) span.insert(b.element);
    for (const auto& x : basis)
      for (const auto& y : basis) CHECK(span.contains(x.element * y.element));
  }
}

TEST_CASE("generation by g_i and e_i") {
  struct Case {
    int n, r;
    std::size_t rank;
  };
  for (auto c : {Case{1, 2, 1}, Case{2, 2, 4}, Case{3, 2, 24}, Case{3, 3, 30}, Case{2, 1, 2}}) {
    std::vector<std::string> u{"2", "-3", "1/2"};
    u.resize(c.r);
    auto alg = hnr::test::algebra(c.n, c.r, "-3/2", u);
    auto report = generation_report(alg);
    CHECK(report.rank == c.rank);
    CHECK(report.expected == c.rank);
    CHECK(report.all_fixed);
    CHECK(report.passed);
  }
}

TEST_CASE("span basis and labels") {
  auto alg = hnr::test::algebra(2, 2, "2", {"1", "3"});
  auto other = hnr::test::algebra(2, 2, "3", {"1", "3"});
  SpanBasis span(alg);
  CHECK(span.insert(gen_g(alg, 1)));
  CHECK_FALSE(span.insert(scale(Scalar(4), gen_g(alg, 1))));
  CHECK_THROWS_AS(span.insert(gen_g(other, 1)), Error);

  nlohmann::json j = fixed_basis(alg)[1];
  CHECK(j["orbit"] == nlohmann::json({1, 1}));
  CHECK(j["w"] == nlohmann::json({2, 1}));
}
