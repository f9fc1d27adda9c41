#include <doctest.h>

#include "helpers.hpp"
#include "hnr/basis.hpp"
#include "hnr/error.hpp"
#include "hnr/random.hpp"

using namespace hnr;
using hnr::test::S;

TEST_CASE("Lagrange interpolants") {
  auto p = hnr::test::params(1, 2, "2", {"3", "-5"});
  auto l1 = lagrange_polynomial(p, 1);
  // (X - u_2) / (u_1 - u_2)
  CHECK(l1.coefficient(0) == S("5") / S("8"));
  CHECK(l1.coefficient(1) == S("1") / S("8"));

  auto sym = hnr::test::params(1, 2, "2", {"1", "-1"});
  CHECK(lagrange_polynomial(sym, 1) == UniPolynomial({S("1/2"), S("1/2")}));
  CHECK_THROWS_AS(lagrange_polynomial(sym, 3), Error);

  for (int r = 1; r <= 4; ++r) {
    std::vector<std::string> u{"2", "-1/3", "5/7", "4"};
    u.resize(r);
    auto pr = hnr::test::params(1, r, "2", u);
    UniPolynomial sum;
    for (int c = 1; c <= r; ++c) {
      auto l = lagrange_polynomial(pr, c);
      CHECK(l.degree() <= r - 1);
      for (int c2 = 1; c2 <= r; ++c2) CHECK(l(pr.u[c2 - 1]) == Scalar(c == c2 ? 1 : 0));
      sum = sum + l;
    }
    CHECK(sum == UniPolynomial::constant(Scalar(1)));
  }
}

TEST_CASE("F polynomials") {
  auto p = hnr::test::params(1, 2, "2", {"3", "-5"});
  // Delta = u_2 - u_1; F_1 = u_2 - X, F_2 = X - u_1
  CHECK(p.delta() == S("-8"));
  CHECK(F_polynomial(p, 1) == UniPolynomial({S("-5"), S("-1")}));
  CHECK(F_polynomial(p, 2) == UniPolynomial({S("-3"), S("1")}));
  CHECK_THROWS_AS(F_polynomial(p, 0), Error);

  for (int r = 1; r <= 4; ++r) {
    std::vector<std::string> u{"2", "-1/3", "5/7", "4"};
    u.resize(r);
    auto pr = hnr::test::params(1, r, "2", u);
    for (int c = 1; c <= r; ++c) {
      CHECK(F_polynomial(pr, c) == pr.delta() * lagrange_polynomial(pr, c));
      CHECK(F_polynomial(pr, c).degree() == r - 1);
    }
  }

  auto p3 = hnr::test::params(1, 3, "2", {"1", "2", "3"});
  DenseMatrix hv = matmul(F_matrix(p3), vandermonde(p3));
  DenseMatrix expected = identity_matrix(3);
  for (auto& row : expected)
    for (auto& x : row) x *= p3.delta();
  CHECK(hv == expected);
}

TEST_CASE("coordinates of simple elements") {
  auto alg = hnr::test::algebra(2, 2, "3/2", {"1", "-1"});
  auto tg = to_coordinates(one(alg), Basis::tg);
  REQUIRE(tg.entries.size() == 1);
  CHECK(tg.entries.begin()->first == 0);
  CHECK(tg.entries.begin()->second == Scalar(1));

  auto a1 = hnr::test::algebra(1, 2, "2", {"3", "-5"});
  auto b1 = to_coordinates(gen_b(a1, ColorVector({1}, 2)), Basis::tg);
  CHECK(b1.entries.at(a1->key(exponent_index(*a1, {0}), 0)) == S("5/8"));
  CHECK(b1.entries.at(a1->key(exponent_index(*a1, {1}), 0)) == S("1/8"));

  // g_{s_1} = T_1 + B'_{12}: leading T_{s_1}, correction on w = id
  auto tT = to_coordinates(gen_g(alg, 1), Basis::tT);
  const std::size_t s1 = alg->perm_index(Permutation{2, 1});
  CHECK(tT.entries.at(alg->key(0, s1)) == Scalar(1));
  for (const auto& [key, c] : tT.entries)
    if (key != alg->key(0, s1)) CHECK(alg->key_perm(key) == alg->identity_perm());
  CHECK(tT.entries.size() > 1);
}

TEST_CASE("from_coordinates") {
  auto alg = hnr::test::algebra(3, 2, "3/2", {"2", "-1"});
  CHECK(from_coordinates(alg, CoordinateVector{Basis::tg, alg, {{0, Scalar(1)}}}) == one(alg));
  const std::size_t s1 = alg->perm_index(Permutation{2, 1, 3});
  CHECK(from_coordinates(alg, CoordinateVector{Basis::tT, alg, {{alg->key(0, s1), Scalar(1)}}}) ==
        gen_T(alg, 1));
  CHECK_THROWS_AS(from_coordinates(alg, CoordinateVector{Basis::tg, alg, {{alg->dimension(), Scalar(1)}}}),
                  Error);
  auto other = hnr::test::algebra(3, 2, "2", {"2", "-1"});
  CHECK_THROWS_AS(from_coordinates(alg, CoordinateVector{Basis::tg, other, {}}), Error);

  // labels t^c T_w rebuild as products in the engine
  TWordTable table(alg);
  for (std::size_t label = 0; label < alg->num_colors(); ++label)
    for (std::size_t w = 0; w < alg->num_perms(); ++w) {
      auto c = exponent_vector(*alg, label);
      CoordinateVector unit{Basis::tT, alg, {{alg->key(label, w), Scalar(1)}}};
      CHECK(from_coordinates(alg, unit, table) == t_monomial(alg, c) * T_word(alg, alg->perm(w)));
      unit.basis = Basis::tg;
      CHECK(from_coordinates(alg, unit) == t_monomial(alg, c) * g_word(alg, alg->perm(w)));
    }
}

TEST_CASE("round trips through every basis") {
  std::mt19937_64 rng(77);
  for (auto alg : {hnr::test::algebra(2, 3, "2", {"1", "-3", "1/2"}),
                   hnr::test::algebra(3, 2, "-5/3", {"0", "4"})}) {
    TWordTable table(alg);
    for (int trial = 0; trial < 25; ++trial) {
      Element x = random_element(alg, rng);
      for (Basis b : {Basis::bg, Basis::tg, Basis::tT}) {
        auto v = to_coordinates(x, b, table);
        CHECK(from_coordinates(alg, v, table) == x);
        CHECK(coordinates_from_json(alg, to_json(v)).entries == v.entries);
      }
    }
  }
}

TEST_CASE("change-of-basis matrices are invertible") {
  auto alg = hnr::test::algebra(2, 2, "3/2", {"1", "-1"});
  const std::size_t n = alg->dimension();
  for (auto [from, to] : {std::pair{Basis::bg, Basis::tg}, std::pair{Basis::tg, Basis::tT},
                          std::pair{Basis::bg, Basis::tT}}) {
    auto forward = change_of_basis_matrix(alg, from, to);
    auto backward = change_of_basis_matrix(alg, to, from);
    CHECK(rank(forward) == n);
    CHECK(matmul(forward, backward) == identity_matrix(n));
  }
}

TEST_CASE("t_i^r reduces through the elementary symmetric functions") {
  for (auto alg : {hnr::test::algebra(2, 2, "2", {"1", "-1"}),
                   hnr::test::algebra(2, 3, "2", {"1", "-3", "1/2"}),
                   hnr::test::algebra(1, 4, "2", {"1", "-3", "1/2", "5"})}) {
    const ParameterSet& p = alg->params();
    for (int i = 1; i <= alg->n(); ++i) {
      Element lhs = power(gen_t(alg, i), p.r);
      Element rhs = zero(alg);
      for (int k = 0; k < p.r; ++k) {
        Scalar c = elementary_symmetric(p, p.r - k);
        if ((p.r - k + 1) % 2) c = -c;
        rhs += scale(c, power(gen_t(alg, i), k));
      }
      CHECK(to_coordinates(lhs, Basis::tg).entries == to_coordinates(rhs, Basis::tg).entries);
    }
  }
}

TEST_CASE("parameter change") {
  auto alg = hnr::test::algebra(1, 2, "2", {"0", "1"});
  auto change = parameter_change_map(alg, hnr::test::params(1, 2, "2", {"1", "0"}));
  CHECK(change.a == std::vector<Scalar>{Scalar(1), Scalar(-1)});
  CHECK(change.images[0] == one(alg) - gen_t(alg, 1));

  auto alg3 = hnr::test::algebra(2, 3, "2", {"1", "-3", "1/2"});
  auto same = parameter_change_map(alg3, alg3->params());
  CHECK(same.a == std::vector<Scalar>{Scalar(0), Scalar(1), Scalar(0)});
  CHECK(same.images[1] == gen_t(alg3, 2));

  auto alg2 = hnr::test::algebra(2, 2, "2", {"1", "-1"});
  auto target = hnr::test::params(2, 2, "2", {"2", "5"});
  auto map = parameter_change_map(alg2, target);
  for (const auto& t : map.images)
    CHECK((t - scalar_element(alg2, S("2"))) * (t - scalar_element(alg2, S("5"))) == zero(alg2));
  for (std::size_t i = 0; i < map.images.size(); ++i) CHECK(map.images[i] == map.images_via_idempotents[i]);

  CHECK_THROWS_AS(parameter_change_map(alg2, hnr::test::params(2, 2, "3", {"2", "5"})), Error);
  CHECK_THROWS_AS(parameter_change_map(alg2, hnr::test::params(3, 2, "2", {"2", "5"})), Error);
}
