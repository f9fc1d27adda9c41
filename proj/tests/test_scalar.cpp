#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "hnr/error.hpp"
#include "hnr/scalar.hpp"

using namespace hnr;
using hnr::test::S;

namespace {

// Coefficients of prod (X - u_i), lowest degree first.
std::vector<Scalar> expand_roots(const std::vector<Scalar>& u) {
  std::vector<Scalar> poly{Scalar(1)};
  for (const auto& root : u) {
    std::vector<Scalar> next(poly.size() + 1, Scalar(0));
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] += poly[d];
      next[d] -= root * poly[d];
    }
    poly = next;
  }
  return poly;
}

// Sum over all exponent vectors of total degree s.
Scalar brute_h(const std::vector<Scalar>& u, int s, std::size_t from = 0) {
  if (s == 0) return Scalar(1);
  if (from == u.size()) return Scalar(0);
  Scalar total(0);
  for (int e = 0; e <= s; ++e) total += u[from].pow(e) * brute_h(u, s - e, from + 1);
  return total;
}

Scalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-20, 20), den(1, 20);
  return Scalar(num(rng), den(rng));
}

}  // namespace

TEST_CASE("scalars are canonical and serialize as p/q") {
  CHECK(Scalar(6, -4).str() == "-3/2");
  CHECK(S("10/4") == Scalar(5, 2));
  CHECK(S("-7").str() == "-7");
  CHECK(S("0/5").str() == "0");
  CHECK_THROWS_AS(S("1/0"), Error);
  CHECK_THROWS_AS(S("1.5"), Error);
  CHECK_THROWS_AS(S(""), Error);
  CHECK_THROWS_AS(S("--1"), Error);
  CHECK((Scalar(2, 3).inverse() == Scalar(3, 2)));
  CHECK(Scalar(-2, 3).pow(-2) == Scalar(9, 4));
}

TEST_CASE("validate_parameters") {
  auto p = hnr::test::params(2, 2, "1", {"1", "-1"});
  CHECK(p.symmetrizing_ok);
  CHECK(p.delta() == Scalar(-2));

  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::AssertFailed;
  };
  CHECK(code_of([] { hnr::test::params(2, 2, "3/2", {"1", "1"}); }) == ErrorCode::RepeatedU);
  CHECK(code_of([] { hnr::test::params(2, 2, "0", {"1", "-1"}); }) == ErrorCode::ZeroQ);
  CHECK(code_of([] { hnr::test::params(2, 3, "1", {"1", "-1"}); }) == ErrorCode::BadShape);
  CHECK_FALSE(hnr::test::params(2, 2, "1", {"0", "1"}).symmetrizing_ok);
}

TEST_CASE("parameter JSON round trip") {
  auto p = hnr::test::params(3, 3, "3/2", {"1", "-2/7", "5"});
  nlohmann::json j;
  to_json(j, p);
  CHECK(j.dump() == R"({"n":3,"q":"3/2","r":3,"u":["1","-2/7","5"]})");
  CHECK(parameters_from_json(j) == p);
  CHECK_THROWS_AS(parameters_from_json(nlohmann::json::parse(R"({"n":1})")), Error);
}

TEST_CASE("elementary symmetric functions") {
  auto p = hnr::test::params(1, 2, "1", {"1", "-1"});
  CHECK(elementary_symmetric(p, 0) == Scalar(1));
  CHECK(elementary_symmetric(p, 2) == Scalar(-1));
  CHECK_THROWS_AS(elementary_symmetric(p, 3), Error);
  CHECK_THROWS_AS(elementary_symmetric(p, -1), Error);

  auto p3 = hnr::test::params(1, 3, "1", {"1", "2", "3"});
  // (X-1)(X-2)(X-3) = X^3 - 6X^2 + 11X - 6
  auto coeffs = expand_roots(p3.u);
  CHECK(coeffs[1] == Scalar(11));
  for (int j = 0; j <= 3; ++j)
    CHECK(elementary_symmetric(p3, j) == (j % 2 ? -coeffs[3 - j] : coeffs[3 - j]));
}

TEST_CASE("complete homogeneous functions") {
  auto p = hnr::test::params(1, 2, "1", {"1", "-1"});
  CHECK(complete_homogeneous(p, 0) == Scalar(1));
  CHECK(complete_homogeneous(p, 2) == Scalar(1));
  CHECK(complete_homogeneous(p, 1) == elementary_symmetric(p, 1));
  CHECK_THROWS_AS(complete_homogeneous(p, -1), Error);

  auto p4 = hnr::test::params(1, 4, "1", {"2", "-1/3", "5/7", "4"});
  for (int s = 0; s <= 6; ++s) CHECK(complete_homogeneous(p4, s) == brute_h(p4.u, s));
}

TEST_CASE("Newton identity for random parameters") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int r = 1 + trial % 4;
    std::vector<Scalar> u;
    while (static_cast<int>(u.size()) < r) {
      Scalar x = random_scalar(rng);
      if (std::find(u.begin(), u.end(), x) == u.end()) u.push_back(x);
    }
    auto p = validate_parameters(1, r, Scalar(2), u);
    for (int s = 0; s <= 2 * r; ++s) {
      Scalar sum(0);
      for (int j = 0; j <= std::min(s, r); ++j) {
        Scalar term = elementary_symmetric(p, j) * complete_homogeneous(p, s - j);
        sum += (j % 2 ? -term : term);
      }
      CHECK(sum == Scalar(s == 0 ? 1 : 0));
    }
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}
