#include <doctest.h>

#include <random>

#include "random.hpp"

using namespace symideal;

namespace {
const auto QQ = CoefficientRing::rationals();
const auto F2 = CoefficientRing::prime_field(2);
const auto F7 = CoefficientRing::prime_field(7);

Polynomial P(std::string_view text, const CoefficientRing& ring = QQ, std::uint32_t rows = 2) {
  return parse_polynomial(text, ring, rows);
}

Polynomial combination(const std::vector<Polynomial>& coeffs, std::span<const Polynomial> gens) {
  Polynomial out(gens.front().ring(), gens.front().rows());
  for (std::size_t i = 0; i < gens.size(); ++i) out = out + coeffs[i] * gens[i];
  return out;
}

// Reduced, monic, and closed under S-polynomial reduction.
void check_reduced_basis(const GroebnerBasis& gb, std::span<const Polynomial> gens) {
  CHECK(satisfies_buchberger_criterion(gb));
  REQUIRE(gb.representations.size() == gb.elements.size());
  for (std::size_t i = 0; i < gb.elements.size(); ++i) {
    const auto& g = gb.elements[i];
    CHECK(g.leading_coeff() == 1);
    CHECK(combination(gb.representations[i], gens) == g);
    for (std::size_t j = 0; j < gb.elements.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : g.terms()) CHECK_FALSE(gb.elements[j].leading_monomial().divides(t.monomial));
    }
    if (i > 0) {
      CHECK(compare_grevlex(gb.elements[i - 1].leading_monomial(), g.leading_monomial()) ==
            std::strong_ordering::greater);
    }
  }
}
}  // namespace

TEST_CASE("division") {
  std::vector<Polynomial> d1{P("x[1,1]")};
  auto r1 = divide(P("x[1,1]^2"), d1);
  CHECK(r1.quotients[0] == P("x[1,1]"));
  CHECK(r1.remainder.is_zero());

  std::vector<Polynomial> d2{P("x[1,2]")};
  auto r2 = divide(P("x[1,1]"), d2);
  CHECK(r2.quotients[0].is_zero());
  CHECK(r2.remainder == P("x[1,1]"));

  std::vector<Polynomial> zero{P("0")};
  CHECK_THROWS_AS(divide(P("x[1,1]"), zero), PreconditionError);

  std::mt19937_64 rng(23);
  for (int i = 0; i < 500; ++i) {
    const auto& ring = i % 2 ? QQ : F7;
    auto f = testing::random_poly(rng, ring, 2, 2, 6, 4);
    std::vector<Polynomial> divisors;
    for (std::uint32_t j = testing::uniform(rng, 1, 3); j > 0; --j) {
      auto g = testing::random_poly(rng, ring, 2, 2, 3, 2);
      if (!g.is_zero()) divisors.push_back(g);
    }
    if (divisors.empty()) continue;
    auto res = divide(f, divisors);
    CHECK(combination(res.quotients, divisors) + res.remainder == f);
    for (const auto& t : res.remainder.terms()) {
      for (const auto& g : divisors) CHECK_FALSE(g.leading_monomial().divides(t.monomial));
    }
  }
}

TEST_CASE("buchberger") {
  std::vector<Polynomial> g1{P("x[1,1]")};
  auto b1 = buchberger(g1);
  REQUIRE(b1.elements.size() == 1);
  CHECK(b1.elements[0] == P("x[1,1]"));

  std::vector<Polynomial> g2{P("x[1,1]+x[2,1]"), P("x[1,1]-x[2,1]")};
  auto b2 = buchberger(g2);
  REQUIRE(b2.elements.size() == 2);
  CHECK(b2.elements[0] == P("x[1,1]"));
  CHECK(b2.elements[1] == P("x[2,1]"));
  check_reduced_basis(b2, g2);

  std::vector<Polynomial> g3{P("x[1,1]*x[1,2]-1"), P("x[1,2]"), P("x[2,2]^2")};
  auto b3 = buchberger(g3);
  REQUIRE(b3.elements.size() == 1);
  CHECK(b3.elements[0] == P("1"));
  check_reduced_basis(b3, g3);

  std::vector<Polynomial> zz{parse_polynomial("x[1,1]", CoefficientRing::integers(), 2)};
  CHECK_THROWS_AS(buchberger(zz), PreconditionError);

  SUBCASE("random ideals") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 60; ++i) {
      const auto& ring = i % 3 == 0 ? F2 : (i % 3 == 1 ? F7 : QQ);
      std::vector<Polynomial> gens;
      for (std::uint32_t j = testing::uniform(rng, 1, 3); j > 0; --j) {
        auto g = testing::random_poly(rng, ring, 2, 2, 3, 2);
        if (!g.is_zero()) gens.push_back(g);
      }
      if (gens.empty()) continue;
      auto gb = buchberger(gens);
      check_reduced_basis(gb, gens);
      for (const auto& g : gens) CHECK(divide(g, gb.elements).remainder.is_zero());
    }
  }
}

TEST_CASE("ideal membership") {
  std::vector<Polynomial> gens{P("x[1,1]")};
  auto yes = ideal_member(P("x[1,1]^2*x[1,2]"), gens);
  CHECK(yes.member);
  REQUIRE(yes.cofactors.size() == 1);
  CHECK(yes.cofactors[0] == P("x[1,1]*x[1,2]"));
  CHECK_FALSE(ideal_member(P("1"), gens).member);
  CHECK(ideal_member(P("0"), gens).member);

  std::mt19937_64 rng(37);
  for (int i = 0; i < 100; ++i) {
    const auto& ring = i % 2 ? QQ : F7;
    std::vector<Polynomial> g;
    for (std::uint32_t j = testing::uniform(rng, 1, 3); j > 0; --j) {
      auto p = testing::random_poly(rng, ring, 2, 2, 3, 2);
      if (!p.is_zero()) g.push_back(p);
    }
    if (g.empty()) continue;
    std::vector<Polynomial> c;
    for (std::size_t j = 0; j < g.size(); ++j) c.push_back(testing::random_poly(rng, ring, 2, 2, 2, 2));
    auto f = combination(c, g);
    auto res = ideal_member(f, g);
    REQUIRE(res.member);
    CHECK(combination(res.cofactors, g) == f);
  }
}
