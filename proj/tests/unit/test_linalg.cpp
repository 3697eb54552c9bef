#include <doctest.h>

#include <random>

#include "random.hpp"

using namespace symideal;

namespace {
const auto QQ = CoefficientRing::rationals();
const auto F2 = CoefficientRing::prime_field(2);
const auto F7 = CoefficientRing::prime_field(7);

Polynomial P(std::string_view text, const CoefficientRing& ring = QQ) { return parse_polynomial(text, ring, 2); }

Polynomial combine(std::span<const Polynomial> cols, const std::vector<Scalar>& coeffs, const Polynomial& zero) {
  Polynomial out = zero;
  for (std::size_t i = 0; i < cols.size(); ++i) out = out + cols[i].scaled(coeffs[i]);
  return out;
}
}  // namespace

TEST_CASE("solve_in_span") {
  std::vector<Polynomial> cols{P("x[1,1]+x[2,1]"), P("x[1,1]-x[2,1]")};
  auto sol = solve_in_span(cols, P("x[1,1]"));
  REQUIRE(sol);
  CHECK((*sol)[0] == Scalar(1, 2));
  CHECK((*sol)[1] == Scalar(1, 2));
  CHECK_FALSE(solve_in_span(cols, P("x[1,2]")));

  auto zero = solve_in_span(cols, P("0"));
  REQUIRE(zero);
  CHECK((*zero)[0] == 0);

  std::vector<Polynomial> none;
  CHECK(solve_in_span(none, P("0")));
  CHECK_FALSE(solve_in_span(none, P("1")));

  std::vector<Polynomial> f2cols{P("x[1,1]+x[2,1]", F2), P("x[1,1]+x[2,1]", F2)};
  auto dependent = solve_in_span(f2cols, P("x[1,1]+x[2,1]", F2));
  REQUIRE(dependent);
  CHECK(combine(f2cols, *dependent, P("0", F2)) == P("x[1,1]+x[2,1]", F2));
  CHECK(span_rank(f2cols) == 1);

  std::vector<Polynomial> zz{parse_polynomial("x[1,1]", CoefficientRing::integers(), 2)};
  CHECK_THROWS_AS(solve_in_span(zz, zz[0]), PreconditionError);
  std::vector<Polynomial> mixed{P("x[1,1]"), P("x[1,1]", F7)};
  CHECK_THROWS_AS(span_rank(mixed), PreconditionError);
}

TEST_CASE("solve_in_span on random systems") {
  std::mt19937_64 rng(17);
  for (const auto& ring : {QQ, F2, F7}) {
    for (int trial = 0; trial < 120; ++trial) {
      std::vector<Polynomial> cols;
      auto count = testing::uniform(rng, 1, 6);
      for (std::uint32_t i = 0; i < count; ++i) cols.push_back(testing::random_poly(rng, ring, 2, 2, 4, 2));
      std::vector<Scalar> coeffs;
      for (std::uint32_t i = 0; i < count; ++i) coeffs.push_back(testing::uniform(rng, 0, 1) ? testing::random_coeff(rng, ring) : Scalar(0));
      auto target = combine(cols, coeffs, Polynomial(ring, 2));
      auto sol = solve_in_span(cols, target);
      REQUIRE(sol);
      CHECK(combine(cols, *sol, Polynomial(ring, 2)) == target);
      CHECK(span_rank(cols) <= cols.size());

      auto outside = target + Polynomial::monomial(ring, 2, Monomial::of(Variable::x(1, 5)));
      CHECK_FALSE(solve_in_span(cols, outside));
    }
  }
}
