#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "random.hpp"

using namespace symideal;

namespace {
const auto QQ = CoefficientRing::rationals();
const auto ZZ = CoefficientRing::integers();
const auto F2 = CoefficientRing::prime_field(2);
const auto F3 = CoefficientRing::prime_field(3);

Polynomial P(std::string_view text, const CoefficientRing& ring = ZZ, std::uint32_t rows = 2) {
  return parse_polynomial(text, ring, rows);
}
}  // namespace

TEST_CASE("row truncation") {
  CHECK(row_truncate(P("x[3,1]", QQ, 3), 2).is_zero());
  CHECK(row_truncate(testing::text_h(QQ, 3, 3), 2) == P("x[1,1]*x[1,2]*x[1,3]+x[2,1]*x[2,2]*x[2,3]", QQ, 2));
  auto f = P("x[1,1]*x[3,2]-4*x[2,2]+1", QQ, 3);
  CHECK(row_truncate(f, 3) == f);
  CHECK(row_truncate(f, 2).rows() == 2);
  CHECK(row_truncate(f, 2) == P("-4*x[2,2]+1", QQ, 2));
  CHECK_THROWS_AS(row_truncate(f, 4), PreconditionError);
  CHECK_THROWS_AS(row_truncate(f, 0), PreconditionError);

  std::mt19937_64 rng(6);
  for (int i = 0; i < 200; ++i) {
    auto a = testing::random_poly(rng, QQ, 3, 3);
    auto b = testing::random_poly(rng, QQ, 3, 3);
    CHECK(row_truncate(a * b, 2) == row_truncate(a, 2) * row_truncate(b, 2));
    CHECK(row_truncate(a + b, 1) == row_truncate(a, 1) + row_truncate(b, 1));
  }
}

TEST_CASE("reduction mod p and canonical lift") {
  CHECK(reduce_mod_p(P("3*x[1,1]+2*x[2,1]"), 2) == P("x[1,1]", F2));
  CHECK(reduce_mod_p(P("-1"), 3) == P("2", F3));
  CHECK(lift_canonical(P("2*x[1,1]", F3)) == P("2*x[1,1]"));
  CHECK(lift_canonical(P("0", F3)).is_zero());
  CHECK(lift_canonical(P("0", F3)).ring() == ZZ);
  for (std::uint32_t k = 1; k <= 4; ++k) {
    CHECK(reduce_mod_p(h_family(ZZ, 2, k), 2) == h_family(F2, 2, k));
  }
  CHECK_THROWS_AS(reduce_mod_p(P("x[1,1]", QQ), 2), PreconditionError);
  CHECK_THROWS_AS(reduce_mod_p(P("x[1,1]"), 4), PreconditionError);
  CHECK_THROWS_AS(lift_canonical(P("x[1,1]", QQ)), PreconditionError);

  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    auto g = testing::random_poly(rng, F3, 3, 3);
    CHECK(reduce_mod_p(lift_canonical(g), 3) == g);
    const auto lifted = lift_canonical(g);
    for (const auto& t : lifted.terms()) {
      CHECK(t.coeff >= 0);
      CHECK(t.coeff < 3);
    }
    auto s = testing::random_symmetric(rng, F3, 2, 3);
    CHECK(is_symmetric(lift_canonical(s)));
    auto a = testing::random_poly(rng, ZZ, 2, 2);
    auto b = testing::random_poly(rng, ZZ, 2, 2);
    CHECK(reduce_mod_p(a * b, 3) == reduce_mod_p(a, 3) * reduce_mod_p(b, 3));
  }
}

TEST_CASE("column collapse") {
  CHECK(collapse_columns(h_family(ZZ, 2, 2)) == P("2*t[1]*t[2]"));
  auto image = apply_column(ColumnMap::parse("{1->4,2->7}"), h_family(ZZ, 2, 2));
  CHECK(collapse_columns(image) == P("2*t[4]*t[7]"));
  CHECK(collapse_columns(P("x[1,1]*x[2,1]")) == P("t[1]^2"));
  CHECK(collapse_columns(P("x[1,1]*x[2,2]-x[2,1]*x[1,2]")).is_zero());
  CHECK_THROWS_AS(collapse_columns(P("x[1,1]", QQ)), PreconditionError);
  CHECK_THROWS_AS(collapse_columns(P("t[1]")), PreconditionError);

  std::mt19937_64 rng(14);
  for (int i = 0; i < 200; ++i) {
    auto a = testing::random_poly(rng, ZZ, 3, 3);
    auto b = testing::random_poly(rng, ZZ, 3, 3);
    CHECK(collapse_columns(a) == testing::brute_collapse(a));
    CHECK(collapse_columns(a * b) == collapse_columns(a) * collapse_columns(b));
  }
}

TEST_CASE("psi_kl") {
  CHECK(psi_kl(P("x[1,2]", QQ), 1, 2) == P("x[1,1]*x[1,2]", QQ));
  CHECK(psi_kl(P("x[1,1]", QQ), 2, 3) == P("x[1,1]", QQ));
  CHECK(psi_kl(P("x[2,2]^2+x[1,1]", QQ), 1, 2) == P("x[2,1]^2*x[2,2]^2+x[1,1]", QQ));
  CHECK_THROWS_AS(psi_kl(P("x[1,1]", QQ), 2, 2), PreconditionError);

  std::mt19937_64 rng(15);
  for (int i = 0; i < 200; ++i) {
    auto f = testing::random_poly(rng, QQ, 2, 3);
    auto g = testing::random_poly(rng, QQ, 2, 3);
    CHECK(psi_kl(f * g, 1, 3) == psi_kl(f, 1, 3) * psi_kl(g, 1, 3));
    CHECK(psi_kl(f + g, 2, 1) == psi_kl(f, 2, 1) + psi_kl(g, 2, 1));
    auto s = testing::random_symmetric(rng, QQ, 2, 3);
    CHECK(is_symmetric(psi_kl(s, 2, 3)));
  }
}
