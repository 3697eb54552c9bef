#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "random.hpp"

using namespace symideal;

namespace {
const auto ZZ = CoefficientRing::integers();
const auto F2 = CoefficientRing::prime_field(2);

Polynomial P(std::string_view text, const CoefficientRing& ring = F2, std::uint32_t rows = 2) {
  return parse_polynomial(text, ring, rows);
}

Polynomial t_product(std::uint32_t p, const std::vector<std::uint32_t>& cols) {
  Monomial m;
  for (auto c : cols) m = m * Monomial::of(Variable::t(c));
  return Polynomial::monomial(ZZ, p, m, p);
}
}  // namespace

TEST_CASE("natural candidate residuals") {
  auto cand = natural_hk_candidate(2, 2);
  REQUIRE(cand.certificate.terms.size() == 1);
  CHECK(cand.certificate.terms[0].cofactor == P("x[1,2]+x[2,2]"));
  // the product h_1 * (x[1,2]+x[2,2]) minus h_2 leaves the two mixed monomials
  CHECK(candidate_residual(cand.spec, cand.certificate) == P("x[1,1]*x[2,2]+x[2,1]*x[1,2]"));

  auto rep = obstruction_check(2, 2, cand.spec, cand.certificate);
  CHECK(rep.conclusion == ObstructionConclusion::ResidualNonzero);
  CHECK(rep.residual_mod_p == P("x[1,1]*x[2,2]+x[2,1]*x[1,2]"));
  CHECK(rep.lhs_valuation == Valuation(1));
  REQUIRE(rep.term_valuations.size() == 1);
  CHECK(rep.term_valuations[0] == Valuation(2));
  CHECK_FALSE(rep.synthetic_valuation);

  MembershipCertificate empty{h_family(F2, 2, 2), {}};
  auto e = obstruction_check(2, 2, cand.spec, empty);
  CHECK(e.conclusion == ObstructionConclusion::ResidualNonzero);
  CHECK(e.residual_mod_p == h_family(F2, 2, 2));
  CHECK(conclusion_name(e.conclusion) == "residual_nonzero");
}

TEST_CASE("synthetic exact identities reach the contradiction") {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {3, 4}}) {
    CAPTURE(p);
    CAPTURE(k);
    auto cand = natural_hk_candidate(k, p);
    auto residual = candidate_residual(cand.spec, cand.certificate);
    auto rep = obstruction_check(k, p, cand.spec, cand.certificate, residual);
    CHECK(rep.conclusion == ObstructionConclusion::ContradictionEstablished);
    CHECK(conclusion_name(rep.conclusion) == "contradiction_established");
    CHECK(rep.residual_mod_p.is_zero());
    CHECK(rep.lhs_valuation == Valuation(1));
    for (const auto& v : rep.term_valuations) CHECK(v.at_least(2));
    CHECK(rep.remainder_valuation.at_least(2));
    REQUIRE(rep.synthetic_valuation);
    CHECK(*rep.synthetic_valuation == Valuation(1));

    // independent recomputation of the term valuations
    const auto& term = cand.certificate.terms[0];
    auto lifted = lift_canonical(apply_column(term.sigma, cand.spec.generators[term.generator])) *
                  lift_canonical(term.cofactor);
    CHECK(testing::brute_valuation(testing::brute_collapse(lifted), p) == static_cast<long>(rep.term_valuations[0].value()));
  }
}

TEST_CASE("malformed candidates are rejected") {
  auto cand = natural_hk_candidate(3, 2);
  auto asym = cand.certificate;
  asym.terms[0].cofactor = P("x[1,3]");
  CHECK_THROWS_AS(obstruction_check(3, 2, cand.spec, asym), PreconditionError);

  auto wrong_degree = cand.certificate;
  wrong_degree.terms[0].cofactor = P("x[1,4]+x[2,4]");
  CHECK_THROWS_AS(obstruction_check(3, 2, cand.spec, wrong_degree), PreconditionError);

  auto with_hk = make_ideal_spec(F2, 2, Ambient::SymmetricSubring, {h_family(F2, 2, 3)});
  MembershipCertificate self{h_family(F2, 2, 3), {{ColumnMap(), 0, P("1")}}};
  CHECK_THROWS_AS(obstruction_check(3, 2, with_hk, self), PreconditionError);

  MembershipCertificate wrong_target{h_family(F2, 2, 2), {}};
  CHECK_THROWS_AS(obstruction_check(3, 2, cand.spec, wrong_target), PreconditionError);
  CHECK_THROWS_AS(obstruction_check(3, 3, cand.spec, cand.certificate), PreconditionError);

  auto not_h = make_ideal_spec(F2, 2, Ambient::SymmetricSubring, {P("x[1,1]*x[2,1]")});
  MembershipCertificate c{h_family(F2, 2, 2), {{ColumnMap(), 0, P("1")}}};
  CHECK_THROWS_AS(obstruction_check(2, 2, not_h, c), PreconditionError);
}

TEST_CASE("nonmembership of h_k for p <= n") {
  for (auto [n, p, k] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>{
           {2, 2, 2}, {2, 2, 3}, {2, 2, 4}, {3, 2, 3}, {3, 3, 2}, {3, 3, 3}, {4, 2, 2}, {4, 3, 3}}) {
    CAPTURE(n);
    CAPTURE(p);
    CAPTURE(k);
    auto v = nonmembership_hk(n, p, k, k + 2);
    CHECK(v.status == Verdict::NotMember);
    CHECK(v.oracle == OracleKind::Multigraded);
  }
  CHECK_THROWS_AS(nonmembership_hk(2, 3, 2, 2), PreconditionError);
  CHECK_THROWS_AS(nonmembership_hk(2, 4, 2, 2), PreconditionError);
  CHECK_THROWS_AS(nonmembership_hk(2, 2, 3, 2), PreconditionError);
}

TEST_CASE("orbit divisibility audit") {
  auto a = orbit_divisibility_audit(2, 2);
  CHECK(a.passed());
  CHECK(a.monomials == 8);
  CHECK(a.orbit_sizes == std::map<std::uint64_t, std::uint64_t>{{2, 8}});

  auto b = orbit_divisibility_audit(3, 1);
  CHECK(b.monomials == 3);
  CHECK(b.orbits == 1);
  CHECK(b.orbit_sizes == std::map<std::uint64_t, std::uint64_t>{{3, 3}});

  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (std::uint32_t w = 1; w <= 4; ++w) {
      if (p == 5 && w > 3) continue;
      auto r = orbit_divisibility_audit(p, w);
      CHECK(r.passed());
      std::uint64_t expected = 1;
      for (std::uint32_t j = 0; j < w; ++j) expected *= p + 1;
      CHECK(r.monomials == expected - 1);
      std::uint64_t total = 0;
      for (const auto& [size, count] : r.orbit_sizes) {
        CHECK(size % p == 0);
        total += count;
      }
      CHECK(total == r.monomials);
    }
  }
  CHECK_THROWS_AS(orbit_divisibility_audit(4, 2), PreconditionError);
  CHECK_THROWS_AS(orbit_divisibility_audit(2, 6), PreconditionError);
}

TEST_CASE("Vaughan-Lee cycle products") {
  for (std::uint32_t k = 3; k <= 5; ++k) {
    auto r = vaughanlee_check(k, k);
    CHECK(r.verdict.status == Verdict::NotMember);
  }
  auto r5 = vaughanlee_check(5, 5);
  CHECK(r5.component_monomials == 243);
  // the ten distinct images of c_3 over F_2, each paired with d_ab^2 on the two remaining columns
  CHECK(r5.verdict.candidates == 10);
  CHECK(vaughanlee_check(3, 3).verdict.candidates == 0);
  CHECK(vaughanlee_check(4, 4).verdict.candidates == 0);
  CHECK(vaughanlee_check(4, 6).verdict.status == Verdict::NotMember);
  CHECK_THROWS_AS(vaughanlee_check(6, 6), PreconditionError);
  CHECK_THROWS_AS(vaughanlee_check(4, 3), PreconditionError);
}

TEST_CASE("collapse of lifted generators") {
  for (std::uint32_t p : {2u, 3u}) {
    auto field = CoefficientRing::prime_field(p);
    for (std::uint32_t k = 1; k <= 6; ++k) {
      std::vector<std::uint32_t> cols;
      for (std::uint32_t j = 1; j <= k; ++j) cols.push_back(j);
      CHECK(collapse_columns(lift_canonical(h_family(field, p, k))) == t_product(p, cols));
    }
    std::mt19937_64 rng(p);
    for (int i = 0; i < 50; ++i) {
      std::uint32_t l = testing::uniform(rng, 1, 4);
      auto sigma = testing::random_column_map(rng, l, 9);
      std::vector<std::uint32_t> cols;
      for (std::uint32_t j = 1; j <= l; ++j) cols.push_back(sigma(j));
      CHECK(collapse_columns(lift_canonical(apply_column(sigma, h_family(field, p, l)))) == t_product(p, cols));
    }
  }
}
