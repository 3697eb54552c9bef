#include "symideal/certificates.hpp"

#include <set>
#include <stdexcept>

#include "symideal/actions.hpp"
#include "symideal/errors.hpp"
#include "symideal/families.hpp"
#include "symideal/morphisms.hpp"

namespace symideal {

std::string conclusion_name(ObstructionConclusion c) {
  return c == ObstructionConclusion::ContradictionEstablished ? "contradiction_established" : "residual_nonzero";
}

namespace {

MultiDegree ones(std::uint32_t k) { return MultiDegree(std::vector<std::uint32_t>(k, 1)); }

// Index l with generator == h_l, or 0 when it is not an h-family member.
std::uint32_t h_index(const Polynomial& g) {
  if (g.is_zero() || g.is_constant()) return 0;
  auto l = static_cast<std::uint32_t>(g.total_degree());
  return g == h_family(g.ring(), g.rows(), l) ? l : 0;
}

void validate_candidate(std::uint32_t k, std::uint32_t p, const EquivariantIdealSpec& spec,
                        const MembershipCertificate& candidate) {
  auto field = CoefficientRing::prime_field(p);
  if (!(spec.ring == field) || spec.rows != p) {
    throw PreconditionError("candidate must live over GF(p) with p rows");
  }
  if (candidate.target != h_family(field, p, k)) throw PreconditionError("candidate target is not h_k");
  const MultiDegree target_degree = ones(k);
  for (std::size_t s = 0; s < candidate.terms.size(); ++s) {
    const auto& term = candidate.terms[s];
    const std::string where = "candidate term " + std::to_string(s) + ": ";
    if (term.generator >= spec.generators.size()) throw PreconditionError(where + "generator index out of range");
    std::uint32_t l = h_index(spec.generators[term.generator]);
    if (l == 0) throw PreconditionError(where + "generator is not of the form h_l");
    if (l == k) throw PreconditionError(where + "generator h_k itself is excluded");
    if (!is_symmetric(term.cofactor)) throw PreconditionError(where + "cofactor is not symmetric");
    auto product = apply_column(term.sigma, spec.generators[term.generator]) * term.cofactor;
    if (!product.is_zero() && product.common_multidegree() != target_degree) {
      throw PreconditionError(where + "product is not of multidegree (1,...,1)");
    }
  }
}

}  // namespace

Polynomial candidate_residual(const EquivariantIdealSpec& spec, const MembershipCertificate& candidate) {
  return candidate.target - evaluate_certificate(candidate, spec);
}

ObstructionReport obstruction_check(std::uint32_t k, std::uint32_t p, const EquivariantIdealSpec& spec,
                                    const MembershipCertificate& candidate,
                                    const std::optional<Polynomial>& synthetic_term) {
  validate_candidate(k, p, spec, candidate);
  if (synthetic_term) {
    if (!(synthetic_term->ring() == spec.ring) || synthetic_term->rows() != p || !is_symmetric(*synthetic_term)) {
      throw PreconditionError("synthetic term must be a symmetric polynomial over GF(p) with p rows");
    }
    if (!synthetic_term->is_zero() && synthetic_term->common_multidegree() != ones(k)) {
      throw PreconditionError("synthetic term is not of multidegree (1,...,1)");
    }
  }

  ObstructionReport report{k, p, Valuation::infinity(), {}, Valuation::infinity(), std::nullopt,
                           Polynomial(spec.ring, p), ObstructionConclusion::ResidualNonzero};
  const auto zz = CoefficientRing::integers();
  Polynomial lhs = h_family(zz, p, k);
  report.lhs_valuation = valuation_p(collapse_columns(lhs), p);

  Polynomial remainder = lhs;
  for (const auto& term : candidate.terms) {
    // generators h_l have unit coefficients, so lifting commutes with sigma
    Polynomial lifted = lift_canonical(apply_column(term.sigma, spec.generators[term.generator])) *
                        lift_canonical(term.cofactor);
    report.term_valuations.push_back(valuation_p(collapse_columns(lifted), p));
    remainder = remainder - lifted;
  }
  if (synthetic_term) {
    Polynomial lifted = lift_canonical(*synthetic_term);
    report.synthetic_valuation = valuation_p(collapse_columns(lifted), p);
    remainder = remainder - lifted;
  }
  report.residual_mod_p = reduce_mod_p(remainder, p);
  report.remainder_valuation = valuation_p(collapse_columns(remainder), p);
  if (!report.residual_mod_p.is_zero()) return report;

  // remainder = p*g with g symmetric of multidegree (1,...,1)
  bool all_deep = report.remainder_valuation.at_least(2);
  for (const auto& v : report.term_valuations) all_deep = all_deep && v.at_least(2);
  if (!all_deep) throw std::logic_error("valuation bound violated on an exact mod-p identity");
  report.conclusion = ObstructionConclusion::ContradictionEstablished;
  return report;
}

HkCandidate natural_hk_candidate(std::uint32_t k, std::uint32_t p) {
  if (k < 1) throw PreconditionError("k must be positive");
  auto field = CoefficientRing::prime_field(p);
  std::vector<Polynomial> gens;
  for (std::uint32_t l = 1; l < k; ++l) gens.push_back(h_family(field, p, l));
  HkCandidate out{make_ideal_spec(field, p, Ambient::SymmetricSubring, std::move(gens)),
                  {h_family(field, p, k), {}}};
  if (k >= 2) {
    std::map<std::uint32_t, std::uint32_t> shift{{1, k}};
    Polynomial cofactor = apply_column(ColumnMap(shift), h_family(field, p, 1));
    out.certificate.terms.push_back({ColumnMap(), k - 2, cofactor});
  }
  return out;
}

MembershipVerdict nonmembership_hk(std::uint32_t n, std::uint32_t p, std::uint32_t k, std::uint32_t kmax) {
  if (!is_prime(p)) throw PreconditionError("p must be prime");
  if (p > n) throw PreconditionError("p > n: h_k non-membership is not claimed in this regime");
  if (n > kMaxRows) throw PreconditionError("row bound above 12");
  if (k < 1 || kmax < k) throw PreconditionError("need 1 <= k <= kmax");
  auto field = CoefficientRing::prime_field(p);
  std::vector<Polynomial> gens;
  for (std::uint32_t l = 1; l <= kmax; ++l) {
    if (l != k) gens.push_back(row_truncate(h_family(field, n, l), p));
  }
  auto spec = make_ideal_spec(field, p, Ambient::SymmetricSubring, std::move(gens));
  return member_multigraded(row_truncate(h_family(field, n, k), p), spec);
}

OrbitAuditReport orbit_divisibility_audit(std::uint32_t p, std::uint32_t width) {
  if (!is_prime(p) || p > kMaxRows) throw PreconditionError("audit needs a prime p <= 12");
  if (width < 1 || width > 5) throw PreconditionError("audit width must be in 1..5");
  OrbitAuditReport report;
  report.p = p;
  report.width = width;
  const auto zz = CoefficientRing::integers();
  std::set<Monomial> seen;
  // each column is either absent or occupied in exactly one of the p rows
  std::vector<std::uint32_t> choice(width, 0);
  while (true) {
    std::size_t pos = 0;
    while (pos < width && choice[pos] == p) choice[pos++] = 0;
    if (pos == width) break;
    ++choice[pos];
    std::vector<Monomial::Factor> factors;
    for (std::uint32_t j = 0; j < width; ++j) {
      if (choice[j] != 0) factors.push_back({Variable::x(choice[j], j + 1), 1});
    }
    Monomial m(std::move(factors));
    auto orbit = row_orbit(m, p);
    ++report.monomials;
    ++report.orbit_sizes[orbit.size()];
    if (orbit.size() % p != 0) ++report.divisibility_failures;
    if (!seen.contains(m)) {
      seen.insert(orbit.begin(), orbit.end());
      ++report.orbits;
      if (!valuation_p(collapse_columns(orbit_sum(zz, m, p)), p).at_least(1)) ++report.valuation_failures;
    }
  }
  return report;
}

VaughanLeeReport vaughanlee_check(std::uint32_t k, std::uint32_t kmax) {
  if (k < 3 || k > 5) throw PreconditionError("cycle length k must be in 3..5");
  if (kmax < k || kmax > 8) throw PreconditionError("need k <= kmax <= 8");
  auto gf2 = CoefficientRing::prime_field(2);
  std::vector<Polynomial> gens;
  for (std::uint32_t l = 3; l <= kmax; ++l) {
    if (l != k) gens.push_back(cycle_product(gf2, l));
  }
  auto spec = make_ideal_spec(gf2, 2, Ambient::L2Subalgebra, std::move(gens));
  VaughanLeeReport report;
  report.k = k;
  report.kmax = kmax;
  report.verdict = member_multigraded(cycle_product(gf2, k), spec);
  report.component_monomials = component_size(2, MultiDegree(std::vector<std::uint32_t>(k, 2)));
  return report;
}

}  // namespace symideal
