#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symideal/equivariant.hpp"
#include "symideal/polynomial.hpp"

namespace symideal {

enum class ObstructionConclusion { ContradictionEstablished, ResidualNonzero };
std::string conclusion_name(ObstructionConclusion c);

/// Outcome of pushing a candidate identity h_k = sum_s sigma_s(h_{l_s}) f_s
/// over GF(p) (p rows) through the lift to ZZ and the column collapse
/// x[i,j] -> t[j].
struct ObstructionReport {
  std::uint32_t k = 0;
  std::uint32_t p = 0;
  /// v_p of the collapsed lift of h_k; always 1.
  Valuation lhs_valuation = Valuation::infinity();
  /// v_p of the collapsed lift of sigma_s(h_{l_s}) * g_s, one per candidate term.
  std::vector<Valuation> term_valuations;
  /// v_p of the collapsed ZZ-level remainder p*g = lift(h_k) - sum of lifted terms.
  Valuation remainder_valuation = Valuation::infinity();
  /// v_p of the collapsed lift of the synthetic balancing term, when one was supplied.
  std::optional<Valuation> synthetic_valuation;
  /// h_k - sum of terms (including any synthetic term), over GF(p).
  Polynomial residual_mod_p;
  ObstructionConclusion conclusion = ObstructionConclusion::ResidualNonzero;
};

/// Classifies a candidate certificate for h_k against generators h_l
/// (l != k) over GF(p) with p rows. Candidate cofactors must be symmetric and
/// every product sigma(h_l) * cofactor must have multidegree (1,...,1) with k
/// entries. An optional synthetic term (symmetric, same multidegree) is
/// added to the right-hand side; it exercises the valuation argument on an
/// identity that holds exactly mod p.
ObstructionReport obstruction_check(std::uint32_t k, std::uint32_t p, const EquivariantIdealSpec& spec,
                                    const MembershipCertificate& candidate,
                                    const std::optional<Polynomial>& synthetic_term = std::nullopt);

/// The residual h_k - sum_s sigma_s(h_{l_s}) f_s over GF(p) of a candidate.
Polynomial candidate_residual(const EquivariantIdealSpec& spec, const MembershipCertificate& candidate);

struct HkCandidate {
  EquivariantIdealSpec spec;
  MembershipCertificate certificate;
};

/// Generators {h_1, ..., h_{k-1}} over GF(p) with p rows and the candidate
/// h_k ?= h_{k-1} * (x[1,k] + ... + x[p,k]) (empty for k = 1).
HkCandidate natural_hk_candidate(std::uint32_t k, std::uint32_t p);

/// Truncates to p rows, fixes GF(p), and decides with the multigraded oracle
/// whether h_k lies in the ideal generated by {h_l : l <= kmax, l != k}.
/// Requires p prime and p <= n.
MembershipVerdict nonmembership_hk(std::uint32_t n, std::uint32_t p, std::uint32_t k, std::uint32_t kmax);

struct OrbitAuditReport {
  std::uint32_t p = 0;
  std::uint32_t width = 0;
  std::uint64_t monomials = 0;
  std::uint64_t orbits = 0;
  /// orbit size -> number of monomials with that orbit size
  std::map<std::uint64_t, std::uint64_t> orbit_sizes;
  std::uint64_t divisibility_failures = 0;
  std::uint64_t valuation_failures = 0;

  bool passed() const { return divisibility_failures == 0 && valuation_failures == 0; }
};

/// Exhaustive check over every non-constant monomial in p rows whose
/// columns lie in {1..width} with column degree at most 1: p divides the S_p
/// orbit size and the collapsed orbit sum is divisible by p.
OrbitAuditReport orbit_divisibility_audit(std::uint32_t p, std::uint32_t width);

struct VaughanLeeReport {
  std::uint32_t k = 0;
  std::uint32_t kmax = 0;
  MembershipVerdict verdict;
  /// Number of monomials of multidegree (2,...,2) in two rows.
  std::uint64_t component_monomials = 0;
};

/// Is cycle_product(k) in the L_2 ideal generated by the other cycle
/// products with 3 <= l <= kmax, over GF(2)? Supports 3 <= k <= 5.
VaughanLeeReport vaughanlee_check(std::uint32_t k, std::uint32_t kmax);

}  // namespace symideal
