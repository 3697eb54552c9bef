#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symideal/actions.hpp"
#include "symideal/polynomial.hpp"

namespace symideal {

/// Algebra the ideal lives in: all of R_n, the symmetric subring, or L_2.
enum class Ambient { FullRing, SymmetricSubring, L2Subalgebra };

std::string ambient_name(Ambient ambient);       // "full" | "sym" | "l2"
Ambient parse_ambient(std::string_view name);

/// Largest column index accepted by the truncated oracle.
inline constexpr std::uint32_t kMaxTruncationWidth = 12;
/// Largest degree bound accepted by the truncated oracle.
inline constexpr std::uint64_t kMaxDegreeBound = 16;

/// Finitely many generators of a Sym(N)-invariant ideal.
struct EquivariantIdealSpec {
  CoefficientRing ring = CoefficientRing::rationals();
  std::uint32_t rows = 1;
  Ambient ambient = Ambient::SymmetricSubring;
  std::vector<Polynomial> generators;
};

/// Builds a spec and checks its invariants: generators share the ring and
/// row bound, are symmetric for the symmetric subring, and lie in L_2 (with
/// rows = 2) for the L_2 ambient. Throws PreconditionError otherwise.
EquivariantIdealSpec make_ideal_spec(const CoefficientRing& ring, std::uint32_t rows, Ambient ambient,
                                     std::vector<Polynomial> generators);

/// Membership of f in the ambient algebra itself.
bool in_ambient(const Polynomial& f, Ambient ambient);

/// Spanning set of the multidegree-d component of the ambient algebra.
std::vector<Polynomial> ambient_component(Ambient ambient, const CoefficientRing& ring, std::uint32_t rows,
                                          const MultiDegree& d);

struct CertificateTerm {
  ColumnMap sigma;
  std::size_t generator = 0;
  Polynomial cofactor;
};

/// target == sum_s apply_column(sigma_s, generators[generator_s]) * cofactor_s.
struct MembershipCertificate {
  Polynomial target;
  std::vector<CertificateTerm> terms;
};

/// The right-hand side sum of a certificate.
Polynomial evaluate_certificate(const MembershipCertificate& cert, const EquivariantIdealSpec& spec);

enum class Verdict { Member, NotMember, Undecided };
std::string verdict_name(Verdict v);  // "member" | "not_member" | "undecided"

enum class OracleKind { Groebner, Multigraded };
std::string oracle_name(OracleKind o);

struct MembershipVerdict {
  Verdict status = Verdict::Undecided;
  std::optional<MembershipCertificate> certificate;
  std::uint32_t width = 0;
  std::uint64_t degree_bound = 0;
  OracleKind oracle = OracleKind::Multigraded;
  /// Distinct generator images sigma(g) that entered the computation.
  std::size_t orbit_images = 0;
  /// Columns of the linear system (products sigma(g) * basis element); 0 when none was built.
  std::size_t candidates = 0;
};

struct OrbitImage {
  ColumnMap sigma;
  std::size_t generator = 0;
  Polynomial image;
};

/// All apply_column(sigma, g) for injections sigma of each generator's
/// column support into {1..width}, deduplicated as polynomials (first
/// occurrence kept), zero images dropped.
std::vector<OrbitImage> expand_truncated(const EquivariantIdealSpec& spec, std::uint32_t width);

/// Membership at a finite truncation: Groebner membership against the
/// expanded generators over rows x width variables, followed by
/// - nothing (full ring),
/// - symmetrization of the cofactors (symmetric subring, n! invertible),
/// - a degree-capped search for ambient cofactors otherwise.
/// Never answers NotMember: a failure is reported as Undecided.
MembershipVerdict member_truncated(const Polynomial& f, const EquivariantIdealSpec& spec, std::uint32_t width,
                                   std::uint64_t degree_bound);

/// Exact membership for a multihomogeneous target in the symmetric subring
/// or L_2, by linear algebra in the target's multidegree component.
MembershipVerdict member_multigraded(const Polynomial& f, const EquivariantIdealSpec& spec);

/// Replaces every cofactor by its symmetrization and merges terms sharing
/// (sigma, generator). The input must be a valid full-ring certificate of a
/// symmetric target with symmetric generators.
MembershipCertificate retract_certificate(const MembershipCertificate& cert, const EquivariantIdealSpec& spec);

struct CertificateCheck {
  bool ok = false;
  std::string diagnostic;

  explicit operator bool() const { return ok; }
};

/// Re-evaluates the identity and checks the ambient constraints on cofactors.
CertificateCheck verify_certificate(const MembershipCertificate& cert, const EquivariantIdealSpec& spec);

enum class ScanFamily { H, Cycle };

struct ScanEntry {
  std::uint32_t k = 0;
  Verdict verdict = Verdict::Undecided;
  std::size_t certificate_terms = 0;
  bool certificate_verified = false;
  double runtime_ms = 0;
};

struct ScanReport {
  ScanFamily family = ScanFamily::H;
  CoefficientRing ring = CoefficientRing::rationals();
  std::uint32_t rows = 1;
  std::vector<ScanEntry> entries;
};

/// For each k in [k_from, k_to]: is family(k) in the ideal generated by the
/// smaller family members? (h: l < k in the symmetric subring; cycle:
/// 3 <= l < k in L_2 with two rows.) Uses the multigraded oracle.
ScanReport stabilization_scan(ScanFamily family, const CoefficientRing& ring, std::uint32_t rows, std::uint32_t k_from,
                              std::uint32_t k_to);

}  // namespace symideal
