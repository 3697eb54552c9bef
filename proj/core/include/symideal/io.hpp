#pragma once

#include <string>
#include <string_view>

#include "symideal/equivariant.hpp"

namespace symideal {

/// "ZZ", "QQ" or "GF(p)" as produced by CoefficientRing::name().
CoefficientRing parse_ring(std::string_view name);

/// {"target": str, "terms": [{"sigma": "{1->3}", "gen": 0, "cofactor": str}], ...}
/// Generator indices are 0-based positions in spec.generators. The document
/// also records "ring", "rows", "ambient" and "generators" so that it can be
/// re-verified on its own.
std::string certificate_to_json(const MembershipCertificate& cert, const EquivariantIdealSpec& spec);

struct LoadedCertificate {
  EquivariantIdealSpec spec;
  MembershipCertificate certificate;
};

/// Reads a self-contained certificate document (with ring/rows/ambient/generators).
LoadedCertificate certificate_from_json(std::string_view text);
/// Reads a certificate against a known ideal; extra fields are ignored.
MembershipCertificate certificate_from_json(std::string_view text, const EquivariantIdealSpec& spec);

}  // namespace symideal
