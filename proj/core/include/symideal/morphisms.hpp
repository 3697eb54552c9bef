#pragma once

#include <cstdint>

#include "symideal/polynomial.hpp"

namespace symideal {

/// x[i,j] -> x[i,j] for i <= rows, 0 otherwise; the result lives on `rows` rows.
Polynomial row_truncate(const Polynomial& f, std::uint32_t rows);

/// Coefficient-wise reduction ZZ -> GF(p).
Polynomial reduce_mod_p(const Polynomial& f, std::uint32_t p);

/// GF(p) -> ZZ, each coefficient lifted to its representative in {0, ..., p-1}.
Polynomial lift_canonical(const Polynomial& f);

/// x[i,j] -> t[j] over ZZ.
Polynomial collapse_columns(const Polynomial& f);

/// The endomorphism x[i,l] -> x[i,k] * x[i,l] (all rows), other variables fixed.
Polynomial psi_kl(const Polynomial& f, std::uint32_t k, std::uint32_t l);

}  // namespace symideal
