#pragma once

#include <optional>
#include <span>
#include <vector>

#include "symideal/polynomial.hpp"

namespace symideal {

/// Finds coefficients c with sum_i c_i * columns[i] == target, treating each
/// polynomial as a coefficient vector indexed by monomials. Requires a field
/// ring shared by all inputs. Returns std::nullopt when target is outside the
/// span; free variables of the solution are set to zero.
std::optional<std::vector<Scalar>> solve_in_span(std::span<const Polynomial> columns,
                                                 const Polynomial& target);

/// Dimension of the span of the given polynomials over their field.
std::size_t span_rank(std::span<const Polynomial> polys);

}  // namespace symideal
