#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "symideal/polynomial.hpp"

namespace symideal {

/// h_k = x[1,1]...x[1,k] + ... + x[n,1]...x[n,k].
Polynomial h_family(const CoefficientRing& ring, std::uint32_t n, std::uint32_t k);

/// The n x n minor det(x[r, cols[c]]); zero when a column repeats.
Polynomial determinant_gen(const CoefficientRing& ring, std::uint32_t n, std::span<const std::uint32_t> cols);

/// d_{12} d_{23} ... d_{(k-1)k} d_{1k} with n = 2 and k >= 3.
Polynomial cycle_product(const CoefficientRing& ring, std::uint32_t k);

/// prod_i f(x[i,1], x[i,2], ...) for a template f in the t-variables.
Polynomial tilde_product(std::uint32_t n, const Polynomial& f);

/// Every monomial of multidegree D in rows 1..n, descending term order.
std::vector<Monomial> component_monomials(std::uint32_t n, const MultiDegree& d);

/// Number of monomials of multidegree D in rows 1..n (without enumerating them).
std::uint64_t component_size(std::uint32_t n, const MultiDegree& d);

/// Orbit sums of one representative per S_n-orbit of monomials of
/// multidegree D: a basis of the D-component of the symmetric subring,
/// ordered by descending leading monomial.
std::vector<Polynomial> symmetric_component_basis(const CoefficientRing& ring, std::uint32_t n, const MultiDegree& d);

/// Products of 2x2 minors d_{ab} (a < b) with summed multidegree D,
/// deduplicated as polynomials: a spanning set of the D-component of L_2.
std::vector<Polynomial> l2_component_span(const CoefficientRing& ring, const MultiDegree& d);

}  // namespace symideal
