#pragma once

#include <span>
#include <vector>

#include "symideal/polynomial.hpp"

namespace symideal {

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division: f = sum_i quotients[i] * divisors[i] + remainder
/// with no remainder monomial divisible by a divisor's leading monomial.
/// The first divisor (in list order) whose leading monomial divides the
/// current leading term is used. The identity is re-checked before returning.
DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors,
                      MonomialOrder order = MonomialOrder::GrevLex);

/// Reduced Groebner basis over a field, together with a representation of
/// each element in terms of the input generators.
struct GroebnerBasis {
  MonomialOrder order = MonomialOrder::GrevLex;
  /// Monic, reduced, sorted by descending leading monomial.
  std::vector<Polynomial> elements;
  /// Variables occurring in the input generators, canonical order.
  std::vector<Variable> variables;
  /// elements[i] == sum_j representations[i][j] * generators[j].
  std::vector<std::vector<Polynomial>> representations;
};

Polynomial s_polynomial(const Polynomial& a, const Polynomial& b);

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// degree, then pair indices) and the coprime and chain criteria.
GroebnerBasis buchberger(std::span<const Polynomial> generators, MonomialOrder order = MonomialOrder::GrevLex);

/// Every S-polynomial of basis pairs reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& basis);

struct IdealMembership {
  bool member = false;
  /// When member: f == sum_j cofactors[j] * generators[j].
  std::vector<Polynomial> cofactors;
};

IdealMembership ideal_member(const Polynomial& f, std::span<const Polynomial> generators,
                             MonomialOrder order = MonomialOrder::GrevLex);

}  // namespace symideal
