#include "symideal/morphisms.hpp"

#include "symideal/errors.hpp"

namespace symideal {

Polynomial row_truncate(const Polynomial& f, std::uint32_t rows) {
  if (f.kind() == VarKind::T) throw PreconditionError("row truncation of a t-polynomial");
  if (rows < 1 || rows > f.rows()) {
    throw PreconditionError("target row count " + std::to_string(rows) + " exceeds the row bound " +
                            std::to_string(f.rows()));
  }
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    if (t.monomial.max_row() <= rows) terms.push_back(t);
  }
  return Polynomial::from_terms(f.ring(), rows, std::move(terms));
}

Polynomial reduce_mod_p(const Polynomial& f, std::uint32_t p) {
  if (f.ring().kind() != RingKind::Integers) throw PreconditionError("reduction mod p requires ZZ coefficients");
  auto field = CoefficientRing::prime_field(p);
  std::vector<Term> terms(f.terms().begin(), f.terms().end());
  return Polynomial::from_terms(field, f.rows(), std::move(terms));
}

Polynomial lift_canonical(const Polynomial& f) {
  if (f.ring().kind() != RingKind::PrimeField) throw PreconditionError("canonical lift requires GF(p) coefficients");
  // stored prime-field coefficients already are the representatives in {0..p-1}
  std::vector<Term> terms(f.terms().begin(), f.terms().end());
  return Polynomial::from_terms(CoefficientRing::integers(), f.rows(), std::move(terms));
}

Polynomial collapse_columns(const Polynomial& f) {
  if (f.ring().kind() != RingKind::Integers) throw PreconditionError("column collapse requires ZZ coefficients");
  if (f.kind() == VarKind::T) throw PreconditionError("column collapse of a t-polynomial");
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<Monomial::Factor> factors;
    for (const auto& [v, e] : t.monomial.factors()) factors.push_back({Variable::t(v.col), e});
    terms.push_back({Monomial(std::move(factors)), t.coeff});
  }
  return Polynomial::from_terms(f.ring(), f.rows(), std::move(terms));
}

Polynomial psi_kl(const Polynomial& f, std::uint32_t k, std::uint32_t l) {
  if (k == l) throw PreconditionError("psi_kl requires k != l");
  if (k == 0 || l == 0) throw PreconditionError("column indices must be positive");
  if (f.kind() == VarKind::T) throw PreconditionError("psi_kl of a t-polynomial");
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<Monomial::Factor> factors;
    for (const auto& [v, e] : t.monomial.factors()) {
      factors.push_back({v, e});
      if (v.col == l) factors.push_back({Variable::x(v.row, k), e});
    }
    terms.push_back({Monomial(std::move(factors)), t.coeff});
  }
  return Polynomial::from_terms(f.ring(), f.rows(), std::move(terms));
}

}  // namespace symideal
