#include "symideal/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

#include "symideal/errors.hpp"

namespace symideal {

namespace {

void check_inputs(const Polynomial& ref, std::span<const Polynomial> polys) {
  if (!ref.ring().is_field()) throw PreconditionError("Groebner computations require field coefficients");
  for (const auto& p : polys) {
    if (!(p.ring() == ref.ring()) || p.rows() != ref.rows()) {
      throw PreconditionError("generators must share one ring and row bound");
    }
  }
}

struct Tracked {
  Polynomial value;
  std::vector<Polynomial> rep;
};

// Full reduction of t modulo the monic basis (optionally skipping one element).
void reduce_full(Tracked& t, const std::vector<Tracked>& basis, std::size_t skip = static_cast<std::size_t>(-1)) {
  const auto& ring = t.value.ring();
  std::vector<Term> remainder;
  Polynomial p = t.value;
  while (!p.is_zero()) {
    const Term lt = p.leading_term();
    std::size_t idx = basis.size();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (i != skip && basis[i].value.leading_monomial().divides(lt.monomial)) {
        idx = i;
        break;
      }
    }
    if (idx == basis.size()) {
      remainder.push_back(lt);
      p = p.tail();
      continue;
    }
    const auto& g = basis[idx];
    Monomial m = lt.monomial.quotient(g.value.leading_monomial());
    p = p.sub_mul_term(lt.coeff, m, g.value);
    for (std::size_t j = 0; j < t.rep.size(); ++j) {
      t.rep[j] = t.rep[j].sub_mul_term(lt.coeff, m, g.rep[j]);
    }
  }
  t.value = Polynomial::from_terms(ring, t.value.rows(), std::move(remainder));
}

void make_monic(Tracked& t) {
  if (t.value.is_zero()) return;
  const auto& ring = t.value.ring();
  Scalar inv = ring.inverse(t.value.leading_coeff());
  t.value = t.value.scaled(inv);
  for (auto& r : t.rep) r = r.scaled(inv);
}

}  // namespace

DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors, MonomialOrder order) {
  (void)order;
  check_inputs(f, divisors);
  for (const auto& d : divisors) {
    if (d.is_zero()) throw PreconditionError("division by the zero polynomial");
  }
  const auto& ring = f.ring();
  std::vector<std::vector<Term>> quotient_terms(divisors.size());
  std::vector<Term> remainder;
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term lt = p.leading_term();
    bool divided = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (!divisors[i].leading_monomial().divides(lt.monomial)) continue;
      Scalar c = ring.mul(lt.coeff, ring.inverse(divisors[i].leading_coeff()));
      Monomial m = lt.monomial.quotient(divisors[i].leading_monomial());
      p = p.sub_mul_term(c, m, divisors[i]);
      quotient_terms[i].push_back({std::move(m), std::move(c)});
      divided = true;
      break;
    }
    if (!divided) {
      remainder.push_back(lt);
      p = p.tail();
    }
  }
  DivisionResult out{{}, Polynomial::from_terms(ring, f.rows(), std::move(remainder))};
  Polynomial check = out.remainder;
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    out.quotients.push_back(Polynomial::from_terms(ring, f.rows(), std::move(quotient_terms[i])));
    check = check + out.quotients.back() * divisors[i];
  }
  if (check != f) throw std::logic_error("division identity violated");
  return out;
}

Polynomial s_polynomial(const Polynomial& a, const Polynomial& b) {
  const auto& ring = a.ring();
  Monomial l = a.leading_monomial().lcm(b.leading_monomial());
  Polynomial left = a.mul_term(ring.inverse(a.leading_coeff()), l.quotient(a.leading_monomial()));
  return left.sub_mul_term(ring.inverse(b.leading_coeff()), l.quotient(b.leading_monomial()), b);
}

GroebnerBasis buchberger(std::span<const Polynomial> generators, MonomialOrder order) {
  if (generators.empty()) throw PreconditionError("buchberger needs at least one generator");
  check_inputs(generators.front(), generators);
  const auto& ring = generators.front().ring();
  const auto rows = generators.front().rows();
  const std::size_t ngens = generators.size();
  const Polynomial zero(ring, rows);

  GroebnerBasis out;
  out.order = order;
  {
    std::set<Variable> vars;
    for (const auto& g : generators) {
      for (const auto& t : g.terms()) {
        for (const auto& [v, e] : t.monomial.factors()) vars.insert(v);
      }
    }
    out.variables.assign(vars.begin(), vars.end());
  }

  std::vector<Tracked> basis;
  for (std::size_t i = 0; i < ngens; ++i) {
    if (generators[i].is_zero()) continue;
    Tracked t{generators[i], std::vector<Polynomial>(ngens, zero)};
    t.rep[i] = Polynomial::constant(ring, rows, 1);
    make_monic(t);
    basis.push_back(std::move(t));
  }

  // pairs keyed by (lcm degree, i, j)
  using Pair = std::tuple<std::uint64_t, std::size_t, std::size_t>;
  std::set<Pair> queue;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      auto d = basis[i].value.leading_monomial().lcm(basis[j].value.leading_monomial()).degree();
      queue.insert({d, i, j});
    }
  };
  auto pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    auto d = basis[a].value.leading_monomial().lcm(basis[b].value.leading_monomial()).degree();
    return queue.contains({d, a, b});
  };
  for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);

  while (!queue.empty()) {
    auto [deg, i, j] = *queue.begin();
    queue.erase(queue.begin());
    const auto& lmi = basis[i].value.leading_monomial();
    const auto& lmj = basis[j].value.leading_monomial();
    if (lmi.coprime(lmj)) continue;
    Monomial l = lmi.lcm(lmj);
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (basis[k].value.leading_monomial().divides(l) && !pending(i, k) && !pending(j, k)) chain = true;
    }
    if (chain) continue;

    Monomial mi = l.quotient(lmi);
    Monomial mj = l.quotient(lmj);
    Tracked s{basis[i].value.mul_term(1, mi), {}};
    s.value = s.value.sub_mul_term(1, mj, basis[j].value);
    s.rep.reserve(ngens);
    for (std::size_t g = 0; g < ngens; ++g) {
      s.rep.push_back(basis[i].rep[g].mul_term(1, mi).sub_mul_term(1, mj, basis[j].rep[g]));
    }
    reduce_full(s, basis);
    if (s.value.is_zero()) continue;
    make_monic(s);
    basis.push_back(std::move(s));
    add_pairs_for(basis.size() - 1);
  }

  // minimalize
  std::vector<Tracked> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& lm = basis[i].value.leading_monomial();
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (j == i) continue;
      const auto& other = basis[j].value.leading_monomial();
      if (other.divides(lm) && (!(other == lm) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // interreduce: leading monomials are fixed, so one pass suffices
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    reduce_full(minimal[i], minimal, i);
    make_monic(minimal[i]);
  }
  std::sort(minimal.begin(), minimal.end(), [](const Tracked& a, const Tracked& b) {
    return compare_grevlex(a.value.leading_monomial(), b.value.leading_monomial()) > 0;
  });
  for (auto& t : minimal) {
    out.elements.push_back(std::move(t.value));
    out.representations.push_back(std::move(t.rep));
  }
  return out;
}

bool satisfies_buchberger_criterion(const GroebnerBasis& basis) {
  for (std::size_t i = 0; i < basis.elements.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.elements.size(); ++j) {
      auto s = s_polynomial(basis.elements[i], basis.elements[j]);
      if (!divide(s, basis.elements, basis.order).remainder.is_zero()) return false;
    }
  }
  return true;
}

IdealMembership ideal_member(const Polynomial& f, std::span<const Polynomial> generators, MonomialOrder order) {
  check_inputs(f, generators);
  const Polynomial zero(f.ring(), f.rows());
  IdealMembership out;
  if (f.is_zero()) {
    out.member = true;
    out.cofactors.assign(generators.size(), zero);
    return out;
  }
  if (generators.empty()) return out;
  auto gb = buchberger(generators, order);
  auto division = divide(f, gb.elements, order);
  if (!division.remainder.is_zero()) return out;
  out.member = true;
  out.cofactors.assign(generators.size(), zero);
  for (std::size_t i = 0; i < gb.elements.size(); ++i) {
    if (division.quotients[i].is_zero()) continue;
    for (std::size_t j = 0; j < generators.size(); ++j) {
      out.cofactors[j] = out.cofactors[j] + division.quotients[i] * gb.representations[i][j];
    }
  }
  Polynomial check = zero;
  for (std::size_t j = 0; j < generators.size(); ++j) check = check + out.cofactors[j] * generators[j];
  if (check != f) throw std::logic_error("membership cofactors do not reproduce the target");
  return out;
}

}  // namespace symideal
