#pragma once

// Slow, independent reference implementations used to cross-check the library.

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "symideal/symideal.hpp"

namespace testing {

using namespace symideal;

inline std::vector<RowPermutation> all_row_permutations(std::uint32_t n) {
  std::vector<std::uint32_t> images(n);
  for (std::uint32_t i = 0; i < n; ++i) images[i] = i + 1;
  std::vector<RowPermutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

/// (1/n!) sum over every tau in S_n.
inline Polynomial brute_symmetrize(const Polynomial& f) {
  Polynomial sum(f.ring(), f.rows());
  std::uint64_t count = 0;
  for (const auto& tau : all_row_permutations(f.rows())) {
    sum = sum + apply_row(tau, f);
    ++count;
  }
  return sum.scaled(f.ring().inverse(Scalar(static_cast<long>(count))));
}

inline std::set<std::string> brute_row_orbit(const Monomial& m, std::uint32_t n) {
  std::set<std::string> out;
  for (const auto& tau : all_row_permutations(n)) out.insert(apply_row(tau, m).to_string());
  return out;
}

/// Schoolbook product through an associative accumulator.
inline Polynomial naive_multiply(const Polynomial& f, const Polynomial& g) {
  std::map<Monomial, Scalar> acc;
  for (const auto& a : f.terms()) {
    for (const auto& b : g.terms()) acc[a.monomial * b.monomial] += a.coeff * b.coeff;
  }
  std::vector<Term> terms;
  for (auto& [m, c] : acc) terms.push_back({m, c});
  return Polynomial::from_terms(f.ring(), f.rows(), std::move(terms));
}

/// h_k written out as text and parsed.
inline Polynomial text_h(const CoefficientRing& ring, std::uint32_t n, std::uint32_t k) {
  std::string text;
  for (std::uint32_t i = 1; i <= n; ++i) {
    if (i > 1) text += "+";
    for (std::uint32_t j = 1; j <= k; ++j) {
      if (j > 1) text += "*";
      text += "x[" + std::to_string(i) + "," + std::to_string(j) + "]";
    }
  }
  return parse_polynomial(text, ring, n);
}

/// Determinant of the n x n minor on `cols` by Laplace expansion along the first row.
inline Polynomial laplace_det(const CoefficientRing& ring, std::uint32_t n, std::uint32_t first_row,
                              std::vector<std::uint32_t> cols) {
  if (cols.empty()) return Polynomial::constant(ring, n, 1);
  Polynomial out(ring, n);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    std::vector<std::uint32_t> rest = cols;
    rest.erase(rest.begin() + static_cast<long>(c));
    auto entry = Polynomial::variable(ring, n, Variable::x(first_row, cols[c]));
    auto minor = entry * laplace_det(ring, n, first_row + 1, rest);
    out = c % 2 == 0 ? out + minor : out - minor;
  }
  return out;
}

/// x[i,j] -> t[j] term by term.
inline Polynomial brute_collapse(const Polynomial& f) {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Monomial m;
    for (const auto& [v, e] : t.monomial.factors()) m = m * Monomial::of(Variable::t(v.col), e);
    terms.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(f.ring(), f.rows(), std::move(terms));
}

/// Smallest exponent of p over the coefficients, by repeated division; -1 for zero.
inline long brute_valuation(const Polynomial& f, long p) {
  if (f.is_zero()) return -1;
  long best = -1;
  for (const auto& t : f.terms()) {
    mpz_class c = abs(t.coeff.get_num());
    long e = 0;
    while (c % p == 0) {
      c /= p;
      ++e;
    }
    if (best < 0 || e < best) best = e;
  }
  return best;
}

}  // namespace testing
