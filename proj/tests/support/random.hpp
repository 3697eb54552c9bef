#pragma once

#include <random>
#include <vector>

#include "symideal/symideal.hpp"

namespace testing {

using namespace symideal;

inline std::uint32_t uniform(std::mt19937_64& rng, std::uint32_t lo, std::uint32_t hi) {
  return std::uniform_int_distribution<std::uint32_t>(lo, hi)(rng);
}

inline Scalar random_coeff(std::mt19937_64& rng, const CoefficientRing& ring) {
  switch (ring.kind()) {
    case RingKind::PrimeField:
      return ring.normalize(uniform(rng, 1, ring.characteristic() - 1));
    case RingKind::Integers:
      return Scalar(static_cast<int>(uniform(rng, 1, 9)) * (uniform(rng, 0, 1) ? 1 : -1));
    case RingKind::Rationals:
      return Scalar(static_cast<int>(uniform(rng, 1, 9)) * (uniform(rng, 0, 1) ? 1 : -1),
                    static_cast<int>(uniform(rng, 1, 4)));
  }
  return 1;
}

inline Monomial random_monomial(std::mt19937_64& rng, std::uint32_t rows, std::uint32_t width,
                                std::uint32_t max_degree) {
  std::uint32_t degree = uniform(rng, 0, max_degree);
  Monomial m;
  for (std::uint32_t i = 0; i < degree; ++i) {
    m = m * Monomial::of(Variable::x(uniform(rng, 1, rows), uniform(rng, 1, width)));
  }
  return m;
}

inline Polynomial random_poly(std::mt19937_64& rng, const CoefficientRing& ring, std::uint32_t rows,
                              std::uint32_t width, std::uint32_t max_terms = 4, std::uint32_t max_degree = 3) {
  std::vector<Term> terms;
  std::uint32_t count = uniform(rng, 0, max_terms);
  for (std::uint32_t i = 0; i < count; ++i) {
    terms.push_back({random_monomial(rng, rows, width, max_degree), random_coeff(rng, ring)});
  }
  return Polynomial::from_terms(ring, rows, std::move(terms));
}

inline Polynomial random_symmetric(std::mt19937_64& rng, const CoefficientRing& ring, std::uint32_t rows,
                                   std::uint32_t width, std::uint32_t max_terms = 3, std::uint32_t max_degree = 3) {
  Polynomial out(ring, rows);
  std::uint32_t count = uniform(rng, 0, max_terms);
  for (std::uint32_t i = 0; i < count; ++i) {
    out = out + orbit_sum(ring, random_monomial(rng, rows, width, max_degree), rows).scaled(random_coeff(rng, ring));
  }
  return out;
}

/// Random polynomial all of whose monomials have multidegree d.
inline Polynomial random_multihomogeneous(std::mt19937_64& rng, const CoefficientRing& ring, std::uint32_t rows,
                                          const MultiDegree& d, std::uint32_t max_terms = 3) {
  std::vector<Term> terms;
  std::uint32_t count = uniform(rng, 1, max_terms);
  for (std::uint32_t i = 0; i < count; ++i) {
    Monomial m;
    for (std::uint32_t col = 1; col <= d.width(); ++col) {
      for (std::uint32_t e = 0; e < d.at(col); ++e) m = m * Monomial::of(Variable::x(uniform(rng, 1, rows), col));
    }
    terms.push_back({m, random_coeff(rng, ring)});
  }
  return Polynomial::from_terms(ring, rows, std::move(terms));
}

/// Symmetric polynomial all of whose monomials have multidegree d.
inline Polynomial random_symmetric_multihomogeneous(std::mt19937_64& rng, const CoefficientRing& ring,
                                                    std::uint32_t rows, const MultiDegree& d,
                                                    std::uint32_t max_terms = 2) {
  Polynomial out(ring, rows);
  const auto base = random_multihomogeneous(rng, ring, rows, d, max_terms);
  for (const auto& t : base.terms()) {
    out = out + orbit_sum(ring, t.monomial, rows).scaled(t.coeff);
  }
  return out;
}

/// Injective map on {1..cols} into {1..target_max}.
inline ColumnMap random_column_map(std::mt19937_64& rng, std::uint32_t cols, std::uint32_t target_max) {
  std::vector<std::uint32_t> pool(target_max);
  for (std::uint32_t i = 0; i < target_max; ++i) pool[i] = i + 1;
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<std::uint32_t> sources(cols);
  for (std::uint32_t i = 0; i < cols; ++i) sources[i] = i + 1;
  return ColumnMap::from_images(sources, std::span(pool).first(cols));
}

inline RowPermutation random_row_permutation(std::mt19937_64& rng, std::uint32_t n) {
  std::vector<std::uint32_t> images(n);
  for (std::uint32_t i = 0; i < n; ++i) images[i] = i + 1;
  std::shuffle(images.begin(), images.end(), rng);
  return RowPermutation(images);
}

}  // namespace testing
