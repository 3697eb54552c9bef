#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "symideal/polynomial.hpp"

namespace symideal {

/// tau in S_n acting by x[i,j] -> x[tau(i),j]. Images are 1-based.
class RowPermutation {
 public:
  explicit RowPermutation(std::vector<std::uint32_t> images);
  static RowPermutation identity(std::uint32_t n);
  /// Swaps rows i and j (1-based).
  static RowPermutation transposition(std::uint32_t n, std::uint32_t i, std::uint32_t j);
  /// Parses the one-line form "[2,1,3]".
  static RowPermutation parse(std::string_view text);

  std::uint32_t size() const { return static_cast<std::uint32_t>(images_.size()); }
  std::uint32_t operator()(std::uint32_t row) const { return images_.at(row - 1); }
  std::span<const std::uint32_t> images() const { return images_; }

  std::string to_string() const;
  friend bool operator==(const RowPermutation&, const RowPermutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

/// A finitely supported injective column relabeling j -> sigma(j), identity
/// off its support. Any such injection extends to a permutation of N, so it
/// stands in for an element of Sym(N).
class ColumnMap {
 public:
  ColumnMap() = default;
  explicit ColumnMap(std::map<std::uint32_t, std::uint32_t> pairs);
  /// Maps sources[i] -> targets[i].
  static ColumnMap from_images(std::span<const std::uint32_t> sources, std::span<const std::uint32_t> targets);
  /// Parses "{1->3,2->1}"; "{}" is the identity. Non-injective maps are parse errors.
  static ColumnMap parse(std::string_view text);

  std::uint32_t operator()(std::uint32_t col) const;
  const std::map<std::uint32_t, std::uint32_t>& pairs() const { return pairs_; }
  bool is_identity() const { return pairs_.empty(); }

  /// True when the map is injective on `cols` together with its own support.
  bool injective_on(std::span<const std::uint32_t> cols) const;

  /// (this o inner)(j) = this(inner(j)) on inner's support, together with the
  /// pairs of this whose source is neither moved by inner nor hit by it.
  ColumnMap compose(const ColumnMap& inner) const;

  std::string to_string() const;
  friend bool operator==(const ColumnMap&, const ColumnMap&) = default;
  friend auto operator<=>(const ColumnMap&, const ColumnMap&) = default;

 private:
  std::map<std::uint32_t, std::uint32_t> pairs_;
};

Monomial apply_row(const RowPermutation& tau, const Monomial& m);
Monomial apply_column(const ColumnMap& sigma, const Monomial& m);

/// Ring automorphism x[i,j] -> x[tau(i),j]; tau must have f.rows() entries.
Polynomial apply_row(const RowPermutation& tau, const Polynomial& f);
/// x[i,j] -> x[i,sigma(j)] (or t[j] -> t[sigma(j)]). Throws PreconditionError
/// if sigma is not injective on the columns of f.
Polynomial apply_column(const ColumnMap& sigma, const Polynomial& f);

/// Invariance under all adjacent row transpositions.
bool is_symmetric(const Polynomial& f);

/// {tau(m) : tau in S_n}, sorted in descending term order.
std::vector<Monomial> row_orbit(const Monomial& m, std::uint32_t n);
/// Sum of the row orbit of m with coefficient 1.
Polynomial orbit_sum(const CoefficientRing& ring, const Monomial& m, std::uint32_t n);

/// The averaging operator (1/n!) sum_tau tau(f). Requires QQ, or GF(p) with
/// p > n (CharacteristicObstruction otherwise); ZZ is rejected.
Polynomial symmetrize(const Polynomial& f);

}  // namespace symideal
