#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symideal/ring.hpp"

namespace symideal {

/// Hard ceiling on the row count n; orbit machinery iterates over S_n.
inline constexpr std::uint32_t kMaxRows = 12;

enum class VarKind : std::uint8_t { X, T };

/// x[row,col] or t[col]. T-variables carry row 0.
struct Variable {
  std::uint32_t col = 1;
  std::uint32_t row = 0;
  VarKind kind = VarKind::X;

  static Variable x(std::uint32_t row, std::uint32_t col) { return {col, row, VarKind::X}; }
  static Variable t(std::uint32_t col) { return {col, 0, VarKind::T}; }

  /// Canonical variable order: column-major, (col, row) ascending.
  friend auto operator<=>(const Variable&, const Variable&) = default;
  friend bool operator==(const Variable&, const Variable&) = default;

  std::string to_string() const;
};

/// Per-column total degrees u_j; entry j-1 holds column j. Trailing zeros are trimmed.
class MultiDegree {
 public:
  MultiDegree() = default;
  explicit MultiDegree(std::vector<std::uint32_t> degrees);

  std::span<const std::uint32_t> entries() const { return degrees_; }
  /// Degree in column `col` (1-based); zero past the stored entries.
  std::uint32_t at(std::uint32_t col) const;
  std::size_t width() const { return degrees_.size(); }
  bool empty() const { return degrees_.empty(); }
  std::uint64_t total() const;
  /// Columns with nonzero degree, ascending.
  std::vector<std::uint32_t> support() const;

  /// Componentwise <=.
  bool fits_in(const MultiDegree& other) const;

  MultiDegree operator+(const MultiDegree& other) const;
  /// Componentwise difference; throws PreconditionError if a component would go negative.
  MultiDegree operator-(const MultiDegree& other) const;

  friend bool operator==(const MultiDegree&, const MultiDegree&) = default;
  friend auto operator<=>(const MultiDegree&, const MultiDegree&) = default;

  /// "(1,2)"; the empty degree prints as "()".
  std::string to_string() const;

 private:
  void trim();
  std::vector<std::uint32_t> degrees_;
};

/// A power product. Factors are sorted in canonical variable order with
/// positive exponents; all variables share one kind.
class Monomial {
 public:
  using Factor = std::pair<Variable, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);
  static Monomial of(Variable v, std::uint32_t exponent = 1);

  std::span<const Factor> factors() const { return factors_; }
  std::uint64_t degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }
  std::optional<VarKind> kind() const;
  std::uint32_t exponent(const Variable& v) const;
  /// Largest row index used (0 for constants and T-monomials).
  std::uint32_t max_row() const;
  /// Largest column index used (0 for constants).
  std::uint32_t max_col() const;

  bool divides(const Monomial& other) const;
  /// this / divisor; precondition: divisor divides this.
  Monomial quotient(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }
  /// Structural order (for associative containers); unrelated to the term order.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.factors_ < b.factors_; }

  /// "x[1,1]^2*x[2,1]"; the empty monomial prints as "1".
  std::string to_string() const;

 private:
  std::vector<Factor> factors_;
  std::uint64_t degree_ = 0;
};

enum class MonomialOrder { GrevLex };

std::string order_name(MonomialOrder order);

/// Graded reverse-lexicographic comparison, variables ranked in canonical
/// order with x[1,1] the largest. Kinds must agree unless one side is 1.
std::strong_ordering compare_grevlex(const Monomial& a, const Monomial& b);
/// Checked version: throws PreconditionError on mixed variable kinds.
std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b,
                                       MonomialOrder order = MonomialOrder::GrevLex);

/// Column-sum multidegree of an X-monomial; throws PreconditionError for T-monomials.
MultiDegree multidegree(const Monomial& m);

struct Term {
  Monomial monomial;
  Scalar coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over ZZ, QQ or GF(p) in x[i,j] (1 <= i <= rows) or t[j].
/// Terms are kept in strictly descending grevlex order with nonzero
/// normalized coefficients.
class Polynomial {
 public:
  Polynomial(CoefficientRing ring, std::uint32_t rows);

  static Polynomial constant(CoefficientRing ring, std::uint32_t rows, const Scalar& c);
  static Polynomial monomial(CoefficientRing ring, std::uint32_t rows, Monomial m,
                             const Scalar& c = 1);
  static Polynomial variable(CoefficientRing ring, std::uint32_t rows, Variable v);
  /// Sorts, merges duplicates, normalizes coefficients and drops zeros.
  static Polynomial from_terms(CoefficientRing ring, std::uint32_t rows, std::vector<Term> terms);

  const CoefficientRing& ring() const { return ring_; }
  std::uint32_t rows() const { return rows_; }
  std::span<const Term> terms() const& { return terms_; }
  std::span<const Term> terms() && = delete;
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Variable kind of the polynomial; empty for constants.
  std::optional<VarKind> kind() const { return kind_; }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const Scalar& leading_coeff() const { return leading_term().coeff; }
  /// Coefficient of m (zero when absent).
  Scalar coeff(const Monomial& m) const;

  std::uint64_t total_degree() const;
  bool is_homogeneous() const;
  /// Common multidegree when every monomial shares one (X-polynomials only).
  std::optional<MultiDegree> common_multidegree() const;
  bool is_multihomogeneous() const { return is_zero() || common_multidegree().has_value(); }
  /// Largest column index in use (0 for constants).
  std::uint32_t max_col() const;
  /// Columns that occur in some variable, ascending.
  std::vector<std::uint32_t> column_support() const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial scaled(const Scalar& c) const;
  /// this * c * m; m must be compatible with the variable kind.
  Polynomial mul_term(const Scalar& c, const Monomial& m) const;
  /// this - c * m * g, computed by a single merge.
  Polynomial sub_mul_term(const Scalar& c, const Monomial& m, const Polynomial& g) const;
  /// Same terms with the leading term removed.
  Polynomial tail() const;
  /// Multiplies by the inverse of the leading coefficient (field rings only).
  Polynomial monic() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Canonical form in the polynomial grammar.
  std::string to_string() const;

 private:
  void check_compatible(const Polynomial& other) const;
  void set_kind_from_terms();

  CoefficientRing ring_;
  std::uint32_t rows_;
  std::vector<Term> terms_;
  std::optional<VarKind> kind_;
};

Polynomial add(const Polynomial& f, const Polynomial& g);
Polynomial mul(const Polynomial& f, const Polynomial& g);

/// Parses the polynomial grammar
///   poly := ['-'] term (('+'|'-') term)*
///   term := coeff | coeff '*' factors | factors
///   factor := var ['^' nat],  var := 'x[' nat ',' nat ']' | 't[' nat ']'
///   coeff := nat | nat '/' nat   ('/' only over QQ)
/// Whitespace between tokens is ignored.
Polynomial parse_polynomial(std::string_view text, const CoefficientRing& ring, std::uint32_t rows);
std::string format_polynomial(const Polynomial& f);

/// p-adic valuation of an integer polynomial; the zero polynomial has infinite valuation.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(); }
  explicit Valuation(std::uint64_t value) : value_(value) {}

  bool is_infinite() const { return !value_.has_value(); }
  /// Precondition: finite.
  std::uint64_t value() const { return *value_; }
  bool at_least(std::uint64_t e) const { return is_infinite() || *value_ >= e; }
  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(*value_); }

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  Valuation() = default;
  std::optional<std::uint64_t> value_;
};

/// Largest e with p^e dividing every coefficient. Throws for non-ZZ input.
Valuation valuation_p(const Polynomial& f, std::uint32_t p);

}  // namespace symideal
