#include "symideal/linalg.hpp"

#include <cstdint>
#include <map>

#include "symideal/errors.hpp"

namespace symideal {

namespace {

struct MonomialIndex {
  std::map<Monomial, std::size_t> rows;

  std::size_t index(const Monomial& m) {
    auto [it, inserted] = rows.try_emplace(m, rows.size());
    return it->second;
  }
};

// Row-reduces the augmented matrix in place and returns pivot columns per row.
// `Field` supplies zero test, subtraction of multiples, and inversion.
template <class T, class Field>
std::vector<std::size_t> row_reduce(std::vector<std::vector<T>>& m, std::size_t ncols, const Field& field) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t sel = r;
    while (sel < m.size() && field.is_zero(m[sel][c])) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[r], m[sel]);
    T inv = field.inverse(m[r][c]);
    for (auto& v : m[r]) v = field.mul(v, inv);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || field.is_zero(m[i][c])) continue;
      T factor = m[i][c];
      for (std::size_t k = c; k < m[i].size(); ++k) {
        if (!field.is_zero(m[r][k])) m[i][k] = field.sub(m[i][k], field.mul(factor, m[r][k]));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

struct ModField {
  std::uint64_t p;
  bool is_zero(std::uint64_t a) const { return a == 0; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  std::uint64_t inverse(std::uint64_t a) const {
    // Fermat: a^(p-2)
    std::uint64_t r = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r;
  }
};

struct RationalField {
  bool is_zero(const mpq_class& a) const { return a == 0; }
  mpq_class mul(const mpq_class& a, const mpq_class& b) const { return a * b; }
  mpq_class sub(const mpq_class& a, const mpq_class& b) const { return a - b; }
  mpq_class inverse(const mpq_class& a) const { return 1 / a; }
};

template <class T, class Field, class Convert, class Back>
std::optional<std::vector<Scalar>> solve_generic(std::span<const Polynomial> columns, const Polynomial& target,
                                                 const Field& field, Convert convert, Back back) {
  MonomialIndex index;
  for (const auto& col : columns) {
    for (const auto& t : col.terms()) index.index(t.monomial);
  }
  for (const auto& t : target.terms()) index.index(t.monomial);
  const std::size_t nrows = index.rows.size();
  const std::size_t ncols = columns.size();
  std::vector<std::vector<T>> m(nrows, std::vector<T>(ncols + 1, convert(Scalar(0))));
  for (std::size_t c = 0; c < ncols; ++c) {
    for (const auto& t : columns[c].terms()) m[index.rows[t.monomial]][c] = convert(t.coeff);
  }
  for (const auto& t : target.terms()) m[index.rows[t.monomial]][ncols] = convert(t.coeff);
  auto pivots = row_reduce(m, ncols + 1, field);
  std::vector<Scalar> solution(ncols, Scalar(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == ncols) return std::nullopt;
    solution[pivots[r]] = back(m[r][ncols]);
  }
  return solution;
}

void check_field(std::span<const Polynomial> polys, const CoefficientRing& ring) {
  if (!ring.is_field()) throw PreconditionError("linear algebra requires field coefficients");
  for (const auto& p : polys) {
    if (!(p.ring() == ring)) throw PreconditionError("ring mismatch in linear system");
  }
}

}  // namespace

std::optional<std::vector<Scalar>> solve_in_span(std::span<const Polynomial> columns, const Polynomial& target) {
  const CoefficientRing& ring = target.ring();
  check_field(columns, ring);
  if (ring.kind() == RingKind::PrimeField) {
    ModField field{ring.characteristic()};
    return solve_generic<std::uint64_t>(
        columns, target, field, [](const Scalar& s) { return static_cast<std::uint64_t>(s.get_num().get_ui()); },
        [](std::uint64_t v) { return Scalar(static_cast<unsigned long>(v)); });
  }
  return solve_generic<mpq_class>(
      columns, target, RationalField{}, [](const Scalar& s) { return s; }, [](const mpq_class& v) { return v; });
}

std::size_t span_rank(std::span<const Polynomial> polys) {
  if (polys.empty()) return 0;
  const CoefficientRing& ring = polys.front().ring();
  check_field(polys, ring);
  MonomialIndex index;
  for (const auto& p : polys) {
    for (const auto& t : p.terms()) index.index(t.monomial);
  }
  auto fill = [&](auto zero, auto convert) {
    using T = decltype(zero);
    std::vector<std::vector<T>> m(index.rows.size(), std::vector<T>(polys.size(), zero));
    for (std::size_t c = 0; c < polys.size(); ++c) {
      for (const auto& t : polys[c].terms()) m[index.rows[t.monomial]][c] = convert(t.coeff);
    }
    return m;
  };
  if (ring.kind() == RingKind::PrimeField) {
    auto m = fill(std::uint64_t{0}, [](const Scalar& s) { return static_cast<std::uint64_t>(s.get_num().get_ui()); });
    return row_reduce(m, polys.size(), ModField{ring.characteristic()}).size();
  }
  auto m = fill(mpq_class(0), [](const Scalar& s) { return mpq_class(s); });
  return row_reduce(m, polys.size(), RationalField{}).size();
}

}  // namespace symideal
