#include "symideal/families.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "symideal/actions.hpp"
#include "symideal/errors.hpp"

namespace symideal {

Polynomial h_family(const CoefficientRing& ring, std::uint32_t n, std::uint32_t k) {
  if (k < 1) throw PreconditionError("h_k requires k >= 1");
  std::vector<Term> terms;
  for (std::uint32_t i = 1; i <= n; ++i) {
    std::vector<Monomial::Factor> f;
    for (std::uint32_t j = 1; j <= k; ++j) f.push_back({Variable::x(i, j), 1});
    terms.push_back({Monomial(std::move(f)), 1});
  }
  return Polynomial::from_terms(ring, n, std::move(terms));
}

Polynomial determinant_gen(const CoefficientRing& ring, std::uint32_t n, std::span<const std::uint32_t> cols) {
  if (cols.size() != n) throw PreconditionError("determinant needs exactly n column indices");
  for (auto c : cols) {
    if (c == 0) throw PreconditionError("column indices must be positive");
  }
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::vector<Term> terms;
  do {
    std::size_t inversions = 0;
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = a + 1; b < n; ++b) inversions += perm[a] > perm[b];
    }
    std::vector<Monomial::Factor> f;
    for (std::uint32_t r = 0; r < n; ++r) f.push_back({Variable::x(r + 1, cols[perm[r]]), 1});
    terms.push_back({Monomial(std::move(f)), inversions % 2 ? -1 : 1});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Polynomial::from_terms(ring, n, std::move(terms));
}

Polynomial cycle_product(const CoefficientRing& ring, std::uint32_t k) {
  if (k < 3) throw PreconditionError("cycle product requires k >= 3");
  Polynomial out = Polynomial::constant(ring, 2, 1);
  for (std::uint32_t a = 1; a < k; ++a) {
    std::uint32_t cols[] = {a, a + 1};
    out = out * determinant_gen(ring, 2, cols);
  }
  std::uint32_t closing[] = {1, k};
  return out * determinant_gen(ring, 2, closing);
}

Polynomial tilde_product(std::uint32_t n, const Polynomial& f) {
  if (f.kind() == VarKind::X) throw PreconditionError("tilde product expects a t-polynomial template");
  Polynomial out = Polynomial::constant(f.ring(), n, 1);
  for (std::uint32_t i = 1; i <= n; ++i) {
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
      std::vector<Monomial::Factor> factors;
      for (const auto& [v, e] : t.monomial.factors()) factors.push_back({Variable::x(i, v.col), e});
      terms.push_back({Monomial(std::move(factors)), t.coeff});
    }
    out = out * Polynomial::from_terms(f.ring(), n, std::move(terms));
  }
  return out;
}

std::vector<Monomial> component_monomials(std::uint32_t n, const MultiDegree& d) {
  std::vector<Monomial> out;
  std::vector<Monomial::Factor> current;
  auto cols = d.support();
  // distribute each column's degree over the n rows
  std::function<void(std::size_t, std::uint32_t, std::uint32_t)> rec = [&](std::size_t ci, std::uint32_t row,
                                                                           std::uint32_t left) {
    if (ci == cols.size()) {
      out.emplace_back(current);
      return;
    }
    if (row == n) {
      current.push_back({Variable::x(row, cols[ci]), left});
      rec(ci + 1, 1, ci + 1 < cols.size() ? d.at(cols[ci + 1]) : 0);
      current.pop_back();
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      current.push_back({Variable::x(row, cols[ci]), e});
      rec(ci, row + 1, left - e);
      current.pop_back();
    }
  };
  if (n < 1 || n > kMaxRows) throw PreconditionError("row bound outside 1..12");
  rec(0, 1, cols.empty() ? 0 : d.at(cols[0]));
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return compare_grevlex(a, b) > 0; });
  return out;
}

std::uint64_t component_size(std::uint32_t n, const MultiDegree& d) {
  std::uint64_t total = 1;
  for (auto u : d.entries()) {
    // C(u + n - 1, n - 1)
    std::uint64_t c = 1;
    for (std::uint64_t i = 1; i < n; ++i) c = c * (u + i) / i;
    total *= c;
  }
  return total;
}

std::vector<Polynomial> symmetric_component_basis(const CoefficientRing& ring, std::uint32_t n, const MultiDegree& d) {
  std::set<Monomial> covered;
  std::vector<Polynomial> basis;
  for (const auto& m : component_monomials(n, d)) {
    if (covered.contains(m)) continue;
    auto orbit = row_orbit(m, n);
    covered.insert(orbit.begin(), orbit.end());
    basis.push_back(orbit_sum(ring, m, n));
  }
  // component_monomials is descending, so each new orbit's leading
  // monomial is smaller than the previous ones
  return basis;
}

std::vector<Polynomial> l2_component_span(const CoefficientRing& ring, const MultiDegree& d) {
  std::vector<std::uint32_t> remaining(d.entries().begin(), d.entries().end());
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::vector<Polynomial> out;
  std::function<void()> rec = [&]() {
    auto first = std::find_if(remaining.begin(), remaining.end(), [](std::uint32_t u) { return u != 0; });
    if (first == remaining.end()) {
      Polynomial prod = Polynomial::constant(ring, 2, 1);
      for (auto [a, b] : edges) {
        std::uint32_t cols[] = {a, b};
        prod = prod * determinant_gen(ring, 2, cols);
      }
      if (!prod.is_zero() && std::find(out.begin(), out.end(), prod) == out.end()) out.push_back(std::move(prod));
      return;
    }
    auto a = static_cast<std::uint32_t>(first - remaining.begin()) + 1;
    // edges leaving the smallest open column come out in nondecreasing partner order
    std::uint32_t min_b = a + 1;
    if (!edges.empty() && edges.back().first == a) min_b = edges.back().second;
    for (std::uint32_t b = min_b; b <= remaining.size(); ++b) {
      if (remaining[b - 1] == 0) continue;
      --remaining[a - 1];
      --remaining[b - 1];
      edges.push_back({a, b});
      rec();
      edges.pop_back();
      ++remaining[a - 1];
      ++remaining[b - 1];
    }
  };
  rec();
  return out;
}

}  // namespace symideal
