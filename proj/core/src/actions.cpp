#include "symideal/actions.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "symideal/errors.hpp"

namespace symideal {

// ---------------------------------------------------------------------------
// RowPermutation

RowPermutation::RowPermutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (auto v : images_) {
    if (v == 0 || v > images_.size() || seen[v]) {
      throw PreconditionError("row images do not form a permutation of 1.." + std::to_string(images_.size()));
    }
    seen[v] = true;
  }
}

RowPermutation RowPermutation::identity(std::uint32_t n) {
  std::vector<std::uint32_t> v(n);
  for (std::uint32_t i = 0; i < n; ++i) v[i] = i + 1;
  return RowPermutation(std::move(v));
}

RowPermutation RowPermutation::transposition(std::uint32_t n, std::uint32_t i, std::uint32_t j) {
  auto id = identity(n);
  std::swap(id.images_.at(i - 1), id.images_.at(j - 1));
  return id;
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool consume(std::string_view token) {
    skip_ws();
    if (text.substr(pos, token.size()) == token) {
      pos += token.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view token) {
    if (!consume(token)) throw ParseError("expected '" + std::string(token) + "'", pos);
  }
  std::uint32_t nat() {
    skip_ws();
    std::size_t start = pos;
    std::uint64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      if (v > 0xffffffffULL) throw ParseError("number too large", start);
      ++pos;
    }
    if (start == pos) throw ParseError("expected a natural number", pos);
    return static_cast<std::uint32_t>(v);
  }
  void finish() {
    skip_ws();
    if (pos != text.size()) throw ParseError("trailing characters", pos);
  }
};

}  // namespace

RowPermutation RowPermutation::parse(std::string_view text) {
  Cursor c{text};
  c.expect("[");
  std::vector<std::uint32_t> images;
  if (!c.consume("]")) {
    do {
      images.push_back(c.nat());
    } while (c.consume(","));
    c.expect("]");
  }
  c.finish();
  try {
    return RowPermutation(std::move(images));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

std::string RowPermutation::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(images_[i]);
  }
  return s + "]";
}

// ---------------------------------------------------------------------------
// ColumnMap

ColumnMap::ColumnMap(std::map<std::uint32_t, std::uint32_t> pairs) {
  std::set<std::uint32_t> images;
  for (auto [from, to] : pairs) {
    if (from == 0 || to == 0) throw PreconditionError("column indices must be positive");
    if (!images.insert(to).second) throw PreconditionError("column map is not injective");
    if (from != to) pairs_.emplace(from, to);
  }
}

ColumnMap ColumnMap::from_images(std::span<const std::uint32_t> sources, std::span<const std::uint32_t> targets) {
  if (sources.size() != targets.size()) throw PreconditionError("column map size mismatch");
  std::map<std::uint32_t, std::uint32_t> pairs;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    if (!pairs.emplace(sources[i], targets[i]).second) throw PreconditionError("repeated source column");
  }
  return ColumnMap(std::move(pairs));
}

ColumnMap ColumnMap::parse(std::string_view text) {
  Cursor c{text};
  c.expect("{");
  std::map<std::uint32_t, std::uint32_t> pairs;
  if (!c.consume("}")) {
    do {
      std::uint32_t from = c.nat();
      c.expect("->");
      std::uint32_t to = c.nat();
      if (!pairs.emplace(from, to).second) throw ParseError("repeated source column", c.pos);
    } while (c.consume(","));
    c.expect("}");
  }
  c.finish();
  try {
    return ColumnMap(std::move(pairs));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

std::uint32_t ColumnMap::operator()(std::uint32_t col) const {
  auto it = pairs_.find(col);
  return it == pairs_.end() ? col : it->second;
}

bool ColumnMap::injective_on(std::span<const std::uint32_t> cols) const {
  std::set<std::uint32_t> domain(cols.begin(), cols.end());
  for (const auto& [from, to] : pairs_) domain.insert(from);
  std::set<std::uint32_t> images;
  for (auto c : domain) {
    if (!images.insert((*this)(c)).second) return false;
  }
  return true;
}

ColumnMap ColumnMap::compose(const ColumnMap& inner) const {
  std::map<std::uint32_t, std::uint32_t> pairs;
  std::set<std::uint32_t> inner_images;
  for (const auto& [from, to] : inner.pairs_) {
    pairs.emplace(from, (*this)(to));
    inner_images.insert(to);
  }
  for (const auto& [from, to] : pairs_) {
    if (!inner_images.contains(from) && !inner.pairs_.contains(from)) pairs.emplace(from, to);
  }
  std::erase_if(pairs, [](const auto& kv) { return kv.first == kv.second; });
  return ColumnMap(std::move(pairs));
}

std::string ColumnMap::to_string() const {
  std::string s = "{";
  bool first = true;
  for (const auto& [from, to] : pairs_) {
    if (!first) s += ",";
    first = false;
    s += std::to_string(from) + "->" + std::to_string(to);
  }
  return s + "}";
}

// ---------------------------------------------------------------------------
// Actions

Monomial apply_row(const RowPermutation& tau, const Monomial& m) {
  std::vector<Monomial::Factor> f(m.factors().begin(), m.factors().end());
  for (auto& [v, e] : f) v.row = tau(v.row);
  return Monomial(std::move(f));
}

Monomial apply_column(const ColumnMap& sigma, const Monomial& m) {
  std::vector<Monomial::Factor> f(m.factors().begin(), m.factors().end());
  for (auto& [v, e] : f) v.col = sigma(v.col);
  return Monomial(std::move(f));
}

Polynomial apply_row(const RowPermutation& tau, const Polynomial& f) {
  if (f.kind() == VarKind::T) throw PreconditionError("row action on a t-polynomial");
  if (tau.size() != f.rows()) {
    throw PreconditionError("permutation of size " + std::to_string(tau.size()) + " on " +
                            std::to_string(f.rows()) + " rows");
  }
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({apply_row(tau, t.monomial), t.coeff});
  return Polynomial::from_terms(f.ring(), f.rows(), std::move(terms));
}

Polynomial apply_column(const ColumnMap& sigma, const Polynomial& f) {
  auto cols = f.column_support();
  if (!sigma.injective_on(cols)) {
    throw PreconditionError("column map " + sigma.to_string() + " is not injective on the columns of the input");
  }
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({apply_column(sigma, t.monomial), t.coeff});
  return Polynomial::from_terms(f.ring(), f.rows(), std::move(terms));
}

bool is_symmetric(const Polynomial& f) {
  if (f.kind() == VarKind::T) throw PreconditionError("symmetry test on a t-polynomial");
  for (std::uint32_t i = 1; i < f.rows(); ++i) {
    if (apply_row(RowPermutation::transposition(f.rows(), i, i + 1), f) != f) return false;
  }
  return true;
}

namespace {

using RowProfile = std::vector<std::pair<std::uint32_t, std::uint32_t>>;  // (col, exponent)

std::vector<RowProfile> row_profiles(const Monomial& m, std::uint32_t n) {
  std::vector<RowProfile> profiles(n);
  for (const auto& [v, e] : m.factors()) profiles[v.row - 1].emplace_back(v.col, e);
  return profiles;
}

Monomial from_profiles(const std::vector<RowProfile>& profiles) {
  std::vector<Monomial::Factor> f;
  for (std::size_t r = 0; r < profiles.size(); ++r) {
    for (auto [col, e] : profiles[r]) f.push_back({Variable::x(static_cast<std::uint32_t>(r + 1), col), e});
  }
  return Monomial(std::move(f));
}

void check_x_monomial(const Monomial& m, std::uint32_t n) {
  if (m.kind() == VarKind::T) throw PreconditionError("row orbit of a t-monomial");
  if (n < 1 || n > kMaxRows) throw PreconditionError("row bound outside 1..12");
  if (m.max_row() > n) throw PreconditionError("monomial uses a row beyond the row bound");
}

}  // namespace

std::vector<Monomial> row_orbit(const Monomial& m, std::uint32_t n) {
  check_x_monomial(m, n);
  // Distinct arrangements of the per-row profiles are exactly the orbit.
  auto profiles = row_profiles(m, n);
  std::sort(profiles.begin(), profiles.end());
  std::vector<Monomial> orbit;
  do {
    orbit.push_back(from_profiles(profiles));
  } while (std::next_permutation(profiles.begin(), profiles.end()));
  std::sort(orbit.begin(), orbit.end(),
            [](const Monomial& a, const Monomial& b) { return compare_grevlex(a, b) > 0; });
  return orbit;
}

Polynomial orbit_sum(const CoefficientRing& ring, const Monomial& m, std::uint32_t n) {
  std::vector<Term> terms;
  for (auto& o : row_orbit(m, n)) terms.push_back({std::move(o), 1});
  return Polynomial::from_terms(ring, n, std::move(terms));
}

Polynomial symmetrize(const Polynomial& f) {
  const auto& ring = f.ring();
  if (ring.kind() == RingKind::Integers) throw PreconditionError("symmetrization is undefined over ZZ");
  if (ring.kind() == RingKind::PrimeField && ring.characteristic() <= f.rows()) {
    throw CharacteristicObstruction();
  }
  if (f.kind() == VarKind::T) throw PreconditionError("symmetrization of a t-polynomial");
  // (1/n!) sum_tau tau(m) = orbit_sum(m) / |orbit(m)|, since every orbit
  // element is hit by exactly n!/|orbit| permutations.
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    auto orbit = row_orbit(t.monomial, f.rows());
    Scalar weight = ring.mul(t.coeff, ring.inverse(ring.normalize(Scalar(static_cast<unsigned long>(orbit.size())))));
    for (auto& o : orbit) terms.push_back({std::move(o), weight});
  }
  return Polynomial::from_terms(ring, f.rows(), std::move(terms));
}

}  // namespace symideal
