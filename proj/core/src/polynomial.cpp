#include "symideal/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "symideal/errors.hpp"

namespace symideal {

std::string Variable::to_string() const {
  if (kind == VarKind::T) return "t[" + std::to_string(col) + "]";
  return "x[" + std::to_string(row) + "," + std::to_string(col) + "]";
}

// ---------------------------------------------------------------------------
// MultiDegree

MultiDegree::MultiDegree(std::vector<std::uint32_t> degrees) : degrees_(std::move(degrees)) { trim(); }

void MultiDegree::trim() {
  while (!degrees_.empty() && degrees_.back() == 0) degrees_.pop_back();
}

std::uint32_t MultiDegree::at(std::uint32_t col) const {
  if (col == 0 || col > degrees_.size()) return 0;
  return degrees_[col - 1];
}

std::uint64_t MultiDegree::total() const {
  std::uint64_t s = 0;
  for (auto d : degrees_) s += d;
  return s;
}

std::vector<std::uint32_t> MultiDegree::support() const {
  std::vector<std::uint32_t> cols;
  for (std::size_t j = 0; j < degrees_.size(); ++j) {
    if (degrees_[j] != 0) cols.push_back(static_cast<std::uint32_t>(j + 1));
  }
  return cols;
}

bool MultiDegree::fits_in(const MultiDegree& other) const {
  if (degrees_.size() > other.degrees_.size()) return false;
  for (std::size_t j = 0; j < degrees_.size(); ++j) {
    if (degrees_[j] > other.degrees_[j]) return false;
  }
  return true;
}

MultiDegree MultiDegree::operator+(const MultiDegree& other) const {
  std::vector<std::uint32_t> out(std::max(degrees_.size(), other.degrees_.size()), 0);
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] = at(static_cast<std::uint32_t>(j + 1)) + other.at(static_cast<std::uint32_t>(j + 1));
  }
  return MultiDegree(std::move(out));
}

MultiDegree MultiDegree::operator-(const MultiDegree& other) const {
  if (!other.fits_in(*this)) {
    throw PreconditionError("multidegree " + other.to_string() + " does not fit in " + to_string());
  }
  std::vector<std::uint32_t> out(degrees_);
  for (std::size_t j = 0; j < other.degrees_.size(); ++j) out[j] -= other.degrees_[j];
  return MultiDegree(std::move(out));
}

std::string MultiDegree::to_string() const {
  std::string s = "(";
  for (std::size_t j = 0; j < degrees_.size(); ++j) {
    if (j) s += ",";
    s += std::to_string(degrees_[j]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  for (auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!factors_.empty() && factors_.back().first == v) {
      factors_.back().second += e;
    } else {
      if (!factors_.empty() && factors_.front().first.kind != v.kind) {
        throw PreconditionError("mixed x and t variables in one monomial");
      }
      factors_.emplace_back(v, e);
    }
    degree_ += e;
  }
}

Monomial Monomial::of(Variable v, std::uint32_t exponent) { return Monomial({{v, exponent}}); }

std::optional<VarKind> Monomial::kind() const {
  if (factors_.empty()) return std::nullopt;
  return factors_.front().first.kind;
}

std::uint32_t Monomial::exponent(const Variable& v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, const Variable& x) { return f.first < x; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

std::uint32_t Monomial::max_row() const {
  std::uint32_t r = 0;
  for (const auto& f : factors_) r = std::max(r, f.first.row);
  return r;
}

std::uint32_t Monomial::max_col() const { return factors_.empty() ? 0 : factors_.back().first.col; }

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  auto it = other.factors_.begin();
  for (const auto& [v, e] : factors_) {
    while (it != other.factors_.end() && it->first < v) ++it;
    if (it == other.factors_.end() || !(it->first == v) || it->second < e) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial out;
  auto it = divisor.factors_.begin();
  for (const auto& [v, e] : factors_) {
    std::uint32_t sub = 0;
    if (it != divisor.factors_.end() && it->first == v) {
      sub = it->second;
      ++it;
    }
    if (e > sub) {
      out.factors_.emplace_back(v, e - sub);
      out.degree_ += e - sub;
    }
  }
  return out;
}

namespace {

template <class Combine>
Monomial merge_factors(const Monomial& a, const Monomial& b, Combine combine) {
  std::vector<Monomial::Factor> out;
  auto fa = a.factors();
  auto fb = b.factors();
  std::size_t i = 0, j = 0;
  while (i < fa.size() || j < fb.size()) {
    if (j == fb.size() || (i < fa.size() && fa[i].first < fb[j].first)) {
      out.emplace_back(fa[i].first, combine(fa[i].second, 0u));
      ++i;
    } else if (i == fa.size() || fb[j].first < fa[i].first) {
      out.emplace_back(fb[j].first, combine(0u, fb[j].second));
      ++j;
    } else {
      out.emplace_back(fa[i].first, combine(fa[i].second, fb[j].second));
      ++i;
      ++j;
    }
  }
  return Monomial(std::move(out));
}

}  // namespace

Monomial Monomial::lcm(const Monomial& other) const {
  return merge_factors(*this, other, [](std::uint32_t x, std::uint32_t y) { return std::max(x, y); });
}

bool Monomial::coprime(const Monomial& other) const {
  auto it = other.factors_.begin();
  for (const auto& f : factors_) {
    while (it != other.factors_.end() && it->first < f.first) ++it;
    if (it != other.factors_.end() && it->first == f.first) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.is_one()) return *this;
  if (is_one()) return other;
  return merge_factors(*this, other, [](std::uint32_t x, std::uint32_t y) { return x + y; });
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : factors_) {
    if (!s.empty()) s += "*";
    s += v.to_string();
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string order_name(MonomialOrder order) {
  switch (order) {
    case MonomialOrder::GrevLex:
      return "grevlex";
  }
  return "?";
}

std::strong_ordering compare_grevlex(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  auto fa = a.factors();
  auto fb = b.factors();
  auto ia = fa.rbegin();
  auto ib = fb.rbegin();
  while (ia != fa.rend() && ib != fb.rend()) {
    if (ia->first == ib->first) {
      // the smaller exponent in the last differing variable wins
      if (ia->second != ib->second) return ib->second <=> ia->second;
      ++ia;
      ++ib;
    } else if (ib->first < ia->first) {
      return std::strong_ordering::less;
    } else {
      return std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (a.kind() && b.kind() && *a.kind() != *b.kind()) {
    throw PreconditionError("cannot compare x- and t-monomials");
  }
  switch (order) {
    case MonomialOrder::GrevLex:
      return compare_grevlex(a, b);
  }
  return std::strong_ordering::equal;
}

MultiDegree multidegree(const Monomial& m) {
  if (m.kind() == VarKind::T) throw PreconditionError("multidegree of a t-monomial");
  std::vector<std::uint32_t> d(m.max_col(), 0);
  for (const auto& [v, e] : m.factors()) d[v.col - 1] += e;
  return MultiDegree(std::move(d));
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

void check_rows(std::uint32_t rows) {
  if (rows < 1 || rows > kMaxRows) {
    throw PreconditionError("row bound " + std::to_string(rows) + " outside 1.." +
                            std::to_string(kMaxRows));
  }
}

bool descending(const Term& a, const Term& b) { return compare_grevlex(a.monomial, b.monomial) > 0; }

}  // namespace

Polynomial::Polynomial(CoefficientRing ring, std::uint32_t rows) : ring_(ring), rows_(rows) {
  check_rows(rows);
}

Polynomial Polynomial::constant(CoefficientRing ring, std::uint32_t rows, const Scalar& c) {
  return monomial(ring, rows, Monomial(), c);
}

Polynomial Polynomial::monomial(CoefficientRing ring, std::uint32_t rows, Monomial m, const Scalar& c) {
  std::vector<Term> terms;
  terms.push_back({std::move(m), c});
  return from_terms(ring, rows, std::move(terms));
}

Polynomial Polynomial::variable(CoefficientRing ring, std::uint32_t rows, Variable v) {
  return monomial(ring, rows, Monomial::of(v), 1);
}

Polynomial Polynomial::from_terms(CoefficientRing ring, std::uint32_t rows, std::vector<Term> terms) {
  Polynomial out(ring, rows);
  for (const auto& t : terms) {
    for (const auto& [v, e] : t.monomial.factors()) {
      if (v.col == 0) throw PreconditionError("column index must be positive");
      if (v.kind == VarKind::X && (v.row == 0 || v.row > rows)) {
        throw PreconditionError("row index " + std::to_string(v.row) + " outside 1.." +
                                std::to_string(rows));
      }
    }
  }
  std::sort(terms.begin(), terms.end(), descending);
  out.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().monomial == t.monomial) {
      out.terms_.back().coeff += t.coeff;
    } else {
      if (!out.terms_.empty()) {
        auto& back = out.terms_.back();
        back.coeff = ring.normalize(back.coeff);
        if (back.coeff == 0) out.terms_.pop_back();
      }
      out.terms_.push_back(std::move(t));
    }
  }
  if (!out.terms_.empty()) {
    auto& back = out.terms_.back();
    back.coeff = ring.normalize(back.coeff);
    if (back.coeff == 0) out.terms_.pop_back();
  }
  out.set_kind_from_terms();
  return out;
}

void Polynomial::set_kind_from_terms() {
  kind_.reset();
  for (const auto& t : terms_) {
    auto k = t.monomial.kind();
    if (!k) continue;
    if (kind_ && *kind_ != *k) throw PreconditionError("mixed x and t variables in one polynomial");
    kind_ = k;
  }
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw PreconditionError("leading term of the zero polynomial");
  return terms_.front();
}

Scalar Polynomial::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& x) {
    return compare_grevlex(t.monomial, x) > 0;
  });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  }
  return true;
}

std::optional<MultiDegree> Polynomial::common_multidegree() const {
  if (terms_.empty() || kind_ == VarKind::T) return std::nullopt;
  MultiDegree d = multidegree(terms_.front().monomial);
  for (const auto& t : terms_) {
    if (multidegree(t.monomial) != d) return std::nullopt;
  }
  return d;
}

std::uint32_t Polynomial::max_col() const {
  std::uint32_t c = 0;
  for (const auto& t : terms_) c = std::max(c, t.monomial.max_col());
  return c;
}

std::vector<std::uint32_t> Polynomial::column_support() const {
  std::vector<std::uint32_t> cols;
  for (const auto& t : terms_) {
    for (const auto& [v, e] : t.monomial.factors()) cols.push_back(v.col);
  }
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  return cols;
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (!(ring_ == other.ring_)) {
    throw PreconditionError("ring mismatch: " + ring_.name() + " vs " + other.ring_.name());
  }
  if (rows_ != other.rows_) {
    throw PreconditionError("row-bound mismatch: " + std::to_string(rows_) + " vs " +
                            std::to_string(other.rows_));
  }
  if (kind_ && other.kind_ && *kind_ != *other.kind_) {
    throw PreconditionError("mixed x and t variables in one polynomial");
  }
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  return sub_mul_term(ring_.neg(1), Monomial(), other);
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  return sub_mul_term(Scalar(1), Monomial(), other);
}

Polynomial Polynomial::operator-() const { return scaled(ring_.neg(1)); }

Polynomial Polynomial::scaled(const Scalar& c) const { return mul_term(c, Monomial()); }

Polynomial Polynomial::mul_term(const Scalar& c, const Monomial& m) const {
  Polynomial out(ring_, rows_);
  Scalar cn = ring_.normalize(c);
  if (cn == 0) return out;
  if (m.kind() && kind_ && *m.kind() != *kind_) {
    throw PreconditionError("mixed x and t variables in one polynomial");
  }
  if (m.kind() == VarKind::X && m.max_row() > rows_) {
    throw PreconditionError("row index outside the row bound");
  }
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Scalar prod = ring_.mul(t.coeff, cn);
    // a prime-field product of nonzero values is nonzero; ZZ/QQ are domains
    out.terms_.push_back({t.monomial * m, std::move(prod)});
  }
  out.set_kind_from_terms();
  return out;
}

Polynomial Polynomial::sub_mul_term(const Scalar& c, const Monomial& m, const Polynomial& g) const {
  check_compatible(g);
  if (m.kind() && kind_ && *m.kind() != *kind_) {
    throw PreconditionError("mixed x and t variables in one polynomial");
  }
  Polynomial out(ring_, rows_);
  Scalar cn = ring_.normalize(c);
  if (cn == 0 || g.is_zero()) {
    out.terms_ = terms_;
    out.kind_ = kind_;
    return out;
  }
  out.terms_.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j == g.terms_.size()) {
      out.terms_.push_back(terms_[i++]);
      continue;
    }
    Monomial gm = g.terms_[j].monomial * m;
    if (i == terms_.size()) {
      out.terms_.push_back({std::move(gm), ring_.neg(ring_.mul(cn, g.terms_[j].coeff))});
      ++j;
      continue;
    }
    auto cmp = compare_grevlex(terms_[i].monomial, gm);
    if (cmp > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      out.terms_.push_back({std::move(gm), ring_.neg(ring_.mul(cn, g.terms_[j].coeff))});
      ++j;
    } else {
      Scalar s = ring_.sub(terms_[i].coeff, ring_.mul(cn, g.terms_[j].coeff));
      if (s != 0) out.terms_.push_back({std::move(gm), std::move(s)});
      ++i;
      ++j;
    }
  }
  if (m.kind() == VarKind::X && m.max_row() > rows_) {
    throw PreconditionError("row index outside the row bound");
  }
  out.set_kind_from_terms();
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_compatible(other);
  if (is_zero() || other.is_zero()) return Polynomial(ring_, rows_);
  if (other.size() == 1) return mul_term(other.terms_[0].coeff, other.terms_[0].monomial);
  if (size() == 1) return other.mul_term(terms_[0].coeff, terms_[0].monomial);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) {
      prod.push_back({a.monomial * b.monomial, ring_.mul(a.coeff, b.coeff)});
    }
  }
  return from_terms(ring_, rows_, std::move(prod));
}

Polynomial Polynomial::tail() const {
  Polynomial out(ring_, rows_);
  if (terms_.size() > 1) out.terms_.assign(terms_.begin() + 1, terms_.end());
  out.set_kind_from_terms();
  return out;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_.inverse(leading_coeff()));
}

std::string Polynomial::to_string() const { return format_polynomial(*this); }

Polynomial add(const Polynomial& f, const Polynomial& g) { return f + g; }
Polynomial mul(const Polynomial& f, const Polynomial& g) { return f * g; }

// ---------------------------------------------------------------------------
// Grammar

namespace {

class Parser {
 public:
  Parser(std::string_view text, const CoefficientRing& ring, std::uint32_t rows)
      : text_(text), ring_(ring), rows_(rows) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    terms.push_back(parse_term(negative));
    while (true) {
      skip_ws();
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        terms.push_back(parse_term(c == '-'));
      } else {
        break;
      }
    }
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return Polynomial::from_terms(ring_, rows_, std::move(terms));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  mpz_class parse_nat() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a natural number");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  std::uint32_t parse_index() {
    std::size_t start = pos_;
    mpz_class v = parse_nat();
    if (v > std::numeric_limits<std::uint32_t>::max()) {
      pos_ = start;
      fail("index too large");
    }
    return static_cast<std::uint32_t>(v.get_ui());
  }

  Term parse_term(bool negative) {
    skip_ws();
    Scalar coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mpz_class num = parse_nat();
      mpz_class den = 1;
      skip_ws();
      if (peek() == '/') {
        if (ring_.kind() != RingKind::Rationals) fail("denominator in a non-rational ring");
        ++pos_;
        den = parse_nat();
        if (den == 0) fail("zero denominator");
      }
      coeff = Scalar(num, den);
      coeff.canonicalize();
      have_coeff = true;
      skip_ws();
      if (peek() != '*') {
        return {Monomial(), negative ? Scalar(-coeff) : coeff};
      }
      ++pos_;
    }
    std::vector<Monomial::Factor> factors;
    factors.push_back(parse_factor());
    while (true) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      factors.push_back(parse_factor());
    }
    (void)have_coeff;
    return {Monomial(std::move(factors)), negative ? Scalar(-coeff) : coeff};
  }

  Monomial::Factor parse_factor() {
    skip_ws();
    std::size_t start = pos_;
    char c = peek();
    Variable v;
    if (c == 'x') {
      ++pos_;
      expect('[');
      std::uint32_t row = parse_index();
      expect(',');
      std::uint32_t col = parse_index();
      expect(']');
      if (row == 0 || row > rows_) {
        pos_ = start;
        fail("row index " + std::to_string(row) + " outside 1.." + std::to_string(rows_));
      }
      if (col == 0) {
        pos_ = start;
        fail("column index must be positive");
      }
      v = Variable::x(row, col);
    } else if (c == 't') {
      ++pos_;
      expect('[');
      std::uint32_t col = parse_index();
      expect(']');
      if (col == 0) {
        pos_ = start;
        fail("column index must be positive");
      }
      v = Variable::t(col);
    } else {
      fail("expected a variable");
    }
    if (kind_ && *kind_ != v.kind) {
      pos_ = start;
      fail("mixed x and t variables");
    }
    kind_ = v.kind;
    std::uint32_t e = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      e = parse_index();
    }
    return {v, e};
  }

  std::string_view text_;
  const CoefficientRing& ring_;
  std::uint32_t rows_;
  std::size_t pos_ = 0;
  std::optional<VarKind> kind_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const CoefficientRing& ring, std::uint32_t rows) {
  check_rows(rows);
  return Parser(text, ring, rows).parse();
}

std::string format_polynomial(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : f.terms()) {
    Scalar a = t.coeff;
    if (a < 0) {
      s += "-";
      a = -a;
    } else if (!first) {
      s += "+";
    }
    first = false;
    if (t.monomial.is_one()) {
      s += a.get_str();
    } else {
      if (a != 1) s += a.get_str() + "*";
      s += t.monomial.to_string();
    }
  }
  return s;
}

Valuation valuation_p(const Polynomial& f, std::uint32_t p) {
  if (f.ring().kind() != RingKind::Integers) throw PreconditionError("valuation requires ZZ coefficients");
  if (p < 2) throw PreconditionError("valuation base must be at least 2");
  if (f.is_zero()) return Valuation::infinity();
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  mpz_class base(p);
  for (const auto& t : f.terms()) {
    mpz_class rest;
    mpz_class num = t.coeff.get_num();
    auto e = mpz_remove(rest.get_mpz_t(), num.get_mpz_t(), base.get_mpz_t());
    best = std::min<std::uint64_t>(best, e);
  }
  return Valuation(best);
}

}  // namespace symideal
