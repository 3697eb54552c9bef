#include "symideal/equivariant.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>

#include "symideal/errors.hpp"
#include "symideal/families.hpp"
#include "symideal/groebner.hpp"
#include "symideal/linalg.hpp"

namespace symideal {

std::string ambient_name(Ambient ambient) {
  switch (ambient) {
    case Ambient::FullRing:
      return "full";
    case Ambient::SymmetricSubring:
      return "sym";
    case Ambient::L2Subalgebra:
      return "l2";
  }
  return "?";
}

Ambient parse_ambient(std::string_view name) {
  if (name == "full") return Ambient::FullRing;
  if (name == "sym") return Ambient::SymmetricSubring;
  if (name == "l2") return Ambient::L2Subalgebra;
  throw ParseError("unknown ambient '" + std::string(name) + "' (expected full|sym|l2)");
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Member:
      return "member";
    case Verdict::NotMember:
      return "not_member";
    case Verdict::Undecided:
      return "undecided";
  }
  return "?";
}

std::string oracle_name(OracleKind o) { return o == OracleKind::Groebner ? "groebner" : "multigraded"; }

namespace {

// Splits f into its multihomogeneous components.
std::map<MultiDegree, Polynomial> multihomogeneous_parts(const Polynomial& f) {
  std::map<MultiDegree, std::vector<Term>> grouped;
  for (const auto& t : f.terms()) grouped[multidegree(t.monomial)].push_back(t);
  std::map<MultiDegree, Polynomial> out;
  for (auto& [d, terms] : grouped) out.emplace(d, Polynomial::from_terms(f.ring(), f.rows(), std::move(terms)));
  return out;
}

bool in_l2(const Polynomial& f) {
  if (f.rows() != 2 || f.kind() == VarKind::T) return false;
  if (!f.ring().is_field()) throw PreconditionError("L_2 membership test requires field coefficients");
  for (const auto& [d, part] : multihomogeneous_parts(f)) {
    auto span = l2_component_span(f.ring(), d);
    if (!solve_in_span(span, part)) return false;
  }
  return true;
}

// Visits every injection sources -> targets (ascending targets, lexicographic
// in the image tuple) whose pairs satisfy `allowed`.
void for_each_injection(const std::vector<std::uint32_t>& sources, const std::vector<std::uint32_t>& targets,
                        const std::function<bool(std::uint32_t, std::uint32_t)>& allowed,
                        const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
  std::vector<std::uint32_t> images;
  std::vector<bool> used(targets.size(), false);
  std::function<void()> rec = [&]() {
    if (images.size() == sources.size()) {
      visit(images);
      return;
    }
    std::uint32_t src = sources[images.size()];
    for (std::size_t t = 0; t < targets.size(); ++t) {
      if (used[t] || !allowed(src, targets[t])) continue;
      used[t] = true;
      images.push_back(targets[t]);
      rec();
      images.pop_back();
      used[t] = false;
    }
  };
  rec();
}

void check_target(const Polynomial& f, const EquivariantIdealSpec& spec) {
  if (!(f.ring() == spec.ring) || f.rows() != spec.rows) {
    throw PreconditionError("target ring or row bound differs from the ideal's");
  }
  if (f.kind() == VarKind::T) throw PreconditionError("membership target must be an x-polynomial");
}

MembershipCertificate certificate_from_cofactors(const Polynomial& f, const std::vector<OrbitImage>& images,
                                                 const std::vector<Polynomial>& cofactors) {
  MembershipCertificate cert{f, {}};
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (cofactors[i].is_zero()) continue;
    cert.terms.push_back({images[i].sigma, images[i].generator, cofactors[i]});
  }
  return cert;
}

void assert_certificate(const MembershipCertificate& cert, const EquivariantIdealSpec& spec) {
  auto check = verify_certificate(cert, spec);
  if (!check) throw std::logic_error("internal certificate failed verification: " + check.diagnostic);
}

// Solves f = sum_c x_c * columns[c] where column c = images[owner[c]] * basis[c];
// returns the certificate or nullopt.
std::optional<MembershipCertificate> solve_for_certificate(const Polynomial& f, const std::vector<OrbitImage>& images,
                                                           const std::vector<Polynomial>& columns,
                                                           const std::vector<std::size_t>& owner,
                                                           const std::vector<Polynomial>& basis) {
  auto solution = solve_in_span(columns, f);
  if (!solution) return std::nullopt;
  std::vector<Polynomial> cofactors(images.size(), Polynomial(f.ring(), f.rows()));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if ((*solution)[c] == 0) continue;
    cofactors[owner[c]] = cofactors[owner[c]] + basis[c].scaled((*solution)[c]);
  }
  return certificate_from_cofactors(f, images, cofactors);
}

// Every multidegree with support in {1..width} and total degree `total`.
std::vector<MultiDegree> multidegrees_of_total(std::uint32_t width, std::uint64_t total) {
  std::vector<MultiDegree> out;
  std::vector<std::uint32_t> cur(width, 0);
  std::function<void(std::uint32_t, std::uint64_t)> rec = [&](std::uint32_t pos, std::uint64_t left) {
    if (pos + 1 == width) {
      cur[pos] = static_cast<std::uint32_t>(left);
      out.emplace_back(cur);
      return;
    }
    for (std::uint64_t e = 0; e <= left; ++e) {
      cur[pos] = static_cast<std::uint32_t>(e);
      rec(pos + 1, left - e);
    }
  };
  if (width == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  rec(0, total);
  return out;
}

}  // namespace

bool in_ambient(const Polynomial& f, Ambient ambient) {
  switch (ambient) {
    case Ambient::FullRing:
      return true;
    case Ambient::SymmetricSubring:
      return is_symmetric(f);
    case Ambient::L2Subalgebra:
      return in_l2(f);
  }
  return false;
}

std::vector<Polynomial> ambient_component(Ambient ambient, const CoefficientRing& ring, std::uint32_t rows,
                                          const MultiDegree& d) {
  switch (ambient) {
    case Ambient::FullRing: {
      std::vector<Polynomial> out;
      for (auto& m : component_monomials(rows, d)) out.push_back(Polynomial::monomial(ring, rows, std::move(m)));
      return out;
    }
    case Ambient::SymmetricSubring:
      return symmetric_component_basis(ring, rows, d);
    case Ambient::L2Subalgebra:
      if (rows != 2) throw PreconditionError("L_2 requires two rows");
      return l2_component_span(ring, d);
  }
  return {};
}

EquivariantIdealSpec make_ideal_spec(const CoefficientRing& ring, std::uint32_t rows, Ambient ambient,
                                     std::vector<Polynomial> generators) {
  if (ambient == Ambient::L2Subalgebra && rows != 2) throw PreconditionError("L_2 ambient requires rows = 2");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& g = generators[i];
    if (!(g.ring() == ring) || g.rows() != rows) {
      throw PreconditionError("generator " + std::to_string(i) + " has a different ring or row bound");
    }
    if (g.kind() == VarKind::T) throw PreconditionError("generator " + std::to_string(i) + " is a t-polynomial");
    if (!in_ambient(g, ambient)) {
      throw PreconditionError("generator " + std::to_string(i) + " is not in the " + ambient_name(ambient) +
                              " ambient algebra");
    }
  }
  return {ring, rows, ambient, std::move(generators)};
}

Polynomial evaluate_certificate(const MembershipCertificate& cert, const EquivariantIdealSpec& spec) {
  Polynomial sum(spec.ring, spec.rows);
  for (const auto& term : cert.terms) {
    if (term.generator >= spec.generators.size()) throw PreconditionError("generator index out of range");
    sum = sum + apply_column(term.sigma, spec.generators[term.generator]) * term.cofactor;
  }
  return sum;
}

std::vector<OrbitImage> expand_truncated(const EquivariantIdealSpec& spec, std::uint32_t width) {
  std::vector<OrbitImage> out;
  std::vector<std::uint32_t> targets(width);
  for (std::uint32_t j = 0; j < width; ++j) targets[j] = j + 1;
  for (std::size_t gi = 0; gi < spec.generators.size(); ++gi) {
    const auto& g = spec.generators[gi];
    if (g.is_zero()) continue;
    auto support = g.column_support();
    if (support.size() > width) {
      throw PreconditionError("width " + std::to_string(width) + " is smaller than the column support of generator " +
                              std::to_string(gi));
    }
    for_each_injection(
        support, targets, [](std::uint32_t, std::uint32_t) { return true; },
        [&](const std::vector<std::uint32_t>& images) {
          auto sigma = ColumnMap::from_images(support, images);
          Polynomial image = apply_column(sigma, g);
          bool seen = std::any_of(out.begin(), out.end(), [&](const OrbitImage& o) { return o.image == image; });
          if (!seen) out.push_back({std::move(sigma), gi, std::move(image)});
        });
  }
  return out;
}

MembershipVerdict member_truncated(const Polynomial& f, const EquivariantIdealSpec& spec, std::uint32_t width,
                                   std::uint64_t degree_bound) {
  check_target(f, spec);
  if (!spec.ring.is_field()) throw PreconditionError("truncated membership requires field coefficients");
  if (width < 1 || width > kMaxTruncationWidth) {
    throw PreconditionError("width outside 1.." + std::to_string(kMaxTruncationWidth));
  }
  if (degree_bound > kMaxDegreeBound) {
    throw PreconditionError("degree bound above " + std::to_string(kMaxDegreeBound));
  }
  if (f.max_col() > width) throw PreconditionError("target uses columns beyond the truncation width");

  MembershipVerdict verdict;
  verdict.oracle = OracleKind::Groebner;
  verdict.width = width;
  verdict.degree_bound = degree_bound;
  if (f.is_zero()) {
    verdict.status = Verdict::Member;
    verdict.certificate = MembershipCertificate{f, {}};
    return verdict;
  }
  auto images = expand_truncated(spec, width);
  verdict.orbit_images = images.size();
  if (images.empty()) return verdict;

  std::vector<Polynomial> image_polys;
  for (const auto& im : images) image_polys.push_back(im.image);
  // The ambient ideal is contained in the full-ring ideal, so failure here settles this truncation.
  auto full = ideal_member(f, image_polys);
  if (!full.member) return verdict;

  const bool invertible_order =
      spec.ring.kind() == RingKind::Rationals || spec.ring.characteristic() > spec.rows;
  if (spec.ambient == Ambient::FullRing) {
    verdict.certificate = certificate_from_cofactors(f, images, full.cofactors);
  } else if (spec.ambient == Ambient::SymmetricSubring && invertible_order) {
    if (!is_symmetric(f)) return verdict;
    verdict.certificate = retract_certificate(certificate_from_cofactors(f, images, full.cofactors), spec);
  } else {
    // degree-capped search for cofactors inside the ambient algebra
    if (f.total_degree() > degree_bound) return verdict;
    bool graded = f.is_homogeneous() && std::all_of(image_polys.begin(), image_polys.end(),
                                                    [](const Polynomial& p) { return p.is_homogeneous(); });
    // graded inputs only need products of exactly deg(f)
    const std::uint64_t cap = graded ? f.total_degree() : degree_bound;
    std::vector<Polynomial> columns;
    std::vector<Polynomial> basis;
    std::vector<std::size_t> owner;
    for (std::size_t i = 0; i < images.size(); ++i) {
      const auto& im = images[i].image;
      const std::uint64_t dg = im.total_degree();
      if (dg > cap) continue;
      for (std::uint64_t c = graded ? cap - dg : 0; c + dg <= cap; ++c) {
        for (const auto& d : multidegrees_of_total(width, c)) {
          for (auto& b : ambient_component(spec.ambient, spec.ring, spec.rows, d)) {
            columns.push_back(im * b);
            basis.push_back(std::move(b));
            owner.push_back(i);
          }
        }
      }
    }
    verdict.candidates = columns.size();
    auto cert = solve_for_certificate(f, images, columns, owner, basis);
    if (!cert) return verdict;
    verdict.certificate = std::move(cert);
  }
  assert_certificate(*verdict.certificate, spec);
  verdict.status = Verdict::Member;
  return verdict;
}

MembershipVerdict member_multigraded(const Polynomial& f, const EquivariantIdealSpec& spec) {
  check_target(f, spec);
  if (spec.ambient == Ambient::FullRing) {
    throw PreconditionError("multigraded oracle supports the symmetric subring and L_2 only");
  }
  if (!spec.ring.is_field()) throw PreconditionError("multigraded membership requires field coefficients");
  MembershipVerdict verdict;
  verdict.oracle = OracleKind::Multigraded;
  if (f.is_zero()) {
    verdict.status = Verdict::Member;
    verdict.certificate = MembershipCertificate{f, {}};
    return verdict;
  }
  auto target_degree = f.common_multidegree();
  if (!target_degree) throw PreconditionError("target is not multihomogeneous");
  const MultiDegree& d = *target_degree;
  verdict.width = static_cast<std::uint32_t>(d.width());
  verdict.degree_bound = d.total();
  const auto target_support = d.support();

  std::vector<OrbitImage> images;
  std::vector<Polynomial> columns;
  std::vector<Polynomial> basis;
  std::vector<std::size_t> owner;
  for (std::size_t gi = 0; gi < spec.generators.size(); ++gi) {
    const auto& g = spec.generators[gi];
    if (g.is_zero()) continue;
    auto gd = g.common_multidegree();
    if (!gd) throw PreconditionError("generator " + std::to_string(gi) + " is not multihomogeneous");
    auto support = gd->support();
    for_each_injection(
        support, target_support,
        [&](std::uint32_t src, std::uint32_t dst) { return gd->at(src) <= d.at(dst); },
        [&](const std::vector<std::uint32_t>& targets) {
          auto sigma = ColumnMap::from_images(support, targets);
          Polynomial image = apply_column(sigma, g);
          if (std::any_of(images.begin(), images.end(), [&](const OrbitImage& o) { return o.image == image; })) {
            return;
          }
          MultiDegree complement = d - *image.common_multidegree();
          for (auto& b : ambient_component(spec.ambient, spec.ring, spec.rows, complement)) {
            columns.push_back(image * b);
            basis.push_back(std::move(b));
            owner.push_back(images.size());
          }
          images.push_back({std::move(sigma), gi, std::move(image)});
        });
  }
  verdict.orbit_images = images.size();
  verdict.candidates = columns.size();
  auto cert = solve_for_certificate(f, images, columns, owner, basis);
  if (!cert) {
    verdict.status = Verdict::NotMember;
    return verdict;
  }
  assert_certificate(*cert, spec);
  verdict.status = Verdict::Member;
  verdict.certificate = std::move(cert);
  return verdict;
}

MembershipCertificate retract_certificate(const MembershipCertificate& cert, const EquivariantIdealSpec& spec) {
  if (spec.ring.kind() == RingKind::Integers) throw PreconditionError("retraction is undefined over ZZ");
  if (spec.ring.kind() == RingKind::PrimeField && spec.ring.characteristic() <= spec.rows) {
    throw CharacteristicObstruction();
  }
  if (!is_symmetric(cert.target)) throw PreconditionError("retraction requires a symmetric target");
  for (const auto& term : cert.terms) {
    if (term.generator >= spec.generators.size()) throw PreconditionError("generator index out of range");
    if (!is_symmetric(spec.generators[term.generator])) {
      throw PreconditionError("retraction requires symmetric generators");
    }
  }
  if (evaluate_certificate(cert, spec) != cert.target) throw PreconditionError("invalid input certificate");

  MembershipCertificate out{cert.target, {}};
  for (const auto& term : cert.terms) {
    Polynomial sym = symmetrize(term.cofactor);
    auto it = std::find_if(out.terms.begin(), out.terms.end(), [&](const CertificateTerm& t) {
      return t.generator == term.generator && t.sigma == term.sigma;
    });
    if (it == out.terms.end()) {
      out.terms.push_back({term.sigma, term.generator, std::move(sym)});
    } else {
      it->cofactor = it->cofactor + sym;
    }
  }
  std::erase_if(out.terms, [](const CertificateTerm& t) { return t.cofactor.is_zero(); });

  EquivariantIdealSpec sym_spec = spec;
  sym_spec.ambient = Ambient::SymmetricSubring;
  assert_certificate(out, sym_spec);
  return out;
}

CertificateCheck verify_certificate(const MembershipCertificate& cert, const EquivariantIdealSpec& spec) {
  if (!(cert.target.ring() == spec.ring) || cert.target.rows() != spec.rows) {
    return {false, "target ring or row bound differs from the ideal's"};
  }
  Polynomial sum(spec.ring, spec.rows);
  for (std::size_t s = 0; s < cert.terms.size(); ++s) {
    const auto& term = cert.terms[s];
    if (term.generator >= spec.generators.size()) {
      return {false, "term " + std::to_string(s) + ": generator index out of range"};
    }
    if (!(term.cofactor.ring() == spec.ring) || term.cofactor.rows() != spec.rows ||
        term.cofactor.kind() == VarKind::T) {
      return {false, "term " + std::to_string(s) + ": cofactor has the wrong ring or shape"};
    }
    const auto& g = spec.generators[term.generator];
    auto cols = g.column_support();
    if (!term.sigma.injective_on(cols)) {
      return {false, "term " + std::to_string(s) + ": column map is not injective on the generator"};
    }
    sum = sum + apply_column(term.sigma, g) * term.cofactor;
  }
  if (sum != cert.target) return {false, "identity mismatch"};
  for (std::size_t s = 0; s < cert.terms.size(); ++s) {
    if (!in_ambient(cert.terms[s].cofactor, spec.ambient)) {
      return {false, "ambient violation: cofactor of term " + std::to_string(s) + " is not in the " +
                         ambient_name(spec.ambient) + " algebra"};
    }
  }
  return {true, "ok"};
}

ScanReport stabilization_scan(ScanFamily family, const CoefficientRing& ring, std::uint32_t rows,
                              std::uint32_t k_from, std::uint32_t k_to) {
  if (!ring.is_field()) throw PreconditionError("scan requires field coefficients");
  if (k_from > k_to) throw PreconditionError("empty k range");
  const std::uint32_t first = family == ScanFamily::H ? 1 : 3;
  if (k_from < first) throw PreconditionError("k range starts below the family's first index");
  if (family == ScanFamily::Cycle && rows != 2) throw PreconditionError("cycle family lives on two rows");
  auto member = [&](std::uint32_t k) {
    return family == ScanFamily::H ? h_family(ring, rows, k) : cycle_product(ring, k);
  };
  const Ambient ambient = family == ScanFamily::H ? Ambient::SymmetricSubring : Ambient::L2Subalgebra;

  ScanReport report{family, ring, rows, {}};
  for (std::uint32_t k = k_from; k <= k_to; ++k) {
    auto start = std::chrono::steady_clock::now();
    std::vector<Polynomial> gens;
    for (std::uint32_t l = first; l < k; ++l) gens.push_back(member(l));
    EquivariantIdealSpec spec{ring, rows, ambient, std::move(gens)};
    auto verdict = member_multigraded(member(k), spec);
    ScanEntry entry;
    entry.k = k;
    entry.verdict = verdict.status;
    if (verdict.certificate) {
      entry.certificate_terms = verdict.certificate->terms.size();
      entry.certificate_verified = static_cast<bool>(verify_certificate(*verdict.certificate, spec));
    }
    entry.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report.entries.push_back(entry);
  }
  return report;
}

}  // namespace symideal
