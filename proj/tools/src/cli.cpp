#include "symideal_cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "symideal/symideal.hpp"

namespace symideal::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string ring = "rat";
  std::uint64_t p = 0;
  std::uint32_t rows = 2;
  std::uint32_t width = 0;
  std::int64_t deg = -1;
  std::string out = "text";
  std::uint64_t seed = 0;
  std::uint32_t k = 0;
  std::uint32_t kmax = 0;
  std::uint32_t l = 0;
  std::vector<std::string> gens;
  std::string ambient = "sym";
  std::string cert_out;
  bool timings = false;

  std::string kind;
  std::vector<std::string> operands;
  std::string perm;
  std::string map;
  std::vector<std::uint32_t> cols;
  std::uint32_t to_rows = 0;
  std::string family = "h";
  bool synthetic = false;
};

class Stopwatch {
 public:
  explicit Stopwatch(bool enabled) : enabled_(enabled), start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    if (!enabled_) return 0;
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point start_;
};

bool json_out(const Config& cfg) { return cfg.out == "json"; }

CoefficientRing make_ring(const Config& cfg) {
  if (cfg.ring == "int") return CoefficientRing::integers();
  if (cfg.ring == "rat") return CoefficientRing::rationals();
  if (cfg.p == 0) throw UsageError("--ring gf requires --p");
  if (!is_prime(cfg.p)) throw UsageError("--p must be prime");
  return CoefficientRing::prime_field(cfg.p);
}

std::uint32_t prime_option(const Config& cfg) {
  if (cfg.p == 0) throw UsageError("--p is required");
  if (!is_prime(cfg.p)) throw UsageError("--p must be prime");
  return static_cast<std::uint32_t>(cfg.p);
}

const std::string& single_operand(const Config& cfg, const char* what) {
  if (cfg.operands.size() != 1) throw UsageError(std::string("expected exactly one ") + what);
  return cfg.operands.front();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

Json valuation_json(const Valuation& v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

Json report(const std::string& theorem, Json params, const std::string& verdict, Json valuations, double ms) {
  Json doc;
  doc["theorem"] = theorem;
  doc["params"] = std::move(params);
  doc["verdict"] = verdict;
  doc["valuations"] = std::move(valuations);
  doc["runtime_ms"] = ms;
  return doc;
}

void emit_polynomial(const Config& cfg, const Polynomial& f, std::ostream& out) {
  if (json_out(cfg)) {
    out << Json{{"polynomial", f.to_string()}}.dump() << "\n";
  } else {
    out << f.to_string() << "\n";
  }
}

Json certificate_json(const MembershipCertificate& cert) {
  Json terms = Json::array();
  for (const auto& t : cert.terms) {
    terms.push_back({{"sigma", t.sigma.to_string()}, {"gen", t.generator}, {"cofactor", t.cofactor.to_string()}});
  }
  return {{"target", cert.target.to_string()}, {"terms", terms}};
}

void print_certificate_text(const MembershipCertificate& cert, std::ostream& out) {
  out << "certificate: " << cert.target.to_string() << " =\n";
  if (cert.terms.empty()) out << "  0\n";
  for (const auto& t : cert.terms) {
    out << "  + " << t.sigma.to_string() << "(g" << t.generator << ") * (" << t.cofactor.to_string() << ")\n";
  }
}

// ---------------------------------------------------------------- commands

int cmd_family(const Config& cfg, std::ostream& out) {
  const auto ring = make_ring(cfg);
  if (cfg.kind == "h") {
    if (cfg.k < 1) throw UsageError("family h needs --k >= 1");
    emit_polynomial(cfg, h_family(ring, cfg.rows, cfg.k), out);
  } else if (cfg.kind == "det") {
    if (cfg.cols.empty()) throw UsageError("family det needs --cols");
    emit_polynomial(cfg, determinant_gen(ring, cfg.rows, cfg.cols), out);
  } else if (cfg.kind == "cycle") {
    emit_polynomial(cfg, cycle_product(ring, cfg.k), out);
  } else if (cfg.kind == "tilde") {
    auto zz = CoefficientRing::integers();
    auto f = parse_polynomial(single_operand(cfg, "t-polynomial"), zz, cfg.rows);
    emit_polynomial(cfg, tilde_product(cfg.rows, f), out);
  } else {
    throw UsageError("unknown family '" + cfg.kind + "' (expected h|det|cycle|tilde)");
  }
  return kExitOk;
}

int cmd_act(const Config& cfg, std::ostream& out) {
  const auto ring = make_ring(cfg);
  auto f = parse_polynomial(single_operand(cfg, "polynomial"), ring, cfg.rows);
  if (cfg.kind == "row") {
    if (cfg.perm.empty()) throw UsageError("act row needs --perm");
    emit_polynomial(cfg, apply_row(RowPermutation::parse(cfg.perm), f), out);
  } else if (cfg.kind == "col") {
    if (cfg.map.empty()) throw UsageError("act col needs --map");
    emit_polynomial(cfg, apply_column(ColumnMap::parse(cfg.map), f), out);
  } else {
    throw UsageError("unknown action '" + cfg.kind + "' (expected row|col)");
  }
  return kExitOk;
}

int cmd_symmetrize(const Config& cfg, std::ostream& out) {
  auto f = parse_polynomial(single_operand(cfg, "polynomial"), make_ring(cfg), cfg.rows);
  emit_polynomial(cfg, symmetrize(f), out);
  return kExitOk;
}

int cmd_morph(const Config& cfg, std::ostream& out) {
  const auto& text = single_operand(cfg, "polynomial");
  const auto zz = CoefficientRing::integers();
  if (cfg.kind == "psi-row") {
    if (cfg.to_rows == 0) throw UsageError("morph psi-row needs --to-rows");
    emit_polynomial(cfg, row_truncate(parse_polynomial(text, make_ring(cfg), cfg.rows), cfg.to_rows), out);
  } else if (cfg.kind == "mu") {
    emit_polynomial(cfg, reduce_mod_p(parse_polynomial(text, zz, cfg.rows), prime_option(cfg)), out);
  } else if (cfg.kind == "lift") {
    auto field = CoefficientRing::prime_field(prime_option(cfg));
    emit_polynomial(cfg, lift_canonical(parse_polynomial(text, field, cfg.rows)), out);
  } else if (cfg.kind == "eta") {
    emit_polynomial(cfg, collapse_columns(parse_polynomial(text, zz, cfg.rows)), out);
  } else if (cfg.kind == "psi-kl") {
    if (cfg.k == 0 || cfg.l == 0) throw UsageError("morph psi-kl needs --k and --l");
    emit_polynomial(cfg, psi_kl(parse_polynomial(text, make_ring(cfg), cfg.rows), cfg.k, cfg.l), out);
  } else {
    throw UsageError("unknown morphism '" + cfg.kind + "' (expected psi-row|mu|lift|eta|psi-kl)");
  }
  return kExitOk;
}

EquivariantIdealSpec spec_from_options(const Config& cfg) {
  if (cfg.gens.empty()) throw UsageError("at least one --gen is required");
  const auto ring = make_ring(cfg);
  std::vector<Polynomial> gens;
  for (const auto& g : cfg.gens) gens.push_back(parse_polynomial(g, ring, cfg.rows));
  return make_ideal_spec(ring, cfg.rows, parse_ambient(cfg.ambient), std::move(gens));
}

int emit_membership(const Config& cfg, const EquivariantIdealSpec& spec, const MembershipVerdict& v, double ms,
                    std::ostream& out) {
  if (v.certificate && !cfg.cert_out.empty()) write_file(cfg.cert_out, certificate_to_json(*v.certificate, spec));
  if (json_out(cfg)) {
    Json params{{"ring", spec.ring.name()},
                {"rows", spec.rows},
                {"ambient", ambient_name(spec.ambient)},
                {"oracle", oracle_name(v.oracle)},
                {"width", v.width},
                {"degree_bound", v.degree_bound},
                {"orbit_images", v.orbit_images},
                {"candidates", v.candidates}};
    Json doc = report("membership", std::move(params), verdict_name(v.status), Json::array(), ms);
    if (v.certificate) doc["certificate"] = certificate_json(*v.certificate);
    out << doc.dump() << "\n";
  } else {
    out << verdict_name(v.status) << "\n";
    out << "oracle: " << oracle_name(v.oracle) << ", width " << v.width << ", degree bound " << v.degree_bound
        << ", " << v.orbit_images << " orbit images, " << v.candidates << " candidate products\n";
    if (v.certificate) print_certificate_text(*v.certificate, out);
  }
  return kExitOk;
}

int cmd_member(const Config& cfg, std::ostream& out) {
  auto spec = spec_from_options(cfg);
  auto f = parse_polynomial(single_operand(cfg, "target polynomial"), spec.ring, spec.rows);
  std::uint32_t width = cfg.width;
  if (width == 0) {
    width = std::max<std::uint32_t>(1, f.max_col());
    for (const auto& g : spec.generators) {
      width = std::max<std::uint32_t>(width, static_cast<std::uint32_t>(g.column_support().size()));
    }
  }
  std::uint64_t deg = cfg.deg >= 0 ? static_cast<std::uint64_t>(cfg.deg) : f.total_degree();
  Stopwatch clock(cfg.timings);
  auto v = member_truncated(f, spec, width, deg);
  return emit_membership(cfg, spec, v, clock.ms(), out);
}

int cmd_member_mg(const Config& cfg, std::ostream& out) {
  auto spec = spec_from_options(cfg);
  auto f = parse_polynomial(single_operand(cfg, "target polynomial"), spec.ring, spec.rows);
  Stopwatch clock(cfg.timings);
  auto v = member_multigraded(f, spec);
  return emit_membership(cfg, spec, v, clock.ms(), out);
}

int cmd_scan(const Config& cfg, std::ostream& out) {
  ScanFamily family;
  if (cfg.family == "h") {
    family = ScanFamily::H;
  } else if (cfg.family == "cycle") {
    family = ScanFamily::Cycle;
  } else {
    throw UsageError("unknown scan family '" + cfg.family + "' (expected h|cycle)");
  }
  if (cfg.k == 0 || cfg.kmax == 0) throw UsageError("scan needs --k (first index) and --kmax (last index)");
  Stopwatch clock(cfg.timings);
  auto rep = stabilization_scan(family, make_ring(cfg), cfg.rows, cfg.k, cfg.kmax);
  double ms = clock.ms();

  std::size_t members = 0;
  for (const auto& e : rep.entries) members += e.verdict == Verdict::Member;
  std::string summary = members == 0 ? "not_member" : members == rep.entries.size() ? "member" : "mixed";
  if (json_out(cfg)) {
    Json entries = Json::array();
    for (const auto& e : rep.entries) {
      entries.push_back({{"k", e.k},
                         {"verdict", verdict_name(e.verdict)},
                         {"certificate_terms", e.certificate_terms},
                         {"certificate_verified", e.certificate_verified},
                         {"runtime_ms", cfg.timings ? e.runtime_ms : 0.0}});
    }
    Json params{{"family", cfg.family}, {"ring", rep.ring.name()}, {"rows", rep.rows}, {"k_from", cfg.k},
                {"k_to", cfg.kmax}};
    Json doc = report("scan", std::move(params), summary, Json::array(), ms);
    doc["entries"] = std::move(entries);
    out << doc.dump() << "\n";
  } else {
    out << "scan " << cfg.family << " over " << rep.ring.name() << ", " << rep.rows << " rows\n";
    for (const auto& e : rep.entries) {
      out << "  k=" << e.k << ": " << verdict_name(e.verdict);
      if (e.verdict == Verdict::Member) {
        out << " (" << e.certificate_terms << " terms, " << (e.certificate_verified ? "verified" : "NOT verified")
            << ")";
      }
      out << "\n";
    }
  }
  return kExitOk;
}

int cmd_verify_hk(const Config& cfg, std::ostream& out) {
  const std::uint32_t p = prime_option(cfg);
  if (cfg.k == 0) throw UsageError("verify-hk needs --k");
  const std::uint32_t kmax = cfg.kmax == 0 ? cfg.k : cfg.kmax;
  Stopwatch clock(cfg.timings);
  auto v = nonmembership_hk(cfg.rows, p, cfg.k, kmax);
  double ms = clock.ms();
  if (json_out(cfg)) {
    Json params{{"n", cfg.rows}, {"p", p}, {"k", cfg.k}, {"kmax", kmax}, {"candidates", v.candidates},
                {"orbit_images", v.orbit_images}};
    out << report("7", std::move(params), verdict_name(v.status), Json::array(), ms).dump() << "\n";
  } else {
    out << "h_" << cfg.k << " against {h_l : l <= " << kmax << ", l != " << cfg.k << "} over GF(" << p << "), "
        << cfg.rows << " rows: " << verdict_name(v.status) << "\n";
    out << v.orbit_images << " orbit images, " << v.candidates << " candidate products\n";
  }
  return kExitOk;
}

int cmd_verify_eta(const Config& cfg, std::ostream& out) {
  const bool natural = cfg.operands.empty();
  if (natural && cfg.k == 0) throw UsageError("verify-eta needs a certificate file or --k and --p");
  HkCandidate input = natural ? natural_hk_candidate(cfg.k, prime_option(cfg)) : [&] {
    auto loaded = certificate_from_json(read_file(single_operand(cfg, "certificate file")));
    return HkCandidate{std::move(loaded.spec), std::move(loaded.certificate)};
  }();
  const auto& spec = input.spec;
  const auto& candidate = input.certificate;
  if (spec.ring.kind() != RingKind::PrimeField) throw PreconditionError("candidate must live over GF(p)");
  const auto p = static_cast<std::uint32_t>(spec.ring.characteristic());
  const auto k = static_cast<std::uint32_t>(candidate.target.total_degree());
  std::optional<Polynomial> synthetic;
  if (cfg.synthetic) synthetic = candidate_residual(spec, candidate);
  Stopwatch clock(cfg.timings);
  auto rep = obstruction_check(k, p, spec, candidate, synthetic);
  double ms = clock.ms();

  if (json_out(cfg)) {
    Json vals = Json::array();
    vals.push_back({{"term", "lhs"}, {"value", valuation_json(rep.lhs_valuation)}});
    for (std::size_t i = 0; i < rep.term_valuations.size(); ++i) {
      vals.push_back({{"term", std::to_string(i)}, {"value", valuation_json(rep.term_valuations[i])}});
    }
    if (rep.synthetic_valuation) {
      vals.push_back({{"term", "synthetic"}, {"value", valuation_json(*rep.synthetic_valuation)}});
    }
    vals.push_back({{"term", "remainder"}, {"value", valuation_json(rep.remainder_valuation)}});
    Json params{{"k", k}, {"p", p}, {"terms", candidate.terms.size()}, {"synthetic", cfg.synthetic}};
    Json doc = report("7", std::move(params), conclusion_name(rep.conclusion), std::move(vals), ms);
    doc["residual_mod_p"] = rep.residual_mod_p.to_string();
    out << doc.dump() << "\n";
  } else {
    out << conclusion_name(rep.conclusion) << "\n";
    out << "residual mod p: " << rep.residual_mod_p.to_string() << "\n";
    out << "v_p(lhs) = " << rep.lhs_valuation.to_string() << "\n";
    for (std::size_t i = 0; i < rep.term_valuations.size(); ++i) {
      out << "v_p(term " << i << ") = " << rep.term_valuations[i].to_string() << "\n";
    }
    if (rep.synthetic_valuation) out << "v_p(synthetic) = " << rep.synthetic_valuation->to_string() << "\n";
    out << "v_p(remainder) = " << rep.remainder_valuation.to_string() << "\n";
  }
  return kExitOk;
}

int cmd_verify_orbits(const Config& cfg, std::ostream& out) {
  const std::uint32_t p = prime_option(cfg);
  if (cfg.width == 0) throw UsageError("verify-orbits needs --width");
  Stopwatch clock(cfg.timings);
  auto rep = orbit_divisibility_audit(p, cfg.width);
  double ms = clock.ms();
  const std::string verdict = rep.passed() ? "passed" : "failed";
  if (json_out(cfg)) {
    Json sizes = Json::object();
    for (const auto& [size, count] : rep.orbit_sizes) sizes[std::to_string(size)] = count;
    Json params{{"p", p}, {"width", cfg.width}};
    Json doc = report("7", std::move(params), verdict, Json::array(), ms);
    doc["monomials"] = rep.monomials;
    doc["orbits"] = rep.orbits;
    doc["orbit_sizes"] = std::move(sizes);
    doc["divisibility_failures"] = rep.divisibility_failures;
    doc["valuation_failures"] = rep.valuation_failures;
    out << doc.dump() << "\n";
  } else {
    out << verdict << ": " << rep.monomials << " monomials in " << rep.orbits << " orbits\n";
    for (const auto& [size, count] : rep.orbit_sizes) out << "  orbit size " << size << ": " << count << "\n";
    out << "divisibility failures: " << rep.divisibility_failures
        << ", valuation failures: " << rep.valuation_failures << "\n";
  }
  return kExitOk;
}

int cmd_verify_vl(const Config& cfg, std::ostream& out) {
  if (cfg.k == 0) throw UsageError("verify-vl needs --k");
  const std::uint32_t kmax = cfg.kmax == 0 ? cfg.k : cfg.kmax;
  Stopwatch clock(cfg.timings);
  auto rep = vaughanlee_check(cfg.k, kmax);
  double ms = clock.ms();
  if (json_out(cfg)) {
    Json params{{"k", rep.k}, {"kmax", rep.kmax}, {"component_monomials", rep.component_monomials},
                {"orbit_images", rep.verdict.orbit_images}, {"candidates", rep.verdict.candidates}};
    out << report("3", std::move(params), verdict_name(rep.verdict.status), Json::array(), ms).dump() << "\n";
  } else {
    out << "cycle product c_" << rep.k << " against c_l (3 <= l <= " << rep.kmax << ", l != " << rep.k
        << ") in L_2 over GF(2): " << verdict_name(rep.verdict.status) << "\n";
    out << rep.component_monomials << " monomials in the target component, " << rep.verdict.orbit_images
        << " orbit images, " << rep.verdict.candidates << " candidate products\n";
  }
  return kExitOk;
}

int cmd_verify_cert(const Config& cfg, std::ostream& out) {
  auto loaded = certificate_from_json(read_file(single_operand(cfg, "certificate file")));
  Stopwatch clock(cfg.timings);
  auto check = verify_certificate(loaded.certificate, loaded.spec);
  double ms = clock.ms();
  const std::string verdict = check.ok ? "valid" : "invalid";
  if (json_out(cfg)) {
    Json params{{"ring", loaded.spec.ring.name()}, {"rows", loaded.spec.rows},
                {"ambient", ambient_name(loaded.spec.ambient)}, {"terms", loaded.certificate.terms.size()}};
    Json doc = report("certificate", std::move(params), verdict, Json::array(), ms);
    doc["diagnostic"] = check.diagnostic;
    out << doc.dump() << "\n";
  } else {
    out << verdict;
    if (!check.ok) out << ": " << check.diagnostic;
    out << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with Sym(N)-equivariant ideals", "symideal"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--ring", cfg.ring, "coefficient ring")->check(CLI::IsMember({"int", "rat", "gf"}));
  app.add_option("--p", cfg.p, "prime for --ring gf and the verify-* commands");
  app.add_option("--rows", cfg.rows, "row bound n")->check(CLI::Range(1u, kMaxRows));
  app.add_option("--width", cfg.width, "truncation width")->check(CLI::Range(1u, 64u));
  app.add_option("--deg", cfg.deg, "degree bound")->check(CLI::NonNegativeNumber);
  app.add_option("--out", cfg.out, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", cfg.seed, "seed for randomized suites");
  app.add_option("--k", cfg.k, "family index");
  app.add_option("--kmax", cfg.kmax, "generator cutoff or last scan index");
  app.add_option("--l", cfg.l, "second column for psi-kl");
  app.add_option("--gen", cfg.gens, "ideal generator (repeatable)")->allow_extra_args(false);
  app.add_option("--ambient", cfg.ambient, "ambient algebra")->check(CLI::IsMember({"full", "sym", "l2"}));
  app.add_option("--cert-out", cfg.cert_out, "write the certificate of a member verdict to this file");
  app.add_flag("--timings", cfg.timings, "report wall-clock runtimes instead of 0");

  auto* family = app.add_subcommand("family", "emit a generator family member");
  family->add_option("kind", cfg.kind, "h|det|cycle|tilde")->required();
  family->add_option("template", cfg.operands, "t-polynomial for tilde");
  family->add_option("--cols", cfg.cols, "columns of a determinant")->delimiter(',')->allow_extra_args(false);

  auto* act = app.add_subcommand("act", "apply a row permutation or column map");
  act->add_option("kind", cfg.kind, "row|col")->required();
  act->add_option("polynomial", cfg.operands)->required();
  act->add_option("--perm", cfg.perm, "row permutation, e.g. [2,1]");
  act->add_option("--map", cfg.map, "column map, e.g. {1->3,2->1}");

  auto* sym = app.add_subcommand("symmetrize", "apply the averaging operator over S_n");
  sym->add_option("polynomial", cfg.operands)->required();

  auto* morph = app.add_subcommand("morph", "apply a ring homomorphism");
  morph->add_option("kind", cfg.kind, "psi-row|mu|lift|eta|psi-kl")->required();
  morph->add_option("polynomial", cfg.operands)->required();
  morph->add_option("--to-rows", cfg.to_rows, "target row count for psi-row");

  auto* member = app.add_subcommand("member", "truncated Groebner membership");
  member->add_option("target", cfg.operands)->required();
  auto* member_mg = app.add_subcommand("member-mg", "exact multigraded membership");
  member_mg->add_option("target", cfg.operands)->required();

  auto* scan = app.add_subcommand("scan", "stabilization scan over k = --k .. --kmax");
  scan->add_option("--family", cfg.family, "h|cycle");

  auto* verify_hk = app.add_subcommand("verify-hk", "h_k non-membership for p <= n");
  auto* verify_eta = app.add_subcommand("verify-eta", "obstruction check of a candidate certificate");
  verify_eta->add_option("certificate", cfg.operands, "candidate certificate JSON (default: natural candidate)");
  verify_eta->add_flag("--synthetic", cfg.synthetic, "add the residual as a synthetic term");
  auto* verify_orbits = app.add_subcommand("verify-orbits", "orbit divisibility audit");
  auto* verify_vl = app.add_subcommand("verify-vl", "cycle product non-membership in L_2");
  auto* verify_cert = app.add_subcommand("verify-cert", "re-verify a certificate JSON file");
  verify_cert->add_option("certificate", cfg.operands)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (family->parsed()) return cmd_family(cfg, out);
    if (act->parsed()) return cmd_act(cfg, out);
    if (sym->parsed()) return cmd_symmetrize(cfg, out);
    if (morph->parsed()) return cmd_morph(cfg, out);
    if (member->parsed()) return cmd_member(cfg, out);
    if (member_mg->parsed()) return cmd_member_mg(cfg, out);
    if (scan->parsed()) return cmd_scan(cfg, out);
    if (verify_hk->parsed()) return cmd_verify_hk(cfg, out);
    if (verify_eta->parsed()) return cmd_verify_eta(cfg, out);
    if (verify_orbits->parsed()) return cmd_verify_orbits(cfg, out);
    if (verify_vl->parsed()) return cmd_verify_vl(cfg, out);
    if (verify_cert->parsed()) return cmd_verify_cert(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << e.what() << "\n";
    return kExitPrecondition;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "error: no command\n";
  return kExitUsage;
}

}  // namespace symideal::cli
