#include "symideal/io.hpp"

#include <json.hpp>

#include "symideal/errors.hpp"

namespace symideal {

using nlohmann::json;

CoefficientRing parse_ring(std::string_view name) {
  if (name == "ZZ") return CoefficientRing::integers();
  if (name == "QQ") return CoefficientRing::rationals();
  if (name.starts_with("GF(") && name.ends_with(")")) {
    auto digits = name.substr(3, name.size() - 4);
    if (digits.empty() || digits.size() > 10 ||
        digits.find_first_not_of("0123456789") != std::string_view::npos) {
      throw ParseError("bad prime in ring name '" + std::string(name) + "'");
    }
    return CoefficientRing::prime_field(std::stoull(std::string(digits)));
  }
  throw ParseError("unknown ring '" + std::string(name) + "' (expected ZZ, QQ or GF(p))");
}

std::string certificate_to_json(const MembershipCertificate& cert, const EquivariantIdealSpec& spec) {
  json doc;
  doc["target"] = cert.target.to_string();
  doc["terms"] = json::array();
  for (const auto& t : cert.terms) {
    doc["terms"].push_back({{"sigma", t.sigma.to_string()}, {"gen", t.generator}, {"cofactor", t.cofactor.to_string()}});
  }
  doc["ring"] = spec.ring.name();
  doc["rows"] = spec.rows;
  doc["ambient"] = ambient_name(spec.ambient);
  doc["generators"] = json::array();
  for (const auto& g : spec.generators) doc["generators"].push_back(g.to_string());
  return doc.dump(2) + "\n";
}

namespace {

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("certificate JSON: ") + e.what(), e.byte);
  }
}

MembershipCertificate read_certificate(const json& doc, const EquivariantIdealSpec& spec) {
  try {
    MembershipCertificate cert{parse_polynomial(doc.at("target").get<std::string>(), spec.ring, spec.rows), {}};
    for (const auto& t : doc.at("terms")) {
      cert.terms.push_back({ColumnMap::parse(t.at("sigma").get<std::string>()), t.at("gen").get<std::size_t>(),
                            parse_polynomial(t.at("cofactor").get<std::string>(), spec.ring, spec.rows)});
    }
    return cert;
  } catch (const json::exception& e) {
    throw ParseError(std::string("certificate JSON: ") + e.what());
  }
}

}  // namespace

LoadedCertificate certificate_from_json(std::string_view text) {
  json doc = parse_document(text);
  EquivariantIdealSpec spec;
  try {
    spec.ring = parse_ring(doc.at("ring").get<std::string>());
    spec.rows = doc.at("rows").get<std::uint32_t>();
    spec.ambient = parse_ambient(doc.at("ambient").get<std::string>());
    for (const auto& g : doc.at("generators")) {
      spec.generators.push_back(parse_polynomial(g.get<std::string>(), spec.ring, spec.rows));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("certificate JSON lacks the ideal description: ") + e.what());
  }
  spec = make_ideal_spec(spec.ring, spec.rows, spec.ambient, std::move(spec.generators));
  auto cert = read_certificate(doc, spec);
  return {std::move(spec), std::move(cert)};
}

MembershipCertificate certificate_from_json(std::string_view text, const EquivariantIdealSpec& spec) {
  return read_certificate(parse_document(text), spec);
}

}  // namespace symideal
