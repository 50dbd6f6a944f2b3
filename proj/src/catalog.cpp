#include <fstream>
#include <sstream>

#include <json.hpp>

#include "copart/congruence.hpp"

// JSON wire format. A catalog is an array of claims:
//   {"source": {"kind": "copartition", "a": 3, "b": 1, "m": 4},
//    "A": 49, "B": 3, "modulus": 2,
//    "rhs": {"kind": "zero"}, "provenance": "..."}
// Sources: copartition {a,b,m}, eta-power {k,e}, named {name}.
// A report file is an array of records, each embedding its claim.

namespace copart {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json source_to_json(const SeriesSource& source) {
  ordered_json j;
  switch (source.kind) {
    case SeriesSource::Kind::copartition:
      j["kind"] = "copartition";
      j["a"] = source.params.a;
      j["b"] = source.params.b;
      j["m"] = source.params.m;
      break;
    case SeriesSource::Kind::eta_power:
      j["kind"] = "eta-power";
      j["k"] = source.eta_base;
      j["e"] = source.eta_exponent;
      break;
    case SeriesSource::Kind::named:
      j["kind"] = "named";
      j["name"] = source.name;
      break;
  }
  return j;
}

SeriesSource source_from_json(const ordered_json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    throw Error(Errc::parse, where + ": source needs a string 'kind'");
  const std::string kind = j.at("kind").get<std::string>();
  auto u64_field = [&](const char* name) -> std::uint64_t {
    if (!j.contains(name) || !j.at(name).is_number_unsigned())
      throw Error(Errc::parse, where + ": source field '" + name +
                                   "' must be a nonnegative integer");
    return j.at(name).get<std::uint64_t>();
  };
  if (kind == "copartition")
    return SeriesSource::copartition(u64_field("a"), u64_field("b"), u64_field("m"));
  if (kind == "eta-power") return SeriesSource::eta(u64_field("k"), u64_field("e"));
  if (kind == "named") {
    if (!j.contains("name") || !j.at("name").is_string())
      throw Error(Errc::parse, where + ": named source needs a string 'name'");
    return parse_source(j.at("name").get<std::string>());
  }
  throw Error(Errc::parse, where + ": unknown source kind '" + kind + "'");
}

ordered_json claim_to_json(const ProgressionClaim& claim) {
  ordered_json j;
  j["source"] = source_to_json(claim.source);
  j["A"] = claim.step;
  j["B"] = claim.offset;
  j["modulus"] = claim.modulus;
  ordered_json rhs;
  if (claim.rhs.kind == ClaimRhs::Kind::zero) {
    rhs["kind"] = "zero";
  } else {
    rhs["kind"] = "series";
    rhs["name"] = claim.rhs.source.display();
  }
  j["rhs"] = rhs;
  j["provenance"] = claim.provenance;
  return j;
}

ProgressionClaim claim_from_json(const ordered_json& j, const std::string& where,
                                 bool enforce_canonical_offset) {
  if (!j.is_object()) throw Error(Errc::parse, where + ": claim must be an object");
  for (const char* field : {"source", "A", "B", "modulus", "rhs"})
    if (!j.contains(field))
      throw Error(Errc::parse, where + ": missing field '" + std::string(field) + "'");

  ProgressionClaim claim;
  claim.source = source_from_json(j.at("source"), where);
  if (!j.at("A").is_number_unsigned() || j.at("A").get<std::uint64_t>() == 0)
    throw Error(Errc::parse, where + ": A must be a positive integer");
  claim.step = j.at("A").get<std::uint64_t>();
  if (!j.at("B").is_number_unsigned())
    throw Error(Errc::parse, where + ": B must be a nonnegative integer");
  claim.offset = j.at("B").get<std::uint64_t>();
  if (enforce_canonical_offset && claim.offset >= claim.step)
    throw Error(Errc::parse, where + ": offset B=" + std::to_string(claim.offset) +
                                 " must be smaller than step A=" + std::to_string(claim.step));
  if (!j.at("modulus").is_number_unsigned() || j.at("modulus").get<std::uint64_t>() < 2)
    throw Error(Errc::parse, where + ": modulus must be an integer >= 2");
  claim.modulus = j.at("modulus").get<std::int64_t>();

  const auto& rhs = j.at("rhs");
  if (!rhs.is_object() || !rhs.contains("kind") || !rhs.at("kind").is_string())
    throw Error(Errc::parse, where + ": rhs needs a string 'kind'");
  const std::string rhs_kind = rhs.at("kind").get<std::string>();
  if (rhs_kind == "zero") {
    claim.rhs.kind = ClaimRhs::Kind::zero;
  } else if (rhs_kind == "series") {
    if (!rhs.contains("name") || !rhs.at("name").is_string())
      throw Error(Errc::parse, where + ": series rhs needs a string 'name'");
    claim.rhs.kind = ClaimRhs::Kind::series;
    claim.rhs.source = parse_source(rhs.at("name").get<std::string>());
  } else {
    throw Error(Errc::parse, where + ": unknown rhs kind '" + rhs_kind + "'");
  }
  if (j.contains("provenance")) {
    if (!j.at("provenance").is_string())
      throw Error(Errc::parse, where + ": provenance must be a string");
    claim.provenance = j.at("provenance").get<std::string>();
  }
  return claim;
}

ordered_json parse_document(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::parse, "invalid JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

}  // namespace

std::vector<ProgressionClaim> claims_from_json(const std::string& text,
                                               bool enforce_canonical_offset) {
  const ordered_json doc = parse_document(text);
  std::vector<ProgressionClaim> claims;
  if (doc.is_object()) {
    claims.push_back(claim_from_json(doc, "claim 0", enforce_canonical_offset));
    return claims;
  }
  if (!doc.is_array()) throw Error(Errc::parse, "a claim catalog is a JSON array");
  claims.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i)
    claims.push_back(
        claim_from_json(doc[i], "claim " + std::to_string(i), enforce_canonical_offset));
  return claims;
}

std::vector<ProgressionClaim> catalog_from_json(const std::string& text) {
  const ordered_json doc = parse_document(text);
  if (!doc.is_array()) throw Error(Errc::parse, "a claim catalog is a JSON array");
  std::vector<ProgressionClaim> claims;
  claims.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i)
    claims.push_back(claim_from_json(doc[i], "claim " + std::to_string(i), true));
  return claims;
}

std::vector<ProgressionClaim> catalog_load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io, "cannot open catalog file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return catalog_from_json(buffer.str());
}

std::string catalog_to_json(const std::vector<ProgressionClaim>& claims) {
  ordered_json doc = ordered_json::array();
  for (const auto& claim : claims) doc.push_back(claim_to_json(claim));
  return doc.dump(2) + "\n";
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
  ordered_json doc = ordered_json::array();
  for (const auto& report : reports) {
    ordered_json j;
    j["claim"] = claim_to_json(report.claim);
    j["horizon"] = report.horizon;
    j["verdict"] = verdict_name(report.verdict);
    j["n_checked"] = report.n_checked;
    ordered_json cexs = ordered_json::array();
    for (const auto& cex : report.counterexamples) {
      ordered_json c;
      c["n"] = cex.n;
      c["lhs"] = cex.lhs;
      c["rhs"] = cex.rhs;
      cexs.push_back(c);
    }
    j["counterexamples"] = cexs;
    j["spot_checked"] = report.spot_checked;
    doc.push_back(j);
  }
  return doc.dump(2) + "\n";
}

void catalog_save(const std::vector<VerificationReport>& reports, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::io, "cannot open report file for writing: " + path);
  out << reports_to_json(reports);
  if (!out) throw Error(Errc::io, "failed writing report file: " + path);
}

}  // namespace copart
