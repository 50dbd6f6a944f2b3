// Command-line front end. Talks to the engines exclusively through the
// C interface in copart/copart.h; structured results come back as JSON
// and are re-rendered here for the text and csv formats.
//
// Exit status: 0 when every requested check passed (or a pure data
// command succeeded), 1 when at least one claim FAILed or an identity
// check found a mismatch, 2 on usage or engine errors.

#include <cstdint>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "copart/copart.h"

using nlohmann::json;

namespace {

struct CliError {
  std::string message;
};

std::string take_string(copart_status status, char** text) {
  if (status != COPART_OK) {
    std::string message = copart_last_error();
    if (message.empty()) message = copart_status_name(status);
    throw CliError{message};
  }
  std::string out(*text);
  copart_string_free(*text);
  *text = nullptr;
  return out;
}

std::string render_parts(const json& parts, const char* empty = "{}") {
  if (parts.empty()) return empty;
  // group equal parts as value^multiplicity
  std::ostringstream os;
  os << '{';
  std::size_t i = 0;
  bool first = true;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (!first) os << ',';
    os << parts[i].get<std::uint64_t>();
    if (j - i > 1) os << '^' << (j - i);
    first = false;
    i = j;
  }
  os << '}';
  return os.str();
}

std::string format_claim_line(const json& claim) {
  std::ostringstream os;
  const json& source = claim.at("source");
  std::string source_text;
  if (source.at("kind") == "copartition") {
    source_text = "cp(" + std::to_string(source.at("a").get<std::uint64_t>()) + "," +
                  std::to_string(source.at("b").get<std::uint64_t>()) + "," +
                  std::to_string(source.at("m").get<std::uint64_t>()) + ")";
  } else if (source.at("kind") == "eta-power") {
    source_text = "f" + std::to_string(source.at("k").get<std::uint64_t>());
    if (source.at("e").get<std::uint64_t>() != 1)
      source_text += "^" + std::to_string(source.at("e").get<std::uint64_t>());
  } else {
    source_text = source.at("name").get<std::string>();
  }
  os << source_text << " @ " << claim.at("A").get<std::uint64_t>() << "n+"
     << claim.at("B").get<std::uint64_t>() << " mod " << claim.at("modulus").get<std::int64_t>()
     << " == ";
  if (claim.at("rhs").at("kind") == "zero")
    os << "0";
  else
    os << claim.at("rhs").at("name").get<std::string>() << "[n]";
  return os.str();
}

int run_coeffs(const std::string& source, std::int64_t modulus, std::uint64_t horizon,
               const std::string& format) {
  copart_series* series = nullptr;
  copart_status status;
  if (source.rfind("cp(", 0) == 0) {
    std::uint64_t a = 0, b = 0, m = 0;
    if (std::sscanf(source.c_str(), "cp(%lu,%lu,%lu)", &a, &b, &m) != 3)
      throw CliError{"cannot parse copartition parameters from '" + source + "'"};
    status = copart_series_copartition_gf(a, b, m, modulus, horizon, &series);
  } else if (source == "nu") {
    status = copart_series_nu(modulus, horizon, &series);
  } else if (source == "eo_star") {
    if (modulus != 0) throw CliError{"eo_star coefficients are exact only"};
    status = copart_series_eo_star(horizon, &series);
  } else if (source == "f1*f3") {
    copart_series *f1 = nullptr, *f3 = nullptr;
    status = copart_series_pochhammer(1, 1, modulus, horizon, &f1);
    if (status == COPART_OK) status = copart_series_pochhammer(3, 3, modulus, horizon, &f3);
    if (status == COPART_OK) status = copart_series_mul(f1, f3, &series);
    copart_series_free(f1);
    copart_series_free(f3);
  } else if (source.rfind("cp", 0) == 0 && source.size() == 5) {
    // cp111 / cp011 / cp001 go through the sequence surface
    char* text = nullptr;
    const std::string payload =
        take_string(copart_special_sequence_json(source.c_str(), horizon, &text), &text);
    const json doc = json::parse(payload);
    if (format == "json") {
      std::cout << payload;
    } else {
      if (format == "csv") std::cout << "n,value\n";
      for (std::size_t n = 0; n < doc.at("values").size(); ++n)
        std::cout << n << (format == "csv" ? "," : " ")
                  << doc.at("values")[n].get<std::string>() << "\n";
    }
    return 0;
  } else if (!source.empty() && source[0] == 'f') {
    std::uint64_t k = 0, e = 1;
    const auto caret = source.find('^');
    try {
      k = std::stoull(source.substr(1, caret == std::string::npos ? std::string::npos
                                                                  : caret - 1));
      if (caret != std::string::npos) e = std::stoull(source.substr(caret + 1));
    } catch (...) {
      throw CliError{"cannot parse eta power from '" + source + "'"};
    }
    status = copart_series_eta_power(k, e, modulus, horizon, &series);
  } else {
    throw CliError{"unrecognized series source '" + source + "'"};
  }

  const std::string payload = [&] {
    std::string out;
    for (std::uint64_t n = 0; n <= copart_series_truncation(series); ++n) {
      char* text = nullptr;
      out += take_string(copart_series_coeff_string(series, n, &text), &text);
      out += '\n';
    }
    return out;
  }();
  if (status != COPART_OK) {
    copart_series_free(series);
    throw CliError{copart_last_error()};
  }

  std::istringstream lines(payload);
  std::string value;
  if (format == "json") {
    json doc;
    doc["source"] = source;
    doc["modulus"] = modulus;
    doc["N"] = horizon;
    json values = json::array();
    while (std::getline(lines, value)) values.push_back(value);
    doc["values"] = values;
    std::cout << doc.dump(2) << "\n";
  } else {
    if (format == "csv") std::cout << "n,value\n";
    std::uint64_t n = 0;
    while (std::getline(lines, value))
      std::cout << n++ << (format == "csv" ? "," : " ") << value << "\n";
  }
  copart_series_free(series);
  return 0;
}

int run_enumerate(std::uint64_t a, std::uint64_t b, std::uint64_t m, std::uint64_t n,
                  const std::string& format) {
  char* text = nullptr;
  const std::string payload = take_string(copart_enumerate_json(a, b, m, n, &text), &text);
  if (format == "json") {
    std::cout << payload;
    return 0;
  }
  const json doc = json::parse(payload);
  if (format == "csv") {
    std::cout << "w,s,ground,rectangle,sky\n";
    for (const auto& t : doc.at("triples"))
      std::cout << t.at("ground").size() << ',' << t.at("sky").size() << ','
                << render_parts(t.at("ground"), "-") << ',' << render_parts(t.at("rectangle"), "-")
                << ',' << render_parts(t.at("sky"), "-") << "\n";
    return 0;
  }
  for (const auto& t : doc.at("triples"))
    std::cout << '(' << render_parts(t.at("ground")) << ", " << render_parts(t.at("rectangle"))
              << ", " << render_parts(t.at("sky")) << ")\n";
  std::cout << "cp=" << doc.at("count").get<std::uint64_t>() << "\n";
  return 0;
}

int run_verify(const std::string& claim_text, const std::string& catalog_path,
               std::uint64_t horizon, std::uint32_t cap, const std::string& out_path,
               const std::string& format) {
  std::string claims_json;
  char* text = nullptr;
  if (!claim_text.empty()) {
    claims_json = take_string(copart_parse_claim(claim_text.c_str(), &text), &text);
  } else {
    claims_json = take_string(copart_catalog_load_json(catalog_path.c_str(), &text), &text);
  }
  const std::string report =
      take_string(copart_verify_claims_json(claims_json.c_str(), horizon, cap, &text), &text);
  if (!out_path.empty()) {
    const copart_status status = copart_report_save(report.c_str(), out_path.c_str());
    if (status != COPART_OK) throw CliError{copart_last_error()};
  }

  const json doc = json::parse(report);
  int fails = 0;
  for (const auto& record : doc)
    if (record.at("verdict") == "FAIL") ++fails;

  if (format == "json") {
    std::cout << report;
  } else if (format == "csv") {
    std::cout << "verdict,n_checked,spot_checked,claim,provenance\n";
    for (const auto& record : doc)
      std::cout << record.at("verdict").get<std::string>() << ','
                << record.at("n_checked").get<std::uint64_t>() << ','
                << record.at("spot_checked").get<std::uint64_t>() << ",\""
                << format_claim_line(record.at("claim")) << "\",\""
                << record.at("claim").value("provenance", "") << "\"\n";
  } else {
    for (const auto& record : doc) {
      std::cout << record.at("verdict").get<std::string>() << "  "
                << format_claim_line(record.at("claim")) << "  terms="
                << record.at("n_checked").get<std::uint64_t>() << "  spots="
                << record.at("spot_checked").get<std::uint64_t>();
      const std::string provenance = record.at("claim").value("provenance", "");
      if (!provenance.empty()) std::cout << "  [" << provenance << "]";
      std::cout << "\n";
      for (const auto& cex : record.at("counterexamples"))
        std::cout << "    counterexample n=" << cex.at("n").get<std::uint64_t>()
                  << " lhs=" << cex.at("lhs").get<std::int64_t>()
                  << " rhs=" << cex.at("rhs").get<std::int64_t>() << "\n";
    }
    if (fails == 0)
      std::cout << "all claims hold up to the horizon\n";
    else
      std::cout << "failures: " << fails << "\n";
  }
  return fails == 0 ? 0 : 1;
}

int run_families(const std::string& family, std::uint64_t p, std::uint32_t alpha,
                 const std::vector<std::uint64_t>& primes, const std::string& source,
                 std::uint64_t step, std::int64_t modulus,
                 const std::vector<std::uint64_t>& residues, const std::string& label,
                 const std::string& format) {
  json spec;
  spec["family"] = family;
  spec["p"] = p;
  spec["alpha"] = alpha;
  if (!primes.empty()) spec["primes"] = primes;
  if (!source.empty()) spec["source"] = source;
  if (step != 0) spec["A"] = step;
  spec["modulus"] = modulus;
  if (!residues.empty()) spec["residues"] = residues;
  if (!label.empty()) spec["label"] = label;

  char* text = nullptr;
  const std::string claims =
      take_string(copart_build_family_json(spec.dump().c_str(), &text), &text);
  if (format == "json") {
    std::cout << claims;
    return 0;
  }
  const json doc = json::parse(claims);
  if (format == "csv") {
    std::cout << "A,B,modulus,claim,provenance\n";
    for (const auto& claim : doc)
      std::cout << claim.at("A").get<std::uint64_t>() << ',' << claim.at("B").get<std::uint64_t>()
                << ',' << claim.at("modulus").get<std::int64_t>() << ",\""
                << format_claim_line(claim) << "\",\"" << claim.value("provenance", "")
                << "\"\n";
    return 0;
  }
  for (const auto& claim : doc)
    std::cout << format_claim_line(claim) << "  [" << claim.value("provenance", "") << "]\n";
  return 0;
}

int run_dissect(std::uint64_t p, std::int64_t modulus, std::uint64_t horizon,
                const std::string& format) {
  char* text = nullptr;
  const std::string payload =
      take_string(copart_dissect_json(p, modulus, horizon, &text), &text);
  if (format == "json") {
    std::cout << payload;
    return 0;
  }
  const json doc = json::parse(payload);
  if (format == "csv") {
    std::cout << "kind,k,sign,shift,class_mod_p,theta_a,theta_b\n";
    for (const auto& c : doc.at("components")) {
      const bool theta = c.at("kind") == "theta";
      std::cout << c.at("kind").get<std::string>() << ','
                << (theta ? std::to_string(c.at("k").get<std::int64_t>()) : "-") << ','
                << c.at("sign").get<std::int64_t>() << ',' << c.at("shift").get<std::uint64_t>()
                << ',' << c.at("class_mod_p").get<std::uint64_t>() << ','
                << (theta ? std::to_string(c.at("theta_a").get<std::uint64_t>()) : "-") << ','
                << (theta ? std::to_string(c.at("theta_b").get<std::uint64_t>()) : "-") << "\n";
    }
    return 0;
  }
  std::cout << "p=" << p << " residual exponent " << doc.at("residual_exponent").get<int>()
            << "\n";
  for (const auto& c : doc.at("components")) {
    if (c.at("kind") == "theta")
      std::cout << "  theta k=" << c.at("k").get<std::int64_t>()
                << " sign=" << c.at("sign").get<std::int64_t>()
                << " shift=" << c.at("shift").get<std::uint64_t>() << " exponents ("
                << c.at("theta_a").get<std::uint64_t>() << ", "
                << c.at("theta_b").get<std::uint64_t>() << ")"
                << " class=" << c.at("class_mod_p").get<std::uint64_t>() << "\n";
    else
      std::cout << "  residual sign=" << c.at("sign").get<std::int64_t>()
                << " shift=" << c.at("shift").get<std::uint64_t>()
                << " class=" << c.at("class_mod_p").get<std::uint64_t>() << "\n";
  }
  std::cout << "reassembly matches: " << (doc.at("reassembly_matches").get<bool>() ? "yes" : "no")
            << "\n";
  std::cout << "residual class disjoint: "
            << (doc.at("residual_class_disjoint").get<bool>() ? "yes" : "no") << "\n";
  return doc.at("reassembly_matches").get<bool>() ? 0 : 1;
}

int run_identities(std::uint64_t horizon, const std::string& format) {
  char* text = nullptr;
  const std::string payload = take_string(copart_identities_json(horizon, &text), &text);
  const json doc = json::parse(payload);
  int fails = 0;
  for (const auto& r : doc)
    if (!r.at("pass").get<bool>()) ++fails;
  if (format == "json") {
    std::cout << payload;
  } else if (format == "csv") {
    std::cout << "name,max_n,pass,first_mismatch\n";
    for (const auto& r : doc)
      std::cout << '"' << r.at("name").get<std::string>() << "\","
                << r.at("max_n").get<std::uint64_t>() << ','
                << (r.at("pass").get<bool>() ? "true" : "false") << ','
                << (r.at("first_mismatch").is_null()
                        ? std::string("-")
                        : std::to_string(r.at("first_mismatch").get<std::uint64_t>()))
                << "\n";
  } else {
    for (const auto& r : doc) {
      std::cout << (r.at("pass").get<bool>() ? "PASS" : "FAIL") << "  "
                << r.at("name").get<std::string>() << "  n<=" << r.at("max_n").get<std::uint64_t>();
      if (!r.at("first_mismatch").is_null())
        std::cout << "  first mismatch at n=" << r.at("first_mismatch").get<std::uint64_t>();
      std::cout << "\n";
    }
  }
  return fails == 0 ? 0 : 1;
}

int run_search(const std::string& source, std::int64_t modulus, std::uint64_t a_min,
               std::uint64_t a_max, std::uint64_t horizon, std::uint64_t min_terms,
               const std::string& format) {
  char* text = nullptr;
  const std::string payload = take_string(
      copart_search_json(source.c_str(), modulus, a_min, a_max, horizon, min_terms, &text),
      &text);
  if (format == "json") {
    std::cout << payload;
    return 0;
  }
  const json doc = json::parse(payload);
  if (format == "csv") {
    std::cout << "A,B,terms\n";
    for (const auto& c : doc.at("candidates"))
      std::cout << c.at("A").get<std::uint64_t>() << ',' << c.at("B").get<std::uint64_t>() << ','
                << c.at("terms").get<std::uint64_t>() << "\n";
    return 0;
  }
  for (const auto& c : doc.at("candidates"))
    std::cout << "A=" << c.at("A").get<std::uint64_t>() << " B=" << c.at("B").get<std::uint64_t>()
              << " terms=" << c.at("terms").get<std::uint64_t>() << "\n";
  std::cout << "candidates: " << doc.at("candidates").size() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"copartition laboratory"};
  app.require_subcommand(1);
  std::string format = "text";

  // coeffs
  auto* coeffs = app.add_subcommand("coeffs", "print coefficients of a series");
  std::uint64_t ca = 0, cb = 0, cm = 1, cN = 2000;
  std::string cname;
  std::int64_t cmodulus = 0;
  coeffs->add_option("--a", ca, "ground residue a");
  coeffs->add_option("--b", cb, "sky residue b");
  coeffs->add_option("--m", cm, "modulus m of the part progressions");
  coeffs->add_option("--name", cname, "named series (f1^5, f1*f3, cp111, nu, eo_star, ...)");
  coeffs->add_option("--N", cN, "truncation");
  coeffs->add_option("--modulus", cmodulus, "coefficient modulus (0 = exact)");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "list the triples of a given size");
  std::uint64_t ea = 1, eb = 1, em = 1, en = 0;
  enumerate->add_option("--a", ea, "ground residue a")->required();
  enumerate->add_option("--b", eb, "sky residue b")->required();
  enumerate->add_option("--m", em, "modulus m")->required();
  enumerate->add_option("--n", en, "size to enumerate")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "adjudicate congruence claims");
  std::string vclaim, vcatalog = "data/claims.json", vout;
  std::uint64_t vN = 2000;
  std::uint32_t vcap = 10;
  verify->add_option("--claim", vclaim, "inline claim: 'source; An+B; mod M; zero|name'");
  verify->add_option("--catalog", vcatalog, "claim catalog file");
  verify->add_option("--N", vN, "coefficient horizon");
  verify->add_option("--cap", vcap, "counterexamples kept per claim");
  verify->add_option("--out", vout, "write the report JSON here");

  // families
  auto* families = app.add_subcommand("families", "expand a claim family");
  std::string ffamily, fsource, flabel;
  std::uint64_t fp = 5, fstep = 0;
  std::uint32_t falpha = 0;
  std::int64_t fmodulus = 2;
  std::vector<std::uint64_t> fprimes, fresidues;
  families->add_option("--family", ffamily,
                       "thm-c10 cor-c12 cor-c13 thm-c14 thm-c16 cor-c23 cor-c24x thm-c24 "
                       "b2-c26 b2-c27 b2-fixed")
      ->required();
  families->add_option("--p", fp, "prime parameter");
  families->add_option("--alpha", falpha, "power parameter");
  families->add_option("--primes", fprimes, "prime list")->delimiter(',');
  families->add_option("--source", fsource, "series source for b2-fixed");
  families->add_option("--A", fstep, "progression step for b2-fixed");
  families->add_option("--modulus", fmodulus, "claim modulus for b2-fixed");
  families->add_option("--r", fresidues, "residue list for b2-fixed")->delimiter(',');
  families->add_option("--label", flabel, "provenance label for b2-fixed");

  // dissect
  auto* dissect = app.add_subcommand("dissect", "prime dissection of the Euler product");
  std::uint64_t dp = 5, dN = 200;
  std::int64_t dmodulus = 0;
  dissect->add_option("--p", dp, "prime >= 5")->required();
  dissect->add_option("--N", dN, "truncation");
  dissect->add_option("--modulus", dmodulus, "coefficient modulus (0 = exact)");

  // identities
  auto* identities = app.add_subcommand("identities", "run the special-case identity suite");
  std::uint64_t iN = 200;
  identities->add_option("--N", iN, "horizon");

  // search
  auto* search = app.add_subcommand("search", "sieve for vanishing progressions");
  std::string sname;
  std::uint64_t sa = 0, sb = 0, sm = 1, samin = 2, samax = 2, sN = 2000, sterms = 20;
  std::int64_t smodulus = 2;
  search->add_option("--a", sa, "ground residue a");
  search->add_option("--b", sb, "sky residue b");
  search->add_option("--m", sm, "modulus m");
  search->add_option("--name", sname, "named series source instead of cp(a,b,m)");
  search->add_option("--modulus", smodulus, "congruence modulus");
  search->add_option("--A-min", samin, "smallest step");
  search->add_option("--A-max", samax, "largest step");
  search->add_option("--N", sN, "coefficient horizon");
  search->add_option("--min-terms", sterms, "minimum progression terms required");

  for (auto* sub : {coeffs, enumerate, verify, families, dissect, identities, search})
    sub->add_option("--format", format, "output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (coeffs->parsed()) {
      std::string source = cname;
      if (source.empty()) {
        if (ca == 0 && cb == 0) throw CliError{"give --a/--b/--m or --name"};
        source = "cp(" + std::to_string(ca) + "," + std::to_string(cb) + "," +
                 std::to_string(cm) + ")";
      }
      return run_coeffs(source, cmodulus, cN, format);
    }
    if (enumerate->parsed()) return run_enumerate(ea, eb, em, en, format);
    if (verify->parsed()) return run_verify(vclaim, vcatalog, vN, vcap, vout, format);
    if (families->parsed())
      return run_families(ffamily, fp, falpha, fprimes, fsource, fstep, fmodulus, fresidues,
                          flabel, format);
    if (dissect->parsed()) return run_dissect(dp, dmodulus, dN, format);
    if (identities->parsed()) return run_identities(iN, format);
    if (search->parsed()) {
      std::string source = sname;
      if (source.empty())
        source = "cp(" + std::to_string(sa) + "," + std::to_string(sb) + "," +
                 std::to_string(sm) + ")";
      return run_search(source, smodulus, samin, samax, sN, sterms, format);
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
