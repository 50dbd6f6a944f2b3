#include "copart/copart.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

#include <json.hpp>

#include "copart/congruence.hpp"
#include "copart/copartitions.hpp"
#include "copart/series.hpp"
#include "copart/special_series.hpp"

struct copart_series {
  copart::Series value;
};

namespace {

using copart::Errc;
using copart::Error;
using ordered_json = nlohmann::ordered_json;

thread_local std::string t_last_error;

copart_status map_errc(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return COPART_ERR_INVALID_ARGUMENT;
    case Errc::modulus_mismatch: return COPART_ERR_MODULUS_MISMATCH;
    case Errc::non_unit_constant_term: return COPART_ERR_NON_UNIT;
    case Errc::overflow: return COPART_ERR_OVERFLOW;
    case Errc::not_prime: return COPART_ERR_NOT_PRIME;
    case Errc::not_invertible: return COPART_ERR_NOT_INVERTIBLE;
    case Errc::unsupported_params: return COPART_ERR_UNSUPPORTED_PARAMS;
    case Errc::non_integral_offset: return COPART_ERR_NON_INTEGRAL_OFFSET;
    case Errc::parse: return COPART_ERR_PARSE;
    case Errc::io: return COPART_ERR_IO;
    case Errc::internal: return COPART_ERR_INTERNAL;
  }
  return COPART_ERR_INTERNAL;
}

template <typename F>
copart_status guarded(F&& body) {
  try {
    body();
    return COPART_OK;
  } catch (const Error& e) {
    t_last_error = e.what();
    return map_errc(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return COPART_ERR_INTERNAL;
  } catch (...) {
    t_last_error = "unknown error";
    return COPART_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* message) {
  if (!ok) throw Error(Errc::invalid_argument, message);
}

ordered_json parts_to_json(const std::vector<std::uint64_t>& parts) {
  ordered_json a = ordered_json::array();
  for (auto v : parts) a.push_back(v);
  return a;
}

copart::FamilySpec family_from_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::parse, std::string("invalid family JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("family") || !doc.at("family").is_string())
    throw Error(Errc::parse, "family JSON needs a string 'family' field");
  const std::string name = doc.at("family").get<std::string>();

  using Id = copart::FamilySpec::Id;
  copart::FamilySpec spec;
  if (name == "thm-c10") spec.id = Id::thm_c10;
  else if (name == "cor-c12") spec.id = Id::cor_c12;
  else if (name == "cor-c13") spec.id = Id::cor_c13;
  else if (name == "thm-c14") spec.id = Id::thm_c14;
  else if (name == "thm-c16") spec.id = Id::thm_c16;
  else if (name == "cor-c23") spec.id = Id::cor_c23;
  else if (name == "cor-c24x") spec.id = Id::cor_c24x;
  else if (name == "thm-c24") spec.id = Id::thm_c24;
  else if (name == "b2-c26") spec.id = Id::b2_c26;
  else if (name == "b2-c27") spec.id = Id::b2_c27;
  else if (name == "b2-fixed") spec.id = Id::b2_fixed;
  else throw Error(Errc::parse, "unknown family id '" + name + "'");

  try {
    if (doc.contains("p")) spec.p = doc.at("p").get<std::uint64_t>();
    if (doc.contains("alpha")) spec.alpha = doc.at("alpha").get<std::uint32_t>();
    if (doc.contains("primes"))
      spec.primes = doc.at("primes").get<std::vector<std::uint64_t>>();
    if (doc.contains("residues"))
      spec.residues = doc.at("residues").get<std::vector<std::uint64_t>>();
    if (doc.contains("A")) spec.step = doc.at("A").get<std::uint64_t>();
    if (doc.contains("modulus")) spec.modulus = doc.at("modulus").get<std::int64_t>();
    if (doc.contains("source"))
      spec.source = copart::parse_source(doc.at("source").get<std::string>());
    if (doc.contains("label")) spec.label = doc.at("label").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse, std::string("bad family field: ") + e.what());
  }
  return spec;
}

}  // namespace

extern "C" {

const char* copart_status_name(copart_status status) {
  switch (status) {
    case COPART_OK: return "ok";
    case COPART_ERR_INVALID_ARGUMENT: return "invalid argument";
    case COPART_ERR_MODULUS_MISMATCH: return "modulus mismatch";
    case COPART_ERR_NON_UNIT: return "non-unit constant term";
    case COPART_ERR_OVERFLOW: return "integer overflow";
    case COPART_ERR_NOT_PRIME: return "not a prime";
    case COPART_ERR_NOT_INVERTIBLE: return "not invertible";
    case COPART_ERR_UNSUPPORTED_PARAMS: return "unsupported parameters";
    case COPART_ERR_NON_INTEGRAL_OFFSET: return "non-integral offset";
    case COPART_ERR_PARSE: return "parse error";
    case COPART_ERR_IO: return "i/o error";
    case COPART_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* copart_last_error(void) { return t_last_error.c_str(); }

void copart_string_free(char* text) { std::free(text); }

copart_status copart_series_one(int64_t modulus, uint64_t truncation, copart_series** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = new copart_series{copart::Series::one(modulus, truncation)};
  });
}

copart_status copart_series_pochhammer(uint64_t a, uint64_t m, int64_t modulus,
                                       uint64_t truncation, copart_series** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = new copart_series{copart::pochhammer(a, m, modulus, truncation)};
  });
}

copart_status copart_series_theta(uint64_t a, uint64_t b, int64_t modulus, uint64_t truncation,
                                  copart_series** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = new copart_series{copart::theta_f(a, b, modulus, truncation)};
  });
}

copart_status copart_series_eta_power(uint64_t base, uint64_t exponent, int64_t modulus,
                                      uint64_t truncation, copart_series** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = new copart_series{
        copart::euler_product(base, modulus, truncation).pow(exponent)};
  });
}

copart_status copart_series_nu(int64_t modulus, uint64_t truncation, copart_series** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = new copart_series{copart::nu_series(modulus, truncation)};
  });
}

copart_status copart_series_eo_star(uint64_t truncation, copart_series** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = new copart_series{copart::eo_star_series(truncation)};
  });
}

copart_status copart_series_copartition_gf(uint64_t a, uint64_t b, uint64_t m, int64_t modulus,
                                           uint64_t truncation, copart_series** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = new copart_series{copart::cp_gf_series({a, b, m}, modulus, truncation)};
  });
}

copart_status copart_series_mul(const copart_series* x, const copart_series* y,
                                copart_series** out) {
  return guarded([&] {
    require(x && y && out, "null argument");
    *out = new copart_series{x->value * y->value};
  });
}

copart_status copart_series_invert(const copart_series* x, copart_series** out) {
  return guarded([&] {
    require(x && out, "null argument");
    *out = new copart_series{x->value.invert()};
  });
}

copart_status copart_series_pow(const copart_series* x, uint64_t exponent, copart_series** out) {
  return guarded([&] {
    require(x && out, "null argument");
    *out = new copart_series{x->value.pow(exponent)};
  });
}

copart_status copart_series_extract(const copart_series* x, uint64_t step, uint64_t offset,
                                    copart_series** out) {
  return guarded([&] {
    require(x && out, "null argument");
    *out = new copart_series{x->value.extract_progression(step, offset)};
  });
}

copart_status copart_series_reduce(const copart_series* x, int64_t modulus,
                                   copart_series** out) {
  return guarded([&] {
    require(x && out, "null argument");
    *out = new copart_series{x->value.reduce_mod(modulus)};
  });
}

uint64_t copart_series_truncation(const copart_series* x) {
  return x ? x->value.truncation() : 0;
}

int64_t copart_series_modulus(const copart_series* x) { return x ? x->value.modulus() : 0; }

copart_status copart_series_coeff_int64(const copart_series* x, uint64_t n, int64_t* out) {
  return guarded([&] {
    require(x && out, "null argument");
    *out = x->value.coeff_i64(n);
  });
}

copart_status copart_series_coeff_string(const copart_series* x, uint64_t n, char** out) {
  return guarded([&] {
    require(x && out, "null argument");
    *out = dup_string(x->value.coeff(n).get_str());
  });
}

copart_status copart_series_congruent(const copart_series* x, const copart_series* y,
                                      int64_t modulus, uint64_t upto, int* out_congruent,
                                      int64_t* out_first_mismatch) {
  return guarded([&] {
    require(x && y && out_congruent, "null argument");
    const auto mismatch = copart::Series::first_mismatch(x->value, y->value, modulus, upto);
    *out_congruent = mismatch ? 0 : 1;
    if (out_first_mismatch)
      *out_first_mismatch = mismatch ? static_cast<int64_t>(*mismatch) : -1;
  });
}

void copart_series_free(copart_series* x) { delete x; }

copart_status copart_count(uint64_t a, uint64_t b, uint64_t m, uint64_t n, char** out_decimal) {
  return guarded([&] {
    require(out_decimal != nullptr, "null output pointer");
    *out_decimal = dup_string(copart::count_copartitions({a, b, m}, n).get_str());
  });
}

copart_status copart_enumerate_json(uint64_t a, uint64_t b, uint64_t m, uint64_t n,
                                    char** out_json) {
  return guarded([&] {
    require(out_json != nullptr, "null output pointer");
    const auto triples = copart::enumerate_copartitions({a, b, m}, n);
    ordered_json doc;
    doc["a"] = a;
    doc["b"] = b;
    doc["m"] = m;
    doc["n"] = n;
    doc["count"] = triples.size();
    ordered_json list = ordered_json::array();
    for (const auto& t : triples) {
      ordered_json jt;
      jt["ground"] = parts_to_json(t.ground);
      jt["rectangle"] = parts_to_json(t.rectangle);
      jt["sky"] = parts_to_json(t.sky);
      list.push_back(jt);
    }
    doc["triples"] = list;
    *out_json = dup_string(doc.dump(2) + "\n");
  });
}

copart_status copart_refined_counts_json(uint64_t a, uint64_t b, uint64_t m, uint64_t n,
                                         char** out_json) {
  return guarded([&] {
    require(out_json != nullptr, "null output pointer");
    const auto table = copart::refined_counts({a, b, m}, n);
    ordered_json doc;
    doc["a"] = a;
    doc["b"] = b;
    doc["m"] = m;
    doc["n"] = n;
    doc["total"] = table.total.get_str();
    ordered_json entries = ordered_json::array();
    for (const auto& [ws, count] : table.entries) {
      ordered_json e;
      e["w"] = ws.first;
      e["s"] = ws.second;
      e["count"] = count.get_str();
      entries.push_back(e);
    }
    doc["entries"] = entries;
    *out_json = dup_string(doc.dump(2) + "\n");
  });
}

copart_status copart_special_sequence_json(const char* name, uint64_t n_max, char** out_json) {
  return guarded([&] {
    require(name && out_json, "null argument");
    copart::SpecialVariant variant;
    const std::string id(name);
    if (id == "cp111") variant = copart::SpecialVariant::cp111;
    else if (id == "cp011") variant = copart::SpecialVariant::cp011;
    else if (id == "cp001") variant = copart::SpecialVariant::cp001;
    else throw Error(Errc::invalid_argument, "unknown special sequence '" + id + "'");
    const auto values = copart::cp_special(variant, n_max);
    ordered_json doc;
    doc["name"] = id;
    doc["n_max"] = n_max;
    ordered_json list = ordered_json::array();
    for (const auto& v : values) list.push_back(v.get_str());
    doc["values"] = list;
    *out_json = dup_string(doc.dump(2) + "\n");
  });
}

copart_status copart_legendre(int64_t a, int64_t p, int* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = copart::legendre_symbol(a, p);
  });
}

copart_status copart_mod_inverse(int64_t a, int64_t modulus, int64_t* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = copart::mod_inverse(a, modulus);
  });
}

int copart_is_prime(uint64_t n) { return copart::is_prime(n) ? 1 : 0; }

copart_status copart_dissect_json(uint64_t p, int64_t modulus, uint64_t truncation,
                                  char** out_json) {
  return guarded([&] {
    require(out_json != nullptr, "null output pointer");
    const auto dissection = copart::p_dissect_f(p, modulus, truncation);
    const auto reference = copart::euler_product(1, modulus, truncation);
    const auto mismatch = [&]() -> std::optional<std::uint64_t> {
      for (std::uint64_t n = 0; n <= truncation; ++n)
        if (dissection.reassembled.coeff(n) != reference.coeff(n)) return n;
      return std::nullopt;
    }();

    // residue class of every exponent each component can produce
    const std::uint64_t residual_class = ((p * p - 1) / 24) % p;
    bool disjoint = true;
    ordered_json components = ordered_json::array();
    for (const auto& c : dissection.components) {
      ordered_json jc;
      if (c.kind == copart::DissectionComponent::Kind::theta_term) {
        jc["kind"] = "theta";
        jc["k"] = c.k;
        jc["theta_a"] = c.theta_a;
        jc["theta_b"] = c.theta_b;
        if (c.shift % p == residual_class) disjoint = false;
      } else {
        jc["kind"] = "residual";
      }
      jc["sign"] = c.sign;
      jc["shift"] = c.shift;
      jc["class_mod_p"] = c.shift % p;
      components.push_back(jc);
    }

    ordered_json doc;
    doc["p"] = p;
    doc["modulus"] = modulus;
    doc["truncation"] = truncation;
    doc["residual_exponent"] = dissection.residual_exponent;
    doc["components"] = components;
    doc["reassembly_matches"] = !mismatch.has_value();
    if (mismatch)
      doc["first_mismatch"] = *mismatch;
    else
      doc["first_mismatch"] = nullptr;
    doc["residual_class_disjoint"] = disjoint;
    *out_json = dup_string(doc.dump(2) + "\n");
  });
}

copart_status copart_parse_claim(const char* text, char** out_json) {
  return guarded([&] {
    require(text && out_json, "null argument");
    const auto claim = copart::parse_inline_claim(text);
    *out_json = dup_string(copart::catalog_to_json({claim}));
  });
}

copart_status copart_build_family_json(const char* family_json, char** out_claims_json) {
  return guarded([&] {
    require(family_json && out_claims_json, "null argument");
    const auto claims = copart::build_family(family_from_json(family_json));
    *out_claims_json = dup_string(copart::catalog_to_json(claims));
  });
}

copart_status copart_catalog_load_json(const char* path, char** out_claims_json) {
  return guarded([&] {
    require(path && out_claims_json, "null argument");
    const auto claims = copart::catalog_load(path);
    *out_claims_json = dup_string(copart::catalog_to_json(claims));
  });
}

copart_status copart_verify_claims_json(const char* claims_json, uint64_t horizon,
                                        uint32_t counterexample_cap, char** out_report_json) {
  return guarded([&] {
    require(claims_json && out_report_json, "null argument");
    const auto claims = copart::claims_from_json(claims_json, false);
    copart::VerifyOptions options;
    options.horizon = horizon;
    if (counterexample_cap > 0) options.counterexample_cap = counterexample_cap;
    const auto reports = copart::verify_claims(claims, options);
    *out_report_json = dup_string(copart::reports_to_json(reports));
  });
}

copart_status copart_report_save(const char* report_json, const char* path) {
  return guarded([&] {
    require(report_json && path, "null argument");
    std::FILE* f = std::fopen(path, "wb");
    if (!f) throw Error(Errc::io, std::string("cannot open report file: ") + path);
    const std::size_t len = std::strlen(report_json);
    const bool ok = std::fwrite(report_json, 1, len, f) == len;
    std::fclose(f);
    if (!ok) throw Error(Errc::io, std::string("failed writing report file: ") + path);
  });
}

copart_status copart_search_json(const char* source_text, int64_t modulus, uint64_t step_min,
                                 uint64_t step_max, uint64_t horizon, uint64_t min_terms,
                                 char** out_json) {
  return guarded([&] {
    require(source_text && out_json, "null argument");
    const auto source = copart::parse_source(source_text);
    copart::SourceCache cache;
    const auto candidates = copart::search_progressions(source, modulus, step_min, step_max,
                                                        horizon, min_terms, cache);
    ordered_json doc;
    doc["source"] = source.display();
    doc["modulus"] = modulus;
    doc["step_min"] = step_min;
    doc["step_max"] = step_max;
    doc["horizon"] = horizon;
    doc["min_terms"] = min_terms;
    ordered_json list = ordered_json::array();
    for (const auto& c : candidates) {
      ordered_json jc;
      jc["A"] = c.step;
      jc["B"] = c.offset;
      jc["terms"] = c.terms_checked;
      list.push_back(jc);
    }
    doc["candidates"] = list;
    *out_json = dup_string(doc.dump(2) + "\n");
  });
}

copart_status copart_identities_json(uint64_t horizon, char** out_json) {
  return guarded([&] {
    require(out_json != nullptr, "null output pointer");
    const auto results = copart::run_identity_suite(horizon);
    ordered_json doc = ordered_json::array();
    for (const auto& r : results) {
      ordered_json j;
      j["name"] = r.name;
      j["max_n"] = r.max_n;
      j["pass"] = r.pass;
      if (r.first_mismatch)
        j["first_mismatch"] = *r.first_mismatch;
      else
        j["first_mismatch"] = nullptr;
      doc.push_back(j);
    }
    *out_json = dup_string(doc.dump(2) + "\n");
  });
}

}  // extern "C"
