#include "copart/congruence.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "copart/special_series.hpp"

namespace copart {

// residue products below stay within int64 for moduli up to this bound
constexpr std::int64_t kMaxNtModulus = 3037000499LL;

int legendre_symbol(std::int64_t a, std::int64_t p) {
  if (p < 3 || p % 2 == 0 || !is_prime(static_cast<std::uint64_t>(p)))
    throw Error(Errc::not_prime, "Legendre symbol needs an odd prime");
  if (p > kMaxNtModulus) throw Error(Errc::invalid_argument, "prime too large");
  std::int64_t base = a % p;
  if (base < 0) base += p;
  if (base == 0) return 0;
  // Euler's criterion: a^((p-1)/2) is 1 or p-1
  std::int64_t result = 1;
  std::int64_t exp = (p - 1) / 2;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result == 1 ? 1 : -1;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m < 2) throw Error(Errc::invalid_argument, "inverse needs a modulus >= 2");
  if (m > kMaxNtModulus) throw Error(Errc::invalid_argument, "modulus too large");
  std::int64_t r0 = m, r1 = ((a % m) + m) % m;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  if (r0 != 1)
    throw Error(Errc::not_invertible,
                std::to_string(a) + " is not invertible mod " + std::to_string(m));
  return ((t0 % m) + m) % m;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

SeriesSource SeriesSource::copartition(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  SeriesSource s;
  s.kind = Kind::copartition;
  s.params = {a, b, m};
  return s;
}

SeriesSource SeriesSource::eta(std::uint64_t base, std::uint64_t exponent) {
  if (base == 0 || exponent == 0)
    throw Error(Errc::invalid_argument, "eta power needs positive base and exponent");
  SeriesSource s;
  s.kind = Kind::eta_power;
  s.eta_base = base;
  s.eta_exponent = exponent;
  return s;
}

SeriesSource SeriesSource::named(const std::string& name) {
  static const char* known[] = {"f1*f3", "cp111", "cp011", "cp001"};
  if (std::find(std::begin(known), std::end(known), name) == std::end(known))
    throw Error(Errc::invalid_argument, "unknown named series: " + name);
  SeriesSource s;
  s.kind = Kind::named;
  s.name = name;
  return s;
}

std::string SeriesSource::display() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::copartition:
      os << "cp(" << params.a << ',' << params.b << ',' << params.m << ')';
      break;
    case Kind::eta_power:
      os << 'f' << eta_base;
      if (eta_exponent != 1) os << '^' << eta_exponent;
      break;
    case Kind::named:
      os << name;
      break;
  }
  return os.str();
}

namespace {

std::string trimmed(const std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw Error(Errc::parse, "expected a nonnegative integer for " + what + ", got '" + s + "'");
  return std::stoull(s);
}

}  // namespace

SeriesSource parse_source(const std::string& raw) {
  const std::string text = trimmed(raw);
  if (text.rfind("cp(", 0) == 0 && text.back() == ')') {
    const std::string inner = text.substr(3, text.size() - 4);
    std::vector<std::string> parts;
    std::istringstream is(inner);
    std::string piece;
    while (std::getline(is, piece, ',')) parts.push_back(trimmed(piece));
    if (parts.size() != 3)
      throw Error(Errc::parse, "copartition source needs three parameters: " + text);
    return SeriesSource::copartition(parse_u64(parts[0], "a"), parse_u64(parts[1], "b"),
                                     parse_u64(parts[2], "m"));
  }
  if (text == "f1*f3" || text == "cp111" || text == "cp011" || text == "cp001")
    return SeriesSource::named(text);
  if (text.size() >= 2 && text[0] == 'f') {
    const auto caret = text.find('^');
    const std::string base = text.substr(1, caret == std::string::npos ? std::string::npos
                                                                       : caret - 1);
    const std::uint64_t k = parse_u64(base, "eta base");
    const std::uint64_t e =
        caret == std::string::npos ? 1 : parse_u64(text.substr(caret + 1), "eta exponent");
    return SeriesSource::eta(k, e);
  }
  throw Error(Errc::parse, "unrecognized series source: '" + text + "'");
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::vacuous: return "VACUOUS";
  }
  return "?";
}

namespace {

std::int64_t mpz_residue(const mpz_class& v, std::int64_t m) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(m));
  return static_cast<std::int64_t>(r.get_ui());
}

Series build_modular_series(const SeriesSource& source, std::int64_t modulus,
                            std::uint64_t horizon) {
  switch (source.kind) {
    case SeriesSource::Kind::copartition:
      return cp_gf_series(source.params, modulus, horizon);
    case SeriesSource::Kind::eta_power:
      return euler_product(source.eta_base, modulus, horizon).pow(source.eta_exponent);
    case SeriesSource::Kind::named:
      break;
  }
  if (source.name == "f1*f3")
    return euler_product(1, modulus, horizon) * euler_product(3, modulus, horizon);
  throw Error(Errc::internal, "no modular series rule for " + source.display());
}

Series build_exact_series(const SeriesSource& source, std::uint64_t horizon) {
  return build_modular_series(source, 0, horizon);
}

std::optional<SpecialVariant> special_variant(const SeriesSource& source) {
  if (source.kind != SeriesSource::Kind::named) return std::nullopt;
  if (source.name == "cp111") return SpecialVariant::cp111;
  if (source.name == "cp011") return SpecialVariant::cp011;
  if (source.name == "cp001") return SpecialVariant::cp001;
  return std::nullopt;
}

// deterministic seed so identical runs sample identical spot terms
std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

std::vector<std::int64_t> SourceCache::residues(const SeriesSource& source, std::int64_t modulus,
                                                std::uint64_t horizon) {
  const std::string key = source.display() + "#" + std::to_string(modulus);
  auto it = residue_tables_.find(key);
  if (it == residue_tables_.end() || it->second.size() <= horizon) {
    std::vector<std::int64_t> table(horizon + 1);
    if (const auto variant = special_variant(source)) {
      const auto seq = cp_special(*variant, horizon);
      for (std::uint64_t n = 0; n <= horizon; ++n) table[n] = mpz_residue(seq[n], modulus);
    } else {
      const Series s = build_modular_series(source, modulus, horizon);
      for (std::uint64_t n = 0; n <= horizon; ++n) table[n] = s.coeff_i64(n);
    }
    it = residue_tables_.insert_or_assign(key, std::move(table)).first;
  }
  return std::vector<std::int64_t>(it->second.begin(), it->second.begin() + horizon + 1);
}

mpz_class SourceCache::exact_value(const SeriesSource& source, std::uint64_t n) {
  const std::string key = source.display();
  if (source.kind == SeriesSource::Kind::copartition) {
    const auto memo = exact_counts_.find({key, n});
    if (memo != exact_counts_.end()) return memo->second;
    mpz_class value = count_copartitions(source.params, n);
    exact_counts_.emplace(std::make_pair(key, n), value);
    return value;
  }
  if (const auto variant = special_variant(source)) {
    auto it = exact_sequences_.find(key);
    if (it == exact_sequences_.end() || it->second.size() <= n)
      it = exact_sequences_.insert_or_assign(key, cp_special(*variant, n)).first;
    return it->second[n];
  }
  auto it = exact_series_.find(key);
  if (it == exact_series_.end() || it->second.truncation() < n)
    it = exact_series_.insert_or_assign(key, build_exact_series(source, n)).first;
  return it->second.coeff(n);
}

VerificationReport verify_claim(const ProgressionClaim& claim, const VerifyOptions& options,
                                SourceCache& cache) {
  if (claim.step == 0) throw Error(Errc::invalid_argument, "claim step must be positive");
  if (claim.modulus < 2) throw Error(Errc::invalid_argument, "claim modulus must be >= 2");

  VerificationReport report;
  report.claim = claim;
  report.horizon = options.horizon;
  if (claim.offset > options.horizon) {
    report.verdict = Verdict::vacuous;
    return report;
  }
  const std::uint64_t terms = (options.horizon - claim.offset) / claim.step + 1;
  const auto lhs = cache.residues(claim.source, claim.modulus, options.horizon);
  std::vector<std::int64_t> rhs;
  if (claim.rhs.kind == ClaimRhs::Kind::series)
    rhs = cache.residues(claim.rhs.source, claim.modulus, terms - 1);

  for (std::uint64_t n = 0; n < terms; ++n) {
    const std::int64_t left = lhs[claim.step * n + claim.offset];
    const std::int64_t right = claim.rhs.kind == ClaimRhs::Kind::zero ? 0 : rhs[n];
    if (left != right && report.counterexamples.size() < options.counterexample_cap)
      report.counterexamples.push_back({n, left, right});
    if (left != right) report.verdict = Verdict::fail;
  }
  report.n_checked = terms;
  if (report.counterexamples.empty()) report.verdict = Verdict::pass;

  // replay a deterministic sample of terms through the exact engines
  std::vector<std::uint64_t> candidates;
  for (std::uint64_t n = 0; n < terms; ++n)
    if (claim.step * n + claim.offset <= options.spot_index_cap) candidates.push_back(n);
  std::ostringstream seed_text;
  seed_text << claim.source.display() << '|' << claim.step << '|' << claim.offset << '|'
            << claim.modulus;
  std::mt19937_64 rng(fnv1a(seed_text.str()));
  std::shuffle(candidates.begin(), candidates.end(), rng);
  if (candidates.size() > static_cast<std::size_t>(options.spot_target))
    candidates.resize(options.spot_target);
  for (const std::uint64_t n : candidates) {
    const std::uint64_t index = claim.step * n + claim.offset;
    const std::int64_t expect = lhs[index];
    const std::int64_t got = mpz_residue(cache.exact_value(claim.source, index), claim.modulus);
    if (expect != got)
      throw Error(Errc::internal, "modular and exact engines disagree at coefficient " +
                                      std::to_string(index) + " of " + claim.source.display());
    if (claim.rhs.kind == ClaimRhs::Kind::series) {
      const std::int64_t rhs_expect = rhs[n];
      const std::int64_t rhs_got =
          mpz_residue(cache.exact_value(claim.rhs.source, n), claim.modulus);
      if (rhs_expect != rhs_got)
        throw Error(Errc::internal, "modular and exact engines disagree at coefficient " +
                                        std::to_string(n) + " of " + claim.rhs.source.display());
    }
  }
  report.spot_checked = candidates.size();
  return report;
}

std::vector<VerificationReport> verify_claims(const std::vector<ProgressionClaim>& claims,
                                              const VerifyOptions& options) {
  SourceCache cache;
  std::vector<VerificationReport> reports;
  reports.reserve(claims.size());
  for (const auto& claim : claims) reports.push_back(verify_claim(claim, options, cache));
  return reports;
}

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (r > UINT64_MAX / base) throw Error(Errc::overflow, "progression step overflows");
    r *= base;
  }
  return r;
}

std::uint64_t exact_div24(std::uint64_t numerator, const std::string& what) {
  if (numerator % 24 != 0)
    throw Error(Errc::non_integral_offset, what + " is not divisible by 24");
  return numerator / 24;
}

void require_family_prime(std::uint64_t p) {
  if (p < 5 || !is_prime(p))
    throw Error(Errc::invalid_argument, "family needs a prime p >= 5, got " + std::to_string(p));
}

ProgressionClaim make_claim(SeriesSource source, std::uint64_t step, std::uint64_t raw_offset,
                            std::int64_t modulus, ClaimRhs rhs, std::string provenance) {
  ProgressionClaim c;
  c.source = std::move(source);
  c.step = step;
  c.offset = raw_offset % step;
  if (c.offset != raw_offset)
    provenance += " (raw offset " + std::to_string(raw_offset) + ")";
  c.modulus = modulus;
  c.rhs = std::move(rhs);
  c.provenance = std::move(provenance);
  return c;
}

ClaimRhs zero_rhs() { return ClaimRhs{ClaimRhs::Kind::zero, {}}; }

ClaimRhs series_rhs(SeriesSource s) { return ClaimRhs{ClaimRhs::Kind::series, std::move(s)}; }

}  // namespace

std::vector<ProgressionClaim> build_family(const FamilySpec& spec) {
  using Id = FamilySpec::Id;
  std::vector<ProgressionClaim> claims;

  const SeriesSource cp314 = SeriesSource::copartition(3, 1, 4);
  const SeriesSource cp516 = SeriesSource::copartition(5, 1, 6);
  const SeriesSource f1_5 = SeriesSource::eta(1, 5);
  const SeriesSource f1_4 = SeriesSource::eta(1, 4);

  auto alpha_tag = [&](const char* head) {
    std::ostringstream os;
    os << head;
    if (spec.alpha == 0)
      os << " alpha=0";
    else
      os << " p=" << spec.p << " alpha=" << spec.alpha;
    return os.str();
  };

  switch (spec.id) {
    case Id::thm_c10:
    case Id::thm_c16: {
      require_family_prime(spec.p);
      const bool four = spec.id == Id::thm_c16;
      const std::uint64_t step = checked_pow(spec.p, 2 * spec.alpha);
      const std::uint64_t offset = exact_div24((four ? 4 : 5) * (step - 1), "family offset");
      claims.push_back(make_claim(four ? cp516 : cp314, step, offset, four ? 6 : 2,
                                  series_rhs(four ? f1_4 : f1_5),
                                  alpha_tag(four ? "Theorem (c16)" : "Theorem (c10)")));
      break;
    }
    case Id::cor_c12:
    case Id::cor_c23: {
      require_family_prime(spec.p);
      if (spec.alpha < 1)
        throw Error(Errc::invalid_argument, "this family needs alpha >= 1");
      const bool four = spec.id == Id::cor_c23;
      const std::uint64_t c = four ? 4 : 5;
      const std::uint64_t step = checked_pow(spec.p, 2 * spec.alpha);
      const std::uint64_t scale = checked_pow(spec.p, 2 * spec.alpha - 1);
      for (std::uint64_t j = 1; j <= spec.p - 1; ++j) {
        const std::uint64_t raw =
            exact_div24((24 * j + c * spec.p) * scale - c, "family offset");
        std::ostringstream label;
        label << (four ? "Corollary (c23)" : "Corollary (c12)") << " p=" << spec.p
              << " alpha=" << spec.alpha << " j=" << j;
        claims.push_back(make_claim(four ? cp516 : cp314, step, raw, four ? 6 : 2, zero_rhs(),
                                    label.str()));
      }
      break;
    }
    case Id::cor_c13:
    case Id::cor_c24x: {
      require_family_prime(spec.p);
      const bool four = spec.id == Id::cor_c24x;
      const std::uint64_t c = four ? 4 : 5;
      const std::uint64_t step = checked_pow(spec.p, 2 * spec.alpha + 1);
      const std::uint64_t scale = checked_pow(spec.p, 2 * spec.alpha);
      for (std::uint64_t j = 1; j <= spec.p - 1; ++j) {
        if (legendre_symbol(static_cast<std::int64_t>(24 * j + c),
                            static_cast<std::int64_t>(spec.p)) != -1)
          continue;
        const std::uint64_t raw = exact_div24((24 * j + c) * scale - c, "family offset");
        std::ostringstream label;
        label << (four ? "Corollary (c24x)" : "Corollary (c13)") << " p=" << spec.p
              << " alpha=" << spec.alpha << " j=" << j;
        claims.push_back(make_claim(four ? cp516 : cp314, step, raw, four ? 6 : 2, zero_rhs(),
                                    label.str()));
      }
      break;
    }
    case Id::thm_c14:
    case Id::thm_c24: {
      const bool four = spec.id == Id::thm_c24;
      std::uint64_t step = 1;
      std::ostringstream plist;
      for (std::size_t i = 0; i < spec.primes.size(); ++i) {
        require_family_prime(spec.primes[i]);
        const std::uint64_t square = spec.primes[i] * spec.primes[i];
        if (step > UINT64_MAX / square) throw Error(Errc::overflow, "prime product overflows");
        step *= square;
        plist << (i ? "*" : "") << spec.primes[i];
      }
      const std::uint64_t offset = exact_div24((four ? 4 : 5) * (step - 1), "family offset");
      std::ostringstream label;
      label << (four ? "Theorem (c24)" : "Theorem (c14)") << " primes "
            << (spec.primes.empty() ? "none" : plist.str());
      claims.push_back(make_claim(four ? cp516 : cp314, step, offset, four ? 6 : 2,
                                  series_rhs(four ? f1_4 : f1_5), label.str()));
      break;
    }
    case Id::b2_c26: {
      require_family_prime(spec.p);
      if (spec.p % 4 != 3)
        throw Error(Errc::invalid_argument, "this family needs p = 3 (mod 4)");
      const std::int64_t p2 = static_cast<std::int64_t>(spec.p * spec.p);
      const std::int64_t delta = mod_inverse(24, p2);
      for (std::uint64_t t = 1; t <= spec.p - 1; ++t) {
        const std::int64_t raw =
            ((static_cast<std::int64_t>(spec.p * t) - 5 * delta) % p2 + p2) % p2;
        std::ostringstream label;
        label << "Burson-Eichhorn Corollary 4.5 p=" << spec.p << " t=" << t;
        claims.push_back(make_claim(cp314, spec.p * spec.p, static_cast<std::uint64_t>(raw), 2,
                                    zero_rhs(), label.str()));
      }
      break;
    }
    case Id::b2_c27: {
      if (spec.p < 3 || !is_prime(spec.p) || spec.p % 3 != 2)
        throw Error(Errc::invalid_argument, "this family needs an odd prime p = 2 (mod 3)");
      const std::int64_t p2 = static_cast<std::int64_t>(spec.p * spec.p);
      const std::int64_t delta = mod_inverse(6, p2);
      for (std::uint64_t t = 1; t <= spec.p - 1; ++t) {
        const std::int64_t raw =
            ((static_cast<std::int64_t>(spec.p * t) - delta) % p2 + p2) % p2;
        std::ostringstream label;
        label << "Burson-Eichhorn Corollary 4.10 p=" << spec.p << " t=" << t;
        claims.push_back(make_claim(cp516, spec.p * spec.p, static_cast<std::uint64_t>(raw), 2,
                                    zero_rhs(), label.str()));
      }
      break;
    }
    case Id::b2_fixed: {
      if (spec.step == 0) throw Error(Errc::invalid_argument, "fixed family needs a step");
      for (const std::uint64_t r : spec.residues) {
        std::ostringstream label;
        label << (spec.label.empty() ? "fixed residue family" : spec.label) << " r=" << r;
        claims.push_back(
            make_claim(spec.source, spec.step, r, spec.modulus, zero_rhs(), label.str()));
      }
      break;
    }
  }
  return claims;
}

std::vector<SearchCandidate> search_progressions(const SeriesSource& source,
                                                 std::int64_t modulus, std::uint64_t step_min,
                                                 std::uint64_t step_max, std::uint64_t horizon,
                                                 std::uint64_t min_terms, SourceCache& cache) {
  if (step_min == 0 || step_max < step_min)
    throw Error(Errc::invalid_argument, "bad step range");
  if (min_terms == 0) throw Error(Errc::invalid_argument, "min_terms must be positive");
  const auto table = cache.residues(source, modulus, horizon);
  std::vector<SearchCandidate> found;
  for (std::uint64_t step = step_min; step <= step_max; ++step) {
    for (std::uint64_t offset = 0; offset < step && offset <= horizon; ++offset) {
      const std::uint64_t terms = (horizon - offset) / step + 1;
      if (terms < min_terms) continue;
      bool all_zero = true;
      for (std::uint64_t index = offset; index <= horizon; index += step)
        if (table[index] != 0) {
          all_zero = false;
          break;
        }
      if (all_zero) found.push_back({step, offset, terms});
    }
  }
  return found;
}

ProgressionClaim parse_inline_claim(const std::string& text) {
  std::vector<std::string> parts;
  std::istringstream is(text);
  std::string piece;
  while (std::getline(is, piece, ';')) parts.push_back(trimmed(piece));
  if (parts.size() != 4)
    throw Error(Errc::parse,
                "inline claim needs 4 fields: source; An+B; mod M; rhs — got '" + text + "'");

  ProgressionClaim claim;
  claim.source = parse_source(parts[0]);

  const std::string& prog = parts[1];
  const auto n_pos = prog.find('n');
  if (n_pos == std::string::npos)
    throw Error(Errc::parse, "progression must look like 'An+B': '" + prog + "'");
  const std::string step_text = trimmed(prog.substr(0, n_pos));
  claim.step = step_text.empty() ? 1 : parse_u64(step_text, "progression step");
  if (claim.step == 0) throw Error(Errc::parse, "progression step must be positive");
  std::string rest = trimmed(prog.substr(n_pos + 1));
  if (!rest.empty()) {
    if (rest[0] != '+')
      throw Error(Errc::parse, "progression must look like 'An+B': '" + prog + "'");
    claim.offset = parse_u64(trimmed(rest.substr(1)), "progression offset");
  }

  std::string mod_text = parts[2];
  if (mod_text.rfind("mod", 0) != 0)
    throw Error(Errc::parse, "third field must be 'mod M': '" + mod_text + "'");
  claim.modulus =
      static_cast<std::int64_t>(parse_u64(trimmed(mod_text.substr(3)), "claim modulus"));
  if (claim.modulus < 2) throw Error(Errc::parse, "claim modulus must be >= 2");

  if (parts[3] == "zero")
    claim.rhs = zero_rhs();
  else
    claim.rhs = series_rhs(parse_source(parts[3]));
  claim.provenance = "inline";
  return claim;
}

}  // namespace copart
