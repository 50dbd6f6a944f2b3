#pragma once

// The adjudication layer: arithmetic-progression congruence claims as
// data, a verifier that checks them against coefficient tables up to a
// horizon, family generators that expand parameterized statements into
// explicit claims, a search sieve for new candidate progressions, and a
// JSON catalog/report format.
//
// Claims carry a canonical offset 0 <= B < A. The verifier itself
// accepts any raw offset and tests the progression {A*n + B : n >= 0}
// as a plain set of indices, so normalized and raw forms differ only in
// leading terms.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "copart/copartitions.hpp"
#include "copart/series.hpp"

namespace copart {

// Euler-criterion Legendre symbol; p must be an odd prime
int legendre_symbol(std::int64_t a, std::int64_t p);

// inverse of a modulo m in [0, m); throws Errc::not_invertible
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

// deterministic trial division, desk scale
bool is_prime(std::uint64_t n);

struct SeriesSource {
  enum class Kind { copartition, eta_power, named };

  Kind kind = Kind::eta_power;
  CopartitionParams params{};            // copartition
  std::uint64_t eta_base = 1;            // eta_power: f_{eta_base}^eta_exponent
  std::uint64_t eta_exponent = 1;
  std::string name;                      // named: "f1*f3", "cp111", "cp011", "cp001"

  static SeriesSource copartition(std::uint64_t a, std::uint64_t b, std::uint64_t m);
  static SeriesSource eta(std::uint64_t base, std::uint64_t exponent);
  static SeriesSource named(const std::string& name);

  // "cp(3,1,4)", "f1^5", "f1*f3", ...; also the cache key
  std::string display() const;
  bool operator==(const SeriesSource&) const = default;
};

// parses the display form back into a source
SeriesSource parse_source(const std::string& text);

struct ClaimRhs {
  enum class Kind { zero, series };
  Kind kind = Kind::zero;
  SeriesSource source{};  // meaningful when kind == series

  bool operator==(const ClaimRhs&) const = default;
};

struct ProgressionClaim {
  SeriesSource source;
  std::uint64_t step = 1;     // A
  std::uint64_t offset = 0;   // B
  std::int64_t modulus = 2;   // M
  ClaimRhs rhs{};
  std::string provenance;

  bool operator==(const ProgressionClaim&) const = default;
};

enum class Verdict { pass, fail, vacuous };

const char* verdict_name(Verdict v);

struct Counterexample {
  std::uint64_t n = 0;      // progression index; the coefficient sits at step*n + offset
  std::int64_t lhs = 0;     // residues mod the claim modulus
  std::int64_t rhs = 0;
};

struct VerificationReport {
  ProgressionClaim claim;
  std::uint64_t horizon = 0;
  Verdict verdict = Verdict::vacuous;
  std::uint64_t n_checked = 0;
  std::vector<Counterexample> counterexamples;  // nonempty iff verdict == fail
  std::uint64_t spot_checked = 0;               // terms recomputed by the exact engines
};

struct VerifyOptions {
  std::uint64_t horizon = 2000;
  std::uint32_t counterexample_cap = 10;
  std::uint32_t spot_target = 10;
  // exact recomputation is limited to coefficients at index <= this
  std::uint64_t spot_index_cap = 1500;
};

// Memoized coefficient tables, one per (source, modulus); the modular
// series engine feeds the verifier and the sieve, the exact engines
// back the spot checks. Construct once per batch and share.
class SourceCache {
 public:
  std::vector<std::int64_t> residues(const SeriesSource& source, std::int64_t modulus,
                                     std::uint64_t horizon);
  // copartition sources go through the partition-count DP, everything
  // else through exact-mode series
  mpz_class exact_value(const SeriesSource& source, std::uint64_t n);

 private:
  std::map<std::string, std::vector<std::int64_t>> residue_tables_;
  std::map<std::string, Series> exact_series_;
  std::map<std::string, std::vector<mpz_class>> exact_sequences_;
  std::map<std::pair<std::string, std::uint64_t>, mpz_class> exact_counts_;
};

VerificationReport verify_claim(const ProgressionClaim& claim, const VerifyOptions& options,
                                SourceCache& cache);
std::vector<VerificationReport> verify_claims(const std::vector<ProgressionClaim>& claims,
                                              const VerifyOptions& options);

struct FamilySpec {
  enum class Id {
    thm_c10,   // cp(3,1,4) at A = p^(2a), B = 5(p^(2a)-1)/24, rhs f1^5 mod 2
    cor_c12,   // zero claims at ((24j+5p)p^(2a-1)-5)/24, j = 1..p-1
    cor_c13,   // zero claims at ((24j+5)p^(2a)-5)/24 when (24j+5|p) = -1
    thm_c14,   // prime-list squares version of thm_c10
    thm_c16,   // cp(5,1,6) analogue with constant 4, rhs f1^4 mod 6
    cor_c23,
    cor_c24x,
    thm_c24,
    b2_c26,    // cp(3,1,4) mod 2 at p^2 k + (pt - 5*inv24) for p = 3 (mod 4)
    b2_c27,    // cp(5,1,6) mod 2 at p^2 k + (pt - inv6) for p = 2 (mod 3)
    b2_fixed,  // explicit residue list for a given source, step and modulus
  };

  Id id = Id::thm_c10;
  std::uint64_t p = 5;
  std::uint32_t alpha = 0;
  std::vector<std::uint64_t> primes;    // thm_c14 / thm_c24
  std::vector<std::uint64_t> residues;  // b2_fixed
  std::uint64_t step = 0;               // b2_fixed
  std::int64_t modulus = 2;             // b2_fixed
  SeriesSource source{};                // b2_fixed
  std::string label;                    // b2_fixed provenance prefix
};

std::vector<ProgressionClaim> build_family(const FamilySpec& spec);

struct SearchCandidate {
  std::uint64_t step = 0;
  std::uint64_t offset = 0;
  std::uint64_t terms_checked = 0;
};

// every (A, B) with step_min <= A <= step_max whose progression vanishes
// mod `modulus` for all terms <= horizon, with at least min_terms terms
std::vector<SearchCandidate> search_progressions(const SeriesSource& source,
                                                 std::int64_t modulus, std::uint64_t step_min,
                                                 std::uint64_t step_max, std::uint64_t horizon,
                                                 std::uint64_t min_terms, SourceCache& cache);

// catalog and report serialization; catalogs enforce the canonical
// 0 <= B < A form, while the lenient parse keeps raw offsets so a
// progression can be tested exactly as printed
std::vector<ProgressionClaim> catalog_from_json(const std::string& text);
std::vector<ProgressionClaim> claims_from_json(const std::string& text,
                                               bool enforce_canonical_offset);
std::vector<ProgressionClaim> catalog_load(const std::string& path);
std::string catalog_to_json(const std::vector<ProgressionClaim>& claims);
std::string reports_to_json(const std::vector<VerificationReport>& reports);
void catalog_save(const std::vector<VerificationReport>& reports, const std::string& path);

// "cp(3,1,4); 2n+0; mod 2; zero" -> claim (raw offsets allowed)
ProgressionClaim parse_inline_claim(const std::string& text);

struct IdentityCheckResult {
  std::string name;
  std::uint64_t max_n = 0;
  bool pass = false;
  std::optional<std::uint64_t> first_mismatch;
};

// the special-case identities (partial-sum, divisor-convolution and
// even/odd-part ones), each checked by two independent routes
std::vector<IdentityCheckResult> run_identity_suite(std::uint64_t horizon);

}  // namespace copart
