#pragma once

// Truncated formal power series in q with exact integer coefficients
// (modulus 0) or canonical residues in [0,M) (modulus M >= 2).
//
// A series of truncation N stores exactly N+1 coefficients c_0..c_N.
// Values are immutable after construction; every operation returns a
// fresh series. Binary operations require equal moduli and truncate the
// result to the shorter operand.

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace copart {

enum class Errc {
  invalid_argument,
  modulus_mismatch,
  non_unit_constant_term,
  overflow,
  not_prime,
  not_invertible,
  unsupported_params,
  non_integral_offset,
  parse,
  io,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

const char* errc_name(Errc code);

class Series {
 public:
  // zero series of truncation 0, exact mode
  Series() : zc_(1) {}

  static Series one(std::int64_t modulus, std::uint64_t truncation);
  static Series zero(std::int64_t modulus, std::uint64_t truncation);
  // coefficients are normalized into [0,M) when modulus >= 2
  static Series from_coeffs(std::int64_t modulus, std::vector<mpz_class> coeffs);
  static Series from_int_coeffs(std::int64_t modulus, const std::vector<std::int64_t>& coeffs);

  std::int64_t modulus() const { return modulus_; }
  std::uint64_t truncation() const;
  bool exact() const { return modulus_ == 0; }

  mpz_class coeff(std::uint64_t n) const;
  // throws Errc::overflow when the exact coefficient does not fit
  std::int64_t coeff_i64(std::uint64_t n) const;

  Series operator+(const Series& rhs) const;
  Series operator-(const Series& rhs) const;
  Series operator-() const;
  Series operator*(const Series& rhs) const;

  // requires a unit constant term: +-1 in exact mode, gcd(c0,M)=1 otherwise
  Series invert() const;
  Series pow(std::uint64_t k) const;

  // d_n = c_{step*n + offset}; result truncation floor((N-offset)/step)
  Series extract_progression(std::uint64_t step, std::uint64_t offset) const;

  // exact -> residues mod M; modular only when M divides the current modulus
  Series reduce_mod(std::int64_t m) const;

  Series truncated(std::uint64_t new_truncation) const;
  // multiply by q^amount, keeping the truncation
  Series shifted(std::uint64_t amount) const;

  bool operator==(const Series& rhs) const;
  bool operator!=(const Series& rhs) const { return !(*this == rhs); }

  static bool congruent(const Series& a, const Series& b, std::int64_t m, std::uint64_t upto);
  static std::optional<std::uint64_t> first_mismatch(const Series& a, const Series& b,
                                                     std::int64_t m, std::uint64_t upto);

  std::string to_string(std::uint64_t max_terms = 12) const;

 private:
  Series(std::int64_t modulus, std::vector<mpz_class> zc) : modulus_(modulus), zc_(std::move(zc)) {}
  Series(std::int64_t modulus, std::vector<std::int64_t> mc) : modulus_(modulus), mc_(std::move(mc)) {}

  std::int64_t modulus_ = 0;
  std::vector<mpz_class> zc_;       // exact coefficients, used when modulus_ == 0
  std::vector<std::int64_t> mc_;    // canonical residues, used when modulus_ >= 2

  friend Series pochhammer(std::uint64_t a, std::uint64_t m, std::int64_t modulus,
                           std::uint64_t truncation);
};

std::ostream& operator<<(std::ostream& os, const Series& s);

// truncated product of (1 - q^(a + i*m)) over all a + i*m <= truncation
Series pochhammer(std::uint64_t a, std::uint64_t m, std::int64_t modulus,
                  std::uint64_t truncation);

}  // namespace copart
