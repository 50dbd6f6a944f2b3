#pragma once

// Named series built on top of the core arithmetic: the Euler products
// f_k, the two-parameter theta series, its prime dissection, partition
// and divisor counting sequences, and the third-order mock theta series
// nu with its even part.

#include <cstdint>
#include <vector>

#include "copart/series.hpp"

namespace copart {

// f_k = product of (1 - q^(k*i)) for i >= 1, truncated
inline Series euler_product(std::uint64_t k, std::int64_t modulus, std::uint64_t truncation) {
  return pochhammer(k, k, modulus, truncation);
}

// bilateral theta sum: coefficient (-1)^j at exponent a*j(j+1)/2 + b*j(j-1)/2
Series theta_f(std::uint64_t a, std::uint64_t b, std::int64_t modulus, std::uint64_t truncation);

struct DissectionComponent {
  enum class Kind { theta_term, residual_term };
  Kind kind;
  int k = 0;                     // summation index (theta terms only)
  int sign = 1;                  // +1 or -1
  std::uint64_t shift = 0;       // power of q multiplying the inner series
  std::uint64_t theta_a = 0;     // inner theta exponents (theta terms only)
  std::uint64_t theta_b = 0;
  Series expanded;               // sign * q^shift * inner, truncated
};

struct Dissection {
  std::uint64_t p = 0;
  int residual_exponent = 0;     // the integer (p-1)/6 or -(p+1)/6 fixing the residual sign
  std::vector<DissectionComponent> components;
  Series reassembled;            // sum of all expanded components
};

// prime dissection of f(-q) into theta components plus a q^((p^2-1)/24) f(-q^(p^2)) term
Dissection p_dissect_f(std::uint64_t p, std::int64_t modulus, std::uint64_t truncation);

// p(0..n) by the pentagonal recurrence
std::vector<mpz_class> partition_numbers(std::uint64_t n);

// d(1..n) by sieving; d(0) is 0 so the vector convolves cleanly
std::vector<std::int64_t> divisor_counts(std::uint64_t n);

// sum over n of q^(n^2+n) / product_{i<=n} (1 + q^(2i+1)), truncated
Series nu_series(std::int64_t modulus, std::uint64_t truncation);

// even part of nu: (nu(q) + nu(-q)) / 2, exact coefficients
Series eo_star_series(std::uint64_t truncation);

// partitions of n whose even parts are all below the odd parts and where
// no part other than the largest even one has odd multiplicity;
// exhaustive enumeration, intended for small n
mpz_class eo_star_count(std::uint64_t n);

}  // namespace copart
