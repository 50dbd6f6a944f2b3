#pragma once

// Counting engines for cp_{a,b,m}(n). A counted object is a triple
// (ground, rectangle, sky): ground parts are >= a and congruent to a
// mod m, sky parts are >= b and congruent to b mod m, and the rectangle
// consists of |sky| parts each of size m * |ground| (empty when there
// are no ground parts). The size is the total sum of all three.
//
// Two independent engines are provided: exhaustive enumeration plus a
// polynomial-time partition-count DP, and the product/quotient series
// engine. Tests and the congruence verifier play them off against each
// other.

#include <cstdint>
#include <map>
#include <ostream>
#include <vector>

#include "copart/series.hpp"

namespace copart {

struct CopartitionParams {
  std::uint64_t a = 1;
  std::uint64_t b = 1;
  std::uint64_t m = 1;

  bool operator==(const CopartitionParams&) const = default;
};

struct CopartitionTriple {
  std::vector<std::uint64_t> ground;     // non-increasing
  std::vector<std::uint64_t> rectangle;  // |sky| copies of m * |ground|
  std::vector<std::uint64_t> sky;        // non-increasing

  std::uint64_t ground_count() const { return ground.size(); }
  std::uint64_t sky_count() const { return sky.size(); }
  std::uint64_t size() const;
  bool operator==(const CopartitionTriple&) const = default;
};

std::ostream& operator<<(std::ostream& os, const CopartitionTriple& t);

struct RefinedCountTable {
  std::uint64_t n = 0;
  // (ground part count, sky part count) -> number of triples
  std::map<std::pair<std::uint64_t, std::uint64_t>, mpz_class> entries;
  mpz_class total;
};

// all triples of the given size, ordered by ground count, then sky
// count, then lexicographically; exponential listing meant for small n
std::vector<CopartitionTriple> enumerate_copartitions(const CopartitionParams& params,
                                                      std::uint64_t n);

// partition-count DP; polynomial in n
mpz_class count_copartitions(const CopartitionParams& params, std::uint64_t n);

RefinedCountTable refined_counts(const CopartitionParams& params, std::uint64_t n);

// (q^(a+b); q^m) / ((q^b; q^m) (q^a; q^m)) truncated; coefficient n is
// cp_{a,b,m}(n); rejects a = 0 or b = 0, which the closed-form
// sequences below cover instead
Series cp_gf_series(const CopartitionParams& params, std::int64_t modulus,
                    std::uint64_t truncation);

enum class SpecialVariant { cp111, cp011, cp001 };

// closed-form sequences: cp111(n) = sum of p(0..n),
// cp011(n) = sum_{k<n} p(k) d(n-k), cp001(n) = 2*cp011(n) - p(n)
std::vector<mpz_class> cp_special(SpecialVariant variant, std::uint64_t n_max);

// expands the two-marker product form (one marker per sky part, one per
// ground part) and compares every coefficient table against
// refined_counts; true iff they agree for all n <= n_max
bool bivariate_gf_check(const CopartitionParams& params, std::uint64_t n_max);

}  // namespace copart
