#include "copart/congruence.hpp"
#include "copart/special_series.hpp"

namespace copart {

namespace {

IdentityCheckResult compare_sequences(std::string name, const std::vector<mpz_class>& left,
                                      const std::vector<mpz_class>& right, std::uint64_t max_n) {
  IdentityCheckResult r;
  r.name = std::move(name);
  r.max_n = max_n;
  r.pass = true;
  for (std::uint64_t n = 0; n <= max_n; ++n)
    if (left[n] != right[n]) {
      r.pass = false;
      r.first_mismatch = n;
      break;
    }
  return r;
}

std::vector<mpz_class> series_coeffs(const Series& s, std::uint64_t upto) {
  std::vector<mpz_class> out(upto + 1);
  for (std::uint64_t n = 0; n <= upto; ++n) out[n] = s.coeff(n);
  return out;
}

}  // namespace

std::vector<IdentityCheckResult> run_identity_suite(std::uint64_t horizon) {
  std::vector<IdentityCheckResult> results;
  const std::uint64_t n = horizon;

  // cp(1,1,1) series against running sums of the partition numbers
  {
    const auto series = series_coeffs(cp_gf_series({1, 1, 1}, 0, n), n);
    const auto sums = cp_special(SpecialVariant::cp111, n);
    results.push_back(compare_sequences("cp111 = partial sums of p", series, sums, n));
  }

  // cp011 from the sieve-based divisor counts against the same
  // convolution assembled purely from series operations
  {
    const auto direct = cp_special(SpecialVariant::cp011, n);
    Series lambert = Series::zero(0, n);
    for (std::uint64_t j = 1; j <= n; ++j) {
      std::vector<std::int64_t> factor(n + 1, 0);
      factor[0] = 1;
      factor[j] = -1;
      lambert = lambert + Series::from_int_coeffs(0, factor).invert().shifted(j);
    }
    const Series product = euler_product(1, 0, n).invert() * lambert;
    results.push_back(
        compare_sequences("cp011 = p * d convolution", direct, series_coeffs(product, n), n));
  }

  // cp001 restated through cp011
  {
    const auto cp001 = cp_special(SpecialVariant::cp001, n);
    const auto cp011 = cp_special(SpecialVariant::cp011, n);
    const auto p = partition_numbers(n);
    std::vector<mpz_class> restated(n + 1);
    for (std::uint64_t i = 0; i <= n; ++i) restated[i] = 2 * cp011[i] - p[i];
    results.push_back(compare_sequences("cp001 = 2*cp011 - p", cp001, restated, n));
  }

  // cp(1,1,2) counting against the even-below-odd partition counter
  {
    const std::uint64_t small = std::min<std::uint64_t>(n, 15);
    std::vector<mpz_class> counted(small + 1), enumerated(small + 1);
    for (std::uint64_t i = 0; i <= small; ++i) {
      counted[i] = count_copartitions({1, 1, 2}, i);
      enumerated[i] = eo_star_count(2 * i);
    }
    results.push_back(compare_sequences("cp112 counts = even-below-odd counts", counted,
                                        enumerated, small));
  }

  // cp(1,1,2) series against the even part of nu
  {
    const auto lhs = series_coeffs(cp_gf_series({1, 1, 2}, 0, n), n);
    const Series even = eo_star_series(2 * n);
    std::vector<mpz_class> rhs(n + 1);
    for (std::uint64_t i = 0; i <= n; ++i) rhs[i] = even.coeff(2 * i);
    results.push_back(compare_sequences("cp112 series = nu even part", lhs, rhs, n));
  }

  return results;
}

}  // namespace copart
