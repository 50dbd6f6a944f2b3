#include "copart/special_series.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace copart {

namespace {

bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// add sign * q^(shift + inner exponent) theta terms into a coefficient vector
void add_theta_terms(std::vector<mpz_class>& coeffs, std::uint64_t a, std::uint64_t b,
                     std::uint64_t shift, int sign) {
  const std::uint64_t n = coeffs.size() - 1;
  if (shift > n) return;
  const std::uint64_t budget = n - shift;
  auto exponent = [&](std::int64_t j) -> std::uint64_t {
    // a*j(j+1)/2 + b*j(j-1)/2, nonnegative for every integer j
    const std::int64_t t1 = j * (j + 1) / 2;
    const std::int64_t t2 = j * (j - 1) / 2;
    return static_cast<std::uint64_t>(t1) * a + static_cast<std::uint64_t>(t2) * b;
  };
  for (std::int64_t j = 0;; ++j) {
    const std::uint64_t e = exponent(j);
    if (e > budget) break;
    const int s = (j % 2 == 0) ? sign : -sign;
    coeffs[shift + e] += s;
  }
  for (std::int64_t j = -1;; --j) {
    const std::uint64_t e = exponent(j);
    if (e > budget) break;
    const int s = (j % 2 == 0) ? sign : -sign;
    coeffs[shift + e] += s;
  }
}

}  // namespace

Series theta_f(std::uint64_t a, std::uint64_t b, std::int64_t modulus, std::uint64_t truncation) {
  if (a == 0 || b == 0)
    throw Error(Errc::invalid_argument, "theta exponents must be positive");
  std::vector<mpz_class> coeffs(truncation + 1);
  add_theta_terms(coeffs, a, b, 0, 1);
  return Series::from_coeffs(modulus, std::move(coeffs));
}

Dissection p_dissect_f(std::uint64_t p, std::int64_t modulus, std::uint64_t truncation) {
  if (!trial_division_prime(p)) throw Error(Errc::not_prime, std::to_string(p) + " is not prime");
  if (p < 5) throw Error(Errc::invalid_argument, "dissection needs a prime >= 5");

  // exactly one of (p-1)/6 and -(p+1)/6 is an integer for p coprime to 6
  const bool plus_integral = (p - 1) % 6 == 0;
  const bool minus_integral = (p + 1) % 6 == 0;
  if (plus_integral == minus_integral)
    throw Error(Errc::internal, "residual sign rule failed to resolve");
  const int residual_exponent = plus_integral ? static_cast<int>((p - 1) / 6)
                                              : -static_cast<int>((p + 1) / 6);

  Dissection out;
  out.p = p;
  out.residual_exponent = residual_exponent;
  out.reassembled = Series::zero(modulus, truncation);

  const std::int64_t half = static_cast<std::int64_t>((p - 1) / 2);
  for (std::int64_t k = -half; k <= half; ++k) {
    if (k == residual_exponent) continue;
    DissectionComponent c;
    c.kind = DissectionComponent::Kind::theta_term;
    c.k = static_cast<int>(k);
    c.sign = (k % 2 == 0) ? 1 : -1;
    c.shift = static_cast<std::uint64_t>(k * (3 * k + 1) / 2);
    const std::int64_t six_k1 = 6 * k + 1;
    const std::int64_t pp = static_cast<std::int64_t>(p);
    c.theta_a = static_cast<std::uint64_t>((3 * pp * pp - six_k1 * pp) / 2);
    c.theta_b = static_cast<std::uint64_t>((3 * pp * pp + six_k1 * pp) / 2);
    std::vector<mpz_class> coeffs(truncation + 1);
    add_theta_terms(coeffs, c.theta_a, c.theta_b, c.shift, c.sign);
    c.expanded = Series::from_coeffs(modulus, std::move(coeffs));
    out.reassembled = out.reassembled + c.expanded;
    out.components.push_back(std::move(c));
  }

  DissectionComponent r;
  r.kind = DissectionComponent::Kind::residual_term;
  r.sign = (residual_exponent % 2 == 0) ? 1 : -1;
  r.shift = (p * p - 1) / 24;
  Series inner = r.shift <= truncation
                     ? pochhammer(p * p, p * p, modulus, truncation).shifted(r.shift)
                     : Series::zero(modulus, truncation);
  r.expanded = r.sign == 1 ? inner : -inner;
  out.reassembled = out.reassembled + r.expanded;
  out.components.push_back(std::move(r));
  return out;
}

std::vector<mpz_class> partition_numbers(std::uint64_t n) {
  std::vector<mpz_class> p(n + 1);
  p[0] = 1;
  for (std::uint64_t i = 1; i <= n; ++i) {
    mpz_class acc = 0;
    for (std::uint64_t k = 1;; ++k) {
      const std::uint64_t g1 = k * (3 * k - 1) / 2;
      if (g1 > i) break;
      const std::uint64_t g2 = k * (3 * k + 1) / 2;
      if (k % 2 == 1) {
        acc += p[i - g1];
        if (g2 <= i) acc += p[i - g2];
      } else {
        acc -= p[i - g1];
        if (g2 <= i) acc -= p[i - g2];
      }
    }
    p[i] = acc;
  }
  return p;
}

std::vector<std::int64_t> divisor_counts(std::uint64_t n) {
  std::vector<std::int64_t> d(n + 1, 0);
  for (std::uint64_t i = 1; i <= n; ++i)
    for (std::uint64_t j = i; j <= n; j += i) ++d[j];
  return d;
}

Series nu_series(std::int64_t modulus, std::uint64_t truncation) {
  Series total = Series::zero(modulus, truncation);
  Series denom = Series::one(modulus, truncation);
  for (std::uint64_t k = 0;; ++k) {
    const std::uint64_t top = k * k + k;
    if (top > truncation) break;
    // denom accumulates (1 + q^(2i+1)) for i = 0..k
    const std::uint64_t e = 2 * k + 1;
    if (e <= truncation) {
      std::vector<std::int64_t> factor(truncation + 1, 0);
      factor[0] = 1;
      factor[e] = 1;
      denom = denom * Series::from_int_coeffs(modulus, factor);
    }
    total = total + denom.invert().shifted(top);
  }
  return total;
}

Series eo_star_series(std::uint64_t truncation) {
  const Series nu = nu_series(0, truncation);
  std::vector<mpz_class> even(truncation + 1);
  for (std::uint64_t i = 0; i <= truncation; i += 2) even[i] = nu.coeff(i);
  return Series::from_coeffs(0, std::move(even));
}

namespace {

void count_eo_star(std::uint64_t remaining, std::uint64_t max_part,
                   std::vector<std::uint64_t>& current, mpz_class& found) {
  if (remaining == 0) {
    std::uint64_t largest_even = 0;
    for (auto v : current)
      if (v % 2 == 0) largest_even = std::max(largest_even, v);
    std::uint64_t smallest_odd = UINT64_MAX;
    for (auto v : current)
      if (v % 2 == 1) smallest_odd = std::min(smallest_odd, v);
    if (largest_even != 0 && smallest_odd != UINT64_MAX && largest_even >= smallest_odd) return;
    // the largest even part must be the one part of odd multiplicity;
    // with no even parts, all multiplicities must be even
    for (std::size_t i = 0; i < current.size();) {
      std::size_t j = i;
      while (j < current.size() && current[j] == current[i]) ++j;
      const bool odd_multiplicity = (j - i) % 2 == 1;
      if (odd_multiplicity != (current[i] == largest_even && largest_even != 0)) return;
      i = j;
    }
    ++found;
    return;
  }
  for (std::uint64_t v = std::min<std::uint64_t>(max_part, remaining); v >= 1; --v) {
    current.push_back(v);
    count_eo_star(remaining - v, v, current, found);
    current.pop_back();
  }
}

}  // namespace

mpz_class eo_star_count(std::uint64_t n) {
  mpz_class found = 0;
  std::vector<std::uint64_t> current;
  count_eo_star(n, n == 0 ? 1 : n, current, found);
  return found;
}

}  // namespace copart
