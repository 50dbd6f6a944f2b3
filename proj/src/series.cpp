#include "copart/series.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace copart {

namespace {

// largest modulus whose residue products still fit in a signed 64-bit
constexpr std::int64_t kMaxModulus = 3037000499LL;

void check_modulus(std::int64_t modulus) {
  if (modulus < 0 || modulus == 1)
    throw Error(Errc::invalid_argument, "modulus must be 0 (exact) or >= 2");
  if (modulus > kMaxModulus)
    throw Error(Errc::invalid_argument, "modulus too large for 64-bit residue arithmetic");
}

std::int64_t normalize_residue(std::int64_t v, std::int64_t m) {
  v %= m;
  return v < 0 ? v + m : v;
}

std::int64_t residue_of(const mpz_class& v, std::int64_t m) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(m));
  return static_cast<std::int64_t>(r.get_ui());
}

std::optional<std::int64_t> inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r0 = m, r1 = normalize_residue(a, m);
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  if (r0 != 1) return std::nullopt;
  return normalize_residue(t0, m);
}

std::vector<mpz_class> mul_exact(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b,
                                 std::size_t len) {
  std::vector<mpz_class> c(len);
  for (std::size_t i = 0; i < len && i < a.size(); ++i) {
    if (a[i] == 0) continue;
    const std::size_t jmax = std::min(b.size(), len - i);
    for (std::size_t j = 0; j < jmax; ++j) {
      if (b[j] == 0) continue;
      c[i + j] += a[i] * b[j];
    }
  }
  return c;
}

std::vector<std::int64_t> mul_mod(const std::vector<std::int64_t>& a,
                                  const std::vector<std::int64_t>& b, std::size_t len,
                                  std::int64_t m) {
  const std::int64_t guard = std::numeric_limits<std::int64_t>::max() - (m - 1) * (m - 1);
  std::vector<std::int64_t> c(len, 0);
  for (std::size_t n = 0; n < len; ++n) {
    std::int64_t acc = 0;
    const std::size_t lo = n + 1 > b.size() ? n + 1 - b.size() : 0;
    const std::size_t hi = std::min(a.size() - 1, n);
    for (std::size_t i = lo; i <= hi; ++i) {
      acc += a[i] * b[n - i];
      if (acc >= guard) acc %= m;
    }
    c[n] = acc % m;
  }
  return c;
}

}  // namespace

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return "invalid argument";
    case Errc::modulus_mismatch: return "modulus mismatch";
    case Errc::non_unit_constant_term: return "non-unit constant term";
    case Errc::overflow: return "integer overflow";
    case Errc::not_prime: return "not a prime";
    case Errc::not_invertible: return "not invertible";
    case Errc::unsupported_params: return "unsupported parameters";
    case Errc::non_integral_offset: return "non-integral offset";
    case Errc::parse: return "parse error";
    case Errc::io: return "i/o error";
    case Errc::internal: return "internal error";
  }
  return "unknown";
}

Series Series::one(std::int64_t modulus, std::uint64_t truncation) {
  Series s = zero(modulus, truncation);
  if (modulus == 0)
    s.zc_[0] = 1;
  else
    s.mc_[0] = 1 % modulus;
  return s;
}

Series Series::zero(std::int64_t modulus, std::uint64_t truncation) {
  check_modulus(modulus);
  if (modulus == 0) return Series(0, std::vector<mpz_class>(truncation + 1));
  return Series(modulus, std::vector<std::int64_t>(truncation + 1, 0));
}

Series Series::from_coeffs(std::int64_t modulus, std::vector<mpz_class> coeffs) {
  check_modulus(modulus);
  if (coeffs.empty())
    throw Error(Errc::invalid_argument, "a series needs at least the constant coefficient");
  if (modulus == 0) return Series(0, std::move(coeffs));
  std::vector<std::int64_t> mc(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) mc[i] = residue_of(coeffs[i], modulus);
  return Series(modulus, std::move(mc));
}

Series Series::from_int_coeffs(std::int64_t modulus, const std::vector<std::int64_t>& coeffs) {
  check_modulus(modulus);
  if (coeffs.empty())
    throw Error(Errc::invalid_argument, "a series needs at least the constant coefficient");
  if (modulus == 0) {
    std::vector<mpz_class> zc(coeffs.begin(), coeffs.end());
    return Series(0, std::move(zc));
  }
  std::vector<std::int64_t> mc(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) mc[i] = normalize_residue(coeffs[i], modulus);
  return Series(modulus, std::move(mc));
}

std::uint64_t Series::truncation() const {
  return (modulus_ == 0 ? zc_.size() : mc_.size()) - 1;
}

mpz_class Series::coeff(std::uint64_t n) const {
  if (n > truncation()) throw Error(Errc::invalid_argument, "coefficient index beyond truncation");
  if (modulus_ == 0) return zc_[n];
  return mpz_class(mc_[n]);
}

std::int64_t Series::coeff_i64(std::uint64_t n) const {
  if (n > truncation()) throw Error(Errc::invalid_argument, "coefficient index beyond truncation");
  if (modulus_ != 0) return mc_[n];
  if (!zc_[n].fits_slong_p())
    throw Error(Errc::overflow, "coefficient does not fit in 64 bits");
  return static_cast<std::int64_t>(zc_[n].get_si());
}

Series Series::operator+(const Series& rhs) const {
  if (modulus_ != rhs.modulus_)
    throw Error(Errc::modulus_mismatch, "mixed-modulus series addition");
  const std::uint64_t n = std::min(truncation(), rhs.truncation());
  if (modulus_ == 0) {
    std::vector<mpz_class> c(n + 1);
    for (std::uint64_t i = 0; i <= n; ++i) c[i] = zc_[i] + rhs.zc_[i];
    return Series(0, std::move(c));
  }
  std::vector<std::int64_t> c(n + 1);
  for (std::uint64_t i = 0; i <= n; ++i) c[i] = (mc_[i] + rhs.mc_[i]) % modulus_;
  return Series(modulus_, std::move(c));
}

Series Series::operator-(const Series& rhs) const {
  if (modulus_ != rhs.modulus_)
    throw Error(Errc::modulus_mismatch, "mixed-modulus series subtraction");
  const std::uint64_t n = std::min(truncation(), rhs.truncation());
  if (modulus_ == 0) {
    std::vector<mpz_class> c(n + 1);
    for (std::uint64_t i = 0; i <= n; ++i) c[i] = zc_[i] - rhs.zc_[i];
    return Series(0, std::move(c));
  }
  std::vector<std::int64_t> c(n + 1);
  for (std::uint64_t i = 0; i <= n; ++i)
    c[i] = normalize_residue(mc_[i] - rhs.mc_[i], modulus_);
  return Series(modulus_, std::move(c));
}

Series Series::operator-() const {
  if (modulus_ == 0) {
    std::vector<mpz_class> c(zc_.size());
    for (std::size_t i = 0; i < zc_.size(); ++i) c[i] = -zc_[i];
    return Series(0, std::move(c));
  }
  std::vector<std::int64_t> c(mc_.size());
  for (std::size_t i = 0; i < mc_.size(); ++i) c[i] = mc_[i] == 0 ? 0 : modulus_ - mc_[i];
  return Series(modulus_, std::move(c));
}

Series Series::operator*(const Series& rhs) const {
  if (modulus_ != rhs.modulus_)
    throw Error(Errc::modulus_mismatch, "mixed-modulus series product");
  const std::size_t len = static_cast<std::size_t>(std::min(truncation(), rhs.truncation())) + 1;
  if (modulus_ == 0) return Series(0, mul_exact(zc_, rhs.zc_, len));
  return Series(modulus_, mul_mod(mc_, rhs.mc_, len, modulus_));
}

Series Series::invert() const {
  const std::size_t len = modulus_ == 0 ? zc_.size() : mc_.size();
  if (modulus_ == 0) {
    const mpz_class& c0 = zc_[0];
    if (c0 != 1 && c0 != -1)
      throw Error(Errc::non_unit_constant_term,
                  "exact inversion needs constant term +1 or -1");
    const int unit = c0 == 1 ? 1 : -1;
    std::vector<mpz_class> b(len);
    b[0] = unit;
    mpz_class s;
    for (std::size_t n = 1; n < len; ++n) {
      s = 0;
      for (std::size_t k = 1; k <= n; ++k) {
        if (zc_[k] == 0) continue;
        s += zc_[k] * b[n - k];
      }
      b[n] = unit == 1 ? -s : s;
    }
    return Series(0, std::move(b));
  }
  const auto inv0 = inverse_mod(mc_[0], modulus_);
  if (!inv0)
    throw Error(Errc::non_unit_constant_term,
                "constant term is not invertible modulo " + std::to_string(modulus_));
  const std::int64_t guard = std::numeric_limits<std::int64_t>::max() - (modulus_ - 1) * (modulus_ - 1);
  std::vector<std::int64_t> b(len, 0);
  b[0] = *inv0;
  for (std::size_t n = 1; n < len; ++n) {
    std::int64_t acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      acc += mc_[k] * b[n - k];
      if (acc >= guard) acc %= modulus_;
    }
    acc %= modulus_;
    b[n] = normalize_residue(-((acc * *inv0) % modulus_), modulus_);
  }
  return Series(modulus_, std::move(b));
}

Series Series::pow(std::uint64_t k) const {
  Series result = one(modulus_, truncation());
  Series base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Series Series::extract_progression(std::uint64_t step, std::uint64_t offset) const {
  if (step == 0) throw Error(Errc::invalid_argument, "progression step must be positive");
  const std::uint64_t n = truncation();
  if (offset > n)
    throw Error(Errc::invalid_argument, "progression offset beyond truncation");
  const std::uint64_t out_n = (n - offset) / step;
  if (modulus_ == 0) {
    std::vector<mpz_class> c(out_n + 1);
    for (std::uint64_t i = 0; i <= out_n; ++i) c[i] = zc_[offset + i * step];
    return Series(0, std::move(c));
  }
  std::vector<std::int64_t> c(out_n + 1);
  for (std::uint64_t i = 0; i <= out_n; ++i) c[i] = mc_[offset + i * step];
  return Series(modulus_, std::move(c));
}

Series Series::reduce_mod(std::int64_t m) const {
  if (m < 2) throw Error(Errc::invalid_argument, "reduction modulus must be >= 2");
  check_modulus(m);
  if (modulus_ == 0) {
    std::vector<std::int64_t> c(zc_.size());
    for (std::size_t i = 0; i < zc_.size(); ++i) c[i] = residue_of(zc_[i], m);
    return Series(m, std::move(c));
  }
  if (modulus_ % m != 0)
    throw Error(Errc::modulus_mismatch,
                "cannot reduce mod " + std::to_string(m) + " a series mod " +
                    std::to_string(modulus_));
  std::vector<std::int64_t> c(mc_.size());
  for (std::size_t i = 0; i < mc_.size(); ++i) c[i] = mc_[i] % m;
  return Series(m, std::move(c));
}

Series Series::truncated(std::uint64_t new_truncation) const {
  if (new_truncation > truncation())
    throw Error(Errc::invalid_argument, "cannot extend a series by truncation");
  if (modulus_ == 0)
    return Series(0, std::vector<mpz_class>(zc_.begin(), zc_.begin() + new_truncation + 1));
  return Series(modulus_,
                std::vector<std::int64_t>(mc_.begin(), mc_.begin() + new_truncation + 1));
}

Series Series::shifted(std::uint64_t amount) const {
  const std::uint64_t n = truncation();
  if (modulus_ == 0) {
    std::vector<mpz_class> c(n + 1);
    for (std::uint64_t i = amount; i <= n; ++i) c[i] = zc_[i - amount];
    return Series(0, std::move(c));
  }
  std::vector<std::int64_t> c(n + 1, 0);
  for (std::uint64_t i = amount; i <= n; ++i) c[i] = mc_[i - amount];
  return Series(modulus_, std::move(c));
}

bool Series::operator==(const Series& rhs) const {
  if (modulus_ != rhs.modulus_) return false;
  if (modulus_ == 0) return zc_ == rhs.zc_;
  return mc_ == rhs.mc_;
}

std::optional<std::uint64_t> Series::first_mismatch(const Series& a, const Series& b,
                                                    std::int64_t m, std::uint64_t upto) {
  if (m < 2) throw Error(Errc::invalid_argument, "congruence modulus must be >= 2");
  if (upto > a.truncation() || upto > b.truncation())
    throw Error(Errc::invalid_argument, "congruence range beyond truncation");
  const Series ra = a.modulus_ == m ? a : a.reduce_mod(m);
  const Series rb = b.modulus_ == m ? b : b.reduce_mod(m);
  for (std::uint64_t n = 0; n <= upto; ++n)
    if (ra.mc_[n] != rb.mc_[n]) return n;
  return std::nullopt;
}

bool Series::congruent(const Series& a, const Series& b, std::int64_t m, std::uint64_t upto) {
  return !first_mismatch(a, b, m, upto).has_value();
}

std::string Series::to_string(std::uint64_t max_terms) const {
  std::ostringstream os;
  os << '[';
  const std::uint64_t n = truncation();
  const std::uint64_t shown = std::min(n + 1, max_terms);
  for (std::uint64_t i = 0; i < shown; ++i) {
    if (i) os << ", ";
    os << coeff(i);
  }
  if (shown <= n) os << ", ...";
  os << ']';
  if (modulus_ != 0) os << " (mod " << modulus_ << ')';
  os << " N=" << n;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Series& s) { return os << s.to_string(); }

Series pochhammer(std::uint64_t a, std::uint64_t m, std::int64_t modulus,
                  std::uint64_t truncation) {
  if (a == 0 || m == 0)
    throw Error(Errc::invalid_argument, "pochhammer needs a >= 1 and m >= 1");
  Series s = Series::one(modulus, truncation);
  // multiply in place by (1 - q^j) for every factor exponent j <= N
  for (std::uint64_t j = a; j <= truncation; j += m) {
    if (modulus == 0) {
      for (std::uint64_t i = truncation; i >= j; --i) {
        s.zc_[i] -= s.zc_[i - j];
        if (i == j) break;
      }
    } else {
      for (std::uint64_t i = truncation; i >= j; --i) {
        s.mc_[i] = s.mc_[i] >= s.mc_[i - j] ? s.mc_[i] - s.mc_[i - j]
                                            : s.mc_[i] - s.mc_[i - j] + modulus;
        if (i == j) break;
      }
    }
  }
  return s;
}

}  // namespace copart
