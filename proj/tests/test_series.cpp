#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <numeric>
#include <random>

#include "copart/series.hpp"
#include "oracles.hpp"

using copart::Errc;
using copart::Error;
using copart::pochhammer;
using copart::Series;

namespace {

Series from_ints(std::int64_t modulus, std::vector<std::int64_t> coeffs) {
  return Series::from_int_coeffs(modulus, coeffs);
}

std::vector<std::int64_t> row(const Series& s) {
  std::vector<std::int64_t> out;
  for (std::uint64_t n = 0; n <= s.truncation(); ++n) out.push_back(s.coeff_i64(n));
  return out;
}

Series random_series(std::mt19937_64& rng, std::int64_t modulus, bool unit_constant) {
  std::uniform_int_distribution<int> len(0, 32);
  std::uniform_int_distribution<int> value(-9, 9);
  std::vector<std::int64_t> coeffs(len(rng) + 1);
  for (auto& c : coeffs) c = value(rng);
  if (unit_constant) {
    if (modulus == 0) {
      coeffs[0] = rng() % 2 == 0 ? 1 : -1;
    } else {
      do {
        coeffs[0] = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(modulus));
      } while (std::gcd(coeffs[0], modulus) != 1);
    }
  }
  return from_ints(modulus, coeffs);
}

}  // namespace

TEST_CASE("multiplicative identity") {
  CHECK(row(Series::one(0, 3)) == std::vector<std::int64_t>{1, 0, 0, 0});
  CHECK(row(Series::one(2, 0)) == std::vector<std::int64_t>{1});
  CHECK(row(Series::one(5, 2)) == std::vector<std::int64_t>{1, 0, 0});
}

TEST_CASE("product basics") {
  const Series a = from_ints(0, {1, -1, 0});
  const Series b = from_ints(0, {1, 1, 0});
  CHECK(row(a * b) == std::vector<std::int64_t>{1, 0, -1});

  const Series f1 = pochhammer(1, 1, 0, 10);
  CHECK(f1 * f1.invert() == Series::one(0, 10));
}

TEST_CASE("squaring the Euler product matches direct convolution") {
  const Series f1 = pochhammer(1, 1, 0, 7);
  CHECK(row(f1) == std::vector<std::int64_t>{1, -1, -1, 0, 0, 1, 0, 1});
  const auto via_convolution =
      oracles::convolve({1, -1, -1, 0, 0, 1, 0, 1}, {1, -1, -1, 0, 0, 1, 0, 1});
  const Series square = f1 * f1;
  for (std::uint64_t n = 0; n <= 7; ++n) CHECK(square.coeff(n) == via_convolution[n]);
  CHECK(row(square) == std::vector<std::int64_t>{1, -2, -1, 2, 1, 2, -2, 0});
}

TEST_CASE("inverting the Euler product yields the partition numbers") {
  const Series inv = pochhammer(1, 1, 0, 9).invert();
  // brute-force enumeration oracle
  for (std::uint64_t n = 0; n <= 9; ++n)
    CHECK(inv.coeff(n) == mpz_class(oracles::partitions_of(n).size()));
  CHECK(row(inv) == std::vector<std::int64_t>{1, 1, 2, 3, 5, 7, 11, 15, 22, 30});
}

TEST_CASE("inversion edge cases") {
  CHECK(Series::one(0, 5).invert() == Series::one(0, 5));
  CHECK(row(from_ints(0, {1, -1, 0, 0, 0}).invert()) ==
        std::vector<std::int64_t>{1, 1, 1, 1, 1});
  CHECK_THROWS_AS(from_ints(0, {2, 1}).invert(), Error);
  CHECK_THROWS_AS(from_ints(6, {3, 1}).invert(), Error);
  CHECK(row(from_ints(5, {2, 1, 0, 0, 0}).invert()) == std::vector<std::int64_t>{3, 1, 2, 4, 3});
}

TEST_CASE("pochhammer products") {
  SUBCASE("single-step product expands like the direct one") {
    std::vector<std::uint64_t> exponents{1, 2, 3, 4, 5, 6, 7};
    const auto direct = oracles::expand_product(exponents, 7);
    const Series f1 = pochhammer(1, 1, 0, 7);
    for (std::uint64_t n = 0; n <= 7; ++n) CHECK(f1.coeff(n) == direct[n]);
  }
  SUBCASE("no factor index within the truncation") {
    CHECK(pochhammer(4, 4, 0, 3) == Series::one(0, 3));
  }
  SUBCASE("two factors") {
    CHECK(row(pochhammer(3, 4, 0, 8)) ==
          std::vector<std::int64_t>{1, 0, 0, -1, 0, 0, 0, -1, 0});
  }
  SUBCASE("argument validation") {
    CHECK_THROWS_AS(pochhammer(0, 1, 0, 5), Error);
    CHECK_THROWS_AS(pochhammer(1, 0, 0, 5), Error);
  }
}

TEST_CASE("powers") {
  const Series f1 = pochhammer(1, 1, 0, 7);
  SUBCASE("fifth power matches iterated products") {
    const Series direct = f1 * f1 * f1 * f1 * f1;
    CHECK(f1.pow(5) == direct);
    CHECK(row(f1.pow(5)) == std::vector<std::int64_t>{1, -5, 5, 10, -15, -6, -5, 25});
  }
  SUBCASE("fifth power mod 2") {
    CHECK(row(f1.pow(5).reduce_mod(2)) == std::vector<std::int64_t>{1, 1, 1, 0, 1, 0, 1, 1});
    CHECK(pochhammer(1, 1, 2, 7).pow(5) == f1.pow(5).reduce_mod(2));
  }
  SUBCASE("zeroth power") {
    CHECK(f1.pow(0) == Series::one(0, 7));
    CHECK(from_ints(3, {2, 1, 1}).pow(0) == Series::one(3, 2));
  }
}

TEST_CASE("progression extraction") {
  const Series f1 = pochhammer(1, 1, 0, 12);
  CHECK(row(f1.extract_progression(2, 0)) ==
        std::vector<std::int64_t>{1, -1, 0, 0, 0, 0, -1});
  CHECK(f1.extract_progression(1, 0) == f1);
  const Series picked = Series::one(0, 9).extract_progression(3, 1);
  CHECK(row(picked) == std::vector<std::int64_t>{0, 0, 0});
  CHECK_THROWS_AS(f1.extract_progression(2, 13), Error);
}

TEST_CASE("congruence comparisons") {
  const std::uint64_t n = 200;
  CHECK(Series::congruent(pochhammer(2, 2, 0, n), pochhammer(1, 1, 0, n).pow(2), 2, n));
  CHECK(Series::congruent(pochhammer(3, 3, 0, n), pochhammer(1, 1, 0, n).pow(3), 3, n));
  const auto mismatch =
      Series::first_mismatch(pochhammer(3, 3, 0, 10), pochhammer(1, 1, 0, 10).pow(3), 2, 10);
  REQUIRE(mismatch.has_value());
  CHECK(*mismatch == 1);
}

TEST_CASE("parity and mod-3 product lemmas on a small grid") {
  const std::uint64_t n = 500;
  for (std::uint64_t k = 1; k <= 4; ++k)
    for (std::uint64_t m = 1; m <= 5; ++m) {
      const Series lhs2 = pochhammer(2 * k, 2 * k, 2, n).pow(m);
      const Series rhs2 = pochhammer(k, k, 2, n).pow(2 * m);
      CHECK_MESSAGE(lhs2 == rhs2, "mod 2, k=", k, ", m=", m);
      const Series lhs3 = pochhammer(3 * k, 3 * k, 3, n).pow(m);
      const Series rhs3 = pochhammer(k, k, 3, n).pow(3 * m);
      CHECK_MESSAGE(lhs3 == rhs3, "mod 3, k=", k, ", m=", m);
    }
}

TEST_CASE("pentagonal expansion at depth") {
  const std::uint64_t n = 2000;
  const auto direct = oracles::pentagonal_series(n);
  const Series f1 = pochhammer(1, 1, 0, n);
  for (std::uint64_t i = 0; i <= n; ++i) {
    if (f1.coeff(i) != direct[i]) {
      FAIL("mismatch at exponent ", i);
      break;
    }
  }
}

TEST_CASE("ring laws on random series") {
  std::mt19937_64 rng(42);
  const std::int64_t moduli[] = {0, 2, 3, 5, 6, 97};
  for (int round = 0; round < 60; ++round)
    for (const std::int64_t m : moduli) {
      const Series a = random_series(rng, m, false);
      const Series b = random_series(rng, m, false);
      const Series c = random_series(rng, m, false);
      CHECK(a * b == b * a);
      CHECK(a + b == b + a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("modular arithmetic matches exact arithmetic reduced") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 60; ++round)
    for (const std::int64_t m : {2, 3, 5, 6, 97}) {
      std::uniform_int_distribution<int> len(0, 32);
      std::uniform_int_distribution<int> value(-9, 9);
      std::vector<std::int64_t> ca(len(rng) + 1), cb(len(rng) + 1);
      for (auto& v : ca) v = value(rng);
      for (auto& v : cb) v = value(rng);
      const Series za = from_ints(0, ca), zb = from_ints(0, cb);
      const Series ma = from_ints(m, ca), mb = from_ints(m, cb);
      CHECK((za * zb).reduce_mod(m) == ma * mb);
      CHECK((za + zb).reduce_mod(m) == ma + mb);
      CHECK((za - zb).reduce_mod(m) == ma - mb);
      CHECK(za.pow(3).reduce_mod(m) == ma.pow(3));
    }
}

TEST_CASE("inversion is a two-sided inverse for random unit series") {
  std::mt19937_64 rng(2024);
  int done = 0;
  while (done < 1000) {
    const std::int64_t m = std::array<std::int64_t, 4>{0, 2, 5, 97}[rng() % 4];
    const Series a = random_series(rng, m, true);
    const Series inv = a.invert();
    CHECK(a * inv == Series::one(m, a.truncation()));
    CHECK(inv * a == Series::one(m, a.truncation()));
    ++done;
  }
}

TEST_CASE("computing deep then truncating equals computing shallow") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 40; ++round) {
    const std::int64_t m = std::array<std::int64_t, 3>{0, 2, 7}[rng() % 3];
    const Series a = random_series(rng, m, true);
    const Series b = random_series(rng, m, false);
    const std::uint64_t shorter = std::min(a.truncation(), b.truncation()) / 2;
    CHECK((a * b).truncated(shorter) == a.truncated(shorter) * b.truncated(shorter));
    CHECK(a.invert().truncated(shorter) == a.truncated(shorter).invert());
    CHECK(a.pow(3).truncated(shorter) == a.truncated(shorter).pow(3));
  }
  CHECK(pochhammer(1, 1, 0, 50).truncated(20) == pochhammer(1, 1, 0, 20));
  CHECK(pochhammer(3, 4, 5, 50).truncated(20) == pochhammer(3, 4, 5, 20));
}

TEST_CASE("mixed moduli are rejected") {
  const Series a = Series::one(2, 5);
  const Series b = Series::one(3, 5);
  CHECK_THROWS_AS(a * b, Error);
  CHECK_THROWS_AS(a + b, Error);
  CHECK_THROWS_AS(Series::one(0, 5) * a, Error);
  CHECK_THROWS_AS(a.reduce_mod(4), Error);
  CHECK(from_ints(6, {5, 4, 3}).reduce_mod(3) == from_ints(3, {2, 1, 0}));
}

TEST_CASE("construction validates the modulus") {
  CHECK_THROWS_AS(Series::one(1, 3), Error);
  CHECK_THROWS_AS(Series::one(-4, 3), Error);
  CHECK(from_ints(7, {-1, -8, 13}) == from_ints(7, {6, 6, 6}));
}

TEST_CASE("64-bit coefficient access overflows loudly") {
  const Series big = pochhammer(1, 1, 0, 500).invert();  // p(500) has 22 digits
  CHECK_THROWS_AS(big.coeff_i64(500), Error);
  try {
    big.coeff_i64(500);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::overflow);
  }
  CHECK(big.coeff(500) > mpz_class(INT64_MAX));
}
