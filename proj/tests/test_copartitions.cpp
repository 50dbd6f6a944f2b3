#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "copart/copartitions.hpp"
#include "copart/special_series.hpp"

using namespace copart;

namespace {

CopartitionTriple triple(std::vector<std::uint64_t> ground, std::vector<std::uint64_t> rectangle,
                         std::vector<std::uint64_t> sky) {
  return CopartitionTriple{std::move(ground), std::move(rectangle), std::move(sky)};
}

}  // namespace

TEST_CASE("the size-12 worked example") {
  const auto triples = enumerate_copartitions({1, 3, 4}, 12);
  const std::vector<CopartitionTriple> expected = {
      triple({}, {}, {3, 3, 3, 3}),
      triple({1}, {4}, {7}),
      triple({5}, {4}, {3}),
      triple({5, 5, 1, 1}, {}, {}),
      triple({9, 1, 1, 1}, {}, {}),
      triple({5, 1, 1, 1, 1, 1, 1, 1}, {}, {}),
      triple({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, {}, {}),
  };
  CHECK(triples == expected);
  CHECK(count_copartitions({1, 3, 4}, 12) == 7);
  CHECK(cp_gf_series({3, 1, 4}, 0, 12).coeff(12) == 7);
  for (const auto& t : triples) CHECK(t.size() == 12);
}

TEST_CASE("enumeration edge cases") {
  const auto at_zero = enumerate_copartitions({2, 3, 5}, 0);
  REQUIRE(at_zero.size() == 1);
  CHECK(at_zero[0] == triple({}, {}, {}));

  const auto tiny = enumerate_copartitions({5, 1, 6}, 1);
  REQUIRE(tiny.size() == 1);
  CHECK(tiny[0] == triple({}, {}, {1}));
}

TEST_CASE("counting engine rows") {
  std::vector<std::int64_t> row314, row516;
  for (std::uint64_t n = 0; n <= 7; ++n) {
    row314.push_back(static_cast<std::int64_t>(count_copartitions({3, 1, 4}, n).get_si()));
    row516.push_back(static_cast<std::int64_t>(count_copartitions({5, 1, 6}, n).get_si()));
  }
  CHECK(row314 == std::vector<std::int64_t>{1, 1, 1, 2, 1, 2, 3, 3});
  CHECK(row516 == std::vector<std::int64_t>{1, 1, 1, 1, 1, 2, 1, 2});
  CHECK(cp_gf_series({5, 1, 6}, 0, 9).coeff(9) == 2);
}

TEST_CASE("refined statistics") {
  SUBCASE("size 12 example regrouped") {
    const auto table = refined_counts({1, 3, 4}, 12);
    CHECK(table.total == 7);
    CHECK(table.entries.at({1, 1}) == 2);
    CHECK(table.entries.at({0, 4}) == 1);
    mpz_class ground_only = 0;
    for (const auto& [ws, count] : table.entries)
      if (ws.second == 0) ground_only += count;
    CHECK(ground_only == 4);
  }
  SUBCASE("trivial table at zero") {
    const auto table = refined_counts({2, 2, 3}, 0);
    CHECK(table.total == 1);
    REQUIRE(table.entries.size() == 1);
    CHECK(table.entries.at({0, 0}) == 1);
  }
  SUBCASE("all-ones parameters at n=2") {
    const auto table = refined_counts({1, 1, 1}, 2);
    CHECK(table.total == 4);
    CHECK(table.entries.at({1, 0}) == 1);
    CHECK(table.entries.at({2, 0}) == 1);
    CHECK(table.entries.at({0, 1}) == 1);
    CHECK(table.entries.at({0, 2}) == 1);
  }
  SUBCASE("marginals match the counting engine") {
    for (std::uint64_t n = 0; n <= 20; ++n)
      CHECK(refined_counts({2, 3, 4}, n).total == count_copartitions({2, 3, 4}, n));
  }
}

TEST_CASE("the three engines agree on a parameter grid") {
  for (std::uint64_t a = 1; a <= 3; ++a)
    for (std::uint64_t b = 1; b <= 3; ++b)
      for (std::uint64_t m = 1; m <= 6; ++m) {
        const CopartitionParams params{a, b, m};
        const Series gf = cp_gf_series(params, 0, 25);
        for (std::uint64_t n = 0; n <= 25; ++n) {
          const mpz_class counted = count_copartitions(params, n);
          CHECK_MESSAGE(counted == enumerate_copartitions(params, n).size(),
                        "a=", a, " b=", b, " m=", m, " n=", n);
          CHECK_MESSAGE(counted == gf.coeff(n), "a=", a, " b=", b, " m=", m, " n=", n);
        }
      }
}

TEST_CASE("swapping a and b preserves counts") {
  for (std::uint64_t a = 1; a <= 3; ++a)
    for (std::uint64_t b = a; b <= 3; ++b)
      for (std::uint64_t m = 1; m <= 6; ++m)
        for (std::uint64_t n = 0; n <= 18; ++n)
          CHECK(count_copartitions({a, b, m}, n) == count_copartitions({b, a, m}, n));
}

TEST_CASE("sizes counted from zero") {
  for (std::uint64_t m = 1; m <= 4; ++m) CHECK(count_copartitions({2, 1, m}, 0) == 1);
}

TEST_CASE("all-ones partial sums") {
  const auto sums = cp_special(SpecialVariant::cp111, 60);
  CHECK(sums[0] == 1);
  CHECK(sums[1] == 2);
  CHECK(sums[2] == 4);
  CHECK(sums[3] == 7);
  CHECK(sums[4] == 12);
  const auto p = partition_numbers(60);
  for (std::uint64_t n = 0; n <= 60; ++n) {
    CHECK(count_copartitions({1, 1, 1}, n) == sums[n]);
    if (n > 0) CHECK(sums[n] - sums[n - 1] == p[n]);
  }
  const Series gf = cp_gf_series({1, 1, 1}, 0, 500);
  const auto deep = cp_special(SpecialVariant::cp111, 500);
  for (std::uint64_t n = 0; n <= 500; ++n) CHECK(gf.coeff(n) == deep[n]);
}

TEST_CASE("divisor convolution sequences") {
  const auto cp011 = cp_special(SpecialVariant::cp011, 200);
  const auto cp001 = cp_special(SpecialVariant::cp001, 200);
  const auto p = partition_numbers(200);
  CHECK(cp011[0] == 0);
  CHECK(cp011[1] == 1);  // p(0) d(1)
  CHECK(cp001[0] == -1);
  for (std::uint64_t n = 0; n <= 200; ++n) CHECK(cp001[n] == 2 * cp011[n] - p[n]);
}

TEST_CASE("even-below-odd special case") {
  for (std::uint64_t n = 0; n <= 15; ++n)
    CHECK(count_copartitions({1, 1, 2}, n) == eo_star_count(2 * n));
  const Series gf = cp_gf_series({1, 1, 2}, 0, 200);
  const Series even = eo_star_series(400);
  for (std::uint64_t n = 0; n <= 200; ++n) CHECK(gf.coeff(n) == even.coeff(2 * n));
}

TEST_CASE("parity congruences of the two flagship families") {
  const std::uint64_t n = 2000;
  const Series cp314 = cp_gf_series({3, 1, 4}, 2, n);
  const Series f1_5 = pochhammer(1, 1, 2, n).pow(5);
  CHECK(cp314 == f1_5);
  const Series cp516 = cp_gf_series({5, 1, 6}, 2, n);
  const Series f1f3 = pochhammer(1, 1, 2, n) * pochhammer(3, 3, 2, n);
  CHECK(cp516 == f1f3);
}

TEST_CASE("two-marker expansion agrees with refined counts") {
  CHECK(bivariate_gf_check({1, 3, 4}, 12));
  CHECK(bivariate_gf_check({1, 1, 2}, 10));
  CHECK(bivariate_gf_check({1, 1, 1}, 8));
  CHECK(bivariate_gf_check({3, 1, 4}, 12));
}

TEST_CASE("degenerate parameters are rejected") {
  CHECK_THROWS_AS(count_copartitions({0, 1, 1}, 3), Error);
  CHECK_THROWS_AS(cp_gf_series({1, 0, 1}, 0, 3), Error);
  CHECK_THROWS_AS(enumerate_copartitions({1, 1, 0}, 3), Error);
  try {
    count_copartitions({0, 1, 1}, 3);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unsupported_params);
  }
}

TEST_CASE("triple printing") {
  std::ostringstream os;
  os << triple({5}, {4}, {3});
  CHECK(os.str() == "({5}, {4}, {3})");
}
