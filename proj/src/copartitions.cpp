#include "copart/copartitions.hpp"

#include <algorithm>
#include <string>

#include "copart/special_series.hpp"

namespace copart {

namespace {

void check_params(const CopartitionParams& params, bool need_positive_ab) {
  if (params.m == 0) throw Error(Errc::invalid_argument, "m must be >= 1");
  if (need_positive_ab && (params.a == 0 || params.b == 0))
    throw Error(Errc::unsupported_params,
                "a = 0 / b = 0 families are covered by the closed-form sequences");
}

// pk[t][k] = partitions of t into at most k parts, for k <= t;
// pk(t, k >= t) equals pk[t][t]
class PartitionTable {
 public:
  explicit PartitionTable(std::uint64_t t_max) : rows_(t_max + 1) {
    rows_[0] = {mpz_class(1)};
    for (std::uint64_t t = 1; t <= t_max; ++t) {
      rows_[t].resize(t + 1);
      rows_[t][0] = 0;
      for (std::uint64_t k = 1; k <= t; ++k)
        rows_[t][k] = rows_[t][k - 1] + at(t - k, k);
    }
  }

  const mpz_class& at(std::uint64_t t, std::uint64_t k) const {
    const auto& row = rows_[t];
    return k >= row.size() ? row.back() : row[k];
  }

 private:
  std::vector<std::vector<mpz_class>> rows_;
};

// shared (w,s) loop: calls visit(w, s, contribution) for every pair of
// part counts that admits at least one split of the remaining mass
template <typename Visit>
void for_each_shape(const CopartitionParams& params, std::uint64_t n, Visit&& visit) {
  const std::uint64_t a = params.a, b = params.b, m = params.m;
  const PartitionTable table(n / m);
  mpz_class contribution;
  for (std::uint64_t w = 0; a * w <= n; ++w) {
    for (std::uint64_t s = 0; a * w + b * s + m * w * s <= n; ++s) {
      const std::uint64_t rest = n - (a * w + b * s + m * w * s);
      if (rest % m != 0) continue;
      const std::uint64_t budget = rest / m;
      contribution = 0;
      for (std::uint64_t i = 0; i <= budget; ++i)
        contribution += table.at(i, w) * table.at(budget - i, s);
      if (contribution != 0) visit(w, s, contribution);
    }
  }
}

using Parts = std::vector<std::uint64_t>;

// non-increasing partitions with parts drawn from {first, first+step, ...},
// where each chosen part also carries a fixed extra cost; every node of
// the recursion with cost exactly `budget` is reported
template <typename Emit>
void walk_partitions(std::uint64_t budget, std::uint64_t max_part, std::uint64_t first,
                     std::uint64_t step, std::uint64_t extra_cost, Parts& current, Emit&& emit) {
  if (budget == 0) {
    emit(current);
    return;
  }
  if (max_part < first || budget < first + extra_cost) return;
  std::uint64_t v = std::min(max_part, budget - extra_cost);
  v = first + ((v - first) / step) * step;  // largest admissible part value
  for (;; v -= step) {
    current.push_back(v);
    walk_partitions(budget - v - extra_cost, v, first, step, extra_cost, current, emit);
    current.pop_back();
    if (v == first) break;
  }
}

bool triple_less(const CopartitionTriple& x, const CopartitionTriple& y) {
  if (x.ground_count() != y.ground_count()) return x.ground_count() < y.ground_count();
  if (x.sky_count() != y.sky_count()) return x.sky_count() < y.sky_count();
  if (x.ground != y.ground) return x.ground < y.ground;
  return x.sky < y.sky;
}

}  // namespace

std::uint64_t CopartitionTriple::size() const {
  std::uint64_t total = 0;
  for (auto v : ground) total += v;
  for (auto v : rectangle) total += v;
  for (auto v : sky) total += v;
  return total;
}

std::ostream& operator<<(std::ostream& os, const CopartitionTriple& t) {
  auto put = [&os](const Parts& parts) {
    os << '{';
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) os << ',';
      os << parts[i];
    }
    os << '}';
  };
  os << '(';
  put(t.ground);
  os << ", ";
  put(t.rectangle);
  os << ", ";
  put(t.sky);
  return os << ')';
}

std::vector<CopartitionTriple> enumerate_copartitions(const CopartitionParams& params,
                                                      std::uint64_t n) {
  check_params(params, true);
  const std::uint64_t a = params.a, b = params.b, m = params.m;
  std::vector<CopartitionTriple> out;
  Parts ground_parts;
  // walk every ground partition of total <= n, then fill the rest with
  // sky parts whose cost includes the rectangle row they induce
  auto fill_sky = [&](const Parts& ground) {
    std::uint64_t ground_sum = 0;
    for (auto v : ground) ground_sum += v;
    const std::uint64_t rect_part = m * ground.size();
    Parts sky_parts;
    walk_partitions(n - ground_sum, n, b, m, rect_part, sky_parts, [&](const Parts& sky) {
      CopartitionTriple t;
      t.ground = ground;
      t.sky = sky;
      if (!ground.empty()) t.rectangle.assign(sky.size(), rect_part);
      out.push_back(std::move(t));
    });
  };
  // every prefix of the ground walk is itself a valid ground partition,
  // so use budget n and emit at every node via a wrapper
  struct GroundWalker {
    std::uint64_t n, a, m;
    decltype(fill_sky)& sink;
    void walk(std::uint64_t budget, std::uint64_t max_part, Parts& current) {
      sink(current);
      if (budget < a || max_part < a) return;
      std::uint64_t v = std::min(max_part, budget);
      v = a + ((v - a) / m) * m;
      for (;; v -= m) {
        current.push_back(v);
        walk(budget - v, v, current);
        current.pop_back();
        if (v == a) break;
      }
    }
  } walker{n, a, m, fill_sky};
  walker.walk(n, n, ground_parts);
  std::sort(out.begin(), out.end(), triple_less);
  return out;
}

mpz_class count_copartitions(const CopartitionParams& params, std::uint64_t n) {
  check_params(params, true);
  mpz_class total = 0;
  for_each_shape(params, n,
                 [&](std::uint64_t, std::uint64_t, const mpz_class& c) { total += c; });
  return total;
}

RefinedCountTable refined_counts(const CopartitionParams& params, std::uint64_t n) {
  check_params(params, true);
  RefinedCountTable table;
  table.n = n;
  table.total = 0;
  for_each_shape(params, n, [&](std::uint64_t w, std::uint64_t s, const mpz_class& c) {
    table.entries[{w, s}] = c;
    table.total += c;
  });
  return table;
}

Series cp_gf_series(const CopartitionParams& params, std::int64_t modulus,
                    std::uint64_t truncation) {
  check_params(params, true);
  const std::uint64_t a = params.a, b = params.b, m = params.m;
  const Series numerator = pochhammer(a + b, m, modulus, truncation);
  const Series den_sky = pochhammer(b, m, modulus, truncation);
  const Series den_ground = pochhammer(a, m, modulus, truncation);
  return numerator * den_sky.invert() * den_ground.invert();
}

std::vector<mpz_class> cp_special(SpecialVariant variant, std::uint64_t n_max) {
  const std::vector<mpz_class> p = partition_numbers(n_max);
  std::vector<mpz_class> out(n_max + 1);
  switch (variant) {
    case SpecialVariant::cp111: {
      mpz_class acc = 0;
      for (std::uint64_t n = 0; n <= n_max; ++n) {
        acc += p[n];
        out[n] = acc;
      }
      break;
    }
    case SpecialVariant::cp011:
    case SpecialVariant::cp001: {
      const std::vector<std::int64_t> d = divisor_counts(n_max);
      for (std::uint64_t n = 0; n <= n_max; ++n) {
        mpz_class acc = 0;
        for (std::uint64_t k = 0; k < n; ++k) acc += p[k] * d[n - k];
        out[n] = variant == SpecialVariant::cp011 ? acc : 2 * acc - p[n];
      }
      break;
    }
  }
  return out;
}

namespace {

// coefficient of q^n as a table over (sky marker exponent, ground marker
// exponent); dense in n, sparse in the marker pair
using MarkerTable = std::map<std::pair<std::uint64_t, std::uint64_t>, mpz_class>;

void drop_zeros(MarkerTable& t) {
  for (auto it = t.begin(); it != t.end();)
    it = it->second == 0 ? t.erase(it) : std::next(it);
}

}  // namespace

bool bivariate_gf_check(const CopartitionParams& params, std::uint64_t n_max) {
  check_params(params, true);
  const std::uint64_t a = params.a, b = params.b, m = params.m;
  std::vector<MarkerTable> gf(n_max + 1);
  gf[0][{0, 0}] = 1;

  // numerator factors (1 - x y q^(a+b+jm)): descending update
  for (std::uint64_t e = a + b; e <= n_max; e += m)
    for (std::uint64_t n = n_max; n >= e; --n) {
      for (const auto& [key, value] : gf[n - e])
        gf[n][{key.first + 1, key.second + 1}] -= value;
      drop_zeros(gf[n]);
      if (n == e) break;
    }
  // denominator factors 1/(1 - x q^(b+jm)) and 1/(1 - y q^(a+jm)):
  // ascending geometric accumulation
  for (std::uint64_t e = b; e <= n_max; e += m)
    for (std::uint64_t n = e; n <= n_max; ++n) {
      for (const auto& [key, value] : gf[n - e]) gf[n][{key.first + 1, key.second}] += value;
      drop_zeros(gf[n]);
    }
  for (std::uint64_t e = a; e <= n_max; e += m)
    for (std::uint64_t n = e; n <= n_max; ++n) {
      for (const auto& [key, value] : gf[n - e]) gf[n][{key.first, key.second + 1}] += value;
      drop_zeros(gf[n]);
    }

  for (std::uint64_t n = 0; n <= n_max; ++n) {
    MarkerTable expected;
    for (const auto& [ws, count] : refined_counts(params, n).entries)
      expected[{ws.second, ws.first}] = count;  // marker pair is (s, w)
    if (expected != gf[n]) return false;
  }
  return true;
}

}  // namespace copart
