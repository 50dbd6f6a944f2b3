// Emits the canonical claim catalog to stdout. data/claims.json is the
// frozen output of this program; regenerate it after changing the
// family builders:
//
//   ./build/tools/copart_make_catalog > data/claims.json

#include <iostream>

#include "copart/congruence.hpp"

using namespace copart;

namespace {

void append(std::vector<ProgressionClaim>& all, std::vector<ProgressionClaim> claims) {
  for (auto& c : claims) all.push_back(std::move(c));
}

FamilySpec family(FamilySpec::Id id, std::uint64_t p, std::uint32_t alpha) {
  FamilySpec s;
  s.id = id;
  s.p = p;
  s.alpha = alpha;
  return s;
}

FamilySpec prime_list(FamilySpec::Id id, std::vector<std::uint64_t> primes) {
  FamilySpec s;
  s.id = id;
  s.primes = std::move(primes);
  return s;
}

FamilySpec fixed(SeriesSource source, std::uint64_t step, std::vector<std::uint64_t> residues,
                 std::string label) {
  FamilySpec s;
  s.id = FamilySpec::Id::b2_fixed;
  s.source = std::move(source);
  s.step = step;
  s.modulus = 2;
  s.residues = std::move(residues);
  s.label = std::move(label);
  return s;
}

ProgressionClaim control(SeriesSource source, SeriesSource rhs, std::string provenance) {
  ProgressionClaim c;
  c.source = std::move(source);
  c.step = 1;
  c.offset = 0;
  c.modulus = 2;
  c.rhs.kind = ClaimRhs::Kind::series;
  c.rhs.source = std::move(rhs);
  c.provenance = std::move(provenance);
  return c;
}

}  // namespace

int main() {
  using Id = FamilySpec::Id;
  std::vector<ProgressionClaim> all;

  const SeriesSource cp314 = SeriesSource::copartition(3, 1, 4);
  const SeriesSource cp516 = SeriesSource::copartition(5, 1, 6);

  // derivable parity controls, used as positive fixtures
  all.push_back(control(cp314, SeriesSource::eta(1, 5),
                        "parity control: cp(3,1,4) matches f1^5 mod 2"));
  all.push_back(control(cp516, SeriesSource::named("f1*f3"),
                        "parity control: cp(5,1,6) matches f1*f3 mod 2"));

  // the mod-2 family for cp(3,1,4) and its corollaries
  append(all, build_family(family(Id::thm_c10, 5, 0)));
  append(all, build_family(family(Id::thm_c10, 5, 1)));
  append(all, build_family(family(Id::thm_c10, 7, 1)));
  append(all, build_family(family(Id::cor_c12, 5, 1)));
  append(all, build_family(family(Id::cor_c13, 7, 0)));
  append(all, build_family(prime_list(Id::thm_c14, {5, 7})));

  // the mod-6 family for cp(5,1,6) and its corollaries
  append(all, build_family(family(Id::thm_c16, 5, 0)));
  append(all, build_family(family(Id::thm_c16, 5, 1)));
  append(all, build_family(family(Id::cor_c23, 5, 1)));
  append(all, build_family(family(Id::cor_c24x, 7, 0)));
  append(all, build_family(prime_list(Id::thm_c24, {5, 7})));

  // quoted parity results for cp(3,1,4)
  append(all, build_family(family(Id::b2_c26, 7, 0)));
  append(all, build_family(fixed(cp314, 49, {3, 17, 24, 31, 38, 45},
                                 "Burson-Eichhorn Corollary 4.6")));
  append(all, build_family(fixed(cp314, 49, {3, 14, 36, 47, 58, 69, 80, 91, 102, 113},
                                 "Burson-Eichhorn Corollary 4.7 as printed")));
  append(all, build_family(fixed(cp314, 121, {3, 14, 36, 47, 58, 69, 80, 91, 102, 113},
                                 "Burson-Eichhorn Corollary 4.7 under the 121k reading")));

  // quoted parity results for cp(5,1,6)
  append(all, build_family(family(Id::b2_c27, 5, 0)));
  append(all, build_family(fixed(cp516, 25, {9, 14, 19, 24},
                                 "Burson-Eichhorn Corollary 4.11")));
  append(all, build_family(fixed(cp516, 121, {9, 31, 42, 53, 64, 75, 86, 97, 108, 119},
                                 "Burson-Eichhorn Corollary 4.12")));

  std::cout << catalog_to_json(all);
  return 0;
}
