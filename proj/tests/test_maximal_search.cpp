#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "grp/materialize.hpp"
#include "grp/maximal_search.hpp"
#include "grp/schreier.hpp"

using namespace grp;

TEST_CASE("stabilizer chain order matches closure size") {
  // fixed-seed random generator sets, oracle = explicit element enumeration
  std::mt19937 rng(123);
  for (int trial = 0; trial < 40; ++trial) {
    unsigned degree = 3 + rng() % 6;
    std::vector<Permutation> gens;
    for (int k = 0; k < 2; ++k) {
      std::vector<std::uint16_t> img(degree);
      std::iota(img.begin(), img.end(), 0);
      std::shuffle(img.begin(), img.end(), rng);
      gens.push_back(Permutation::from_images(std::move(img)));
    }
    REQUIRE(generated_order(gens, degree) == bigint(enumerate_elements(gens).size()));
  }
}

TEST_CASE("stabilizer chain on known groups") {
  auto a8 = materialize(parse_group_spec("Alt(8)"), 10);  // generators only
  REQUIRE(generated_order(a8.generators(), 8) == 20160);
  auto s7 = materialize(parse_group_spec("Sym(7)"), 10);
  REQUIRE(generated_order(s7.generators(), 7) == 5040);
  REQUIRE(generated_order({Permutation::identity(5)}, 5) == 1);
  auto chain_gens = std::vector<Permutation>{Permutation::from_cycles(6, {{0, 1, 2, 3, 4, 5}})};
  REQUIRE(generated_order(chain_gens, 6) == 6);
}

TEST_CASE("stabilizer chain membership test") {
  auto a5 = materialize(parse_group_spec("Alt(5)"));
  StabilizerChain c(5);
  c.extend(a5.generators());
  REQUIRE(c.order() == 60);
  for (const auto& p : a5.elements()) REQUIRE(c.contains(p));
  REQUIRE(!c.contains(Permutation::from_cycles(5, {{0, 1}})));
}

TEST_CASE("seeded search on Alt(5) finds the Sylow-5 normalizer") {
  auto g = materialize(parse_group_spec("Alt(5)"));
  auto res = seeded_maximal_search(g);
  REQUIRE(res.completeness_order_bound == 12);  // {2,3}-part of 60
  REQUIRE(res.maximals.size() == 1);
  REQUIRE(res.maximals[0].order == 10);
  REQUIRE(res.maximals[0].index == 6);
}

TEST_CASE("seeded search on Alt(8)") {
  auto g = materialize(parse_group_spec("Alt(8)"));
  auto res = seeded_maximal_search(g);
  REQUIRE(res.completeness_order_bound == 576);  // {2,3}-part of 20160
  // every reported subgroup is proper with order divisible by 5 or 7
  std::uint32_t min_index = 0xffffffff;
  std::uint64_t best_excl = 0;
  bool saw_2520 = false, saw_1344 = false;
  for (const auto& m : res.maximals) {
    REQUIRE(m.order < 20160);
    REQUIRE((m.order % 5 == 0 || m.order % 7 == 0));
    min_index = std::min(min_index, m.index);
    if (m.order == 2520) saw_2520 = true;
    if (m.order == 1344) saw_1344 = true;
    if (m.index > 8) best_excl = std::max<std::uint64_t>(best_excl, m.order);
  }
  // both exceed the completeness bound, so these conclusions are exact
  REQUIRE(saw_2520);
  REQUIRE(saw_1344);
  REQUIRE(min_index == 8);
  REQUIRE(best_excl == 1344);
}

TEST_CASE("seeded search needs a large prime in the order") {
  auto g = materialize(parse_group_spec("Sym(4)"));
  REQUIRE_THROWS_AS(seeded_maximal_search(g), error);
}
