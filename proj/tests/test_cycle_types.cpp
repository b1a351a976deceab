#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>

#include "grp/cycle_types.hpp"
#include "grp/materialize.hpp"
#include "grp/order_stats.hpp"

using namespace grp;

TEST_CASE("partition counts") {
  REQUIRE(enumerate_cycle_types(1).size() == 1);
  REQUIRE(enumerate_cycle_types(4).size() == 5);
  REQUIRE(enumerate_cycle_types(5).size() == 7);
  REQUIRE(enumerate_cycle_types(10).size() == 42);
}

TEST_CASE("partitions are listed in decreasing lexicographic order") {
  auto types = enumerate_cycle_types(7);
  REQUIRE(types.front().parts == std::vector<unsigned>{7});
  REQUIRE(types.back().parts == std::vector<unsigned>(7, 1));
  for (std::size_t i = 0; i + 1 < types.size(); ++i)
    REQUIRE(std::lexicographical_compare(types[i + 1].parts.begin(), types[i + 1].parts.end(),
                                         types[i].parts.begin(), types[i].parts.end()));
}

TEST_CASE("type counts match brute-force census of Sym(n)") {
  // Oracle: count permutations per sorted cycle-length multiset directly.
  for (unsigned n = 1; n <= 7; ++n) {
    auto g = materialize(parse_group_spec("Sym(" + std::to_string(n) + ")"));
    std::map<std::vector<unsigned>, bigint> census;
    for (const auto& p : g.elements()) {
      auto lens = p.cycle_lengths();
      std::sort(lens.begin(), lens.end(), std::greater<unsigned>());
      census[lens] += 1;
    }
    for (const auto& t : enumerate_cycle_types(n)) {
      INFO("n=" << n);
      REQUIRE(census.at(t.parts) == t.count());
    }
    REQUIRE(census.size() == enumerate_cycle_types(n).size());
  }
}

TEST_CASE("type counts sum to n! and even types to n!/2") {
  for (unsigned n = 2; n <= 20; ++n) {
    bigint total = 0, even = 0;
    for (const auto& t : enumerate_cycle_types(n)) {
      total += t.count();
      if (t.parity() == 1) even += t.count();
    }
    REQUIRE(total == factorial(n));
    REQUIRE(even * 2 == factorial(n));
  }
}

TEST_CASE("element order and parity per type") {
  CycleType t{5, {3, 2}};
  REQUIRE(t.element_order() == 6);
  REQUIRE(t.parity() == -1);
  CycleType u{5, {5}};
  REQUIRE(u.element_order() == 5);
  REQUIRE(u.parity() == 1);
}

TEST_CASE("psi/meo/exponent formulas agree with brute force") {
  for (unsigned n = 2; n <= 7; ++n) {
    auto sym = materialize(parse_group_spec("Sym(" + std::to_string(n) + ")"));
    REQUIRE(psi_symmetric(n) == psi_bruteforce(sym));
    REQUIRE(meo_symmetric(n) == meo_bruteforce(sym));
    REQUIRE(exponent_symmetric(n) == exponent(sym));
    if (n >= 3) {
      auto alt = materialize(parse_group_spec("Alt(" + std::to_string(n) + ")"));
      REQUIRE(psi_alternating(n) == psi_bruteforce(alt));
      REQUIRE(meo_alternating(n) == meo_bruteforce(alt));
      REQUIRE(exponent_alternating(n) == exponent(alt));
    }
  }
}

TEST_CASE("small closed-form values") {
  REQUIRE(psi_symmetric(3) == 13);
  REQUIRE(psi_alternating(4) == 31);
  REQUIRE(meo_alternating(10) == 21);
  REQUIRE(meo_alternating(13) == 35);
  REQUIRE(meo_alternating(3) == 3);
  REQUIRE(meo_symmetric(5) == 6);
}
