#include <catch2/catch_amalgamated.hpp>

#include "grp/materialize.hpp"
#include "grp/properties.hpp"

using namespace grp;

namespace {

PropertyVerdict bpsi_exhaustive_of(const char* text) {
  auto g = materialize(parse_group_spec(text));
  GroupTable t(g);
  auto subs = all_subgroups(t);
  return is_bpsi_exhaustive(t, subs);
}

std::string evidence_value(const PropertyVerdict& v, const std::string& key) {
  for (const auto& [k, val] : v.evidence)
    if (k == key) return val;
  FAIL("missing evidence key " + key);
  return {};
}

}  // namespace

TEST_CASE("meo-group decision") {
  REQUIRE(is_meo_group(5, 5, Method::Exhaustive).outcome == Outcome::Holds);
  REQUIRE(is_meo_group(15, 8, Method::Exhaustive).outcome == Outcome::Fails);
  auto v = is_meo_group(11, 11, Method::Lookup);
  REQUIRE(v.holds());
  REQUIRE(evidence_value(v, "meo") == "11");
}

TEST_CASE("exhaustive bpsi on small groups") {
  // C(9): proper subgroups 1 and C(3) with psi 1 and 7, both < 9.
  REQUIRE(bpsi_exhaustive_of("C(9)").outcome == Outcome::Holds);
  // C(6): the C(3) subgroup has psi 7 >= 6.
  auto v = bpsi_exhaustive_of("C(6)");
  REQUIRE(v.outcome == Outcome::Fails);
  REQUIRE(evidence_value(v, "witness_subgroup_order") == "3");
  REQUIRE(evidence_value(v, "witness_psi") == "7");
  REQUIRE(bpsi_exhaustive_of("C(4)").outcome == Outcome::Holds);
  REQUIRE(bpsi_exhaustive_of("C(2)xC(2)").outcome == Outcome::Holds);
  // C(2)xC(4): the C(4) subgroup has psi 1+2+4+4 = 11 >= 8.
  REQUIRE(bpsi_exhaustive_of("C(2)xC(4)").outcome == Outcome::Fails);
  REQUIRE(bpsi_exhaustive_of("Alt(5)").outcome == Outcome::Holds);
  REQUIRE(bpsi_exhaustive_of("Sym(3)").outcome == Outcome::Fails);
}

TEST_CASE("witness picks the largest offending subgroup") {
  auto g = materialize(parse_group_spec("C(12)"));
  GroupTable t(g);
  auto v = is_bpsi_exhaustive(t, all_subgroups(t));
  REQUIRE(v.outcome == Outcome::Fails);
  // C(6) <= C(12) has psi 21 >= 12 and is the largest proper violator.
  REQUIRE(evidence_value(v, "witness_subgroup_order") == "6");
  REQUIRE(evidence_value(v, "witness_psi") == "21");
}

TEST_CASE("certificate is one-directional") {
  auto hold = is_bpsi_certified(11, 11);
  REQUIRE(hold.outcome == Outcome::Holds);
  auto inconclusive = is_bpsi_certified(15, 8);
  REQUIRE(inconclusive.outcome == Outcome::Inconclusive);
  // never a negative verdict
  REQUIRE(inconclusive.outcome != Outcome::Fails);
}

TEST_CASE("alt-path for middle alternating degrees") {
  for (unsigned n = 8; n <= 13; ++n) {
    auto v = is_bpsi_alt_path(n);
    INFO("n=" << n);
    REQUIRE(v.outcome == Outcome::Holds);
  }
  auto v8 = is_bpsi_alt_path(8);
  REQUIRE(evidence_value(v8, "meo") == "15");
  REQUIRE(evidence_value(v8, "m2") == "15");
  REQUIRE(evidence_value(v8, "psi_alt_prev") == "12601");
  REQUIRE(evidence_value(v8, "order") == "20160");
  auto v13 = is_bpsi_alt_path(13);
  REQUIRE(evidence_value(v13, "meo") == "35");
  REQUIRE(evidence_value(v13, "m2") == "78");
  REQUIRE_THROWS_AS(is_bpsi_alt_path(7), error);
  REQUIRE_THROWS_AS(is_bpsi_alt_path(14), error);
}

TEST_CASE("large alternating witness") {
  auto v14 = not_bpsi_witness_alt(14);
  REQUIRE(v14.outcome == Outcome::Fails);
  REQUIRE(evidence_value(v14, "witness") == "Alt(13)");
  REQUIRE(evidence_value(v14, "witness_psi") == "46287964867");
  REQUIRE(evidence_value(v14, "order") == "43589145600");
  auto v15 = not_bpsi_witness_alt(15);
  REQUIRE(v15.outcome == Outcome::Fails);
  REQUIRE(evidence_value(v15, "witness_psi") == "835826439631");
  REQUIRE(evidence_value(v15, "order") == "653837184000");
  // for smaller n the witness is silent, not a positive claim
  REQUIRE(not_bpsi_witness_alt(9).outcome == Outcome::Inconclusive);
}

TEST_CASE("psi stays below order times meo") {
  for (const char* text : {"C(1)", "C(6)", "Sym(4)", "Alt(5)", "PSL(2,7)"}) {
    auto g = materialize(parse_group_spec(text));
    REQUIRE(psi_below_order_times_meo(order_stats_bruteforce(g)));
  }
}
