#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grp/cycle_types.hpp"
#include "grp/families.hpp"
#include "grp/golden.hpp"
#include "grp/group_table.hpp"
#include "grp/ints.hpp"
#include "grp/order_stats.hpp"
#include "grp/subgroups.hpp"

namespace grp {

enum class Property { MeoGroup, BPsi };
enum class Outcome { Holds, Fails, Inconclusive };
enum class Method { Exhaustive, Certificate, Witness, AltPath, Lookup };

inline const char* to_string(Property p) {
  return p == Property::MeoGroup ? "meo-group" : "bpsi-group";
}
inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Holds: return "holds";
    case Outcome::Fails: return "fails";
    case Outcome::Inconclusive: return "inconclusive";
  }
  return "?";
}
inline const char* to_string(Method m) {
  switch (m) {
    case Method::Exhaustive: return "exhaustive";
    case Method::Certificate: return "certificate";
    case Method::Witness: return "witness";
    case Method::AltPath: return "alt-path";
    case Method::Lookup: return "lookup";
  }
  return "?";
}

struct PropertyVerdict {
  Property property;
  Outcome outcome;
  Method method;
  // ordered key/value evidence; numbers rendered as full decimal strings
  std::vector<std::pair<std::string, std::string>> evidence;

  bool holds() const { return outcome == Outcome::Holds; }
};

inline std::string dec(const bigint& v) { return v.str(); }

// meo(G) <= m(G)?
inline PropertyVerdict is_meo_group(const bigint& meo, const bigint& m, Method method) {
  PropertyVerdict v;
  v.property = Property::MeoGroup;
  v.method = method;
  v.outcome = meo <= m ? Outcome::Holds : Outcome::Fails;
  v.evidence = {{"meo", dec(meo)}, {"m", dec(m)}};
  return v;
}

// psi(H) < |G| for every proper subgroup H, from a complete lattice
inline PropertyVerdict is_bpsi_exhaustive(const GroupTable& t,
                                          const std::vector<SubgroupRecord>& subs) {
  PropertyVerdict v;
  v.property = Property::BPsi;
  v.method = Method::Exhaustive;
  v.outcome = Outcome::Holds;
  const bigint order = t.order();
  const SubgroupRecord* witness = nullptr;
  bigint witness_psi = 0;
  for (const auto& h : subs) {
    if (h.order == t.order()) continue;  // proper subgroups only
    bigint psi = t.psi_of(h.elements);
    if (psi >= order && (!witness || h.order > witness->order)) {
      witness = &h;
      witness_psi = psi;
    }
  }
  v.evidence.emplace_back("order", dec(order));
  v.evidence.emplace_back("proper_subgroups", std::to_string(subs.size() - 1));
  if (witness) {
    v.outcome = Outcome::Fails;
    v.evidence.emplace_back("witness_subgroup_order", std::to_string(witness->order));
    v.evidence.emplace_back("witness_subgroup_index", std::to_string(witness->index));
    v.evidence.emplace_back("witness_psi", dec(witness_psi));
  }
  return v;
}

// Certificate: a non-trivial group with meo(G) <= m(G) is a B_psi-group,
// via psi(M) < |M|*meo(M) <= |M|*meo(G) <= |M|*|G:M| = |G| for proper M != 1.
// Certificate failure is inconclusive, never a negative verdict.
inline PropertyVerdict is_bpsi_certified(const bigint& meo, const bigint& m) {
  PropertyVerdict v;
  v.property = Property::BPsi;
  v.method = Method::Certificate;
  v.evidence = {{"meo", dec(meo)}, {"m", dec(m)}};
  if (meo <= m) {
    v.outcome = Outcome::Holds;
    v.evidence.emplace_back(
        "chain", "psi(M) < |M|*meo(M) <= |M|*meo(G) <= |M|*|G:M| = |G| for proper M != 1");
  } else {
    v.outcome = Outcome::Inconclusive;
    v.evidence.emplace_back("note", "meo > m: the certificate does not apply");
  }
  return v;
}

// Alt(n) for 8 <= n <= 13: holds iff meo(Alt(n)) <= m2(Alt(n)) and
// psi(Alt(n-1)) < |Alt(n)|.  meo and psi are recomputed from cycle types;
// m2 comes from the golden table.
inline PropertyVerdict is_bpsi_alt_path(unsigned n, const GoldenMap& golden = embedded_golden()) {
  if (n < 8 || n > 13) throw error("alt-path applies to Alt(n) with 8 <= n <= 13");
  auto it = golden.find({"Alt(" + std::to_string(n) + ")", "m2"});
  if (it == golden.end()) throw error("no m2 value for Alt(" + std::to_string(n) + ")");
  const bigint m2 = it->second;
  const bigint meo = meo_alternating(n);
  const bigint psi_prev = psi_alternating(n - 1);
  const bigint order = factorial(n) / 2;

  PropertyVerdict v;
  v.property = Property::BPsi;
  v.method = Method::AltPath;
  v.evidence = {{"meo", dec(meo)},
                {"m2", dec(m2)},
                {"psi_alt_prev", dec(psi_prev)},
                {"order", dec(order)}};
  v.outcome = (meo <= m2 && psi_prev < order) ? Outcome::Holds : Outcome::Inconclusive;
  return v;
}

// Witness via the subgroup Alt(n-1) <= Alt(n): when psi(Alt(n-1)) >= |Alt(n)|
// the group is not a B_psi-group.
inline PropertyVerdict not_bpsi_witness_alt(unsigned n) {
  if (n < 6) throw error("alternating witness test requires n >= 6");
  const bigint psi_prev = psi_alternating(n - 1);
  const bigint order = factorial(n) / 2;
  PropertyVerdict v;
  v.property = Property::BPsi;
  v.method = Method::Witness;
  v.evidence = {{"witness", "Alt(" + std::to_string(n - 1) + ")"},
                {"witness_psi", dec(psi_prev)},
                {"order", dec(order)}};
  v.outcome = psi_prev >= order ? Outcome::Fails : Outcome::Inconclusive;
  return v;
}

// psi(G) < |G| * meo(G) for non-trivial G
inline bool psi_below_order_times_meo(const OrderStats& s) {
  if (s.order == 1) return s.psi == 1;
  return s.psi < s.order * s.meo;
}

}  // namespace grp
