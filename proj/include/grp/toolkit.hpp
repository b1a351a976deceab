#pragma once

#include <memory>
#include <optional>
#include <string>

#include "grp/families.hpp"
#include "grp/golden.hpp"
#include "grp/group_spec.hpp"
#include "grp/materialize.hpp"
#include "grp/maximal_search.hpp"
#include "grp/order_stats.hpp"
#include "grp/properties.hpp"
#include "grp/subgroups.hpp"

namespace grp {

struct Caps {
  std::uint64_t cap_elements = kDefaultElementCap;
  std::uint64_t cap_lattice = kDefaultLatticeOrderCap;
  std::size_t cap_subgroups = kDefaultSubgroupCountCap;
  bool deep_maximal = false;  // permit the seeded maximal search beyond cap_lattice
  unsigned threads = 1;
};

// A check/stats target: either a group spec or an exception-table name (M11, HS, ...)
struct Target {
  std::string text;
  std::optional<GroupSpec> spec;  // absent for exception-table names

  bool sporadic() const { return !spec.has_value(); }
};

inline Target parse_target(const std::string& text) {
  Target t;
  t.text = text;
  if (!is_sporadic_name(text)) {
    t.spec = parse_group_spec(text);
    t.text = spec_to_string(*t.spec);
  }
  return t;
}

// Lazily materialized per-target computation state.
class GroupContext {
 public:
  GroupContext(Target target, Caps caps) : target_(std::move(target)), caps_(caps) {}

  const Target& target() const { return target_; }
  const Caps& caps() const { return caps_; }

  PermGroup& group() {
    if (!group_) {
      if (target_.sporadic()) throw error(target_.text + " has no permutation construction");
      group_ = std::make_unique<PermGroup>(materialize(*target_.spec, caps_.cap_elements));
    }
    return *group_;
  }

  GroupTable& table() {
    if (!table_) {
      PermGroup& g = group();
      if (!g.materialized()) throw cap_exceeded("group not materialized");
      if (g.order() > caps_.cap_lattice) throw cap_exceeded("group exceeds the lattice cap");
      table_ = std::make_unique<GroupTable>(g);
    }
    return *table_;
  }

  const std::vector<SubgroupRecord>& subgroups() {
    if (!subs_) subs_ = all_subgroups(table(), caps_.cap_subgroups);
    return *subs_;
  }

  bool lattice_possible() {
    if (target_.sporadic()) return false;
    bigint predicted = predicted_order(*target_.spec);
    if (predicted >= 0 && predicted > caps_.cap_lattice) return false;
    PermGroup& g = group();
    return g.materialized() && g.order() <= caps_.cap_lattice;
  }

 private:
  Target target_;
  Caps caps_;
  std::unique_ptr<PermGroup> group_;
  std::unique_ptr<GroupTable> table_;
  std::optional<std::vector<SubgroupRecord>> subs_;
};

// Everything the reports surface for one group.
struct GroupAnalysis {
  std::string spec_text;
  std::optional<bigint> order;
  std::optional<bigint> psi;
  std::optional<std::uint64_t> meo;
  std::optional<std::uint64_t> exp;
  std::optional<StatsMethod> method;
  std::optional<LatticeSummary> lattice;
  std::optional<std::uint64_t> deep_m;  // m from the seeded maximal search
  std::optional<std::uint64_t> deep_m2;
};

inline GroupAnalysis analyze_stats(GroupContext& ctx) {
  GroupAnalysis a;
  a.spec_text = ctx.target().text;
  if (ctx.target().sporadic()) {
    auto s = sporadic_stats(ctx.target().text);
    a.meo = s.meo;
    a.method = StatsMethod::Lookup;
    LatticeSummary ls;
    ls.m = (std::uint32_t)s.m;
    a.lattice = ls;
    return a;
  }

  const GroupSpec& spec = *ctx.target().spec;
  bigint predicted = predicted_order(spec);
  if (predicted >= 0) a.order = predicted;

  bool want_elements = predicted < 0 || predicted <= ctx.caps().cap_elements;
  if (want_elements && ctx.group().materialized()) {
    OrderStats s = order_stats_bruteforce(ctx.group());
    a.order = s.order;
    a.psi = s.psi;
    a.meo = s.meo;
    a.exp = s.exponent;
    a.method = StatsMethod::BruteForce;
  } else if (const auto* alt = std::get_if<AltSpec>(&spec)) {
    a.psi = psi_alternating(alt->n);
    a.meo = meo_alternating(alt->n);
    a.exp = exponent_alternating(alt->n);
    a.method = StatsMethod::CycleType;
  } else if (const auto* sym = std::get_if<SymSpec>(&spec)) {
    a.psi = psi_symmetric(sym->n);
    a.meo = meo_symmetric(sym->n);
    a.exp = exponent_symmetric(sym->n);
    a.method = StatsMethod::CycleType;
  }

  if (ctx.lattice_possible()) {
    a.lattice = lattice_summary(ctx.subgroups());
  } else if (ctx.caps().deep_maximal && ctx.group().materialized() &&
             ctx.group().degree() <= 16) {
    auto res = seeded_maximal_search(ctx.group());
    std::vector<std::uint32_t> idx;
    for (const auto& m : res.maximals) idx.push_back(m.index);
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    if (!idx.empty()) a.deep_m = idx[0];
    if (idx.size() > 1) a.deep_m2 = idx[1];
  }
  return a;
}

inline PropertyVerdict decide_meo_group(GroupContext& ctx,
                                        const GoldenMap& golden = embedded_golden()) {
  if (ctx.target().sporadic()) {
    auto s = sporadic_stats(ctx.target().text);
    return is_meo_group(s.meo, s.m, Method::Lookup);
  }
  const GroupSpec& spec = *ctx.target().spec;
  if (ctx.lattice_possible()) {
    auto meo = meo_bruteforce(ctx.group());
    auto ls = lattice_summary(ctx.subgroups());
    if (ls.m == 0) {
      // trivial group: no maximal subgroups, meo-group vacuously (meo = 1)
      PropertyVerdict v = is_meo_group(1, 1, Method::Exhaustive);
      return v;
    }
    return is_meo_group(meo, ls.m, Method::Exhaustive);
  }
  if (const auto* psl = std::get_if<PslSpec>(&spec)) {
    if (!ctx.group().materialized()) throw cap_exceeded("PSL group too large for meo");
    auto meo = meo_bruteforce(ctx.group());
    auto v = is_meo_group(meo, m_psl(psl->n, psl->q), Method::Lookup);
    v.evidence.emplace_back("m_source", "formula");
    return v;
  }
  if (const auto* alt = std::get_if<AltSpec>(&spec)) {
    auto it = golden.find({"Alt(" + std::to_string(alt->n) + ")", "m"});
    if (it == golden.end()) throw error("m(Alt(" + std::to_string(alt->n) + ")) unavailable");
    auto v = is_meo_group(meo_alternating(alt->n), it->second, Method::Lookup);
    v.evidence.emplace_back("m_source", "golden");
    return v;
  }
  throw error("cannot obtain m(G) for " + ctx.target().text + " within the configured caps");
}

// Path priority: exhaustive when the lattice fits, else the alternating
// path/witness for Alt specs, else the meo certificate.
inline PropertyVerdict decide_bpsi(GroupContext& ctx,
                                   const GoldenMap& golden = embedded_golden()) {
  if (ctx.target().sporadic()) {
    auto s = sporadic_stats(ctx.target().text);
    auto v = is_bpsi_certified(s.meo, s.m);
    v.evidence.emplace_back("source", "lookup");
    return v;
  }
  const GroupSpec& spec = *ctx.target().spec;
  if (ctx.lattice_possible()) return is_bpsi_exhaustive(ctx.table(), ctx.subgroups());
  if (const auto* alt = std::get_if<AltSpec>(&spec)) {
    if (alt->n >= 8 && alt->n <= 13) return is_bpsi_alt_path(alt->n, golden);
    return not_bpsi_witness_alt(alt->n);
  }
  if (const auto* psl = std::get_if<PslSpec>(&spec)) {
    if (!ctx.group().materialized()) throw cap_exceeded("PSL group too large for meo");
    return is_bpsi_certified(meo_bruteforce(ctx.group()), m_psl(psl->n, psl->q));
  }
  throw error("no applicable decision path for " + ctx.target().text +
              " within the configured caps");
}

}  // namespace grp
