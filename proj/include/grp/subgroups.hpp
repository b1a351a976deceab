#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <vector>

#include "grp/bitset.hpp"
#include "grp/group_table.hpp"
#include "grp/ints.hpp"

namespace grp {

inline constexpr std::size_t kDefaultSubgroupCountCap = 300000;

struct SubgroupRecord {
  Bitset elements;                  // indices into the parent's canonical element order
  std::uint32_t order = 1;
  std::uint32_t index = 1;
  bool is_maximal = false;
  std::vector<std::uint16_t> generators;  // small generating set, element indices
};

struct LatticeSummary {
  std::size_t subgroup_count = 0;
  std::size_t maximal_count = 0;
  std::uint32_t m = 0;                 // minimum index of a maximal subgroup
  std::optional<std::uint32_t> m2;     // second smallest distinct such index
};

namespace detail {

// greedy small generating set for a known subgroup
inline std::vector<std::uint16_t> reduce_generators(const GroupTable& t, const Bitset& sub,
                                                    std::uint32_t order) {
  if (order == 1) return {};
  auto members = sub.to_indices();
  std::uint16_t best = members[0];
  for (std::uint16_t i : members)
    if (t.element_order(i) > t.element_order(best)) best = i;
  std::vector<std::uint16_t> gens = {best};
  for (;;) {
    auto closed = t.closure(gens, order);
    if (closed->count() == order) return gens;
    std::uint16_t next = 0;
    bool found = false;
    for (std::uint16_t i : members) {
      if (closed->test(i)) continue;
      if (!found || t.element_order(i) > t.element_order(next)) { next = i; found = true; }
    }
    gens.push_back(next);
  }
}

struct LatticeBuilder {
  const GroupTable& t;
  std::size_t cap;
  std::vector<SubgroupRecord> subs;
  std::unordered_map<std::size_t, std::vector<std::uint32_t>> by_hash;
  bool have_whole = false;

  LatticeBuilder(const GroupTable& table, std::size_t count_cap) : t(table), cap(count_cap) {}

  std::optional<std::uint32_t> add(Bitset elems, std::uint32_t order,
                                   std::vector<std::uint16_t> gens) {
    std::size_t h = elems.hash();
    for (std::uint32_t id : by_hash[h])
      if (subs[id].elements == elems) return std::nullopt;
    if (subs.size() >= cap) throw cap_exceeded("subgroup count cap exceeded");
    SubgroupRecord r;
    r.elements = std::move(elems);
    r.order = order;
    r.index = t.order() / order;
    r.generators = std::move(gens);
    std::uint32_t id = (std::uint32_t)subs.size();
    by_hash[h].push_back(id);
    subs.push_back(std::move(r));
    return id;
  }

  void add_whole_group() {
    if (have_whole) return;
    const std::uint32_t n = t.order();
    Bitset all(n);
    for (std::uint32_t i = 0; i < n; ++i) all.set(i);
    add(std::move(all), n, t.generator_indices());
    have_whole = true;
  }

  void run() {
    const std::uint32_t n = t.order();
    Bitset triv(n);
    triv.set(t.identity());
    std::deque<std::uint32_t> queue;
    auto id0 = add(std::move(triv), 1, {});
    queue.push_back(*id0);
    if (n == 1) have_whole = true;

    while (!queue.empty()) {
      std::uint32_t hid = queue.front();
      queue.pop_front();
      // copies: subs may reallocate while we extend
      const std::uint32_t horder = subs[hid].order;
      const std::vector<std::uint16_t> hgens = subs[hid].generators;
      Bitset marked = subs[hid].elements;

      for (std::uint32_t g = 0; g < n; ++g) {
        if (marked.test(g)) continue;
        mark_double_coset(marked, hgens, (std::uint16_t)g);
        std::uint64_t must_divide = std::lcm<std::uint64_t>(horder, t.element_order(g));
        std::uint32_t threshold = t.largest_proper_divisor_multiple(must_divide);
        std::optional<Bitset> closed;
        if (threshold > 0) {
          auto gens = hgens;
          gens.push_back((std::uint16_t)g);
          closed = t.closure(gens, threshold);
        }
        if (!closed) {
          // the only order compatible with the seed above the threshold is |G|
          add_whole_group();
          continue;
        }
        std::uint32_t korder = (std::uint32_t)closed->count();
        auto kgens = reduce_generators(t, *closed, korder);
        auto id = add(std::move(*closed), korder, std::move(kgens));
        if (id) queue.push_back(*id);
      }
    }
    add_whole_group();
  }

  // mark the double coset H g H: <H,g> = <H,h g h'> for h, h' in H
  void mark_double_coset(Bitset& marked, const std::vector<std::uint16_t>& hgens,
                         std::uint16_t g) {
    marked.set(g);
    if (hgens.empty()) return;
    std::vector<std::uint16_t> stack = {g};
    while (!stack.empty()) {
      std::uint16_t x = stack.back();
      stack.pop_back();
      for (std::uint16_t h : hgens) {
        std::uint16_t l = t.mul(h, x);
        if (!marked.test(l)) { marked.set(l); stack.push_back(l); }
        std::uint16_t r = t.mul(x, h);
        if (!marked.test(r)) { marked.set(r); stack.push_back(r); }
      }
    }
  }
};

inline void assign_maximality(const GroupTable& t, std::vector<SubgroupRecord>& subs) {
  std::sort(subs.begin(), subs.end(), [](const SubgroupRecord& a, const SubgroupRecord& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.elements < b.elements;
  });
  const std::uint32_t n = t.order();
  for (auto& h : subs) {
    h.is_maximal = false;
    if (h.order == n) continue;
    bool contained = false;
    for (const auto& k : subs) {
      if (k.order <= h.order || k.order == n) continue;
      if (k.order % h.order != 0) continue;
      if (h.elements.is_subset_of(k.elements)) { contained = true; break; }
    }
    h.is_maximal = !contained;
  }
}

}  // namespace detail

// All distinct cyclic subgroups <g>.
inline std::vector<SubgroupRecord> cyclic_subgroups(const GroupTable& t) {
  const std::uint32_t n = t.order();
  std::vector<SubgroupRecord> out;
  std::unordered_map<std::size_t, std::vector<std::uint32_t>> by_hash;
  for (std::uint32_t g = 0; g < n; ++g) {
    Bitset b(n);
    b.set(t.identity());
    std::uint32_t order = 1;
    std::uint16_t x = t.mul(t.identity(), (std::uint16_t)g);
    while (x != t.identity()) {
      b.set(x);
      ++order;
      x = t.mul(x, (std::uint16_t)g);
    }
    std::size_t h = b.hash();
    bool known = false;
    for (std::uint32_t id : by_hash[h])
      if (out[id].elements == b) { known = true; break; }
    if (known) continue;
    SubgroupRecord r;
    r.elements = std::move(b);
    r.order = order;
    r.index = n / order;
    r.generators = order == 1 ? std::vector<std::uint16_t>{}
                              : std::vector<std::uint16_t>{(std::uint16_t)g};
    by_hash[h].push_back((std::uint32_t)out.size());
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const SubgroupRecord& a, const SubgroupRecord& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.elements < b.elements;
  });
  return out;
}

// The complete subgroup lattice by join closure of single-element extensions,
// with double-coset pruning.  Records come back sorted by (order, element set)
// with maximality flags assigned.  Throws cap_exceeded at the count cap.
inline std::vector<SubgroupRecord> all_subgroups(const GroupTable& t,
                                                 std::size_t cap = kDefaultSubgroupCountCap) {
  detail::LatticeBuilder b(t, cap);
  b.run();
  auto subs = std::move(b.subs);
  detail::assign_maximality(t, subs);
  return subs;
}

inline LatticeSummary lattice_summary(const std::vector<SubgroupRecord>& subs) {
  LatticeSummary s;
  s.subgroup_count = subs.size();
  std::vector<std::uint32_t> indices;
  for (const auto& r : subs)
    if (r.is_maximal) {
      ++s.maximal_count;
      indices.push_back(r.index);
    }
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  if (!indices.empty()) s.m = indices[0];
  if (indices.size() > 1) s.m2 = indices[1];
  return s;
}

inline LatticeSummary lattice_summary(const GroupTable& t,
                                      std::size_t cap = kDefaultSubgroupCountCap) {
  return lattice_summary(all_subgroups(t, cap));
}

// Largest order among maximal subgroups of index > index_exclusion (for
// Alt(n), index > n excludes the point stabilizers Alt(n-1)).
inline std::uint64_t max_maximal_order_excluding_index(const std::vector<SubgroupRecord>& subs,
                                                       std::uint32_t index_exclusion) {
  std::uint64_t best = 0;
  for (const auto& r : subs)
    if (r.is_maximal && r.index > index_exclusion && r.index > 1)
      best = std::max<std::uint64_t>(best, r.order);
  if (best == 0) throw error("no maximal subgroup beyond the excluded indices");
  return best;
}

}  // namespace grp
