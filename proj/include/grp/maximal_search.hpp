#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "grp/bitset.hpp"
#include "grp/ints.hpp"
#include "grp/perm_group.hpp"
#include "grp/permutation.hpp"
#include "grp/schreier.hpp"

namespace grp {

// Targeted maximal-subgroup search for groups too large for full lattice
// enumeration (the flagged Alt(8)/PSL(4,2) run).
//
// For each prime p >= 5 dividing |G| it enumerates, up to conjugacy, every
// subgroup containing a fixed Sylow p-cycle P: the single-element extensions
// <P,g> (one per double coset PgP) followed by join closure.  Any subgroup
// containing P lies in that family, so maximality inside the family equals
// maximality in G.  A maximal subgroup whose order has a prime factor >= 5 is
// conjugate to a member of some family; only subgroups whose order divides
// the {2,3}-part of |G| can be missed, which `completeness_order_bound`
// records.

struct FoundSubgroup {
  Bitset elements;  // over the parent's canonical element indices
  std::uint32_t order = 0;
  std::uint32_t index = 0;
  bool is_maximal = false;
};

struct SeededMaximalResult {
  std::vector<FoundSubgroup> maximals;       // deduplicated, sorted by (order, set)
  std::uint64_t completeness_order_bound = 0;  // {2,3}-part of |G|
};

namespace detail {

class PackedGroup {
 public:
  explicit PackedGroup(const PermGroup& g) : degree_(g.degree()) {
    if (degree_ > 16) throw error("seeded search requires degree <= 16");
    const auto& elems = g.elements();
    n_ = (std::uint32_t)elems.size();
    packed_.reserve(n_);
    order_.reserve(n_);
    for (std::uint32_t i = 0; i < n_; ++i) {
      packed_.push_back(pack_perm(elems[i]));
      order_.push_back(elems[i].order());
      if (elems[i].is_identity()) identity_ = i;
    }
    index_.reserve(n_ * 2);
    for (std::uint32_t i = 0; i < n_; ++i) index_.emplace(packed_[i], i);
  }

  std::uint32_t n() const { return n_; }
  std::uint32_t identity() const { return identity_; }
  std::uint64_t element_order(std::uint32_t i) const { return order_[i]; }
  std::uint32_t mul(std::uint32_t i, std::uint32_t j) const {
    return index_.at(compose_packed(packed_[i], packed_[j], degree_));
  }
  Permutation perm(std::uint32_t i) const { return unpack_perm(packed_[i], degree_); }
  unsigned degree() const { return degree_; }

  // closure over element indices; nullopt when size exceeds threshold
  std::optional<Bitset> closure(const std::vector<std::uint32_t>& gens,
                                std::uint64_t threshold) const {
    Bitset seen(n_);
    seen.set(identity_);
    std::size_t size = 1;
    std::vector<std::uint32_t> stack = {identity_};
    while (!stack.empty()) {
      std::uint32_t x = stack.back();
      stack.pop_back();
      for (std::uint32_t g : gens) {
        std::uint32_t y = mul(x, g);
        if (!seen.test(y)) {
          seen.set(y);
          if (++size > threshold) return std::nullopt;
          stack.push_back(y);
        }
      }
    }
    return seen;
  }

 private:
  unsigned degree_;
  std::uint32_t n_ = 0, identity_ = 0;
  std::vector<std::uint64_t> packed_;
  std::vector<std::uint64_t> order_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
};

struct OvergroupFamily {
  std::vector<Bitset> sets;
  std::vector<std::vector<std::uint32_t>> gens;
  std::vector<std::uint32_t> orders;

  bool add(Bitset b, std::vector<std::uint32_t> g) {
    for (const auto& s : sets)
      if (s == b) return false;
    orders.push_back((std::uint32_t)b.count());
    sets.push_back(std::move(b));
    gens.push_back(std::move(g));
    return true;
  }
};

// all subgroups of G containing the cyclic seed <s>, up to none missed
inline OvergroupFamily overgroups_of_seed(const PackedGroup& pg, std::uint32_t s) {
  const std::uint32_t n = pg.n();
  OvergroupFamily fam;

  // cheap exact order via a stabilizer chain; only materialize the element
  // set of a join when it turns out to be proper
  auto quick_order = [&](const std::vector<std::uint32_t>& ids) {
    std::vector<Permutation> ps;
    ps.reserve(ids.size());
    for (std::uint32_t id : ids) ps.push_back(pg.perm(id));
    return generated_order(ps, pg.degree());
  };

  // seed subgroup itself
  auto seed_set = pg.closure({s}, n);
  std::vector<std::uint32_t> seed_elems;
  for (std::uint16_t i : seed_set->to_indices()) seed_elems.push_back(i);
  fam.add(std::move(*seed_set), {s});

  Bitset marked = fam.sets[0];
  for (std::uint32_t g = 0; g < n; ++g) {
    if (marked.test(g)) continue;
    // mark the double coset P g P
    for (std::uint32_t a : seed_elems)
      for (std::uint32_t b : seed_elems) marked.set(pg.mul(pg.mul(a, g), b));
    bigint ord = quick_order({s, g});
    if (ord == n) continue;
    auto closed = pg.closure({s, g}, ord.convert_to<std::uint64_t>());
    fam.add(std::move(*closed), {s, g});
  }

  // join closure of the one-generator extensions; each unordered pair is
  // examined exactly once (joins of later additions are picked up because the
  // pair scan extends to them)
  for (std::size_t j = 2; j < fam.sets.size(); ++j) {
    for (std::size_t i = 1; i < j; ++i) {
      if (fam.sets[i].is_subset_of(fam.sets[j]) || fam.sets[j].is_subset_of(fam.sets[i]))
        continue;
      std::vector<std::uint32_t> g = fam.gens[i];
      g.insert(g.end(), fam.gens[j].begin(), fam.gens[j].end());
      bigint ord = quick_order(g);
      if (ord == n) continue;
      auto closed = pg.closure(g, ord.convert_to<std::uint64_t>());
      fam.add(std::move(*closed), std::move(g));
    }
  }
  return fam;
}

}  // namespace detail

inline SeededMaximalResult seeded_maximal_search(const PermGroup& g) {
  if (!g.materialized()) throw error("seeded search requires a materialized group");
  detail::PackedGroup pg(g);
  const std::uint32_t n = pg.n();

  std::uint64_t bound = 1;
  {
    std::uint64_t m = n;
    for (std::uint64_t p : {2ull, 3ull})
      while (m % p == 0) { bound *= p; m /= p; }
  }

  // one seed element of order p per prime p >= 5 dividing |G|
  std::vector<std::uint32_t> seeds;
  {
    std::uint64_t m = n;
    for (std::uint64_t p = 2; p <= m; ++p) {
      if (m % p) continue;
      while (m % p == 0) m /= p;
      if (p < 5) continue;
      for (std::uint32_t i = 0; i < n; ++i)
        if (pg.element_order(i) == p) { seeds.push_back(i); break; }
    }
  }
  if (seeds.empty())
    throw error("seeded maximal search needs a prime >= 5 dividing the group order");

  SeededMaximalResult res;
  res.completeness_order_bound = bound;
  for (std::uint32_t s : seeds) {
    auto fam = detail::overgroups_of_seed(pg, s);
    // maximal in G = proper and contained in no other proper family member
    for (std::size_t i = 0; i < fam.sets.size(); ++i) {
      if (fam.orders[i] == n) continue;
      bool contained = false;
      for (std::size_t j = 0; j < fam.sets.size(); ++j) {
        if (i == j || fam.orders[j] == n || fam.orders[j] <= fam.orders[i]) continue;
        if (fam.sets[i].is_subset_of(fam.sets[j])) { contained = true; break; }
      }
      if (contained) continue;
      bool known = false;
      for (const auto& m : res.maximals)
        if (m.elements == fam.sets[i]) { known = true; break; }
      if (!known) {
        FoundSubgroup f;
        f.elements = fam.sets[i];
        f.order = fam.orders[i];
        f.index = n / f.order;
        f.is_maximal = true;
        res.maximals.push_back(std::move(f));
      }
    }
  }
  std::sort(res.maximals.begin(), res.maximals.end(),
            [](const FoundSubgroup& a, const FoundSubgroup& b) {
              if (a.order != b.order) return a.order < b.order;
              return a.elements < b.elements;
            });
  return res;
}

}  // namespace grp
