#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <unordered_set>
#include <vector>

#include "grp/ints.hpp"
#include "grp/permutation.hpp"

namespace grp {

inline constexpr std::uint64_t kDefaultElementCap = 1000000;

// Closure of a generator set under composition (BFS over right multiplication).
// Returned elements are sorted lexicographically on image sequences.
inline std::vector<Permutation> enumerate_elements(const std::vector<Permutation>& generators,
                                                   std::uint64_t cap = kDefaultElementCap) {
  if (generators.empty()) throw error("empty generator set");
  unsigned degree = generators[0].degree();
  for (const auto& g : generators)
    if (g.degree() != degree) throw error("generators of mixed degree");

  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<const Permutation*> queue;
  seen.insert(Permutation::identity(degree));
  queue.push_back(&*seen.begin());
  while (!queue.empty()) {
    Permutation cur = *queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      Permutation next = cur * g;
      auto [it, inserted] = seen.insert(std::move(next));
      if (inserted) {
        if (seen.size() > cap) throw cap_exceeded("element cap exceeded during closure");
        queue.push_back(&*it);
      }
    }
  }
  std::vector<Permutation> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

class PermGroup {
 public:
  PermGroup(unsigned degree, std::vector<Permutation> generators)
      : degree_(degree), generators_(std::move(generators)) {
    if (generators_.empty()) throw error("a group needs at least one generator");
    for (const auto& g : generators_)
      if (g.degree() != degree_) throw error("generator degree mismatch");
  }

  unsigned degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  bool materialized() const { return elements_.has_value(); }
  const std::vector<Permutation>& elements() const {
    if (!elements_) throw error("group is not materialized");
    return *elements_;
  }
  std::uint64_t order() const {
    if (!order_) throw error("group order is unknown (not materialized)");
    return *order_;
  }

  // known order without element storage (e.g. cap refusal with a predicted order)
  void set_known_order(std::uint64_t n) { order_ = n; }
  bool order_known() const { return order_.has_value(); }

  void materialize_elements(std::uint64_t cap = kDefaultElementCap) {
    if (elements_) return;
    auto elems = enumerate_elements(generators_, cap);
    if (order_ && *order_ != elems.size()) throw error("closure order disagrees with prediction");
    order_ = elems.size();
    elements_ = std::move(elems);
  }

 private:
  unsigned degree_;
  std::vector<Permutation> generators_;
  std::optional<std::vector<Permutation>> elements_;
  std::optional<std::uint64_t> order_;
};

}  // namespace grp
