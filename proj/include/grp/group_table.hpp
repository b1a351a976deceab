#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "grp/bitset.hpp"
#include "grp/ints.hpp"
#include "grp/perm_group.hpp"

namespace grp {

inline constexpr std::uint64_t kDefaultLatticeOrderCap = 2520;

// Multiplication table over the canonical (lex-sorted) element list of a
// materialized group.  All lattice work runs on element indices.
class GroupTable {
 public:
  explicit GroupTable(const PermGroup& g) : group_(&g) {
    if (!g.materialized()) throw error("group table requires a materialized group");
    n_ = (std::uint32_t)g.order();
    if (n_ > 65535) throw error("group too large for a multiplication table");
    const auto& elems = g.elements();
    std::unordered_map<Permutation, std::uint32_t, PermutationHash> index;
    index.reserve(n_ * 2);
    for (std::uint32_t i = 0; i < n_; ++i) index.emplace(elems[i], i);
    mul_.resize((std::size_t)n_ * n_);
    for (std::uint32_t i = 0; i < n_; ++i)
      for (std::uint32_t j = 0; j < n_; ++j)
        mul_[(std::size_t)i * n_ + j] = (std::uint16_t)index.at(elems[i] * elems[j]);
    inv_.resize(n_);
    order_.resize(n_);
    for (std::uint32_t i = 0; i < n_; ++i) {
      if (elems[i].is_identity()) identity_ = i;
      order_[i] = elems[i].order();
      inv_[i] = (std::uint16_t)index.at(elems[i].inverse());
    }
    gen_indices_.clear();
    for (const auto& g0 : g.generators()) {
      std::uint16_t gi = (std::uint16_t)index.at(g0);
      if (gi != identity_ || g.generators().size() == 1) gen_indices_.push_back(gi);
    }
    divisors_.clear();
    for (std::uint32_t d = 1; d <= n_; ++d)
      if (n_ % d == 0) divisors_.push_back(d);
  }

  const PermGroup& group() const { return *group_; }
  std::uint32_t order() const { return n_; }
  std::uint16_t mul(std::uint32_t i, std::uint32_t j) const {
    return mul_[(std::size_t)i * n_ + j];
  }
  std::uint16_t inv(std::uint32_t i) const { return inv_[i]; }
  std::uint64_t element_order(std::uint32_t i) const { return order_[i]; }
  std::uint16_t identity() const { return identity_; }
  const std::vector<std::uint16_t>& generator_indices() const { return gen_indices_; }

  // largest proper divisor of |G| that is a multiple of m; 0 when none exists
  std::uint32_t largest_proper_divisor_multiple(std::uint64_t m) const {
    for (auto it = divisors_.rbegin(); it != divisors_.rend(); ++it)
      if (*it < n_ && *it % m == 0) return *it;
    return 0;
  }

  // Closure of a set of element indices.  Returns the subgroup bitset, or an
  // empty optional when the closure size exceeds `threshold` (meaning the
  // closure is the whole group whenever threshold >= largest proper subgroup
  // order compatible with the seed).
  std::optional<Bitset> closure(const std::vector<std::uint16_t>& gens,
                                std::uint64_t threshold) const {
    Bitset seen(n_);
    std::vector<std::uint16_t> stack;
    seen.set(identity_);
    std::size_t size = 1;
    stack.push_back(identity_);
    while (!stack.empty()) {
      std::uint16_t x = stack.back();
      stack.pop_back();
      for (std::uint16_t g : gens) {
        std::uint16_t y = mul(x, g);
        if (!seen.test(y)) {
          seen.set(y);
          if (++size > threshold) return std::nullopt;
          stack.push_back(y);
        }
      }
    }
    return seen;
  }

  bigint psi_of(const Bitset& subset) const {
    bigint psi = 0;
    for (std::uint32_t i = 0; i < n_; ++i)
      if (subset.test(i)) psi += order_[i];
    return psi;
  }

  std::uint64_t meo_of(const Bitset& subset) const {
    std::uint64_t m = 1;
    for (std::uint32_t i = 0; i < n_; ++i)
      if (subset.test(i)) m = std::max(m, order_[i]);
    return m;
  }

 private:
  const PermGroup* group_;
  std::uint32_t n_ = 0;
  std::uint16_t identity_ = 0;
  std::vector<std::uint16_t> mul_, inv_;
  std::vector<std::uint64_t> order_;
  std::vector<std::uint16_t> gen_indices_;
  std::vector<std::uint32_t> divisors_;
};

}  // namespace grp
