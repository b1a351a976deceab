#pragma once

#include <cstdint>
#include <vector>

namespace grp {

// fixed-capacity dynamic bitset used for subgroup element sets
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i) { w_[i >> 6] |= 1ull << (i & 63); }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : w_) c += (std::size_t)__builtin_popcountll(w);
    return c;
  }

  bool is_subset_of(const Bitset& other) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~other.w_[i]) return false;
    return true;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint64_t w : w_) {
      h ^= (std::size_t)w;
      h *= 1099511628211ull;
    }
    return h;
  }

  std::vector<std::uint16_t> to_indices() const {
    std::vector<std::uint16_t> out;
    for (std::size_t i = 0; i < n_; ++i)
      if (test(i)) out.push_back((std::uint16_t)i);
    return out;
  }

  friend bool operator==(const Bitset& a, const Bitset& b) { return a.w_ == b.w_; }
  friend bool operator<(const Bitset& a, const Bitset& b) { return a.w_ < b.w_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace grp
