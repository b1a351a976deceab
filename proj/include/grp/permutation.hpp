#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "grp/ints.hpp"

namespace grp {

// A bijection of {1..degree}, stored 0-based as an image list.
// Composition convention is right-to-left: (a*b)(i) = a(b(i)).
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(unsigned degree) {
    Permutation p;
    p.img_.resize(degree);
    for (unsigned i = 0; i < degree; ++i) p.img_[i] = (std::uint16_t)i;
    return p;
  }

  // images are 0-based
  static Permutation from_images(std::vector<std::uint16_t> images) {
    Permutation p;
    p.img_ = std::move(images);
    p.check();
    return p;
  }

  // cycles use 0-based points here; callers render/parse 1-based
  static Permutation from_cycles(unsigned degree,
                                 const std::vector<std::vector<std::uint16_t>>& cycles) {
    Permutation p = identity(degree);
    for (const auto& c : cycles) {
      for (std::size_t k = 0; k < c.size(); ++k) {
        std::uint16_t from = c[k];
        std::uint16_t to = c[(k + 1) % c.size()];
        if (from >= degree) throw error("cycle point out of range");
        if (p.img_[from] != from) throw error("point repeated in cycle notation");
        p.img_[from] = to;
      }
    }
    p.check();
    return p;
  }

  unsigned degree() const { return (unsigned)img_.size(); }
  std::uint16_t operator[](unsigned i) const { return img_[i]; }
  const std::vector<std::uint16_t>& images() const { return img_; }

  bool is_identity() const {
    for (unsigned i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  // (a*b)(i) = a(b(i)): apply b first
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw error("degree mismatch in composition");
    Permutation r;
    r.img_.resize(a.degree());
    for (unsigned i = 0; i < a.degree(); ++i) r.img_[i] = a.img_[b.img_[i]];
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    r.img_.resize(degree());
    for (unsigned i = 0; i < degree(); ++i) r.img_[img_[i]] = (std::uint16_t)i;
    return r;
  }

  std::vector<std::vector<std::uint16_t>> cycles() const {
    std::vector<std::vector<std::uint16_t>> out;
    std::vector<bool> seen(degree(), false);
    for (unsigned i = 0; i < degree(); ++i) {
      if (seen[i]) continue;
      std::vector<std::uint16_t> c;
      unsigned j = i;
      while (!seen[j]) {
        seen[j] = true;
        c.push_back((std::uint16_t)j);
        j = img_[j];
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  // least k >= 1 with p^k = identity; lcm of cycle lengths
  std::uint64_t order() const {
    std::uint64_t o = 1;
    for (const auto& c : cycles()) o = lcm_checked(o, c.size());
    return o;
  }

  // +1 for even permutations
  // 0 = even, 1 = odd (transposition count mod 2)
  int parity() const {
    unsigned swaps = 0;
    for (const auto& c : cycles()) swaps += (unsigned)c.size() - 1;
    return (int)(swaps % 2);
  }

  // non-increasing list of cycle lengths
  std::vector<unsigned> cycle_lengths() const {
    std::vector<unsigned> ls;
    for (const auto& c : cycles()) ls.push_back((unsigned)c.size());
    std::sort(ls.rbegin(), ls.rend());
    return ls;
  }

  // 1-based cycle notation, fixed points omitted; identity prints as "()"
  std::string to_cycle_string() const {
    std::ostringstream os;
    bool any = false;
    for (const auto& c : cycles()) {
      if (c.size() < 2) continue;
      any = true;
      os << '(';
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (k) os << ' ';
        os << (c[k] + 1);
      }
      os << ')';
    }
    if (!any) return "()";
    return os.str();
  }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
  // lexicographic on image sequences
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

 private:
  void check() const {
    std::vector<bool> seen(img_.size(), false);
    for (std::uint16_t v : img_) {
      if (v >= img_.size() || seen[v]) throw error("image list is not a bijection");
      seen[v] = true;
    }
  }

  std::vector<std::uint16_t> img_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint16_t v : p.images()) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// packed form for degree <= 16: 4 bits per point
inline std::uint64_t pack_perm(const Permutation& p) {
  if (p.degree() > 16) throw error("cannot pack permutation of degree > 16");
  std::uint64_t w = 0;
  for (unsigned i = 0; i < p.degree(); ++i) w |= (std::uint64_t)p[i] << (4 * i);
  return w;
}

inline std::uint64_t compose_packed(std::uint64_t a, std::uint64_t b, unsigned degree) {
  std::uint64_t r = 0;
  for (unsigned i = 0; i < degree; ++i) {
    unsigned bi = (b >> (4 * i)) & 0xf;
    unsigned ai = (a >> (4 * bi)) & 0xf;
    r |= (std::uint64_t)ai << (4 * i);
  }
  return r;
}

inline Permutation unpack_perm(std::uint64_t w, unsigned degree) {
  std::vector<std::uint16_t> img(degree);
  for (unsigned i = 0; i < degree; ++i) img[i] = (w >> (4 * i)) & 0xf;
  return Permutation::from_images(std::move(img));
}

}  // namespace grp
