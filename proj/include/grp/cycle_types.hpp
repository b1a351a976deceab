#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "grp/ints.hpp"

namespace grp {

inline constexpr unsigned kDefaultPartitionBound = 40;

// A partition of n read as the cycle type of a permutation in Sym(n).
struct CycleType {
  unsigned n = 0;
  std::vector<unsigned> parts;  // non-increasing, sums to n

  // number of permutations in Sym(n) with this cycle type: n! / prod(m_l! * l^m_l)
  bigint count() const {
    bigint z = 1;
    std::map<unsigned, unsigned> mult;
    for (unsigned l : parts) ++mult[l];
    for (auto [l, m] : mult) {
      z *= factorial(m);
      bigint lp = 1;
      for (unsigned i = 0; i < m; ++i) lp *= l;
      z *= lp;
    }
    return factorial(n) / z;
  }

  // order of any permutation with this type: lcm of the parts
  std::uint64_t element_order() const {
    std::uint64_t o = 1;
    for (unsigned l : parts) o = lcm_checked(o, l);
    return o;
  }

  // +1 iff the type is even: (-1)^(n - number of parts)
  int parity() const { return (n - (unsigned)parts.size()) % 2 == 0 ? 1 : -1; }
};

// All partitions of n in decreasing lexicographic order: (n), (n-1,1), ..., (1^n).
inline std::vector<CycleType> enumerate_cycle_types(unsigned n,
                                                    unsigned bound = kDefaultPartitionBound) {
  if (n < 1 || n > bound) throw cap_exceeded("partition bound exceeded");
  std::vector<CycleType> out;
  std::vector<unsigned> cur;
  auto rec = [&](auto&& self, unsigned remaining, unsigned max_part) -> void {
    if (remaining == 0) {
      out.push_back(CycleType{n, cur});
      return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
      cur.push_back(part);
      self(self, remaining - part, part);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

// psi(Sym(n)) by summation over all cycle types
inline bigint psi_symmetric(unsigned n, unsigned bound = kDefaultPartitionBound) {
  bigint psi = 0;
  for (const auto& t : enumerate_cycle_types(n, bound)) psi += t.count() * t.element_order();
  return psi;
}

// psi(Alt(n)) by summation over even cycle types
inline bigint psi_alternating(unsigned n, unsigned bound = kDefaultPartitionBound) {
  bigint psi = 0;
  for (const auto& t : enumerate_cycle_types(n, bound))
    if (t.parity() == 1) psi += t.count() * t.element_order();
  return psi;
}

// meo(Alt(n)): maximum lcm over even partitions of n
inline std::uint64_t meo_alternating(unsigned n, unsigned bound = kDefaultPartitionBound) {
  std::uint64_t best = 1;
  for (const auto& t : enumerate_cycle_types(n, bound))
    if (t.parity() == 1) best = std::max(best, t.element_order());
  return best;
}

// exp(Alt(n)): lcm over even cycle types
inline std::uint64_t exponent_alternating(unsigned n, unsigned bound = kDefaultPartitionBound) {
  std::uint64_t x = 1;
  for (const auto& t : enumerate_cycle_types(n, bound))
    if (t.parity() == 1) x = lcm_checked(x, t.element_order());
  return x;
}

// exp(Sym(n)): lcm over all cycle types
inline std::uint64_t exponent_symmetric(unsigned n, unsigned bound = kDefaultPartitionBound) {
  std::uint64_t x = 1;
  for (const auto& t : enumerate_cycle_types(n, bound)) x = lcm_checked(x, t.element_order());
  return x;
}

// meo(Sym(n)): Landau's function
inline std::uint64_t meo_symmetric(unsigned n, unsigned bound = kDefaultPartitionBound) {
  std::uint64_t best = 1;
  for (const auto& t : enumerate_cycle_types(n, bound)) best = std::max(best, t.element_order());
  return best;
}

}  // namespace grp
