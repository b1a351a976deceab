#pragma once

#include <cstdint>
#include <string>

#include "grp/cycle_types.hpp"
#include "grp/ints.hpp"
#include "grp/perm_group.hpp"

namespace grp {

enum class StatsMethod { BruteForce, CycleType, Lookup };

inline const char* to_string(StatsMethod m) {
  switch (m) {
    case StatsMethod::BruteForce: return "brute-force";
    case StatsMethod::CycleType: return "cycle-type";
    case StatsMethod::Lookup: return "lookup";
  }
  return "?";
}

struct OrderStats {
  bigint order;
  bigint psi;
  std::uint64_t meo = 1;
  std::uint64_t exponent = 1;
  StatsMethod method = StatsMethod::BruteForce;
};

// sum of element orders, exact
inline bigint psi_bruteforce(const PermGroup& g) {
  bigint psi = 0;
  for (const auto& e : g.elements()) psi += e.order();
  return psi;
}

// maximum element order
inline std::uint64_t meo_bruteforce(const PermGroup& g) {
  std::uint64_t m = 1;
  for (const auto& e : g.elements()) m = std::max(m, e.order());
  return m;
}

// lcm of all element orders
inline std::uint64_t exponent(const PermGroup& g) {
  std::uint64_t x = 1;
  for (const auto& e : g.elements()) x = lcm_checked(x, e.order());
  return x;
}

inline OrderStats order_stats_bruteforce(const PermGroup& g) {
  OrderStats s;
  s.order = g.order();
  s.method = StatsMethod::BruteForce;
  s.psi = 0;
  for (const auto& e : g.elements()) {
    std::uint64_t o = e.order();
    s.psi += o;
    s.meo = std::max(s.meo, o);
    s.exponent = lcm_checked(s.exponent, o);
  }
  return s;
}

}  // namespace grp
