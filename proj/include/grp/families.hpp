#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "grp/ints.hpp"

namespace grp {

// Formula- and lookup-based statistics for the named families.

// m(PSL(n,q)): minimum index of a maximal subgroup, by the published
// classification of minimal faithful degrees:
//   8                  (n,q) = (4,2)
//   6                  (n,q) = (2,9)
//   q                  n = 2, q in {5,7,11}
//   (q^n - 1)/(q - 1)  otherwise
inline bigint m_psl(unsigned n, std::uint64_t q) {
  if (n < 2) throw error("m(PSL(n,q)) requires n >= 2");
  if (n == 2 && (q == 2 || q == 3))
    throw error("PSL(2,2) and PSL(2,3) are excluded (not simple)");
  auto [p, a] = prime_power_decompose(q);
  if (p == 0) throw error(std::to_string(q) + " is not a prime power");
  if (n == 4 && q == 2) return 8;
  if (n == 2 && q == 9) return 6;
  if (n == 2 && (q == 5 || q == 7 || q == 11)) return q;
  bigint qn = 1;
  for (unsigned i = 0; i < n; ++i) qn *= q;
  return (qn - 1) / (q - 1);
}

// meo(PGL(n,q)) = (q^n - 1)/(q - 1); an upper bound for meo(PSL(n,q))
inline bigint meo_pgl_bound(unsigned n, std::uint64_t q) {
  if (n < 2) throw error("meo(PGL(n,q)) requires n >= 2");
  bigint qn = 1;
  for (unsigned i = 0; i < n; ++i) qn *= q;
  return (qn - 1) / (q - 1);
}

struct SporadicStats {
  std::uint64_t meo;
  std::uint64_t m;
};

// (meo, m) for the sporadic/PSU/PSp exception-table entries, from the
// published ATLAS/GAP values.
inline SporadicStats sporadic_stats(const std::string& name) {
  static const std::vector<std::pair<std::string, SporadicStats>> table = {
      {"M11", {11, 11}},      {"M12", {11, 12}},      {"M22", {11, 22}},
      {"M23", {23, 23}},      {"M24", {23, 24}},      {"HS", {20, 100}},
      {"PSU(3,3)", {12, 28}}, {"PSU(3,5)", {10, 50}}, {"PSU(4,3)", {12, 112}},
      {"PSp(6,2)", {15, 28}}, {"PSp(8,2)", {30, 120}}, {"PSp(4,3)", {12, 27}},
  };
  for (const auto& [n, s] : table)
    if (n == name) return s;
  throw error("unknown exception-table group name: " + name);
}

inline const std::vector<std::string>& sporadic_names() {
  static const std::vector<std::string> names = {
      "M11", "M12", "M22", "M23", "M24", "HS",
      "PSU(3,3)", "PSU(3,5)", "PSU(4,3)", "PSp(6,2)", "PSp(8,2)", "PSp(4,3)"};
  return names;
}

// The exception table: concrete groups plus the two family-wide entries.
inline std::vector<std::string> exception_table() {
  auto names = sporadic_names();
  names.push_back("Alt(n)");
  names.push_back("PSL(n,q)");
  return names;
}

inline bool is_sporadic_name(const std::string& name) {
  for (const auto& n : sporadic_names())
    if (n == name) return true;
  return false;
}

}  // namespace grp
