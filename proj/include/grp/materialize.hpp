#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <vector>

#include "grp/gfmatrix.hpp"
#include "grp/group_spec.hpp"
#include "grp/ints.hpp"
#include "grp/perm_group.hpp"

namespace grp {

inline bigint predicted_order(const GroupSpec& spec) {
  return std::visit(
      [](const auto& s) -> bigint {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CyclicSpec>) {
          return s.n;
        } else if constexpr (std::is_same_v<T, DirectProductSpec>) {
          bigint o = 1;
          for (auto n : s.factors) o *= n;
          return o;
        } else if constexpr (std::is_same_v<T, SymSpec>) {
          return factorial(s.n);
        } else if constexpr (std::is_same_v<T, AltSpec>) {
          return s.n >= 2 ? factorial(s.n) / 2 : bigint(1);
        } else if constexpr (std::is_same_v<T, PslSpec>) {
          return psl_order(s.n, s.q);
        } else if constexpr (std::is_same_v<T, PglSpec>) {
          return pgl_order(s.n, s.q);
        } else {
          return -1;  // unknown until closure
        }
      },
      spec);
}

namespace detail {

inline Permutation long_cycle(unsigned degree, unsigned from, unsigned len) {
  std::vector<std::uint16_t> c;
  for (unsigned i = 0; i < len; ++i) c.push_back((std::uint16_t)(from + i));
  return Permutation::from_cycles(degree, {c});
}

// Canonical generators:
//   C(n)            one n-cycle
//   C(n1)x...       one block cycle per factor
//   Sym(n)          (1 2), (1 2 ... n)
//   Alt(n)          (1 2 3), (1 2 ... n)       for odd n
//                   (1 2 3), (2 3 ... n)       for even n
//   PSL/PGL(n,q)    projective action of transvection/GL generators
inline std::vector<Permutation> canonical_generators(const GroupSpec& spec, unsigned& degree_out) {
  return std::visit(
      [&](const auto& s) -> std::vector<Permutation> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CyclicSpec>) {
          degree_out = (unsigned)s.n;
          return {long_cycle(degree_out, 0, degree_out)};
        } else if constexpr (std::is_same_v<T, DirectProductSpec>) {
          unsigned deg = 0;
          for (auto n : s.factors) deg += (unsigned)n;
          degree_out = deg;
          std::vector<Permutation> gens;
          unsigned off = 0;
          for (auto n : s.factors) {
            gens.push_back(long_cycle(deg, off, (unsigned)n));
            off += (unsigned)n;
          }
          return gens;
        } else if constexpr (std::is_same_v<T, SymSpec>) {
          degree_out = s.n;
          if (s.n == 1) return {Permutation::identity(1)};
          std::vector<Permutation> gens = {Permutation::from_cycles(s.n, {{0, 1}})};
          if (s.n > 2) gens.push_back(long_cycle(s.n, 0, s.n));
          return gens;
        } else if constexpr (std::is_same_v<T, AltSpec>) {
          degree_out = s.n;
          if (s.n <= 2) return {Permutation::identity(s.n)};
          std::vector<Permutation> gens = {Permutation::from_cycles(s.n, {{0, 1, 2}})};
          if (s.n > 3) {
            if (s.n % 2 == 1)
              gens.push_back(long_cycle(s.n, 0, s.n));
            else
              gens.push_back(long_cycle(s.n, 1, s.n - 1));
          }
          return gens;
        } else if constexpr (std::is_same_v<T, PslSpec> || std::is_same_v<T, PglSpec>) {
          auto field = make_field(s.p, s.a);
          auto mats = std::is_same_v<T, PslSpec> ? sl_generators(s.n, field)
                                                 : gl_generators(s.n, field);
          PermGroup g = projective_action(mats);
          degree_out = g.degree();
          return g.generators();
        } else {
          degree_out = s.degree;
          return s.generators;
        }
      },
      spec);
}

}  // namespace detail

// Build the permutation group for a spec.  When the predicted order fits
// under the cap (or is unknown and closure succeeds) the result carries the
// full element set; otherwise it is returned generators-only.
inline PermGroup materialize(const GroupSpec& spec, std::uint64_t cap = kDefaultElementCap) {
  unsigned degree = 0;
  auto gens = detail::canonical_generators(spec, degree);
  PermGroup g(degree, std::move(gens));
  bigint predicted = predicted_order(spec);
  if (predicted >= 0 && predicted > cap) {
    // flagged non-materialized; keep the closed-form order when it fits
    if (predicted <= bigint(std::numeric_limits<std::uint64_t>::max()))
      g.set_known_order(predicted.convert_to<std::uint64_t>());
    return g;
  }
  try {
    g.materialize_elements(cap);
  } catch (const cap_exceeded&) {
    return g;
  }
  if (predicted >= 0 && bigint(g.order()) != predicted)
    throw error("materialized order " + std::to_string(g.order()) +
                " does not match predicted order for " + spec_to_string(spec));
  return g;
}

}  // namespace grp
