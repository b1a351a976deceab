#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "grp/ints.hpp"
#include "grp/permutation.hpp"

namespace grp {

// Stabilizer chain with a fixpoint pass over all Schreier generators.  The
// group at level i is generated by the generators stored at levels i and
// deeper (generators at level i fix the base points of levels 0..i-1).  The
// closure loop is the textbook quadratic variant: fine for the small degrees
// this library works at, and easy to audit.  Once every Schreier generator
// sifts to the identity the chain is strong, so the order is exactly the
// product of the orbit sizes.
class StabilizerChain {
 public:
  explicit StabilizerChain(unsigned degree) : degree_(degree) {}

  void extend(const std::vector<Permutation>& gens) {
    for (const auto& g : gens) insert(g, 0);
    close();
  }

  bigint order() const {
    bigint o = 1;
    for (const auto& l : levels_) o *= l.orbit_size;
    return o;
  }

  bool contains(Permutation p) const {
    for (const auto& l : levels_) {
      std::uint16_t delta = p.images()[l.beta];
      if (!l.transversal[delta]) return false;
      p = l.transversal[delta]->inverse() * p;
    }
    return p.is_identity();
  }

 private:
  struct Level {
    unsigned beta = 0;
    std::vector<Permutation> gens;  // fix the base points of all earlier levels
    std::vector<std::optional<Permutation>> transversal;
    std::size_t orbit_size = 0;
  };

  // generators of the level-i group: everything stored at levels i..end
  std::vector<Permutation> level_generators(std::size_t i) const {
    std::vector<Permutation> out;
    for (std::size_t j = i; j < levels_.size(); ++j)
      out.insert(out.end(), levels_[j].gens.begin(), levels_[j].gens.end());
    return out;
  }

  // add a sifted residue at the level where sifting stopped
  void insert(const Permutation& g, std::size_t from) {
    auto [res, lvl] = sift(g, from);
    if (res.is_identity()) return;
    if (lvl == levels_.size()) {
      unsigned beta = 0;
      while (res.images()[beta] == beta) ++beta;
      Level l;
      l.beta = beta;
      l.transversal.resize(degree_);
      levels_.push_back(std::move(l));
    }
    levels_[lvl].gens.push_back(std::move(res));
    // the new generator participates in every orbit at its level and above
    for (std::size_t i = 0; i <= lvl && i < levels_.size(); ++i) recompute_orbit(i);
  }

  // add Schreier generators until every level is closed; restart the scan
  // after each modification because the chain may grow under our feet
  void close() {
    for (bool stable = false; !stable;) {
      stable = true;
      for (std::size_t i = 0; i < levels_.size() && stable; ++i) {
        const auto gens = level_generators(i);
        for (unsigned delta = 0; delta < degree_ && stable; ++delta) {
          if (!levels_[i].transversal[delta]) continue;
          for (const auto& s : gens) {
            std::uint16_t img = s.images()[delta];
            Permutation schreier = levels_[i].transversal[img]->inverse() *
                                   (s * *levels_[i].transversal[delta]);
            auto [res, lvl] = sift(std::move(schreier), i + 1);
            if (!res.is_identity()) {
              if (lvl == levels_.size()) {
                unsigned beta = 0;
                while (res.images()[beta] == beta) ++beta;
                Level nl;
                nl.beta = beta;
                nl.transversal.resize(degree_);
                levels_.push_back(std::move(nl));
              }
              levels_[lvl].gens.push_back(std::move(res));
              for (std::size_t k = 0; k <= lvl && k < levels_.size(); ++k) recompute_orbit(k);
              stable = false;
              break;
            }
          }
        }
      }
    }
  }

  std::pair<Permutation, std::size_t> sift(Permutation p, std::size_t from) const {
    for (std::size_t i = from; i < levels_.size(); ++i) {
      std::uint16_t delta = p.images()[levels_[i].beta];
      if (!levels_[i].transversal[delta]) return {std::move(p), i};
      p = levels_[i].transversal[delta]->inverse() * p;
    }
    return {std::move(p), levels_.size()};
  }

  void recompute_orbit(std::size_t i) {
    Level& l = levels_[i];
    const auto gens = level_generators(i);
    std::fill(l.transversal.begin(), l.transversal.end(), std::nullopt);
    l.transversal[l.beta] = Permutation::identity(degree_);
    std::vector<std::uint16_t> queue = {(std::uint16_t)l.beta};
    l.orbit_size = 1;
    while (!queue.empty()) {
      std::uint16_t pt = queue.back();
      queue.pop_back();
      for (const auto& g : gens) {
        std::uint16_t img = g.images()[pt];
        if (!l.transversal[img]) {
          l.transversal[img] = g * *l.transversal[pt];
          ++l.orbit_size;
          queue.push_back(img);
        }
      }
    }
  }

  unsigned degree_;
  std::vector<Level> levels_;
};

// exact order of the group generated by `gens`
inline bigint generated_order(const std::vector<Permutation>& gens, unsigned degree) {
  StabilizerChain c(degree);
  c.extend(gens);
  return c.order();
}

}  // namespace grp
