#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "grp/gfmatrix.hpp"
#include "grp/order_stats.hpp"

using namespace grp;

namespace {

// Naive matrix group closure (oracle for small orders only).
std::size_t matrix_closure_size(const std::vector<SquareMatrix>& gens, std::size_t cap) {
  std::vector<SquareMatrix> seen{SquareMatrix::identity(gens[0].field(), gens[0].n())};
  auto contains = [&](const SquareMatrix& m) {
    for (const auto& s : seen)
      if (s == m) return true;
    return false;
  };
  for (std::size_t i = 0; i < seen.size(); ++i) {
    for (const auto& g : gens) {
      SquareMatrix next = seen[i] * g;
      if (!contains(next)) {
        seen.push_back(next);
        REQUIRE(seen.size() <= cap);
      }
    }
  }
  return seen.size();
}

}  // namespace

TEST_CASE("SL generators all have determinant 1") {
  for (auto [p, a, n] : std::vector<std::tuple<std::uint64_t, unsigned, unsigned>>{
           {2, 1, 2}, {3, 1, 2}, {2, 2, 2}, {5, 1, 2}, {3, 2, 2}, {2, 1, 4}, {2, 1, 3}}) {
    auto f = make_field(p, a);
    for (const auto& m : sl_generators(n, f)) REQUIRE(m.determinant() == 1);
  }
}

TEST_CASE("determinant is multiplicative") {
  auto f = make_field(5, 1);
  std::mt19937 rng(3);
  for (int t = 0; t < 50; ++t) {
    SquareMatrix x(f, 3), y(f, 3);
    for (unsigned i = 0; i < 3; ++i)
      for (unsigned j = 0; j < 3; ++j) {
        x.at(i, j) = (std::uint16_t)(rng() % 5);
        y.at(i, j) = (std::uint16_t)(rng() % 5);
      }
    REQUIRE((x * y).determinant() == f->mul(x.determinant(), y.determinant()));
  }
}

TEST_CASE("SL closure sizes match the order formula") {
  for (auto [p, a, n] : std::vector<std::tuple<std::uint64_t, unsigned, unsigned>>{
           {2, 1, 2}, {3, 1, 2}, {2, 2, 2}, {5, 1, 2}, {2, 1, 3}}) {
    auto f = make_field(p, a);
    auto gens = sl_generators(n, f);
    REQUIRE(bigint(matrix_closure_size(gens, 400)) == sl_order(n, f->q()));
  }
}

TEST_CASE("GL closure sizes match the order formula") {
  for (auto [p, a, n] : std::vector<std::tuple<std::uint64_t, unsigned, unsigned>>{
           {2, 1, 2}, {3, 1, 2}, {2, 2, 2}, {5, 1, 2}}) {
    auto f = make_field(p, a);
    auto gens = gl_generators(n, f);
    REQUIRE(bigint(matrix_closure_size(gens, 600)) == gl_order(n, f->q()));
  }
}

TEST_CASE("projective point counts and normalization") {
  for (auto [p, a, n] : std::vector<std::tuple<std::uint64_t, unsigned, unsigned>>{
           {2, 1, 2}, {3, 1, 2}, {5, 1, 2}, {3, 2, 2}, {2, 1, 4}, {2, 2, 3}}) {
    auto f = make_field(p, a);
    auto pts = projective_points(n, f);
    std::uint64_t expect = 0, acc = 1;
    for (unsigned i = 0; i < n; ++i) { expect += acc; acc *= f->q(); }
    REQUIRE(pts.size() == expect);
    // each point is normalized and normalization is scale-invariant
    for (const auto& v : pts) {
      unsigned first = n;
      for (unsigned i = 0; i < n; ++i)
        if (v[i]) { first = i; break; }
      REQUIRE(first < n);
      REQUIRE(v[first] == 1);
      for (std::uint16_t lambda = 1; lambda < f->q(); ++lambda) {
        auto scaled = v;
        for (auto& c : scaled) c = f->mul(c, lambda);
        REQUIRE(normalize_projective(f, scaled) == v);
      }
    }
  }
}

TEST_CASE("projective action of SL gives PSL of the right order") {
  struct Case { std::uint64_t p; unsigned a, n; std::uint64_t order, meo; };
  for (auto c : {Case{5, 1, 2, 60, 5}, Case{7, 1, 2, 168, 7},
                 Case{3, 2, 2, 360, 5}, Case{11, 1, 2, 660, 11},
                 Case{2, 1, 3, 168, 7}}) {
    auto f = make_field(c.p, c.a);
    auto g = projective_action(sl_generators(c.n, f));
    std::uint64_t deg = 0, acc = 1;
    for (unsigned i = 0; i < c.n; ++i) { deg += acc; acc *= f->q(); }
    REQUIRE(g.degree() == deg);
    g.materialize_elements();
    REQUIRE(bigint(g.order()) == psl_order(c.n, f->q()));
    REQUIRE(bigint(g.order()) == bigint(c.order));
    REQUIRE(meo_bruteforce(g) == c.meo);
  }
}

TEST_CASE("projective action of GL gives PGL of the right order") {
  for (auto [p, a] : std::vector<std::pair<std::uint64_t, unsigned>>{{5, 1}, {2, 2}, {7, 1}}) {
    auto f = make_field(p, a);
    auto g = projective_action(gl_generators(2, f));
    g.materialize_elements();
    REQUIRE(bigint(g.order()) == pgl_order(2, f->q()));
  }
}

TEST_CASE("order formulas match known values") {
  REQUIRE(gl_order(2, 2) == 6);
  REQUIRE(gl_order(2, 3) == 48);
  REQUIRE(sl_order(2, 5) == 120);
  REQUIRE(pgl_order(2, 5) == 120);
  REQUIRE(pgl_order(2, 2) == 6);
  REQUIRE(pgl_order(2, 3) == 24);
  REQUIRE(psl_order(2, 9) == 360);
  REQUIRE(psl_order(4, 2) == 20160);
  REQUIRE(psl_order(3, 2) == 168);
}

TEST_CASE("singular matrices are rejected in the projective action") {
  auto f = make_field(3, 1);
  SquareMatrix z(f, 2);  // zero matrix
  REQUIRE_THROWS_AS(projective_action({z}), error);
}
