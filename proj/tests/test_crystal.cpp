#include <doctest.h>

#include <map>

#include "mvpoly/crystal.hpp"
#include "mvpoly/errors.hpp"
#include "mvpoly/transition.hpp"
#include "support/nz_oracle.hpp"
#include "support/samples.hpp"

using namespace mvpoly;
using namespace samples;

TEST_CASE("lowest element") {
  for (auto kind : kAllKinds) {
    const auto b = lowest(kind);
    CHECK(b.left().is_zero());
    CHECK(b.right().is_zero());
    CHECK(wt(b).is_zero());
    CHECK_FALSE(f(0, b).has_value());
    CHECK_FALSE(f(1, b).has_value());
    CHECK_FALSE(f_star(1, b).has_value());
  }
}

TEST_CASE("operator examples") {
  const auto b0 = lowest(S);
  CHECK(e(0, b0) == DecoratedPolytope(datum(S, {{hi(1), 1}}), datum(S, {{hi(1), 1}})));
  CHECK(f(0, e(0, b0)) == b0);
  const auto twice = e_star(0, e_star(0, e(1, b0)));
  CHECK(twice.left() == datum(S, {{hi(1), 2}, {lo(1), 1}}));
  CHECK(twice.right() == datum(S, {{hi(2), 1}}));
  CHECK(phi(0, b0) == 0);
  CHECK(eps(0, e(1, b0)) == 2);
  CHECK(phi(0, e(0, e(0, b0))) == 2);
  CHECK(star(b0) == b0);
  const DecoratedPolytope p(datum(S, {{hi(1), 2}, {lo(1), 1}}), datum(S, {{hi(2), 1}}));
  CHECK(star(p) == DecoratedPolytope(datum(S, {{hi(2), 1}}), datum(S, {{hi(1), 2}, {lo(1), 1}})));
  CHECK(tau(b0) == b0);
  CHECK(tau(e(0, b0)) == e(1, b0));
  CHECK_THROWS_AS(tau(lowest(T)), UnsupportedKind);
}

TEST_CASE("saito examples") {
  const auto b = e(1, lowest(S));
  CHECK(saito(0, b) ==
        DecoratedPolytope(datum(S, {{hi(2), 1}}), datum(S, {{hi(1), 2}, {lo(1), 1}})));
  CHECK(saito(0, lowest(S)) == lowest(S));
  CHECK(saito_star(0, saito(0, b)) == b);
  CHECK_THROWS_AS(saito(1, b), PreconditionViolated);
  CHECK_THROWS_AS(saito_star(1, e_star(1, lowest(T))), PreconditionViolated);
}

TEST_CASE("graph sizes") {
  CHECK(crystal_graph(S, 0).nodes.size() == 1);
  const auto g1 = crystal_graph(S, 1);
  CHECK(g1.nodes.size() == 3);
  CHECK(g1.find(e(0, lowest(S))).has_value());
  CHECK(g1.find(e(1, lowest(S))).has_value());
  std::size_t last = 0;
  for (int d = 0; d <= 6; ++d) {
    const std::size_t n = crystal_graph(T, d).nodes.size();
    CHECK(n >= last);
    last = n;
  }
  CHECK_THROWS_AS(crystal_graph(S, -1), PreconditionViolated);
}

TEST_CASE("MV crystal is isomorphic to an independent model of B(infinity)") {
  for (auto kind : kAllKinds) {
    const int depth = 8;
    const oracle::Crystal o(kind);
    const CrystalGraph g = crystal_graph(kind, depth);
    // Follow the breadth-first tree in both models at once.
    std::vector<std::optional<oracle::Vec>> image(g.nodes.size());
    image[0] = o.lowest();
    std::map<oracle::Vec, std::size_t> back{{o.lowest(), 0}};
    for (const auto& edge : g.edges) {
      const int i = edge.op == Op::E0 || edge.op == Op::E0Star ? 0 : 1;
      const bool starred = edge.op == Op::E0Star || edge.op == Op::E1Star;
      const oracle::Vec& x = *image[edge.from];
      const oracle::Vec y = starred ? o.e_star(x, i) : o.e(x, i);
      if (!image[edge.to]) {
        image[edge.to] = y;
        const bool fresh = back.emplace(y, edge.to).second;
        CHECK(fresh);
      } else {
        CHECK(*image[edge.to] == y);
      }
    }
    CHECK(back.size() == g.nodes.size());
    for (std::size_t n = 0; n < g.nodes.size(); ++n) {
      const auto& b = g.nodes[n];
      const auto& x = *image[n];
      for (int i = 0; i < 2; ++i) {
        CHECK(phi(i, b) == o.phi(x, i));
        CHECK(phi_star(i, b) == o.phi_star(x, i));
      }
    }
  }
}

TEST_CASE("operators on a graph") {
  for (auto kind : kAllKinds) {
    const auto g = crystal_graph(kind, 6);
    for (const auto& b : g.nodes) {
      CHECK(is_mv(b).passed());
      CHECK(transition_l_to_r(b.left()) == b.right());
      for (int i = 0; i < 2; ++i) {
        CHECK(f(i, e(i, b)) == b);
        CHECK(f_star(i, e_star(i, b)) == b);
        CHECK(wt(e(i, b)) == wt(b) + simple_root(i));
        CHECK(star(e(i, star(b))) == e_star(i, b));
        CHECK(eps(i, b) == phi(i, b) - cartan_pair(kind, i, wt(b)));
      }
      CHECK(star(star(b)) == b);
      if (kind == S) {
        CHECK(tau(tau(b)) == b);
        CHECK(tau(star(b)) == star(tau(b)));
      }
    }
  }
}
