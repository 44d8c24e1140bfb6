#include <doctest.h>

#include "phenylene/errors.hpp"
#include "phenylene/laplacian.hpp"
#include "phenylene/linear_algebra.hpp"
#include "phenylene/random_graphs.hpp"
#include "support.hpp"

using namespace phenylene;
using testing_support::cycle;
using testing_support::oracle_resistances;
using testing_support::path;

TEST_CASE("network bookkeeping") {
  ResistanceNetwork net;
  net.add_edge(3, 7, Rational(2));
  net.add_edge(7, 3, Rational(1, 2));
  net.add_edge(7, 9, Rational(1));
  CHECK(net.vertices() == std::vector<VertexId>{3, 7, 9});
  CHECK(net.degree(7) == 3);
  CHECK(net.neighbors(7) == std::vector<VertexId>{3, 9});
  CHECK(net.edges_between(3, 7).size() == 2);
  CHECK(net.add_fresh_vertex() == 10);
  CHECK_FALSE(net.is_connected());
  CHECK_THROWS_AS(net.add_edge(1, 1, Rational(1)), InvalidParameter);
  CHECK_THROWS_AS(net.add_edge(1, 2, Rational(0)), InvalidParameter);
  CHECK_THROWS_AS(net.add_edge(1, 2, Rational(-1)), InvalidParameter);
  net.remove_vertex(10);
  CHECK(net.is_connected());
  CHECK(net.remove_edges_between(3, 7) == 2);
  CHECK_FALSE(net.is_connected());
}

TEST_CASE("equality ignores edge order") {
  ResistanceNetwork a, b;
  a.add_edge(0, 1, Rational(1));
  a.add_edge(1, 2, Rational(2));
  b.add_edge(2, 1, Rational(2));
  b.add_edge(1, 0, Rational(1));
  CHECK(a == b);
  b.add_edge(0, 2, Rational(1));
  CHECK_FALSE(a == b);
}

TEST_CASE("exact solve and inverse") {
  RationalMatrix a(3, 3);
  a(0, 0) = 2; a(0, 1) = 1; a(0, 2) = 0;
  a(1, 0) = 1; a(1, 1) = 3; a(1, 2) = 1;
  a(2, 0) = 0; a(2, 1) = 1; a(2, 2) = 4;
  const auto x = solve(a, {Rational(1), Rational(2), Rational(3)});
  for (std::size_t i = 0; i < 3; ++i) {
    Rational row;
    for (std::size_t j = 0; j < 3; ++j) row += a(i, j) * x[j];
    CHECK(row == Rational(static_cast<long>(i) + 1));
  }
  const RationalMatrix id = a * inverse(a);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(id(i, j) == Rational(i == j ? 1 : 0));
  }
  RationalMatrix singular(2, 2);
  singular(0, 0) = 1; singular(0, 1) = 2;
  singular(1, 0) = 2; singular(1, 1) = 4;
  CHECK_THROWS_AS(inverse(singular), ArithmeticError);
}

TEST_CASE("small exact values") {
  CHECK(kirchhoff_index(cycle(6)) == Rational(35, 2));
  CHECK(kirchhoff_index(path(3)) == Rational(4));
  CHECK(effective_resistance(cycle(4), 0, 1) == Rational(3, 4));
  CHECK(effective_resistance(cycle(4), 0, 2) == Rational(1));

  ResistanceNetwork single;
  single.add_vertex(5);
  CHECK(kirchhoff_index(single) == Rational(0));
}

TEST_CASE("trees: resistance equals path length") {
  Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    // Random tree on 10 vertices with unit edges; parent[i] < i.
    ResistanceNetwork tree;
    std::vector<int> depth(10, 0);
    std::vector<int> parent(10, -1);
    for (int i = 1; i < 10; ++i) {
      std::uniform_int_distribution<int> pick(0, i - 1);
      parent[i] = pick(rng);
      depth[i] = depth[parent[i]] + 1;
      tree.add_edge(static_cast<VertexId>(parent[i]), static_cast<VertexId>(i), Rational(1));
    }
    auto distance = [&](int u, int v) {
      int d = 0;
      while (u != v) {
        if (depth[u] < depth[v]) std::swap(u, v);
        u = parent[u];
        ++d;
      }
      return d;
    };
    const auto m = resistance_matrix(tree);
    for (int u = 0; u < 10; ++u) {
      for (int v = u + 1; v < 10; ++v) {
        CHECK(m.at(static_cast<VertexId>(u), static_cast<VertexId>(v)) == Rational(distance(u, v)));
      }
    }
  }
}

TEST_CASE("both resistance routes agree with the test oracle") {
  Rng rng(3);
  RandomGraphOptions opt;
  opt.max_vertices = 9;
  opt.parallel_probability = 0.2;
  for (int t = 0; t < 25; ++t) {
    const auto net = random_connected_network(rng, opt);
    const auto want = oracle_resistances(net);
    const auto m = resistance_matrix(net);
    for (const auto& [pair, r] : want) {
      CHECK(m.at(pair.first, pair.second) == r);
      CHECK(m.at(pair.second, pair.first) == r);
      CHECK(effective_resistance(net, pair.first, pair.second) == r);
    }
    CHECK(kirchhoff_index(net) == testing_support::oracle_kf(net));
    // Metric properties.
    const auto& vs = net.vertices();
    for (VertexId u : vs) {
      CHECK(m.at(u, u) == Rational(0));
      for (VertexId v : vs) {
        if (u == v) continue;
        CHECK(m.at(u, v).sign() > 0);
        for (VertexId w : vs) CHECK(m.at(u, w) <= m.at(u, v) + m.at(v, w));
      }
    }
  }
}

TEST_CASE("grounded multi-target solve matches single solves") {
  Rng rng(5);
  const auto net = random_connected_network(rng, RandomGraphOptions{});
  const auto& vs = net.vertices();
  const std::vector<VertexId> targets(vs.begin() + 1, vs.end());
  const auto got = effective_resistances(net, vs.front(), targets);
  for (std::size_t i = 0; i < targets.size(); ++i) {
    CHECK(got[i] == effective_resistance(net, vs.front(), targets[i]));
  }
}

TEST_CASE("resistance sums") {
  const auto m = resistance_matrix(cycle(6));
  // Distances on C6 around any vertex: 5/6, 4/3, 3/2, 4/3, 5/6.
  for (const auto& s : resistance_sums(m)) CHECK(s == Rational(35, 6));
  CHECK(resistance_sum(cycle(6), 0) == Rational(35, 6));
}

TEST_CASE("error cases") {
  ResistanceNetwork net = path(3);
  CHECK_THROWS_AS(effective_resistance(net, 0, 0), InvalidParameter);
  CHECK_THROWS_AS(effective_resistance(net, 0, 9), InvalidParameter);
  net.add_vertex(9);
  CHECK_THROWS_AS(effective_resistance(net, 0, 9), ConnectivityError);
  CHECK_THROWS_AS(resistance_matrix(net), ConnectivityError);
}
