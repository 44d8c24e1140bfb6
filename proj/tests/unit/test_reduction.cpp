#include <doctest.h>

#include "phenylene/errors.hpp"
#include "phenylene/laplacian.hpp"
#include "phenylene/random_graphs.hpp"
#include "phenylene/reduction.hpp"
#include "support.hpp"

using namespace phenylene;
using testing_support::path;
using testing_support::preserves_resistances;

TEST_CASE("series") {
  ResistanceNetwork net;
  net.add_edge(0, 1, Rational(1, 2));
  net.add_edge(1, 2, Rational(3));
  ReductionTrace trace;
  const auto out = series_reduce(net, 1, &trace);
  CHECK_FALSE(out.has_vertex(1));
  REQUIRE(out.edge_count() == 1);
  CHECK(out.edges()[0].resistance == Rational(7, 2));
  REQUIRE(trace.steps.size() == 1);
  CHECK(trace.steps[0].kind == StepKind::series);
  CHECK(trace.steps[0].after == std::vector<Rational>{Rational(7, 2)});
  CHECK_THROWS_AS(series_reduce(net, 0), NotReducible);
}

TEST_CASE("parallel") {
  ResistanceNetwork net;
  net.add_edge(0, 1, Rational(2));
  net.add_edge(1, 0, Rational(3));
  net.add_edge(0, 1, Rational(6));
  const auto out = parallel_reduce(net, 0, 1);
  REQUIRE(out.edge_count() == 1);
  CHECK(out.edges()[0].resistance == Rational(1));
  CHECK_THROWS_AS(parallel_reduce(out, 0, 1), NotReducible);
}

TEST_CASE("delta-y legs") {
  ResistanceNetwork net;
  net.add_edge(0, 1, Rational(1));  // Rc
  net.add_edge(1, 2, Rational(2));  // Ra
  net.add_edge(0, 2, Rational(3));  // Rb
  ReductionTrace trace;
  const auto out = delta_y(net, 0, 1, 2, &trace);
  REQUIRE(trace.steps.size() == 1);
  REQUIRE(trace.steps[0].created.has_value());
  const VertexId hub = *trace.steps[0].created;
  CHECK(out.degree(hub) == 3);
  auto leg = [&](VertexId v) { return out.edges()[out.edges_between(v, hub).at(0)].resistance; };
  CHECK(leg(0) == Rational(3, 6));
  CHECK(leg(1) == Rational(2, 6));
  CHECK(leg(2) == Rational(6, 6));
  CHECK(preserves_resistances(net, out));
}

TEST_CASE("star-mesh on a star is the inverse of delta-y") {
  ResistanceNetwork tri;
  tri.add_edge(0, 1, Rational(5, 2));
  tri.add_edge(1, 2, Rational(7));
  tri.add_edge(0, 2, Rational(1, 3));
  ReductionTrace trace;
  const auto star = delta_y(tri, 0, 1, 2, &trace);
  const auto back = star_mesh_eliminate(star, *trace.steps[0].created);
  CHECK(back == tri);
}

TEST_CASE("star-mesh merges into existing edges") {
  ResistanceNetwork net;
  net.add_edge(0, 1, Rational(1));
  net.add_edge(1, 2, Rational(1));
  net.add_edge(0, 2, Rational(1));
  const auto out = star_mesh_eliminate(net, 1);
  REQUIRE(out.edge_count() == 1);
  CHECK(out.edges()[0].resistance == Rational(2, 3));
}

TEST_CASE("every applicable step on random graphs preserves surviving resistances") {
  Rng rng(99);
  RandomGraphOptions opt;
  opt.max_vertices = 8;
  opt.parallel_probability = 0.25;
  for (int t = 0; t < 30; ++t) {
    const auto net = random_connected_network(rng, opt);
    for (const auto& step : testing_support::applicable_steps(net)) {
      const auto out = apply_step(net, step);
      CHECK(out.is_connected());
      CHECK(preserves_resistances(net, out));
    }
  }
}

TEST_CASE("replay reproduces a recorded trace") {
  ResistanceNetwork net = path(5);
  net.add_edge(0, 2, Rational(2));
  ReductionTrace trace;
  auto cur = series_reduce(net, 1, &trace);
  cur = parallel_reduce(cur, 0, 2, &trace);
  cur = star_mesh_eliminate(cur, 3, &trace);
  CHECK(replay(net, trace) == cur);
  CHECK(effective_resistance(cur, 0, 4) == effective_resistance(net, 0, 4));
}
