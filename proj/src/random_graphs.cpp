#include "phenylene/random_graphs.hpp"

#include "phenylene/errors.hpp"

namespace phenylene {

Rational random_resistance(Rng& rng) {
  std::uniform_int_distribution<long> digit(1, 9);
  const long p = digit(rng);
  const long q = digit(rng);
  return Rational(p, q);
}

ResistanceNetwork random_connected_network(Rng& rng, const RandomGraphOptions& options) {
  if (options.min_vertices < 1 || options.max_vertices < options.min_vertices) {
    throw InvalidParameter("bad vertex range for random graph");
  }
  std::uniform_int_distribution<int> size(options.min_vertices, options.max_vertices);
  std::bernoulli_distribution edge(options.edge_probability);
  std::bernoulli_distribution twin(options.parallel_probability);
  const int n = size(rng);
  while (true) {
    ResistanceNetwork net;
    for (int i = 0; i < n; ++i) net.add_vertex(options.first_id + static_cast<VertexId>(i));
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (!edge(rng)) continue;
        const VertexId u = options.first_id + static_cast<VertexId>(i);
        const VertexId v = options.first_id + static_cast<VertexId>(j);
        net.add_edge(u, v, options.weighted ? random_resistance(rng) : Rational(1));
        if (twin(rng)) net.add_edge(u, v, options.weighted ? random_resistance(rng) : Rational(1));
      }
    }
    if (net.is_connected()) return net;
  }
}

STPair random_st_pair(Rng& rng, int max_vertices, bool weighted) {
  RandomGraphOptions opts;
  opts.min_vertices = 2;
  opts.max_vertices = max_vertices;
  opts.edge_probability = 0.45;
  opts.weighted = weighted;
  auto a_side = random_connected_network(rng, opts);
  opts.first_id = a_side.next_vertex_id();
  auto b_side = random_connected_network(rng, opts);

  auto pick_two = [&rng](const ResistanceNetwork& net) {
    const auto& vs = net.vertices();
    std::uniform_int_distribution<std::size_t> pick(0, vs.size() - 1);
    const std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    while (j == i) j = pick(rng);
    return std::pair{vs[i], vs[j]};
  };
  const auto [a, l] = pick_two(a_side);
  const auto [b, k] = pick_two(b_side);
  return STPair{std::move(a_side), a, l, std::move(b_side), b, k};
}

}  // namespace phenylene
