#pragma once

#include <cstdint>
#include <random>

#include "phenylene/network.hpp"
#include "phenylene/st_isomer.hpp"

namespace phenylene {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20200501;

/// p/q with p, q uniform in [1, 9].
Rational random_resistance(Rng& rng);

struct RandomGraphOptions {
  int min_vertices = 2;
  int max_vertices = 12;
  double edge_probability = 0.4;
  bool weighted = true;
  double parallel_probability = 0.0;  // chance of doubling an accepted edge
  VertexId first_id = 0;
};

/// Erdos-Renyi graph, resampled until connected.
ResistanceNetwork random_connected_network(Rng& rng, const RandomGraphOptions& options);

/// Random connected A and B with at most `max_vertices` each and random
/// distinct marked vertices. B's ids follow A's.
STPair random_st_pair(Rng& rng, int max_vertices = 8, bool weighted = false);

}  // namespace phenylene
