#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "phenylene/rational.hpp"

namespace phenylene {

using VertexId = std::uint32_t;

struct Edge {
  VertexId u;
  VertexId v;
  Rational resistance;
};

/// Undirected multigraph of resistors.
///
/// Parallel edges are kept as separate entries; self-loops are rejected. Vertex
/// identifiers are stable: removing a vertex never renumbers the others, and
/// fresh vertices always receive an id larger than any id seen before, so a
/// sequence of operations replays to an identical network.
class ResistanceNetwork {
 public:
  ResistanceNetwork() = default;

  void add_vertex(VertexId v);
  VertexId add_fresh_vertex();
  /// Adds u and v if missing. Throws InvalidParameter on u == v or resistance <= 0.
  std::size_t add_edge(VertexId u, VertexId v, Rational resistance);

  void remove_edge_at(std::size_t index);
  std::size_t remove_edges_between(VertexId u, VertexId v);
  void remove_vertex(VertexId v);
  void set_resistance(std::size_t index, Rational resistance);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  VertexId next_vertex_id() const { return next_id_; }

  bool has_vertex(VertexId v) const;
  /// Position of v in vertices(); throws InvalidParameter if absent.
  std::size_t index_of(VertexId v) const;
  /// Number of incident edge entries (parallel edges counted separately).
  std::size_t degree(VertexId v) const;
  std::vector<std::size_t> incident_edges(VertexId v) const;
  std::vector<std::size_t> edges_between(VertexId u, VertexId v) const;
  /// Distinct neighbours in increasing id order.
  std::vector<VertexId> neighbors(VertexId v) const;
  bool is_connected() const;

  /// Same vertex set and same edge multiset, irrespective of edge order.
  friend bool operator==(const ResistanceNetwork& lhs, const ResistanceNetwork& rhs);

 private:
  std::vector<VertexId> vertices_;  // sorted
  std::vector<Edge> edges_;
  VertexId next_id_ = 0;
};

}  // namespace phenylene
