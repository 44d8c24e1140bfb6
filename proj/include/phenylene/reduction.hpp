#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "phenylene/network.hpp"

namespace phenylene {

enum class StepKind { series, parallel, delta_y, star_mesh };

std::string_view to_string(StepKind kind);

/// One applied reduction.
///
/// `vertices` are the arguments the step was applied with (y for series; x, y
/// for parallel; x, y, z for delta-y; v for star-mesh). `before` lists the
/// resistances removed and `after` the resistances added, in the order the
/// step produced them.
struct ReductionStep {
  StepKind kind;
  std::vector<VertexId> vertices;
  std::vector<Rational> before;
  std::vector<Rational> after;
  std::optional<VertexId> created;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
};

/// Removes y (exactly two incident edges to two distinct neighbours x, z) and
/// joins x-z with R1 + R2. Throws NotReducible otherwise.
ResistanceNetwork series_reduce(const ResistanceNetwork& net, VertexId y,
                                ReductionTrace* trace = nullptr);

/// Replaces every x-y edge (at least two required) by a single edge of
/// resistance (sum of 1/R)^-1.
ResistanceNetwork parallel_reduce(const ResistanceNetwork& net, VertexId x, VertexId y,
                                  ReductionTrace* trace = nullptr);

/// Replaces the triangle x, y, z by a star around a fresh vertex. With
/// Ra = R(y,z), Rb = R(x,z), Rc = R(x,y) the legs are
///   R(x) = Rb Rc / S,  R(y) = Ra Rc / S,  R(z) = Ra Rb / S,  S = Ra + Rb + Rc.
/// Each side must be a single edge.
ResistanceNetwork delta_y(const ResistanceNetwork& net, VertexId x, VertexId y, VertexId z,
                          ReductionTrace* trace = nullptr);

/// Eliminates v: every neighbour pair (p, q) gains an edge of conductance
/// c_p c_q / sum(c), then parallel edges on those pairs are merged.
ResistanceNetwork star_mesh_eliminate(const ResistanceNetwork& net, VertexId v,
                                      ReductionTrace* trace = nullptr);

ResistanceNetwork apply_step(const ResistanceNetwork& net, const ReductionStep& step);
ResistanceNetwork replay(const ResistanceNetwork& initial, const ReductionTrace& trace);

}  // namespace phenylene
