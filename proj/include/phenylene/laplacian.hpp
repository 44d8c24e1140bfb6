#pragma once

#include <vector>

#include "phenylene/linear_algebra.hpp"
#include "phenylene/network.hpp"

namespace phenylene {

/// Weighted conductance Laplacian, rows/columns in network.vertices() order.
RationalMatrix conductance_laplacian(const ResistanceNetwork& net);

/// Pairwise effective resistances, indexed by position in `order`.
struct ResistanceMatrix {
  std::vector<VertexId> order;
  RationalMatrix r;

  const Rational& at(VertexId u, VertexId v) const;
};

/// r(u, v) from the Laplacian grounded at v: solve L'phi = e_u, return phi(u).
Rational effective_resistance(const ResistanceNetwork& net, VertexId u, VertexId v);
/// r(source, t) for each t in `targets`, from a single grounded elimination.
std::vector<Rational> effective_resistances(const ResistanceNetwork& net, VertexId source,
                                            const std::vector<VertexId>& targets);

/// All pairs at once from M = (L + J/N)^{-1}: r(u,v) = M_uu + M_vv - 2 M_uv.
ResistanceMatrix resistance_matrix(const ResistanceNetwork& net);

/// Sum of r(x, y) over every other vertex y.
Rational resistance_sum(const ResistanceNetwork& net, VertexId x);
std::vector<Rational> resistance_sums(const ResistanceMatrix& m);

/// Sum of r(u, v) over unordered pairs. A single vertex has index 0.
Rational kirchhoff_index(const ResistanceNetwork& net);
Rational kirchhoff_index(const ResistanceMatrix& m);

}  // namespace phenylene
