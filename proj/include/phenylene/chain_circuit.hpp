#pragma once

#include <vector>

#include "phenylene/chain.hpp"
#include "phenylene/reduction.hpp"

namespace phenylene {

/// Which corner of the first square is kept as the source terminal.
enum class SourceCorner { a, l };

struct ChainReduction {
  ResistanceNetwork network;  // final two-terminal form
  ReductionTrace trace;
  VertexId source;
  std::vector<VertexId> hubs;  // z_1 .. z_{2n-1}, in creation order
  Rational r1;                 // leg z_{2n-1} - b_n
  Rational r2;                 // leg z_{2n-1} - k_n
};

/// Collapses a terminal chain cycle by cycle from the left.
///
/// Each cycle (S_1, C_1, S_2, ..., C_{n-1}, S_n) is series-reduced down to a
/// triangle on the current hub and the two corners it shares with the next
/// cycle, and that triangle is replaced by a star. The source corner, x and y
/// are never eliminated, so r(source, x) and r(source, y) are unchanged by
/// every step. Requires resistance 1 on b_n k_n.
ChainReduction simplify_chain_circuit(const TerminalChain& chain,
                                      SourceCorner source = SourceCorner::a);

}  // namespace phenylene
