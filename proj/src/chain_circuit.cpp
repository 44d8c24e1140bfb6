#include "phenylene/chain_circuit.hpp"

#include <algorithm>
#include <string>

#include "phenylene/errors.hpp"

namespace phenylene {

namespace {

bool contains(const std::vector<VertexId>& vs, VertexId v) {
  return std::find(vs.begin(), vs.end(), v) != vs.end();
}

// Finds an unprotected cycle vertex that the series rule applies to.
std::optional<VertexId> series_candidate(const ResistanceNetwork& net,
                                         const std::vector<VertexId>& cycle,
                                         const std::vector<VertexId>& keep) {
  for (VertexId v : cycle) {
    if (contains(keep, v)) continue;
    if (net.degree(v) != 2) continue;
    const auto nbrs = net.neighbors(v);
    if (nbrs.size() == 2 && contains(cycle, nbrs[0]) && contains(cycle, nbrs[1])) return v;
  }
  return std::nullopt;
}

Rational leg(const ResistanceNetwork& net, VertexId u, VertexId v) {
  const auto idx = net.edges_between(u, v);
  if (idx.size() != 1) throw LabelingError("reduced circuit lacks a single leg");
  return net.edges()[idx.front()].resistance;
}

}  // namespace

ChainReduction simplify_chain_circuit(const TerminalChain& chain, SourceCorner source) {
  if (chain.squares.empty() || chain.squares.size() != chain.hexagons.size()) {
    throw InvalidParameter("terminal chain needs n squares and n hexagons");
  }
  const SquareCorners& last = chain.squares.back();
  {
    const auto idx = chain.network.edges_between(last.b, last.k);
    if (idx.size() != 1 || chain.network.edges()[idx.front()].resistance != 1) {
      throw InvalidParameter("edge b_n k_n must be a single edge of resistance 1");
    }
  }

  const SquareCorners& first = chain.squares.front();
  ChainReduction out{chain.network, {}, source == SourceCorner::a ? first.a : first.l, {}, {}, {}};

  // Cycles to collapse, left to right.
  std::vector<std::vector<VertexId>> rings;
  for (std::size_t i = 0; i < chain.squares.size(); ++i) {
    const auto& s = chain.squares[i];
    rings.push_back({s.a, s.b, s.k, s.l});
    if (i + 1 < chain.squares.size()) {
      rings.emplace_back(chain.hexagons[i].begin(), chain.hexagons[i].end());
    }
  }

  VertexId hub = out.source;
  for (const auto& ring : rings) {
    std::vector<VertexId> cycle = ring;
    if (!contains(cycle, hub)) cycle.insert(cycle.begin(), hub);
    const std::vector<VertexId> keep{out.source, chain.x, chain.y, hub};
    while (cycle.size() > 3) {
      const auto v = series_candidate(out.network, cycle, keep);
      if (!v) throw LabelingError("cycle could not be series-reduced to a triangle");
      out.network = series_reduce(out.network, *v, &out.trace);
      std::erase(cycle, *v);
    }
    std::vector<VertexId> corners;
    for (VertexId v : cycle) {
      if (v != hub) corners.push_back(v);
    }
    if (corners.size() != 2) throw LabelingError("hub missing from reduced cycle");
    out.network = delta_y(out.network, hub, corners[0], corners[1], &out.trace);
    hub = *out.trace.steps.back().created;
    out.hubs.push_back(hub);
  }

  out.r1 = leg(out.network, hub, last.b);
  out.r2 = leg(out.network, hub, last.k);
  return out;
}

}  // namespace phenylene
