#include "phenylene/st_isomer.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "phenylene/errors.hpp"
#include "phenylene/laplacian.hpp"

namespace phenylene {

namespace {

ResistanceNetwork disjoint_union(const ResistanceNetwork& x, const ResistanceNetwork& y) {
  ResistanceNetwork out = x;
  for (VertexId v : y.vertices()) out.add_vertex(v);
  for (const Edge& e : y.edges()) out.add_edge(e.u, e.v, e.resistance);
  return out;
}

// Vertices reachable from `start` without using any edge in `cut`.
std::set<VertexId> component_without(const ResistanceNetwork& net, VertexId start,
                                      const std::vector<std::pair<VertexId, VertexId>>& cut) {
  auto is_cut = [&](const Edge& e) {
    const auto key = edge_key(e.u, e.v);
    return std::find(cut.begin(), cut.end(), key) != cut.end();
  };
  std::set<VertexId> seen{start};
  std::vector<VertexId> stack{start};
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (const Edge& e : net.edges()) {
      if (is_cut(e) || (e.u != v && e.v != v)) continue;
      const VertexId w = e.u == v ? e.v : e.u;
      if (seen.insert(w).second) stack.push_back(w);
    }
  }
  return seen;
}

ResistanceNetwork induced(const ResistanceNetwork& net, const std::set<VertexId>& keep,
                          const std::vector<std::pair<VertexId, VertexId>>& cut) {
  ResistanceNetwork out;
  for (VertexId v : keep) out.add_vertex(v);
  for (const Edge& e : net.edges()) {
    if (!keep.contains(e.u) || !keep.contains(e.v)) continue;
    if (std::find(cut.begin(), cut.end(), edge_key(e.u, e.v)) != cut.end()) continue;
    out.add_edge(e.u, e.v, e.resistance);
  }
  return out;
}

}  // namespace

void validate(const STPair& pair) {
  if (pair.a == pair.l) throw InvalidPair("marked vertices a and l coincide");
  if (pair.b == pair.k) throw InvalidPair("marked vertices b and k coincide");
  if (!pair.a_side.has_vertex(pair.a) || !pair.a_side.has_vertex(pair.l)) {
    throw InvalidPair("a or l is not a vertex of A");
  }
  if (!pair.b_side.has_vertex(pair.b) || !pair.b_side.has_vertex(pair.k)) {
    throw InvalidPair("b or k is not a vertex of B");
  }
  for (VertexId v : pair.a_side.vertices()) {
    if (pair.b_side.has_vertex(v)) {
      throw InvalidPair("components share vertex " + std::to_string(v));
    }
  }
  if (!pair.a_side.is_connected() || !pair.b_side.is_connected()) {
    throw InvalidPair("components must be connected");
  }
}

STIsomers make_st_pair(const STPair& pair) {
  validate(pair);
  STIsomers out{disjoint_union(pair.a_side, pair.b_side), {}};
  out.t = out.s;
  out.s.add_edge(pair.a, pair.b, Rational(1));
  out.s.add_edge(pair.l, pair.k, Rational(1));
  out.t.add_edge(pair.a, pair.k, Rational(1));
  out.t.add_edge(pair.b, pair.l, Rational(1));
  return out;
}

Rational lemma4_delta(const STPair& pair) {
  validate(pair);
  const auto ma = resistance_matrix(pair.a_side);
  const auto mb = resistance_matrix(pair.b_side);
  const auto sums_a = resistance_sums(ma);
  const auto sums_b = resistance_sums(mb);
  const auto& ia = pair.a_side;
  const auto& ib = pair.b_side;
  const Rational num = (sums_a[ia.index_of(pair.l)] - sums_a[ia.index_of(pair.a)]) *
                       (sums_b[ib.index_of(pair.b)] - sums_b[ib.index_of(pair.k)]);
  const Rational den = ma.at(pair.a, pair.l) + mb.at(pair.b, pair.k) + Rational(2);
  return num / den;
}

Lemma4Report verify_lemma4(const STPair& pair) {
  const auto iso = make_st_pair(pair);
  Lemma4Report report{kirchhoff_index(iso.s), kirchhoff_index(iso.t), {}, lemma4_delta(pair), false};
  report.lhs = report.kf_s - report.kf_t;
  report.pass = report.lhs == report.rhs;
  return report;
}

STPair split_at_square(const LabeledChain& chain, int i) {
  if (i < 1 || i > static_cast<int>(chain.squares.size())) {
    throw InvalidParameter("square index " + std::to_string(i) + " out of range");
  }
  const SquareCorners& sq = chain.squares[static_cast<std::size_t>(i - 1)];
  const std::vector<std::pair<VertexId, VertexId>> cut{edge_key(sq.a, sq.b), edge_key(sq.l, sq.k)};
  for (const auto& [u, v] : cut) {
    if (chain.network.edges_between(u, v).size() != 1) {
      throw LabelingError("square " + std::to_string(i) + " lacks edge " + std::to_string(u) +
                          "-" + std::to_string(v));
    }
  }
  const auto left = component_without(chain.network, sq.a, cut);
  const auto right = component_without(chain.network, sq.b, cut);
  if (left.contains(sq.b) || !left.contains(sq.l) || !right.contains(sq.k)) {
    throw LabelingError("square " + std::to_string(i) + " does not separate the chain");
  }
  return STPair{induced(chain.network, left, cut), sq.a, sq.l,
                induced(chain.network, right, cut), sq.b, sq.k};
}

}  // namespace phenylene
