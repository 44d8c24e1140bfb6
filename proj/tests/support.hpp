#pragma once

// Test-side helpers. The resistance oracle here deliberately avoids the
// library's Laplacian and elimination code: it builds its own dense system
// and eliminates in natural order.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "phenylene/network.hpp"
#include "phenylene/rational.hpp"
#include "phenylene/reduction.hpp"

namespace testing_support {

using phenylene::Rational;
using phenylene::ResistanceNetwork;
using phenylene::VertexId;

// All pairwise effective resistances from the Moore-Penrose route
// r(u,v) = X_uu + X_vv - 2 X_uv with X = (L + 1/N)^-1.
inline std::map<std::pair<VertexId, VertexId>, Rational> oracle_resistances(
    const ResistanceNetwork& net) {
  const auto& vs = net.vertices();
  const std::size_t n = vs.size();
  std::map<VertexId, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos[vs[i]] = i;

  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(1, static_cast<long>(n));
    m[i][n + i] = Rational(1);
  }
  for (const auto& e : net.edges()) {
    const Rational c = Rational(1) / e.resistance;
    const auto a = pos[e.u];
    const auto b = pos[e.v];
    m[a][a] += c;
    m[b][b] += c;
    m[a][b] -= c;
    m[b][a] -= c;
  }
  // L + J/N is positive definite, so every diagonal pivot is nonzero.
  for (std::size_t c = 0; c < n; ++c) {
    const Rational inv = Rational(1) / m[c][c];
    for (auto& x : m[c]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      const Rational f = m[r][c];
      for (std::size_t j = 0; j < 2 * n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  std::map<std::pair<VertexId, VertexId>, Rational> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      out[{vs[i], vs[j]}] = m[i][n + i] + m[j][n + j] - Rational(2) * m[i][n + j];
    }
  }
  return out;
}

inline Rational oracle_kf(const ResistanceNetwork& net) {
  Rational total;
  for (const auto& [pair, r] : oracle_resistances(net)) total += r;
  return total;
}

// Every reduction that applies to `net`, as steps ready for apply_step.
inline std::vector<phenylene::ReductionStep> applicable_steps(const ResistanceNetwork& net) {
  using phenylene::StepKind;
  std::vector<phenylene::ReductionStep> steps;
  const auto& vs = net.vertices();
  auto single = [&net](VertexId a, VertexId b) { return net.edges_between(a, b).size() == 1; };
  for (VertexId v : vs) {
    const auto nb = net.neighbors(v);
    if (net.degree(v) == 2 && nb.size() == 2) steps.push_back({StepKind::series, {v}, {}, {}, {}});
    if (net.vertex_count() > 2 && !nb.empty()) {
      steps.push_back({StepKind::star_mesh, {v}, {}, {}, {}});
    }
  }
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (net.edges_between(vs[i], vs[j]).size() >= 2) {
        steps.push_back({StepKind::parallel, {vs[i], vs[j]}, {}, {}, {}});
      }
      if (!single(vs[i], vs[j])) continue;
      for (std::size_t k = j + 1; k < vs.size(); ++k) {
        if (single(vs[i], vs[k]) && single(vs[j], vs[k])) {
          steps.push_back({StepKind::delta_y, {vs[i], vs[j], vs[k]}, {}, {}, {}});
        }
      }
    }
  }
  return steps;
}

// True when every pair of vertices of `after` that also lives in `before`
// keeps its effective resistance.
inline bool preserves_resistances(const ResistanceNetwork& before,
                                  const ResistanceNetwork& after) {
  const auto want = oracle_resistances(before);
  for (const auto& [pair, r] : oracle_resistances(after)) {
    auto it = want.find(pair);
    if (it != want.end() && it->second != r) return false;
  }
  return true;
}

inline ResistanceNetwork path(int vertices, VertexId first = 0) {
  ResistanceNetwork net;
  net.add_vertex(first);
  for (int i = 1; i < vertices; ++i) {
    net.add_edge(first + static_cast<VertexId>(i - 1), first + static_cast<VertexId>(i),
                 Rational(1));
  }
  return net;
}

inline ResistanceNetwork cycle(int vertices) {
  ResistanceNetwork net = path(vertices);
  net.add_edge(static_cast<VertexId>(vertices - 1), 0, Rational(1));
  return net;
}

}  // namespace testing_support
