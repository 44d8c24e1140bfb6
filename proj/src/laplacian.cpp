#include "phenylene/laplacian.hpp"

#include <algorithm>
#include <string>

#include "phenylene/errors.hpp"

namespace phenylene {

namespace {

void require_connected(const ResistanceNetwork& net) {
  if (!net.is_connected()) throw ConnectivityError("network is disconnected");
}

}  // namespace

RationalMatrix conductance_laplacian(const ResistanceNetwork& net) {
  const std::size_t n = net.vertex_count();
  RationalMatrix lap(n, n);
  for (const Edge& e : net.edges()) {
    const auto i = net.index_of(e.u);
    const auto j = net.index_of(e.v);
    const Rational c = e.resistance.reciprocal();
    lap(i, i) += c;
    lap(j, j) += c;
    lap(i, j) -= c;
    lap(j, i) -= c;
  }
  return lap;
}

const Rational& ResistanceMatrix::at(VertexId u, VertexId v) const {
  auto pos = [this](VertexId x) {
    auto it = std::lower_bound(order.begin(), order.end(), x);
    if (it == order.end() || *it != x) throw InvalidParameter("no vertex " + std::to_string(x));
    return static_cast<std::size_t>(it - order.begin());
  };
  return r(pos(u), pos(v));
}

Rational effective_resistance(const ResistanceNetwork& net, VertexId u, VertexId v) {
  if (u == v) throw InvalidParameter("effective resistance needs two distinct vertices");
  const auto iu = net.index_of(u);
  const auto iv = net.index_of(v);
  require_connected(net);

  const RationalMatrix lap = conductance_laplacian(net);
  const std::size_t n = lap.rows();
  RationalMatrix grounded(n - 1, n - 1);
  auto shrink = [iv](std::size_t i) { return i < iv ? i : i - 1; };
  for (std::size_t i = 0; i < n; ++i) {
    if (i == iv) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == iv) continue;
      grounded(shrink(i), shrink(j)) = lap(i, j);
    }
  }
  std::vector<Rational> rhs(n - 1);
  rhs[shrink(iu)] = Rational(1);
  const auto phi = solve(std::move(grounded), std::move(rhs));
  return phi[shrink(iu)];
}

std::vector<Rational> effective_resistances(const ResistanceNetwork& net, VertexId source,
                                            const std::vector<VertexId>& targets) {
  const auto is = net.index_of(source);
  for (VertexId t : targets) {
    if (t == source) throw InvalidParameter("effective resistance needs two distinct vertices");
    net.index_of(t);
  }
  require_connected(net);

  // Grounding the source makes r(source, t) the diagonal entry t of the
  // inverse grounded Laplacian.
  const RationalMatrix lap = conductance_laplacian(net);
  const std::size_t n = lap.rows();
  auto shrink = [is](std::size_t i) { return i < is ? i : i - 1; };
  RationalMatrix grounded(n - 1, n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == is) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != is) grounded(shrink(i), shrink(j)) = lap(i, j);
    }
  }
  RationalMatrix rhs(n - 1, targets.size());
  for (std::size_t c = 0; c < targets.size(); ++c) rhs(shrink(net.index_of(targets[c])), c) = Rational(1);
  const RationalMatrix phi = solve(grounded, rhs);
  std::vector<Rational> out;
  out.reserve(targets.size());
  for (std::size_t c = 0; c < targets.size(); ++c) out.push_back(phi(shrink(net.index_of(targets[c])), c));
  return out;
}

ResistanceMatrix resistance_matrix(const ResistanceNetwork& net) {
  require_connected(net);
  const std::size_t n = net.vertex_count();
  ResistanceMatrix out{net.vertices(), RationalMatrix(n, n)};
  if (n <= 1) return out;

  RationalMatrix shifted = conductance_laplacian(net);
  const Rational j(1, static_cast<long>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) shifted(i, k) += j;
  }
  const RationalMatrix m = inverse(shifted);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      Rational r = m(i, i) + m(k, k) - Rational(2) * m(i, k);
      out.r(k, i) = r;
      out.r(i, k) = std::move(r);
    }
  }
  return out;
}

std::vector<Rational> resistance_sums(const ResistanceMatrix& m) {
  std::vector<Rational> sums(m.order.size());
  for (std::size_t i = 0; i < m.order.size(); ++i) {
    for (std::size_t k = 0; k < m.order.size(); ++k) sums[i] += m.r(i, k);
  }
  return sums;
}

Rational resistance_sum(const ResistanceNetwork& net, VertexId x) {
  const auto m = resistance_matrix(net);
  return resistance_sums(m)[net.index_of(x)];
}

Rational kirchhoff_index(const ResistanceMatrix& m) {
  Rational total;
  for (std::size_t i = 0; i < m.order.size(); ++i) {
    for (std::size_t k = i + 1; k < m.order.size(); ++k) total += m.r(i, k);
  }
  return total;
}

Rational kirchhoff_index(const ResistanceNetwork& net) {
  return kirchhoff_index(resistance_matrix(net));
}

}  // namespace phenylene
