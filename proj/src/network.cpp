#include "phenylene/network.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "phenylene/errors.hpp"

namespace phenylene {

void ResistanceNetwork::add_vertex(VertexId v) {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) vertices_.insert(it, v);
  next_id_ = std::max(next_id_, v + 1);
}

VertexId ResistanceNetwork::add_fresh_vertex() {
  const VertexId v = next_id_;
  add_vertex(v);
  return v;
}

std::size_t ResistanceNetwork::add_edge(VertexId u, VertexId v, Rational resistance) {
  if (u == v) throw InvalidParameter("self-loop at vertex " + std::to_string(u));
  if (resistance.sign() <= 0) {
    throw InvalidParameter("nonpositive resistance " + resistance.to_string() + " on edge " +
                           std::to_string(u) + "-" + std::to_string(v));
  }
  add_vertex(u);
  add_vertex(v);
  edges_.push_back(Edge{u, v, std::move(resistance)});
  return edges_.size() - 1;
}

void ResistanceNetwork::remove_edge_at(std::size_t index) {
  if (index >= edges_.size()) throw InvalidParameter("edge index out of range");
  edges_.erase(edges_.begin() + static_cast<std::ptrdiff_t>(index));
}

std::size_t ResistanceNetwork::remove_edges_between(VertexId u, VertexId v) {
  const auto before = edges_.size();
  std::erase_if(edges_, [&](const Edge& e) {
    return (e.u == u && e.v == v) || (e.u == v && e.v == u);
  });
  return before - edges_.size();
}

void ResistanceNetwork::remove_vertex(VertexId v) {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) {
    throw InvalidParameter("no vertex " + std::to_string(v));
  }
  vertices_.erase(it);
  std::erase_if(edges_, [v](const Edge& e) { return e.u == v || e.v == v; });
}

void ResistanceNetwork::set_resistance(std::size_t index, Rational resistance) {
  if (index >= edges_.size()) throw InvalidParameter("edge index out of range");
  if (resistance.sign() <= 0) {
    throw InvalidParameter("nonpositive resistance " + resistance.to_string());
  }
  edges_[index].resistance = std::move(resistance);
}

bool ResistanceNetwork::has_vertex(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::size_t ResistanceNetwork::index_of(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) {
    throw InvalidParameter("no vertex " + std::to_string(v));
  }
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t ResistanceNetwork::degree(VertexId v) const {
  return static_cast<std::size_t>(std::count_if(
      edges_.begin(), edges_.end(), [v](const Edge& e) { return e.u == v || e.v == v; }));
}

std::vector<std::size_t> ResistanceNetwork::incident_edges(VertexId v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].u == v || edges_[i].v == v) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> ResistanceNetwork::edges_between(VertexId u, VertexId v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) out.push_back(i);
  }
  return out;
}

std::vector<VertexId> ResistanceNetwork::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  for (const Edge& e : edges_) {
    if (e.u == v) out.push_back(e.v);
    else if (e.v == v) out.push_back(e.u);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool ResistanceNetwork::is_connected() const {
  if (vertices_.size() <= 1) return true;
  std::vector<std::size_t> parent(vertices_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = vertices_.size();
  for (const Edge& e : edges_) {
    const auto a = find(index_of(e.u));
    const auto b = find(index_of(e.v));
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

bool operator==(const ResistanceNetwork& lhs, const ResistanceNetwork& rhs) {
  if (lhs.vertices_ != rhs.vertices_ || lhs.edges_.size() != rhs.edges_.size()) return false;
  auto normalized = [](const std::vector<Edge>& edges) {
    std::vector<std::tuple<VertexId, VertexId, const Rational*>> out;
    out.reserve(edges.size());
    for (const Edge& e : edges) {
      out.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v), &e.resistance);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
      if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) < std::get<1>(b);
      return *std::get<2>(a) < *std::get<2>(b);
    });
    return out;
  };
  const auto a = normalized(lhs.edges_);
  const auto b = normalized(rhs.edges_);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::get<0>(a[i]) != std::get<0>(b[i]) || std::get<1>(a[i]) != std::get<1>(b[i]) ||
        *std::get<2>(a[i]) != *std::get<2>(b[i])) {
      return false;
    }
  }
  return true;
}

}  // namespace phenylene
