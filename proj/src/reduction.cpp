#include "phenylene/reduction.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "phenylene/errors.hpp"

namespace phenylene {

namespace {

std::string vname(VertexId v) { return std::to_string(v); }

void record(ReductionTrace* trace, ReductionStep step) {
  if (trace != nullptr) trace->steps.push_back(std::move(step));
}

// The resistance of the single edge joining u and v.
Rational single_edge(const ResistanceNetwork& net, VertexId u, VertexId v) {
  const auto idx = net.edges_between(u, v);
  if (idx.empty()) {
    throw NotReducible("not a triangle: no edge " + vname(u) + "-" + vname(v));
  }
  if (idx.size() > 1) {
    throw NotReducible("triangle side " + vname(u) + "-" + vname(v) +
                       " has parallel edges; reduce them first");
  }
  return net.edges()[idx.front()].resistance;
}

}  // namespace

std::string_view to_string(StepKind kind) {
  switch (kind) {
    case StepKind::series: return "series";
    case StepKind::parallel: return "parallel";
    case StepKind::delta_y: return "delta-y";
    case StepKind::star_mesh: return "star-mesh";
  }
  return "unknown";
}

ResistanceNetwork series_reduce(const ResistanceNetwork& net, VertexId y, ReductionTrace* trace) {
  if (!net.has_vertex(y)) throw NotReducible("no vertex " + vname(y));
  const auto incident = net.incident_edges(y);
  if (incident.size() != 2) {
    throw NotReducible("vertex " + vname(y) + " has degree " + std::to_string(incident.size()) +
                       ", series rule needs 2");
  }
  const Edge& e1 = net.edges()[incident[0]];
  const Edge& e2 = net.edges()[incident[1]];
  const VertexId x = e1.u == y ? e1.v : e1.u;
  const VertexId z = e2.u == y ? e2.v : e2.u;
  if (x == z) {
    throw NotReducible("vertex " + vname(y) + " has two parallel edges to " + vname(x));
  }
  Rational r1 = e1.resistance;
  Rational r2 = e2.resistance;

  ResistanceNetwork out = net;
  out.remove_vertex(y);
  Rational sum = r1 + r2;
  out.add_edge(x, z, sum);
  record(trace, {StepKind::series, {y}, {std::move(r1), std::move(r2)}, {std::move(sum)}, {}});
  return out;
}

ResistanceNetwork parallel_reduce(const ResistanceNetwork& net, VertexId x, VertexId y,
                                  ReductionTrace* trace) {
  const auto idx = net.edges_between(x, y);
  if (idx.size() < 2) {
    throw NotReducible("vertices " + vname(x) + ", " + vname(y) + " share " +
                       std::to_string(idx.size()) + " edge(s), parallel rule needs 2+");
  }
  std::vector<Rational> before;
  Rational conductance;
  for (auto i : idx) {
    before.push_back(net.edges()[i].resistance);
    conductance += before.back().reciprocal();
  }
  ResistanceNetwork out = net;
  out.remove_edges_between(x, y);
  Rational merged = conductance.reciprocal();
  out.add_edge(x, y, merged);
  record(trace, {StepKind::parallel, {x, y}, std::move(before), {std::move(merged)}, {}});
  return out;
}

ResistanceNetwork delta_y(const ResistanceNetwork& net, VertexId x, VertexId y, VertexId z,
                          ReductionTrace* trace) {
  if (x == y || y == z || x == z) throw NotReducible("delta-y needs three distinct vertices");
  const Rational rc = single_edge(net, x, y);
  const Rational ra = single_edge(net, y, z);
  const Rational rb = single_edge(net, x, z);
  const Rational total = ra + rb + rc;

  Rational rx = rb * rc / total;
  Rational ry = ra * rc / total;
  Rational rz = ra * rb / total;

  ResistanceNetwork out = net;
  out.remove_edges_between(x, y);
  out.remove_edges_between(y, z);
  out.remove_edges_between(x, z);
  const VertexId hub = out.add_fresh_vertex();
  out.add_edge(hub, x, rx);
  out.add_edge(hub, y, ry);
  out.add_edge(hub, z, rz);
  record(trace, {StepKind::delta_y,
                 {x, y, z},
                 {rc, ra, rb},
                 {std::move(rx), std::move(ry), std::move(rz)},
                 hub});
  return out;
}

ResistanceNetwork star_mesh_eliminate(const ResistanceNetwork& net, VertexId v,
                                      ReductionTrace* trace) {
  if (!net.has_vertex(v)) throw NotReducible("no vertex " + vname(v));
  std::map<VertexId, Rational> conductance;
  std::vector<Rational> before;
  for (auto i : net.incident_edges(v)) {
    const Edge& e = net.edges()[i];
    before.push_back(e.resistance);
    conductance[e.u == v ? e.v : e.u] += e.resistance.reciprocal();
  }
  Rational total;
  for (const auto& [_, c] : conductance) total += c;

  ResistanceNetwork out = net;
  out.remove_vertex(v);
  std::vector<Rational> after;
  for (auto p = conductance.begin(); p != conductance.end(); ++p) {
    for (auto q = std::next(p); q != conductance.end(); ++q) {
      Rational c = p->second * q->second / total;
      for (auto i : out.edges_between(p->first, q->first)) c += out.edges()[i].resistance.reciprocal();
      out.remove_edges_between(p->first, q->first);
      Rational r = c.reciprocal();
      out.add_edge(p->first, q->first, r);
      after.push_back(std::move(r));
    }
  }
  record(trace, {StepKind::star_mesh, {v}, std::move(before), std::move(after), {}});
  return out;
}

ResistanceNetwork apply_step(const ResistanceNetwork& net, const ReductionStep& step) {
  const auto& vs = step.vertices;
  auto need = [&](std::size_t count) {
    if (vs.size() != count) {
      throw InvalidParameter(std::string(to_string(step.kind)) + " step expects " +
                             std::to_string(count) + " vertices");
    }
  };
  switch (step.kind) {
    case StepKind::series: need(1); return series_reduce(net, vs[0]);
    case StepKind::parallel: need(2); return parallel_reduce(net, vs[0], vs[1]);
    case StepKind::delta_y: need(3); return delta_y(net, vs[0], vs[1], vs[2]);
    case StepKind::star_mesh: need(1); return star_mesh_eliminate(net, vs[0]);
  }
  throw InvalidParameter("unknown step kind");
}

ResistanceNetwork replay(const ResistanceNetwork& initial, const ReductionTrace& trace) {
  ResistanceNetwork net = initial;
  for (const auto& step : trace.steps) net = apply_step(net, step);
  return net;
}

}  // namespace phenylene
