#include "phenylene/io.hpp"

#include <istream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "phenylene/errors.hpp"
#include "io_json.hpp"

namespace phenylene {

using nlohmann::json;

namespace {

VertexId parse_vertex(const std::string& token, std::size_t line) {
  std::size_t used = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || token.empty() || token.front() == '-' || value > UINT32_MAX) {
    throw ParseError("line " + std::to_string(line) + ": bad vertex id '" + token + "'");
  }
  return static_cast<VertexId>(value);
}

std::string codes_to_string(const std::vector<std::uint8_t>& w) {
  std::string s;
  for (auto e : w) s.push_back(static_cast<char>('0' + e));
  return s;
}

}  // namespace

json to_json(const Rational& r) { return r.to_string(); }

json to_json(const ChainCode& c) { return c.to_string(); }

json to_json(const std::vector<ChainCode>& codes) {
  json out = json::array();
  for (const auto& c : codes) out.push_back(c.to_string());
  return out;
}

json edges_json(const ResistanceNetwork& net) {
  json out = json::array();
  for (const Edge& e : net.edges()) out.push_back({e.u, e.v, e.resistance.to_string()});
  return out;
}

ResistanceNetwork parse_edge_list(std::istream& in) {
  ResistanceNetwork net;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream tokens(raw);
    std::string u, v, r, extra;
    if (!(tokens >> u) || u.front() == '#') continue;
    if (!(tokens >> v)) throw ParseError("line " + std::to_string(line) + ": missing second vertex");
    tokens >> r;
    if (tokens >> extra) throw ParseError("line " + std::to_string(line) + ": trailing tokens");
    Rational resistance(1);
    try {
      if (!r.empty()) resistance = Rational::parse(r);
    } catch (const Error& e) {
      throw ParseError("line " + std::to_string(line) + ": " + e.what());
    }
    const VertexId a = parse_vertex(u, line);
    const VertexId b = parse_vertex(v, line);
    try {
      net.add_edge(a, b, std::move(resistance));
    } catch (const InvalidParameter& e) {
      throw ParseError("line " + std::to_string(line) + ": " + e.what());
    }
  }
  return net;
}

ResistanceNetwork parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string to_edge_list(const ResistanceNetwork& net) {
  std::ostringstream os;
  for (const Edge& e : net.edges()) os << e.u << ' ' << e.v << ' ' << e.resistance << '\n';
  return os.str();
}

std::string to_dot(const ResistanceNetwork& net) {
  std::ostringstream os;
  os << "graph network {\n";
  for (VertexId v : net.vertices()) os << "  " << v << ";\n";
  for (const Edge& e : net.edges()) {
    os << "  " << e.u << " -- " << e.v << " [label=\"" << e.resistance << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const LabeledChain& chain) {
  std::map<VertexId, std::vector<std::string>> labels;
  std::map<VertexId, std::vector<std::size_t>> hexes;
  for (std::size_t h = 0; h < chain.hexagons.size(); ++h) {
    for (VertexId v : chain.hexagons[h]) hexes[v].push_back(h + 1);
  }
  for (std::size_t i = 0; i < chain.squares.size(); ++i) {
    const auto& s = chain.squares[i];
    const std::string idx = std::to_string(i + 1);
    labels[s.a].push_back("a" + idx);
    labels[s.b].push_back("b" + idx);
    labels[s.k].push_back("k" + idx);
    labels[s.l].push_back("l" + idx);
  }
  std::ostringstream os;
  os << "graph \"chain " << (chain.code.to_string().empty() ? "n=" + std::to_string(chain.code.n())
                                                            : chain.code.to_string())
     << "\" {\n";
  for (VertexId v : chain.network.vertices()) {
    std::string label = std::to_string(v);
    for (const auto& l : labels[v]) label += " " + l;
    std::string hex;
    for (auto h : hexes[v]) hex += (hex.empty() ? "" : ",") + std::to_string(h);
    os << "  " << v << " [label=\"" << label << "\"";
    if (!hex.empty()) os << ", hexagon=\"" << hex << "\"";
    if (!labels[v].empty()) {
      std::string corner;
      for (const auto& l : labels[v]) corner += (corner.empty() ? "" : ",") + l;
      os << ", corner=\"" << corner << "\"";
    }
    os << "];\n";
  }
  for (const Edge& e : chain.network.edges()) {
    os << "  " << e.u << " -- " << e.v << " [label=\"" << e.resistance << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string matrix_json(const ResistanceMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.order.size(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.order.size(); ++k) row.push_back(m.r(i, k).to_string());
    rows.push_back(std::move(row));
  }
  return json{{"order", m.order}, {"r", std::move(rows)}}.dump();
}

std::string extrema_csv(const ExtremaTable& table, bool approx) {
  std::ostringstream os;
  os << "n,code,canonical,kf_num,kf_den,is_all_kink,is_min,is_max";
  if (approx) os << ",kf_approx";
  os << '\n';
  for (const auto& r : table.reports) {
    os << table.n << ',' << r.code.to_string() << ',' << r.canonical.to_string() << ','
       << r.kf.numerator().get_str() << ',' << r.kf.denominator().get_str() << ','
       << (is_all_kink(r.code) ? "true" : "false") << ','
       << (r.kf == table.min_kf ? "true" : "false") << ','
       << (r.kf == table.max_kf ? "true" : "false");
    if (approx) os << ',' << r.kf.to_decimal();
    os << '\n';
  }
  return os.str();
}

std::string kf_json(const KfReport& report, bool approx) {
  json out{{"n", report.code.n()},
           {"code", report.code.to_string()},
           {"canonical", report.canonical.to_string()},
           {"kf", report.kf.to_string()},
           {"vertex_count", report.vertex_count},
           {"edge_count", report.edge_count}};
  if (approx) out["kf_approx"] = report.kf.to_decimal();
  if (report.per_vertex_sums) {
    json sums = json::object();
    for (const auto& [v, s] : *report.per_vertex_sums) sums[std::to_string(v)] = s.to_string();
    out["per_vertex_sums"] = std::move(sums);
  }
  return out.dump(2);
}

json step_json(const ReductionStep& step) {
  json before = json::array();
  json after = json::array();
  for (const auto& r : step.before) before.push_back(r.to_string());
  for (const auto& r : step.after) after.push_back(r.to_string());
  json out{{"kind", std::string(to_string(step.kind))},
           {"vertices", step.vertices},
           {"before", std::move(before)},
           {"after", std::move(after)}};
  if (step.created) out["created"] = *step.created;
  return out;
}

std::string trace_text(const ReductionTrace& trace) {
  std::ostringstream os;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    os << i + 1 << ". " << to_string(s.kind) << " on";
    for (auto v : s.vertices) os << ' ' << v;
    os << ": [";
    for (std::size_t j = 0; j < s.before.size(); ++j) os << (j ? ", " : "") << s.before[j];
    os << "] -> [";
    for (std::size_t j = 0; j < s.after.size(); ++j) os << (j ? ", " : "") << s.after[j];
    os << ']';
    if (s.created) os << " new vertex " << *s.created;
    os << '\n';
  }
  return os.str();
}

std::string reduction_json(const ChainReduction& reduction) {
  json steps = json::array();
  for (const auto& s : reduction.trace.steps) steps.push_back(step_json(s));
  return json{{"source", reduction.source},
              {"hubs", reduction.hubs},
              {"r1", reduction.r1.to_string()},
              {"r2", reduction.r2.to_string()},
              {"steps", std::move(steps)},
              {"network", edges_json(reduction.network)}}
      .dump(2);
}

json lemma4_object(const Lemma4Report& report) {
  return json{{"kf_s", report.kf_s.to_string()},
              {"kf_t", report.kf_t.to_string()},
              {"lhs", report.lhs.to_string()},
              {"rhs", report.rhs.to_string()},
              {"pass", report.pass}};
}

std::string lemma4_json(const Lemma4Report& report) { return lemma4_object(report).dump(); }

std::string conjecture_json(const ConjectureReport& report) {
  json out{{"check", "conjecture"},
           {"n", report.n},
           {"codes", report.table.reports.size()},
           {"min_kf", report.table.min_kf.to_string()},
           {"max_kf", report.table.max_kf.to_string()},
           {"min_class", to_json(report.table.min_class)},
           {"max_class", to_json(report.table.max_class)},
           {"expected_min_class", to_json(report.expected_min)},
           {"expected_max_class", to_json(report.expected_max)},
           {"pass", report.pass}};
  out["second_min_kf"] = report.second_min ? json(report.second_min->to_string()) : json(nullptr);
  out["second_max_kf"] = report.second_max ? json(report.second_max->to_string()) : json(nullptr);
  if (report.witness) out["witness"] = report.witness->to_string();
  return out.dump(2);
}

std::string theorem1_json(const Theorem1Report& report) {
  json out{{"check", "theorem1"},
           {"n", report.n},
           {"min_kf", report.min_kf.to_string()},
           {"min_class", to_json(report.min_class)},
           {"pass", report.pass}};
  if (report.witness) out["witness"] = report.witness->to_string();
  return out.dump(2);
}

json flip_instance_json(const KinkFlipInstance& inst) {
  return json{{"code", inst.code.to_string()},
              {"square", inst.square},
              {"kf_before", inst.kf_before.to_string()},
              {"kf_after", inst.kf_after.to_string()},
              {"lemma4_rhs", inst.lemma4_rhs.to_string()},
              {"decreases", inst.decreases},
              {"identity_holds", inst.identity_holds}};
}

std::string kink_flip_json(const KinkFlipReport& report) {
  json instances = json::array();
  for (const auto& inst : report.instances) instances.push_back(flip_instance_json(inst));
  json out{{"check", "kinkflip"},
           {"n", report.n},
           {"instances", std::move(instances)},
           {"pass", report.pass}};
  if (report.witness) out["witness"] = flip_instance_json(*report.witness);
  return out.dump(2);
}

json lemma5_object(const Lemma5Report& report) {
  json out{{"n", report.n},
           {"interior", codes_to_string(report.interior)},
           {"r_a1_x", report.r_a_x.to_string()},
           {"r_a1_y", report.r_a_y.to_string()},
           {"r_l1_x", report.r_l_x.to_string()},
           {"r_l1_y", report.r_l_y.to_string()},
           {"R1", report.r1.to_string()},
           {"R2", report.r2.to_string()},
           {"steps", report.steps},
           {"inequalities", report.inequalities},
           {"steps_preserve", report.steps_preserve},
           {"r1_in_unit_interval", report.r1_in_unit_interval},
           {"pass", report.pass}};
  out["closed_form"] = report.closed_form ? json(*report.closed_form) : json(nullptr);
  return out;
}

std::string lemma5_json(const Lemma5Report& report) { return lemma5_object(report).dump(2); }

json lemma6_object(const Lemma6Report& report) {
  json entries = json::array();
  for (const auto& e : report.entries) {
    entries.push_back({{"u", e.u},
                       {"r_ux", e.r_ux.to_string()},
                       {"r_uy", e.r_uy.to_string()},
                       {"strict", e.strict}});
  }
  return json{{"code", report.code.to_string()},
              {"n", report.code.n()},
              {"x", report.x},
              {"y", report.y},
              {"entries", std::move(entries)},
              {"pass", report.pass}};
}

std::string lemma6_json(const Lemma6Report& report) { return lemma6_object(report).dump(2); }

json hexagon_object(const HexagonReport& report) {
  return json{{"r", report.r.to_string()},
              {"sum_a", report.sum_a.to_string()},
              {"sum_l", report.sum_l.to_string()},
              {"expected_sum_a", report.expected_sum_a.to_string()},
              {"expected_sum_l", report.expected_sum_l.to_string()},
              {"difference", report.difference.to_string()},
              {"expected_difference", report.expected_difference.to_string()},
              {"pass", report.pass}};
}

std::string hexagon_json(const HexagonReport& report) { return hexagon_object(report).dump(2); }

}  // namespace phenylene
