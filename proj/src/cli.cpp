#include "phenylene/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "io_json.hpp"
#include "phenylene/chain_circuit.hpp"
#include "phenylene/errors.hpp"
#include "phenylene/io.hpp"
#include "phenylene/laplacian.hpp"
#include "phenylene/st_isomer.hpp"

namespace phenylene::cli {

using nlohmann::json;

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

std::size_t effective_cap(const CommandConfig& cfg) {
  if (cfg.cap) return *cfg.cap;
  if (const char* env = std::getenv(kCapEnvVar); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const auto value = std::stoull(env, &used);
      if (used == std::string(env).size()) return static_cast<std::size_t>(value);
    } catch (const std::exception&) {
    }
    throw UsageError(std::string(kCapEnvVar) + " must be a nonnegative integer");
  }
  return kDefaultExhaustiveCap;
}

int require_n(const CommandConfig& cfg) {
  if (!cfg.n) throw UsageError(cfg.subcommand + " needs --n");
  return *cfg.n;
}

ChainCode chain_code(const CommandConfig& cfg) {
  if (cfg.code.empty() && !cfg.n) throw UsageError(cfg.subcommand + " needs --code or --n");
  std::string text = cfg.code;
  if (cfg.n) {
    if (text.find("n=") != std::string::npos) throw UsageError("hexagon count given twice");
    text = "n=" + std::to_string(*cfg.n) + (text.empty() ? "" : " " + text);
  }
  return ChainCode::parse(text);
}

ResistanceNetwork load_edges(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open edge list '" + path + "'");
  return parse_edge_list(in);
}

EdgeWeights parse_weights(const std::vector<std::string>& specs) {
  EdgeWeights weights;
  for (const auto& spec : specs) {
    const auto dash = spec.find('-');
    const auto eq = spec.find('=');
    if (dash == std::string::npos || eq == std::string::npos || dash > eq) {
      throw UsageError("malformed weight '" + spec + "', expected u-v=p/q");
    }
    try {
      std::size_t used_u = 0;
      std::size_t used_v = 0;
      const std::string us = spec.substr(0, dash);
      const std::string vs = spec.substr(dash + 1, eq - dash - 1);
      const auto u = std::stoul(us, &used_u);
      const auto v = std::stoul(vs, &used_v);
      if (used_u != us.size() || used_v != vs.size()) throw UsageError("");
      const Rational r = Rational::parse(std::string_view(spec).substr(eq + 1));
      if (r.sign() <= 0) throw UsageError("");
      weights[edge_key(static_cast<VertexId>(u), static_cast<VertexId>(v))] = r;
    } catch (const std::exception&) {
      throw UsageError("malformed weight '" + spec + "', expected u-v=p/q with p/q > 0");
    }
  }
  return weights;
}

std::string join_codes(const std::vector<ChainCode>& codes) {
  std::string s = "{";
  for (std::size_t i = 0; i < codes.size(); ++i) {
    s += (i ? ", " : "") + (codes[i].to_string().empty() ? std::string("()") : codes[i].to_string());
  }
  return s + "}";
}

std::string approx_suffix(const CommandConfig& cfg, const Rational& r) {
  return cfg.approx ? "  (~" + r.to_decimal() + ")" : "";
}

const char* verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

ExtremaTable table_from(int n, std::vector<KfReport> reports) {
  ExtremaTable table;
  table.n = n;
  table.reports = std::move(reports);
  if (table.reports.empty()) return table;
  table.min_kf = table.max_kf = table.reports.front().kf;
  for (const auto& r : table.reports) {
    if (r.kf < table.min_kf) table.min_kf = r.kf;
    if (r.kf > table.max_kf) table.max_kf = r.kf;
  }
  for (const auto& r : table.reports) {
    if (r.kf == table.min_kf) table.min_class.push_back(r.code);
    if (r.kf == table.max_kf) table.max_class.push_back(r.code);
  }
  return table;
}

// ---------------------------------------------------------------- commands

int cmd_kf(const CommandConfig& cfg, std::ostream& out) {
  if (!cfg.edges_file.empty()) {
    const auto net = load_edges(cfg.edges_file);
    const Rational kf = kirchhoff_index(net);
    if (cfg.format == "json") {
      json j{{"kf", kf.to_string()}, {"vertex_count", net.vertex_count()},
             {"edge_count", net.edge_count()}};
      if (cfg.approx) j["kf_approx"] = kf.to_decimal();
      out << j.dump(2) << '\n';
    } else {
      out << kf << approx_suffix(cfg, kf) << '\n';
    }
    return kExitOk;
  }
  const auto report = kf_of_code(chain_code(cfg), cfg.vertex_sums);
  if (cfg.format == "json") {
    out << kf_json(report, cfg.approx) << '\n';
  } else {
    out << report.kf << approx_suffix(cfg, report.kf) << '\n';
    if (report.per_vertex_sums) {
      for (const auto& [v, s] : *report.per_vertex_sums) out << "r(" << v << ") = " << s << '\n';
    }
  }
  return kExitOk;
}

int cmd_enumerate(const CommandConfig& cfg, std::ostream& out) {
  const int n = require_n(cfg);
  if (code_count(n) > effective_cap(cfg)) {
    throw CapExceeded("n=" + std::to_string(n) + " exceeds the exhaustive cap " +
                      std::to_string(effective_cap(cfg)) + "; pass --cap or set " + kCapEnvVar);
  }
  const auto table = table_from(n, kf_reports(enumerate_codes(n, cfg.canonical_only)));
  if (cfg.format == "csv") {
    out << extrema_csv(table, cfg.approx);
  } else if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& r : table.reports) arr.push_back(json::parse(kf_json(r, cfg.approx)));
    out << arr.dump(2) << '\n';
  } else {
    for (const auto& r : table.reports) {
      out << (r.code.to_string().empty() ? "()" : r.code.to_string()) << ' '
          << r.canonical.to_string() << ' ' << r.kf << approx_suffix(cfg, r.kf) << '\n';
    }
  }
  return kExitOk;
}

int cmd_extrema(const CommandConfig& cfg, std::ostream& out) {
  const int n = require_n(cfg);
  const auto table = find_extrema(n, effective_cap(cfg));
  if (cfg.format == "csv") {
    out << extrema_csv(table, cfg.approx);
  } else if (cfg.format == "json") {
    out << json{{"n", n},
                {"codes", table.reports.size()},
                {"min_kf", table.min_kf.to_string()},
                {"max_kf", table.max_kf.to_string()},
                {"min_class", to_json(table.min_class)},
                {"max_class", to_json(table.max_class)}}
               .dump(2)
        << '\n';
  } else {
    out << "n=" << n << " (" << table.reports.size() << " codes)\n"
        << "min Kf = " << table.min_kf << approx_suffix(cfg, table.min_kf) << " on "
        << join_codes(table.min_class) << '\n'
        << "max Kf = " << table.max_kf << approx_suffix(cfg, table.max_kf) << " on "
        << join_codes(table.max_class) << '\n';
  }
  return kExitOk;
}

std::vector<int> n_range(const CommandConfig& cfg, int lo, int hi) {
  if (cfg.n) return {*cfg.n};
  std::vector<int> ns;
  for (int n = lo; n <= hi; ++n) ns.push_back(n);
  return ns;
}

// Runs `one` per n and wraps the results. Text mode prints one line each.
int verify_each(const CommandConfig& cfg, std::ostream& out, const std::string& name,
                const std::vector<int>& ns,
                const std::function<std::pair<bool, json>(int, std::string&)>& one) {
  bool all = true;
  json results = json::array();
  std::ostringstream text;
  for (int n : ns) {
    std::string line;
    auto [pass, j] = one(n, line);
    all = all && pass;
    results.push_back(std::move(j));
    text << verdict(pass) << ' ' << name << " n=" << n << ": " << line << '\n';
  }
  if (cfg.format == "json") {
    out << json{{"check", name}, {"results", std::move(results)}, {"pass", all}}.dump(2) << '\n';
  } else {
    out << text.str();
  }
  return all ? kExitOk : kExitVerificationFailed;
}

json pair_witness(const STPair& p) {
  return json{{"A", edges_json(p.a_side)}, {"a", p.a},      {"l", p.l},
              {"B", edges_json(p.b_side)}, {"b", p.b},      {"k", p.k}};
}

int verify_lemma4_cmd(const CommandConfig& cfg, std::ostream& out) {
  const int samples = cfg.samples.value_or(100);
  ResistanceNetwork a_side, b_side;
  a_side.add_edge(0, 1, Rational(1));
  a_side.add_edge(1, 2, Rational(1));
  b_side.add_edge(3, 4, Rational(1));
  b_side.add_edge(4, 5, Rational(1));
  const STPair p3{a_side, 0, 1, b_side, 3, 4};
  const auto p3_report = verify_lemma4(p3);

  Rng rng(cfg.seed);
  json pairs = json::array();
  bool all = p3_report.pass;
  std::optional<json> witness;
  if (!p3_report.pass) witness = pair_witness(p3);
  int passed = 0;
  for (int s = 0; s < samples; ++s) {
    const auto pair = random_st_pair(rng, 8);
    const auto report = verify_lemma4(pair);
    pairs.push_back(lemma4_object(report));
    if (report.pass) {
      ++passed;
    } else if (all) {
      all = false;
      witness = pair_witness(pair);
    }
  }
  if (cfg.format == "json") {
    json j{{"check", "lemma4"}, {"seed", cfg.seed},          {"samples", samples},
           {"p3_pair", lemma4_object(p3_report)},             {"pairs", std::move(pairs)},
           {"pass", all}};
    if (witness) j["witness"] = *witness;
    out << j.dump(2) << '\n';
  } else {
    out << verdict(p3_report.pass) << " lemma4 P3/P3: Kf(S)=" << p3_report.kf_s
        << " Kf(T)=" << p3_report.kf_t << " difference=" << p3_report.lhs
        << " closed form=" << p3_report.rhs << '\n'
        << verdict(passed == samples) << " lemma4 random pairs: " << passed << '/' << samples
        << " exact (seed " << cfg.seed << ")\n";
    if (witness) out << "witness: " << witness->dump() << '\n';
  }
  return all ? kExitOk : kExitVerificationFailed;
}

std::vector<std::vector<std::uint8_t>> all_words(std::size_t length) {
  std::vector<std::vector<std::uint8_t>> words;
  for (const auto& c : enumerate_codes(static_cast<int>(length) + 2)) words.push_back(c.word());
  return words;
}

int verify_lemma5_cmd(const CommandConfig& cfg, std::ostream& out) {
  if (!cfg.weights.empty()) {
    const int n = require_n(cfg);
    std::optional<std::vector<std::uint8_t>> interior;
    if (!cfg.code.empty()) interior = ChainCode::parse("w=" + cfg.code).word();
    const auto report = check_lemma5(n, parse_weights(cfg.weights), interior);
    out << (cfg.format == "json" ? lemma5_json(report) : std::string(verdict(report.pass)) +
                                                              " lemma5 n=" + std::to_string(n))
        << '\n';
    return report.pass ? kExitOk : kExitVerificationFailed;
  }
  const int samples = cfg.samples.value_or(50);
  const auto ns = n_range(cfg, 1, 6);
  Rng rng(cfg.seed);
  return verify_each(cfg, out, "lemma5", ns, [&](int n, std::string& line) {
    bool pass = true;
    json runs = json::array();
    std::size_t count = 0;
    for (const auto& interior : all_words(static_cast<std::size_t>(n - 1))) {
      const auto report = check_lemma5(n, {}, interior);
      pass = pass && report.pass;
      if (!report.pass || runs.empty()) runs.push_back(lemma5_object(report));
      ++count;
    }
    const int local = samples / static_cast<int>(ns.size()) +
                      (n - ns.front() < samples % static_cast<int>(ns.size()) ? 1 : 0);
    for (int s = 0; s < local; ++s) {
      auto chain = build_terminal_chain(n);
      std::uniform_int_distribution<int> digit(0, 2);
      std::vector<std::uint8_t> interior(static_cast<std::size_t>(n - 1));
      for (auto& e : interior) e = static_cast<std::uint8_t>(digit(rng));
      chain = build_terminal_chain(n, {}, interior);
      const auto weights = random_weights(rng, chain.network, hexagon_edges(chain.hexagons.back()));
      const auto report = check_lemma5(n, weights, interior);
      pass = pass && report.pass;
      if (!report.pass) runs.push_back(lemma5_object(report));
    }
    line = std::to_string(count) + " unit-weight chains, " + std::to_string(local) +
           " random-weight chains";
    return std::pair{pass, json{{"n", n}, {"unit_chains", count}, {"random_chains", local},
                                {"seed", cfg.seed}, {"runs", std::move(runs)}, {"pass", pass}}};
  });
}

int verify_lemma6_cmd(const CommandConfig& cfg, std::ostream& out) {
  if (!cfg.weights.empty()) {
    const auto report = check_lemma6(chain_code(cfg), parse_weights(cfg.weights));
    out << (cfg.format == "json" ? lemma6_json(report)
                                 : std::string(verdict(report.pass)) + " lemma6 " +
                                       report.code.to_string())
        << '\n';
    return report.pass ? kExitOk : kExitVerificationFailed;
  }
  const int samples = cfg.samples.value_or(50);
  const auto ns = n_range(cfg, 2, 6);
  Rng rng(cfg.seed);
  return verify_each(cfg, out, "lemma6", ns, [&](int n, std::string& line) {
    bool pass = true;
    json runs = json::array();
    std::size_t count = 0;
    for (const auto& code : enumerate_codes(n)) {
      const auto report = check_lemma6(code);
      pass = pass && report.pass;
      if (!report.pass || runs.empty()) runs.push_back(lemma6_object(report));
      ++count;
    }
    const int local = samples / static_cast<int>(ns.size()) +
                      (n - ns.front() < samples % static_cast<int>(ns.size()) ? 1 : 0);
    const auto codes = enumerate_codes(n);
    for (int s = 0; s < local; ++s) {
      std::uniform_int_distribution<std::size_t> pick(0, codes.size() - 1);
      const auto& code = codes[pick(rng)];
      const auto chain = build_chain(code);
      const auto weights = random_weights(rng, chain.network, hexagon_edges(chain.hexagons.back()));
      const auto report = check_lemma6(code, weights);
      pass = pass && report.pass;
      if (!report.pass) runs.push_back(lemma6_object(report));
    }
    line = std::to_string(count) + " unit-weight chains, " + std::to_string(local) +
           " random-weight chains";
    return std::pair{pass, json{{"n", n}, {"unit_chains", count}, {"random_chains", local},
                                {"seed", cfg.seed}, {"runs", std::move(runs)}, {"pass", pass}}};
  });
}

int verify_hexagon_cmd(const CommandConfig& cfg, std::ostream& out) {
  std::vector<Rational> rs;
  if (cfg.r) {
    rs.push_back(Rational::parse(*cfg.r));
  } else {
    rs = {Rational(1, 10), Rational(1, 2), Rational(9, 10), Rational(1)};
  }
  bool all = true;
  json results = json::array();
  std::ostringstream text;
  for (const auto& r : rs) {
    const auto report = weighted_hexagon_check(r);
    all = all && report.pass;
    results.push_back(hexagon_object(report));
    text << verdict(report.pass) << " hexagon r=" << r << ": sum_a=" << report.sum_a
         << " sum_l=" << report.sum_l << " difference=" << report.difference << '\n';
  }
  if (cfg.format == "json") {
    out << json{{"check", "hexagon"}, {"results", std::move(results)}, {"pass", all}}.dump(2)
        << '\n';
  } else {
    out << text.str();
  }
  return all ? kExitOk : kExitVerificationFailed;
}

int cmd_verify(const CommandConfig& cfg, std::ostream& out) {
  const std::string& check = cfg.check;
  if (check == "lemma4") return verify_lemma4_cmd(cfg, out);
  if (check == "lemma5") return verify_lemma5_cmd(cfg, out);
  if (check == "lemma6") return verify_lemma6_cmd(cfg, out);
  if (check == "hexagon") return verify_hexagon_cmd(cfg, out);
  const std::size_t cap = effective_cap(cfg);
  if (check == "conjecture") {
    return verify_each(cfg, out, "conjecture", n_range(cfg, 3, 7), [&](int n, std::string& line) {
      const auto report = verify_conjecture(n, cap);
      line = "min " + report.table.min_kf.to_string() + " on " +
             join_codes(report.table.min_class) + ", max " + report.table.max_kf.to_string() +
             " on " + join_codes(report.table.max_class);
      if (report.witness) line += ", witness " + report.witness->to_string();
      return std::pair{report.pass, json::parse(conjecture_json(report))};
    });
  }
  if (check == "theorem1") {
    return verify_each(cfg, out, "theorem1", n_range(cfg, 3, 7), [&](int n, std::string& line) {
      const auto report = verify_theorem1(n, cap);
      line = "minimisers " + join_codes(report.min_class) + " all-kink";
      if (report.witness) line += ", witness " + report.witness->to_string();
      return std::pair{report.pass, json::parse(theorem1_json(report))};
    });
  }
  if (check == "kinkflip") {
    return verify_each(cfg, out, "kinkflip", n_range(cfg, 4, 8), [&](int n, std::string& line) {
      if (code_count(n) > cap) {
        throw CapExceeded("n=" + std::to_string(n) + " exceeds the exhaustive cap");
      }
      const auto report = verify_kink_flips(n);
      line = std::to_string(report.instances.size()) + " (0,2) junctions flipped";
      if (report.witness) {
        line += ", witness " + report.witness->code.to_string() + " square " +
                std::to_string(report.witness->square);
      }
      return std::pair{report.pass, json::parse(kink_flip_json(report))};
    });
  }
  throw UsageError("unknown verification '" + check + "'");
}

int cmd_reduce(const CommandConfig& cfg, std::ostream& out) {
  std::optional<std::vector<std::uint8_t>> interior;
  int n = 0;
  if (!cfg.code.empty()) {
    interior = ChainCode::parse("w=" + cfg.code).word();
    n = static_cast<int>(interior->size()) + 1;
    if (cfg.n && *cfg.n != n) throw UsageError("--n disagrees with the code length + 1");
  } else {
    n = require_n(cfg);
  }
  if (cfg.source != "a" && cfg.source != "l") throw UsageError("--source must be a or l");
  const auto chain = build_terminal_chain(n, parse_weights(cfg.weights), interior);
  const auto reduction =
      simplify_chain_circuit(chain, cfg.source == "a" ? SourceCorner::a : SourceCorner::l);
  if (cfg.format == "json") {
    out << reduction_json(reduction) << '\n';
    return kExitOk;
  }
  out << "terminal chain n=" << n << ", source " << cfg.source << "_1 = vertex " << reduction.source
      << ", x = " << chain.x << ", y = " << chain.y << '\n'
      << "steps: " << reduction.trace.steps.size() << ", final hub " << reduction.hubs.back() << '\n'
      << "R1 = " << reduction.r1 << approx_suffix(cfg, reduction.r1) << '\n'
      << "R2 = " << reduction.r2 << approx_suffix(cfg, reduction.r2) << '\n';
  if (cfg.trace) out << trace_text(reduction.trace);
  return kExitOk;
}

int cmd_export_dot(const CommandConfig& cfg, std::ostream& out) {
  if (!cfg.edges_file.empty()) {
    out << to_dot(load_edges(cfg.edges_file));
  } else {
    out << to_dot(build_chain(chain_code(cfg)));
  }
  return kExitOk;
}

int cmd_matrix(const CommandConfig& cfg, std::ostream& out) {
  ResistanceNetwork net;
  if (!cfg.edges_file.empty()) {
    net = load_edges(cfg.edges_file);
  } else {
    net = build_chain(chain_code(cfg)).network;
  }
  const auto m = resistance_matrix(net);
  if (cfg.format == "text") {
    for (std::size_t i = 0; i < m.order.size(); ++i) {
      for (std::size_t k = 0; k < m.order.size(); ++k) out << (k ? " " : "") << m.r(i, k);
      out << '\n';
    }
  } else {
    out << matrix_json(m) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.subcommand == "kf") return cmd_kf(cfg, out);
    if (cfg.subcommand == "enumerate") return cmd_enumerate(cfg, out);
    if (cfg.subcommand == "extrema") return cmd_extrema(cfg, out);
    if (cfg.subcommand == "verify") return cmd_verify(cfg, out);
    if (cfg.subcommand == "reduce") return cmd_reduce(cfg, out);
    if (cfg.subcommand == "export-dot") return cmd_export_dot(cfg, out);
    if (cfg.subcommand == "matrix") return cmd_matrix(cfg, out);
    err << "error: unknown subcommand '" << cfg.subcommand << "'\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CommandConfig cfg;
  CLI::App app{"Exact resistance distances and Kirchhoff indices of phenylene chains"};
  app.require_subcommand(1);

  int n = 0;
  std::size_t cap = 0;
  int samples = 0;
  std::string r;

  auto add_n = [&](CLI::App* sub) { return sub->add_option("--n", n, "Number of hexagons"); };
  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember(std::move(allowed)));
  };
  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--cap", cap,
                    std::string("Exhaustive search cap (default 2187, or $") + kCapEnvVar + ")");
  };

  auto* kf = app.add_subcommand("kf", "Kirchhoff index of a chain code or an edge list");
  kf->add_option("--code", cfg.code, "Chain code, e.g. 020, 0,2,0 or \"n=5 w=020\"");
  add_n(kf);
  kf->add_option("--edges", cfg.edges_file, "Edge list file (u v p/q per line)");
  kf->add_flag("--sums", cfg.vertex_sums, "Also print per-vertex resistance sums");
  kf->add_flag("--approx", cfg.approx, "Add an approximate decimal rendering");
  add_format(kf, {"text", "json"});

  auto* enumerate = app.add_subcommand("enumerate", "Kf of every chain with n hexagons");
  add_n(enumerate)->required();
  enumerate->add_flag("--canonical", cfg.canonical_only, "One code per symmetry class");
  enumerate->add_flag("--approx", cfg.approx, "Add an approximate decimal column");
  add_format(enumerate, {"text", "json", "csv"});
  add_cap(enumerate);

  auto* extrema = app.add_subcommand("extrema", "Minimum and maximum Kf classes for n hexagons");
  add_n(extrema)->required();
  extrema->add_flag("--approx", cfg.approx, "Add an approximate decimal rendering");
  add_format(extrema, {"text", "json", "csv"});
  add_cap(extrema);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("check", cfg.check, "What to verify")
      ->required()
      ->check(CLI::IsMember(
          {"lemma4", "lemma5", "lemma6", "theorem1", "conjecture", "hexagon", "kinkflip"}));
  add_n(verify);
  verify->add_option("--r", r, "Hexagon weight for 'hexagon', as p/q");
  verify->add_option("--code", cfg.code, "Chain code for an explicit-weight run");
  verify->add_option("--weight", cfg.weights, "Edge weight u-v=p/q (repeatable)");
  verify->add_option("--samples", samples, "Number of random instances");
  verify->add_option("--seed", cfg.seed, "Random seed");
  add_format(verify, {"text", "json"});
  add_cap(verify);

  auto* reduce = app.add_subcommand("reduce", "Simplify a terminal chain circuit");
  reduce->add_option("--code", cfg.code, "Codes of hexagons C_1..C_{n-1}");
  add_n(reduce);
  reduce->add_option("--weight", cfg.weights, "Edge weight u-v=p/q (repeatable)");
  reduce->add_option("--source", cfg.source, "Source corner of the first square: a or l");
  reduce->add_flag("--trace", cfg.trace, "Print every reduction step");
  reduce->add_flag("--approx", cfg.approx, "Add approximate decimal renderings");
  add_format(reduce, {"text", "json"});

  auto* dot = app.add_subcommand("export-dot", "Graphviz export of a chain or an edge list");
  dot->add_option("--code", cfg.code, "Chain code");
  add_n(dot);
  dot->add_option("--edges", cfg.edges_file, "Edge list file");

  auto* matrix = app.add_subcommand("matrix", "Resistance matrix of an edge list or chain");
  matrix->add_option("--edges", cfg.edges_file, "Edge list file");
  matrix->add_option("--code", cfg.code, "Chain code");
  add_n(matrix);
  cfg.format = "text";
  matrix->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  cfg.subcommand = chosen->get_name();
  if (chosen->count("--n") > 0) cfg.n = n;
  if (chosen->get_option_no_throw("--cap") != nullptr && chosen->count("--cap") > 0) cfg.cap = cap;
  if (chosen->get_option_no_throw("--samples") != nullptr && chosen->count("--samples") > 0) {
    cfg.samples = samples;
  }
  if (chosen->get_option_no_throw("--r") != nullptr && chosen->count("--r") > 0) cfg.r = r;
  return run(cfg, out, err);
}

}  // namespace phenylene::cli
