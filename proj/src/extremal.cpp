#include "phenylene/extremal.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <mutex>
#include <set>
#include <string>
#include <thread>

#include "phenylene/chain_circuit.hpp"
#include "phenylene/errors.hpp"
#include "phenylene/laplacian.hpp"
#include "phenylene/st_isomer.hpp"

namespace phenylene {

namespace {

bool contains(const std::vector<ChainCode>& codes, const ChainCode& c) {
  return std::find(codes.begin(), codes.end(), c) != codes.end();
}

void require_cap(int n, std::size_t cap) {
  const auto count = code_count(n);
  if (count > cap) {
    throw CapExceeded("n=" + std::to_string(n) + " needs " + std::to_string(count) +
                      " chains but the exhaustive cap is " + std::to_string(cap) +
                      "; raise the cap to run it");
  }
}

bool has_unit_resistance(const ResistanceNetwork& net, VertexId u, VertexId v) {
  const auto idx = net.edges_between(u, v);
  return idx.size() == 1 && net.edges()[idx.front()].resistance == 1;
}

}  // namespace

KfReport kf_of_code(const ChainCode& code, bool with_vertex_sums) {
  const auto chain = build_chain(code);
  const auto m = resistance_matrix(chain.network);
  KfReport report{code, canonical_code(code), kirchhoff_index(m), chain.network.vertex_count(),
                  chain.network.edge_count(), std::nullopt};
  if (with_vertex_sums) {
    const auto sums = resistance_sums(m);
    std::map<VertexId, Rational> by_vertex;
    for (std::size_t i = 0; i < m.order.size(); ++i) by_vertex.emplace(m.order[i], sums[i]);
    report.per_vertex_sums = std::move(by_vertex);
  }
  return report;
}

std::size_t code_count(int n) {
  std::size_t count = 1;
  for (int i = 0; i < n - 2; ++i) {
    if (count > std::numeric_limits<std::size_t>::max() / 3) {
      return std::numeric_limits<std::size_t>::max();
    }
    count *= 3;
  }
  return count;
}

std::vector<ChainCode> enumerate_codes(int n, bool canonical_only) {
  if (n < 1) throw InvalidParameter("chain needs at least one hexagon");
  const auto len = static_cast<std::size_t>(std::max(n - 2, 0));
  std::vector<ChainCode> out;
  std::vector<std::uint8_t> w(len, 0);
  while (true) {
    ChainCode code(n, w);
    if (!canonical_only || canonical_code(code) == code) out.push_back(std::move(code));
    // odometer increment, last entry fastest
    std::size_t pos = len;
    while (pos > 0 && w[pos - 1] == 2) w[--pos] = 0;
    if (pos == 0) break;
    ++w[pos - 1];
  }
  return out;
}

std::vector<KfReport> kf_reports(const std::vector<ChainCode>& codes, unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(codes.size(), 1)));

  std::vector<std::optional<KfReport>> slots(codes.size());
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&](unsigned id) {
    try {
      for (std::size_t i = id; i < codes.size(); i += threads) slots[i] = kf_of_code(codes[i]);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<KfReport> out;
  out.reserve(slots.size());
  for (auto& slot : slots) out.push_back(std::move(*slot));
  return out;
}

ExtremaTable find_extrema(int n, std::size_t cap) {
  require_cap(n, cap);
  ExtremaTable table;
  table.n = n;
  table.reports = kf_reports(enumerate_codes(n));
  const auto [lo, hi] = std::minmax_element(
      table.reports.begin(), table.reports.end(),
      [](const KfReport& a, const KfReport& b) { return a.kf < b.kf; });
  table.min_kf = lo->kf;
  table.max_kf = hi->kf;
  for (const auto& r : table.reports) {
    if (r.kf == table.min_kf) table.min_class.push_back(r.code);
    if (r.kf == table.max_kf) table.max_class.push_back(r.code);
  }
  return table;
}

ConjectureReport verify_conjecture(int n, std::size_t cap) {
  ConjectureReport report;
  report.n = n;
  report.table = find_extrema(n, cap);
  report.expected_min = code_orbit(ChainCode::helicene(n));
  report.expected_max = code_orbit(ChainCode::linear(n));

  for (const auto& r : report.table.reports) {
    if (!contains(report.table.min_class, r.code) && (!report.second_min || r.kf < *report.second_min)) {
      report.second_min = r.kf;
    }
    if (!contains(report.table.max_class, r.code) && (!report.second_max || r.kf > *report.second_max)) {
      report.second_max = r.kf;
    }
  }

  auto first_mismatch = [](const std::vector<ChainCode>& got,
                           const std::vector<ChainCode>& want) -> std::optional<ChainCode> {
    for (const auto& c : got) {
      if (!contains(want, c)) return c;
    }
    for (const auto& c : want) {
      if (!contains(got, c)) return c;
    }
    return std::nullopt;
  };
  report.witness = first_mismatch(report.table.min_class, report.expected_min);
  if (!report.witness) report.witness = first_mismatch(report.table.max_class, report.expected_max);
  report.pass = !report.witness.has_value();
  return report;
}

Theorem1Report verify_theorem1(int n, std::size_t cap) {
  const auto table = find_extrema(n, cap);
  Theorem1Report report{n, table.min_class, table.min_kf, true, std::nullopt};
  for (const auto& c : table.min_class) {
    if (!is_all_kink(c)) {
      report.pass = false;
      report.witness = c;
      break;
    }
  }
  return report;
}

ResistanceNetwork kink_flip(const LabeledChain& chain, int i) {
  if (i < 1 || i > static_cast<int>(chain.squares.size())) {
    throw InvalidParameter("square index " + std::to_string(i) + " out of range");
  }
  const SquareCorners& sq = chain.squares[static_cast<std::size_t>(i - 1)];
  ResistanceNetwork out = chain.network;
  if (out.edges_between(sq.a, sq.b).size() != 1 || out.edges_between(sq.l, sq.k).size() != 1) {
    throw LabelingError("square " + std::to_string(i) + " lacks its a-b or l-k edge");
  }
  const Rational ab = out.edges()[out.edges_between(sq.a, sq.b).front()].resistance;
  const Rational lk = out.edges()[out.edges_between(sq.l, sq.k).front()].resistance;
  out.remove_edges_between(sq.a, sq.b);
  out.remove_edges_between(sq.l, sq.k);
  out.add_edge(sq.a, sq.k, ab);
  out.add_edge(sq.b, sq.l, lk);
  return out;
}

int junction_square(int j) { return j + 1; }

KinkFlipReport verify_kink_flips(int n) {
  KinkFlipReport report;
  report.n = n;
  report.pass = true;
  for (const auto& code : enumerate_codes(n)) {
    if (!is_all_kink(code)) continue;
    const auto& w = code.word();
    std::optional<LabeledChain> chain;
    std::optional<Rational> kf_before;
    for (std::size_t j = 0; j + 1 < w.size(); ++j) {
      if (w[j] != 0 || w[j + 1] != 2) continue;
      if (!chain) {
        chain = build_chain(code);
        kf_before = kirchhoff_index(chain->network);
      }
      const int square = junction_square(static_cast<int>(j) + 1);
      KinkFlipInstance inst{code, square, *kf_before,
                            kirchhoff_index(kink_flip(*chain, square)),
                            lemma4_delta(split_at_square(*chain, square)), false, false};
      inst.decreases = inst.kf_after < inst.kf_before;
      inst.identity_holds = inst.kf_before - inst.kf_after == inst.lemma4_rhs;
      if ((!inst.decreases || !inst.identity_holds) && report.pass) {
        report.pass = false;
        report.witness = inst;
      }
      report.instances.push_back(std::move(inst));
    }
  }
  return report;
}

Lemma5Report check_lemma5(int n, const EdgeWeights& weights,
                          std::optional<std::vector<std::uint8_t>> interior) {
  const auto chain = build_terminal_chain(n, weights, std::move(interior));
  const auto& net = chain.network;
  const auto& first = chain.squares.front();

  Lemma5Report report;
  report.n = n;
  report.interior = chain.interior;
  const std::vector<VertexId> terminals{chain.x, chain.y};
  const auto from_a = effective_resistances(net, first.a, terminals);
  const auto from_l = effective_resistances(net, first.l, terminals);
  report.r_a_x = from_a[0];
  report.r_a_y = from_a[1];
  report.r_l_x = from_l[0];
  report.r_l_y = from_l[1];
  report.inequalities = report.r_a_x < report.r_a_y && report.r_l_x < report.r_l_y;

  report.steps_preserve = true;
  for (auto source : {SourceCorner::a, SourceCorner::l}) {
    const auto reduction = simplify_chain_circuit(chain, source);
    const Rational want_x = source == SourceCorner::a ? report.r_a_x : report.r_l_x;
    const Rational want_y = source == SourceCorner::a ? report.r_a_y : report.r_l_y;
    ResistanceNetwork current = net;
    for (const auto& step : reduction.trace.steps) {
      current = apply_step(current, step);
      const auto got = effective_resistances(current, reduction.source, terminals);
      if (got[0] != want_x || got[1] != want_y) {
        report.steps_preserve = false;
      }
    }
    if (!(current == reduction.network)) report.steps_preserve = false;
    if (source != SourceCorner::a) continue;

    report.steps = reduction.trace.steps.size();
    report.r1 = reduction.r1;
    report.r2 = reduction.r2;
    report.r1_in_unit_interval = reduction.r1.sign() > 0 && reduction.r1 < 1;

    // Closed form on the final star: x hangs 1 from b_n and 4 from k_n,
    // y hangs 2 from b_n and 3 from k_n.
    const auto tail = hexagon_edges(chain.hexagons.back());
    const bool unit_tail = std::all_of(tail.begin(), tail.end(), [&net](const auto& e) {
      return has_unit_resistance(net, e.first, e.second);
    });
    if (unit_tail) {
      const Rational base =
          effective_resistance(reduction.network, reduction.source, reduction.hubs.back());
      const Rational& r1 = reduction.r1;
      const Rational& r2 = reduction.r2;
      const Rational total = r1 + r2 + Rational(5);
      const Rational fx = base + (r1 + Rational(1)) * (r2 + Rational(4)) / total;
      const Rational fy = base + (r1 + Rational(2)) * (r2 + Rational(3)) / total;
      const Rational diff = (r1 - r2 - Rational(2)) / total;
      report.closed_form =
          fx == report.r_a_x && fy == report.r_a_y && report.r_a_x - report.r_a_y == diff;
    }
  }
  report.pass = report.inequalities && report.steps_preserve && report.r1_in_unit_interval &&
                report.closed_form.value_or(true);
  return report;
}

Lemma6Report check_lemma6(const ChainCode& code, const EdgeWeights& weights) {
  if (code.n() < 2) throw InvalidParameter("the first-hexagon check needs at least two hexagons");
  auto chain = build_chain(code);
  const auto& last = chain.squares.back();
  if (auto it = weights.find(edge_key(last.b, last.k)); it != weights.end() && it->second != 1) {
    throw InvalidParameter("edge b_{n-1} k_{n-1} must keep resistance 1, got " +
                           it->second.to_string());
  }
  apply_weights(chain.network, weights);

  Lemma6Report report;
  report.code = code;
  std::tie(report.x, report.y) = terminal_pair(chain);
  report.pass = true;
  const auto& first = chain.squares.front();
  for (VertexId u : chain.hexagons.front()) {
    if (u == first.a || u == first.l) continue;
    Lemma6Entry entry{u, effective_resistance(chain.network, u, report.x),
                      effective_resistance(chain.network, u, report.y), false};
    entry.strict = entry.r_ux < entry.r_uy;
    report.pass = report.pass && entry.strict;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

HexagonReport weighted_hexagon_check(const Rational& r) {
  if (r.sign() <= 0) throw InvalidParameter("hexagon weight must be positive, got " + r.to_string());
  // positions: 0 = a, 1, 2, 3, 4, 5 = l; the weighted edge is 1-2
  ResistanceNetwork hex;
  for (VertexId v = 0; v < 6; ++v) {
    hex.add_edge(v, (v + 1) % 6, v == 1 ? r : Rational(1));
  }
  const auto m = resistance_matrix(hex);
  HexagonReport report;
  report.r = r;
  for (VertexId v = 0; v < 6; ++v) {
    report.sum_a += m.at(v, 0);
    report.sum_l += m.at(v, 5);
  }
  const Rational total = r + Rational(5);
  report.expected_sum_a = (Rational(11) * r + Rational(24)) / total;
  report.expected_sum_l = (Rational(9) * r + Rational(26)) / total;
  report.difference = report.sum_a - report.sum_l;
  report.expected_difference = (Rational(2) * r - Rational(2)) / total;
  const bool sign_ok = !(r < 1) || report.difference.sign() < 0;
  report.pass = report.sum_a == report.expected_sum_a && report.sum_l == report.expected_sum_l &&
                report.difference == report.expected_difference && sign_ok;
  return report;
}

EdgeWeights random_weights(Rng& rng, const ResistanceNetwork& net,
                           const std::vector<std::pair<VertexId, VertexId>>& keep_unit) {
  EdgeWeights weights;
  for (const Edge& e : net.edges()) {
    const auto key = edge_key(e.u, e.v);
    if (std::find(keep_unit.begin(), keep_unit.end(), key) != keep_unit.end()) continue;
    weights[key] = random_resistance(rng);
  }
  return weights;
}

}  // namespace phenylene
