#include "phenylene/chain.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "phenylene/errors.hpp"

namespace phenylene {

namespace {

VertexId top(int j) { return static_cast<VertexId>(2 * j); }
VertexId bottom(int j) { return static_cast<VertexId>(2 * j + 1); }

// Replaces edge u-v by a path through `count` fresh vertices, returned in
// order from u to v.
std::vector<VertexId> subdivide(ResistanceNetwork& net, VertexId u, VertexId v, int count) {
  std::vector<VertexId> inner;
  if (count == 0) return inner;
  if (net.remove_edges_between(u, v) != 1) throw LabelingError("ladder rail missing");
  VertexId prev = u;
  for (int i = 0; i < count; ++i) {
    const VertexId fresh = net.add_fresh_vertex();
    net.add_edge(prev, fresh, Rational(1));
    inner.push_back(fresh);
    prev = fresh;
  }
  net.add_edge(prev, v, Rational(1));
  return inner;
}

// Turns ladder square j (between rungs j-1 and j) into a hexagon with
// `on_top` vertices on the upper rail and the rest on the lower rail.
Hexagon make_hexagon(ResistanceNetwork& net, int j, int on_top) {
  const auto tops = subdivide(net, top(j - 1), top(j), on_top);
  const auto bottoms = subdivide(net, bottom(j - 1), bottom(j), 2 - on_top);
  std::vector<VertexId> cyc{top(j - 1)};
  cyc.insert(cyc.end(), tops.begin(), tops.end());
  cyc.push_back(top(j));
  cyc.push_back(bottom(j));
  cyc.insert(cyc.end(), bottoms.rbegin(), bottoms.rend());
  cyc.push_back(bottom(j - 1));
  Hexagon hex{};
  std::copy(cyc.begin(), cyc.end(), hex.begin());
  return hex;
}

// Ladder square j as square corners, left rung j-1 and right rung j.
SquareCorners square_at(int j) {
  return SquareCorners{top(j - 1), top(j), bottom(j), bottom(j - 1)};
}

std::vector<std::uint8_t> parse_word(std::string_view text) {
  std::vector<std::uint8_t> w;
  for (char c : text) {
    if (c == ',') continue;
    if (c < '0' || c > '2') {
      throw ParseError("invalid chain code character '" + std::string(1, c) +
                       "' (entries must be 0, 1 or 2)");
    }
    w.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return w;
}

}  // namespace

ChainCode::ChainCode(int n, std::vector<std::uint8_t> w) : n_(n), w_(std::move(w)) {
  if (n < 1) throw InvalidParameter("chain needs at least one hexagon");
  const auto expected = static_cast<std::size_t>(std::max(n - 2, 0));
  if (w_.size() != expected) {
    throw InvalidParameter("chain with " + std::to_string(n) + " hexagons needs a code of length " +
                           std::to_string(expected) + ", got " + std::to_string(w_.size()));
  }
  for (auto entry : w_) {
    if (entry > 2) throw InvalidParameter("chain code entries must be 0, 1 or 2");
  }
}

ChainCode ChainCode::from_word(std::vector<std::uint8_t> w) {
  const int n = static_cast<int>(w.size()) + 2;
  return ChainCode(n, std::move(w));
}

ChainCode ChainCode::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::optional<int> n;
  std::optional<std::vector<std::uint8_t>> w;
  std::string token;
  while (in >> token) {
    if (token.rfind("n=", 0) == 0) {
      const std::string_view digits = std::string_view(token).substr(2);
      int value = 0;
      const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
      if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
        throw ParseError("malformed hexagon count '" + token + "'");
      }
      n = value;
    } else if (token.rfind("w=", 0) == 0) {
      w = parse_word(std::string_view(token).substr(2));
    } else if (!w) {
      w = parse_word(token);
    } else {
      throw ParseError("unexpected token '" + token + "' in chain code");
    }
  }
  if (!n && !w) throw ParseError("empty chain code");
  if (!w && *n > 2) throw ParseError("chain code word missing for n=" + std::to_string(*n));
  if (!w) w.emplace();
  if (!n) n = static_cast<int>(w->size()) + 2;
  try {
    return ChainCode(*n, std::move(*w));
  } catch (const InvalidParameter& e) {
    throw ParseError(e.what());
  }
}

ChainCode ChainCode::helicene(int n) {
  return ChainCode(n, std::vector<std::uint8_t>(static_cast<std::size_t>(std::max(n - 2, 0)), 0));
}

ChainCode ChainCode::linear(int n) {
  return ChainCode(n, std::vector<std::uint8_t>(static_cast<std::size_t>(std::max(n - 2, 0)), 1));
}

std::string ChainCode::to_string() const {
  std::string s;
  for (auto entry : w_) s.push_back(static_cast<char>('0' + entry));
  return s;
}

ChainCode reversed(const ChainCode& code) {
  auto w = code.word();
  std::reverse(w.begin(), w.end());
  return ChainCode(code.n(), std::move(w));
}

ChainCode complemented(const ChainCode& code) {
  auto w = code.word();
  for (auto& entry : w) entry = static_cast<std::uint8_t>(2 - entry);
  return ChainCode(code.n(), std::move(w));
}

std::vector<ChainCode> code_orbit(const ChainCode& code) {
  std::vector<ChainCode> orbit{code, reversed(code), complemented(code),
                               reversed(complemented(code))};
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

ChainCode canonical_code(const ChainCode& code) { return code_orbit(code).front(); }

bool is_all_kink(const ChainCode& code) {
  return std::none_of(code.word().begin(), code.word().end(), [](auto e) { return e == 1; });
}

ResistanceNetwork build_ladder(int m) {
  if (m < 1) throw InvalidParameter("ladder needs at least one square");
  ResistanceNetwork net;
  for (int j = 0; j <= m; ++j) {
    net.add_edge(top(j), bottom(j), Rational(1));
    if (j > 0) {
      net.add_edge(top(j - 1), top(j), Rational(1));
      net.add_edge(bottom(j - 1), bottom(j), Rational(1));
    }
  }
  return net;
}

LabeledChain build_chain(const ChainCode& code) {
  const int n = code.n();
  LabeledChain chain{code, build_ladder(2 * n - 1), {}, {}};
  for (int h = 1; h <= n; ++h) {
    const int on_top = (h == 1 || h == n) ? 0 : code.word()[static_cast<std::size_t>(h - 2)];
    chain.hexagons.push_back(make_hexagon(chain.network, 2 * h - 1, on_top));
  }
  for (int i = 1; i < n; ++i) chain.squares.push_back(square_at(2 * i));
  return chain;
}

TerminalChain build_terminal_chain(int n, const EdgeWeights& weights,
                                   std::optional<std::vector<std::uint8_t>> interior) {
  if (n < 1) throw InvalidParameter("terminal chain needs at least one hexagon");
  std::vector<std::uint8_t> codes =
      interior ? std::move(*interior) : std::vector<std::uint8_t>(static_cast<std::size_t>(n - 1), 1);
  if (codes.size() != static_cast<std::size_t>(n - 1)) {
    throw InvalidParameter("terminal chain with " + std::to_string(n) +
                           " hexagons needs " + std::to_string(n - 1) + " interior codes");
  }
  for (auto c : codes) {
    if (c > 2) throw InvalidParameter("chain code entries must be 0, 1 or 2");
  }

  TerminalChain chain{build_ladder(2 * n), std::move(codes), {}, {}, top(2 * n), bottom(2 * n)};
  for (int i = 1; i <= n; ++i) {
    chain.squares.push_back(square_at(2 * i - 1));
    const int on_top = i < n ? chain.interior[static_cast<std::size_t>(i - 1)] : 0;
    chain.hexagons.push_back(make_hexagon(chain.network, 2 * i, on_top));
  }

  const SquareCorners& last = chain.squares.back();
  if (auto it = weights.find(edge_key(last.b, last.k)); it != weights.end() && it->second != 1) {
    throw InvalidParameter("edge b_n k_n must keep resistance 1, got " + it->second.to_string());
  }
  apply_weights(chain.network, weights);
  return chain;
}

void apply_weights(ResistanceNetwork& net, const EdgeWeights& weights) {
  for (const auto& [key, r] : weights) {
    if (r.sign() <= 0) {
      throw InvalidParameter("nonpositive weight " + r.to_string() + " on edge " +
                             std::to_string(key.first) + "-" + std::to_string(key.second));
    }
    const auto idx = net.edges_between(key.first, key.second);
    if (idx.empty()) {
      throw InvalidParameter("no edge " + std::to_string(key.first) + "-" +
                             std::to_string(key.second) + " to weight");
    }
    for (auto i : idx) net.set_resistance(i, r);
  }
}

std::pair<VertexId, VertexId> edge_key(VertexId u, VertexId v) {
  return {std::min(u, v), std::max(u, v)};
}

std::vector<std::pair<VertexId, VertexId>> hexagon_edges(const Hexagon& hex) {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (std::size_t i = 0; i < hex.size(); ++i) out.push_back(edge_key(hex[i], hex[(i + 1) % 6]));
  return out;
}

std::pair<VertexId, VertexId> terminal_pair(const LabeledChain& chain) {
  if (chain.squares.empty()) throw LabelingError("terminal pair needs at least two hexagons");
  const VertexId b = chain.squares.back().b;
  const Hexagon& last = chain.hexagons.back();
  for (std::size_t i = 0; i < 6; ++i) {
    if (last[i] != b) continue;
    for (std::size_t step : {std::size_t{1}, std::size_t{5}}) {
      const VertexId x = last[(i + step) % 6];
      if (chain.network.degree(x) != 2) continue;
      const VertexId y = last[(i + 2 * step) % 6];
      return {x, y};
    }
  }
  throw LabelingError("no degree-2 neighbour of b_{n-1} in the last hexagon");
}

}  // namespace phenylene
