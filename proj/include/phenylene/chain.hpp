#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "phenylene/network.hpp"

namespace phenylene {

/// A phenylene chain with n hexagons written as a word over {0, 1, 2}.
///
/// Entry w[j] belongs to interior hexagon C_{j+2} and counts the hexagon
/// vertices placed on the top edge of its parent ladder square (the other
/// 2 - w[j] go on the bottom edge). Terminal hexagons carry no entry.
class ChainCode {
 public:
  /// The single hexagon.
  ChainCode() = default;
  /// Throws InvalidParameter unless n >= 1, |w| = max(n - 2, 0), entries in {0,1,2}.
  ChainCode(int n, std::vector<std::uint8_t> w);
  /// n inferred as |w| + 2.
  static ChainCode from_word(std::vector<std::uint8_t> w);
  /// Accepts "n=5 w=0,2,0", "w=020", "020", "0,2,0"; n is inferred when absent.
  /// Throws ParseError on anything else.
  static ChainCode parse(std::string_view text);

  static ChainCode helicene(int n);
  static ChainCode linear(int n);

  int n() const { return n_; }
  const std::vector<std::uint8_t>& word() const { return w_; }
  /// Compact digits, e.g. "020"; empty for n <= 2.
  std::string to_string() const;

  friend bool operator==(const ChainCode&, const ChainCode&) = default;
  friend auto operator<=>(const ChainCode& a, const ChainCode& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.w_ <=> b.w_;
  }

 private:
  int n_ = 1;
  std::vector<std::uint8_t> w_;
};

ChainCode reversed(const ChainCode& code);
ChainCode complemented(const ChainCode& code);
/// {w, reverse(w), complement(w), reverse(complement(w))}, sorted and deduplicated.
std::vector<ChainCode> code_orbit(const ChainCode& code);
/// Lexicographic minimum of the orbit.
ChainCode canonical_code(const ChainCode& code);
/// True iff no entry equals 1. Terminal hexagons are not considered.
bool is_all_kink(const ChainCode& code);

/// Corners of a square: (a, l) on the left hexagon's side, (b, k) on the
/// right; a and b on top, l and k on the bottom. Edges a-b, b-k, k-l, l-a.
struct SquareCorners {
  VertexId a;
  VertexId b;
  VertexId k;
  VertexId l;
};

using Hexagon = std::array<VertexId, 6>;  // in cyclic order

/// Chain with n hexagons and n - 1 squares; square i sits between hexagons
/// i and i + 1 (0-based storage, 1-based in names).
struct LabeledChain {
  ChainCode code;
  ResistanceNetwork network;
  std::vector<Hexagon> hexagons;
  std::vector<SquareCorners> squares;
};

/// Chain with n hexagons and n squares, starting with a square:
/// S_1 C_1 S_2 C_2 ... S_n C_n. x is the degree-2 vertex of C_n adjacent
/// to b_n and y its other neighbour.
struct TerminalChain {
  ResistanceNetwork network;
  std::vector<std::uint8_t> interior;  // codes of C_1 .. C_{n-1}
  std::vector<Hexagon> hexagons;
  std::vector<SquareCorners> squares;
  VertexId x;
  VertexId y;
};

/// Edge resistances keyed by (min id, max id).
using EdgeWeights = std::map<std::pair<VertexId, VertexId>, Rational>;

/// Ladder Q_m: top vertices 2j, bottom vertices 2j + 1 (j = 0..m), rungs and
/// rails of unit resistance.
ResistanceNetwork build_ladder(int m);

LabeledChain build_chain(const ChainCode& code);

/// `interior` defaults to all ones; its length must be n - 1. Weights are
/// applied after construction; the b_n k_n edge must keep resistance 1.
TerminalChain build_terminal_chain(int n, const EdgeWeights& weights = {},
                                   std::optional<std::vector<std::uint8_t>> interior = {});

/// Overwrites edge resistances. Throws InvalidParameter for a missing edge or
/// a nonpositive value.
void apply_weights(ResistanceNetwork& net, const EdgeWeights& weights);

std::pair<VertexId, VertexId> edge_key(VertexId u, VertexId v);
std::vector<std::pair<VertexId, VertexId>> hexagon_edges(const Hexagon& hex);

/// Degree-2 vertex of the last hexagon adjacent to b_{n-1}, and its other
/// neighbour. Requires n >= 2.
std::pair<VertexId, VertexId> terminal_pair(const LabeledChain& chain);

}  // namespace phenylene
