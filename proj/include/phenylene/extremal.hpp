#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "phenylene/chain.hpp"
#include "phenylene/random_graphs.hpp"

namespace phenylene {

/// Largest number of codes an exhaustive run may visit (3^7, i.e. n <= 9).
inline constexpr std::size_t kDefaultExhaustiveCap = 2187;

struct KfReport {
  ChainCode code;
  ChainCode canonical;
  Rational kf;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::optional<std::map<VertexId, Rational>> per_vertex_sums;
};

KfReport kf_of_code(const ChainCode& code, bool with_vertex_sums = false);

/// 3^(n-2) for n >= 3, 1 otherwise; saturates instead of overflowing.
std::size_t code_count(int n);

/// Every code with n hexagons in lexicographic order, or one representative
/// (the canonical code) per symmetry class.
std::vector<ChainCode> enumerate_codes(int n, bool canonical_only = false);

/// Evaluates kf_of_code over `codes` on worker threads; the result follows
/// the order of `codes` whatever the schedule. threads = 0 picks the
/// hardware concurrency.
std::vector<KfReport> kf_reports(const std::vector<ChainCode>& codes, unsigned threads = 0);

struct ExtremaTable {
  int n = 0;
  std::vector<KfReport> reports;  // every code, lexicographic
  Rational min_kf;
  Rational max_kf;
  std::vector<ChainCode> min_class;
  std::vector<ChainCode> max_class;
};

/// Throws CapExceeded when code_count(n) > cap.
ExtremaTable find_extrema(int n, std::size_t cap = kDefaultExhaustiveCap);

struct ConjectureReport {
  int n = 0;
  ExtremaTable table;
  std::vector<ChainCode> expected_min;  // orbit of the helicene chain
  std::vector<ChainCode> expected_max;  // the linear chain
  std::optional<Rational> second_min;   // smallest kf outside the min class
  std::optional<Rational> second_max;
  bool pass = false;
  std::optional<ChainCode> witness;
};

/// Minimum exactly on the helicene class and maximum exactly on the linear
/// chain, over an exhaustive enumeration.
ConjectureReport verify_conjecture(int n, std::size_t cap = kDefaultExhaustiveCap);

struct Theorem1Report {
  int n = 0;
  std::vector<ChainCode> min_class;
  Rational min_kf;
  bool pass = false;
  std::optional<ChainCode> witness;  // a minimiser containing a 1
};

/// Every minimising code is all-kink.
Theorem1Report verify_theorem1(int n, std::size_t cap = kDefaultExhaustiveCap);

/// Swaps a_i b_i, l_i k_i for a_i k_i, b_i l_i at square i (1-based).
/// Throws LabelingError if either original edge is missing.
ResistanceNetwork kink_flip(const LabeledChain& chain, int i);

/// The square between the hexagons carrying code entries j and j + 1
/// (1-based): square j + 1.
int junction_square(int j);

struct KinkFlipInstance {
  ChainCode code;
  int square = 0;
  Rational kf_before;
  Rational kf_after;
  Rational lemma4_rhs;
  bool decreases = false;
  bool identity_holds = false;  // kf_before - kf_after == lemma4_rhs
};

struct KinkFlipReport {
  int n = 0;
  std::vector<KinkFlipInstance> instances;
  bool pass = false;
  std::optional<KinkFlipInstance> witness;
};

/// Every all-kink code with n hexagons and every adjacent (0, 2) pair of
/// entries: flipping that square must lower Kf, by exactly lemma4_delta.
KinkFlipReport verify_kink_flips(int n);

struct Lemma5Report {
  int n = 0;
  std::vector<std::uint8_t> interior;
  Rational r_a_x;
  Rational r_a_y;
  Rational r_l_x;
  Rational r_l_y;
  Rational r1;  // legs of the final star, source a_1
  Rational r2;
  std::size_t steps = 0;
  bool inequalities = false;
  bool steps_preserve = false;   // both sources, every step
  bool r1_in_unit_interval = false;
  std::optional<bool> closed_form;  // only when C_n keeps unit edges
  bool pass = false;
};

/// Checks r(a_1,x) < r(a_1,y), r(l_1,x) < r(l_1,y) on the terminal chain and
/// that the circuit simplification preserves both at every step.
Lemma5Report check_lemma5(int n, const EdgeWeights& weights = {},
                          std::optional<std::vector<std::uint8_t>> interior = {});

struct Lemma6Entry {
  VertexId u;
  Rational r_ux;
  Rational r_uy;
  bool strict;
};

struct Lemma6Report {
  ChainCode code;
  VertexId x = 0;
  VertexId y = 0;
  std::vector<Lemma6Entry> entries;
  bool pass = false;
};

/// r(u,x) < r(u,y) for each u in C_1 other than a_1, l_1. The weight on
/// b_{n-1} k_{n-1} must be 1. Requires n >= 2.
Lemma6Report check_lemma6(const ChainCode& code, const EdgeWeights& weights = {});

struct HexagonReport {
  Rational r;
  Rational sum_a;
  Rational sum_l;
  Rational expected_sum_a;  // (11r + 24) / (r + 5)
  Rational expected_sum_l;  // (9r + 26) / (r + 5)
  Rational difference;
  Rational expected_difference;  // (2r - 2) / (r + 5)
  bool pass = false;
};

/// 6-cycle a, p, q, s, t, l with resistance r on p-q and 1 elsewhere; sums
/// r(y, a) and r(y, l) over the cycle. Throws InvalidParameter for r <= 0.
HexagonReport weighted_hexagon_check(const Rational& r);

/// Random resistances on every edge outside `keep_unit`.
EdgeWeights random_weights(Rng& rng, const ResistanceNetwork& net,
                           const std::vector<std::pair<VertexId, VertexId>>& keep_unit);

}  // namespace phenylene
