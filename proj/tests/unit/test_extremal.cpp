#include <doctest.h>

#include "phenylene/chain_circuit.hpp"
#include "phenylene/errors.hpp"
#include "phenylene/extremal.hpp"
#include "phenylene/laplacian.hpp"
#include "phenylene/reduction.hpp"

using namespace phenylene;

TEST_CASE("code counts and the cap") {
  CHECK(code_count(1) == 1);
  CHECK(code_count(2) == 1);
  CHECK(code_count(3) == 3);
  CHECK(code_count(9) == 2187);
  CHECK(code_count(200) == std::numeric_limits<std::size_t>::max());
  CHECK_THROWS_AS(find_extrema(10), CapExceeded);
  CHECK_THROWS_AS(find_extrema(6, 10), CapExceeded);
  const auto codes = enumerate_codes(5);
  CHECK(codes.size() == 27);
  CHECK(std::is_sorted(codes.begin(), codes.end()));
}

TEST_CASE("extrema for four hexagons") {
  const auto t = find_extrema(4);
  CHECK(t.min_kf == Rational(1793378, 2651));
  CHECK(t.max_kf == Rational(1869410, 2651));
  CHECK(t.min_class == std::vector<ChainCode>{ChainCode(4, {0, 0}), ChainCode(4, {2, 2})});
  CHECK(t.max_class == std::vector<ChainCode>{ChainCode(4, {1, 1})});
}

TEST_CASE("conjecture and theorem at small n") {
  for (int n = 3; n <= 6; ++n) {
    const auto c = verify_conjecture(n);
    CHECK(c.pass);
    CHECK_FALSE(c.witness.has_value());
    REQUIRE(c.second_min.has_value());
    CHECK(c.table.min_kf < *c.second_min);
    CHECK(verify_theorem1(n).pass);
  }
}

TEST_CASE("kink flip rewires one square") {
  const auto chain = build_chain(ChainCode(4, {0, 2}));
  const auto flipped = kink_flip(chain, 2);
  const auto& s = chain.squares[1];
  CHECK(flipped.edges_between(s.a, s.b).empty());
  CHECK(flipped.edges_between(s.l, s.k).empty());
  CHECK(flipped.edges_between(s.a, s.k).size() == 1);
  CHECK(flipped.edges_between(s.b, s.l).size() == 1);
  CHECK(flipped.edge_count() == chain.network.edge_count());
  CHECK(junction_square(1) == 2);
  CHECK_THROWS_AS(kink_flip(build_chain(ChainCode(4, {0, 2})), 0), InvalidParameter);
}

TEST_CASE("kink flips lower Kf by the closed form") {
  for (int n = 4; n <= 6; ++n) {
    const auto r = verify_kink_flips(n);
    CHECK(r.pass);
    CHECK_FALSE(r.instances.empty());
    for (const auto& inst : r.instances) {
      CHECK(inst.kf_after < inst.kf_before);
      CHECK(inst.kf_before - inst.kf_after == inst.lemma4_rhs);
    }
  }
  // No all-kink code with three hexagons has a junction between two entries.
  CHECK(verify_kink_flips(3).instances.empty());
}

TEST_CASE("terminal circuit simplification") {
  for (int n = 1; n <= 5; ++n) {
    const auto chain = build_terminal_chain(n);
    for (auto src : {SourceCorner::a, SourceCorner::l}) {
      const auto red = simplify_chain_circuit(chain, src);
      CHECK(red.hubs.size() == static_cast<std::size_t>(2 * n - 1));
      CHECK(replay(chain.network, red.trace) == red.network);
      CHECK(effective_resistance(red.network, red.source, chain.x) ==
            effective_resistance(chain.network, red.source, chain.x));
      CHECK(effective_resistance(red.network, red.source, chain.y) ==
            effective_resistance(chain.network, red.source, chain.y));
      CHECK(red.r1.sign() > 0);
      CHECK(red.r1 < Rational(1));
    }
  }
  CHECK(simplify_chain_circuit(build_terminal_chain(1)).trace.steps.size() == 2);
}

TEST_CASE("terminal inequalities, unit and weighted") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& code : enumerate_codes(n + 1)) {
      const auto r = check_lemma5(n, {}, code.word());
      CHECK(r.pass);
      CHECK(r.closed_form.value_or(false));
    }
  }
  Rng rng(8);
  for (int t = 0; t < 10; ++t) {
    const auto chain = build_terminal_chain(3);
    const auto w = random_weights(rng, chain.network, hexagon_edges(chain.hexagons.back()));
    CHECK(check_lemma5(3, w).pass);
  }
}

TEST_CASE("first-hexagon inequalities") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& code : enumerate_codes(n)) {
      const auto r = check_lemma6(code);
      CHECK(r.pass);
      CHECK(r.entries.size() == 4);
    }
  }
  CHECK_THROWS_AS(check_lemma6(ChainCode(1, {})), InvalidParameter);
}

TEST_CASE("weighted hexagon") {
  for (const auto& r : {Rational(1, 10), Rational(1, 2), Rational(9, 10), Rational(1), Rational(3)}) {
    const auto h = weighted_hexagon_check(r);
    CHECK(h.pass);
    CHECK(h.sum_a == (Rational(11) * r + Rational(24)) / (r + Rational(5)));
    CHECK(h.sum_l == (Rational(9) * r + Rational(26)) / (r + Rational(5)));
    CHECK(h.difference == (Rational(2) * r - Rational(2)) / (r + Rational(5)));
  }
  CHECK(weighted_hexagon_check(Rational(1, 2)).difference.sign() < 0);
  CHECK_THROWS_AS(weighted_hexagon_check(Rational(0)), InvalidParameter);
}
