#include <doctest.h>

#include "phenylene/errors.hpp"
#include "phenylene/extremal.hpp"
#include "phenylene/laplacian.hpp"
#include "phenylene/st_isomer.hpp"
#include "support.hpp"

using namespace phenylene;
using testing_support::oracle_kf;
using testing_support::path;

TEST_CASE("P3/P3 pair") {
  const STPair p{path(3), 0, 1, path(3, 3), 3, 4};
  const auto iso = make_st_pair(p);
  CHECK(oracle_kf(iso.s) == Rational(83, 4));
  CHECK(oracle_kf(iso.t) == Rational(21));
  const auto r = verify_lemma4(p);
  CHECK(r.kf_s == Rational(83, 4));
  CHECK(r.kf_t == Rational(21));
  CHECK(r.lhs == Rational(-1, 4));
  CHECK(r.rhs == Rational(-1, 4));
  CHECK(r.pass);
}

TEST_CASE("swapping a and l exchanges S and T") {
  Rng rng(17);
  for (int t = 0; t < 20; ++t) {
    const auto p = random_st_pair(rng, 7, true);
    STPair q = p;
    std::swap(q.a, q.l);
    CHECK(lemma4_delta(q) == -lemma4_delta(p));
    const auto a = make_st_pair(p);
    const auto b = make_st_pair(q);
    CHECK(a.s == b.t);
    CHECK(a.t == b.s);
  }
}

TEST_CASE("a symmetric side gives equal Kf") {
  // a and l are swapped by an automorphism of A, so r_A(a) = r_A(l).
  ResistanceNetwork a_side;
  a_side.add_edge(0, 1, Rational(1));
  a_side.add_edge(0, 2, Rational(1));
  a_side.add_edge(1, 2, Rational(1));
  const STPair p{a_side, 0, 1, path(4, 3), 3, 4};
  CHECK(lemma4_delta(p) == Rational(0));
  const auto iso = make_st_pair(p);
  CHECK(oracle_kf(iso.s) == oracle_kf(iso.t));
}

TEST_CASE("random pairs satisfy the identity against the oracle") {
  Rng rng(2024);
  for (int t = 0; t < 30; ++t) {
    const auto p = random_st_pair(rng, 8, t % 2 == 1);
    const auto iso = make_st_pair(p);
    CHECK(oracle_kf(iso.s) - oracle_kf(iso.t) == lemma4_delta(p));
  }
}

TEST_CASE("invalid pairs") {
  CHECK_THROWS_AS(validate(STPair{path(3), 0, 0, path(3, 3), 3, 4}), InvalidPair);
  CHECK_THROWS_AS(validate(STPair{path(3), 0, 1, path(3, 2), 3, 4}), InvalidPair);
  CHECK_THROWS_AS(validate(STPair{path(3), 0, 7, path(3, 3), 3, 4}), InvalidPair);
  ResistanceNetwork split = path(2);
  split.add_vertex(2);
  CHECK_THROWS_AS(validate(STPair{split, 0, 2, path(3, 3), 3, 4}), InvalidPair);
}

TEST_CASE("splitting a chain at a square recovers it as S and its flip as T") {
  for (const auto& code : enumerate_codes(5)) {
    const auto chain = build_chain(code);
    for (int i = 1; i <= 4; ++i) {
      const auto p = split_at_square(chain, i);
      const auto iso = make_st_pair(p);
      CHECK(iso.s == chain.network);
      CHECK(iso.t == kink_flip(chain, i));
      CHECK(p.a_side.vertex_count() + p.b_side.vertex_count() == chain.network.vertex_count());
    }
  }
  CHECK_THROWS_AS(split_at_square(build_chain(ChainCode(3, {0})), 3), InvalidParameter);
}
