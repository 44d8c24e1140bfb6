#pragma once

#include "phenylene/chain.hpp"
#include "phenylene/network.hpp"

namespace phenylene {

/// Two vertex-disjoint connected components with marked vertices (a, l) in A
/// and (b, k) in B.
struct STPair {
  ResistanceNetwork a_side;
  VertexId a;
  VertexId l;
  ResistanceNetwork b_side;
  VertexId b;
  VertexId k;
};

struct STIsomers {
  ResistanceNetwork s;  // A + B + {ab, lk}
  ResistanceNetwork t;  // A + B + {ak, bl}
};

/// Throws InvalidPair when the marked vertices coincide, are missing, or the
/// components overlap or are disconnected.
void validate(const STPair& pair);

/// Both bridging edges have unit resistance.
STIsomers make_st_pair(const STPair& pair);

/// [r_A(l) - r_A(a)] [r_B(b) - r_B(k)] / (r_A(a,l) + r_B(b,k) + 2), evaluated
/// inside A and B only.
Rational lemma4_delta(const STPair& pair);

struct Lemma4Report {
  Rational kf_s;
  Rational kf_t;
  Rational lhs;  // Kf(S) - Kf(T)
  Rational rhs;  // closed form
  bool pass;
};

Lemma4Report verify_lemma4(const STPair& pair);

/// Splits a chain at square i (1-based) into the component holding a_i and
/// the component holding b_i after removing a_i b_i and l_i k_i. The chain
/// itself is then the S isomer and its kink-flip the T isomer.
STPair split_at_square(const LabeledChain& chain, int i);

}  // namespace phenylene
