#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "phenylene/chain.hpp"
#include "phenylene/chain_circuit.hpp"
#include "phenylene/extremal.hpp"
#include "phenylene/laplacian.hpp"
#include "phenylene/st_isomer.hpp"

namespace phenylene {

// Edge lists: one "u v p/q" per line (the resistance may be omitted for a
// unit resistor); blank lines and lines starting with '#' are skipped.
ResistanceNetwork parse_edge_list(std::istream& in);
ResistanceNetwork parse_edge_list(std::string_view text);
std::string to_edge_list(const ResistanceNetwork& net);

std::string to_dot(const ResistanceNetwork& net);
/// Vertices carry hexagon indices and square-corner labels (a_i, b_i, k_i, l_i).
std::string to_dot(const LabeledChain& chain);

/// {"order": [...], "r": [["p/q", ...], ...]}
std::string matrix_json(const ResistanceMatrix& m);

/// Columns n,code,canonical,kf_num,kf_den,is_all_kink,is_min,is_max and,
/// with `approx`, a trailing kf_approx.
std::string extrema_csv(const ExtremaTable& table, bool approx = false);

std::string kf_json(const KfReport& report, bool approx = false);
std::string trace_text(const ReductionTrace& trace);
std::string reduction_json(const ChainReduction& reduction);

/// {"kf_s", "kf_t", "lhs", "rhs", "pass"}
std::string lemma4_json(const Lemma4Report& report);
std::string conjecture_json(const ConjectureReport& report);
std::string theorem1_json(const Theorem1Report& report);
std::string kink_flip_json(const KinkFlipReport& report);
std::string lemma5_json(const Lemma5Report& report);
std::string lemma6_json(const Lemma6Report& report);
std::string hexagon_json(const HexagonReport& report);

}  // namespace phenylene
