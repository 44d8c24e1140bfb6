#pragma once

// JSON building blocks shared by io.cpp and the command-line driver.

#include <vector>

#include <json.hpp>

#include "phenylene/io.hpp"

namespace phenylene {

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const ChainCode& c);
nlohmann::json to_json(const std::vector<ChainCode>& codes);
nlohmann::json edges_json(const ResistanceNetwork& net);
nlohmann::json step_json(const ReductionStep& step);
nlohmann::json lemma4_object(const Lemma4Report& report);
nlohmann::json flip_instance_json(const KinkFlipInstance& inst);
nlohmann::json lemma5_object(const Lemma5Report& report);
nlohmann::json lemma6_object(const Lemma6Report& report);
nlohmann::json hexagon_object(const HexagonReport& report);

}  // namespace phenylene
