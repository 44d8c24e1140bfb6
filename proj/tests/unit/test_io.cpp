#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "phenylene/errors.hpp"
#include "phenylene/io.hpp"

using namespace phenylene;

TEST_CASE("edge lists round-trip") {
  const auto net = parse_edge_list(
      "# triangle\n"
      "0 1 1/2\n"
      "\n"
      "1 2\n"
      "2 0 3\n");
  CHECK(net.vertex_count() == 3);
  CHECK(net.edge_count() == 3);
  CHECK(net.edges()[0].resistance == Rational(1, 2));
  CHECK(net.edges()[1].resistance == Rational(1));
  CHECK(parse_edge_list(to_edge_list(net)) == net);
}

TEST_CASE("malformed edge lists") {
  CHECK_THROWS_AS(parse_edge_list("0\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0 x 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0 1 1/0\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0 1 -2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0 1 1 9\n"), ParseError);
}

TEST_CASE("dot export labels chain corners") {
  const auto dot = to_dot(build_chain(ChainCode(3, {0})));
  CHECK(dot.rfind("graph", 0) == 0);
  CHECK(dot.find("corner=\"a1\"") != std::string::npos);
  CHECK(dot.find("corner=\"k2\"") != std::string::npos);
  CHECK(dot.find("--") != std::string::npos);
}

TEST_CASE("matrix json") {
  ResistanceNetwork net;
  net.add_edge(0, 1, Rational(2));
  const auto j = nlohmann::json::parse(matrix_json(resistance_matrix(net)));
  CHECK(j["order"] == nlohmann::json::array({0, 1}));
  CHECK(j["r"][0][1] == "2");
  CHECK(j["r"][1][1] == "0");
}

TEST_CASE("extrema csv") {
  const auto csv = extrema_csv(find_extrema(4));
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "n,code,canonical,kf_num,kf_den,is_all_kink,is_min,is_max");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 9);
  CHECK(csv.find("4,00,00,1793378,2651,true,true,false") != std::string::npos);
  CHECK(extrema_csv(find_extrema(3), true).find(",kf_approx") != std::string::npos);
}

TEST_CASE("S,T report json keys") {
  ResistanceNetwork a, b;
  a.add_edge(0, 1, Rational(1));
  a.add_edge(1, 2, Rational(1));
  b.add_edge(3, 4, Rational(1));
  b.add_edge(4, 5, Rational(1));
  const auto j = nlohmann::json::parse(lemma4_json(verify_lemma4(STPair{a, 0, 1, b, 3, 4})));
  CHECK(j["kf_s"] == "83/4");
  CHECK(j["kf_t"] == "21");
  CHECK(j["lhs"] == "-1/4");
  CHECK(j["rhs"] == "-1/4");
  CHECK(j["pass"] == true);
}
