#include "doctest.h"

#include <fstream>
#include <sstream>

#include "alex/error.hpp"
#include "alex/linkdiag.hpp"
#include "support.hpp"

using namespace alex;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Hopf link drawn by hand: arcs 1,2 form component 1 and arcs 3,4 component 2.
const char* kHopf = R"({"components": 2, "crossings": [
  {"under_in": 1, "over_in": 3, "under_out": 2, "over_out": 4, "sign": 1},
  {"under_in": 4, "over_in": 2, "under_out": 3, "over_out": 1, "sign": 1}]})";

std::string error_of(const std::string& text) {
  try {
    parse_pd(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("hand-drawn Hopf link") {
  const LinkDiagram d = parse_pd(kHopf);
  CHECK(d.num_components() == 2);
  CHECK(d.num_arcs() == 4);
  CHECK(d.component_arcs(0) == std::vector<int>{1, 2});
  CHECK(d.component_arcs(1) == std::vector<int>{3, 4});
  CHECK(linking_matrix(d) == LinkingMatrix::from_rows({{0, 1}, {1, 0}}));
  CHECK(parse_pd(read_file(alex::testing::data_path("hopf.json"))).crossings() == d.crossings());
}

TEST_CASE("free components and the split unlink file") {
  const LinkDiagram d = parse_pd(read_file(alex::testing::data_path("unlink2.json")));
  CHECK(d.num_components() == 2);
  CHECK(d.is_free(0));
  CHECK(d.is_free(1));
  CHECK(d.num_arcs() == 0);
  CHECK(linking_matrix(d) == LinkingMatrix(2));
}

TEST_CASE("explicit arc-to-component map reorders components") {
  const LinkDiagram d = parse_pd(R"({"components": 2, "crossings": [
    {"under_in": 1, "over_in": 3, "under_out": 2, "over_out": 4, "sign": 1},
    {"under_in": 4, "over_in": 2, "under_out": 3, "over_out": 1, "sign": 1}],
    "component_of_arc": {"1": 2, "2": 2, "3": 1, "4": 1}})");
  CHECK(d.component_of(1) == 1);
  CHECK(d.component_of(3) == 0);
}

TEST_CASE("diagnostics name the offending arc or crossing") {
  CHECK(error_of(R"({"components": 1, "crossings": [{"under_in": 1, "over_in": 2, "under_out": 2, "sign": 1}]})")
            .find("crossing #1: missing field \"over_out\"") != std::string::npos);
  CHECK(error_of(R"({"components": 1, "crossings": [
      {"under_in": 1, "over_in": 2, "under_out": 3, "over_out": 1, "sign": 1}]})")
            .find("arc 2 is dangling") != std::string::npos);
  CHECK(error_of(R"({"components": 1, "crossings": [
      {"under_in": 1, "over_in": 2, "under_out": 2, "over_out": 1, "sign": 0}]})")
            .find("crossing #1: sign") != std::string::npos);
  CHECK(error_of(R"({"components": 1, "crossings": [
      {"under_in": 1, "over_in": 2, "under_out": 1, "over_out": 2, "sign": 1}]})")
            .find("under_in equals under_out") != std::string::npos);
  CHECK(error_of(R"({"components": 1, "crossings": [
      {"under_in": -1, "over_in": 2, "under_out": 2, "over_out": -1, "sign": 1}]})")
            .find("not positive") != std::string::npos);
  CHECK(error_of(kHopf).empty());
  // Hopf diagram but claiming a single component.
  std::string one = kHopf;
  one.replace(one.find("2,"), 1, "1");
  CHECK(error_of(one).find("closed components") != std::string::npos);
  CHECK(error_of("{not json").find("malformed JSON") != std::string::npos);
  CHECK(error_of(R"({"crossings": []})").find("components") != std::string::npos);
}

TEST_CASE("braid closures") {
  const LinkDiagram trefoil = parse_braid(R"({"strands": 2, "word": [1, 1, 1]})");
  CHECK(trefoil.num_components() == 1);
  CHECK(trefoil.crossings().size() == 3);
  for (const auto& x : trefoil.crossings()) CHECK(x.sign == 1);

  const LinkDiagram t24 = braid_closure(std::vector<int>{1, 1, 1, 1}, 2);
  CHECK(t24.num_components() == 2);
  CHECK(linking_matrix(t24) == LinkingMatrix::from_rows({{0, 2}, {2, 0}}));

  const LinkDiagram neg = braid_closure(std::vector<int>{-1, -1}, 2);
  CHECK(linking_matrix(neg) == LinkingMatrix::from_rows({{0, -1}, {-1, 0}}));

  const LinkDiagram extra = braid_closure(std::vector<int>{1, 1}, 3);
  CHECK(extra.num_components() == 3);
  CHECK(extra.is_free(2));

  CHECK(braid_closure(std::vector<int>{}, 2).num_components() == 2);
  CHECK_THROWS_AS(braid_closure(std::vector<int>{2}, 2), InputError);
  CHECK_THROWS_AS(braid_closure(std::vector<int>{0}, 2), InputError);
  CHECK_THROWS_AS(parse_braid(R"({"strands": 2})"), InputError);

  // Round trip through the PD serializer.
  const LinkDiagram borromean = braid_closure(std::vector<int>{1, -2, 1, -2, 1, -2}, 3);
  const LinkDiagram again = pd_from_json(to_json(borromean));
  CHECK(again.crossings() == borromean.crossings());
  CHECK(linking_matrix(again) == linking_matrix(borromean));
}

TEST_CASE("linking matrices of fixtures") {
  CHECK(linking_matrix(braid_closure(std::vector<int>{1, -2, 1, -2, 1, -2}, 3)) == LinkingMatrix(3));
  CHECK(linking_matrix(braid_closure(std::vector<int>{1, 2, 1, 2, 1, 2}, 3)) ==
        LinkingMatrix::from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
  CHECK(linking_matrix(braid_closure(std::vector<int>{1, 1, 2, 2}, 3)) ==
        LinkingMatrix::from_rows({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}}));
  CHECK_THROWS_AS(LinkingMatrix::from_rows({{0, 1}, {2, 0}}), InputError);
  CHECK_THROWS_AS(LinkingMatrix::from_rows({{1}}), InputError);
}

TEST_CASE("sublinks and reversal") {
  const LinkDiagram chain = braid_closure(std::vector<int>{1, 1, 2, 2}, 3);
  const std::size_t ends[] = {2, 0};
  const LinkDiagram sub = sublink(chain, ends);
  CHECK(sub.num_components() == 2);
  CHECK(linking_matrix(sub) == LinkingMatrix(2));
  const std::size_t middle[] = {1, 2};
  CHECK(linking_matrix(sublink(chain, middle)) == LinkingMatrix::from_rows({{0, 1}, {1, 0}}));
  const std::size_t single[] = {1};
  const LinkDiagram knot = sublink(chain, single);
  CHECK(knot.num_components() == 1);
  CHECK(knot.crossings().empty());
  CHECK(knot.is_free(0));

  const LinkDiagram rev = reverse_component(chain, 0);
  CHECK(linking_matrix(rev) == LinkingMatrix::from_rows({{0, -1, 0}, {-1, 0, 1}, {0, 1, 0}}));
  CHECK(linking_matrix(reverse_component(rev, 0)) == linking_matrix(chain));
}

TEST_CASE("Wirtinger presentations use overarc generators") {
  const GroupPresentation trefoil = wirtinger(braid_closure(std::vector<int>{1, 1, 1}, 2));
  CHECK(trefoil.num_generators == 3);
  CHECK(trefoil.relators.size() == 3);
  const GroupPresentation hopf = wirtinger(parse_pd(kHopf));
  CHECK(hopf.num_generators == 2);
  CHECK(hopf.relators.size() == 2);
  CHECK(hopf.generator_component == std::vector<std::size_t>{0, 1});
  const GroupPresentation unlink = wirtinger(braid_closure(std::vector<int>{}, 3));
  CHECK(unlink.num_generators == 3);
  CHECK(unlink.relators.empty());
  for (const auto& r : trefoil.relators) CHECK(r.size() == 4);
}
