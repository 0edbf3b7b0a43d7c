#include "doctest.h"

#include "alex/fox.hpp"
#include "support.hpp"

using namespace alex;
using alex::testing::braid_fixtures;
using alex::testing::expected_delta;

TEST_CASE("Fox derivatives of short words") {
  const std::vector<std::size_t> one_var = {0, 0};
  const std::vector<std::size_t> two_var = {0, 1};
  const int word[] = {1, 2, -1};
  CHECK(fox_derivative(word, 0, one_var, 1) == parse_poly("1 - t", 1));
  CHECK(fox_derivative(word, 1, one_var, 1) == parse_poly("t", 1));
  CHECK(fox_derivative(word, 0, two_var, 2) == parse_poly("1 - t2", 2));
  CHECK(fox_derivative(word, 1, two_var, 2) == parse_poly("t1", 2));
  const int inverse[] = {-1};
  CHECK(fox_derivative(inverse, 0, one_var, 1) == parse_poly("-t^-1", 1));
  const int square[] = {2, 2};
  CHECK(fox_derivative(square, 1, two_var, 2) == parse_poly("1 + t2", 2));
  CHECK(fox_derivative(square, 0, two_var, 2).is_zero());
}

TEST_CASE("fundamental formula: rows of the Alexander matrix") {
  for (const auto& f : braid_fixtures()) {
    const AlexanderMatrix m = alexander_matrix(wirtinger(alex::testing::diagram(f)));
    for (std::size_t r = 0; r < m.entries.rows(); ++r) {
      INFO(f.name << " row " << r);
      CHECK(row_identity_residual(m, r).is_zero());
    }
  }
}

TEST_CASE("fixture polynomials agree with recorded values") {
  for (const auto& f : braid_fixtures()) {
    const LinkDiagram d = alex::testing::diagram(f);
    const UnitClass delta = alexander_polynomial(d);
    INFO(f.name << ": " << to_string(delta));
    CHECK(delta == expected_delta(f, d.num_components()));
    CHECK(delta.is_zero() == f.split);
  }
  CHECK(alexander_polynomial(parse_pd(R"({"components": 2, "crossings": [
      {"under_in": 1, "over_in": 3, "under_out": 2, "over_out": 4, "sign": 1},
      {"under_in": 4, "over_in": 2, "under_out": 3, "over_out": 1, "sign": 1}]})")) ==
        canonicalize(LaurentPoly::constant(2, 1)));
}

TEST_CASE("overarc and edge presentations give the same polynomial") {
  for (const auto& f : braid_fixtures()) {
    const LinkDiagram d = alex::testing::diagram(f);
    INFO(f.name);
    CHECK(alexander_polynomial(d) == alex::testing::edge_wirtinger_delta(d));
  }
  std::mt19937_64 rng(alex::testing::seed_from_env());
  for (int iter = 0; iter < 25; ++iter) {
    const int strands = 2 + iter % 2;
    std::vector<int> word;
    const int len = static_cast<int>(alex::testing::uniform(rng, 1, 6));
    for (int k = 0; k < len; ++k) {
      const int letter = static_cast<int>(alex::testing::uniform(rng, 1, strands - 1));
      word.push_back(alex::testing::uniform(rng, 0, 1) ? letter : -letter);
    }
    const LinkDiagram d = braid_closure(word, strands);
    INFO("word of length " << word.size() << " on " << strands << " strands, iteration " << iter);
    CHECK(alexander_polynomial(d) == alex::testing::edge_wirtinger_delta(d));
  }
}

TEST_CASE("knot polynomials are symmetric and evaluate to one") {
  for (const auto& f : braid_fixtures()) {
    const LinkDiagram d = alex::testing::diagram(f);
    if (d.num_components() != 1) continue;
    const UnitClass delta = alexander_polynomial(d);
    CHECK(canonicalize(involution(delta.rep())) == delta);
    CHECK(abs(value_at_one(delta.rep())) == 1);
  }
}

TEST_CASE("delta1 with too few rows is zero") {
  AlexanderMatrix m;
  m.num_vars = 1;
  m.generator_component = {0, 0, 0};
  m.entries = PolyMatrix(1, 3, LaurentPoly(1));
  CHECK(delta1(m).is_zero());
}

TEST_CASE("column deletion factors through t_j - 1") {
  for (const auto& f : braid_fixtures()) {
    const LinkDiagram d = alex::testing::diagram(f);
    if (d.num_components() < 2) continue;
    const DeltaStarReport r = delta_star_check(alexander_matrix(wirtinger(d)));
    INFO(f.name << ": " << r.diagnostic);
    CHECK(r.holds);
    REQUIRE(r.delta_star);
    CHECK(*r.delta_star == alexander_polynomial(d));
  }
  // Hopf: deleting either column leaves ±(t_j - 1).
  const DeltaStarReport hopf = delta_star_check(alexander_matrix(wirtinger(braid_closure(std::vector<int>{1, 1}, 2))));
  CHECK(hopf.quotients.size() == 2);
  CHECK(hopf.delta_star->is_unit());
}

TEST_CASE("sublink table is memoized and ordered") {
  const SublinkTable table(braid_closure(std::vector<int>{1, 1, 2, 2}, 3));
  const std::size_t outer[] = {0, 2};
  const auto a = table(outer);
  CHECK(a.delta.is_zero());
  CHECK(a.lk == LinkingMatrix(2));
  const std::size_t reversed[] = {2, 1, 0};
  const auto full = table.full();
  const auto perm = table(reversed);
  CHECK(perm.delta == canonicalize(permute_vars(full.delta.rep(), reversed)));
  CHECK(perm.lk == full.lk.restricted(reversed));
  const std::size_t hopf[] = {0, 1};
  CHECK(table(hopf).delta.is_unit());
}
