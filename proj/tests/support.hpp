#pragma once

// Shared helpers for the test binaries: seeded randomness, fixtures with
// known polynomials, and oracles that avoid the code under test.

#include <cstdint>
#include <cstdlib>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "alex/fox.hpp"
#include "alex/laurent.hpp"
#include "alex/linkdiag.hpp"
#include "alex/polymatrix.hpp"

namespace alex::testing {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// ALEXPOLY_SEED when set, else the fixed default.
inline std::uint64_t seed_from_env() {
  if (const char* s = std::getenv("ALEXPOLY_SEED")) return std::strtoull(s, nullptr, 10);
  return kDefaultSeed;
}

inline std::string data_path(const std::string& name) { return std::string(ALEX_DATA_DIR) + "/" + name; }

// ---------------------------------------------------------------------------
// Random data

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Up to `terms` terms with exponents in [lo, hi] and nonzero coefficients
/// in [-max_coef, max_coef].
inline LaurentPoly random_poly(std::mt19937_64& rng, std::size_t nv, std::int64_t lo, std::int64_t hi,
                               std::int64_t max_coef, std::size_t terms) {
  LaurentPoly p(nv);
  for (std::size_t k = 0; k < terms; ++k) {
    Exponent e(nv);
    for (auto& x : e) x = uniform(rng, lo, hi);
    std::int64_t c = 0;
    while (c == 0) c = uniform(rng, -max_coef, max_coef);
    p.add_term(e, c);
  }
  return p;
}

inline LaurentPoly random_unit(std::mt19937_64& rng, std::size_t nv, std::int64_t span) {
  Exponent e(nv);
  for (auto& x : e) x = uniform(rng, -span, span);
  return LaurentPoly::monomial(nv, e, uniform(rng, 0, 1) ? 1 : -1);
}

// ---------------------------------------------------------------------------
// Evaluation oracle: p at a rational point, by direct summation.

inline mpq_class rational_pow(const mpq_class& x, std::int64_t e) {
  mpq_class r = 1;
  const mpq_class base = e >= 0 ? x : mpq_class(1) / x;
  for (std::int64_t k = 0; k < (e >= 0 ? e : -e); ++k) r *= base;
  return r;
}

inline mpq_class evaluate(const LaurentPoly& p, const std::vector<mpq_class>& point) {
  mpq_class sum = 0;
  for (const auto& [e, c] : p.terms()) {
    mpq_class term = mpq_class(c);
    for (std::size_t k = 0; k < e.size(); ++k) term *= rational_pow(point[k], e[k]);
    sum += term;
  }
  return sum;
}

inline std::vector<mpq_class> random_point(std::mt19937_64& rng, std::size_t nv) {
  std::vector<mpq_class> pt;
  for (std::size_t k = 0; k < nv; ++k) {
    std::int64_t num = 0;
    while (num == 0) num = uniform(rng, -7, 7);
    pt.emplace_back(num, uniform(rng, 1, 5));
    pt.back().canonicalize();
  }
  return pt;
}

// ---------------------------------------------------------------------------
// Fixtures

struct BraidFixture {
  std::string name;
  std::vector<int> word;
  int strands;
  /// Literature value of Δ_L in the text grammar; empty when not recorded.
  std::string expected;
  bool split = false;
};

inline const std::vector<BraidFixture>& braid_fixtures() {
  static const std::vector<BraidFixture> fixtures = {
      {"trefoil", {1, 1, 1}, 2, "t^2 - t + 1"},
      {"figure-eight", {1, -2, 1, -2}, 3, "t^2 - 3*t + 1"},
      {"cinquefoil", {1, 1, 1, 1, 1}, 2, "t^4 - t^3 + t^2 - t + 1"},
      {"hopf", {1, 1}, 2, "1"},
      {"T(2,4)", {1, 1, 1, 1}, 2, "1 + t1*t2"},
      {"negative hopf", {-1, -1}, 2, "1"},
      {"whitehead", {1, -2, 1, -2, -2}, 3, "(t1 - 1)*(t2 - 1)"},
      {"borromean", {1, -2, 1, -2, 1, -2}, 3, "(t1 - 1)*(t2 - 1)*(t3 - 1)"},
      {"3-chain", {1, 1, 2, 2}, 3, "t2 - 1"},
      {"T(3,3)", {1, 2, 1, 2, 1, 2}, 3, "t1*t2*t3 - 1"},
      {"split by cancellation", {1, -1}, 2, "0", true},
      {"hopf + unknot", {1, 1}, 3, "0", true},
      {"3-unlink", {}, 3, "0", true},
  };
  return fixtures;
}

/// Product-form expected strings are expanded by hand here, since the
/// polynomial grammar has no parentheses.
inline UnitClass expected_delta(const BraidFixture& f, std::size_t nv) {
  if (f.expected == "(t1 - 1)*(t2 - 1)")
    return canonicalize(parse_poly("t1*t2 - t1 - t2 + 1", nv));
  if (f.expected == "(t1 - 1)*(t2 - 1)*(t3 - 1)")
    return canonicalize(parse_poly("t1*t2*t3 - t1*t2 - t1*t3 - t2*t3 + t1 + t2 + t3 - 1", nv));
  return canonicalize(parse_poly(f.expected, nv));
}

inline LinkDiagram diagram(const BraidFixture& f) { return braid_closure(f.word, f.strands); }

// ---------------------------------------------------------------------------
// Oracle for the Fox path: a Wirtinger presentation with one generator per
// diagram edge (rather than per overarc) and two relators per crossing,
// over_in = over_out and under_out = o^ε·under_in·o^-ε. It presents the same
// group, so the gcd of codimension-one minors must agree.

inline GroupPresentation edge_wirtinger(const LinkDiagram& d) {
  GroupPresentation p;
  std::map<int, int> gen;  // edge label -> 1-based generator
  for (const auto& [label, comp] : d.arc_components()) {
    gen[label] = static_cast<int>(p.generator_component.size()) + 1;
    p.generator_component.push_back(comp);
  }
  for (std::size_t c = 0; c < d.num_components(); ++c)
    if (d.is_free(c)) p.generator_component.push_back(c);
  p.num_generators = p.generator_component.size();
  p.num_components = d.num_components();
  for (const Crossing& x : d.crossings()) {
    const int oi = gen.at(x.over_in), oo = gen.at(x.over_out);
    const int ui = gen.at(x.under_in), uo = gen.at(x.under_out);
    p.relators.push_back({oi, -oo});
    const int s = x.sign;
    // under_out^-1 · o^ε · under_in · o^-ε
    p.relators.push_back({-uo, s * oi, ui, -s * oi});
  }
  return p;
}

inline UnitClass edge_wirtinger_delta(const LinkDiagram& d) {
  return delta1(alexander_matrix(edge_wirtinger(d)));
}

}  // namespace alex::testing
