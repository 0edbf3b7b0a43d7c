#include "doctest.h"

#include "alex/error.hpp"
#include "alex/fox.hpp"
#include "alex/multilink.hpp"
#include "support.hpp"

using namespace alex;

namespace {

LinkingMatrix hopf_lk() { return LinkingMatrix::from_rows({{0, 1}, {1, 0}}); }

UnitClass poly(const char* s, std::size_t nv) { return canonicalize(parse_poly(s, nv)); }

}  // namespace

TEST_CASE("derived quantities") {
  const MultilinkSpec s(hopf_lk(), {2, 3});
  CHECK(s.d() == 1);
  CHECK(s.s(0) == 3);
  CHECK(s.s(1) == 2);
  CHECK(cable_data(s, 0) == CableData{1, 2, -3});
  CHECK(cable_data(s, 1) == CableData{1, 3, -2});

  const MultilinkSpec zero(hopf_lk(), {0, 0});
  CHECK(zero.is_zero());
  CHECK(cable_data(zero, 0) == CableData{0, 0, 0});

  const MultilinkSpec unlink(LinkingMatrix(2), {0, 5});
  CHECK(unlink.d_i(0) == 0);
  CHECK(unlink.d_i(1) == 5);
  CHECK(degenerate_count(unlink) == 1);
  CHECK(degenerate_count(MultilinkSpec(LinkingMatrix(3), {0, 0, 7})) == 2);
  CHECK(degenerate_count(MultilinkSpec(hopf_lk(), {1, 1})) == 0);

  const MultilinkSpec neg(hopf_lk(), {-4, 6});
  CHECK(neg.d() == 2);
  CHECK(neg.d_i(0) == 2);
  CHECK(cable_data(neg, 0) == CableData{2, -2, -3});
}

TEST_CASE("multilink polynomials") {
  CHECK(multilink_polynomial(poly("1", 2), MultilinkSpec(hopf_lk(), {1, 1})) == poly("t - 1", 1));
  CHECK(multilink_polynomial(poly("t^2 - t + 1", 1), MultilinkSpec(LinkingMatrix(1), {2})) ==
        poly("t^4 - t^2 + 1", 1));
  CHECK(multilink_polynomial(UnitClass(2), MultilinkSpec(hopf_lk(), {1, 2})).is_zero());
  CHECK(multilink_polynomial(poly("1 + t1*t2", 2), MultilinkSpec(hopf_lk(), {1, 1})) ==
        poly("t^3 - t^2 + t - 1", 1));
  CHECK_THROWS_AS(multilink_polynomial(poly("1", 2), MultilinkSpec(hopf_lk(), {0, 0})), DomainError);
  CHECK_THROWS_AS(multilink_polynomial(poly("1", 3), MultilinkSpec(hopf_lk(), {1, 1})), DomainError);
}

TEST_CASE("cable data is coprime and scaling covariant on fixtures") {
  for (const auto& f : alex::testing::braid_fixtures()) {
    const LinkInvariants inv = link_invariants(alex::testing::diagram(f));
    const std::size_t mu = inv.lk.size();
    if (mu > 3) continue;
    std::vector<std::int64_t> m(mu, -2);
    for (;;) {
      const MultilinkSpec spec(inv.lk, m);
      if (!spec.is_zero()) {
        for (std::size_t i = 0; i < mu; ++i) {
          const CableData c = cable_data(spec, i);
          if (c.d > 0) CHECK(gcd_int(c.p, c.q) == 1);
          CHECK(c.d * c.p == m[i]);
          CHECK(c.d * c.q == -spec.s(i));
        }
        const UnitClass base = multilink_polynomial(inv.delta, spec);
        if (degenerate_count(spec) > 0) CHECK(base.is_zero());
        for (std::int64_t k : {2, 3}) {
          std::vector<std::int64_t> km;
          for (auto x : m) km.push_back(k * x);
          const std::int64_t pk[] = {k};
          INFO(f.name << " scaled by " << k);
          CHECK(multilink_polynomial(inv.delta, MultilinkSpec(inv.lk, km)) ==
                canonicalize(substitute_powers(base.rep(), pk)));
        }
      }
      std::size_t j = mu;
      while (j > 0 && m[j - 1] == 2) m[--j] = -2;
      if (j == 0) break;
      ++m[j - 1];
    }
  }
}

TEST_CASE("deletion identity") {
  // Hopf, m = (1, 0): both sides are t - 1.
  const DeletionReport hopf = check_lemma7(poly("1", 2), poly("1", 1), MultilinkSpec(hopf_lk(), {1, 0}));
  CHECK(hopf.holds);
  CHECK(hopf.exponent == 1);
  CHECK(hopf.lhs == poly("t - 1", 1));

  const DeletionReport unlink = check_lemma7(UnitClass(2), poly("1", 1), MultilinkSpec(LinkingMatrix(2), {1, 0}));
  CHECK(unlink.holds);
  CHECK(unlink.exponent == 0);
  CHECK(unlink.rhs.is_zero());

  const auto t24 = LinkingMatrix::from_rows({{0, 2}, {2, 0}});
  const DeletionReport r = check_lemma7(poly("1 + t1*t2", 2), poly("1", 1), MultilinkSpec(t24, {1, 0}));
  CHECK(r.holds);
  CHECK(r.exponent == 2);
  CHECK(r.rhs == poly("t^2 - 1", 1));

  // A wrong sublink polynomial must be caught.
  CHECK_FALSE(check_lemma7(poly("1 + t1*t2", 2), poly("t^2 - t + 1", 1), MultilinkSpec(t24, {1, 0})).holds);
  CHECK_THROWS_AS(check_lemma7(poly("1", 2), poly("1", 1), MultilinkSpec(hopf_lk(), {1, 1})), DomainError);
  CHECK_THROWS_AS(check_lemma7(poly("1", 2), poly("1", 1), MultilinkSpec(hopf_lk(), {0, 0})), DomainError);
}
