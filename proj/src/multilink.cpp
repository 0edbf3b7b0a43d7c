#include "alex/multilink.hpp"

#include "alex/error.hpp"

namespace alex {

MultilinkSpec::MultilinkSpec(LinkingMatrix lk, std::vector<std::int64_t> m) : lk_(std::move(lk)), m_(std::move(m)) {
  if (m_.empty()) throw DomainError("multiplicity vector is empty");
  if (lk_.size() != m_.size()) throw DomainError("multiplicity vector length differs from the number of components");
  for (std::int64_t mi : m_) d_ = gcd_int(d_, mi);
  s_.assign(m_.size(), 0);
  d_i_.assign(m_.size(), 0);
  for (std::size_t i = 0; i < m_.size(); ++i) {
    for (std::size_t j = 0; j < m_.size(); ++j)
      if (j != i) s_[i] += m_[j] * lk_(i, j);
    d_i_[i] = gcd_int(m_[i], s_[i]);
  }
}

CableData cable_data(const MultilinkSpec& spec, std::size_t i) {
  if (i >= spec.mu()) throw DomainError("cable_data: component out of range");
  const std::int64_t d = spec.d_i(i);
  if (d == 0) return {};
  return {d, spec.m()[i] / d, -spec.s(i) / d};
}

UnitClass multilink_polynomial(const UnitClass& delta, const MultilinkSpec& spec) {
  if (spec.is_zero()) throw DomainError("multilink polynomial needs a nonzero multiplicity vector");
  if (delta.num_vars() != spec.mu()) throw DomainError("polynomial variable count differs from the number of components");
  LaurentPoly p = substitute_powers(delta.rep(), spec.m());
  if (spec.mu() >= 2) p *= LaurentPoly::power_minus_one(spec.d());
  return canonicalize(p);
}

std::size_t degenerate_count(const MultilinkSpec& spec) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < spec.mu(); ++i)
    if (spec.m()[i] == 0 && spec.s(i) == 0) ++r;
  return r;
}

DeletionReport check_lemma7(const UnitClass& delta, const UnitClass& delta_sub, const MultilinkSpec& spec) {
  const std::size_t mu = spec.mu();
  if (mu < 2) throw DomainError("check_lemma7 needs at least two components");
  if (delta.num_vars() != mu || delta_sub.num_vars() != mu - 1)
    throw DomainError("check_lemma7: polynomial variable counts do not match the link");
  if (spec.m()[mu - 1] != 0) throw DomainError("check_lemma7 needs m_mu = 0");

  std::vector<std::size_t> keep(mu - 1);
  for (std::size_t i = 0; i + 1 < mu; ++i) keep[i] = i;
  std::vector<std::int64_t> m_sub(spec.m().begin(), spec.m().end() - 1);
  MultilinkSpec sub(spec.lk().restricted(keep), m_sub);
  if (sub.is_zero()) throw DomainError("check_lemma7 needs m' != 0");

  DeletionReport r;
  for (std::size_t i = 0; i + 1 < mu; ++i) r.exponent += spec.m()[i] * spec.lk()(i, mu - 1);
  r.lhs = multilink_polynomial(delta, spec);
  r.rhs = canonicalize(LaurentPoly::power_minus_one(r.exponent) * multilink_polynomial(delta_sub, sub).rep());
  r.holds = r.lhs == r.rhs;
  return r;
}

}  // namespace alex
