#pragma once

// Multilink bookkeeping: multiplicity vectors, cable data, the one-variable
// specialization of Δ_L and the component-deletion identity.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "alex/laurent.hpp"
#include "alex/linkdiag.hpp"

namespace alex {

/// A link's linking numbers together with a multiplicity vector m.
///
/// Derived quantities: d = gcd(m) ≥ 0, s_i = Σ_{j≠i} m_j ℓ_ij and
/// d_i = gcd(m_i, s_i) ≥ 0. Multiplicities are stored as given.
class MultilinkSpec {
 public:
  MultilinkSpec(LinkingMatrix lk, std::vector<std::int64_t> m);

  std::size_t mu() const { return m_.size(); }
  const std::vector<std::int64_t>& m() const { return m_; }
  const LinkingMatrix& lk() const { return lk_; }
  std::int64_t d() const { return d_; }
  std::int64_t s(std::size_t i) const { return s_.at(i); }
  std::int64_t d_i(std::size_t i) const { return d_i_.at(i); }
  bool is_zero() const { return d_ == 0; }

 private:
  LinkingMatrix lk_;
  std::vector<std::int64_t> m_;
  std::int64_t d_ = 0;
  std::vector<std::int64_t> s_;
  std::vector<std::int64_t> d_i_;
};

/// Boundary data on the torus around L_i: the (d·p, d·q)-cable with
/// d·p = m_i and d·q = -s_i. d = 0 (and p = q = 0) when m_i = s_i = 0.
struct CableData {
  std::int64_t d = 0;
  std::int64_t p = 0;
  std::int64_t q = 0;
  friend bool operator==(const CableData&, const CableData&) = default;
};

CableData cable_data(const MultilinkSpec& spec, std::size_t i);

/// Δ_{L(m)}(t): Δ_L(t^m1) for a knot, (t^d - 1)·Δ_L(t^m1, ..., t^mμ)
/// otherwise. Throws DomainError for the zero vector or a variable-count
/// mismatch.
UnitClass multilink_polynomial(const UnitClass& delta, const MultilinkSpec& spec);

/// Number of indices with m_i = s_i = 0; positive means Δ_{L(m)} = 0.
std::size_t degenerate_count(const MultilinkSpec& spec);

/// Comparison of Δ_{L(m)} against (t^e - 1)·Δ_{L'(m')} where m_μ = 0,
/// L' drops the last component and e = Σ m_i ℓ_iμ.
struct DeletionReport {
  bool holds = false;
  UnitClass lhs;
  UnitClass rhs;
  std::int64_t exponent = 0;
};

/// `delta` is Δ_L (μ variables), `delta_sub` is Δ_{L'} (μ-1 variables).
DeletionReport check_lemma7(const UnitClass& delta, const UnitClass& delta_sub, const MultilinkSpec& spec);

}  // namespace alex
