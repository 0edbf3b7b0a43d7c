#pragma once

// Necessary conditions on link polynomials (Torres formula, Torres–Fox
// symmetry, the multilink conditions on ∇) and reconstruction of a
// multivariable polynomial from its one-variable specializations.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "alex/fox.hpp"
#include "alex/laurent.hpp"
#include "alex/linkdiag.hpp"
#include "alex/polymatrix.hpp"
#include "json.hpp"

namespace alex {

enum class Verdict { pass, fail, not_applicable, missing_input };

std::string_view to_string(Verdict v);

// ---------------------------------------------------------------------------
// Torres formula

struct TorresReport {
  bool holds = false;
  /// Δ_L(t1, ..., t_{μ-1}, 1) and the predicted value, μ-1 variables.
  UnitClass lhs;
  UnitClass rhs;
  bool two_component = false;
  std::vector<std::string> details;
};

/// Compares Δ_L at t_μ = 1 with the prediction from the sublink L' = L - L_μ:
/// (t1^ℓ12 - 1)/(t1 - 1)·Δ_L' for μ = 2, (t1^ℓ1μ ⋯ t_{μ-1}^ℓ_{μ-1,μ} - 1)·Δ_L'
/// for μ > 2.
TorresReport check_torres_formula(const UnitClass& delta, const UnitClass& delta_sub, const LinkingMatrix& lk);

// ---------------------------------------------------------------------------
// Torres–Fox symmetry

struct SymmetryReport {
  bool holds = false;
  bool parity_ok = false;
  /// ν_i of Δ(t^-1) = (-1)^μ t1^(ν1-1) ⋯ tμ^(νμ-1) Δ(t) for the canonical
  /// representative; empty when Δ = 0.
  std::vector<std::int64_t> nu;
};

SymmetryReport check_torres_fox(const UnitClass& delta, const LinkingMatrix& lk);

// ---------------------------------------------------------------------------
// Multilink conditions on ∇_{L(m)}

/// μ×μ matrix with m_i m_j ℓ_ij off the diagonal and zero row sums.
IntMatrix multiplicity_laplacian(const LinkingMatrix& lk, std::span<const std::int64_t> m);

/// Cofactor of the last diagonal entry of multiplicity_laplacian. Checks that
/// all μ² signed cofactors agree and throws MathError otherwise.
Integer laplacian_minor(const LinkingMatrix& lk, std::span<const std::int64_t> m);

/// Invariants of the sublink on the listed components (indices into the
/// original link, in the listed order), or nullopt when unknown.
using SublinkSource = std::function<std::optional<LinkInvariants>(std::span<const std::size_t> keep)>;

/// Adapts a SublinkTable.
SublinkSource sublink_source(const SublinkTable& table);

struct Prop8Report {
  std::vector<std::int64_t> m;
  std::int64_t d = 0;
  std::vector<std::int64_t> d_i;
  /// Symmetric representative when one exists, else the raw quotient.
  /// Absent iff condition (i) fails.
  std::optional<LaurentPoly> nabla;
  /// ∇ is not pinned down by (i) (some d_i = 0) and was taken from a sublink.
  bool nabla_from_sublink = false;
  Verdict cond_i = Verdict::fail;
  Verdict cond_ii = Verdict::fail;
  Verdict cond_iii = Verdict::not_applicable;
  Verdict cond_iv = Verdict::not_applicable;
  /// Laplacian cofactor, computed when every m_i is nonzero.
  std::optional<Integer> D;
  std::vector<std::string> notes;

  /// No condition failed or lacked input.
  bool holds() const;
};

/// Checks the four conditions for one nonzero multiplicity vector. `sublinks`
/// supplies the polynomials that condition (iv) recurses into.
Prop8Report check_prop8(const LinkInvariants& link, std::span<const std::int64_t> m,
                        const SublinkSource& sublinks = {});

/// Sweeps every nonzero m in [-bound, bound]^μ, in lexicographic order.
std::vector<Prop8Report> sweep_prop8(const LinkInvariants& link, std::int64_t bound,
                                     const SublinkSource& sublinks = {});

/// The representative p·(±t^k) with p(t^-1) = p(t), if any.
std::optional<LaurentPoly> symmetric_representative(const LaurentPoly& p);

// ---------------------------------------------------------------------------
// Reconstruction from specializations

/// Returns Δ(t^m1, ..., t^mμ) up to units for a fixed unknown Δ.
using SpecializationOracle = std::function<LaurentPoly(std::span<const std::int64_t> m)>;

/// Recovers canonicalize(Δ) from one specialization, assuming every
/// variable's degree spread in Δ is at most `bound`. Queries
/// m = (1, N, ..., N^(μ-1)) with N = 2·bound + 1 and decodes exponent
/// differences in balanced base N, so any unit multiple of the answer works.
UnitClass reconstruct_from_specializations(const SpecializationOracle& oracle, std::size_t mu, std::int64_t bound);

/// Wraps an oracle that answers with multilink polynomials Δ_{L(m)} so that
/// it answers Δ_L(t^m) instead (divides out t^gcd(m) - 1 when μ ≥ 2).
SpecializationOracle from_multilink_oracle(SpecializationOracle oracle, std::size_t mu);

// ---------------------------------------------------------------------------
// JSON

nlohmann::json to_json(const TorresReport& r);
nlohmann::json to_json(const SymmetryReport& r);
nlohmann::json to_json(const Prop8Report& r);

}  // namespace alex
