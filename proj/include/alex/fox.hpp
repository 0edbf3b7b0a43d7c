#pragma once

// Fox free differential calculus, Alexander matrices and the first
// Alexander polynomial as a gcd of codimension-one minors.

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "alex/laurent.hpp"
#include "alex/linkdiag.hpp"
#include "alex/polymatrix.hpp"

namespace alex {

/// ∂word/∂x_generator under abelianization x_g ↦ t_{component(g)}.
/// `word` uses signed 1-based generator indices; `generator` is 0-based.
LaurentPoly fox_derivative(std::span<const int> word, std::size_t generator,
                           std::span<const std::size_t> generator_component, std::size_t num_vars);

/// Relators × generators matrix of abelianized Fox derivatives.
struct AlexanderMatrix {
  PolyMatrix entries;
  std::vector<std::size_t> generator_component;
  std::size_t num_vars = 1;
};

AlexanderMatrix alexander_matrix(const GroupPresentation& p);

/// Σ_j entries(row, j)·(t_{c(j)} - 1); zero for every row of a genuine
/// Alexander matrix.
LaurentPoly row_identity_residual(const AlexanderMatrix& m, std::size_t row);

/// gcd of all (n-1)×(n-1) minors, n = number of columns. Zero when there
/// are fewer than n-1 rows.
UnitClass delta1(const AlexanderMatrix& m);

/// Per-column check that deleting column j leaves a determinant
/// (t_{c(j)} - 1)·Δ* with one common Δ*.
struct DeltaStarReport {
  bool holds = false;
  /// Δ* candidate from each column; nullopt where the division failed.
  std::vector<std::optional<UnitClass>> quotients;
  std::optional<UnitClass> delta_star;
  std::string diagnostic;
};

/// Requires at least two variables; uses the first n-1 rows.
DeltaStarReport delta_star_check(const AlexanderMatrix& m);

/// Δ_L straight from a diagram.
UnitClass alexander_polynomial(const LinkDiagram& d);

/// Δ_L together with the linking numbers.
struct LinkInvariants {
  UnitClass delta;
  LinkingMatrix lk;
};

LinkInvariants link_invariants(const LinkDiagram& d);

/// Memoized invariants of the sublinks of one diagram, keyed by the ordered
/// list of kept components. Safe to share between threads.
class SublinkTable {
 public:
  explicit SublinkTable(LinkDiagram d) : diagram_(std::move(d)) {}

  const LinkDiagram& diagram() const { return diagram_; }
  LinkInvariants operator()(std::span<const std::size_t> keep) const;
  /// The whole link.
  LinkInvariants full() const;

 private:
  LinkDiagram diagram_;
  mutable std::mutex mutex_;
  mutable std::map<std::vector<std::size_t>, LinkInvariants> cache_;
};

}  // namespace alex
