#pragma once

// Seifert-matrix route to the one-variable multilink polynomial.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "alex/laurent.hpp"
#include "alex/polymatrix.hpp"
#include "json.hpp"

namespace alex {

/// Matrices A+ and A- of the two Seifert pairings H1(F) × H1(F̄) → Z, of
/// common shape n × (n + r) with r ≥ 0. `mu` and `m` record which multilink
/// the pair belongs to and are not used by the computations.
class SeifertPair {
 public:
  SeifertPair() = default;
  /// Throws InputError on a shape mismatch or more rows than columns.
  SeifertPair(IntMatrix a_plus, IntMatrix a_minus, std::size_t mu = 0, std::vector<std::int64_t> m = {});

  const IntMatrix& a_plus() const { return a_plus_; }
  const IntMatrix& a_minus() const { return a_minus_; }
  std::size_t rank() const { return a_plus_.rows(); }
  /// r = rk H1(F̄) - rk H1(F).
  std::size_t excess() const { return a_plus_.cols() - a_plus_.rows(); }
  std::size_t mu() const { return mu_; }
  const std::vector<std::int64_t>& m() const { return m_; }

 private:
  IntMatrix a_plus_;
  IntMatrix a_minus_;
  std::size_t mu_ = 0;
  std::vector<std::int64_t> m_;
};

/// Reads `{"mu": μ, "m": [...], "a_plus": [[...]], "a_minus": [[...]]}`.
SeifertPair seifert_pair_from_json(const nlohmann::json& doc);
SeifertPair parse_seifert_pair(std::string_view text);

/// A+ - t·A-, one variable.
PolyMatrix presentation_matrix(const SeifertPair& sp);

/// det(A+ - t·A-) up to units; zero when the pair is not square.
UnitClass delta_from_seifert(const SeifertPair& sp);

/// Appends `discs` new generators to a square pair: A+ gains an identity
/// block, A- the cyclic shift (ones below the diagonal and in the top right
/// corner), upper-right blocks are zero and the lower-left block is
/// `lower_left` (zero when absent, otherwise discs × n).
SeifertPair add_disc_block(const SeifertPair& sp, std::int64_t discs,
                           const std::optional<IntMatrix>& lower_left = std::nullopt);

/// det of the enlarged pair; equals (t^discs - 1)·det(A'+ - t·A'-) up to units.
UnitClass lemma7_block_determinant(const SeifertPair& sp, std::int64_t discs,
                                   const std::optional<IntMatrix>& lower_left = std::nullopt);

}  // namespace alex
