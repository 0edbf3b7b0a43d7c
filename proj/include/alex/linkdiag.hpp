#pragma once

// Oriented, ordered link diagrams: PD-style input, braid closures, linking
// numbers and Wirtinger presentations.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace alex {

/// One crossing of a diagram, described by the four incident edge labels.
/// An edge runs from the crossing where it is an *_out label to the
/// crossing where it is an *_in label.
struct Crossing {
  int under_in = 0;
  int over_in = 0;
  int under_out = 0;
  int over_out = 0;
  int sign = 1;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Symmetric integer matrix of pairwise linking numbers with zero diagonal.
class LinkingMatrix {
 public:
  explicit LinkingMatrix(std::size_t n = 0) : n_(n), entries_(n * n, 0) {}
  /// Validates symmetry and the zero diagonal; throws InputError.
  static LinkingMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t size() const { return n_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  /// Sets l_ij and l_ji together.
  void set(std::size_t i, std::size_t j, std::int64_t value);

  /// Restriction to the listed components, in the listed order.
  LinkingMatrix restricted(std::span<const std::size_t> keep) const;
  std::vector<std::vector<std::int64_t>> rows() const;

  friend bool operator==(const LinkingMatrix&, const LinkingMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<std::int64_t> entries_;
};

/// A validated link diagram.
///
/// Components are numbered 0..μ-1 in the input order. A component may be
/// crossingless ("free"); such components own no edge labels.
class LinkDiagram {
 public:
  /// Validates and traces the diagram. When `arc_component` is empty the
  /// traced cycles are assigned, in order of their smallest edge label, to
  /// the non-free component indices in increasing order. Throws InputError.
  static LinkDiagram build(std::vector<Crossing> crossings, std::size_t num_components,
                           std::vector<std::size_t> free_components,
                           std::map<int, std::size_t> arc_component = {});

  const std::vector<Crossing>& crossings() const { return crossings_; }
  std::size_t num_components() const { return num_components_; }
  std::size_t num_arcs() const { return arc_component_.size(); }
  const std::map<int, std::size_t>& arc_components() const { return arc_component_; }
  std::size_t component_of(int arc) const;
  bool is_free(std::size_t component) const;

  /// Edge labels of one component in traversal order starting at its
  /// smallest label; empty for a free component.
  std::vector<int> component_arcs(std::size_t component) const;

 private:
  std::vector<Crossing> crossings_;
  std::size_t num_components_ = 0;
  std::map<int, std::size_t> arc_component_;
  std::vector<bool> free_;
  std::map<int, int> successor_;
};

/// Parses the PD JSON document. Components are 1-based in the document.
LinkDiagram pd_from_json(const nlohmann::json& doc);
LinkDiagram parse_pd(std::string_view text);

/// Closure of a braid word on `strands` strands; letter k is σ_k and -k its
/// inverse. Positive letters give positive crossings.
LinkDiagram braid_closure(std::span<const int> word, int strands);
/// Parses `{"strands": n, "word": [...]}`.
LinkDiagram braid_from_json(const nlohmann::json& doc);
LinkDiagram parse_braid(std::string_view text);

nlohmann::json to_json(const LinkDiagram& d);

LinkingMatrix linking_matrix(const LinkDiagram& d);

/// The diagram of the sublink formed by `keep`, renumbered in that order.
LinkDiagram sublink(const LinkDiagram& d, std::span<const std::size_t> keep);

/// The diagram with the orientation of one component reversed.
LinkDiagram reverse_component(const LinkDiagram& d, std::size_t component);

/// Finite presentation with signed 1-based generator indices in relators.
struct GroupPresentation {
  std::size_t num_generators = 0;
  std::size_t num_components = 0;
  std::vector<std::vector<int>> relators;
  /// Component (0-based) of each generator.
  std::vector<std::size_t> generator_component;
};

/// Wirtinger presentation: one generator per overarc (edges joined through
/// over-passes) plus one per free component, one relator
/// v·o^ε·u^-1·o^-ε per crossing.
GroupPresentation wirtinger(const LinkDiagram& d);

}  // namespace alex
