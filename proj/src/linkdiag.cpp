#include "alex/linkdiag.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "alex/error.hpp"

namespace alex {

using nlohmann::json;

namespace {

std::string crossing_name(std::size_t idx) { return "crossing #" + std::to_string(idx + 1); }

/// Union-find over positive integer labels.
class LabelUnion {
 public:
  int find(int x) {
    auto it = parent_.find(x);
    if (it == parent_.end()) {
      parent_.emplace(x, x);
      return x;
    }
    if (it->second == x) return x;
    const int root = find(it->second);
    parent_[x] = root;
    return root;
  }
  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    // Smaller label becomes the root so representatives are minimal labels.
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::map<int, int> parent_;
};

}  // namespace

// ---------------------------------------------------------------------------
// LinkingMatrix

LinkingMatrix LinkingMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  LinkingMatrix lk(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw InputError("linking matrix must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) lk.entries_[i * lk.n_ + j] = rows[i][j];
  }
  for (std::size_t i = 0; i < lk.n_; ++i) {
    if (lk(i, i) != 0) throw InputError("linking matrix must have a zero diagonal");
    for (std::size_t j = 0; j < i; ++j)
      if (lk(i, j) != lk(j, i)) throw InputError("linking matrix must be symmetric");
  }
  return lk;
}

void LinkingMatrix::set(std::size_t i, std::size_t j, std::int64_t value) {
  if (i == j) throw DomainError("linking matrix diagonal is fixed at zero");
  entries_[i * n_ + j] = value;
  entries_[j * n_ + i] = value;
}

LinkingMatrix LinkingMatrix::restricted(std::span<const std::size_t> keep) const {
  LinkingMatrix out(keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b) out.entries_[a * out.n_ + b] = (*this)(keep[a], keep[b]);
  return out;
}

std::vector<std::vector<std::int64_t>> LinkingMatrix::rows() const {
  std::vector<std::vector<std::int64_t>> r(n_, std::vector<std::int64_t>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r[i][j] = (*this)(i, j);
  return r;
}

// ---------------------------------------------------------------------------
// LinkDiagram

LinkDiagram LinkDiagram::build(std::vector<Crossing> crossings, std::size_t num_components,
                               std::vector<std::size_t> free_components,
                               std::map<int, std::size_t> arc_component) {
  if (num_components == 0) throw InputError("a link needs at least one component");

  LinkDiagram d;
  d.num_components_ = num_components;
  d.free_.assign(num_components, false);
  for (std::size_t c : free_components) {
    if (c >= num_components) throw InputError("free component " + std::to_string(c + 1) + " out of range");
    if (d.free_[c]) throw InputError("free component " + std::to_string(c + 1) + " listed twice");
    d.free_[c] = true;
  }

  std::map<int, std::size_t> in_at, out_at;
  auto record = [](std::map<int, std::size_t>& where, int label, std::size_t idx, const char* role) {
    if (label <= 0) throw InputError(crossing_name(idx) + ": arc label " + std::to_string(label) + " is not positive");
    auto [it, inserted] = where.emplace(label, idx);
    if (!inserted)
      throw InputError("arc " + std::to_string(label) + " ends at both " + crossing_name(it->second) + " and " +
                       crossing_name(idx) + " (as " + role + ")");
  };
  for (std::size_t idx = 0; idx < crossings.size(); ++idx) {
    const Crossing& x = crossings[idx];
    if (x.sign != 1 && x.sign != -1) throw InputError(crossing_name(idx) + ": sign must be +1 or -1");
    if (x.under_in == x.under_out) throw InputError(crossing_name(idx) + ": under_in equals under_out");
    record(in_at, x.under_in, idx, "an incoming label");
    record(in_at, x.over_in, idx, "an incoming label");
    record(out_at, x.under_out, idx, "an outgoing label");
    record(out_at, x.over_out, idx, "an outgoing label");
    d.successor_[x.under_in] = x.under_out;
    d.successor_[x.over_in] = x.over_out;
  }
  for (const auto& [label, idx] : in_at)
    if (!out_at.contains(label))
      throw InputError("arc " + std::to_string(label) + " is dangling: it enters " + crossing_name(idx) +
                       " but never leaves a crossing");
  for (const auto& [label, idx] : out_at)
    if (!in_at.contains(label))
      throw InputError("arc " + std::to_string(label) + " is dangling: it leaves " + crossing_name(idx) +
                       " but never enters a crossing");

  // Trace cycles of the successor map.
  std::vector<std::vector<int>> cycles;
  std::set<int> seen;
  for (const auto& [label, next] : d.successor_) {
    if (seen.contains(label)) continue;
    std::vector<int> cycle;
    int cur = label;
    while (!seen.contains(cur)) {
      seen.insert(cur);
      cycle.push_back(cur);
      cur = d.successor_.at(cur);
    }
    if (cur != label) throw InputError("arc " + std::to_string(cur) + " is reached twice while tracing components");
    cycles.push_back(std::move(cycle));
  }

  if (arc_component.empty()) {
    std::vector<std::size_t> slots;
    for (std::size_t c = 0; c < num_components; ++c)
      if (!d.free_[c]) slots.push_back(c);
    if (slots.size() != cycles.size())
      throw InputError("diagram traces " + std::to_string(cycles.size()) + " closed components but " +
                       std::to_string(slots.size()) + " non-free components were declared");
    // cycles are already ordered by their smallest label (map iteration order).
    for (std::size_t k = 0; k < cycles.size(); ++k)
      for (int label : cycles[k]) d.arc_component_[label] = slots[k];
  } else {
    for (const auto& [label, c] : arc_component) {
      if (!d.successor_.contains(label))
        throw InputError("component_of_arc names arc " + std::to_string(label) + " which does not occur in any crossing");
      if (c >= num_components) throw InputError("arc " + std::to_string(label) + " assigned to an out-of-range component");
      if (d.free_[c]) throw InputError("arc " + std::to_string(label) + " assigned to a free component");
    }
    std::vector<bool> realized(num_components, false);
    for (const auto& cycle : cycles) {
      auto first = arc_component.find(cycle.front());
      if (first == arc_component.end())
        throw InputError("component_of_arc does not assign arc " + std::to_string(cycle.front()));
      for (int label : cycle) {
        auto it = arc_component.find(label);
        if (it == arc_component.end()) throw InputError("component_of_arc does not assign arc " + std::to_string(label));
        if (it->second != first->second)
          throw InputError("arc " + std::to_string(label) + " lies on the same closed curve as arc " +
                           std::to_string(cycle.front()) + " but is assigned a different component");
      }
      if (realized[first->second])
        throw InputError("component " + std::to_string(first->second + 1) + " is assigned more than one closed curve");
      realized[first->second] = true;
    }
    for (std::size_t c = 0; c < num_components; ++c)
      if (!d.free_[c] && !realized[c]) throw InputError("component " + std::to_string(c + 1) + " has no arcs");
    d.arc_component_ = std::move(arc_component);
  }

  d.crossings_ = std::move(crossings);
  return d;
}

std::size_t LinkDiagram::component_of(int arc) const {
  auto it = arc_component_.find(arc);
  if (it == arc_component_.end()) throw DomainError("unknown arc label " + std::to_string(arc));
  return it->second;
}

bool LinkDiagram::is_free(std::size_t component) const { return free_.at(component); }

std::vector<int> LinkDiagram::component_arcs(std::size_t component) const {
  std::vector<int> arcs;
  for (const auto& [label, c] : arc_component_) {
    if (c != component) continue;
    int cur = label;
    do {
      arcs.push_back(cur);
      cur = successor_.at(cur);
    } while (cur != label);
    break;
  }
  return arcs;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

int get_int(const json& obj, const char* key, std::size_t idx) {
  if (!obj.contains(key)) throw InputError(crossing_name(idx) + ": missing field \"" + key + "\"");
  const json& v = obj.at(key);
  if (!v.is_number_integer()) throw InputError(crossing_name(idx) + ": field \"" + key + "\" must be an integer");
  return v.get<int>();
}

json parse_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

LinkDiagram pd_from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("PD document must be a JSON object");
  if (!doc.contains("components") || !doc.at("components").is_number_integer())
    throw InputError("PD document needs an integer \"components\"");
  const auto mu = doc.at("components").get<std::int64_t>();
  if (mu <= 0) throw InputError("\"components\" must be positive");

  std::vector<Crossing> crossings;
  if (doc.contains("crossings")) {
    if (!doc.at("crossings").is_array()) throw InputError("\"crossings\" must be an array");
    std::size_t idx = 0;
    for (const json& x : doc.at("crossings")) {
      if (!x.is_object()) throw InputError(crossing_name(idx) + " must be an object");
      crossings.push_back({get_int(x, "under_in", idx), get_int(x, "over_in", idx), get_int(x, "under_out", idx),
                           get_int(x, "over_out", idx), get_int(x, "sign", idx)});
      ++idx;
    }
  }

  std::vector<std::size_t> free_components;
  if (doc.contains("free_components")) {
    if (!doc.at("free_components").is_array()) throw InputError("\"free_components\" must be an array");
    for (const json& c : doc.at("free_components")) {
      if (!c.is_number_integer()) throw InputError("free component indices must be integers");
      const auto k = c.get<std::int64_t>();
      if (k < 1 || k > mu) throw InputError("free component " + std::to_string(k) + " out of range");
      free_components.push_back(static_cast<std::size_t>(k - 1));
    }
  }

  std::map<int, std::size_t> arc_component;
  if (doc.contains("component_of_arc") && !doc.at("component_of_arc").is_null()) {
    if (!doc.at("component_of_arc").is_object()) throw InputError("\"component_of_arc\" must be an object");
    for (const auto& [key, value] : doc.at("component_of_arc").items()) {
      int label = 0;
      try {
        std::size_t used = 0;
        label = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw InputError("component_of_arc key \"" + key + "\" is not an arc label");
      }
      if (!value.is_number_integer()) throw InputError("component_of_arc values must be integers");
      const auto c = value.get<std::int64_t>();
      if (c < 1 || c > mu) throw InputError("arc " + key + " assigned to out-of-range component " + std::to_string(c));
      arc_component[label] = static_cast<std::size_t>(c - 1);
    }
  }
  return LinkDiagram::build(std::move(crossings), static_cast<std::size_t>(mu), std::move(free_components),
                            std::move(arc_component));
}

LinkDiagram parse_pd(std::string_view text) { return pd_from_json(parse_text(text)); }

json to_json(const LinkDiagram& d) {
  json crossings = json::array();
  for (const Crossing& x : d.crossings())
    crossings.push_back({{"under_in", x.under_in},
                         {"over_in", x.over_in},
                         {"under_out", x.under_out},
                         {"over_out", x.over_out},
                         {"sign", x.sign}});
  json free = json::array();
  for (std::size_t c = 0; c < d.num_components(); ++c)
    if (d.is_free(c)) free.push_back(c + 1);
  json comp = json::object();
  for (const auto& [label, c] : d.arc_components()) comp[std::to_string(label)] = c + 1;
  return {{"components", d.num_components()},
          {"crossings", std::move(crossings)},
          {"free_components", std::move(free)},
          {"component_of_arc", std::move(comp)}};
}

// ---------------------------------------------------------------------------
// Braid closures

LinkDiagram braid_closure(std::span<const int> word, int strands) {
  if (strands < 1) throw InputError("a braid needs at least one strand");
  const auto n = static_cast<std::size_t>(strands);
  std::vector<int> pos(n);
  std::iota(pos.begin(), pos.end(), 1);
  int next_label = strands + 1;

  std::vector<Crossing> crossings;
  std::vector<std::size_t> perm(n);  // strand starting at position i ends at perm[i]
  std::vector<std::size_t> at(n);    // which starting strand currently sits at each position
  std::iota(at.begin(), at.end(), 0);
  std::vector<bool> touched(n, false);

  for (std::size_t idx = 0; idx < word.size(); ++idx) {
    const int letter = word[idx];
    if (letter == 0 || letter >= strands || letter <= -strands)
      throw InputError("braid letter " + std::to_string(letter) + " at position " + std::to_string(idx + 1) +
                       " is out of range for " + std::to_string(strands) + " strands");
    const std::size_t i = static_cast<std::size_t>(std::abs(letter)) - 1;
    const std::size_t j = i + 1;
    const int left_in = pos[i];
    const int right_in = pos[j];
    const int left_out = next_label++;   // left strand moves to position j
    const int right_out = next_label++;  // right strand moves to position i
    if (letter > 0) {
      crossings.push_back({right_in, left_in, right_out, left_out, 1});
    } else {
      crossings.push_back({left_in, right_in, left_out, right_out, -1});
    }
    pos[i] = right_out;
    pos[j] = left_out;
    std::swap(at[i], at[j]);
    touched[at[i]] = touched[at[j]] = true;
  }
  for (std::size_t p = 0; p < n; ++p) perm[at[p]] = p;

  // Close up: the label on top of position p is the bottom label p + 1.
  std::map<int, int> rename;
  for (std::size_t p = 0; p < n; ++p)
    if (pos[p] != static_cast<int>(p) + 1) rename[pos[p]] = static_cast<int>(p) + 1;
  auto fix = [&](int& label) {
    auto it = rename.find(label);
    if (it != rename.end()) label = it->second;
  };
  for (Crossing& x : crossings) {
    fix(x.under_in);
    fix(x.over_in);
    fix(x.under_out);
    fix(x.over_out);
  }

  // Components are the cycles of the permutation, ordered by smallest position.
  std::vector<std::size_t> cycle_of(n, n);
  std::size_t num_cycles = 0;
  std::vector<std::size_t> free_components;
  for (std::size_t p = 0; p < n; ++p) {
    if (cycle_of[p] != n) continue;
    std::size_t q = p;
    while (cycle_of[q] == n) {
      cycle_of[q] = num_cycles;
      q = perm[q];
    }
    if (!touched[p]) free_components.push_back(num_cycles);
    ++num_cycles;
  }
  return LinkDiagram::build(std::move(crossings), num_cycles, std::move(free_components));
}

LinkDiagram braid_from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("braid document must be a JSON object");
  if (!doc.contains("strands") || !doc.at("strands").is_number_integer())
    throw InputError("braid document needs an integer \"strands\"");
  if (!doc.contains("word") || !doc.at("word").is_array()) throw InputError("braid document needs an array \"word\"");
  std::vector<int> word;
  for (const json& letter : doc.at("word")) {
    if (!letter.is_number_integer()) throw InputError("braid letters must be integers");
    word.push_back(letter.get<int>());
  }
  return braid_closure(word, doc.at("strands").get<int>());
}

LinkDiagram parse_braid(std::string_view text) { return braid_from_json(parse_text(text)); }

// ---------------------------------------------------------------------------
// Derived data

LinkingMatrix linking_matrix(const LinkDiagram& d) {
  const std::size_t mu = d.num_components();
  std::vector<std::int64_t> twice(mu * mu, 0);
  for (const Crossing& x : d.crossings()) {
    const std::size_t a = d.component_of(x.under_in);
    const std::size_t b = d.component_of(x.over_in);
    if (a == b) continue;
    twice[a * mu + b] += x.sign;
    twice[b * mu + a] += x.sign;
  }
  LinkingMatrix lk(mu);
  for (std::size_t i = 0; i < mu; ++i)
    for (std::size_t j = i + 1; j < mu; ++j) {
      if (twice[i * mu + j] % 2 != 0)
        throw MathError("odd signed crossing count between components " + std::to_string(i + 1) + " and " +
                        std::to_string(j + 1));
      lk.set(i, j, twice[i * mu + j] / 2);
    }
  return lk;
}

LinkDiagram sublink(const LinkDiagram& d, std::span<const std::size_t> keep) {
  if (keep.empty()) throw DomainError("sublink needs at least one component");
  const std::size_t none = d.num_components();
  std::vector<std::size_t> new_index(d.num_components(), none);
  for (std::size_t k = 0; k < keep.size(); ++k) {
    if (keep[k] >= d.num_components()) throw DomainError("sublink component out of range");
    if (new_index[keep[k]] != none) throw DomainError("sublink component listed twice");
    new_index[keep[k]] = k;
  }

  LabelUnion uf;
  std::vector<Crossing> kept;
  for (const Crossing& x : d.crossings()) {
    const bool under_kept = new_index[d.component_of(x.under_in)] != none;
    const bool over_kept = new_index[d.component_of(x.over_in)] != none;
    if (under_kept && over_kept) {
      kept.push_back(x);
    } else if (under_kept) {
      uf.merge(x.under_in, x.under_out);
    } else if (over_kept) {
      uf.merge(x.over_in, x.over_out);
    }
  }
  std::map<int, std::size_t> arc_component;
  std::vector<bool> has_arcs(keep.size(), false);
  for (Crossing& x : kept) {
    for (int* label : {&x.under_in, &x.over_in, &x.under_out, &x.over_out}) {
      const std::size_t c = new_index[d.component_of(*label)];
      *label = uf.find(*label);
      arc_component[*label] = c;
      has_arcs[c] = true;
    }
  }
  std::vector<std::size_t> free_components;
  for (std::size_t k = 0; k < keep.size(); ++k)
    if (!has_arcs[k]) free_components.push_back(k);
  return LinkDiagram::build(std::move(kept), keep.size(), std::move(free_components), std::move(arc_component));
}

LinkDiagram reverse_component(const LinkDiagram& d, std::size_t component) {
  if (component >= d.num_components()) throw DomainError("reverse_component: component out of range");
  std::vector<Crossing> crossings = d.crossings();
  for (Crossing& x : crossings) {
    const bool under_on = d.component_of(x.under_in) == component;
    const bool over_on = d.component_of(x.over_in) == component;
    if (under_on) std::swap(x.under_in, x.under_out);
    if (over_on) std::swap(x.over_in, x.over_out);
    if (under_on != over_on) x.sign = -x.sign;
  }
  std::vector<std::size_t> free_components;
  for (std::size_t c = 0; c < d.num_components(); ++c)
    if (d.is_free(c)) free_components.push_back(c);
  return LinkDiagram::build(std::move(crossings), d.num_components(), std::move(free_components), d.arc_components());
}

GroupPresentation wirtinger(const LinkDiagram& d) {
  LabelUnion uf;
  for (const auto& [label, c] : d.arc_components()) uf.find(label);
  for (const Crossing& x : d.crossings()) uf.merge(x.over_in, x.over_out);

  GroupPresentation g;
  g.num_components = d.num_components();
  std::map<int, int> generator_of_root;
  for (const auto& [label, c] : d.arc_components()) {
    const int root = uf.find(label);
    if (generator_of_root.contains(root)) continue;
    generator_of_root.emplace(root, static_cast<int>(g.generator_component.size()) + 1);
    g.generator_component.push_back(c);
  }
  for (std::size_t c = 0; c < d.num_components(); ++c)
    if (d.is_free(c)) g.generator_component.push_back(c);
  g.num_generators = g.generator_component.size();

  auto gen = [&](int label) { return generator_of_root.at(uf.find(label)); };
  for (const Crossing& x : d.crossings()) {
    const int o = gen(x.over_in);
    const int u = gen(x.under_in);
    const int v = gen(x.under_out);
    g.relators.push_back({v, x.sign * o, -u, -x.sign * o});
  }
  return g;
}

}  // namespace alex
