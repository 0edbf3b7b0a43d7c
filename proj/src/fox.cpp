#include "alex/fox.hpp"

#include <numeric>

#include "alex/error.hpp"

namespace alex {

LaurentPoly fox_derivative(std::span<const int> word, std::size_t generator,
                           std::span<const std::size_t> generator_component, std::size_t num_vars) {
  if (generator >= generator_component.size()) throw DomainError("fox_derivative: generator index out of range");
  LaurentPoly result(num_vars);
  Exponent prefix(num_vars, 0);
  for (int letter : word) {
    const std::size_t g = static_cast<std::size_t>(letter > 0 ? letter : -letter);
    if (letter == 0 || g > generator_component.size()) throw DomainError("fox_derivative: word letter out of range");
    const std::size_t var = generator_component[g - 1];
    if (var >= num_vars) throw DomainError("fox_derivative: generator component out of range");
    if (letter > 0) {
      if (g - 1 == generator) result.add_term(prefix, 1);
      ++prefix[var];
    } else {
      --prefix[var];
      if (g - 1 == generator) result.add_term(prefix, -1);
    }
  }
  return result;
}

AlexanderMatrix alexander_matrix(const GroupPresentation& p) {
  if (p.num_components == 0) throw DomainError("alexander_matrix: presentation without components");
  for (std::size_t c : p.generator_component)
    if (c >= p.num_components) throw DomainError("alexander_matrix: generator component out of range");
  AlexanderMatrix m;
  m.num_vars = p.num_components;
  m.generator_component = p.generator_component;
  m.entries = PolyMatrix(p.relators.size(), p.num_generators, LaurentPoly(m.num_vars));
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    for (std::size_t j = 0; j < p.num_generators; ++j)
      m.entries(i, j) = fox_derivative(p.relators[i], j, p.generator_component, m.num_vars);
  return m;
}

LaurentPoly row_identity_residual(const AlexanderMatrix& m, std::size_t row) {
  LaurentPoly sum(m.num_vars);
  for (std::size_t j = 0; j < m.entries.cols(); ++j) {
    LaurentPoly factor = LaurentPoly::variable(m.num_vars, m.generator_component[j]);
    factor -= LaurentPoly::constant(m.num_vars, 1);
    sum += m.entries(row, j) * factor;
  }
  return sum;
}

namespace {

/// Calls f on every k-subset of {0..n-1} in lexicographic order; stops
/// early when f returns false.
template <class F>
bool for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return true;
  for (;;) {
    if (!f(idx)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<std::size_t> all_but(std::size_t n, std::size_t skip) {
  std::vector<std::size_t> v;
  for (std::size_t j = 0; j < n; ++j)
    if (j != skip) v.push_back(j);
  return v;
}

}  // namespace

UnitClass delta1(const AlexanderMatrix& m) {
  const std::size_t n = m.entries.cols();
  if (n == 0) throw DomainError("delta1: matrix without columns");
  const std::size_t k = n - 1;
  LaurentPoly g(m.num_vars);
  if (m.entries.rows() < k) return UnitClass(m.num_vars);

  for_each_subset(m.entries.rows(), k, [&](const std::vector<std::size_t>& rows) {
    for (std::size_t skip = 0; skip < n; ++skip) {
      LaurentPoly minor = determinant(m.entries.select(rows, all_but(n, skip)), m.num_vars);
      if (minor.is_zero()) continue;
      if (!g.is_zero() && exact_div(minor, g)) continue;
      g = gcd(g, minor).rep();
      if (canonicalize(g).is_unit()) return false;
    }
    return true;
  });
  return canonicalize(g);
}

DeltaStarReport delta_star_check(const AlexanderMatrix& m) {
  DeltaStarReport report;
  if (m.num_vars < 2) throw DomainError("delta_star_check needs at least two components");
  const std::size_t n = m.entries.cols();
  if (m.entries.rows() < n - 1) {
    // Every (n-1)-minor vanishes, so each column gives the quotient 0.
    report.holds = true;
    report.delta_star = canonicalize(LaurentPoly(m.num_vars));
    report.quotients.assign(n, report.delta_star);
    report.diagnostic = "fewer than n-1 relators; all minors vanish";
    return report;
  }
  std::vector<std::size_t> rows(n - 1);
  std::iota(rows.begin(), rows.end(), 0);
  report.holds = true;
  for (std::size_t j = 0; j < n; ++j) {
    LaurentPoly det = determinant(m.entries.select(rows, all_but(n, j)), m.num_vars);
    LaurentPoly factor = LaurentPoly::variable(m.num_vars, m.generator_component[j]);
    factor -= LaurentPoly::constant(m.num_vars, 1);
    auto q = exact_div(det, factor);
    if (!q) {
      report.quotients.emplace_back();
      report.holds = false;
      report.diagnostic += "column " + std::to_string(j + 1) + ": minor not divisible by (t" +
                           std::to_string(m.generator_component[j] + 1) + " - 1); ";
      continue;
    }
    UnitClass u = canonicalize(*q);
    if (!report.delta_star) {
      report.delta_star = u;
    } else if (!(*report.delta_star == u)) {
      report.holds = false;
      report.diagnostic += "column " + std::to_string(j + 1) + ": quotient disagrees with column 1; ";
    }
    report.quotients.push_back(std::move(u));
  }
  return report;
}

UnitClass alexander_polynomial(const LinkDiagram& d) { return delta1(alexander_matrix(wirtinger(d))); }

LinkInvariants link_invariants(const LinkDiagram& d) { return {alexander_polynomial(d), linking_matrix(d)}; }

LinkInvariants SublinkTable::operator()(std::span<const std::size_t> keep) const {
  std::vector<std::size_t> key(keep.begin(), keep.end());
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  LinkInvariants inv = link_invariants(sublink(diagram_, keep));
  std::lock_guard lock(mutex_);
  return cache_.emplace(std::move(key), std::move(inv)).first->second;
}

LinkInvariants SublinkTable::full() const {
  std::vector<std::size_t> all(diagram_.num_components());
  std::iota(all.begin(), all.end(), 0);
  return (*this)(all);
}

}  // namespace alex
