#include "alex/polymatrix.hpp"

#include <utility>

namespace alex {

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix product: inner dimensions differ");
  IntMatrix c(a.rows(), b.cols(), Integer(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return n == 0 ? Integer(1) : Integer(sign * prev);
}

namespace {

LaurentPoly cofactor_rec(const PolyMatrix& m, std::vector<std::size_t>& cols, std::size_t row, std::size_t num_vars) {
  if (cols.empty()) return LaurentPoly::constant(num_vars, 1);
  LaurentPoly total(num_vars);
  for (std::size_t idx = 0; idx < cols.size(); ++idx) {
    const LaurentPoly& entry = m(row, cols[idx]);
    if (entry.is_zero()) continue;
    const std::size_t c = cols[idx];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(idx));
    LaurentPoly minor = cofactor_rec(m, cols, row + 1, num_vars);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(idx), c);
    if (idx % 2 == 0) {
      total += entry * minor;
    } else {
      total -= entry * minor;
    }
  }
  return total;
}

}  // namespace

LaurentPoly cofactor_determinant(const PolyMatrix& m, std::size_t num_vars) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  return cofactor_rec(m, cols, 0, num_vars);
}

LaurentPoly determinant(const PolyMatrix& m, std::size_t num_vars) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n < 5) return cofactor_determinant(m, num_vars);

  PolyMatrix a = m;
  LaurentPoly prev = LaurentPoly::constant(num_vars, 1);
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return LaurentPoly(num_vars);
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        auto q = exact_div(v, prev);
        if (!q) throw MathError("Bareiss elimination: inexact division");
        a(i, j) = *std::move(q);
      }
      a(i, k) = LaurentPoly(num_vars);
    }
    prev = a(k, k);
  }
  return negate ? -prev : prev;
}

}  // namespace alex
