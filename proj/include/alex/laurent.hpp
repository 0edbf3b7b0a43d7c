#pragma once

// Exact arithmetic in the Laurent polynomial ring Z[t1^±1, ..., tn^±1].

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace alex {

using Integer = mpz_class;
using Exponent = std::vector<std::int64_t>;

/// Integer-coefficient Laurent polynomial in a fixed number of variables.
///
/// Terms are kept in a map ordered lexicographically on exponent vectors
/// (left to right, smaller exponent first). No stored coefficient is zero,
/// so the zero polynomial is the empty map.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponent, Integer>;

  explicit LaurentPoly(std::size_t num_vars = 1);

  static LaurentPoly constant(std::size_t num_vars, const Integer& c);
  static LaurentPoly monomial(std::size_t num_vars, Exponent e, const Integer& c = 1);
  /// t_{var+1}, zero-based.
  static LaurentPoly variable(std::size_t num_vars, std::size_t var);
  /// t^e - 1 in one variable.
  static LaurentPoly power_minus_one(std::int64_t e);

  std::size_t num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Integer coefficient(const Exponent& e) const;

  /// Adds c * t^e in place; drops the term if it cancels.
  void add_term(const Exponent& e, const Integer& c);

  std::int64_t min_degree(std::size_t var) const;
  std::int64_t max_degree(std::size_t var) const;
  /// max_degree - min_degree, 0 for the zero polynomial.
  std::int64_t degree_spread(std::size_t var) const;

  /// Multiplies by the monomial t^shift.
  LaurentPoly shifted(const Exponent& shift) const;
  LaurentPoly scaled(const Integer& c) const;

  LaurentPoly& operator+=(const LaurentPoly& q);
  LaurentPoly& operator-=(const LaurentPoly& q);
  LaurentPoly& operator*=(const LaurentPoly& q);

  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
  friend LaurentPoly operator-(const LaurentPoly& p);
  friend bool operator==(const LaurentPoly& p, const LaurentPoly& q) {
    return p.num_vars_ == q.num_vars_ && p.terms_ == q.terms_;
  }

 private:
  void check_compatible(const LaurentPoly& q, const char* op) const;

  std::size_t num_vars_;
  TermMap terms_;
};

LaurentPoly pow(const LaurentPoly& p, unsigned n);

/// p(t^m1, ..., t^mn) as a one-variable polynomial.
LaurentPoly substitute_powers(const LaurentPoly& p, std::span<const std::int64_t> m);

/// Sets t_{var+1} = 1 and drops that variable, keeping the others in order.
LaurentPoly eval_at_one(const LaurentPoly& p, std::size_t var);

/// Value at t1 = ... = tn = 1 (sum of coefficients).
Integer value_at_one(const LaurentPoly& p);

/// p(t1^-1, ..., tn^-1).
LaurentPoly involution(const LaurentPoly& p);

/// Renames variables: variable i of the result is variable order[i] of p.
LaurentPoly permute_vars(const LaurentPoly& p, std::span<const std::size_t> order);

/// Quotient p / q in the Laurent ring, or nullopt when q does not divide p.
/// Throws DomainError when q is zero.
std::optional<LaurentPoly> exact_div(const LaurentPoly& p, const LaurentPoly& q);

/// A Laurent polynomial up to multiplication by units ±t^ν.
///
/// The stored representative has minimum exponent 0 in every variable and a
/// positive coefficient on its lexicographically smallest exponent vector, so
/// two polynomials are associates iff their UnitClasses compare equal.
class UnitClass {
 public:
  explicit UnitClass(std::size_t num_vars = 1) : rep_(num_vars) {}

  const LaurentPoly& rep() const { return rep_; }
  std::size_t num_vars() const { return rep_.num_vars(); }
  bool is_zero() const { return rep_.is_zero(); }
  bool is_unit() const;

  friend bool operator==(const UnitClass&, const UnitClass&) = default;

 private:
  friend UnitClass canonicalize(const LaurentPoly& p);
  LaurentPoly rep_;
};

UnitClass canonicalize(const LaurentPoly& p);

/// Greatest common divisor in the Laurent ring; gcd(p, 0) = canonicalize(p).
UnitClass gcd(const LaurentPoly& p, const LaurentPoly& q);

/// Renders p in the text grammar. One-variable polynomials use `t`,
/// multivariable ones `t1 ... tn`; terms appear in descending lex order.
std::string to_string(const LaurentPoly& p);
inline std::string to_string(const UnitClass& u) { return to_string(u.rep()); }

/// Parses the text grammar into a polynomial in `num_vars` variables.
/// A bare `t` is accepted only when num_vars == 1. Throws InputError.
LaurentPoly parse_poly(std::string_view text, std::size_t num_vars);

/// Integer gcd, always nonnegative; gcd(0, 0) = 0.
std::int64_t gcd_int(std::int64_t a, std::int64_t b);

}  // namespace alex
