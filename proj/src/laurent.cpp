#include "alex/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>
#include <utility>

#include "alex/error.hpp"

namespace alex {

// ---------------------------------------------------------------------------
// LaurentPoly basics

LaurentPoly::LaurentPoly(std::size_t num_vars) : num_vars_(num_vars) {}

LaurentPoly LaurentPoly::constant(std::size_t num_vars, const Integer& c) {
  return monomial(num_vars, Exponent(num_vars, 0), c);
}

LaurentPoly LaurentPoly::monomial(std::size_t num_vars, Exponent e, const Integer& c) {
  if (e.size() != num_vars) throw DomainError("monomial: exponent length differs from variable count");
  LaurentPoly p(num_vars);
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t num_vars, std::size_t var) {
  if (var >= num_vars) throw DomainError("variable index out of range");
  Exponent e(num_vars, 0);
  e[var] = 1;
  return monomial(num_vars, std::move(e));
}

LaurentPoly LaurentPoly::power_minus_one(std::int64_t e) {
  LaurentPoly p = monomial(1, {e});
  p.add_term({0}, -1);
  return p;
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Exponent& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x == 0; });
}

Integer LaurentPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::add_term(const Exponent& e, const Integer& c) {
  if (e.size() != num_vars_) throw DomainError("add_term: exponent length differs from variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t LaurentPoly::min_degree(std::size_t var) const {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& [e, c] : terms_) best = std::min(best, e[var]);
  return terms_.empty() ? 0 : best;
}

std::int64_t LaurentPoly::max_degree(std::size_t var) const {
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  for (const auto& [e, c] : terms_) best = std::max(best, e[var]);
  return terms_.empty() ? 0 : best;
}

std::int64_t LaurentPoly::degree_spread(std::size_t var) const {
  return max_degree(var) - min_degree(var);
}

LaurentPoly LaurentPoly::shifted(const Exponent& shift) const {
  if (shift.size() != num_vars_) throw DomainError("shifted: exponent length differs from variable count");
  LaurentPoly out(num_vars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (std::size_t k = 0; k < num_vars_; ++k) f[k] += shift[k];
    out.terms_.emplace_hint(out.terms_.end(), std::move(f), c);
  }
  return out;
}

LaurentPoly LaurentPoly::scaled(const Integer& c) const {
  LaurentPoly out(num_vars_);
  if (c == 0) return out;
  for (const auto& [e, a] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, a * c);
  return out;
}

void LaurentPoly::check_compatible(const LaurentPoly& q, const char* op) const {
  if (num_vars_ != q.num_vars_) {
    std::ostringstream msg;
    msg << op << ": variable count mismatch (" << num_vars_ << " vs " << q.num_vars_ << ")";
    throw DomainError(msg.str());
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& q) {
  check_compatible(q, "add");
  for (const auto& [e, c] : q.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& q) {
  check_compatible(q, "sub");
  for (const auto& [e, c] : q.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& q) {
  *this = *this * q;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  p.check_compatible(q, "mul");
  LaurentPoly out(p.num_vars_);
  Exponent f(p.num_vars_);
  for (const auto& [e1, c1] : p.terms_) {
    for (const auto& [e2, c2] : q.terms_) {
      for (std::size_t k = 0; k < f.size(); ++k) f[k] = e1[k] + e2[k];
      out.add_term(f, c1 * c2);
    }
  }
  return out;
}

LaurentPoly operator-(const LaurentPoly& p) { return p.scaled(-1); }

LaurentPoly pow(const LaurentPoly& p, unsigned n) {
  LaurentPoly result = LaurentPoly::constant(p.num_vars(), 1);
  LaurentPoly base = p;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Substitutions

LaurentPoly substitute_powers(const LaurentPoly& p, std::span<const std::int64_t> m) {
  if (m.size() != p.num_vars()) throw DomainError("substitute_powers: multiplicity vector length differs from variable count");
  LaurentPoly out(1);
  for (const auto& [e, c] : p.terms()) {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < m.size(); ++k) s += e[k] * m[k];
    out.add_term({s}, c);
  }
  return out;
}

LaurentPoly eval_at_one(const LaurentPoly& p, std::size_t var) {
  if (var >= p.num_vars()) throw DomainError("eval_at_one: variable index out of range");
  if (p.num_vars() == 1) return LaurentPoly::constant(1, value_at_one(p));
  LaurentPoly out(p.num_vars() - 1);
  Exponent f(p.num_vars() - 1);
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t k = 0, j = 0; k < e.size(); ++k)
      if (k != var) f[j++] = e[k];
    out.add_term(f, c);
  }
  return out;
}

Integer value_at_one(const LaurentPoly& p) {
  Integer s = 0;
  for (const auto& [e, c] : p.terms()) s += c;
  return s;
}

LaurentPoly involution(const LaurentPoly& p) {
  LaurentPoly out(p.num_vars());
  for (const auto& [e, c] : p.terms()) {
    Exponent f = e;
    for (auto& x : f) x = -x;
    out.add_term(f, c);
  }
  return out;
}

LaurentPoly permute_vars(const LaurentPoly& p, std::span<const std::size_t> order) {
  if (order.size() != p.num_vars()) throw DomainError("permute_vars: order length differs from variable count");
  std::vector<bool> seen(order.size(), false);
  for (std::size_t v : order) {
    if (v >= order.size() || seen[v]) throw DomainError("permute_vars: order is not a permutation");
    seen[v] = true;
  }
  LaurentPoly out(p.num_vars());
  Exponent f(p.num_vars());
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < order.size(); ++i) f[i] = e[order[i]];
    out.add_term(f, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exact division

std::optional<LaurentPoly> exact_div(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.num_vars() != q.num_vars()) throw DomainError("exact_div: variable count mismatch");
  if (q.is_zero()) throw DomainError("exact_div: division by the zero polynomial");
  const std::size_t n = p.num_vars();
  LaurentPoly quotient(n);
  if (p.is_zero()) return quotient;

  // Degree spans are additive in an integral domain, so a quotient must live
  // in this box. Lex-descending leading terms inside a finite box terminate.
  Exponent lo(n), hi(n);
  for (std::size_t k = 0; k < n; ++k) {
    lo[k] = p.min_degree(k) - q.min_degree(k);
    hi[k] = p.max_degree(k) - q.max_degree(k);
    if (hi[k] < lo[k]) return std::nullopt;
  }

  const auto& [lead_q_exp, lead_q_coef] = *q.terms().rbegin();
  LaurentPoly rem = p;
  Exponent a(n), f(n);
  Integer c;
  while (!rem.is_zero()) {
    const auto& [lead_exp, lead_coef] = *rem.terms().rbegin();
    for (std::size_t k = 0; k < n; ++k) {
      a[k] = lead_exp[k] - lead_q_exp[k];
      if (a[k] < lo[k] || a[k] > hi[k]) return std::nullopt;
    }
    if (!mpz_divisible_p(lead_coef.get_mpz_t(), lead_q_coef.get_mpz_t())) return std::nullopt;
    mpz_divexact(c.get_mpz_t(), lead_coef.get_mpz_t(), lead_q_coef.get_mpz_t());
    quotient.add_term(a, c);
    for (const auto& [e, b] : q.terms()) {
      for (std::size_t k = 0; k < n; ++k) f[k] = e[k] + a[k];
      rem.add_term(f, -c * b);
    }
  }
  return quotient;
}

// ---------------------------------------------------------------------------
// Canonical forms

bool UnitClass::is_unit() const {
  return rep_.size() == 1 && rep_.terms().begin()->second == 1 && rep_.is_constant();
}

UnitClass canonicalize(const LaurentPoly& p) {
  UnitClass u(p.num_vars());
  if (p.is_zero()) return u;
  Exponent shift(p.num_vars());
  for (std::size_t k = 0; k < shift.size(); ++k) shift[k] = -p.min_degree(k);
  LaurentPoly rep = p.shifted(shift);
  if (rep.terms().begin()->second < 0) rep = -rep;
  u.rep_ = std::move(rep);
  return u;
}

// ---------------------------------------------------------------------------
// Multivariate gcd over Z[t1, ..., tn]: content / primitive part recursion on
// the highest variable with a subresultant pseudo-remainder sequence.

namespace {

int highest_var(const LaurentPoly& p) {
  int best = -1;
  for (const auto& [e, c] : p.terms())
    for (int k = static_cast<int>(e.size()) - 1; k > best; --k)
      if (e[k] != 0) {
        best = k;
        break;
      }
  return best;
}

std::int64_t degree_in(const LaurentPoly& p, int var) { return p.max_degree(static_cast<std::size_t>(var)); }

LaurentPoly coefficient_in(const LaurentPoly& p, int var, std::int64_t k) {
  LaurentPoly out(p.num_vars());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] != k) continue;
    Exponent f = e;
    f[var] = 0;
    out.add_term(f, c);
  }
  return out;
}

LaurentPoly leading_in(const LaurentPoly& p, int var) { return coefficient_in(p, var, degree_in(p, var)); }

LaurentPoly var_power(std::size_t n, int var, std::int64_t k) {
  Exponent e(n, 0);
  e[var] = k;
  return LaurentPoly::monomial(n, std::move(e));
}

LaurentPoly divide_or_throw(const LaurentPoly& p, const LaurentPoly& q) {
  auto r = exact_div(p, q);
  if (!r) throw MathError("gcd: expected exact division failed");
  return *std::move(r);
}

bool is_plus_minus_one(const LaurentPoly& p) {
  return p.is_constant() && p.size() == 1 && abs(p.terms().begin()->second) == 1;
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly content_in(const LaurentPoly& p, int var) {
  const std::size_t n = p.num_vars();
  LaurentPoly g(n);
  for (std::int64_t k = p.min_degree(var); k <= degree_in(p, var); ++k) {
    LaurentPoly ck = coefficient_in(p, var, k);
    if (ck.is_zero()) continue;
    g = poly_gcd(g, ck);
    if (is_plus_minus_one(g)) break;
  }
  return g;
}

LaurentPoly primitive_part_in(const LaurentPoly& p, int var) { return divide_or_throw(p, content_in(p, var)); }

LaurentPoly pseudo_remainder(const LaurentPoly& a, const LaurentPoly& b, int var) {
  const std::size_t n = a.num_vars();
  const std::int64_t db = degree_in(b, var);
  const LaurentPoly lb = leading_in(b, var);
  std::int64_t e = degree_in(a, var) - db + 1;
  LaurentPoly r = a;
  while (!r.is_zero() && degree_in(r, var) >= db) {
    LaurentPoly t = leading_in(r, var) * var_power(n, var, degree_in(r, var) - db);
    r = lb * r - t * b;
    --e;
  }
  if (e > 0) r *= pow(lb, static_cast<unsigned>(e));
  return r;
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  const std::size_t n = a.num_vars();
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const int var = std::max(highest_var(a), highest_var(b));
  if (var < 0) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.terms().begin()->second.get_mpz_t(), b.terms().begin()->second.get_mpz_t());
    return LaurentPoly::constant(n, g);
  }

  const LaurentPoly ca = content_in(a, var);
  const LaurentPoly cb = content_in(b, var);
  const LaurentPoly c = poly_gcd(ca, cb);
  if (degree_in(a, var) == 0 || degree_in(b, var) == 0) return c;

  LaurentPoly pa = divide_or_throw(a, ca);
  LaurentPoly pb = divide_or_throw(b, cb);
  if (degree_in(pa, var) < degree_in(pb, var)) std::swap(pa, pb);

  LaurentPoly g = LaurentPoly::constant(n, 1);
  LaurentPoly h = LaurentPoly::constant(n, 1);
  for (;;) {
    const std::int64_t delta = degree_in(pa, var) - degree_in(pb, var);
    LaurentPoly r = pseudo_remainder(pa, pb, var);
    if (r.is_zero()) break;
    if (degree_in(r, var) == 0) return c;
    pa = std::move(pb);
    pb = divide_or_throw(r, g * pow(h, static_cast<unsigned>(delta)));
    g = leading_in(pa, var);
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = divide_or_throw(pow(g, static_cast<unsigned>(delta)), pow(h, static_cast<unsigned>(delta - 1)));
    }
  }
  return c * primitive_part_in(pb, var);
}

LaurentPoly to_ordinary(const LaurentPoly& p) {
  Exponent shift(p.num_vars());
  for (std::size_t k = 0; k < shift.size(); ++k) shift[k] = -p.min_degree(k);
  return p.shifted(shift);
}

}  // namespace

UnitClass gcd(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.num_vars() != q.num_vars()) throw DomainError("gcd: variable count mismatch");
  return canonicalize(poly_gcd(to_ordinary(p), to_ordinary(q)));
}

std::int64_t gcd_int(std::int64_t a, std::int64_t b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

// ---------------------------------------------------------------------------
// Text form

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  const bool single = p.num_vars() == 1;
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += 't';
      if (!single) mono += std::to_string(k + 1);
      if (e[k] != 1) mono += '^' + std::to_string(e[k]);
    }
    const Integer a = abs(c);
    if (mono.empty()) {
      out += a.get_str();
    } else if (a == 1) {
      out += mono;
    } else {
      out += a.get_str() + '*' + mono;
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t num_vars) : text_(text), num_vars_(num_vars) {}

  LaurentPoly parse() {
    LaurentPoly result(num_vars_);
    skip_space();
    int sign = 1;
    if (accept('-')) {
      sign = -1;
    } else {
      accept('+');
    }
    for (;;) {
      auto [e, c] = term();
      result.add_term(e, sign * c);
      skip_space();
      if (at_end()) break;
      if (accept('+')) {
        sign = 1;
      } else if (accept('-')) {
        sign = -1;
      } else {
        fail("expected '+' or '-'");
      }
    }
    return result;
  }

 private:
  std::pair<Exponent, Integer> term() {
    skip_space();
    Integer coef = 1;
    bool have_content = false;
    if (peek_digit()) {
      coef = Integer(digits());
      have_content = true;
      skip_space();
      if (accept('*')) {
        skip_space();
        if (!peek('t')) fail("expected a variable after '*'");
      }
    }
    Exponent e(num_vars_, 0);
    while (peek('t')) {
      factor(e);
      have_content = true;
      skip_space();
      if (accept('*')) {
        skip_space();
        if (!peek('t')) fail("expected a variable after '*'");
      }
    }
    if (!have_content) fail("expected a term");
    return {e, coef};
  }

  void factor(Exponent& e) {
    ++pos_;  // 't'
    std::size_t var = 0;
    if (peek_digit()) {
      const std::string idx = digits();
      const unsigned long k = std::stoul(idx);
      if (k < 1 || k > num_vars_) fail("variable t" + idx + " out of range for " + std::to_string(num_vars_) + " variables");
      var = k - 1;
    } else if (num_vars_ != 1) {
      fail("bare 't' is only allowed for one-variable polynomials");
    }
    std::int64_t power = 1;
    skip_space();
    if (accept('^')) {
      skip_space();
      int sign = 1;
      if (accept('-')) {
        sign = -1;
      } else {
        accept('+');
      }
      skip_space();
      if (!peek_digit()) fail("expected an exponent");
      power = sign * static_cast<std::int64_t>(std::stoll(digits()));
    }
    e[var] += power;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (peek_digit()) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  bool peek_digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("polynomial parse error at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\": " + what);
  }

  std::string_view text_;
  std::size_t num_vars_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(std::string_view text, std::size_t num_vars) {
  if (num_vars == 0) throw DomainError("parse_poly: at least one variable required");
  try {
    return PolyParser(text, num_vars).parse();
  } catch (const std::out_of_range&) {
    throw InputError("polynomial parse error in \"" + std::string(text) + "\": number out of range");
  }
}

}  // namespace alex
