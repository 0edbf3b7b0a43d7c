#include "alex/seifert.hpp"

#include "alex/error.hpp"

namespace alex {

using nlohmann::json;

SeifertPair::SeifertPair(IntMatrix a_plus, IntMatrix a_minus, std::size_t mu, std::vector<std::int64_t> m)
    : a_plus_(std::move(a_plus)), a_minus_(std::move(a_minus)), mu_(mu), m_(std::move(m)) {
  if (a_plus_.rows() != a_minus_.rows() || a_plus_.cols() != a_minus_.cols())
    throw InputError("Seifert matrices have different shapes");
  if (a_plus_.cols() < a_plus_.rows())
    throw InputError("Seifert matrices must have at least as many columns as rows");
}

namespace {

IntMatrix read_matrix(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc.at(key).is_array()) throw InputError(std::string("missing matrix \"") + key + "\"");
  std::vector<std::vector<Integer>> rows;
  for (const json& row : doc.at(key)) {
    if (!row.is_array()) throw InputError(std::string("\"") + key + "\" rows must be arrays");
    std::vector<Integer> r;
    for (const json& v : row) {
      if (v.is_number_integer()) {
        r.emplace_back(v.get<long>());
      } else if (v.is_string()) {
        try {
          r.emplace_back(v.get<std::string>());
        } catch (const std::invalid_argument&) {
          throw InputError(std::string("\"") + key + "\" entry is not an integer");
        }
      } else {
        throw InputError(std::string("\"") + key + "\" entries must be integers");
      }
    }
    rows.push_back(std::move(r));
  }
  return IntMatrix::from_rows(rows);
}

}  // namespace

SeifertPair seifert_pair_from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("Seifert pair document must be a JSON object");
  IntMatrix plus = read_matrix(doc, "a_plus");
  IntMatrix minus = read_matrix(doc, "a_minus");
  std::size_t mu = 0;
  std::vector<std::int64_t> m;
  if (doc.contains("mu")) {
    if (!doc.at("mu").is_number_integer() || doc.at("mu").get<std::int64_t>() < 0)
      throw InputError("\"mu\" must be a nonnegative integer");
    mu = doc.at("mu").get<std::size_t>();
  }
  if (doc.contains("m")) {
    if (!doc.at("m").is_array()) throw InputError("\"m\" must be an array");
    for (const json& v : doc.at("m")) {
      if (!v.is_number_integer()) throw InputError("\"m\" entries must be integers");
      m.push_back(v.get<std::int64_t>());
    }
  }
  return SeifertPair(std::move(plus), std::move(minus), mu, std::move(m));
}

SeifertPair parse_seifert_pair(std::string_view text) {
  try {
    return seifert_pair_from_json(json::parse(text));
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

PolyMatrix presentation_matrix(const SeifertPair& sp) {
  const IntMatrix& a = sp.a_plus();
  const IntMatrix& b = sp.a_minus();
  PolyMatrix out(a.rows(), a.cols(), LaurentPoly(1));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      LaurentPoly e(1);
      e.add_term({0}, a(i, j));
      e.add_term({1}, -b(i, j));
      out(i, j) = std::move(e);
    }
  return out;
}

UnitClass delta_from_seifert(const SeifertPair& sp) {
  if (sp.excess() > 0) return UnitClass(1);
  return canonicalize(determinant(presentation_matrix(sp), 1));
}

SeifertPair add_disc_block(const SeifertPair& sp, std::int64_t discs, const std::optional<IntMatrix>& lower_left) {
  if (sp.excess() != 0) throw DomainError("add_disc_block needs a square Seifert pair");
  if (discs < 1) throw DomainError("add_disc_block needs at least one disc");
  const std::size_t n = sp.rank();
  const auto k = static_cast<std::size_t>(discs);
  if (lower_left && (lower_left->rows() != k || lower_left->cols() != n))
    throw DomainError("add_disc_block: lower-left block has the wrong shape");

  IntMatrix plus(n + k, n + k, Integer(0));
  IntMatrix minus(n + k, n + k, Integer(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      plus(i, j) = sp.a_plus()(i, j);
      minus(i, j) = sp.a_minus()(i, j);
    }
  if (lower_left)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        plus(n + i, j) = (*lower_left)(i, j);
        minus(n + i, j) = (*lower_left)(i, j);
      }
  for (std::size_t i = 0; i < k; ++i) {
    plus(n + i, n + i) = 1;
    minus(n + (i + 1) % k, n + i) = 1;
  }
  return SeifertPair(std::move(plus), std::move(minus), sp.mu(), sp.m());
}

UnitClass lemma7_block_determinant(const SeifertPair& sp, std::int64_t discs,
                                   const std::optional<IntMatrix>& lower_left) {
  return delta_from_seifert(add_disc_block(sp, discs, lower_left));
}

}  // namespace alex
