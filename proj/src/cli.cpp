#include "alex/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "alex/error.hpp"
#include "alex/fox.hpp"
#include "alex/laurent.hpp"
#include "alex/linkdiag.hpp"
#include "alex/multilink.hpp"
#include "alex/seifert.hpp"
#include "alex/torres.hpp"
#include "json.hpp"

namespace alex::cli {

using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

bool looks_inline(const std::string& s) {
  auto pos = s.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && (s[pos] == '{' || s[pos] == '[');
}

std::string slurp(const std::string& source) {
  if (looks_inline(source)) return source;
  std::ifstream in(source, std::ios::binary);
  if (!in) throw InputError("cannot read '" + source + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(what + ": malformed JSON (" + e.what() + ")");
  }
}

LinkDiagram load_diagram(const RunConfig& cfg) {
  if (!cfg.pd.empty() && !cfg.braid.empty()) throw InputError("give either --pd or --braid, not both");
  if (!cfg.pd.empty()) return pd_from_json(parse_json(slurp(cfg.pd), "--pd"));
  if (!cfg.braid.empty()) return braid_from_json(parse_json(slurp(cfg.braid), "--braid"));
  throw InputError("a link is required (--pd or --braid)");
}

bool has_diagram(const RunConfig& cfg) { return !cfg.pd.empty() || !cfg.braid.empty(); }

std::vector<std::int64_t> require_m(const RunConfig& cfg, std::size_t mu) {
  if (!cfg.m) throw InputError("--m is required");
  if (cfg.m->size() != mu)
    throw InputError("--m has " + std::to_string(cfg.m->size()) + " entries, expected " + std::to_string(mu));
  return *cfg.m;
}

std::string join(const std::vector<std::int64_t>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

void print_json(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

/// All nonzero vectors in [-bound, bound]^n, lexicographic.
std::vector<std::vector<std::int64_t>> grid_points(std::size_t n, std::int64_t bound) {
  std::vector<std::vector<std::int64_t>> pts;
  if (n == 0) return pts;
  std::vector<std::int64_t> v(n, -bound);
  for (;;) {
    if (std::any_of(v.begin(), v.end(), [](std::int64_t x) { return x != 0; })) pts.push_back(v);
    std::size_t k = n;
    while (k > 0 && v[k - 1] == bound) v[--k] = -bound;
    if (k == 0) break;
    ++v[k - 1];
  }
  return pts;
}

// ---------------------------------------------------------------------------

int cmd_compute(const RunConfig& cfg, std::ostream& out) {
  const LinkDiagram d = load_diagram(cfg);
  const LinkInvariants inv = link_invariants(d);
  if (cfg.format == Format::json) {
    print_json(out, {{"components", d.num_components()},
                     {"delta", to_string(inv.delta)},
                     {"linking_matrix", inv.lk.rows()}});
    return kOk;
  }
  out << to_string(inv.delta) << '\n';
  out << "linking matrix: " << json(inv.lk.rows()).dump() << '\n';
  return kOk;
}

int cmd_specialize(const RunConfig& cfg, std::ostream& out) {
  if (cfg.mu == 0) throw InputError("--mu must be positive");
  const LaurentPoly p = parse_poly(cfg.poly, cfg.mu);
  const auto m = require_m(cfg, cfg.mu);
  UnitClass result;
  if (cfg.raw) {
    if (std::all_of(m.begin(), m.end(), [](std::int64_t x) { return x == 0; }))
      throw DomainError("multiplicity vector must be nonzero");
    result = canonicalize(substitute_powers(p, m));
  } else {
    // Linking numbers do not enter the specialization itself.
    result = multilink_polynomial(canonicalize(p), MultilinkSpec(LinkingMatrix(cfg.mu), m));
  }
  if (cfg.format == Format::json)
    print_json(out, {{"m", m}, {"raw", cfg.raw}, {"result", to_string(result)}});
  else
    out << to_string(result) << '\n';
  return kOk;
}

int cmd_seifert(const RunConfig& cfg, std::ostream& out) {
  if (cfg.pair.empty()) throw InputError("--pair is required");
  const SeifertPair sp = seifert_pair_from_json(parse_json(slurp(cfg.pair), "--pair"));
  const UnitClass delta = delta_from_seifert(sp);
  if (cfg.format == Format::json) {
    print_json(out, {{"delta", to_string(delta)},
                     {"rank", sp.rank()},
                     {"excess", sp.excess()},
                     {"mu", sp.mu()},
                     {"m", sp.m()}});
  } else {
    out << to_string(delta) << '\n';
  }
  return kOk;
}

int cmd_cable(const RunConfig& cfg, std::ostream& out) {
  const LinkDiagram d = load_diagram(cfg);
  const MultilinkSpec spec(linking_matrix(d), require_m(cfg, d.num_components()));
  json rows = json::array();
  for (std::size_t i = 0; i < spec.mu(); ++i) {
    const CableData c = cable_data(spec, i);
    rows.push_back({{"component", i + 1}, {"d", c.d}, {"p", c.p}, {"q", c.q}, {"s", spec.s(i)}});
  }
  if (cfg.format == Format::json) {
    print_json(out, {{"m", spec.m()}, {"d", spec.d()}, {"cables", rows}});
    return kOk;
  }
  out << "component  d_i  p_i  q_i\n";
  for (const auto& r : rows)
    out << std::setw(9) << r["component"].get<std::size_t>() << std::setw(5) << r["d"].get<std::int64_t>()
        << std::setw(5) << r["p"].get<std::int64_t>() << std::setw(5) << r["q"].get<std::int64_t>() << '\n';
  return kOk;
}

int cmd_reconstruct(const RunConfig& cfg, std::ostream& out) {
  if (cfg.oracle.empty()) throw InputError("--oracle is required");
  if (cfg.mu == 0) throw InputError("--mu must be positive");
  const json table = parse_json(slurp(cfg.oracle), "--oracle");
  if (!table.is_object()) throw InputError("--oracle: expected an object mapping \"m1,m2,...\" to polynomials");
  SpecializationOracle oracle = [&table](std::span<const std::int64_t> m) {
    const std::string key = join(std::vector<std::int64_t>(m.begin(), m.end()));
    auto it = table.find(key);
    if (it == table.end()) throw InputError("--oracle has no entry for m = " + key);
    if (!it->is_string()) throw InputError("--oracle entry " + key + " is not a string");
    return parse_poly(it->get<std::string>(), 1);
  };
  if (cfg.multilink) oracle = from_multilink_oracle(std::move(oracle), cfg.mu);
  const UnitClass delta = reconstruct_from_specializations(oracle, cfg.mu, cfg.bound);
  if (cfg.format == Format::json)
    print_json(out, {{"mu", cfg.mu}, {"bound", cfg.bound}, {"delta", to_string(delta)}});
  else
    out << to_string(delta) << '\n';
  return kOk;
}

// ---------------------------------------------------------------------------
// check

std::vector<std::size_t> iota_except(std::size_t n, std::size_t skip) {
  std::vector<std::size_t> v;
  for (std::size_t k = 0; k < n; ++k)
    if (k != skip) v.push_back(k);
  return v;
}

int check_torres(const RunConfig& cfg, std::ostream& out) {
  const SublinkTable table(load_diagram(cfg));
  const std::size_t mu = table.diagram().num_components();
  if (mu < 2) throw DomainError("the Torres formula needs at least two components");
  bool all = true;
  json reports = json::array();
  std::ostringstream text;
  for (std::size_t k = 0; k < mu; ++k) {
    // Move component k to the end, then delete it.
    auto order = iota_except(mu, k);
    const auto sub = table(order);
    order.push_back(k);
    const auto full = table(order);
    const TorresReport r = check_torres_formula(full.delta, sub.delta, full.lk);
    all = all && r.holds;
    json j = to_json(r);
    j["deleted"] = k + 1;
    reports.push_back(j);
    text << "delete " << k + 1 << ": " << (r.holds ? "pass" : "FAIL") << "  lhs = " << to_string(r.lhs)
         << "  rhs = " << to_string(r.rhs) << '\n';
    if (cfg.verbosity > 0)
      for (const auto& line : r.details) text << "    " << line << '\n';
  }
  if (cfg.format == Format::json)
    print_json(out, {{"check", "torres"}, {"holds", all}, {"reports", reports}});
  else
    out << text.str() << "torres: " << (all ? "holds" : "fails") << '\n';
  return all ? kOk : kCheckFailed;
}

LinkInvariants invariants_from_flags(const RunConfig& cfg) {
  if (has_diagram(cfg)) return link_invariants(load_diagram(cfg));
  if (cfg.poly.empty() || cfg.lk.empty()) throw InputError("give a link (--pd/--braid) or both --poly and --lk");
  const json rows = parse_json(cfg.lk, "--lk");
  LinkingMatrix lk;
  try {
    lk = LinkingMatrix::from_rows(rows.get<std::vector<std::vector<std::int64_t>>>());
  } catch (const json::exception&) {
    throw InputError("--lk must be a square array of integer rows");
  }
  return {canonicalize(parse_poly(cfg.poly, lk.size())), lk};
}

int check_torres_fox_cmd(const RunConfig& cfg, std::ostream& out) {
  const LinkInvariants inv = invariants_from_flags(cfg);
  const SymmetryReport r = check_torres_fox(inv.delta, inv.lk);
  const bool ok = r.holds && r.parity_ok;
  if (cfg.format == Format::json) {
    json j = to_json(r);
    j["check"] = "torres-fox";
    j["delta"] = to_string(inv.delta);
    print_json(out, j);
  } else {
    out << "delta = " << to_string(inv.delta) << '\n';
    out << "symmetry: " << (r.holds ? "pass" : "FAIL");
    if (!r.nu.empty()) out << "  nu = (" << join(r.nu) << ")";
    out << "\nparity: " << (r.parity_ok ? "pass" : "FAIL") << '\n';
  }
  return ok ? kOk : kCheckFailed;
}

int check_lemma7_cmd(const RunConfig& cfg, std::ostream& out) {
  const SublinkTable table(load_diagram(cfg));
  const std::size_t mu = table.diagram().num_components();
  if (mu < 2) throw DomainError("the deletion identity needs at least two components");
  const LinkInvariants full = table.full();
  const LinkInvariants sub = table(iota_except(mu, mu - 1));
  std::vector<std::vector<std::int64_t>> ms;
  if (cfg.m) {
    ms.push_back(require_m(cfg, mu));
  } else {
    for (auto v : grid_points(mu - 1, cfg.grid)) {
      v.push_back(0);
      ms.push_back(std::move(v));
    }
  }
  bool all = true;
  json reports = json::array();
  std::ostringstream text;
  for (const auto& m : ms) {
    const DeletionReport r = check_lemma7(full.delta, sub.delta, MultilinkSpec(full.lk, m));
    all = all && r.holds;
    reports.push_back({{"m", m},
                       {"holds", r.holds},
                       {"lhs", to_string(r.lhs)},
                       {"rhs", to_string(r.rhs)},
                       {"exponent", r.exponent}});
    if (cfg.verbosity > 0 || !r.holds)
      text << "m = (" << join(m) << "): " << (r.holds ? "pass" : "FAIL") << "  " << to_string(r.lhs) << "  vs  "
           << to_string(r.rhs) << '\n';
  }
  if (cfg.format == Format::json)
    print_json(out, {{"check", "lemma7"}, {"holds", all}, {"reports", reports}});
  else
    out << text.str() << "lemma7: " << (all ? "holds" : "fails") << " on " << ms.size() << " vectors\n";
  return all ? kOk : kCheckFailed;
}

int check_prop8_cmd(const RunConfig& cfg, std::ostream& out) {
  std::optional<SublinkTable> table;
  LinkInvariants inv;
  SublinkSource source;
  if (has_diagram(cfg)) {
    table.emplace(load_diagram(cfg));
    inv = table->full();
    source = sublink_source(*table);
  } else {
    inv = invariants_from_flags(cfg);
  }
  std::vector<Prop8Report> reports;
  if (cfg.m)
    reports.push_back(check_prop8(inv, require_m(cfg, inv.lk.size()), source));
  else
    reports = sweep_prop8(inv, cfg.grid, source);

  bool all = true;
  for (const auto& r : reports) all = all && r.holds();
  if (cfg.format == Format::json) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    print_json(out, {{"check", "prop8"}, {"delta", to_string(inv.delta)}, {"holds", all}, {"reports", arr}});
    return all ? kOk : kCheckFailed;
  }
  const auto shown = [&](const Prop8Report& r) { return !r.holds() || cfg.verbosity > 0 || reports.size() == 1; };
  if (std::any_of(reports.begin(), reports.end(), shown))
    out << std::left << std::setw(16) << "m" << std::setw(4) << "d" << std::setw(16) << "d_i" << std::setw(24)
        << "nabla" << "i     ii    iii   iv\n";
  std::size_t passed = 0;
  for (const auto& r : reports) {
    if (r.holds()) ++passed;
    if (shown(r)) {
      out << std::setw(16) << "(" + join(r.m) + ")" << std::setw(4) << r.d << std::setw(16) << join(r.d_i)
          << std::setw(24) << (r.nabla ? to_string(*r.nabla) : std::string("-"));
      for (Verdict v : {r.cond_i, r.cond_ii, r.cond_iii}) out << std::setw(6) << to_string(v);
      out << to_string(r.cond_iv) << '\n';
      if (cfg.verbosity > 0)
        for (const auto& n : r.notes) out << "    " << n << '\n';
    }
  }
  out << "prop8: " << passed << "/" << reports.size() << " vectors pass\n";
  return all ? kOk : kCheckFailed;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  if (cfg.grid < 0) throw InputError("--m-grid must be nonnegative");
  if (cfg.check_kind == "torres") return check_torres(cfg, out);
  if (cfg.check_kind == "torres-fox") return check_torres_fox_cmd(cfg, out);
  if (cfg.check_kind == "lemma7") return check_lemma7_cmd(cfg, out);
  if (cfg.check_kind == "prop8") return check_prop8_cmd(cfg, out);
  throw InputError("unknown check '" + cfg.check_kind + "'");
}

}  // namespace

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    std::string_view item(text.data() + start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty() && item.front() == '+') item.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw InputError("bad integer list '" + text + "'");
    out.push_back(v);
    start = end + 1;
  }
  return out;
}

int execute(const RunConfig& cfg, std::ostream& out) {
  if (cfg.command == "compute") return cmd_compute(cfg, out);
  if (cfg.command == "specialize") return cmd_specialize(cfg, out);
  if (cfg.command == "seifert") return cmd_seifert(cfg, out);
  if (cfg.command == "check") return cmd_check(cfg, out);
  if (cfg.command == "reconstruct") return cmd_reconstruct(cfg, out);
  if (cfg.command == "cable") return cmd_cable(cfg, out);
  throw InputError("unknown command '" + cfg.command + "'");
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multivariable and multilink Alexander polynomials", "alexpoly"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "text";
  std::string m_text;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("-v,--verbose", cfg.verbosity, "Print per-step details");

  auto link_opts = [&](CLI::App* sub) {
    sub->add_option("--pd", cfg.pd, "PD diagram (JSON file or inline document)");
    sub->add_option("--braid", cfg.braid, "Braid {\"strands\": n, \"word\": [...]} (file or inline)");
  };

  auto* compute = app.add_subcommand("compute", "Alexander polynomial and linking matrix of a link");
  link_opts(compute);

  auto* specialize = app.add_subcommand("specialize", "Multilink polynomial from a multivariable one");
  specialize->add_option("--poly", cfg.poly, "Polynomial in t1..tmu (t when mu = 1)")->required();
  specialize->add_option("--mu", cfg.mu, "Number of variables")->required();
  specialize->add_option("--m", m_text, "Multiplicities, e.g. 1,-2,0")->required();
  specialize->add_flag("--raw", cfg.raw, "Omit the (t^d - 1) factor");

  auto* seifert = app.add_subcommand("seifert", "Multilink polynomial from a Seifert pair");
  seifert->add_option("--pair", cfg.pair, "Seifert pair file")->required();

  auto* check = app.add_subcommand("check", "Run one family of necessary conditions");
  check->add_option("kind", cfg.check_kind, "torres | torres-fox | lemma7 | prop8")
      ->required()
      ->check(CLI::IsMember({"torres", "torres-fox", "lemma7", "prop8"}));
  link_opts(check);
  check->add_option("--poly", cfg.poly, "Polynomial instead of a link (torres-fox, prop8)");
  check->add_option("--lk", cfg.lk, "Linking matrix as JSON rows, with --poly");
  check->add_option("--m", m_text, "Single multiplicity vector instead of a sweep");
  check->add_option("--m-grid", cfg.grid, "Sweep bound B: every nonzero m in [-B, B]^mu")->capture_default_str();

  auto* reconstruct = app.add_subcommand("reconstruct", "Recover a polynomial from one specialization");
  reconstruct->add_option("--oracle", cfg.oracle, "JSON object mapping \"m1,...\" to polynomials")->required();
  reconstruct->add_option("--mu", cfg.mu, "Number of variables")->required();
  reconstruct->add_option("--bound", cfg.bound, "Per-variable degree spread bound")->required();
  reconstruct->add_flag("--multilink", cfg.multilink, "Oracle values include the (t^d - 1) factor");

  auto* cable = app.add_subcommand("cable", "Boundary cable data of a multilink");
  link_opts(cable);
  cable->add_option("--m", m_text, "Multiplicities")->required();

  for (auto* sub : {compute, specialize, seifert, check, reconstruct, cable}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.format = format == "json" ? Format::json : Format::text;
    if (!m_text.empty()) cfg.m = parse_int_list(m_text);
    return execute(cfg, out);
  } catch (const MathError& e) {
    err << "alexpoly: internal error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "alexpoly: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "alexpoly: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace alex::cli
