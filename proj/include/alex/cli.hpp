#pragma once

// The `alexpoly` command line. Exit codes: 0 when the command succeeded and
// every requested check holds, 1 when a check fails, 2 on bad input.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace alex::cli {

enum class Format { text, json };

struct RunConfig {
  std::string command;     // compute | specialize | seifert | check | reconstruct | cable
  std::string check_kind;  // torres | torres-fox | lemma7 | prop8
  // Inputs: a file path, or an inline JSON document when it starts with '{'.
  std::string pd;
  std::string braid;
  std::string pair;
  std::string oracle;
  std::string poly;
  std::string lk;  // JSON rows
  std::size_t mu = 0;
  std::optional<std::vector<std::int64_t>> m;
  std::int64_t grid = 3;
  std::int64_t bound = 0;
  bool raw = false;
  bool multilink = false;
  Format format = Format::text;
  int verbosity = 0;
};

/// Parses a comma-separated integer list such as "1,-2,0".
std::vector<std::int64_t> parse_int_list(const std::string& text);

/// Runs one configured command; returns the exit code. Throws alex::Error
/// subclasses on bad input.
int execute(const RunConfig& cfg, std::ostream& out);

/// Parses argv, runs, and maps exceptions to exit code 2 with a message on err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace alex::cli
