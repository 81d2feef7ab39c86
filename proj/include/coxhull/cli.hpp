#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "coxhull/coxeter.hpp"

namespace coxhull {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // counterexample or verification mismatch
inline constexpr int kExitUsage = 2;  // bad configuration or input
inline constexpr int kExitInternal = 3;  // hull algorithms disagree, I/O failure

struct RunConfig {
  TypeTag type = TypeTag::A2Tilde;
  std::optional<std::string> matrix_json;  // overrides `type` when set
  int radius = 4;
  int radius_cap = 8;
  int jobs = 1;
  std::optional<std::string> report_path;
  std::uint64_t seed = 1;
  int cross_checks = 64;  // seeded triples run through both hull algorithms
  bool timing = true;  // false writes wall_clock_ms = 0 for byte-stable reports
};

// Throws Error{ConfigError}.
void validate(const RunConfig& config);

// Writes `content` to a sibling temporary file and renames it over `path`.
// Throws Error{IoError}.
void write_atomically(const std::string& path, const std::string& content);

int cmd_check(const RunConfig& config, std::ostream& out);

struct HullRequest {
  TypeTag type = TypeTag::A2Tilde;
  std::string u, v;
  std::optional<std::string> w;
  std::optional<std::string> svg_path;
};

int cmd_hull(const HullRequest& request, std::ostream& out);

struct FormulaRequest {
  TypeTag type = TypeTag::A2Tilde;
  std::optional<std::string> xy;  // "x,y"
  std::optional<std::string> orientation;  // "up" or "down"; by parity if absent
  std::optional<std::string> abxy;  // "a,b,x,y"
  std::optional<std::int64_t> d;
  bool verify = false;
};

int cmd_formula(const FormulaRequest& request, std::ostream& out);

struct ProveRequest {
  std::string which;  // "a2" or "c2"
  std::optional<std::int64_t> box;
};

int cmd_prove(const ProveRequest& request, std::ostream& out);

}  // namespace coxhull
