#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gwtqft/partition.hpp"
#include "gwtqft/series.hpp"

namespace gwtqft {

/// "2,1;3" -> [(2,1), (3)]. Whitespace is ignored; every partition must sum
/// to d. Errors carry the byte offset into `text`. An empty string is the
/// empty list.
std::vector<Partition> parse_boundary_spec(const std::string& text, int d);

/// Inverse of parse_boundary_spec: "2,1;3".
std::string render_boundary_spec(const std::vector<Partition>& boundaries);

struct Command {
  std::string name;
  std::optional<int> d;
  int genus = 0;
  /// Unset means the command's default (kDefaultOrder, or the input's own
  /// order for `lift`).
  std::optional<std::size_t> order;
  std::string boundaries;
  std::string model;
  std::string alpha;
  int dmax = 6;
  std::string suite = "all";
  std::string input;
  int max_d = 5;
  std::optional<std::size_t> arity;
  unsigned workers = 1;
  bool json = false;
  bool text = false;
};

struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Parses argv-style arguments (without the program name). Usage errors are
/// reported through `result` with exit code 2 and no command.
std::optional<Command> parse_command(const std::vector<std::string>& args, CommandResult& result);

/// Exit codes: 0 success, 1 computation error or failed verification,
/// 2 usage / parse / domain error, 3 enumeration budget exceeded.
CommandResult run(const Command& cmd);

CommandResult run_cli(const std::vector<std::string>& args);

}  // namespace gwtqft
