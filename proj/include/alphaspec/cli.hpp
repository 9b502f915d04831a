#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "alphaspec/alpha.hpp"
#include "alphaspec/digraph.hpp"
#include "alphaspec/error.hpp"

namespace alphaspec::cli {

enum class Subcommand { spectrum, bounds, family, verify, trees, km_search };
enum class Format { text, json, csv };

/// Which suites `verify` runs.
enum class Suite { exhaustive, trees, cycle, all };

struct FileInput {
  std::string path;
  friend bool operator==(const FileInput&, const FileInput&) = default;
};

using InputSource = std::variant<std::monostate, FileInput, FamilySpec>;

struct CommandPlan {
  Subcommand subcommand = Subcommand::spectrum;
  InputSource input;
  std::vector<AlphaParam> alphas;
  Format format = Format::text;
  std::optional<std::string> out_path;
  bool exact_rank = false;
  std::size_t n = 0;      ///< verify: order of the exhaustive sweep
  std::size_t n_max = 0;  ///< trees, km-search
  std::vector<AlphaParam> grid;
  bool allow_n5 = false;
  bool progress = false;
  Suite suite = Suite::exhaustive;
  std::optional<std::string> help;  ///< set when --help was given; nothing else is meaningful
};

/// Usage error; the message names the offending flag or subcommand.
class UsageError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInputError = 2;

/// args excludes the program name. Throws UsageError.
CommandPlan parse_args(const std::vector<std::string>& args);

/// Writes the rendered result to plan.out_path or `out`, diagnostics to `err`.
int execute(const CommandPlan& plan, std::ostream& out, std::ostream& err);

/// parse_args + execute, mapping every error to its exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string_view to_string(Subcommand s) noexcept;

}  // namespace alphaspec::cli
