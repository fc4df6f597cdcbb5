#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "gwx/gv.hpp"
#include "gwx/wallcross.hpp"

namespace gwx::cli {

enum class Command { Transform, CheckIntegrality, VerifyIdentities, Mu, ExpandSine };
enum class Direction { GwToUgw, UgwToGw, GwToGv, GvToGw };
enum class OutputFormat { Json, Text };

struct JobConfig {
    Command command = Command::VerifyIdentities;
    std::optional<std::string> input_path;
    std::optional<Direction> direction;
    std::optional<int> order;  // command-specific default when absent
    OutputFormat output_format = OutputFormat::Json;
    std::optional<std::string> output_path;
    // expand-sine / mu parameters
    int genus = 0;
    std::optional<int> single_genus;
    int c = 0;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Table file schema:
// { "class": { "c1_dot_beta": <int>, "primitive": <bool> },
//   "kind": "gw" | "ugw" | "gv", "g_max": <int>, "values": { "<genus>": "<p/q>" } }
//
// With fill_missing, genera absent below g_max become zero; otherwise they
// raise MissingGenus. Malformed documents raise ParseError.
GenusTable parse_table(const std::string& text, bool fill_missing);
nlohmann::ordered_json table_to_json(const GenusTable& t);
std::string serialize_table(const GenusTable& t);  // canonical, newline-terminated

/// Executes one job. Reports go to `out` (or the configured output path),
/// diagnostics to `err`. Returns the process exit status.
int run(const JobConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a JobConfig and runs it.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace gwx::cli
