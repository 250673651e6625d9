#pragma once

// Command layer behind the schurdex executable: one operand in, one JSON
// record and exit status out, with batch runs and table rendering.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "schurdex/errors.hpp"
#include "schurdex/router.hpp"

namespace schurdex::cli {

enum class Command { Index, Decompose, Quat, Efg, Group };

/// Throws std::invalid_argument.
Command parse_command(std::string_view name);
std::string_view command_name(Command c);

enum ExitCode : int { kOk = 0, kInternal = 1, kParse = 2, kUnsupported = 3, kDisagreement = 4 };

int exit_code_for(ErrorKind kind);

struct Options {
    std::optional<Route> route;
    bool check = false;
};

struct Outcome {
    nlohmann::json record;
    int exit_code = kOk;
};

/// Operands: a descriptor for index, decompose and group; "a b" for quat;
/// "n F p" for efg.
Outcome run(Command c, const std::string& operand, const Options& opts = {});

/// Runs operands in parallel; results keep the input order.
std::vector<Outcome> run_batch(Command c, const std::vector<std::string>& operands, const Options& opts = {});

/// Highest-priority status across a batch.
int combined_exit_code(const std::vector<Outcome>& outcomes);

/// Non-blank lines with `#` comments stripped.
std::vector<std::string> read_corpus(std::istream& in);

/// Compact JSON, keys sorted.
std::string render_json(const Outcome& o);
/// Aligned columns, one row per outcome.
std::string render_table(Command c, const std::vector<Outcome>& outcomes);

}  // namespace schurdex::cli
