#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace qseries::cli {

enum class Output { text, json, tsv };

struct CliConfig {
    /// Set only when a config file names it; verify then uses it for every entry.
    std::optional<std::int64_t> default_prec;
    std::int64_t enumeration_cap = 45;
    Output output = Output::text;
    std::optional<std::string> report_path;
};

/// key=value lines; '#' starts a comment. Throws DomainError on bad keys or values.
CliConfig parse_config(const std::string &text);

/// Exit codes: 0 success, 1 a check failed, 2 usage or domain error, 3 internal error.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace qseries::cli
