#pragma once

// Batch command surface of the mcurve tool.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mcurve/pricing.hpp"

namespace mcurve::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,        ///< bad flags or configuration
    kMissingFile = 2,
    kSchema = 3,       ///< malformed or duplicate input rows
    kCalibration = 4,
    kRowErrors = 5,    ///< the run finished but some rows failed
    kFailure = 6,      ///< any other numerical or domain failure
};

inline const std::vector<std::string>& commands() {
    static const std::vector<std::string> c{"bootstrap", "replicate-fra", "basis-matrix", "credit-sweep",
                                            "csa-sim",   "indices",       "vol-convert"};
    return c;
}

struct RunConfig {
    std::string command;
    std::optional<CivilDate> asof;
    std::vector<std::filesystem::path> quotes;
    SwapConventions conventions;
    std::vector<std::string> recipes{"eonia", "euribor3m", "euribor6m"};
    std::filesystem::path out_dir = ".";
    /// Directory against which relative paths inside the config file resolve.
    std::filesystem::path base_dir = ".";
    /// Per-command blocks ("basis_matrix", "credit_sweep", ...) as given in the config file.
    nlohmann::json sections = nlohmann::json::object();
};

/// Applies a config document on top of `cfg`. Throws ConfigurationError.
void apply_config(RunConfig& cfg, const nlohmann::json& doc);

/// Runs one command. Diagnostics go to `err`, a one-line summary per output file to `log`.
int run(const RunConfig& cfg, std::ostream& log, std::ostream& err);

/// Parses argv (flags win over the config file) and runs.
int main_with_args(int argc, const char* const* argv, std::ostream& log, std::ostream& err);

}  // namespace mcurve::cli
