#pragma once

#include <iosfwd>

#include "durghotona/cli/run_config.hpp"

namespace durghotona::cli {

/// Stable exit-code contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitHarvestFailure = 2;
inline constexpr int kExitProviderFailure = 3;
inline constexpr int kExitInputInvalid = 4;

struct CommandIo {
    std::ostream* out = nullptr;  // human summary; defaults to std::cout
    std::ostream* err = nullptr;  // JSON log lines; defaults to std::cerr
};

/// harvest: site configs -> index.jsonl + articles.jsonl +
/// harvest_warnings.jsonl under output_dir. Exit 0 when at least one
/// article was harvested, 2 on total failure.
int cmd_harvest(const RunConfig& config, const CommandIo& io = {});

/// extract: articles.jsonl -> dataset.csv + excluded.jsonl. Exit 3 on
/// provider/auth failure, 4 on invalid input.
int cmd_extract(const RunConfig& config, const CommandIo& io = {});

/// evaluate: dataset file(s) + gold -> report.txt + report.csv. Exit 4
/// on malformed gold or dataset.
int cmd_evaluate(const RunConfig& config, const CommandIo& io = {});

/// run: harvest -> extract -> evaluate (when gold is configured). Stage
/// artifacts are written even when a later stage fails.
int cmd_run(const RunConfig& config, const CommandIo& io = {});

}  // namespace durghotona::cli
