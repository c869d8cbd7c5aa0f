#pragma once

#include <ostream>

#include "nmg/experiments.hpp"

namespace nmg {

/// Exit codes of a run.
enum ExitCode { kPass = 0, kAssertionFailed = 1, kError = 2 };

/// Runs cfg.mode, writes CSV, JSON summary and SVG files into cfg.output_dir
/// and returns the exit code. Library errors propagate as exceptions.
int execute(const RunConfig& cfg, std::ostream& log);

}  // namespace nmg
