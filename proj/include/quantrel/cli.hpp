#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "quantrel/relmat.hpp"
#include "quantrel/subtype.hpp"

namespace quantrel {

/// Exit statuses of the command-line tool.
enum ExitCode : int { kOk = 0, kFails = 1, kError = 2 };

/// Runs the tool; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

/// Column-aligned table with a "src -> dst" header line.
std::string format_mat(const Mat& m);
/// "{s0, s1}" for boolean predicates, "[s0: 0, s1: inf]" otherwise.
std::string format_comonoid(const Comonoid& c);

}  // namespace quantrel
