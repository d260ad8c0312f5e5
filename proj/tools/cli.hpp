#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "compat/model.hpp"

namespace compat::cli {

/// Runs one command line (argv without the program name). Primary output
/// goes to `out` (or --out), diagnostics to `err`. Returns 0 on success,
/// 1 on a domain error (JSON on `err`), 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

/// One panel per set: points, labels, matching edges; edges of a pair that
/// crosses in a panel's set are drawn in red there.
std::string draw_svg(const Instance& inst, const std::optional<Matching>& m);

}  // namespace compat::cli
