#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbitkit::cli {

/// Entry point behind the orbitkit binary. `args` excludes the program
/// name. Returns 0 on success or a verified sweep/check, 1 when a
/// conjecture check fails or a counterexample is found, 2 on usage errors
/// (reported on `err`). Sweep bounds may also come from a key=value config
/// file named by the ORBITKIT_CONFIG environment variable; explicit flags
/// win.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace orbitkit::cli
