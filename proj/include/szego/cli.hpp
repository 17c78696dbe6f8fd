#pragma once

// Command-line front end. Exit codes: 0 success, 1 domain error (JSON on the
// error stream), 2 usage error.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace szego::cli {

/// SZEGO_SEED when set to an unsigned integer, otherwise 1.
std::uint64_t default_seed();

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace szego::cli
