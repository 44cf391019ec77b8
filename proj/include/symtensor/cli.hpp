#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symtensor {

/// Runs the command line tool. args excludes the program name.
/// Returns 0 on success, 1 when verification finds a mismatch and 2 on
/// usage or input errors.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symtensor
