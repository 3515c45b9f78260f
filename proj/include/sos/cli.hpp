#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sos {

/// Runs the soscone command line. args holds the arguments after the
/// program name. Exit codes: check and lemmas return 0 on full acceptance
/// and 1 otherwise; certify returns 0 (all certified), 2 (some likely-not),
/// or 3 (some inconclusive); usage, parse, and IO errors return 64.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sos
