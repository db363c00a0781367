#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace conifold {

// Entry point shared by the real binary and the in-process tests. Returns the
// process exit code: 0 success, 1 verification failure, 2 usage or data error.
// Subcommands: gen-quintic, preset, rank, snf, good-relation, search, surgery,
// fibered, verify-localmodel, reproduce-prop.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace conifold
