#pragma once

// Command-line front end. Group specs are cyclic factors separated by `x`,
// `*` or `,`, each written `Z<n>`, `C<n>` or `<n>` with n >= 2; whitespace is
// ignored and letters are case-insensitive. `trivial` names the trivial group.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ordlat/arith.hpp"
#include "ordlat/group.hpp"

namespace ordlat::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainFailure = 1,  // not isomorphic, not realizable, mismatch, axiom failure
  kUsageError = 2,     // bad arguments, parse errors, size caps
};

// Factors exactly as written, before canonicalization.
std::vector<Natural> parse_cyclic_factors(std::string_view spec);
AbelianGroup parse_group_spec(std::string_view spec);

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordlat::cli
