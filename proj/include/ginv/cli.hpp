#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace ginv {

/// Command-line front end. args excludes the program name. Exit codes:
/// 0 success (including fingerprint-equal and passing verifications),
/// 1 invalid input, 2 verification/equivalence/fuzz failure.
int run_cli(std::vector<std::string> args, std::ostream& out = std::cout,
            std::ostream& err = std::cerr);

}  // namespace ginv
