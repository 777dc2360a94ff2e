#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chromsym {

// Exit codes: 0 success, 1 computation error or failed verification, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Verification cap after applying CHROMSYM_NMAX (which may only lower it).
int verify_cap();

}  // namespace chromsym
