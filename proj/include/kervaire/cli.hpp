#ifndef KERVAIRE_CLI_HPP_
#define KERVAIRE_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace kervaire {

/// Exit codes: 0 all hard checks pass, 1 a hard check failed, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace kervaire

#endif  // KERVAIRE_CLI_HPP_
