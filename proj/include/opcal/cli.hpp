#ifndef OPCAL_CLI_HPP
#define OPCAL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace opcal::cli {

// Exit codes: 0 success / check verified, 1 check failed, 2 usage or parse
// error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int main(int argc, char** argv);

} // namespace opcal::cli

#endif
