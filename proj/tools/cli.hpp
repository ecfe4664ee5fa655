#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace combinlab {

// Exit codes: 0 ok, 1 negative decision, 2 input error, 3 size limit.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cli_main(int argc, char** argv);

}  // namespace combinlab
