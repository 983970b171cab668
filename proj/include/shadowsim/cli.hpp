#pragma once

#include <string>
#include <vector>

namespace shadowsim {

// Front end behind the shadowsim binary; exposed so tests can drive runs
// in-process. args excludes argv[0]. Exit codes: 0 ok, 1 schema,
// 2 verification, 3 leakage, 4 non-Hermitian, 5 degenerate shadow,
// 6 capacity.
int cli_main(const std::vector<std::string>& args);
int cli_main(int argc, char** argv);

}  // namespace shadowsim
