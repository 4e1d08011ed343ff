#pragma once

#include <ostream>

namespace wheeler {

/// Subcommands check, gen-ov and bench. Exit codes: 0 wheeler or success,
/// 1 non-wheeler, 2 usage or input error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wheeler
