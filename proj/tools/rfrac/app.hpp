#pragma once

#include <iosfwd>

namespace rfrac::cli {

// Exit codes: 0 all checks pass, 1 a check failed, 2 bad arguments or config, 3 parameters
// outside the model's domain.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace rfrac::cli
