#pragma once

#include <iosfwd>

namespace qbafx {

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qbafx
