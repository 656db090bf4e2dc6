#pragma once

#include <ostream>

namespace grmod {
namespace cli {

/* Exit codes: 0 success (including hypothesis-not-met verdicts),
 * 1 FALSIFIED verdict / oracle mismatch / runtime failure,
 * 2 usage or parse errors. */
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cli
}  // namespace grmod
