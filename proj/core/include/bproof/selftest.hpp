#ifndef BPROOF_SELFTEST_HPP
#define BPROOF_SELFTEST_HPP

#include <ostream>

namespace bproof {

// Runs the built-in sanity checks, one line per check. Returns the number of
// failures (0 = healthy).
int selftest(std::ostream& out);

}  // namespace bproof

#endif  // BPROOF_SELFTEST_HPP
