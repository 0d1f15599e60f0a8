#ifndef AOPERM_SELFTEST_HPP_
#define AOPERM_SELFTEST_HPP_

#include <ostream>

namespace aoperm {

/// Runs every acceptance check, printing one PASS/FAIL line per criterion;
/// returns the number of failed criteria.
int run_acceptance(std::ostream& out);

}  // namespace aoperm

#endif  // AOPERM_SELFTEST_HPP_
