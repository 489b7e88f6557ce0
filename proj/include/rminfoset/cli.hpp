// Command-line front end, exposed as a library function so the dispatch and
// formatting logic is directly testable. Exit codes: 0 success, 2 no valid
// factorisation, 3 verification or table-reproduction failure.

#ifndef RMINFOSET_CLI_HPP
#define RMINFOSET_CLI_HPP

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace rminfoset {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNoFactorization = 2;
inline constexpr int kExitVerificationFailed = 3;

// argv-style arguments without the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Number of worker threads: RM_INFOSET_THREADS when set, all cores otherwise.
unsigned worker_thread_count();

// Runs fn(i) for i in [0, count) across worker threads. Results must be
// written to per-index slots so the outcome is order-independent.
void parallel_for_index(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace rminfoset

#endif
