#pragma once

#include <iosfwd>

namespace disq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;   // probabilistic run did not succeed
inline constexpr int kExitUsage = 2;     // bad flags or invalid N / a
inline constexpr int kExitCapacity = 3;  // simulator capacity exceeded

// Entry point shared by the executable and the tests. Subcommands: order,
// factor, resources. DISQ_SEED supplies the seed when --seed is absent.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace disq::cli
