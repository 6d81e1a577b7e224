#pragma once
#include <cstdint>

/* Central place for the resource-policy knobs. Every cap that turns an
   exponential algorithm into a usable tool lives here, so the numbers are
   auditable and the error messages can name the constant they enforce. */

namespace fortlab::policy {

/* zf_number_bruteforce scans subsets by increasing cardinality. */
inline constexpr int kZfBruteforceMaxOrder = 30;

/* enumerate_minimal_forts_oracle scans all 2^n - 1 nonempty subsets. */
inline constexpr int kFortOracleMaxOrder = 20;

/* The production enumerator works on single-word adjacency masks. */
inline constexpr int kFortEnumMaxOrder = 64;

/* Default DFS node budget for the production enumerator. Overridable per
   call; the CLI also honors the FORTLAB_BUDGET environment variable. */
inline constexpr std::uint64_t kDefaultSearchBudget = 50'000'000;

/* wheel-seq enumerates joins C_{n-1} v K_1 up to this order. */
inline constexpr int kWheelSequenceMaxOrder = 20;

/* check_uniform_fort_threshold cross-validates the degree criterion against
   an exhaustive scan of all c-subsets up to this order. */
inline constexpr int kUniformThresholdExhaustiveMaxOrder = 16;

}  // namespace fortlab::policy
