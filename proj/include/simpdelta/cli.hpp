#pragma once

// Command-line driver behind the `simpdelta` executable.
//
//   simpdelta verify {simp|dwyer|lemma3|chainmap|all} [--max-total N] [--max-k K]
//   simpdelta delta --q Q --i I
//   simpdelta homology [--model sphere|delta|boundary|algebra] [--n N] [--max-degree M]
//   simpdelta dump-transform --name D|Dk|Ak|phi|... [--k K] [--bidegree I,J]
//   simpdelta dump-model [--model ...] [--n N] [--max-degree M]
//
// Exit codes: 0 success, 1 a relation or check failed, 2 configuration error.

#include <iosfwd>
#include <string>
#include <vector>

namespace simpdelta {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Worker count: `requested` (0 = hardware concurrency) capped by the
// SIMPDELTA_THREADS environment variable when set.
unsigned effective_threads(unsigned requested);

}  // namespace simpdelta
