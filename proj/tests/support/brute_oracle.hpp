#pragma once

#include <vector>

#include "gchain/chain.hpp"

namespace gchain::testsupport {

/// Exhaustive table produced by plain breadth-first expansion of every
/// ascending chain with values <= n_max. No pruning beyond the value cap,
/// no shared state with the production engines; deliberately naive and
/// only practical for small n_max.
struct BruteTable {
  u64 n_max = 1;
  std::vector<int> l;                         // l[n], index 0 unused
  std::vector<u64> nmc;                       // minimal ascending chains ending at n
  std::vector<std::vector<u64>> lex_witness;  // lexicographically least minimal chain per n
};

BruteTable brute_force_table(int g, u64 n_max);

}  // namespace gchain::testsupport
