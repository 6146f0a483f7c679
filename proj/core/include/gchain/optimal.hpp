#pragma once

#include <map>
#include <vector>

#include "gchain/chain.hpp"

namespace gchain {

/// Node budget of one exact search.
inline constexpr u64 kSearchBudget = 100'000'000;

/// Node budget of a full enumeration sweep.
inline constexpr u64 kEnumerateBudget = 4'000'000'000;

struct OptimalResult {
  u64 d = 1;
  int g = 2;
  int l = 0;          // exact minimal chain length
  Chain witness;      // lexicographically smallest minimal chain
  u64 node_count = 0;
};

struct Bounds {
  int lower = 0;  // ceil(log_g d)
  int upper = 0;  // floor(log_g d) + nonzero base-g digits
};

/// (ceil(log_g d), floor(log_g d) + mu_g(d)) by integer arithmetic.
Bounds bounds(u64 d, int g);

/// Exact minimal chain length with witness: iterative deepening over the
/// target length r starting at the lower bound, depth-first over ascending
/// partial chains, pruning branches where last * g^(r-i) < d. The witness
/// pass re-runs the final depth in ascending extension order, so the first
/// chain found is the lexicographically smallest.
OptimalResult l_g_exact(u64 d, int g, u64 budget = kSearchBudget);

/// Exact chain lengths for every n <= n_max, with the derived summary
/// functions: count and least n per length, and the number of distinct
/// minimal ascending chains per n.
struct EnumerationTable {
  int g = 2;
  u64 n_max = 1;
  std::vector<int> l;    // l[n], index 0 unused
  std::vector<u64> nmc;  // nmc[n]: distinct ascending value-sequences of length l[n] ending at n
  std::map<int, u64> count_by_length;  // d_g(r) over [1, n_max] only
  std::map<int, u64> least_by_length;  // c_g(r); complete: all smaller n are covered

  int length_of(u64 n) const { return l.at(static_cast<std::size_t>(n)); }
  u64 chains_of(u64 n) const { return nmc.at(static_cast<std::size_t>(n)); }
};

/// Level-synchronous sweep: for r = 1, 2, ... walk every ascending chain of
/// length r (depth-first, O(r) memory), pruned against the shared frontier
/// of still-unassigned targets; values first reached at depth r get l = r
/// and their minimal chains counted.
EnumerationTable enumerate_lengths(int g, u64 n_max, u64 budget = kEnumerateBudget);

struct SubadditivityViolation {
  u64 m = 0;
  u64 n = 0;
  int l_mn = 0;
  int l_m = 0;
  int l_n = 0;
};

struct SubadditivityReport {
  int g = 2;
  u64 grid_max = 2;
  u64 checked = 0;
  std::vector<SubadditivityViolation> violations;  // any entry is an implementation bug
};

/// Verifies l_g(m*n) <= l_g(m) + l_g(n) on the full grid 2 <= m, n <= grid_max
/// with exact lengths.
SubadditivityReport subadditivity_check(int g, u64 grid_max, u64 budget = kSearchBudget);

}  // namespace gchain
