#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gchain/chain.hpp"
#include "gchain/optimal.hpp"

namespace gchain {

/// A comparison-row instance was requested for a (g, k) that fails the
/// row's side condition; what() explains which condition is violated.
class ConditionError : public Error {
 public:
  using Error::Error;
};

/// One method-comparison instance: the witness family member, the two
/// competing chains, and whether the expected winner is strictly shorter.
struct ComparisonRow {
  int row = 1;
  std::string condition;
  int g = 2;
  int k = 0;
  u64 d = 1;
  std::string method_a;  // expected strictly-shorter method
  std::string method_b;
  Chain chain_a;
  Chain chain_b;
  bool a_strictly_shorter = false;
};

/// Builds comparison row 1..7 for the given parameters:
///   1: (g+1)^2            factor vs g-ary     [g+1 not a prime power]
///   2: g^k (g+1)^2        factor vs g-ary     [g > 2 prime, g+1 not a 2-power]
///   3: 2 (g+1)^2          factor vs g-ary     [g+1 = p^a, p > 2 prime, g > 2]
///   4: g^(2+k)            g-ary vs factor     [g not a prime power]
///   5: 2 p g^k            g-ary vs factor     [g = p^a, p > 2 prime, a > 1]
///   6: (g-1)^2 g^(2k)     g^2-ary vs factor   [g prime, g > 2]
///   7: g^(2+k) (2g+1)     tree vs g-ary       [g >= 3]
ComparisonRow table1_row(int row, int g, int k = 0);

/// Two (g, k) instances per row known to satisfy the side condition and
/// reproduce the strict verdict; the default grid of `compare --all-rows`.
std::vector<std::pair<int, int>> default_row_instances(int row);

struct ScholzBrauerProbe {
  int g = 2;
  u64 n = 1;
  u64 worst_d = 1;
  int length = 0;   // l_g(worst_d) when exact, best-method length otherwise
  bool exact = true;
  int l_n = 0;      // l_g(n), always exact
  u64 rhs = 0;      // n - 1 + l_g(n)
  bool holds = true;  // length <= rhs; reported, never asserted for g > 2
};

/// Probes the g-ary method's worst-case family
/// (g^n - 1) + sum_{j=1}^{g-2} j g^j against n - 1 + l_g(n). Falls back to
/// the best-method length (exact = false) when the exact search exhausts
/// its budget.
ScholzBrauerProbe scholz_brauer_probe(int g, u64 n, u64 budget = kSearchBudget);

struct ConstructiveUpper {
  u64 n = 1;
  int g = 2;
  int k = 1;             // radix exponent, after fallback
  bool fallback = false; // prescription came out below 1
  double bound = 0.0;    // g^k + ((k+1)/k) log_g n
  std::size_t achieved = 0;  // m-ary length at m = g^k
  bool within_bound = false; // achieved <= ceil(bound)
};

/// Evaluates the constructive length bound at the prescribed radix exponent
/// k = floor(llog - 2 lllog) (fallback k = 1 when the prescription is < 1)
/// and the length the m-ary method actually achieves at m = g^k.
ConstructiveUpper constructive_upper(u64 n, int g);

struct AsymptoticSample {
  int g = 2;
  u64 n = 1;
  int lambda = 1;
  std::size_t achieved = 0;  // best-method length
  double ratio = 1.0;        // achieved / lambda
  double bound = 0.0;        // constructive bound at n
};

struct RatioScan {
  int g = 2;
  int lambda_min = 1;
  int lambda_max = 1;
  int samples_per_level = 0;
  u64 seed = 0;
  std::vector<AsymptoticSample> samples;  // level-major, draw order within level
  std::map<int, double> mean_by_level;
};

/// Draws samples_per_level reproducible uniform n with floor(log_g n) = level
/// for each level in [lambda_min, lambda_max] and records the best-method
/// length ratio. Throws OverflowError when a level has no in-domain values.
RatioScan ratio_scan(int g, int lambda_min, int lambda_max, int samples_per_level, u64 seed);

}  // namespace gchain
