#pragma once

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gchain/chain.hpp"

namespace gchain {

/// Node-count guard for tree builds. With pruning at the target the tree
/// holds at most d nodes, so this only bounds memory for huge targets.
inline constexpr u64 kTreeNodeLimit = 10'000'000;

/// best_method consults the tree only below this target; tree cost grows
/// linearly with d while the other methods stay logarithmic, and bulk
/// callers (scans, probes) need a uniform candidate set across magnitudes.
inline constexpr u64 kBestMethodTreeLimit = 1'000;

/// Recursive factor-method chain: (1, d) when d <= g; for prime d > g the
/// chain for (d - d mod g) / g followed by d - (d mod g) and d; otherwise
/// the chain for the shortest ascending prime-factor prefix product >= g
/// composed with the scaled chain for the cofactor. Duplicates removed.
///
/// With reorder_factors the split divisor is instead chosen closest to g
/// among all divisors formed from the prime multiset (non-default; the
/// default output is the unique chain of the plain recursion).
Chain factor_method(u64 d, int g, bool reorder_factors = false);

enum class MAryRegime { below_g, equal_g, above_g };

struct MAryPlan {
  u64 m = 2;
  std::vector<u64> digits;  // base-m digits of the target, most significant first
  MAryRegime regime = MAryRegime::equal_g;
  std::optional<Chain> varsigma;  // auxiliary chain for m, present only when m > g needed it
};

/// Digit-by-digit chain for d in radix m: alternate multiply-by-m steps with
/// digit additions. For m <= g a multiplication is one m-fold sum; for m > g
/// it replays a chain for m (varsigma) scaled by the running value, digits
/// >= g are produced once as explicit constants, and only digits that occur
/// are produced. A caller-supplied varsigma (same g, target m) is honored;
/// otherwise best_method(m, g) is used.
std::pair<Chain, MAryPlan> m_ary_method_with_plan(u64 d, int g, u64 m,
                                                  std::optional<Chain> varsigma = {});
Chain m_ary_method(u64 d, int g, u64 m);

/// Breadth-first tree rooted at 1: the children of a node n are all new sums
/// of 2..g values drawn with repetition from the root-to-n path, attached in
/// increasing order left to right, values above value_limit pruned.
class PowerTree {
 public:
  struct Node {
    u64 value = 1;
    u32 parent = 0;  // index into nodes(); the root points at itself
    u32 level = 1;   // root is level 1
    std::vector<u64> summands;  // path values summing to value; empty for the root
  };

  /// Builds level by level until every value <= value_limit is attached, or
  /// until stop_at first appears when given. Throws LimitError when more
  /// than node_limit nodes would be created.
  PowerTree(int g, u64 value_limit, u64 node_limit = kTreeNodeLimit,
            std::optional<u64> stop_at = {});

  int g() const { return g_; }
  const std::vector<Node>& nodes() const { return nodes_; }

  /// 1-based level of a value, or 0 when it is not in the tree.
  int level_of(u64 value) const;

  /// Root-to-value path as a chain; its length is level_of(value) - 1.
  Chain chain_for(u64 value) const;

 private:
  int g_;
  std::vector<Node> nodes_;
  std::unordered_map<u64, u32> index_;
};

/// Root-to-d path of the pruned tree. Pruning above d cannot change the
/// level of first appearance: tree paths are strictly increasing.
Chain tree_method(u64 d, int g, u64 node_limit = kTreeNodeLimit);

/// Shortest chain among the factor method, the m-ary method for
/// m in {g, g^2, g^3} (radix kept below d and within the domain), and the
/// tree method for small d. Ties resolve in that order.
Chain best_method(u64 d, int g);

}  // namespace gchain
