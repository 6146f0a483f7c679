#include "gchain/methods.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "gchain/factorize.hpp"

namespace gchain {

namespace {

std::vector<u64> ones(u64 count) { return std::vector<u64>(count, 1); }

Chain fac(u64 d, int g, bool reorder);

// Paper split: shortest ascending prime-prefix product >= g, backing off one
// factor when only the full product qualifies.
u64 default_split(u64 d, const Factorization& f, int g) {
  u64 p = 1;
  std::size_t j = 0;
  while (p < static_cast<u64>(g) && j < f.primes.size()) {
    p *= f.primes[j];
    ++j;
  }
  if (j == f.primes.size()) p = d / f.primes.back();
  return p;
}

// Optional improvement: divisor (from the prime multiset) closest to g.
u64 closest_split(u64 d, const Factorization& f, int g) {
  std::set<u64> divisors{1};
  for (u64 prime : f.primes) {
    std::set<u64> next = divisors;
    for (u64 q : divisors) {
      const u64 v = sat_mul(q, prime);
      if (v < d) next.insert(v);
    }
    divisors.swap(next);
  }
  divisors.erase(1);
  u64 best = 0;
  u64 best_gap = kMaxValue;
  for (u64 q : divisors) {
    const u64 gap = q > static_cast<u64>(g) ? q - g : static_cast<u64>(g) - q;
    if (gap < best_gap || (gap == best_gap && q < best)) {
      best = q;
      best_gap = gap;
    }
  }
  return best;
}

Chain fac(u64 d, int g, bool reorder) {
  if (d == 1) {
    ChainBuilder b(g);
    return std::move(b).build();
  }
  if (d <= static_cast<u64>(g)) {
    ChainBuilder b(g);
    b.emit(d, ones(d));
    return std::move(b).build();
  }
  if (is_prime(d)) {
    const u64 rem = d % g;  // nonzero: a prime above g has no factor g
    Chain sub = fac(d / g, g, reorder);
    const u32 qi = static_cast<u32>(sub.elements.size() - 1);
    sub.elements.push_back(d - rem);
    sub.steps.push_back(Step{std::vector<u32>(static_cast<std::size_t>(g), qi)});
    Step last;
    last.indices.assign(static_cast<std::size_t>(rem), 0);
    last.indices.push_back(static_cast<u32>(sub.elements.size() - 1));
    sub.elements.push_back(d);
    sub.steps.push_back(std::move(last));
    return sub;
  }
  const Factorization f = factor(d);
  const u64 split = reorder ? closest_split(d, f, g) : default_split(d, f, g);
  return concat_scaled(fac(split, g, reorder), fac(d / split, g, reorder));
}

void check_args(u64 d, int g) {
  if (d < 1) throw Error("target must be >= 1");
  if (g < 2 || g > kMaxArity)
    throw Error("arity bound must be in [2, " + std::to_string(kMaxArity) + "]");
}

// Exact bounded search: can `target` be written as a sum of 2..g values
// already in the builder (repetition allowed)? Returns the summands.
std::optional<std::vector<u64>> one_step_sum(const ChainBuilder& b, u64 target, int g) {
  std::vector<u64> values = b.values();
  std::sort(values.begin(), values.end(), std::greater<>());
  std::vector<u64> picks;
  u64 nodes = 0;
  constexpr u64 kCap = 200'000;
  auto rec = [&](auto&& self, std::size_t start, u64 remaining, int slots) -> bool {
    if (remaining == 0) return picks.size() >= 2;
    if (slots == 0 || ++nodes > kCap) return false;
    for (std::size_t i = start; i < values.size(); ++i) {
      const u64 v = values[i];
      if (v > remaining) continue;
      if (sat_mul(v, static_cast<u64>(slots)) < remaining) break;
      picks.push_back(v);
      if (self(self, i, remaining - v, slots - 1)) return true;
      picks.pop_back();
    }
    return false;
  };
  if (rec(rec, 0, target, g)) return picks;
  return std::nullopt;
}

// Greedy largest-fit sum below target, used as an intermediate when the
// target is not one-step reachable. Always makes progress past the current
// maximum because 1 is available as a filler.
std::pair<u64, std::vector<u64>> greedy_below(const ChainBuilder& b, u64 target, int g) {
  std::vector<u64> values = b.values();
  std::sort(values.begin(), values.end(), std::greater<>());
  std::vector<u64> picks;
  u64 total = 0;
  for (u64 v : values) {
    while (picks.size() < static_cast<std::size_t>(g) && v <= target - total) {
      picks.push_back(v);
      total += v;
      if (total == target) break;
    }
    if (total == target || picks.size() == static_cast<std::size_t>(g)) break;
  }
  if (total >= target || picks.size() < 2)
    throw Error("internal: constant construction made no progress");
  return {total, std::move(picks)};
}

void build_constant(ChainBuilder& b, u64 c, int g) {
  while (!b.contains(c)) {
    if (auto summands = one_step_sum(b, c, g)) {
      b.emit(c, std::move(*summands));
      return;
    }
    auto [value, summands] = greedy_below(b, c, g);
    b.emit(value, std::move(summands));
  }
}

}  // namespace

Chain factor_method(u64 d, int g, bool reorder_factors) {
  check_args(d, g);
  return fac(d, g, reorder_factors);
}

std::pair<Chain, MAryPlan> m_ary_method_with_plan(u64 d, int g, u64 m,
                                                  std::optional<Chain> varsigma) {
  check_args(d, g);
  if (m < 2) throw Error("radix must be >= 2");

  MAryPlan plan;
  plan.m = m;
  plan.digits = digits_of(d, m);
  plan.regime = m < static_cast<u64>(g)    ? MAryRegime::below_g
                : m == static_cast<u64>(g) ? MAryRegime::equal_g
                                           : MAryRegime::above_g;

  ChainBuilder b(g);
  const auto& ds = plan.digits;

  if (d == 1) return {std::move(b).build(), plan};

  if (plan.regime != MAryRegime::above_g) {
    u64 a = ds[0];
    if (a >= 2) b.emit(a, ones(a));
    for (std::size_t i = 1; i < ds.size(); ++i) {
      u64 next = checked_mul(a, m);
      b.emit(next, std::vector<u64>(static_cast<std::size_t>(m), a));
      a = next;
      if (ds[i] != 0) {
        next = checked_add(a, ds[i]);
        std::vector<u64> summands{a};
        summands.resize(1 + static_cast<std::size_t>(ds[i]), 1);
        b.emit(next, std::move(summands));
        a = next;
      }
    }
    return {std::move(b).build(), plan};
  }

  // m > g: explicit constants for the digits that occur, then multiply via
  // scaled replays of a chain for m.
  std::vector<u64> needed;
  for (u64 digit : ds)
    if (digit >= static_cast<u64>(g)) needed.push_back(digit);
  if (ds[0] >= 2 && ds[0] < static_cast<u64>(g)) needed.push_back(ds[0]);
  std::sort(needed.begin(), needed.end());
  needed.erase(std::unique(needed.begin(), needed.end()), needed.end());
  for (u64 c : needed) build_constant(b, c, g);

  if (ds.size() > 1) {
    if (!varsigma) varsigma = best_method(m, g);
    varsigma->verify();
    if (varsigma->g != g || varsigma->target() != m)
      throw Error("varsigma must be a chain for m with the same arity bound");
    plan.varsigma = std::move(varsigma);
    const Chain& vs = *plan.varsigma;

    u64 a = ds[0];
    for (std::size_t i = 1; i < ds.size(); ++i) {
      for (std::size_t j = 1; j < vs.elements.size(); ++j) {
        const u64 value = checked_mul(a, vs.elements[j]);
        std::vector<u64> summands;
        summands.reserve(vs.steps[j - 1].indices.size());
        for (u32 idx : vs.steps[j - 1].indices)
          summands.push_back(checked_mul(a, vs.elements[idx]));
        b.emit(value, std::move(summands));
      }
      a = checked_mul(a, m);
      if (ds[i] != 0) {
        const u64 digit = ds[i];
        std::vector<u64> summands{a};
        if (digit < static_cast<u64>(g)) {
          summands.resize(1 + static_cast<std::size_t>(digit), 1);
        } else {
          summands.push_back(digit);
        }
        b.emit(checked_add(a, digit), std::move(summands));
        a += digit;
      }
    }
  }
  return {std::move(b).build(), plan};
}

Chain m_ary_method(u64 d, int g, u64 m) { return m_ary_method_with_plan(d, g, m).first; }

PowerTree::PowerTree(int g, u64 value_limit, u64 node_limit, std::optional<u64> stop_at)
    : g_(g) {
  if (g < 2 || g > kMaxArity) throw Error("arity bound out of range");
  if (value_limit < 1) throw Error("value limit must be >= 1");

  nodes_.push_back(Node{});
  index_.emplace(1, 0);
  if (stop_at && *stop_at == 1) return;

  std::vector<u64> path;
  std::vector<u64> picks;
  std::vector<std::pair<u64, std::vector<u64>>> found;
  std::unordered_set<u64> local;

  std::size_t begin = 0;
  while (begin < nodes_.size() && index_.size() < value_limit) {
    const std::size_t end = nodes_.size();
    for (std::size_t ni = begin; ni < end; ++ni) {
      // Root-to-node values, ascending.
      path.clear();
      for (u32 walk = static_cast<u32>(ni);; walk = nodes_[walk].parent) {
        path.push_back(nodes_[walk].value);
        if (walk == 0) break;
      }
      std::reverse(path.begin(), path.end());
      const u64 n = path.back();

      // New children are sums that use n at least once: sums avoiding n are
      // already in the tree under an ancestor by the time n is processed.
      found.clear();
      local.clear();
      picks.assign(1, n);
      auto rec = [&](auto&& self, std::size_t idx_max, int slots, u64 sum) -> void {
        for (std::size_t idx = idx_max + 1; idx-- > 0;) {
          const u64 v = path[idx];
          if (v > value_limit - sum) continue;
          const u64 s = sum + v;
          picks.push_back(v);
          if (!index_.contains(s) && local.insert(s).second) found.emplace_back(s, picks);
          if (slots > 1) self(self, idx, slots - 1, s);
          picks.pop_back();
        }
      };
      rec(rec, path.size() - 1, g_ - 1, n);

      std::sort(found.begin(), found.end());
      for (auto& [value, summands] : found) {
        if (nodes_.size() >= node_limit) throw LimitError("tree node limit", node_limit);
        Node node;
        node.value = value;
        node.parent = static_cast<u32>(ni);
        node.level = nodes_[ni].level + 1;
        node.summands = std::move(summands);
        std::sort(node.summands.begin(), node.summands.end());
        index_.emplace(value, static_cast<u32>(nodes_.size()));
        nodes_.push_back(std::move(node));
        if (stop_at && value == *stop_at) return;
      }
    }
    begin = end;
  }
}

int PowerTree::level_of(u64 value) const {
  const auto it = index_.find(value);
  return it == index_.end() ? 0 : static_cast<int>(nodes_[it->second].level);
}

Chain PowerTree::chain_for(u64 value) const {
  const auto it = index_.find(value);
  if (it == index_.end()) throw Error("value " + std::to_string(value) + " is not in the tree");

  std::vector<u32> path_nodes;
  for (u32 walk = it->second;; walk = nodes_[walk].parent) {
    path_nodes.push_back(walk);
    if (walk == 0) break;
  }
  std::reverse(path_nodes.begin(), path_nodes.end());

  Chain chain;
  chain.g = g_;
  for (u32 ni : path_nodes) chain.elements.push_back(nodes_[ni].value);
  for (std::size_t i = 1; i < path_nodes.size(); ++i) {
    Step step;
    for (u64 s : nodes_[path_nodes[i]].summands) {
      const auto pos = std::lower_bound(chain.elements.begin(), chain.elements.begin() + i, s);
      step.indices.push_back(static_cast<u32>(pos - chain.elements.begin()));
    }
    chain.steps.push_back(std::move(step));
  }
  return chain;
}

Chain tree_method(u64 d, int g, u64 node_limit) {
  check_args(d, g);
  PowerTree tree(g, d, node_limit, d);
  return tree.chain_for(d);
}

Chain best_method(u64 d, int g) {
  check_args(d, g);
  Chain best = factor_method(d, g);
  const auto consider = [&](Chain candidate) {
    if (candidate.length() < best.length()) best = std::move(candidate);
  };
  u64 m = static_cast<u64>(g);
  for (int j = 1; j <= 3; ++j) {
    if (j == 1 || m < d) consider(m_ary_method(d, g, m));
    m = sat_mul(m, static_cast<u64>(g));
    if (m == kMaxValue) break;
  }
  if (d <= kBestMethodTreeLimit) consider(tree_method(d, g));
  return best;
}

}  // namespace gchain
