#include "gchain/chain.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace gchain {

u64 pow_checked(u64 base, int exp) {
  u64 r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

u64 pow_sat(u64 base, int exp) {
  u64 r = 1;
  for (int i = 0; i < exp; ++i) {
    r = sat_mul(r, base);
    if (r == kMaxValue) return r;
  }
  return r;
}

int floor_log(u64 n, u64 base) {
  if (n < 1 || base < 2) throw Error("floor_log requires n >= 1, base >= 2");
  int e = 0;
  u64 p = 1;
  while (p <= n / base) {
    p *= base;
    ++e;
  }
  return e;
}

int ceil_log(u64 n, u64 base) {
  if (n < 1 || base < 2) throw Error("ceil_log requires n >= 1, base >= 2");
  if (n == 1) return 0;
  return floor_log(n - 1, base) + 1;
}

int nonzero_digits(u64 n, u64 base) {
  if (n < 1 || base < 2) throw Error("nonzero_digits requires n >= 1, base >= 2");
  int count = 0;
  while (n != 0) {
    if (n % base != 0) ++count;
    n /= base;
  }
  return count;
}

std::vector<u64> digits_of(u64 n, u64 base) {
  if (n < 1 || base < 2) throw Error("digits_of requires n >= 1, base >= 2");
  std::vector<u64> ds;
  while (n != 0) {
    ds.push_back(n % base);
    n /= base;
  }
  std::reverse(ds.begin(), ds.end());
  return ds;
}

u64 Chain::step_sum(std::size_t i) const {
  u64 sum = 0;
  for (u32 idx : steps.at(i - 1).indices) sum = checked_add(sum, elements.at(idx));
  return sum;
}

void Chain::verify() const {
  if (g < 2 || g > kMaxArity) throw Error("chain arity bound out of range");
  if (elements.empty()) throw Error("chain has no elements");
  if (elements.front() != 1) throw Error("chain must start at 1");
  if (steps.size() != elements.size() - 1) throw Error("chain needs one step per element after 1");
  for (std::size_t i = 1; i < elements.size(); ++i) {
    if (elements[i] <= elements[i - 1]) throw Error("chain elements must be strictly increasing");
    const Step& s = steps[i - 1];
    if (s.indices.size() < 2 || s.indices.size() > static_cast<std::size_t>(g))
      throw Error("step summand count outside [2, g] at index " + std::to_string(i));
    u64 sum = 0;
    u32 prev = 0;
    for (u32 idx : s.indices) {
      if (idx >= i) throw Error("step references a later element at index " + std::to_string(i));
      if (idx < prev) throw Error("step indices must be sorted ascending");
      prev = idx;
      sum = checked_add(sum, elements[idx]);
    }
    if (sum != elements[i])
      throw Error("step sum " + std::to_string(sum) + " does not reproduce element " +
                  std::to_string(elements[i]));
  }
}

namespace {

// Witness search for validate(): non-increasing index picks with repetition,
// at most g of them, summing to the target. Failed (remaining, start, slots)
// states are memoized across all elements of the call.
struct DerivationSearch {
  std::span<const u64> prefix;
  int g;
  u64 budget;
  u64 nodes = 0;
  std::vector<u32> picks;

  struct Key {
    u64 remaining;
    u32 idx;
    u32 slots;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      u64 h = k.remaining * 0x9e3779b97f4a7c15ULL;
      h ^= (static_cast<u64>(k.idx) << 32) | k.slots;
      h *= 0xff51afd7ed558ccdULL;
      return static_cast<std::size_t>(h ^ (h >> 33));
    }
  };
  std::unordered_set<Key, KeyHash> failed;

  bool search(u64 remaining, u32 idx_max, int slots_left) {
    if (remaining == 0) return picks.size() >= 2;
    if (slots_left == 0) return false;
    if (++nodes > budget) throw LimitError("validation budget", budget);
    Key key{remaining, idx_max, static_cast<u32>(slots_left)};
    if (failed.contains(key)) return false;
    for (u32 j = idx_max + 1; j-- > 0;) {
      const u64 v = prefix[j];
      if (v > remaining) continue;
      // Even slots_left copies of v cannot reach the target; smaller picks
      // cannot either.
      if (sat_mul(v, static_cast<u64>(slots_left)) < remaining) break;
      picks.push_back(j);
      if (search(remaining - v, j, slots_left - 1)) return true;
      picks.pop_back();
    }
    failed.insert(key);
    return false;
  }
};

}  // namespace

Chain validate(std::span<const u64> elements, int g, u64 budget) {
  if (g < 2 || g > kMaxArity) throw Error("arity bound must be in [2, " + std::to_string(kMaxArity) + "]");
  if (elements.empty()) throw Error("element list is empty");
  if (elements.front() != 1) throw Error("element list must start at 1");
  for (std::size_t i = 1; i < elements.size(); ++i)
    if (elements[i] <= elements[i - 1]) throw Error("element list must be strictly increasing");

  Chain chain;
  chain.g = g;
  chain.elements.assign(elements.begin(), elements.end());

  DerivationSearch s{.prefix = elements, .g = g, .budget = budget, .nodes = 0, .picks = {}, .failed = {}};
  for (std::size_t i = 1; i < elements.size(); ++i) {
    s.nodes = 0;
    s.picks.clear();
    if (!s.search(elements[i], static_cast<u32>(i - 1), g))
      throw NotAChainError(i, elements[i]);
    Step step;
    step.indices.assign(s.picks.begin(), s.picks.end());
    std::sort(step.indices.begin(), step.indices.end());
    chain.steps.push_back(std::move(step));
  }
  return chain;
}

std::vector<u64> scale(const Chain& chain, u64 m) {
  if (m < 1) throw Error("scale factor must be >= 1");
  std::vector<u64> out;
  out.reserve(chain.elements.size());
  for (u64 v : chain.elements) out.push_back(checked_mul(v, m));
  return out;
}

Chain concat_scaled(const Chain& prefix, const Chain& suffix) {
  if (prefix.g != suffix.g) throw Error("concat_scaled requires equal arity bounds");
  const u64 m = prefix.target();
  const u32 prefix_last = static_cast<u32>(prefix.elements.size() - 1);

  Chain out = prefix;
  for (std::size_t i = 1; i < suffix.elements.size(); ++i) {
    const u64 v = checked_mul(m, suffix.elements[i]);
    Step step;
    step.indices.reserve(suffix.steps[i - 1].indices.size());
    for (u32 idx : suffix.steps[i - 1].indices)
      step.indices.push_back(idx == 0 ? prefix_last : prefix_last + idx);
    out.elements.push_back(v);
    out.steps.push_back(std::move(step));
  }
  return out;
}

ChainBuilder::ChainBuilder(int g) : g_(g) {
  if (g < 2 || g > kMaxArity) throw Error("arity bound out of range");
  order_.push_back(1);
  summands_.emplace_back();
}

bool ChainBuilder::contains(u64 value) const {
  return std::find(order_.begin(), order_.end(), value) != order_.end();
}

void ChainBuilder::emit(u64 value, std::vector<u64> summands) {
  if (contains(value)) return;
  if (summands.size() < 2 || summands.size() > static_cast<std::size_t>(g_))
    throw Error("emission needs 2..g summands");
  u64 sum = 0;
  for (u64 s : summands) {
    if (!contains(s)) throw Error("emission references an absent value " + std::to_string(s));
    sum = checked_add(sum, s);
  }
  if (sum != value) throw Error("emission sum mismatch for " + std::to_string(value));
  order_.push_back(value);
  summands_.push_back(std::move(summands));
}

Chain ChainBuilder::build() && {
  std::vector<std::size_t> perm(order_.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return order_[a] < order_[b]; });

  Chain chain;
  chain.g = g_;
  chain.elements.reserve(order_.size());
  std::unordered_map<u64, u32> rank;
  rank.reserve(order_.size() * 2);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    chain.elements.push_back(order_[perm[i]]);
    rank.emplace(order_[perm[i]], static_cast<u32>(i));
  }
  for (std::size_t i = 1; i < perm.size(); ++i) {
    Step step;
    step.indices.reserve(summands_[perm[i]].size());
    for (u64 s : summands_[perm[i]]) step.indices.push_back(rank.at(s));
    std::sort(step.indices.begin(), step.indices.end());
    chain.steps.push_back(std::move(step));
  }
  return chain;
}

}  // namespace gchain
