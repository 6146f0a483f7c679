#include "gchain/optimal.hpp"

#include <algorithm>

namespace gchain {

namespace {

void check_args(u64 d, int g) {
  if (d < 1) throw Error("target must be >= 1");
  if (g < 2 || g > kMaxArity)
    throw Error("arity bound must be in [2, " + std::to_string(kMaxArity) + "]");
}

// Distinct sums of 2..g chain elements (repetition allowed) lying in
// (chain.back(), cap], sorted ascending.
void gen_extensions(std::span<const u64> chain, int g, u64 cap, std::vector<u64>& out) {
  out.clear();
  const u64 floor_v = chain.back();
  if (cap <= floor_v) return;

  if (g == 2) {
    for (std::size_t i = 0; i < chain.size(); ++i) {
      const u64 a = chain[i];
      if (a > cap - a) break;  // 2a > cap: every pair from here on is too big
      for (std::size_t j = i; j < chain.size(); ++j) {
        if (chain[j] > cap - a) break;
        const u64 s = a + chain[j];
        if (s > floor_v) out.push_back(s);
      }
    }
  } else {
    // Non-increasing picks by index; prune when even filling the remaining
    // slots with the current value cannot exceed the chain's last element.
    auto rec = [&](auto&& self, std::size_t idx_max, int slots, u64 sum, int count) -> void {
      for (std::size_t idx = idx_max + 1; idx-- > 0;) {
        const u64 v = chain[idx];
        if (v > cap - sum) continue;
        const u64 s = sum + v;
        if (sat_add(s, sat_mul(v, static_cast<u64>(slots - 1))) <= floor_v) break;
        if (count + 1 >= 2 && s > floor_v) out.push_back(s);
        if (slots > 1) self(self, idx, slots - 1, s, count + 1);
      }
    };
    rec(rec, chain.size() - 1, g, 0, 0);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
}

struct ExactSearch {
  u64 d;
  int g;
  u64 budget;
  u64 nodes = 0;
  std::vector<u64> chain;
  std::vector<std::vector<u64>> bufs;
  std::vector<u64> gpow;  // saturated powers of g

  bool dfs(int remaining, bool ascending) {
    if (++nodes > budget) throw LimitError("search budget", budget);
    auto& buf = bufs[chain.size()];
    gen_extensions(chain, g, d, buf);
    if (remaining == 1) {
      if (!std::binary_search(buf.begin(), buf.end(), d)) return false;
      chain.push_back(d);
      return true;
    }
    if (ascending) {
      for (u64 e : buf) {
        if (e == d) continue;  // reached too early: extensions only grow
        if (sat_mul(e, gpow[remaining - 1]) < d) continue;
        chain.push_back(e);
        if (dfs(remaining - 1, ascending)) return true;
        chain.pop_back();
      }
    } else {
      for (std::size_t i = buf.size(); i-- > 0;) {
        const u64 e = buf[i];
        if (e == d) continue;
        if (sat_mul(e, gpow[remaining - 1]) < d) break;
        chain.push_back(e);
        if (dfs(remaining - 1, ascending)) return true;
        chain.pop_back();
      }
    }
    return false;
  }
};

}  // namespace

Bounds bounds(u64 d, int g) {
  check_args(d, g);
  return Bounds{ceil_log(d, g), floor_log(d, g) + nonzero_digits(d, g)};
}

OptimalResult l_g_exact(u64 d, int g, u64 budget) {
  check_args(d, g);
  OptimalResult result;
  result.d = d;
  result.g = g;
  if (d == 1) {
    result.witness.g = g;
    result.witness.elements = {1};
    return result;
  }

  const Bounds bb = bounds(d, g);
  ExactSearch s{.d = d, .g = g, .budget = budget, .nodes = 0, .chain = {}, .bufs = {}, .gpow = {}};
  s.gpow.resize(66);
  for (int k = 0; k < 66; ++k) s.gpow[k] = pow_sat(static_cast<u64>(g), k);

  for (int r = bb.lower;; ++r) {
    if (r > bb.upper) throw Error("internal: exact search exceeded the upper bound");
    s.bufs.resize(static_cast<std::size_t>(r) + 2);
    s.chain.assign(1, 1);
    if (!s.dfs(r, false)) continue;
    s.chain.assign(1, 1);
    if (!s.dfs(r, true)) throw Error("internal: witness pass lost the solution");
    result.l = r;
    result.witness = validate(s.chain, g);
    result.node_count = s.nodes;
    return result;
  }
}

EnumerationTable enumerate_lengths(int g, u64 n_max, u64 budget) {
  check_args(n_max, g);
  EnumerationTable table;
  table.g = g;
  table.n_max = n_max;
  table.l.assign(n_max + 1, -1);
  table.nmc.assign(n_max + 1, 0);
  table.l[1] = 0;
  table.nmc[1] = 1;

  int max_upper = 0;
  for (u64 n = 2; n <= n_max; ++n) max_upper = std::max(max_upper, bounds(n, g).upper);

  u64 unassigned_count = n_max - 1;
  std::vector<u64> unassigned;
  unassigned.reserve(unassigned_count);
  for (u64 n = 2; n <= n_max; ++n) unassigned.push_back(n);

  std::vector<u64> gpow(66);
  for (int k = 0; k < 66; ++k) gpow[k] = pow_sat(static_cast<u64>(g), k);

  u64 nodes = 0;
  std::vector<u64> chain;
  std::vector<std::vector<u64>> bufs;
  std::vector<std::pair<u64, u64>> newly;  // (value, chain count), collected per sweep

  for (int r = 1; unassigned_count > 0; ++r) {
    if (r > max_upper) throw Error("internal: enumeration sweep exceeded the upper bound");
    bufs.resize(static_cast<std::size_t>(r) + 2);
    chain.assign(1, 1);
    newly.clear();

    auto dfs = [&](auto&& self, int remaining) -> void {
      if (++nodes > budget) throw LimitError("enumeration budget", budget);
      auto& buf = bufs[chain.size()];
      gen_extensions(chain, g, n_max, buf);
      if (remaining == 1) {
        for (u64 e : buf)
          if (table.l[e] < 0) newly.emplace_back(e, 1);
        return;
      }
      for (std::size_t i = buf.size(); i-- > 0;) {
        const u64 e = buf[i];
        // Keep the branch only if some still-unassigned target is reachable:
        // targets are chain ends, hence strictly above e.
        const auto it = std::upper_bound(unassigned.begin(), unassigned.end(), e);
        if (it == unassigned.end()) continue;
        if (*it > sat_mul(e, gpow[remaining - 1])) continue;
        chain.push_back(e);
        self(self, remaining - 1);
        chain.pop_back();
      }
    };
    dfs(dfs, r);

    std::sort(newly.begin(), newly.end());
    for (std::size_t i = 0; i < newly.size();) {
      const u64 value = newly[i].first;
      u64 count = 0;
      for (; i < newly.size() && newly[i].first == value; ++i) count += newly[i].second;
      table.l[value] = r;
      table.nmc[value] = count;
      --unassigned_count;
    }
    std::erase_if(unassigned, [&](u64 v) { return table.l[v] >= 0; });
  }

  for (u64 n = 1; n <= n_max; ++n) {
    const int r = table.l[n];
    ++table.count_by_length[r];
    if (!table.least_by_length.contains(r)) table.least_by_length[r] = n;
  }
  return table;
}

SubadditivityReport subadditivity_check(int g, u64 grid_max, u64 budget) {
  check_args(grid_max, g);
  if (grid_max < 2) throw Error("grid_max must be >= 2");
  SubadditivityReport report;
  report.g = g;
  report.grid_max = grid_max;

  std::map<u64, int> memo;
  const auto exact = [&](u64 v) {
    const auto it = memo.find(v);
    if (it != memo.end()) return it->second;
    const int l = l_g_exact(v, g, budget).l;
    memo.emplace(v, l);
    return l;
  };

  for (u64 m = 2; m <= grid_max; ++m) {
    for (u64 n = m; n <= grid_max; ++n) {
      const int l_m = exact(m);
      const int l_n = exact(n);
      const int l_mn = exact(checked_mul(m, n));
      ++report.checked;
      if (l_mn > l_m + l_n) report.violations.push_back({m, n, l_mn, l_m, l_n});
    }
  }
  return report;
}

}  // namespace gchain
