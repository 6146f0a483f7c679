#include "gchain/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "gchain/factorize.hpp"
#include "gchain/methods.hpp"

namespace gchain {

namespace {

Chain g_ary(u64 d, int g) { return m_ary_method(d, g, static_cast<u64>(g)); }

u64 splitmix64(u64& state) {
  state += 0x9e3779b97f4a7c15ULL;
  u64 z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

ComparisonRow table1_row(int row, int g, int k) {
  if (row < 1 || row > 7) throw Error("row must be in 1..7");
  if (g < 2 || g > kMaxArity) throw Error("arity bound out of range");
  if (k < 0) throw Error("k must be >= 0");

  ComparisonRow out;
  out.row = row;
  out.g = g;
  out.k = k;
  const u64 ug = static_cast<u64>(g);

  switch (row) {
    case 1: {
      out.condition = "g+1 not a prime power";
      if (is_prime_power(ug + 1))
        throw ConditionError("row 1 needs g+1 composite with distinct primes; g+1 = " +
                             std::to_string(ug + 1) + " is a prime power");
      out.d = checked_mul(ug + 1, ug + 1);
      out.method_a = "factor";
      out.chain_a = factor_method(out.d, g);
      out.method_b = "g-ary";
      out.chain_b = g_ary(out.d, g);
      break;
    }
    case 2: {
      out.condition = "g > 2 prime, g+1 not a power of 2";
      if (g <= 2 || !is_prime(ug))
        throw ConditionError("row 2 needs g prime and > 2; got g = " + std::to_string(g));
      u64 base = 0;
      if (is_prime_power(ug + 1, &base) && base == 2)
        throw ConditionError("row 2 needs g+1 not a power of 2; g+1 = " + std::to_string(ug + 1));
      out.d = checked_mul(pow_checked(ug, k), checked_mul(ug + 1, ug + 1));
      out.method_a = "factor";
      out.chain_a = factor_method(out.d, g);
      out.method_b = "g-ary";
      out.chain_b = g_ary(out.d, g);
      break;
    }
    case 3: {
      out.condition = "g+1 = p^a with p > 2 prime, g > 2";
      u64 base = 0;
      if (g <= 2 || !is_prime_power(ug + 1, &base) || base == 2)
        throw ConditionError("row 3 needs g > 2 and g+1 a power of an odd prime; g+1 = " +
                             std::to_string(ug + 1));
      out.d = checked_mul(2, checked_mul(ug + 1, ug + 1));
      out.method_a = "factor";
      out.chain_a = factor_method(out.d, g);
      out.method_b = "g-ary";
      out.chain_b = g_ary(out.d, g);
      break;
    }
    case 4: {
      out.condition = "g not a prime power";
      if (is_prime_power(ug))
        throw ConditionError("row 4 needs g with at least two distinct primes; g = " +
                             std::to_string(g) + " is a prime power");
      out.d = pow_checked(ug, 2 + k);
      out.method_a = "g-ary";
      out.chain_a = g_ary(out.d, g);
      out.method_b = "factor";
      out.chain_b = factor_method(out.d, g);
      break;
    }
    case 5: {
      out.condition = "g = p^a with p > 2 prime and a > 1";
      const Factorization f = g >= 2 ? factor(ug) : Factorization{};
      const bool power = f.primes.size() >= 2 && f.primes.front() == f.primes.back();
      if (!power || f.primes.front() == 2)
        throw ConditionError("row 5 needs g a proper power of an odd prime; g = " +
                             std::to_string(g));
      out.d = checked_mul(2, checked_mul(f.primes.front(), pow_checked(ug, k)));
      out.method_a = "g-ary";
      out.chain_a = g_ary(out.d, g);
      out.method_b = "factor";
      out.chain_b = factor_method(out.d, g);
      break;
    }
    case 6: {
      out.condition = "g prime, g > 2";
      if (g <= 2 || !is_prime(ug))
        throw ConditionError("row 6 needs g an odd prime; g = " + std::to_string(g));
      out.d = checked_mul(checked_mul(ug - 1, ug - 1), pow_checked(ug, 2 * k));
      out.method_a = "g^2-ary";
      out.chain_a = m_ary_method(out.d, g, checked_mul(ug, ug));
      out.method_b = "factor";
      out.chain_b = factor_method(out.d, g);
      break;
    }
    case 7: {
      out.condition = "g >= 3";
      if (g < 3) throw ConditionError("row 7 needs g >= 3 (2g+1 reaches level 3 only then)");
      out.d = checked_mul(pow_checked(ug, 2 + k), 2 * ug + 1);
      out.method_a = "tree";
      out.chain_a = tree_method(out.d, g);
      out.method_b = "g-ary";
      out.chain_b = g_ary(out.d, g);
      break;
    }
    default:
      break;
  }
  out.a_strictly_shorter = out.chain_a.length() < out.chain_b.length();
  return out;
}

std::vector<std::pair<int, int>> default_row_instances(int row) {
  switch (row) {
    case 1: return {{5, 0}, {11, 0}};
    case 2: return {{5, 0}, {5, 1}};
    case 3: return {{8, 0}, {26, 0}};
    case 4: return {{6, 0}, {10, 1}};
    case 5: return {{9, 1}, {25, 1}};
    case 6: return {{5, 0}, {5, 1}};
    case 7: return {{3, 0}, {5, 1}};
    default: throw Error("row must be in 1..7");
  }
}

ScholzBrauerProbe scholz_brauer_probe(int g, u64 n, u64 budget) {
  if (n < 1) throw Error("n must be >= 1");
  if (g < 2 || g > kMaxArity) throw Error("arity bound out of range");

  ScholzBrauerProbe probe;
  probe.g = g;
  probe.n = n;

  const u64 ug = static_cast<u64>(g);
  u64 worst = pow_checked(ug, static_cast<int>(n)) - 1;
  for (int j = 1; j <= g - 2; ++j)
    worst = checked_add(worst, checked_mul(static_cast<u64>(j), pow_checked(ug, j)));
  probe.worst_d = worst;

  try {
    probe.length = l_g_exact(worst, g, budget).l;
    probe.exact = true;
  } catch (const LimitError&) {
    probe.length = static_cast<int>(best_method(worst, g).length());
    probe.exact = false;
  }
  probe.l_n = l_g_exact(n, g, budget).l;
  probe.rhs = n - 1 + static_cast<u64>(probe.l_n);
  probe.holds = static_cast<u64>(probe.length) <= probe.rhs;
  return probe;
}

ConstructiveUpper constructive_upper(u64 n, int g) {
  if (n < 1) throw Error("n must be >= 1");
  if (g < 2 || g > kMaxArity) throw Error("arity bound out of range");

  ConstructiveUpper result;
  result.n = n;
  result.g = g;

  int prescribed = 0;
  if (n >= static_cast<u64>(g)) {
    const int l1 = floor_log(n, static_cast<u64>(g));
    const int l2 = floor_log(static_cast<u64>(l1), static_cast<u64>(g));
    const int l3 = l2 >= 1 ? floor_log(static_cast<u64>(l2), static_cast<u64>(g)) : 0;
    prescribed = l2 - 2 * l3;
  }
  result.fallback = prescribed < 1;
  result.k = result.fallback ? 1 : prescribed;

  const double logg_n = std::log(static_cast<double>(n)) / std::log(static_cast<double>(g));
  result.bound = std::pow(static_cast<double>(g), result.k) +
                 (static_cast<double>(result.k + 1) / result.k) * logg_n;
  result.achieved = m_ary_method(n, g, pow_checked(static_cast<u64>(g), result.k)).length();
  result.within_bound = static_cast<double>(result.achieved) <= std::ceil(result.bound);
  return result;
}

RatioScan ratio_scan(int g, int lambda_min, int lambda_max, int samples_per_level, u64 seed) {
  if (g < 2 || g > kMaxArity) throw Error("arity bound out of range");
  if (lambda_min < 1 || lambda_max < lambda_min) throw Error("need 1 <= lambda_min <= lambda_max");
  if (samples_per_level < 1) throw Error("samples_per_level must be >= 1");

  RatioScan scan;
  scan.g = g;
  scan.lambda_min = lambda_min;
  scan.lambda_max = lambda_max;
  scan.samples_per_level = samples_per_level;
  scan.seed = seed;

  u64 state = seed;
  for (int level = lambda_min; level <= lambda_max; ++level) {
    const u64 lo = pow_checked(static_cast<u64>(g), level);  // throws when out of domain
    const u64 next = pow_sat(static_cast<u64>(g), level + 1);
    const u64 hi = next == kMaxValue ? kMaxValue : next - 1;
    const u64 width = hi - lo + 1;  // lo >= 1, so this cannot wrap to 0

    double sum = 0.0;
    for (int i = 0; i < samples_per_level; ++i) {
      const u64 n = lo + splitmix64(state) % width;
      AsymptoticSample sample;
      sample.g = g;
      sample.n = n;
      sample.lambda = level;
      sample.achieved = best_method(n, g).length();
      sample.ratio = static_cast<double>(sample.achieved) / level;
      sample.bound = constructive_upper(n, g).bound;
      sum += sample.ratio;
      scan.samples.push_back(std::move(sample));
    }
    scan.mean_by_level[level] = sum / samples_per_level;
  }
  return scan;
}

}  // namespace gchain
