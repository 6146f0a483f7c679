#include "gchain/factorize.hpp"

#include <algorithm>
#include <numeric>

namespace gchain {

namespace {

using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 pow_mod_u64(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

constexpr u64 kSmallPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

// Strong-probable-prime bases covering all 64-bit integers.
constexpr u64 kMillerRabinBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool strong_probable_prime(u64 n, u64 base) {
  const int s = __builtin_ctzll(n - 1);
  const u64 d = (n - 1) >> s;
  u64 x = pow_mod_u64(base, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Brent-cycle rho with batched gcd. Deterministic increment schedule.
u64 pollard_rho(u64 n) {
  for (u64 c = 1;; ++c) {
    const auto step = [&](u64 x) { return static_cast<u64>((u128(x) * x + c) % n); };
    u64 x = 2, y = 2, q = 1, factor = 1;
    u64 xs = x;
    const int batch = 128;
    for (u64 r = 1; factor == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = step(y);
      for (u64 k = 0; k < r && factor == 1; k += batch) {
        xs = y;
        const u64 limit = std::min<u64>(batch, r - k);
        for (u64 i = 0; i < limit; ++i) {
          y = step(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        factor = std::gcd(q, n);
      }
    }
    if (factor == n) {
      // Back-track one at a time from the last batch start.
      factor = 1;
      u64 ys = xs;
      while (factor == 1) {
        ys = step(ys);
        factor = std::gcd(x > ys ? x - ys : ys - x, n);
      }
    }
    if (factor != n) return factor;
  }
}

void factor_into(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const u64 d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : kSmallPrimes) {
    if (n % p == 0) return n == p;
  }
  if (n < 101 * 101) return true;
  for (u64 base : kMillerRabinBases) {
    if (!strong_probable_prime(n, base)) return false;
  }
  return true;
}

Factorization factor(u64 n) {
  if (n < 2) throw Error("factor requires n >= 2");
  Factorization f;
  f.n = n;
  for (u64 p : kSmallPrimes) {
    while (n % p == 0) {
      f.primes.push_back(p);
      n /= p;
    }
  }
  factor_into(n, f.primes);
  std::sort(f.primes.begin(), f.primes.end());
  return f;
}

bool is_prime_power(u64 n, u64* base) {
  if (n < 2) return false;
  const Factorization f = factor(n);
  if (f.primes.front() != f.primes.back()) return false;
  if (base != nullptr) *base = f.primes.front();
  return true;
}

}  // namespace gchain
