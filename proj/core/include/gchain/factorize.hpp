#pragma once

#include <optional>
#include <vector>

#include "gchain/chain.hpp"

namespace gchain {

/// Prime factorization of n: factors sorted ascending, with multiplicity,
/// whose product reconstructs n.
struct Factorization {
  u64 n = 1;
  std::vector<u64> primes;
};

/// Deterministic primality for the full 64-bit domain (trial division by
/// small primes, then a strong-probable-prime test over a base set proven
/// complete for 64-bit integers).
bool is_prime(u64 n);

/// Complete sorted factorization for 2 <= n <= 2^64 - 1. Trial division
/// below a fixed bound, then Brent-cycle Pollard rho on the remaining
/// composites. Deterministic: identical input gives identical output.
Factorization factor(u64 n);

/// True when n = p^a for a prime p and a >= 1; reports p via `base`.
bool is_prime_power(u64 n, u64* base = nullptr);

}  // namespace gchain
