#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gchain {

using u64 = std::uint64_t;
using u32 = std::uint32_t;

/// Whole-artifact integer domain: chain values live in [1, 2^64 - 1].
/// Arithmetic that would leave the domain raises OverflowError; there is
/// no silent wraparound anywhere.
inline constexpr u64 kMaxValue = std::numeric_limits<u64>::max();

/// Largest accepted arity bound. Degenerate chains store one summand index
/// per repetition, so memory grows linearly with g; this cap keeps a typo
/// like --g 1e18 from exhausting memory.
inline constexpr int kMaxArity = 1'000'000;

/// Derivation-search budget of validate(), counted per element.
inline constexpr u64 kValidateBudget = 10'000'000;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OverflowError : public Error {
 public:
  OverflowError() : Error("integer domain exceeded (max 2^64 - 1)") {}
};

/// A configurable resource limit was exhausted. what() names the limit.
class LimitError : public Error {
 public:
  LimitError(const std::string& limit_name, u64 limit)
      : Error("limit exceeded: " + limit_name + " (" + std::to_string(limit) + ")"),
        limit_name_(limit_name),
        limit_(limit) {}
  const std::string& limit_name() const { return limit_name_; }
  u64 limit() const { return limit_; }

 private:
  std::string limit_name_;
  u64 limit_;
};

/// validate() found an element with no derivation as a sum of 2..g
/// earlier elements. index is the offending position in the input list.
class NotAChainError : public Error {
 public:
  NotAChainError(std::size_t index, u64 value)
      : Error("element " + std::to_string(value) + " at index " + std::to_string(index) +
              " is not a sum of 2..g earlier elements"),
        index_(index),
        value_(value) {}
  std::size_t index() const { return index_; }
  u64 value() const { return value_; }

 private:
  std::size_t index_;
  u64 value_;
};

// ---------------------------------------------------------------------------
// checked / saturating arithmetic
// ---------------------------------------------------------------------------

inline u64 checked_add(u64 a, u64 b) {
  u64 r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError{};
  return r;
}

inline u64 checked_mul(u64 a, u64 b) {
  u64 r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError{};
  return r;
}

inline u64 sat_add(u64 a, u64 b) {
  u64 r = 0;
  return __builtin_add_overflow(a, b, &r) ? kMaxValue : r;
}

inline u64 sat_mul(u64 a, u64 b) {
  u64 r = 0;
  return __builtin_mul_overflow(a, b, &r) ? kMaxValue : r;
}

/// base^exp, throwing OverflowError when it leaves the domain.
u64 pow_checked(u64 base, int exp);

/// base^exp clamped to kMaxValue. Handy for pruning bounds.
u64 pow_sat(u64 base, int exp);

// ---------------------------------------------------------------------------
// digit / length helpers (integer arithmetic only; no floating point)
// ---------------------------------------------------------------------------

/// Largest e with base^e <= n. Requires n >= 1, base >= 2.
int floor_log(u64 n, u64 base);

/// Smallest e with base^e >= n. Requires n >= 1, base >= 2.
int ceil_log(u64 n, u64 base);

/// Number of nonzero digits of n written in the given base.
/// Requires n >= 1, base >= 2.
int nonzero_digits(u64 n, u64 base);

/// Base-`base` digits of n, most significant first (leading digit nonzero).
std::vector<u64> digits_of(u64 n, u64 base);

// ---------------------------------------------------------------------------
// chains
// ---------------------------------------------------------------------------

/// One derivation: the element equals the sum of the referenced earlier
/// elements. Indices may repeat and are stored sorted ascending; there are
/// between 2 and g of them.
struct Step {
  std::vector<u32> indices;
};

/// A chain for target d with arity bound g: a strictly increasing sequence
/// 1 = a_0 < a_1 < ... < a_r = d where every a_i (i >= 1) is a sum of
/// between 2 and g earlier elements, repetition allowed. Chains are stored
/// in canonical ascending form with duplicates removed.
///
/// Immutable by convention after construction; all operations on chains are
/// pure functions, safe to call concurrently.
struct Chain {
  int g = 2;
  std::vector<u64> elements;
  std::vector<Step> steps;  // steps[i-1] derives elements[i]

  u64 target() const { return elements.back(); }

  /// Number of elements after the leading 1.
  std::size_t length() const { return elements.size() - 1; }

  /// Sum of the summands referenced by the step deriving elements[i].
  u64 step_sum(std::size_t i) const;

  /// Checks every structural invariant (ascending elements starting at 1,
  /// step sizes in [2, g], index bounds, sums reproducing the elements).
  /// Throws Error with a description on the first violation.
  void verify() const;
};

/// Builds a Chain for the given strictly increasing element list by searching
/// a witness derivation for every element (sums of at most g earlier elements
/// with repetition, memoized). Throws NotAChainError on the first element
/// with no derivation, LimitError past `budget` partial sums per element.
Chain validate(std::span<const u64> elements, int g, u64 budget = kValidateBudget);

/// Element-wise product m * chain.elements; derivations carry over
/// index-for-index. Throws OverflowError if any product leaves the domain.
std::vector<u64> scale(const Chain& chain, u64 m);

/// Chain for m*n from a chain for m (prefix) and a chain for n (suffix):
/// the suffix is replayed scaled by m, its leading element (= m) merged
/// with the prefix's last. Length is at most the sum of the input lengths.
Chain concat_scaled(const Chain& prefix, const Chain& suffix);

// ---------------------------------------------------------------------------
// ChainBuilder: emission-order construction with value-level dedup
// ---------------------------------------------------------------------------

/// Collects (value, summand-values) emissions in any order, drops duplicate
/// values (first derivation wins), and finalizes into a canonical ascending
/// Chain. Since every summand is strictly smaller than its sum, sorting by
/// value preserves the "summands precede their element" property.
class ChainBuilder {
 public:
  explicit ChainBuilder(int g);

  bool contains(u64 value) const;

  /// Registers `value` as the sum of `summands` (2..g existing values,
  /// repetition allowed). No-op when the value is already present.
  void emit(u64 value, std::vector<u64> summands);

  /// Distinct values emitted so far, unordered.
  const std::vector<u64>& values() const { return order_; }

  Chain build() &&;

 private:
  int g_;
  std::vector<u64> order_;  // emission order, starts with 1
  std::vector<std::vector<u64>> summands_;
};

}  // namespace gchain
