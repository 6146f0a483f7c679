#pragma once

#include <string>
#include <vector>

#include "gchain/chain.hpp"

namespace gchain {

/// One product instruction: dest <- product of 2..g earlier registers.
struct Instruction {
  u32 dest = 0;
  std::vector<u32> operands;
};

/// Register program whose only operation is a product of up to g previously
/// computed registers; register 0 holds the input. Evaluating the program on
/// x leaves x^degree in the output register.
struct StraightLineProgram {
  int g = 2;
  u32 register_count = 1;
  std::vector<Instruction> instructions;
  u32 output_register = 0;
  u64 degree = 1;
};

/// Register i mirrors chain element i; instruction i multiplies the
/// registers named by step i, so exponents add exactly where chain elements
/// added. Program length equals chain length.
StraightLineProgram compile_chain(const Chain& chain);

/// Runs the program over Z/modulus: returns base^degree mod modulus.
/// Requires 0 <= base < modulus and modulus <= 2^32 - 1 so single products
/// stay inside the integer domain.
u64 evaluate_mod(const StraightLineProgram& program, u64 base, u64 modulus);

/// Independent square-and-multiply reference for cross-checking program
/// evaluation. Never routed through chains or programs.
u64 pow_mod(u64 base, u64 exponent, u64 modulus);

/// Deterministic text form, one instruction per line:
///   r<k> = r<i> * r<j> [* ...]
std::string to_listing(const StraightLineProgram& program);

}  // namespace gchain
