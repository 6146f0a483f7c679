#include "gchain/powerprog.hpp"

namespace gchain {

StraightLineProgram compile_chain(const Chain& chain) {
  chain.verify();
  StraightLineProgram program;
  program.g = chain.g;
  program.register_count = static_cast<u32>(chain.elements.size());
  program.output_register = program.register_count - 1;
  program.degree = chain.target();
  program.instructions.reserve(chain.steps.size());
  for (std::size_t i = 0; i < chain.steps.size(); ++i)
    program.instructions.push_back({static_cast<u32>(i + 1), chain.steps[i].indices});
  return program;
}

u64 evaluate_mod(const StraightLineProgram& program, u64 base, u64 modulus) {
  if (modulus < 2) throw Error("modulus must be >= 2");
  if (modulus - 1 > kMaxValue / (modulus - 1))
    throw OverflowError{};  // a single product of residues would leave the domain
  if (base >= modulus) throw Error("base must satisfy 0 <= base < modulus");

  std::vector<u64> registers(program.register_count, 0);
  registers[0] = base % modulus;
  for (const Instruction& ins : program.instructions) {
    u64 value = 1 % modulus;
    for (u32 op : ins.operands) value = (value * registers.at(op)) % modulus;
    registers.at(ins.dest) = value;
  }
  return registers.at(program.output_register);
}

u64 pow_mod(u64 base, u64 exponent, u64 modulus) {
  if (modulus < 2) throw Error("modulus must be >= 2");
  using u128 = unsigned __int128;
  u64 result = 1 % modulus;
  base %= modulus;
  while (exponent != 0) {
    if (exponent & 1) result = static_cast<u64>(u128(result) * base % modulus);
    base = static_cast<u64>(u128(base) * base % modulus);
    exponent >>= 1;
  }
  return result;
}

std::string to_listing(const StraightLineProgram& program) {
  std::string text;
  for (const Instruction& ins : program.instructions) {
    text += "r" + std::to_string(ins.dest) + " =";
    for (std::size_t i = 0; i < ins.operands.size(); ++i) {
      text += i == 0 ? " r" : " * r";
      text += std::to_string(ins.operands[i]);
    }
    text += "\n";
  }
  return text;
}

}  // namespace gchain
