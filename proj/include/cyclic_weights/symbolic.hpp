#pragma once

#include <string>
#include <vector>

#include "cyclic_weights/tuple_algebra.hpp"

namespace cyclic_weights {

// sign*r_j + p_coeff*p + offset, with p kept as a symbol.
struct SymbolicDigit {
  int sign = 1;
  Int p_coeff = 0;
  Int offset = 0;

  Int evaluate(Int p, Int r) const { return sign * r + p_coeff * p + offset; }
  friend auto operator<=>(const SymbolicDigit&, const SymbolicDigit&) = default;
};

using SymbolicTuple = std::vector<SymbolicDigit>;

struct SymbolicPair {
  SymbolicTuple sub;
  SymbolicTuple quotient;
};

// Digit forms of sigma_1, ..., sigma_l (as nu^(k) applied to (r_0, ...))
// for general p, seeded by g^s.mu. f must be > 1.
std::vector<SymbolicTuple> symbolic_chain(Int f, Int seed_rotation = 0);

// Pairs (sigma_k, sigma_{k-1}^[s]) for k = 1..l, twists dropped.
std::vector<SymbolicPair> symbolic_module(Int f, Int seed_rotation = 0);

// Digit forms of s-duals: p-1 - d.
SymbolicTuple symbolic_dual(const SymbolicTuple& t);

// "p-2-r1", "r0+1", "p-r0"
std::string to_string(const SymbolicDigit& d, std::size_t j);
std::string to_string(const SymbolicTuple& t);

}  // namespace cyclic_weights
