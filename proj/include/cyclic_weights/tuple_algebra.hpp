#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cyclic_weights {

using Int = std::int64_t;

// Checked arithmetic; throws std::overflow_error instead of wrapping.
Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);

/// The polynomial sign*x + constant with sign in {+1, -1}.
struct SignedLinear {
  int sign = 1;
  Int constant = 0;

  static SignedLinear make(int sign, Int constant);
  static constexpr SignedLinear identity() { return {1, 0}; }

  Int operator()(Int x) const;

  friend auto operator<=>(const SignedLinear&, const SignedLinear&) = default;
};

// outer(inner(x)).
SignedLinear compose(const SignedLinear& outer, const SignedLinear& inner);

/// An f-tuple of signed linear polynomials, f >= 1.
class PolyTuple {
 public:
  explicit PolyTuple(std::vector<SignedLinear> entries);

  static PolyTuple identity(std::size_t f);

  std::size_t size() const { return entries_.size(); }
  const SignedLinear& operator[](std::size_t j) const { return entries_[j]; }
  std::span<const SignedLinear> entries() const { return entries_; }
  bool is_identity() const;

  friend auto operator<=>(const PolyTuple&, const PolyTuple&) = default;

 private:
  std::vector<SignedLinear> entries_;
};

/// Mod-2 sign pattern of a PolyTuple: bit j is 0 iff entry j has sign +1.
struct SignVector {
  std::vector<std::uint8_t> bits;

  std::size_t size() const { return bits.size(); }
  std::size_t weight() const;  // number of ones
  bool is_zero() const { return weight() == 0; }

  friend SignVector operator+(const SignVector& a, const SignVector& b);
  friend auto operator<=>(const SignVector&, const SignVector&) = default;
};

// Componentwise evaluation: component j is lambda_j(r_j).
std::vector<Int> eval_tuple(const PolyTuple& lambda, std::span<const Int> r);

// Componentwise composition lambda o lambda'.
PolyTuple compose(const PolyTuple& lambda, const PolyTuple& inner);

// g^i: entry j of the result is entry (j + i) mod f of the input. With this
// direction g^{k-1}mu o mu^(k-1) is exactly the mu^(k) recurrence, so g.mu
// starts with mu_1.
PolyTuple rotate(const PolyTuple& lambda, Int i);
SignVector rotate(const SignVector& bits, Int i);

SignVector sign_vector(const PolyTuple& lambda);

// x-1, p-2-x, ...; `var` names the variable ("x", "r0", ...).
std::string to_string(const SignedLinear& poly, const std::string& var = "x");
std::string to_string(const PolyTuple& lambda);
std::string to_string(const SignVector& bits);

// Mathematical mod into [0, m).
constexpr Int floor_mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace cyclic_weights
