#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "cyclic_weights/tuple_algebra.hpp"

namespace cyclic_weights {

/// Residual characteristic p (prime, p > 3) and residue degree f.
class Params {
 public:
  // Throws DomainError unless p is a prime > 3 and f >= 1.
  Params(Int p, Int f);

  Int p() const { return p_; }
  Int f() const { return f_; }
  Int q_minus_1() const { return q_minus_1_; }
  // p^j for 0 <= j <= f.
  Int power(std::size_t j) const { return powers_.at(j); }
  // l = f for odd f, 2f for even f.
  Int chain_length() const { return f_ % 2 ? f_ : 2 * f_; }

  friend bool operator==(const Params& a, const Params& b) { return a.p_ == b.p_ && a.f_ == b.f_; }
  friend std::strong_ordering operator<=>(const Params& a, const Params& b) {
    if (auto c = a.p_ <=> b.p_; c != 0) return c;
    return a.f_ <=> b.f_;
  }

 private:
  Int p_;
  Int f_;
  Int q_minus_1_;
  std::vector<Int> powers_;
};

bool is_prime(Int n);

/// r (x) det^m: f digits in [0, p-1] and a twist reduced mod p^f - 1.
class Weight {
 public:
  const Params& params() const { return params_; }
  std::span<const Int> digits() const { return digits_; }
  Int digit(std::size_t j) const { return digits_[j]; }
  Int twist() const { return twist_; }
  // r = sum_j r_j p^j
  Int digit_value() const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    if (auto c = a.params_ <=> b.params_; c != 0) return c;
    if (auto c = a.digits_ <=> b.digits_; c != 0) return c;
    return a.twist_ <=> b.twist_;
  }

 private:
  Weight(Params params, std::vector<Int> digits, Int twist)
      : params_(std::move(params)), digits_(std::move(digits)), twist_(twist) {}
  friend Weight make_weight(std::vector<Int> digits, Int m, const Params& params);

  Params params_;
  std::vector<Int> digits_;
  Int twist_;
};

/// Character diag(a, d) -> a^{e_a} d^{e_d} of B/U; exponents mod p^f - 1.
struct BChar {
  Params params;
  Int e_a = 0;
  Int e_d = 0;

  friend bool operator==(const BChar&, const BChar&) = default;
  friend auto operator<=>(const BChar&, const BChar&) = default;
};

BChar make_bchar(Int e_a, Int e_d, const Params& params);

// Validates digits against [0, p-1]; reduces m.
Weight make_weight(std::vector<Int> digits, Int m, const Params& params);

// False exactly for (0,...,0) and (p-1,...,p-1) digit tuples.
bool is_generic(const Weight& w);
// True when some digit is 0 or p-1 (outside the box [1, p-2]).
bool has_boundary_digit(const Weight& w);

// (p-1-r_0, ..., p-1-r_{f-1}) (x) det^{m + r}. Generic weights only.
Weight s_dual(const Weight& w);

// (r + m, m).
BChar chi(const Weight& w);
BChar s_conjugate(const BChar& c);

// Inverse of chi on generic weights; DomainError when e_a == e_d.
Weight weight_from_char(const BChar& c);

// "(0,2)⊗det^10"
std::string to_string(const Weight& w);
std::string to_string(const BChar& c);

}  // namespace cyclic_weights
