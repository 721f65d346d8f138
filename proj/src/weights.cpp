#include "cyclic_weights/weights.hpp"

#include <algorithm>

#include "cyclic_weights/errors.hpp"

namespace cyclic_weights {

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Params::Params(Int p, Int f) : p_(p), f_(f) {
  if (!is_prime(p) || p <= 3) throw DomainError("p must be a prime > 3 (got " + std::to_string(p) + ")");
  if (f < 1) throw DomainError("f must be >= 1 (got " + std::to_string(f) + ")");
  powers_.reserve(static_cast<std::size_t>(f) + 1);
  Int acc = 1;
  powers_.push_back(acc);
  for (Int j = 0; j < f; ++j) {
    acc = checked_mul(acc, p);
    powers_.push_back(acc);
  }
  q_minus_1_ = acc - 1;
}

Int Weight::digit_value() const {
  Int r = 0;
  for (std::size_t j = 0; j < digits_.size(); ++j) r += digits_[j] * params_.power(j);
  return r;
}

BChar make_bchar(Int e_a, Int e_d, const Params& params) {
  return {params, floor_mod(e_a, params.q_minus_1()), floor_mod(e_d, params.q_minus_1())};
}

Weight make_weight(std::vector<Int> digits, Int m, const Params& params) {
  if (static_cast<Int>(digits.size()) != params.f())
    throw DimensionError("weight needs " + std::to_string(params.f()) + " digits, got " + std::to_string(digits.size()));
  for (auto d : digits)
    if (d < 0 || d > params.p() - 1)
      throw DomainError("digit " + std::to_string(d) + " outside [0, " + std::to_string(params.p() - 1) + "]");
  return Weight(params, std::move(digits), floor_mod(m, params.q_minus_1()));
}

bool is_generic(const Weight& w) {
  const auto d = w.digits();
  const Int top = w.params().p() - 1;
  const bool all_zero = std::all_of(d.begin(), d.end(), [](Int x) { return x == 0; });
  const bool all_top = std::all_of(d.begin(), d.end(), [top](Int x) { return x == top; });
  return !all_zero && !all_top;
}

bool has_boundary_digit(const Weight& w) {
  const Int top = w.params().p() - 1;
  return std::any_of(w.digits().begin(), w.digits().end(), [top](Int x) { return x == 0 || x == top; });
}

Weight s_dual(const Weight& w) {
  if (!is_generic(w)) throw DomainError("s_dual is only defined for generic weights: " + to_string(w));
  std::vector<Int> digits(w.digits().begin(), w.digits().end());
  for (auto& d : digits) d = w.params().p() - 1 - d;
  return make_weight(std::move(digits), w.twist() + w.digit_value(), w.params());
}

BChar chi(const Weight& w) { return make_bchar(w.digit_value() + w.twist(), w.twist(), w.params()); }

BChar s_conjugate(const BChar& c) { return {c.params, c.e_d, c.e_a}; }

Weight weight_from_char(const BChar& c) {
  const Params& params = c.params;
  if (floor_mod(c.e_a - c.e_d, params.q_minus_1()) == 0)
    throw DomainError("character with e_a = e_d equals its s-conjugate and has no generic preimage");
  // r in [1, p^f - 2]; its base-p digits are never all 0 or all p-1.
  Int r = floor_mod(c.e_a - c.e_d, params.q_minus_1());
  std::vector<Int> digits(static_cast<std::size_t>(params.f()));
  for (auto& d : digits) {
    d = r % params.p();
    r /= params.p();
  }
  return make_weight(std::move(digits), c.e_d, params);
}

std::string to_string(const Weight& w) {
  std::string out = "(";
  for (std::size_t j = 0; j < w.digits().size(); ++j) {
    if (j) out += ",";
    out += std::to_string(w.digit(j));
  }
  return out + ")⊗det^" + std::to_string(w.twist());
}

std::string to_string(const BChar& c) { return "(" + std::to_string(c.e_a) + "," + std::to_string(c.e_d) + ")"; }

}  // namespace cyclic_weights
