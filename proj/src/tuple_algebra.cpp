#include "cyclic_weights/tuple_algebra.hpp"

#include <sstream>
#include <stdexcept>

#include "cyclic_weights/errors.hpp"

namespace cyclic_weights {

Int checked_add(Int a, Int b) {
  Int out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer overflow in addition");
  return out;
}

Int checked_mul(Int a, Int b) {
  Int out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow in multiplication");
  return out;
}

SignedLinear SignedLinear::make(int sign, Int constant) {
  if (sign != 1 && sign != -1) throw DomainError("leading coefficient must be +1 or -1");
  return {sign, constant};
}

Int SignedLinear::operator()(Int x) const { return checked_add(sign == 1 ? x : checked_mul(-1, x), constant); }

SignedLinear compose(const SignedLinear& outer, const SignedLinear& inner) {
  // s(s'x + c') + c
  return {outer.sign * inner.sign, checked_add(outer.sign == 1 ? inner.constant : checked_mul(-1, inner.constant), outer.constant)};
}

PolyTuple::PolyTuple(std::vector<SignedLinear> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DimensionError("a polynomial tuple needs f >= 1 entries");
  for (const auto& e : entries_)
    if (e.sign != 1 && e.sign != -1) throw DomainError("leading coefficient must be +1 or -1");
}

PolyTuple PolyTuple::identity(std::size_t f) { return PolyTuple(std::vector<SignedLinear>(f, SignedLinear::identity())); }

bool PolyTuple::is_identity() const {
  for (const auto& e : entries_)
    if (e != SignedLinear::identity()) return false;
  return true;
}

std::size_t SignVector::weight() const {
  std::size_t n = 0;
  for (auto b : bits) n += b;
  return n;
}

SignVector operator+(const SignVector& a, const SignVector& b) {
  if (a.size() != b.size()) throw DimensionError("sign vectors of different length");
  SignVector out{std::vector<std::uint8_t>(a.size())};
  for (std::size_t j = 0; j < a.size(); ++j) out.bits[j] = a.bits[j] ^ b.bits[j];
  return out;
}

std::vector<Int> eval_tuple(const PolyTuple& lambda, std::span<const Int> r) {
  if (r.size() != lambda.size())
    throw DimensionError("eval_tuple: tuple has " + std::to_string(lambda.size()) + " entries but r has " +
                         std::to_string(r.size()));
  std::vector<Int> out(r.size());
  for (std::size_t j = 0; j < r.size(); ++j) out[j] = lambda[j](r[j]);
  return out;
}

PolyTuple compose(const PolyTuple& lambda, const PolyTuple& inner) {
  if (lambda.size() != inner.size()) throw DimensionError("compose: tuples of different length");
  std::vector<SignedLinear> out(lambda.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = compose(lambda[j], inner[j]);
  return PolyTuple(std::move(out));
}

PolyTuple rotate(const PolyTuple& lambda, Int i) {
  const auto f = static_cast<Int>(lambda.size());
  std::vector<SignedLinear> out(lambda.size());
  for (Int j = 0; j < f; ++j) out[j] = lambda[floor_mod(j + i, f)];
  return PolyTuple(std::move(out));
}

SignVector rotate(const SignVector& bits, Int i) {
  const auto f = static_cast<Int>(bits.size());
  SignVector out{std::vector<std::uint8_t>(bits.size())};
  for (Int j = 0; j < f; ++j) out.bits[j] = bits.bits[floor_mod(j + i, f)];
  return out;
}

SignVector sign_vector(const PolyTuple& lambda) {
  SignVector out{std::vector<std::uint8_t>(lambda.size())};
  for (std::size_t j = 0; j < lambda.size(); ++j) out.bits[j] = lambda[j].sign == 1 ? 0 : 1;
  return out;
}

std::string to_string(const SignedLinear& poly, const std::string& var) {
  std::ostringstream os;
  if (poly.sign == 1) {
    os << var;
    if (poly.constant > 0) os << '+' << poly.constant;
    if (poly.constant < 0) os << poly.constant;
  } else {
    if (poly.constant != 0) os << poly.constant;
    os << '-' << var;
  }
  return os.str();
}

std::string to_string(const PolyTuple& lambda) {
  std::string out = "(";
  for (std::size_t j = 0; j < lambda.size(); ++j) {
    if (j) out += ", ";
    out += to_string(lambda[j]);
  }
  return out + ")";
}

std::string to_string(const SignVector& bits) {
  std::string out = "(";
  for (std::size_t j = 0; j < bits.size(); ++j) {
    if (j) out += ",";
    out += static_cast<char>('0' + bits.bits[j]);
  }
  return out + ")";
}

}  // namespace cyclic_weights
