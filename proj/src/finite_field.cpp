#include "cyclic_weights/finite_field.hpp"

#include "cyclic_weights/errors.hpp"
#include "cyclic_weights/weights.hpp"

namespace cyclic_weights {

namespace {

// Remainder of a by the monic b over F_p; both low-degree first.
std::vector<Int> poly_mod(std::vector<Int> a, std::span<const Int> b, Int p) {
  const std::size_t db = b.size() - 1;
  for (std::size_t i = a.size(); i-- > db;) {
    const Int c = floor_mod(a[i], p);
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] = floor_mod(a[i - db + j] - c * b[j], p);
  }
  a.resize(std::min(a.size(), db));
  for (auto& x : a) x = floor_mod(x, p);
  return a;
}

}  // namespace

Int FieldSpec::order() const {
  Int n = 1;
  for (Int i = 0; i < d; ++i) n = checked_mul(n, p);
  return n;
}

bool is_irreducible(std::span<const Int> poly, Int p) {
  const auto deg = static_cast<Int>(poly.size()) - 1;
  if (deg < 1) return false;
  if (deg == 1) return true;
  // Enumerate monic divisors of degree k, 1 <= k <= deg/2.
  for (Int k = 1; 2 * k <= deg; ++k) {
    std::vector<Int> cand(static_cast<std::size_t>(k) + 1, 0);
    cand[static_cast<std::size_t>(k)] = 1;
    while (true) {
      const auto rem = poly_mod(std::vector<Int>(poly.begin(), poly.end()), cand, p);
      bool zero = true;
      for (auto c : rem) zero = zero && c == 0;
      if (zero) return false;
      std::size_t j = 0;
      while (j < static_cast<std::size_t>(k) && cand[j] == p - 1) cand[j++] = 0;
      if (j == static_cast<std::size_t>(k)) break;
      ++cand[j];
    }
  }
  return true;
}

FieldHandle field_make(Int p, Int d) {
  if (!is_prime(p)) throw DomainError("field characteristic must be prime, got " + std::to_string(p));
  if (d < 1) throw DomainError("field degree must be >= 1, got " + std::to_string(d));
  FieldSpec spec{p, d, {}};
  (void)spec.order();  // throws on overflow
  if (d == 1) {
    spec.modulus = {0, 1};
    return std::make_shared<const FieldSpec>(std::move(spec));
  }
  // Odometer over (c_{d-1}, ..., c_0) with c_0 least significant in the
  // reading order: increment the low-degree end first.
  std::vector<Int> poly(static_cast<std::size_t>(d) + 1, 0);
  poly.back() = 1;
  while (true) {
    if (is_irreducible(poly, p)) {
      spec.modulus = poly;
      return std::make_shared<const FieldSpec>(std::move(spec));
    }
    std::size_t j = 0;
    while (j < static_cast<std::size_t>(d) && poly[j] == p - 1) poly[j++] = 0;
    if (j == static_cast<std::size_t>(d)) throw InvariantViolation("no irreducible polynomial found");
    ++poly[j];
  }
}

FieldElement FieldElement::make(FieldHandle field, std::vector<Int> coeffs) {
  if (!field) throw DomainError("field element without a field");
  if (static_cast<Int>(coeffs.size()) > field->d)
    throw DimensionError("field element has " + std::to_string(coeffs.size()) + " coefficients, degree is " +
                         std::to_string(field->d));
  coeffs.resize(static_cast<std::size_t>(field->d), 0);
  for (auto& c : coeffs) c = floor_mod(c, field->p);
  return FieldElement(std::move(field), std::move(coeffs));
}

FieldElement FieldElement::one(FieldHandle field) { return make(std::move(field), {1}); }
FieldElement FieldElement::zero(FieldHandle field) { return make(std::move(field), {}); }

bool FieldElement::is_zero() const {
  for (auto c : coeffs_)
    if (c != 0) return false;
  return true;
}

FieldElement field_mul(const FieldElement& a, const FieldElement& b) {
  if (a.spec() != b.spec()) throw DomainError("field_mul: elements of different fields");
  const FieldSpec& f = a.spec();
  std::vector<Int> prod(2 * static_cast<std::size_t>(f.d) - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      prod[i + j] = floor_mod(prod[i + j] + a.coeffs()[i] * b.coeffs()[j], f.p);
  return FieldElement::make(a.field(), poly_mod(std::move(prod), f.modulus, f.p));
}

FieldElement field_pow(const FieldElement& a, Int e) {
  if (e < 0) return field_pow(field_inv(a), -e);
  FieldElement result = FieldElement::one(a.field());
  FieldElement base = a;
  while (e > 0) {
    if (e & 1) result = field_mul(result, base);
    base = field_mul(base, base);
    e >>= 1;
  }
  return result;
}

FieldElement field_inv(const FieldElement& a) {
  if (a.is_zero()) throw DomainError("field_inv: zero has no inverse");
  // a^{q-2} = a^{-1} in F_q.
  return field_pow(a, a.spec().order() - 2);
}

FieldElement field_product(std::span<const FieldElement> xs, const FieldHandle& field) {
  FieldElement acc = FieldElement::one(field);
  for (const auto& x : xs) acc = field_mul(acc, x);
  return acc;
}

std::vector<FieldElement> field_nonzero_elements(const FieldHandle& field) {
  std::vector<FieldElement> out;
  const Int q = field->order();
  for (Int n = 1; n < q; ++n) {
    std::vector<Int> coeffs;
    for (Int v = n, i = 0; i < field->d; ++i, v /= field->p) coeffs.push_back(v % field->p);
    out.push_back(FieldElement::make(field, std::move(coeffs)));
  }
  return out;
}

std::string to_string(const FieldElement& x) {
  std::string out;
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(x.coeffs()[i]);
  }
  return out;
}

}  // namespace cyclic_weights
