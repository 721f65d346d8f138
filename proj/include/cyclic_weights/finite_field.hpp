#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "cyclic_weights/tuple_algebra.hpp"

namespace cyclic_weights {

/// F_{p^d} as F_p[x] / (modulus).
struct FieldSpec {
  Int p = 0;
  Int d = 0;
  std::vector<Int> modulus;  // monic, low-degree first, size d + 1

  Int order() const;  // p^d
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

using FieldHandle = std::shared_ptr<const FieldSpec>;

// Monic irreducible of degree d chosen deterministically: the smallest when
// the non-leading coefficients are read from degree d-1 down to degree 0.
FieldHandle field_make(Int p, Int d);

// Trial division by every monic polynomial of degree <= deg/2.
bool is_irreducible(std::span<const Int> monic_low_first, Int p);

class FieldElement {
 public:
  // Coefficients low-degree first; reduced mod p, at most d of them.
  static FieldElement make(FieldHandle field, std::vector<Int> coeffs);
  static FieldElement one(FieldHandle field);
  static FieldElement zero(FieldHandle field);

  const FieldHandle& field() const { return field_; }
  const FieldSpec& spec() const { return *field_; }
  std::span<const Int> coeffs() const { return coeffs_; }
  bool is_zero() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return *a.field_ == *b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  FieldElement(FieldHandle field, std::vector<Int> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {}

  FieldHandle field_;
  std::vector<Int> coeffs_;  // exactly d entries
};

FieldElement field_mul(const FieldElement& a, const FieldElement& b);
FieldElement field_pow(const FieldElement& a, Int e);
FieldElement field_inv(const FieldElement& a);  // DomainError on zero
FieldElement field_product(std::span<const FieldElement> xs, const FieldHandle& field);

// Every nonzero element, in order of the coefficient tuple read as a base-p
// number (low-degree digit least significant).
std::vector<FieldElement> field_nonzero_elements(const FieldHandle& field);

// "c0,c1,..."
std::string to_string(const FieldElement& x);

}  // namespace cyclic_weights
