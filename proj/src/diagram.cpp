#include "cyclic_weights/diagram.hpp"

#include <algorithm>

#include "cyclic_weights/errors.hpp"

namespace cyclic_weights {

CyclicDiagram make_diagram(CyclicModule module, std::vector<FieldElement> scalars) {
  if (scalars.size() != module.pairs.size())
    throw DimensionError("diagram needs " + std::to_string(module.pairs.size()) + " scalars, got " +
                         std::to_string(scalars.size()));
  if (scalars.empty()) throw DimensionError("diagram on an empty module");
  for (std::size_t i = 0; i < scalars.size(); ++i) {
    if (scalars[i].spec() != scalars.front().spec()) throw DomainError("diagram scalars come from different fields");
    if (scalars[i].is_zero()) throw DomainError("scalar t_" + std::to_string(i + 1) + " is zero");
  }
  return {std::move(module), std::move(scalars)};
}

CyclicDiagram normalized(const CyclicDiagram& diagram) {
  const std::size_t shift = normalizing_shift(diagram.module);
  CyclicDiagram out{rotate_pairs(diagram.module, shift), diagram.scalars};
  std::rotate(out.scalars.begin(), out.scalars.begin() + static_cast<std::ptrdiff_t>(shift), out.scalars.end());
  return out;
}

FieldElement t_invariant(const CyclicDiagram& diagram) { return field_product(diagram.scalars, diagram.field()); }

Classification classify_isomorphic(const CyclicDiagram& d, const CyclicDiagram& d_prime) {
  const CyclicDiagram a = normalized(d);
  const CyclicDiagram b = normalized(d_prime);
  if (a.module != b.module) throw DomainError("classify_isomorphic: diagrams sit on different cyclic modules");
  if (a.field()->p != b.field()->p || *a.field() != *b.field())
    throw DomainError("classify_isomorphic: scalars from different fields");

  Classification out{false, t_invariant(a), t_invariant(b), std::nullopt};
  out.isomorphic = out.t == out.t_prime;
  if (!out.isomorphic) return out;

  std::vector<FieldElement> witness{FieldElement::one(a.field())};
  for (std::size_t i = 1; i < a.scalars.size(); ++i)
    witness.push_back(field_mul(witness.back(), field_mul(b.scalars[i - 1], field_inv(a.scalars[i - 1]))));
  out.witness = std::move(witness);
  return out;
}

bool witness_is_valid(const CyclicDiagram& d, const CyclicDiagram& d_prime, std::span<const FieldElement> witness) {
  const std::size_t n = d.scalars.size();
  if (witness.size() != n || d_prime.scalars.size() != n) return false;
  for (const auto& a : witness)
    if (a.is_zero()) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const FieldElement& next = witness[(i + 1) % n];
    if (field_mul(next, d.scalars[i]) != field_mul(witness[i], d_prime.scalars[i])) return false;
  }
  return true;
}

}  // namespace cyclic_weights
