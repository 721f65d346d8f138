#pragma once

#include <optional>
#include <vector>

#include "cyclic_weights/cyclic_module.hpp"
#include "cyclic_weights/finite_field.hpp"

namespace cyclic_weights {

/// A cyclic module with nonzero scalars t_1..t_n: Pi acts on chi(sigma_i)
/// as multiplication by t_i.
struct CyclicDiagram {
  CyclicModule module;
  std::vector<FieldElement> scalars;

  const FieldHandle& field() const { return scalars.front().field(); }
  friend bool operator==(const CyclicDiagram&, const CyclicDiagram&) = default;
};

// Checks scalar count == pair count, all scalars nonzero and in one field.
CyclicDiagram make_diagram(CyclicModule module, std::vector<FieldElement> scalars);

// Rotates pairs and scalars together so the least sub comes first.
CyclicDiagram normalized(const CyclicDiagram& diagram);

// t(D) = t_1 t_2 ... t_n
FieldElement t_invariant(const CyclicDiagram& diagram);

struct Classification {
  bool isomorphic = false;
  FieldElement t;
  FieldElement t_prime;
  // a_1 = 1, a_i = prod_{j<i} t'_j t_j^{-1}, indexed on the normalized pair
  // order. Present iff isomorphic.
  std::optional<std::vector<FieldElement>> witness;

  friend bool operator==(const Classification&, const Classification&) = default;
};

// Both diagrams must sit on the same module up to rotation (DomainError
// otherwise). Isomorphic iff t(D) = t(D').
Classification classify_isomorphic(const CyclicDiagram& d, const CyclicDiagram& d_prime);

// a_{i+1} t_i = a_i t'_i for all i, including the wrap a_1 t_n = a_n t'_n.
// Both diagrams are taken in the order given.
bool witness_is_valid(const CyclicDiagram& d, const CyclicDiagram& d_prime, std::span<const FieldElement> witness);

}  // namespace cyclic_weights
