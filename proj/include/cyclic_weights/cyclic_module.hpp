#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cyclic_weights/mu_chain.hpp"
#include "cyclic_weights/weights.hpp"

namespace cyclic_weights {

// The f weights (g^i mu)(s) (x) det^{e(g^i mu)(s) + m} for sigma = s (x) det^m.
// Members whose digits leave [0, p-1] are not weights; their digit tuples are
// listed in `pruned`.
struct Gr1Result {
  Weight source;
  std::vector<Weight> weights;             // sorted, unique
  std::vector<std::vector<Int>> pruned;    // sorted

  friend bool operator==(const Gr1Result&, const Gr1Result&) = default;
};

// sigma must be generic; UnsupportedDegreeError for f = 1.
Gr1Result gr1_weights(const Weight& sigma);

/// E(sub, quotient) recorded by its labels and its U-invariants.
struct ExtensionPair {
  Weight sub;
  Weight quotient;
  std::pair<BChar, BChar> u_chars;

  // u_chars = (chi(sub), chi(s_dual(quotient))^s); quotient must be generic.
  static ExtensionPair make(const Weight& sub, const Weight& quotient);

  friend bool operator==(const ExtensionPair&, const ExtensionPair&) = default;
};

/// Direct sum of E(sigma_i, sigma_{i-1}^[s]) for i = 1..n with sigma_0 = sigma_n.
/// Construction does not enforce the cyclic-module conditions; see
/// validate_cyclic_module.
struct CyclicModule {
  Params params;
  std::vector<ExtensionPair> pairs;

  std::size_t size() const { return pairs.size(); }
  friend bool operator==(const CyclicModule&, const CyclicModule&) = default;
};

// Pairs (subs[i], s_dual(subs[i-1])) with subs[-1] = subs.back(). All subs
// must be generic.
CyclicModule make_cyclic_module(const std::vector<Weight>& subs);

// Pairs k = 1..l of the chain: (sigma_k, sigma_{k-1}^[s]).
CyclicModule build_cyclic_module(const ChainResult& chain);

// Rotation of the pair list by `shift` positions to the left.
CyclicModule rotate_pairs(const CyclicModule& module, std::size_t shift);
// Index of the pair with the least sub (the normalizing shift).
std::size_t normalizing_shift(const CyclicModule& module);
CyclicModule normalized(const CyclicModule& module);
bool equal_up_to_rotation(const CyclicModule& a, const CyclicModule& b);

struct ModuleValidation {
  bool subs_distinct_generic = false;  // (a)
  bool cyclic_consistent = false;      // (b) quotient_i = s_dual(sub_{i-1})
  bool gr1_membership = false;         // (c) sub_i in gr1(sub_{i-1})
  bool u_chars_consistent = false;     // (d)
  std::size_t boundary_weights = 0;    // subs with a digit 0 or p-1
  std::vector<std::string> failures;

  bool ok() const { return subs_distinct_generic && cyclic_consistent && gr1_membership && u_chars_consistent; }
  friend bool operator==(const ModuleValidation&, const ModuleValidation&) = default;
};

ModuleValidation validate_cyclic_module(const CyclicModule& module);

// All subs and all quotients (2n labels), sorted.
std::vector<Weight> jh_factors(const CyclicModule& module);
// All 2n labels pairwise distinct: socle distinct, cosocle distinct, and no
// sub equal to any quotient.
bool is_multiplicity_free(const CyclicModule& module);
// D_1 = D_0^U: both characters of every pair, in pair order (2n entries).
std::vector<BChar> u_invariant_characters(const CyclicModule& module);

// "(0,2)⊗det^10 —— (3,3)⊗det^6"
std::string to_string(const ExtensionPair& pair);

}  // namespace cyclic_weights
