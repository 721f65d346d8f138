#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cyclic_weights/cyclic_module.hpp"
#include "cyclic_weights/mu_chain.hpp"

namespace cyclic_weights {

struct SuccessorSet {
  std::vector<Weight> weights;  // generic, in range, sorted
  std::size_t pruned_boundary = 0;
  std::size_t dropped_non_generic = 0;
};

// gr^1 successors of a generic weight, restricted to generic weights.
SuccessorSet successors(const Weight& sigma);

struct FoundCycle {
  std::vector<Weight> vertices;  // starts at the search start; closure back to it is implied
  bool valid = false;            // induced cyclic module passes validation
  bool multiplicity_free = false;
  std::optional<Int> canonical_rotation;  // s when the cycle is the chain seeded by g^s.mu

  friend bool operator==(const FoundCycle&, const FoundCycle&) = default;
};

struct CycleSearchResult {
  Params params;
  Weight start;
  Int max_len = 0;
  std::vector<FoundCycle> cycles;  // lexicographic by vertex sequence
  std::vector<Int> canonical_hits;
  std::size_t pruned_boundary = 0;
  std::size_t visits = 0;
  bool truncated = false;

  friend bool operator==(const CycleSearchResult&, const CycleSearchResult&) = default;
};

inline constexpr std::size_t kDefaultVisitBudget = 10'000'000;

// Module of the cycle v_0 -> v_1 -> ... -> v_{n-1} -> v_0: subs v_1, ..., v_{n-1}, v_0.
CyclicModule module_of_cycle(const std::vector<Weight>& vertices);

// All simple cycles through `start` with at most max_len edges. Exceeding the
// node-visit budget sets `truncated`; the cycles found so far are kept.
CycleSearchResult find_cycles(const Weight& start, Int max_len, std::size_t budget = kDefaultVisitBudget);

struct RotationCheck {
  Int rotation = 0;
  std::vector<Weight> cycle;  // sigma_0 .. sigma_{l-1}
  bool closes = false;
  Int length = 0;
  bool valid = false;
  bool multiplicity_free = false;
  bool found_by_search = false;

  bool ok() const { return closes && valid && multiplicity_free && found_by_search; }
  friend bool operator==(const RotationCheck&, const RotationCheck&) = default;
};

struct CanonicalCheckReport {
  Params params;
  std::vector<Int> r;
  Int m = 0;
  std::vector<RotationCheck> rotations;
  bool search_truncated = false;

  bool all_ok() const;
  friend bool operator==(const CanonicalCheckReport&, const CanonicalCheckReport&) = default;
};

// For each s in [0, f): the chain seeded by g^s.mu, its module checks, and
// whether find_cycles(r (x) det^m, 2f) rediscovers it.
CanonicalCheckReport canonical_chain_check(const Params& params, std::span<const Int> r, Int m,
                                           std::size_t budget = kDefaultVisitBudget);

// Search over every start r (x) det^m with r in the box.
struct EvidenceReport {
  Params params;
  Int m = 0;
  Int max_len = 0;
  std::size_t starts = 0;
  std::size_t distinct_cycles = 0;        // up to rotation
  std::size_t canonical_expected = 0;     // rotation-seeded chains, up to rotation
  std::size_t canonical_found = 0;
  std::size_t non_multiplicity_free = 0;
  std::vector<std::vector<Weight>> extras{};  // multiplicity-free, not rotation-seeded
  bool truncated = false;

  bool canonical_complete() const { return canonical_found == canonical_expected && !truncated; }
  friend bool operator==(const EvidenceReport&, const EvidenceReport&) = default;
};

EvidenceReport gather_evidence(const Params& params, Int m, Int max_len, unsigned workers = 1,
                               std::size_t budget = kDefaultVisitBudget);

// Rotation of a vertex cycle that puts its least vertex first.
std::vector<Weight> canonical_rotation_of(std::vector<Weight> cycle);

}  // namespace cyclic_weights
