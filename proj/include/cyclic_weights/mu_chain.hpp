#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyclic_weights/tuple_algebra.hpp"
#include "cyclic_weights/weights.hpp"

namespace cyclic_weights {

// mu = (x-1, p-2-x, p-1-x, ..., p-1-x). UnsupportedDegreeError for f = 1.
PolyTuple mu_base(const Params& params);

// mu^(k) for 0 <= k <= l via the entrywise recurrence
//   mu_j^(k) = mu_j^(k-1) - 1      if j = 1-k       (mod f)
//            = p-2 - mu_j^(k-1)    if j = 2-k       (mod f)
//            = p-1 - mu_j^(k-1)    otherwise.
// `seed_rotation` = s replaces mu by g^s.mu throughout, which shifts the
// residues above by -s.
PolyTuple mu_power(const Params& params, Int k, Int seed_rotation = 0);

// mu^(0), ..., mu^(l) in one pass of the recurrence.
std::vector<PolyTuple> mu_powers(const Params& params, Int seed_rotation = 0);

// The literal product g^{k-1}nu o ... o g.nu o nu with nu = g^s.mu. Kept as
// an independent route to mu_power.
PolyTuple mu_power_by_composition(const Params& params, Int k, Int seed_rotation = 0);

// e(lambda)(x): half of sum_j p^j (x_j - lambda_j(x_j)), plus p^f - 1 inside
// the half unless lambda_{f-1} is x or x-1. IntegralityError on an odd sum.
Int e_value(const PolyTuple& lambda, std::span<const Int> x, const Params& params);

// e_k(r) = sum_{j<k} e(g^j nu)(nu^(j)(r)), unreduced.
Int e_partial(const Params& params, std::span<const Int> r, Int k, Int seed_rotation = 0);

// True iff 1 <= r_j <= p-3 for every j.
bool in_chain_box(const Params& params, std::span<const Int> r);

struct ChainResult {
  Params params;
  std::vector<Int> seed_digits;
  Int seed_twist = 0;
  Int seed_rotation = 0;
  Int l = 0;
  std::vector<Weight> sigmas;  // sigma_0 .. sigma_l
  std::vector<Int> e_values;   // e_0(r) .. e_l(r), unreduced

  friend bool operator==(const ChainResult&, const ChainResult&) = default;
};

// sigma_k = nu^(k)(r) (x) det^{e_k(r) + m} for 0 <= k <= l.
//
// Requires f > 1 and 1 <= r_j <= p-3. Every nu^(k) entry is one of x, x-1,
// x+1, p-2-x, p-3-x, p-1-x, so digits stay in [0, p-1]; a digit escaping
// that range, a non-generic or repeated sigma, or sigma_l != sigma_0 throws
// InvariantViolation.
ChainResult build_chain(const Params& params, std::span<const Int> r, Int m, Int seed_rotation = 0);

struct LemmaWitness {
  std::string check;
  std::vector<Int> data;

  friend auto operator<=>(const LemmaWitness&, const LemmaWitness&) = default;
};

// Outcome of checking the three parts of the mu lemma on a set of r.
struct LemmaReport {
  Params params;
  std::size_t r_count = 0;
  bool sampled = false;

  bool identity_ok = false;        // mu^(l) = (x, ..., x)
  bool distinct_ok = false;        // mu^(1..l) and m^(1..l) pairwise distinct
  bool e_l_constant = false;       // e_l(r) independent of r
  bool e_l_zero_mod = false;       // e_l = 0 mod p^f - 1
  bool parity_ok = false;          // f odd: |m^(k)| even; f even: m^(k) + m^(k+f) = (1,...,1)
  bool composition_agrees = false; // recurrence == literal composition for all k <= l
  bool image_set_ok = false;       // entries in {x, x-1, x+1, p-2-x, p-3-x, p-1-x}
  bool sign_recurrence_ok = false; // m^(k) = g^{k-1} m^(1) + m^(k-1)
  std::optional<Int> e_l_value{};

  // Intermediate quantities behind e_l: c is the constant
  // term of sum_k e(g^k mu) (stored doubled, it may be a half-integer in
  // principle) and the per-digit column sums.
  Int constant_c_twice = 0;
  bool c_congruence_ok = false;  // c = (1 or 2)(p^f-1)/(p-1) mod p^f-1
  std::vector<Int> column_sums{};
  bool column_sums_constant = false;
  bool column_sums_match = false;  // (1 or 2)((f-1)(p-1)/2 - 1)
  bool expansion_ok = false;       // e_l(r) = c + sum_j p^j column_j(r)

  std::vector<SignVector> sign_vectors{};  // m^(1) .. m^(l)
  std::vector<LemmaWitness> witnesses{};   // sorted, capped

  bool all_ok() const {
    return identity_ok && distinct_ok && e_l_constant && e_l_zero_mod && parity_ok && composition_agrees &&
           image_set_ok && sign_recurrence_ok;
  }
  bool intermediate_identities_ok() const {
    return c_congruence_ok && column_sums_constant && column_sums_match && expansion_ok;
  }

  friend bool operator==(const LemmaReport&, const LemmaReport&) = default;
};

inline constexpr std::size_t kMaxWitnesses = 32;
inline constexpr std::size_t kFullBoxLimit = 1'000'000;
inline constexpr std::size_t kSampleSize = 200'000;

// The full box {1..p-3}^f when it has at most kFullBoxLimit points, else the
// 2^f corners plus kSampleSize pseudo-random points; sorted and deduplicated.
// Without an explicit seed the sample is seeded from (p, f).
std::vector<std::vector<Int>> default_r_set(const Params& params, std::optional<std::uint64_t> seed = std::nullopt);
std::uint64_t box_size(const Params& params);

// Report for the lemma over `r_set` (every r must lie in the box). The report
// does not depend on `workers`.
LemmaReport verify_mu_lemma(const Params& params, std::span<const std::vector<Int>> r_set, unsigned workers = 1);

}  // namespace cyclic_weights
