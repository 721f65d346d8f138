#include "cyclic_weights/mu_chain.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <set>

#include "cyclic_weights/errors.hpp"

namespace cyclic_weights {

namespace {

void require_degree(const Params& params) {
  if (params.f() == 1)
    throw UnsupportedDegreeError(
        "f = 1 is not supported: a cyclic module of length 1 is a principal series, which forces "
        "Gamma = GL_2(F_p)");
}

void require_k(const Params& params, Int k) {
  if (k < 0 || k > params.chain_length())
    throw DomainError("k = " + std::to_string(k) + " outside [0, " + std::to_string(params.chain_length()) + "]");
}

// One step of the recurrence: entry j of nu^(k) from nu^(k-1).
SignedLinear recurrence_step(const SignedLinear& prev, Int j, Int k, Int s, const Params& params) {
  const Int f = params.f();
  const Int p = params.p();
  if (j == floor_mod(1 - k - s, f)) return compose(SignedLinear{1, -1}, prev);
  if (j == floor_mod(2 - k - s, f)) return compose(SignedLinear{-1, p - 2}, prev);
  return compose(SignedLinear{-1, p - 1}, prev);
}

// The six shapes every mu^(k) entry takes.
bool in_image_set(const SignedLinear& e, Int p) {
  if (e.sign == 1) return e.constant >= -1 && e.constant <= 1;
  return e.constant >= p - 3 && e.constant <= p - 1;
}

// Sum of the constant terms of e(g^k mu) over 0 <= k < l, doubled.
Int doubled_constant(const Params& params, const std::vector<PolyTuple>& rotations) {
  Int total = 0;
  const auto f = static_cast<std::size_t>(params.f());
  for (const auto& lam : rotations) {
    for (std::size_t j = 0; j < f; ++j) total -= params.power(j) * lam[j].constant;
    const auto& last = lam[f - 1];
    if (!(last.sign == 1 && (last.constant == 0 || last.constant == -1))) total += params.q_minus_1();
  }
  return total;
}

struct ChunkResult {
  std::vector<LemmaWitness> witnesses;
  bool e_constant = true;
  bool columns_constant = true;
  bool expansion_ok = true;
};

void keep_smallest(std::vector<LemmaWitness>& w) {
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  if (w.size() > kMaxWitnesses) w.resize(kMaxWitnesses);
}

}  // namespace

PolyTuple mu_base(const Params& params) {
  require_degree(params);
  const Int p = params.p();
  std::vector<SignedLinear> entries(static_cast<std::size_t>(params.f()), SignedLinear{-1, p - 1});
  entries[0] = {1, -1};
  entries[1] = {-1, p - 2};
  return PolyTuple(std::move(entries));
}

std::vector<PolyTuple> mu_powers(const Params& params, Int seed_rotation) {
  require_degree(params);
  const Int l = params.chain_length();
  const auto f = static_cast<std::size_t>(params.f());
  std::vector<PolyTuple> out;
  out.reserve(static_cast<std::size_t>(l) + 1);
  out.push_back(PolyTuple::identity(f));
  for (Int k = 1; k <= l; ++k) {
    const auto& prev = out.back();
    std::vector<SignedLinear> next(f);
    for (std::size_t j = 0; j < f; ++j) next[j] = recurrence_step(prev[j], static_cast<Int>(j), k, seed_rotation, params);
    out.emplace_back(std::move(next));
  }
  return out;
}

PolyTuple mu_power(const Params& params, Int k, Int seed_rotation) {
  require_degree(params);
  require_k(params, k);
  return mu_powers(params, seed_rotation)[static_cast<std::size_t>(k)];
}

PolyTuple mu_power_by_composition(const Params& params, Int k, Int seed_rotation) {
  require_k(params, k);
  const PolyTuple nu = rotate(mu_base(params), seed_rotation);
  PolyTuple acc = PolyTuple::identity(nu.size());
  for (Int i = 0; i < k; ++i) acc = compose(rotate(nu, i), acc);
  return acc;
}

Int e_value(const PolyTuple& lambda, std::span<const Int> x, const Params& params) {
  if (static_cast<Int>(lambda.size()) != params.f() || x.size() != lambda.size())
    throw DimensionError("e_value: expected tuples of length " + std::to_string(params.f()));
  Int total = 0;
  for (std::size_t j = 0; j < x.size(); ++j)
    total = checked_add(total, checked_mul(params.power(j), checked_add(x[j], -lambda[j](x[j]))));
  const auto& last = lambda[lambda.size() - 1];
  if (!(last.sign == 1 && (last.constant == 0 || last.constant == -1))) total = checked_add(total, params.q_minus_1());
  if (total % 2 != 0)
    throw IntegralityError("e_value: odd numerator " + std::to_string(total) + " for " + to_string(lambda));
  return total / 2;
}

Int e_partial(const Params& params, std::span<const Int> r, Int k, Int seed_rotation) {
  require_degree(params);
  require_k(params, k);
  const auto powers = mu_powers(params, seed_rotation);
  const PolyTuple& nu = powers[1];
  Int total = 0;
  for (Int j = 0; j < k; ++j) {
    const auto x = eval_tuple(powers[static_cast<std::size_t>(j)], r);
    total = checked_add(total, e_value(rotate(nu, j), x, params));
  }
  return total;
}

bool in_chain_box(const Params& params, std::span<const Int> r) {
  if (static_cast<Int>(r.size()) != params.f()) return false;
  return std::all_of(r.begin(), r.end(), [&](Int x) { return x >= 1 && x <= params.p() - 3; });
}

ChainResult build_chain(const Params& params, std::span<const Int> r, Int m, Int seed_rotation) {
  require_degree(params);
  if (static_cast<Int>(r.size()) != params.f())
    throw DimensionError("build_chain: r has " + std::to_string(r.size()) + " digits, expected " +
                         std::to_string(params.f()));
  if (!in_chain_box(params, r))
    throw DomainError("build_chain: every r_j must lie in [1, p-3] = [1, " + std::to_string(params.p() - 3) + "]");

  const Int l = params.chain_length();
  const auto powers = mu_powers(params, seed_rotation);
  const PolyTuple& nu = powers[1];

  ChainResult out{params, std::vector<Int>(r.begin(), r.end()), floor_mod(m, params.q_minus_1()),
                  floor_mod(seed_rotation, params.f()), l, {}, {}};
  Int e = 0;
  for (Int k = 0; k <= l; ++k) {
    const auto& lam = powers[static_cast<std::size_t>(k)];
    if (k > 0) e = checked_add(e, e_value(rotate(nu, k - 1), eval_tuple(powers[static_cast<std::size_t>(k - 1)], r), params));
    auto digits = eval_tuple(lam, r);
    for (auto d : digits)
      if (d < 0 || d > params.p() - 1)
        throw InvariantViolation("build_chain: digit " + std::to_string(d) + " of sigma_" + std::to_string(k) +
                                 " escaped [0, p-1]");
    out.sigmas.push_back(make_weight(std::move(digits), checked_add(e, m), params));
    out.e_values.push_back(e);
  }

  if (out.sigmas.back() != out.sigmas.front())
    throw InvariantViolation("build_chain: sigma_l = " + to_string(out.sigmas.back()) + " differs from sigma_0 = " +
                             to_string(out.sigmas.front()));
  for (Int i = 1; i <= l; ++i) {
    if (!is_generic(out.sigmas[static_cast<std::size_t>(i)]))
      throw InvariantViolation("build_chain: sigma_" + std::to_string(i) + " is not generic");
    for (Int j = 1; j < i; ++j)
      if (out.sigmas[static_cast<std::size_t>(i)] == out.sigmas[static_cast<std::size_t>(j)])
        throw InvariantViolation("build_chain: sigma_" + std::to_string(j) + " = sigma_" + std::to_string(i));
  }
  return out;
}

std::uint64_t box_size(const Params& params) {
  std::uint64_t n = 1;
  const auto side = static_cast<std::uint64_t>(params.p() - 3);
  for (Int j = 0; j < params.f(); ++j) {
    if (n > (std::uint64_t{1} << 62) / side) return std::uint64_t{1} << 62;
    n *= side;
  }
  return n;
}

std::vector<std::vector<Int>> default_r_set(const Params& params, std::optional<std::uint64_t> seed) {
  const auto f = static_cast<std::size_t>(params.f());
  const Int hi = params.p() - 3;
  std::vector<std::vector<Int>> out;
  if (box_size(params) <= kFullBoxLimit) {
    std::vector<Int> r(f, 1);
    while (true) {
      out.push_back(r);
      std::size_t j = f;
      while (j > 0 && r[j - 1] == hi) r[--j] = 1;
      if (j == 0) break;
      ++r[j - 1];
    }
    return out;
  }

  // Corners of the box.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << std::min<std::size_t>(f, 20)); ++mask) {
    std::vector<Int> r(f, 1);
    for (std::size_t j = 0; j < f && j < 20; ++j)
      if (mask >> j & 1) r[j] = hi;
    out.push_back(std::move(r));
  }
  // Fixed-width engine and plain modular reduction so the sample does not
  // depend on the standard library's distribution implementations.
  std::mt19937_64 rng(seed.value_or(static_cast<std::uint64_t>(params.p()) * 1'000'003ULL +
                                    static_cast<std::uint64_t>(params.f())));
  for (std::size_t i = 0; i < kSampleSize; ++i) {
    std::vector<Int> r(f);
    for (auto& x : r) x = 1 + static_cast<Int>(rng() % static_cast<std::uint64_t>(hi));
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

LemmaReport verify_mu_lemma(const Params& params, std::span<const std::vector<Int>> r_set, unsigned workers) {
  require_degree(params);
  for (const auto& r : r_set)
    if (!in_chain_box(params, r)) throw DomainError("verify_mu_lemma: r outside the box [1, p-3]^f");

  const Int l = params.chain_length();
  const Int f = params.f();
  const auto fs = static_cast<std::size_t>(f);
  const auto powers = mu_powers(params);
  const PolyTuple& mu = powers[1];

  LemmaReport rep{params};
  rep.r_count = r_set.size();
  rep.sampled = box_size(params) > kFullBoxLimit;
  std::vector<LemmaWitness> witnesses;

  // mu^(l) is the identity.
  rep.identity_ok = powers.back().is_identity();
  if (!rep.identity_ok) witnesses.push_back({"identity", {l}});

  // Recurrence against literal composition, and the image set.
  rep.composition_agrees = true;
  rep.image_set_ok = true;
  for (Int k = 0; k <= l; ++k) {
    if (mu_power_by_composition(params, k) != powers[static_cast<std::size_t>(k)]) {
      rep.composition_agrees = false;
      witnesses.push_back({"composition", {k}});
    }
    for (Int j = 0; j < f; ++j)
      if (k > 0 && !in_image_set(powers[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)], params.p())) {
        rep.image_set_ok = false;
        witnesses.push_back({"image_set", {k, j}});
      }
  }

  // Distinctness, parity and the sign recurrence.
  for (Int k = 1; k <= l; ++k) rep.sign_vectors.push_back(sign_vector(powers[static_cast<std::size_t>(k)]));
  rep.distinct_ok = true;
  for (Int a = 1; a <= l; ++a)
    for (Int b = a + 1; b <= l; ++b) {
      const auto ia = static_cast<std::size_t>(a), ib = static_cast<std::size_t>(b);
      if (powers[ia] == powers[ib] || rep.sign_vectors[ia - 1] == rep.sign_vectors[ib - 1]) {
        rep.distinct_ok = false;
        witnesses.push_back({"distinct", {a, b}});
      }
    }
  for (Int k = 1; k < l; ++k)
    if (powers[static_cast<std::size_t>(k)].is_identity() || rep.sign_vectors[static_cast<std::size_t>(k - 1)].is_zero()) {
      rep.distinct_ok = false;
      witnesses.push_back({"early_identity", {k}});
    }

  rep.sign_recurrence_ok = true;
  const SignVector& m1 = rep.sign_vectors.front();
  for (Int k = 2; k <= l; ++k)
    if (rep.sign_vectors[static_cast<std::size_t>(k - 1)] != rotate(m1, k - 1) + rep.sign_vectors[static_cast<std::size_t>(k - 2)]) {
      rep.sign_recurrence_ok = false;
      witnesses.push_back({"sign_recurrence", {k}});
    }

  rep.parity_ok = true;
  if (f % 2 == 1) {
    for (Int k = 1; k <= l; ++k)
      if (rep.sign_vectors[static_cast<std::size_t>(k - 1)].weight() % 2 != 0) {
        rep.parity_ok = false;
        witnesses.push_back({"parity", {k}});
      }
  } else {
    const SignVector ones{std::vector<std::uint8_t>(fs, 1)};
    for (Int k = 1; k + f <= l; ++k)
      if (rep.sign_vectors[static_cast<std::size_t>(k - 1)] + rep.sign_vectors[static_cast<std::size_t>(k + f - 1)] != ones) {
        rep.parity_ok = false;
        witnesses.push_back({"parity", {k}});
      }
  }

  // The doubled constant c and, per r, the column sums and e_l(r).
  std::vector<PolyTuple> rotations;
  for (Int k = 0; k < l; ++k) rotations.push_back(rotate(mu, k));
  rep.constant_c_twice = doubled_constant(params, rotations);
  const Int q = params.q_minus_1();
  const Int multiple = f % 2 ? 1 : 2;
  rep.c_congruence_ok =
      rep.constant_c_twice % 2 == 0 && floor_mod(rep.constant_c_twice / 2 - multiple * (q / (params.p() - 1)), q) == 0;

  auto column_sums = [&](std::span<const Int> r) {
    std::vector<Int> sums(fs, 0);
    for (Int k = 0; k < l; ++k) {
      const auto x = eval_tuple(powers[static_cast<std::size_t>(k)], r);
      for (std::size_t j = 0; j < fs; ++j)
        if (rotations[static_cast<std::size_t>(k)][j].sign == -1) sums[j] += x[j];
    }
    return sums;
  };
  auto e_l_of = [&](std::span<const Int> r) {
    Int e = 0;
    for (Int k = 0; k < l; ++k)
      e = checked_add(e, e_value(rotations[static_cast<std::size_t>(k)], eval_tuple(powers[static_cast<std::size_t>(k)], r), params));
    return e;
  };

  if (r_set.empty()) {
    rep.witnesses = std::move(witnesses);
    keep_smallest(rep.witnesses);
    return rep;
  }

  // Reference values from the lexicographically least r, so the witnesses do
  // not depend on how r_set is partitioned.
  const auto ref_it = std::min_element(r_set.begin(), r_set.end());
  const Int ref_e = e_l_of(*ref_it);
  rep.column_sums = column_sums(*ref_it);
  rep.e_l_value = ref_e;

  auto run_chunk = [&](std::size_t begin, std::size_t end) {
    ChunkResult res;
    for (std::size_t i = begin; i < end; ++i) {
      const auto& r = r_set[i];
      const Int e = e_l_of(r);
      const auto cols = column_sums(r);
      std::vector<Int> data(r.begin(), r.end());
      if (e != ref_e) {
        res.e_constant = false;
        res.witnesses.push_back({"e_l_constant", data});
      }
      if (cols != rep.column_sums) {
        res.columns_constant = false;
        res.witnesses.push_back({"column_sums", data});
      }
      Int reassembled = rep.constant_c_twice;
      for (std::size_t j = 0; j < fs; ++j) reassembled += 2 * params.power(j) * cols[j];
      if (reassembled != 2 * e) {
        res.expansion_ok = false;
        res.witnesses.push_back({"e_l_expansion", data});
      }
      if (res.witnesses.size() > 4 * kMaxWitnesses) keep_smallest(res.witnesses);
    }
    keep_smallest(res.witnesses);
    return res;
  };

  const std::size_t n = r_set.size();
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(workers, n));
  std::vector<ChunkResult> results;
  if (chunks == 1) {
    results.push_back(run_chunk(0, n));
  } else {
    std::vector<std::future<ChunkResult>> futures;
    for (std::size_t c = 0; c < chunks; ++c)
      futures.push_back(std::async(std::launch::async, run_chunk, n * c / chunks, n * (c + 1) / chunks));
    for (auto& fut : futures) results.push_back(fut.get());
  }

  rep.e_l_constant = true;
  rep.column_sums_constant = true;
  rep.expansion_ok = true;
  for (auto& res : results) {
    rep.expansion_ok = rep.expansion_ok && res.expansion_ok;
    rep.e_l_constant = rep.e_l_constant && res.e_constant;
    rep.column_sums_constant = rep.column_sums_constant && res.columns_constant;
    witnesses.insert(witnesses.end(), res.witnesses.begin(), res.witnesses.end());
  }
  rep.e_l_zero_mod = rep.e_l_constant && floor_mod(ref_e, q) == 0;
  if (floor_mod(ref_e, q) != 0) witnesses.push_back({"e_l_zero_mod", std::vector<Int>(ref_it->begin(), ref_it->end())});

  const Int expected_column = multiple * ((f - 1) * (params.p() - 1) / 2 - 1);
  rep.column_sums_match = std::all_of(rep.column_sums.begin(), rep.column_sums.end(),
                                      [&](Int s) { return s == expected_column; });

  keep_smallest(witnesses);
  rep.witnesses = std::move(witnesses);
  return rep;
}

}  // namespace cyclic_weights
