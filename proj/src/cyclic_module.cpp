#include "cyclic_weights/cyclic_module.hpp"

#include <algorithm>
#include <set>

#include "cyclic_weights/errors.hpp"

namespace cyclic_weights {

Gr1Result gr1_weights(const Weight& sigma) {
  if (!is_generic(sigma)) throw DomainError("gr1_weights needs a generic weight, got " + to_string(sigma));
  const Params& params = sigma.params();
  const PolyTuple mu = mu_base(params);
  const std::vector<Int> s(sigma.digits().begin(), sigma.digits().end());

  Gr1Result out{sigma, {}, {}};
  for (Int i = 0; i < params.f(); ++i) {
    const PolyTuple lam = rotate(mu, i);
    auto digits = eval_tuple(lam, s);
    const bool in_range =
        std::all_of(digits.begin(), digits.end(), [&](Int d) { return d >= 0 && d <= params.p() - 1; });
    if (!in_range) {
      out.pruned.push_back(std::move(digits));
      continue;
    }
    const Int e = e_value(lam, s, params);
    out.weights.push_back(make_weight(std::move(digits), e + sigma.twist(), params));
  }
  std::sort(out.weights.begin(), out.weights.end());
  out.weights.erase(std::unique(out.weights.begin(), out.weights.end()), out.weights.end());
  std::sort(out.pruned.begin(), out.pruned.end());
  return out;
}

ExtensionPair ExtensionPair::make(const Weight& sub, const Weight& quotient) {
  if (sub.params() != quotient.params()) throw DomainError("extension pair mixes parameters");
  return {sub, quotient, {chi(sub), s_conjugate(chi(s_dual(quotient)))}};
}

CyclicModule make_cyclic_module(const std::vector<Weight>& subs) {
  if (subs.empty()) throw DimensionError("a cyclic module needs at least one weight");
  CyclicModule out{subs.front().params(), {}};
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const Weight& prev = i == 0 ? subs.back() : subs[i - 1];
    out.pairs.push_back(ExtensionPair::make(subs[i], s_dual(prev)));
  }
  return out;
}

CyclicModule build_cyclic_module(const ChainResult& chain) {
  if (chain.sigmas.size() < 2) throw DimensionError("chain has no steps");
  if (chain.sigmas.front() != chain.sigmas.back()) throw DomainError("chain does not close: sigma_l != sigma_0");
  return make_cyclic_module(std::vector<Weight>(chain.sigmas.begin() + 1, chain.sigmas.end()));
}

CyclicModule rotate_pairs(const CyclicModule& module, std::size_t shift) {
  CyclicModule out = module;
  if (!out.pairs.empty())
    std::rotate(out.pairs.begin(), out.pairs.begin() + static_cast<std::ptrdiff_t>(shift % out.pairs.size()),
                out.pairs.end());
  return out;
}

std::size_t normalizing_shift(const CyclicModule& module) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < module.pairs.size(); ++i)
    if (module.pairs[i].sub < module.pairs[best].sub) best = i;
  return best;
}

CyclicModule normalized(const CyclicModule& module) { return rotate_pairs(module, normalizing_shift(module)); }

bool equal_up_to_rotation(const CyclicModule& a, const CyclicModule& b) { return normalized(a) == normalized(b); }

ModuleValidation validate_cyclic_module(const CyclicModule& module) {
  ModuleValidation v;
  const auto n = module.pairs.size();
  if (n == 0) {
    v.failures.push_back("empty module");
    return v;
  }

  v.subs_distinct_generic = true;
  std::set<Weight> seen;
  for (std::size_t i = 0; i < n; ++i) {
    const Weight& sub = module.pairs[i].sub;
    if (sub.params() != module.params) {
      v.subs_distinct_generic = false;
      v.failures.push_back("pair " + std::to_string(i + 1) + ": parameters differ from the module's");
    }
    if (!is_generic(sub)) {
      v.subs_distinct_generic = false;
      v.failures.push_back("pair " + std::to_string(i + 1) + ": sub " + to_string(sub) + " is not generic");
    }
    if (!seen.insert(sub).second) {
      v.subs_distinct_generic = false;
      v.failures.push_back("pair " + std::to_string(i + 1) + ": sub " + to_string(sub) + " repeats");
    }
    if (has_boundary_digit(sub)) ++v.boundary_weights;
  }

  v.cyclic_consistent = true;
  v.gr1_membership = true;
  v.u_chars_consistent = true;
  for (std::size_t i = 0; i < n; ++i) {
    const ExtensionPair& pair = module.pairs[i];
    const Weight& prev = module.pairs[(i + n - 1) % n].sub;
    const std::string tag = "pair " + std::to_string(i + 1) + ": ";
    if (!is_generic(prev)) {
      v.cyclic_consistent = v.gr1_membership = v.u_chars_consistent = false;
      v.failures.push_back(tag + "predecessor sub is not generic");
      continue;
    }
    if (pair.quotient != s_dual(prev)) {
      v.cyclic_consistent = false;
      v.failures.push_back(tag + "quotient " + to_string(pair.quotient) + " is not s_dual(" + to_string(prev) + ")");
    }
    try {
      const auto gr1 = gr1_weights(prev);
      if (!std::binary_search(gr1.weights.begin(), gr1.weights.end(), pair.sub)) {
        v.gr1_membership = false;
        v.failures.push_back(tag + to_string(pair.sub) + " is not in gr1 of " + to_string(prev));
      }
    } catch (const std::exception& e) {
      v.gr1_membership = false;
      v.failures.push_back(tag + e.what());
    }
    if (pair.u_chars.first != chi(pair.sub) || pair.u_chars.second != s_conjugate(chi(prev)) ||
        pair.u_chars.second != chi(pair.quotient)) {
      v.u_chars_consistent = false;
      v.failures.push_back(tag + "U-invariant characters do not match chi(sub) + chi(prev)^s");
    }
  }
  return v;
}

std::vector<Weight> jh_factors(const CyclicModule& module) {
  std::vector<Weight> out;
  for (const auto& pair : module.pairs) {
    out.push_back(pair.sub);
    out.push_back(pair.quotient);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_multiplicity_free(const CyclicModule& module) {
  const auto factors = jh_factors(module);
  return std::adjacent_find(factors.begin(), factors.end()) == factors.end();
}

std::vector<BChar> u_invariant_characters(const CyclicModule& module) {
  std::vector<BChar> out;
  for (const auto& pair : module.pairs) {
    out.push_back(pair.u_chars.first);
    out.push_back(pair.u_chars.second);
  }
  return out;
}

std::string to_string(const ExtensionPair& pair) { return to_string(pair.sub) + " —— " + to_string(pair.quotient); }

}  // namespace cyclic_weights
