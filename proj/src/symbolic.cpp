#include "cyclic_weights/symbolic.hpp"

#include "cyclic_weights/errors.hpp"

namespace cyclic_weights {

namespace {

// outer(inner) where outer is +-x + (a p + b).
SymbolicDigit apply(int sign, Int p_coeff, Int offset, const SymbolicDigit& inner) {
  return {sign * inner.sign, sign * inner.p_coeff + p_coeff, sign * inner.offset + offset};
}

std::string p_term(Int coeff) {
  if (coeff == 0) return "";
  if (coeff == 1) return "p";
  if (coeff == -1) return "-p";
  return std::to_string(coeff) + "p";
}

}  // namespace

std::vector<SymbolicTuple> symbolic_chain(Int f, Int seed_rotation) {
  if (f < 2) throw UnsupportedDegreeError("symbolic chains need f > 1");
  const Int l = f % 2 ? f : 2 * f;
  std::vector<SymbolicTuple> out;
  SymbolicTuple cur(static_cast<std::size_t>(f), SymbolicDigit{});
  for (Int k = 1; k <= l; ++k) {
    for (Int j = 0; j < f; ++j) {
      auto& d = cur[static_cast<std::size_t>(j)];
      if (j == floor_mod(1 - k - seed_rotation, f))
        d = apply(1, 0, -1, d);
      else if (j == floor_mod(2 - k - seed_rotation, f))
        d = apply(-1, 1, -2, d);
      else
        d = apply(-1, 1, -1, d);
    }
    out.push_back(cur);
  }
  return out;
}

SymbolicTuple symbolic_dual(const SymbolicTuple& t) {
  SymbolicTuple out;
  for (const auto& d : t) out.push_back(apply(-1, 1, -1, d));
  return out;
}

std::vector<SymbolicPair> symbolic_module(Int f, Int seed_rotation) {
  const auto chain = symbolic_chain(f, seed_rotation);
  std::vector<SymbolicPair> out;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    const SymbolicTuple& prev = k == 0 ? chain.back() : chain[k - 1];
    out.push_back({chain[k], symbolic_dual(prev)});
  }
  return out;
}

std::string to_string(const SymbolicDigit& d, std::size_t j) {
  const std::string var = "r" + std::to_string(j);
  std::string out;
  if (d.sign == 1) {
    out = var;
    const std::string pt = p_term(d.p_coeff);
    if (!pt.empty()) out += (pt[0] == '-' ? "" : "+") + pt;
    if (d.offset > 0) out += "+" + std::to_string(d.offset);
    if (d.offset < 0) out += std::to_string(d.offset);
    return out;
  }
  out = p_term(d.p_coeff);
  if (d.offset != 0) out += (out.empty() || d.offset < 0 ? "" : "+") + std::to_string(d.offset);
  return out + "-" + var;
}

std::string to_string(const SymbolicTuple& t) {
  std::string out = "(";
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (j) out += ",";
    out += to_string(t[j], j);
  }
  return out + ")";
}

}  // namespace cyclic_weights
