#include "cyclic_weights/report.hpp"

#include <sstream>

#include "cyclic_weights/errors.hpp"
#include "cyclic_weights/symbolic.hpp"

namespace cyclic_weights {

namespace {

json header(const std::string& command, const Params& params) {
  return {{"schema", kSchema}, {"command", command}, {"p", params.p()}, {"f", params.f()}};
}

Params params_of(const json& j) {
  if (j.at("schema") != kSchema) throw DomainError("unknown schema " + j.at("schema").dump());
  return Params(j.at("p").get<Int>(), j.at("f").get<Int>());
}

json weights_json(const std::vector<Weight>& ws) {
  json out = json::array();
  for (const auto& w : ws) out.push_back(weight_json(w));
  return out;
}

std::vector<Weight> parse_weights(const json& j, const Params& params) {
  std::vector<Weight> out;
  for (const auto& w : j) out.push_back(parse_weight(w, params));
  return out;
}

json scalars_json(const std::vector<FieldElement>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(scalar_json(x));
  return out;
}

std::vector<FieldElement> parse_scalars(const json& j, const FieldHandle& field) {
  std::vector<FieldElement> out;
  for (const auto& x : j) out.push_back(parse_scalar(x, field));
  return out;
}

const char* mark(bool ok) { return ok ? "[PASS] " : "[FAIL] "; }
const char* yes_no(bool ok) { return ok ? "yes" : "no"; }

std::string digits_string(std::span<const Int> r) {
  std::string out = "(";
  for (std::size_t j = 0; j < r.size(); ++j) out += (j ? "," : "") + std::to_string(r[j]);
  return out + ")";
}

std::string cycle_string(const std::vector<Weight>& cycle) {
  std::string out;
  for (const auto& w : cycle) out += to_string(w) + " -> ";
  return out + (cycle.empty() ? "" : to_string(cycle.front()));
}

}  // namespace

ModuleReport make_module_report(const CyclicModule& module) {
  return {module, validate_cyclic_module(module), is_multiplicity_free(module), jh_factors(module),
          u_invariant_characters(module)};
}

ExampleReport make_symbolic_example(Int f, const ChainResult* twists_from) {
  ExampleReport out{f, true, twists_from != nullptr, std::nullopt, {}};
  const Int seed = twists_from ? twists_from->seed_rotation : 0;
  const auto pairs = symbolic_module(f, seed);
  if (twists_from) {
    if (twists_from->params.f() != f) throw DimensionError("example: chain degree does not match f");
    out.p = twists_from->params.p();
  }
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    std::string sub = to_string(pairs[k].sub);
    std::string quotient = to_string(pairs[k].quotient);
    if (twists_from) {
      const Weight& s = twists_from->sigmas[k + 1];
      sub += "⊗det^" + std::to_string(s.twist());
      quotient += "⊗det^" + std::to_string(s_dual(twists_from->sigmas[k]).twist());
    }
    out.lines.push_back(sub + " —— " + quotient);
  }
  return out;
}

ExampleReport make_numeric_example(const ChainResult& chain) {
  ExampleReport out{chain.params.f(), false, true, chain.params.p(), {}};
  for (const auto& pair : build_cyclic_module(chain).pairs) out.lines.push_back(to_string(pair));
  return out;
}

json weight_json(const Weight& w) {
  return {{"digits", std::vector<Int>(w.digits().begin(), w.digits().end())}, {"twist", w.twist()}};
}

Weight parse_weight(const json& j, const Params& params) {
  return make_weight(j.at("digits").get<std::vector<Int>>(), j.at("twist").get<Int>(), params);
}

json bchar_json(const BChar& c) { return {{"e_a", c.e_a}, {"e_d", c.e_d}}; }

BChar parse_bchar(const json& j, const Params& params) {
  return make_bchar(j.at("e_a").get<Int>(), j.at("e_d").get<Int>(), params);
}

json field_json(const FieldSpec& field) { return {{"p", field.p}, {"d", field.d}, {"modulus", field.modulus}}; }

FieldHandle parse_field(const json& j) {
  auto field = field_make(j.at("p").get<Int>(), j.at("d").get<Int>());
  if (j.contains("modulus") && j.at("modulus").get<std::vector<Int>>() != field->modulus)
    throw DomainError("field modulus does not match the deterministic choice");
  return field;
}

json scalar_json(const FieldElement& x) { return std::vector<Int>(x.coeffs().begin(), x.coeffs().end()); }

FieldElement parse_scalar(const json& j, const FieldHandle& field) {
  return FieldElement::make(field, j.get<std::vector<Int>>());
}

json module_json(const CyclicModule& module) {
  json pairs = json::array();
  for (const auto& pair : module.pairs)
    pairs.push_back({{"sub", weight_json(pair.sub)},
                     {"quotient", weight_json(pair.quotient)},
                     {"u_chars", {bchar_json(pair.u_chars.first), bchar_json(pair.u_chars.second)}}});
  return {{"n", module.pairs.size()}, {"pairs", pairs}};
}

CyclicModule parse_module(const json& j, const Params& params) {
  CyclicModule out{params, {}};
  for (const auto& pair : j.at("pairs")) {
    out.pairs.push_back({parse_weight(pair.at("sub"), params), parse_weight(pair.at("quotient"), params),
                         {parse_bchar(pair.at("u_chars").at(0), params), parse_bchar(pair.at("u_chars").at(1), params)}});
  }
  if (j.at("n").get<std::size_t>() != out.pairs.size()) throw DimensionError("module: n does not match pair count");
  return out;
}

// chain

json report_json(const ChainResult& r) {
  json out = header("chain", r.params);
  out["l"] = r.l;
  out["seed_digits"] = r.seed_digits;
  out["seed_twist"] = r.seed_twist;
  out["seed_rotation"] = r.seed_rotation;
  out["sigmas"] = weights_json(r.sigmas);
  out["e_values"] = r.e_values;
  return out;
}

ChainResult parse_chain_report(const json& j) {
  const Params params = params_of(j);
  return {params,
          j.at("seed_digits").get<std::vector<Int>>(),
          j.at("seed_twist").get<Int>(),
          j.at("seed_rotation").get<Int>(),
          j.at("l").get<Int>(),
          parse_weights(j.at("sigmas"), params),
          j.at("e_values").get<std::vector<Int>>()};
}

std::string render_text(const ChainResult& r) {
  std::ostringstream os;
  os << "chain p=" << r.params.p() << " f=" << r.params.f() << " l=" << r.l << " r=" << digits_string(r.seed_digits)
     << " m=" << r.seed_twist << " rotation=" << r.seed_rotation << "\n";
  for (std::size_t k = 0; k < r.sigmas.size(); ++k)
    os << "sigma_" << k << " = " << to_string(r.sigmas[k]) << "    e_" << k << " = " << r.e_values[k] << "\n";
  return os.str();
}

// verify-lemma

json report_json(const LemmaReport& r) {
  json out = header("verify-lemma", r.params);
  out["r_count"] = r.r_count;
  out["sampled"] = r.sampled;
  out["checks"] = {{"identity_ok", r.identity_ok},
                   {"distinct_ok", r.distinct_ok},
                   {"e_l_constant", r.e_l_constant},
                   {"e_l_zero_mod", r.e_l_zero_mod},
                   {"parity_ok", r.parity_ok},
                   {"composition_agrees", r.composition_agrees},
                   {"image_set_ok", r.image_set_ok},
                   {"sign_recurrence_ok", r.sign_recurrence_ok}};
  out["e_l_value"] = r.e_l_value ? json(*r.e_l_value) : json(nullptr);
  out["intermediate"] = {{"constant_c_twice", r.constant_c_twice},
                         {"c_congruence_ok", r.c_congruence_ok},
                         {"column_sums", r.column_sums},
                         {"column_sums_constant", r.column_sums_constant},
                         {"column_sums_match", r.column_sums_match},
                         {"expansion_ok", r.expansion_ok}};
  json signs = json::array();
  for (const auto& s : r.sign_vectors) signs.push_back(s.bits);
  out["sign_vectors"] = signs;
  json wit = json::array();
  for (const auto& w : r.witnesses) wit.push_back({{"check", w.check}, {"data", w.data}});
  out["witnesses"] = wit;
  out["all_ok"] = r.all_ok();
  out["intermediate_identities_ok"] = r.intermediate_identities_ok();
  return out;
}

LemmaReport parse_lemma_report(const json& j) {
  LemmaReport r{params_of(j)};
  r.r_count = j.at("r_count").get<std::size_t>();
  r.sampled = j.at("sampled").get<bool>();
  const auto& c = j.at("checks");
  r.identity_ok = c.at("identity_ok");
  r.distinct_ok = c.at("distinct_ok");
  r.e_l_constant = c.at("e_l_constant");
  r.e_l_zero_mod = c.at("e_l_zero_mod");
  r.parity_ok = c.at("parity_ok");
  r.composition_agrees = c.at("composition_agrees");
  r.image_set_ok = c.at("image_set_ok");
  r.sign_recurrence_ok = c.at("sign_recurrence_ok");
  if (!j.at("e_l_value").is_null()) r.e_l_value = j.at("e_l_value").get<Int>();
  const auto& in = j.at("intermediate");
  r.constant_c_twice = in.at("constant_c_twice");
  r.c_congruence_ok = in.at("c_congruence_ok");
  r.column_sums = in.at("column_sums").get<std::vector<Int>>();
  r.column_sums_constant = in.at("column_sums_constant");
  r.column_sums_match = in.at("column_sums_match");
  r.expansion_ok = in.at("expansion_ok");
  for (const auto& s : j.at("sign_vectors")) r.sign_vectors.push_back({s.get<std::vector<std::uint8_t>>()});
  for (const auto& w : j.at("witnesses"))
    r.witnesses.push_back({w.at("check").get<std::string>(), w.at("data").get<std::vector<Int>>()});
  return r;
}

std::string render_text(const LemmaReport& r) {
  std::ostringstream os;
  const Int q = r.params.q_minus_1();
  os << "verify-lemma p=" << r.params.p() << " f=" << r.params.f() << " l=" << r.params.chain_length()
     << " r_count=" << r.r_count << (r.sampled ? " (sampled)" : " (full box)") << "\n";
  os << mark(r.identity_ok) << "mu^(l) is the identity tuple\n";
  os << mark(r.distinct_ok) << "mu^(1..l) and m^(1..l) pairwise distinct\n";
  os << mark(r.e_l_constant) << "e_l(r) independent of r";
  if (r.e_l_value) os << " (e_l = " << *r.e_l_value << ")";
  os << "\n" << mark(r.e_l_zero_mod) << "e_l = 0 mod (p^f-1), p^f-1 = " << q << "\n";
  os << mark(r.parity_ok)
     << (r.params.f() % 2 ? "every m^(k) has an even number of ones\n" : "m^(k) + m^(k+f) = (1,...,1)\n");
  os << mark(r.composition_agrees) << "recurrence agrees with literal composition\n";
  os << mark(r.image_set_ok) << "entries in {x, x-1, x+1, p-2-x, p-3-x, p-1-x}\n";
  os << mark(r.sign_recurrence_ok) << "m^(k) = g^(k-1) m^(1) + m^(k-1)\n";
  os << "[info] 2c = " << r.constant_c_twice << ", c congruence: " << yes_no(r.c_congruence_ok) << "\n";
  os << "[info] column sums " << digits_string(r.column_sums) << " constant: " << yes_no(r.column_sums_constant)
     << ", match expected: " << yes_no(r.column_sums_match) << ", expansion: " << yes_no(r.expansion_ok) << "\n";
  os << "sign vectors:";
  for (const auto& s : r.sign_vectors) os << " " << to_string(s);
  os << "\n";
  if (r.witnesses.empty()) {
    os << "witnesses: none\n";
  } else {
    os << "witnesses:\n";
    for (const auto& w : r.witnesses) os << "  " << w.check << " " << digits_string(w.data) << "\n";
  }
  os << (r.all_ok() ? "all checks passed\n" : "CHECKS FAILED\n");
  return os.str();
}

// gr1

json report_json(const Gr1Result& r) {
  json out = header("gr1", r.source.params());
  out["source"] = weight_json(r.source);
  out["weights"] = weights_json(r.weights);
  out["pruned"] = r.pruned;
  return out;
}

Gr1Result parse_gr1_report(const json& j) {
  const Params params = params_of(j);
  return {parse_weight(j.at("source"), params), parse_weights(j.at("weights"), params),
          j.at("pruned").get<std::vector<std::vector<Int>>>()};
}

std::string render_text(const Gr1Result& r) {
  std::ostringstream os;
  os << "gr1 of " << to_string(r.source) << " (p=" << r.source.params().p() << " f=" << r.source.params().f()
     << ")\n";
  for (const auto& w : r.weights) os << "  " << to_string(w) << (is_generic(w) ? "" : "  [not generic]") << "\n";
  if (r.pruned.empty()) {
    os << "pruned: none\n";
  } else {
    os << "pruned (digits outside [0, p-1]):";
    for (const auto& d : r.pruned) os << " " << digits_string(d);
    os << "\n";
  }
  return os.str();
}

// module

json report_json(const ModuleReport& r) {
  json out = header("module", r.module.params);
  out.update(module_json(r.module));
  out["multiplicity_free"] = r.multiplicity_free;
  out["validation"] = {{"subs_distinct_generic", r.validation.subs_distinct_generic},
                       {"cyclic_consistent", r.validation.cyclic_consistent},
                       {"gr1_membership", r.validation.gr1_membership},
                       {"u_chars_consistent", r.validation.u_chars_consistent},
                       {"boundary_weights", r.validation.boundary_weights},
                       {"failures", r.validation.failures},
                       {"ok", r.validation.ok()}};
  out["jh_factors"] = weights_json(r.jh_factors);
  json chars = json::array();
  for (const auto& c : r.u_invariants) chars.push_back(bchar_json(c));
  out["u_invariants"] = chars;
  out["dim_d1"] = r.u_invariants.size();
  return out;
}

ModuleReport parse_module_report(const json& j) {
  const Params params = params_of(j);
  ModuleReport r{parse_module(j, params), {}, j.at("multiplicity_free").get<bool>(),
                 parse_weights(j.at("jh_factors"), params), {}};
  const auto& v = j.at("validation");
  r.validation.subs_distinct_generic = v.at("subs_distinct_generic");
  r.validation.cyclic_consistent = v.at("cyclic_consistent");
  r.validation.gr1_membership = v.at("gr1_membership");
  r.validation.u_chars_consistent = v.at("u_chars_consistent");
  r.validation.boundary_weights = v.at("boundary_weights");
  r.validation.failures = v.at("failures").get<std::vector<std::string>>();
  for (const auto& c : j.at("u_invariants")) r.u_invariants.push_back(parse_bchar(c, params));
  return r;
}

std::string render_text(const ModuleReport& r) {
  std::ostringstream os;
  os << "cyclic module p=" << r.module.params.p() << " f=" << r.module.params.f() << " n=" << r.module.size()
     << "\n";
  for (const auto& pair : r.module.pairs) os << "  " << to_string(pair) << "\n";
  const auto& v = r.validation;
  os << mark(v.subs_distinct_generic) << "subs distinct and generic\n";
  os << mark(v.cyclic_consistent) << "quotient_i = s_dual(sub_{i-1})\n";
  os << mark(v.gr1_membership) << "sub_i in gr1(sub_{i-1})\n";
  os << mark(v.u_chars_consistent) << "U-invariants chi(sigma_i) + chi(sigma_{i-1})^s\n";
  os << mark(r.multiplicity_free) << "multiplicity-free (" << r.jh_factors.size() << " Jordan-Hölder factors)\n";
  os << "dim D_1 = " << r.u_invariants.size() << "\n";
  if (v.boundary_weights) os << "note: " << v.boundary_weights << " sub(s) have a digit equal to 0 or p-1\n";
  for (const auto& f : v.failures) os << "  failure: " << f << "\n";
  return os.str();
}

// diagram-classify

json report_json(const DiagramReport& r) {
  json out = header("diagram-classify", r.module.params);
  const FieldSpec& field = r.t.spec();
  out["field"] = field_json(field);
  out["module"] = module_json(r.module);
  out["scalars"] = scalars_json(r.scalars);
  out["t"] = scalar_json(r.t);
  out["scalars_prime"] = r.scalars_prime ? scalars_json(*r.scalars_prime) : json(nullptr);
  if (r.classification) {
    const auto& c = *r.classification;
    out["classification"] = {{"isomorphic", c.isomorphic},
                             {"t", scalar_json(c.t)},
                             {"t_prime", scalar_json(c.t_prime)},
                             {"witness", c.witness ? scalars_json(*c.witness) : json(nullptr)}};
  } else {
    out["classification"] = nullptr;
  }
  return out;
}

DiagramReport parse_diagram_report(const json& j) {
  const Params params = params_of(j);
  const FieldHandle field = parse_field(j.at("field"));
  DiagramReport r{parse_module(j.at("module"), params), parse_scalars(j.at("scalars"), field),
                  parse_scalar(j.at("t"), field), std::nullopt, std::nullopt};
  if (!j.at("scalars_prime").is_null()) r.scalars_prime = parse_scalars(j.at("scalars_prime"), field);
  if (!j.at("classification").is_null()) {
    const auto& c = j.at("classification");
    Classification cl{c.at("isomorphic").get<bool>(), parse_scalar(c.at("t"), field),
                      parse_scalar(c.at("t_prime"), field), std::nullopt};
    if (!c.at("witness").is_null()) cl.witness = parse_scalars(c.at("witness"), field);
    r.classification = std::move(cl);
  }
  return r;
}

std::string render_text(const DiagramReport& r) {
  std::ostringstream os;
  const FieldSpec& field = r.t.spec();
  os << "cyclic diagram p=" << r.module.params.p() << " f=" << r.module.params.f() << " n=" << r.module.size()
     << " scalars in F_" << field.p << "^" << field.d << " (p=" << field.p << " d=" << field.d << ")\n";
  auto list = [](const std::vector<FieldElement>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "; " : "") + to_string(xs[i]);
    return s;
  };
  os << "t = " << list(r.scalars) << "\n";
  os << "t(D) = " << to_string(r.t) << "\n";
  if (r.scalars_prime && r.classification) {
    const auto& c = *r.classification;
    os << "t' = " << list(*r.scalars_prime) << "\n";
    os << "t(D') = " << to_string(c.t_prime) << "\n";
    os << (c.isomorphic ? "isomorphic" : "not isomorphic") << "\n";
    if (c.witness) os << "witness a = " << list(*c.witness) << "\n";
  }
  return os.str();
}

// explore

json report_json(const CycleSearchResult& r) {
  json out = header("explore", r.params);
  out["mode"] = "cycles";
  out["start"] = weight_json(r.start);
  out["max_len"] = r.max_len;
  json cycles = json::array(), details = json::array();
  for (const auto& c : r.cycles) {
    cycles.push_back(weights_json(c.vertices));
    details.push_back({{"valid", c.valid},
                       {"multiplicity_free", c.multiplicity_free},
                       {"canonical_rotation", c.canonical_rotation ? json(*c.canonical_rotation) : json(nullptr)}});
  }
  out["cycles"] = cycles;
  out["cycle_details"] = details;
  out["canonical_hits"] = r.canonical_hits;
  out["truncated"] = r.truncated;
  out["pruned_boundary"] = r.pruned_boundary;
  out["visits"] = r.visits;
  return out;
}

CycleSearchResult parse_cycle_report(const json& j) {
  const Params params = params_of(j);
  CycleSearchResult r{params,
                      parse_weight(j.at("start"), params),
                      j.at("max_len").get<Int>(),
                      {},
                      j.at("canonical_hits").get<std::vector<Int>>(),
                      j.at("pruned_boundary").get<std::size_t>(),
                      j.at("visits").get<std::size_t>(),
                      j.at("truncated").get<bool>()};
  const auto& cycles = j.at("cycles");
  const auto& details = j.at("cycle_details");
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    FoundCycle c{parse_weights(cycles.at(i), params), details.at(i).at("valid"), details.at(i).at("multiplicity_free"),
                 std::nullopt};
    if (!details.at(i).at("canonical_rotation").is_null()) c.canonical_rotation = details.at(i).at("canonical_rotation").get<Int>();
    r.cycles.push_back(std::move(c));
  }
  return r;
}

std::string render_text(const CycleSearchResult& r) {
  std::ostringstream os;
  os << "cycles through " << to_string(r.start) << " (p=" << r.params.p() << " f=" << r.params.f()
     << ", max_len=" << r.max_len << ")\n";
  if (r.cycles.empty()) os << "no cycles found (max_len=" << r.max_len << ")\n";
  for (const auto& c : r.cycles) {
    os << "  [" << c.vertices.size() << "] " << cycle_string(c.vertices);
    os << (c.multiplicity_free ? "  multiplicity-free" : "  not multiplicity-free");
    if (!c.valid) os << "  INVALID";
    if (c.canonical_rotation) os << "  (rotation " << *c.canonical_rotation << ")";
    os << "\n";
  }
  os << "pruned boundary successors: " << r.pruned_boundary << ", visits: " << r.visits << "\n";
  if (r.truncated) os << "TRUNCATED: node-visit budget exhausted\n";
  return os.str();
}

json report_json(const CanonicalCheckReport& r) {
  json out = header("explore", r.params);
  out["mode"] = "canonical-check";
  out["r"] = r.r;
  out["m"] = r.m;
  out["search_truncated"] = r.search_truncated;
  json rot = json::array();
  for (const auto& c : r.rotations)
    rot.push_back({{"rotation", c.rotation},
                   {"cycle", weights_json(c.cycle)},
                   {"closes", c.closes},
                   {"length", c.length},
                   {"valid", c.valid},
                   {"multiplicity_free", c.multiplicity_free},
                   {"found_by_search", c.found_by_search}});
  out["rotations"] = rot;
  out["all_ok"] = r.all_ok();
  return out;
}

CanonicalCheckReport parse_canonical_report(const json& j) {
  const Params params = params_of(j);
  CanonicalCheckReport r{params, j.at("r").get<std::vector<Int>>(), j.at("m").get<Int>(), {},
                         j.at("search_truncated").get<bool>()};
  for (const auto& c : j.at("rotations"))
    r.rotations.push_back({c.at("rotation").get<Int>(), parse_weights(c.at("cycle"), params), c.at("closes"),
                           c.at("length").get<Int>(), c.at("valid"), c.at("multiplicity_free"),
                           c.at("found_by_search")});
  return r;
}

std::string render_text(const CanonicalCheckReport& r) {
  std::ostringstream os;
  os << "rotation-seeded chains for r=" << digits_string(r.r) << " m=" << r.m << " (p=" << r.params.p()
     << " f=" << r.params.f() << ")\n";
  for (const auto& c : r.rotations) {
    os << mark(c.ok()) << "rotation " << c.rotation << ": length " << c.length << ", closes " << yes_no(c.closes)
       << ", valid " << yes_no(c.valid) << ", multiplicity-free " << yes_no(c.multiplicity_free)
       << ", found by search " << yes_no(c.found_by_search) << "\n";
    os << "    " << cycle_string(c.cycle) << "\n";
  }
  if (r.search_truncated) os << "TRUNCATED: node-visit budget exhausted\n";
  return os.str();
}

json report_json(const EvidenceReport& r) {
  json out = header("explore", r.params);
  out["mode"] = "evidence";
  out["m"] = r.m;
  out["max_len"] = r.max_len;
  out["starts"] = r.starts;
  out["distinct_cycles"] = r.distinct_cycles;
  out["canonical_expected"] = r.canonical_expected;
  out["canonical_found"] = r.canonical_found;
  out["non_multiplicity_free"] = r.non_multiplicity_free;
  json extras = json::array();
  for (const auto& c : r.extras) extras.push_back(weights_json(c));
  out["extras"] = extras;
  out["truncated"] = r.truncated;
  return out;
}

EvidenceReport parse_evidence_report(const json& j) {
  const Params params = params_of(j);
  EvidenceReport r{params, j.at("m").get<Int>(), j.at("max_len").get<Int>()};
  r.starts = j.at("starts");
  r.distinct_cycles = j.at("distinct_cycles");
  r.canonical_expected = j.at("canonical_expected");
  r.canonical_found = j.at("canonical_found");
  r.non_multiplicity_free = j.at("non_multiplicity_free");
  for (const auto& c : j.at("extras")) r.extras.push_back(parse_weights(c, params));
  r.truncated = j.at("truncated");
  return r;
}

std::string render_text(const EvidenceReport& r) {
  std::ostringstream os;
  os << "cycle evidence p=" << r.params.p() << " f=" << r.params.f() << " m=" << r.m << " max_len=" << r.max_len
     << " over " << r.starts << " box starts\n";
  os << "distinct cycles (up to rotation): " << r.distinct_cycles << "\n";
  os << mark(r.canonical_complete()) << "rotation-seeded chains rediscovered: " << r.canonical_found << "/"
     << r.canonical_expected << "\n";
  os << "cycles that are not multiplicity-free: " << r.non_multiplicity_free << "\n";
  if (r.extras.empty()) {
    os << "multiplicity-free cycles not seeded by a rotation of mu: none\n";
  } else {
    os << "!!! " << r.extras.size() << " multiplicity-free cycle(s) NOT seeded by a rotation of mu:\n";
    for (const auto& c : r.extras) os << "  [" << c.size() << "] " << cycle_string(c) << "\n";
  }
  if (r.truncated) os << "TRUNCATED: node-visit budget exhausted\n";
  return os.str();
}

// example

json report_json(const ExampleReport& r) {
  json out{{"schema", kSchema}, {"command", "example"}, {"f", r.f}, {"p", r.p ? json(*r.p) : json(nullptr)}};
  out["symbolic"] = r.symbolic;
  out["with_twists"] = r.with_twists;
  out["lines"] = r.lines;
  return out;
}

ExampleReport parse_example_report(const json& j) {
  if (j.at("schema") != kSchema) throw DomainError("unknown schema");
  ExampleReport r{j.at("f").get<Int>(), j.at("symbolic").get<bool>(), j.at("with_twists").get<bool>(), std::nullopt,
                  j.at("lines").get<std::vector<std::string>>()};
  if (!j.at("p").is_null()) r.p = j.at("p").get<Int>();
  return r;
}

std::string render_text(const ExampleReport& r) {
  std::string out;
  for (const auto& line : r.lines) out += line + "\n";
  return out;
}

}  // namespace cyclic_weights
