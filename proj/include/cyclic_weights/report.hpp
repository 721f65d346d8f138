#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cyclic_weights/cyclic_module.hpp"
#include "cyclic_weights/diagram.hpp"
#include "cyclic_weights/explorer.hpp"
#include "cyclic_weights/mu_chain.hpp"

namespace cyclic_weights {

using json = nlohmann::json;

inline constexpr const char* kSchema = "cyclic-weights/1";

struct ModuleReport {
  CyclicModule module;
  ModuleValidation validation;
  bool multiplicity_free = false;
  std::vector<Weight> jh_factors;
  std::vector<BChar> u_invariants;  // D_1

  bool ok() const { return validation.ok() && multiplicity_free; }
  friend bool operator==(const ModuleReport&, const ModuleReport&) = default;
};

ModuleReport make_module_report(const CyclicModule& module);

struct DiagramReport {
  CyclicModule module;
  std::vector<FieldElement> scalars;
  FieldElement t;
  std::optional<std::vector<FieldElement>> scalars_prime;
  std::optional<Classification> classification;

  friend bool operator==(const DiagramReport&, const DiagramReport&) = default;
};

struct ExampleReport {
  Int f = 0;
  bool symbolic = true;
  bool with_twists = false;
  std::optional<Int> p;
  std::vector<std::string> lines;

  friend bool operator==(const ExampleReport&, const ExampleReport&) = default;
};

// One "sub —— quotient" line per pair. Symbolic lines drop twists
// unless `twists_from` supplies a concrete chain to take them from.
ExampleReport make_symbolic_example(Int f, const ChainResult* twists_from = nullptr);
ExampleReport make_numeric_example(const ChainResult& chain);

// Weight / character / scalar pieces.
json weight_json(const Weight& w);
Weight parse_weight(const json& j, const Params& params);
json bchar_json(const BChar& c);
BChar parse_bchar(const json& j, const Params& params);
json field_json(const FieldSpec& field);
FieldHandle parse_field(const json& j);
json scalar_json(const FieldElement& x);
FieldElement parse_scalar(const json& j, const FieldHandle& field);
json module_json(const CyclicModule& module);
CyclicModule parse_module(const json& j, const Params& params);

// Documents: {"schema": "cyclic-weights/1", "command": ..., "p": ..., "f": ..., ...}.
json report_json(const ChainResult& r);
json report_json(const LemmaReport& r);
json report_json(const Gr1Result& r);
json report_json(const ModuleReport& r);
json report_json(const DiagramReport& r);
json report_json(const CycleSearchResult& r);
json report_json(const CanonicalCheckReport& r);
json report_json(const EvidenceReport& r);
json report_json(const ExampleReport& r);

ChainResult parse_chain_report(const json& j);
LemmaReport parse_lemma_report(const json& j);
Gr1Result parse_gr1_report(const json& j);
ModuleReport parse_module_report(const json& j);
DiagramReport parse_diagram_report(const json& j);
CycleSearchResult parse_cycle_report(const json& j);
CanonicalCheckReport parse_canonical_report(const json& j);
EvidenceReport parse_evidence_report(const json& j);
ExampleReport parse_example_report(const json& j);

std::string render_text(const ChainResult& r);
std::string render_text(const LemmaReport& r);
std::string render_text(const Gr1Result& r);
std::string render_text(const ModuleReport& r);
std::string render_text(const DiagramReport& r);
std::string render_text(const CycleSearchResult& r);
std::string render_text(const CanonicalCheckReport& r);
std::string render_text(const EvidenceReport& r);
std::string render_text(const ExampleReport& r);

}  // namespace cyclic_weights
