#include "cyclic_weights/cli.hpp"

#include <CLI11.hpp>
#include <optional>
#include <thread>

#include "cyclic_weights/diagram.hpp"
#include "cyclic_weights/errors.hpp"
#include "cyclic_weights/explorer.hpp"
#include "cyclic_weights/report.hpp"

namespace cyclic_weights {

std::vector<long long> parse_int_list(const std::string& text) {
  std::vector<long long> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, comma - pos);
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer list: '" + text + "'");
    }
    if (used != item.size()) throw std::invalid_argument("not an integer list: '" + text + "'");
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

namespace {

struct Options {
  Int p = 0;
  Int f = 0;
  std::string r;
  Int m = 0;
  Int rotation = 0;
  std::string weight;
  std::string scalars;
  std::string scalars_prime;
  Int field_degree = 1;
  Int max_len = 0;
  std::size_t budget = kDefaultVisitBudget;
  std::string format = "text";
  bool symbolic = false;
  bool with_twists = false;
  bool canonical_check = false;
  bool evidence = false;
  std::optional<std::uint64_t> seed;
  unsigned workers = 0;
};

std::vector<Int> as_ints(const std::string& text) {
  const auto v = parse_int_list(text);
  return {v.begin(), v.end()};
}

// "2;3;4" or "1,2;0,3" -> scalars over F_{p^d}, low-degree-first coefficients.
std::vector<FieldElement> parse_scalar_list(const std::string& text, const FieldHandle& field) {
  std::vector<FieldElement> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t semi = std::min(text.find(';', pos), text.size());
    out.push_back(FieldElement::make(field, as_ints(text.substr(pos, semi - pos))));
    pos = semi + 1;
  }
  return out;
}

unsigned worker_count(const Options& o) {
  if (o.workers) return o.workers;
  return std::max(1u, std::thread::hardware_concurrency());
}

template <class Report>
void emit(const Report& report, const Options& o, std::ostream& out) {
  if (o.format == "json")
    out << report_json(report).dump(2) << "\n";
  else
    out << render_text(report);
}

ChainResult chain_from(const Options& o, const Params& params) {
  if (o.r.empty()) throw std::invalid_argument("--r is required");
  return build_chain(params, as_ints(o.r), o.m, o.rotation);
}

int cmd_chain(const Options& o, std::ostream& out) {
  const Params params(o.p, o.f);
  emit(chain_from(o, params), o, out);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Params params(o.p, o.f);
  std::vector<std::vector<Int>> r_set;
  if (!o.r.empty())
    r_set.push_back(as_ints(o.r));
  else
    r_set = default_r_set(params, o.seed);
  const auto report = verify_mu_lemma(params, r_set, worker_count(o));
  emit(report, o, out);
  return report.all_ok() ? kExitOk : kExitCheckFailed;
}

int cmd_gr1(const Options& o, std::ostream& out) {
  const Params params(o.p, o.f);
  const std::string digits = o.weight.empty() ? o.r : o.weight;
  if (digits.empty()) throw std::invalid_argument("--weight is required");
  emit(gr1_weights(make_weight(as_ints(digits), o.m, params)), o, out);
  return kExitOk;
}

int cmd_module(const Options& o, std::ostream& out) {
  const Params params(o.p, o.f);
  const auto report = make_module_report(build_cyclic_module(chain_from(o, params)));
  emit(report, o, out);
  return report.ok() ? kExitOk : kExitCheckFailed;
}

int cmd_diagram(const Options& o, std::ostream& out) {
  const Params params(o.p, o.f);
  if (o.scalars.empty()) throw std::invalid_argument("--scalars is required");
  const FieldHandle field = field_make(params.p(), o.field_degree);
  const CyclicModule module = build_cyclic_module(chain_from(o, params));
  const CyclicDiagram d = make_diagram(module, parse_scalar_list(o.scalars, field));
  DiagramReport report{module, d.scalars, t_invariant(d), std::nullopt, std::nullopt};
  if (!o.scalars_prime.empty()) {
    const CyclicDiagram dp = make_diagram(module, parse_scalar_list(o.scalars_prime, field));
    report.scalars_prime = dp.scalars;
    report.classification = classify_isomorphic(d, dp);
  }
  emit(report, o, out);
  return kExitOk;
}

int cmd_explore(const Options& o, std::ostream& out) {
  const Params params(o.p, o.f);
  const Int max_len = o.max_len ? o.max_len : 2 * params.f();
  if (o.evidence) {
    const auto report = gather_evidence(params, o.m, max_len, worker_count(o), o.budget);
    emit(report, o, out);
    return report.canonical_complete() ? kExitOk : kExitCheckFailed;
  }
  const std::string digits = o.weight.empty() ? o.r : o.weight;
  if (digits.empty()) throw std::invalid_argument("--weight (or --r) is required");
  if (o.canonical_check) {
    const auto report = canonical_chain_check(params, as_ints(digits), o.m, o.budget);
    emit(report, o, out);
    return report.all_ok() ? kExitOk : kExitCheckFailed;
  }
  const auto report = find_cycles(make_weight(as_ints(digits), o.m, params), max_len, o.budget);
  emit(report, o, out);
  const bool sound = std::all_of(report.cycles.begin(), report.cycles.end(), [](const FoundCycle& c) { return c.valid; });
  return sound && !report.truncated ? kExitOk : kExitCheckFailed;
}

int cmd_example(const Options& o, std::ostream& out) {
  if (o.symbolic && !o.with_twists) {
    if (o.p) (void)Params(o.p, o.f);
    emit(make_symbolic_example(o.f), o, out);
    return kExitOk;
  }
  if (!o.p || o.r.empty()) throw std::invalid_argument("--p and --r are required unless --symbolic is given alone");
  const Params params(o.p, o.f);
  const ChainResult chain = chain_from(o, params);
  emit(o.symbolic ? make_symbolic_example(o.f, &chain) : make_numeric_example(chain), o, out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclic modules and cyclic diagrams for GL_2 over a local field with residue field F_{p^f}"};
  app.name("cyclic-weights");
  app.require_subcommand(1);

  Options o;
  auto add_pf = [&o](CLI::App* sub, bool need_p = true) {
    auto* p = sub->add_option("--p", o.p, "residual characteristic, a prime > 3");
    if (need_p) p->required();
    sub->add_option("--f", o.f, "residue degree")->required();
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_chain = [&o](CLI::App* sub) {
    sub->add_option("--r", o.r, "seed digits r_0,...,r_{f-1}, each in [1, p-3]");
    sub->add_option("--m", o.m, "determinant twist of the seed weight");
    sub->add_option("--rotation", o.rotation, "seed the chain with g^s.mu instead of mu");
  };

  auto* chain = app.add_subcommand("chain", "build the weight chain sigma_0, ..., sigma_l");
  add_pf(chain);
  add_chain(chain);

  auto* verify = app.add_subcommand("verify-lemma", "check the mu^(k) / e_k lemma over the box {1..p-3}^f");
  add_pf(verify);
  verify->add_option("--r", o.r, "check a single r instead of the box");
  verify->add_option("--seed", o.seed, "sampling seed for boxes above 10^6 points");
  verify->add_option("--workers", o.workers, "worker threads (default: hardware concurrency)");

  auto* gr1 = app.add_subcommand("gr1", "gr^1 weights of the principal series attached to a weight");
  add_pf(gr1);
  gr1->add_option("--weight", o.weight, "digits r_0,...,r_{f-1}")->required();
  gr1->add_option("--m", o.m, "determinant twist");

  auto* module = app.add_subcommand("module", "build and validate the cyclic module of a chain");
  add_pf(module);
  add_chain(module);

  auto* diagram = app.add_subcommand("diagram-classify", "t(D) of a cyclic diagram and isomorphism with another");
  add_pf(diagram);
  add_chain(diagram);
  diagram->add_option("--field-degree", o.field_degree, "scalars live in F_{p^d}");
  diagram->add_option("--scalars", o.scalars, "t_1;...;t_n, each as c0,c1,... (low degree first)")->required();
  diagram->add_option("--scalars-prime", o.scalars_prime, "t'_1;...;t'_n of a second diagram");

  auto* explore = app.add_subcommand("explore", "search cycles in the gr^1 successor graph");
  add_pf(explore);
  explore->add_option("--weight,--r", o.weight, "start digits");
  explore->add_option("--m", o.m, "start twist");
  explore->add_option("--max-len", o.max_len, "longest cycle to search (default 2f)");
  explore->add_option("--budget", o.budget, "node-visit budget");
  explore->add_flag("--canonical-check", o.canonical_check, "compare against the rotation-seeded chains");
  explore->add_flag("--evidence", o.evidence, "search from every box start and report non-canonical cycles");
  explore->add_option("--workers", o.workers, "worker threads for --evidence");

  auto* example = app.add_subcommand("example", "the f = 2, 3 style display of the constructed modules");
  add_pf(example, false);
  add_chain(example);
  example->add_flag("--symbolic", o.symbolic, "digits as forms in p and r_j");
  example->add_flag("--with-twists", o.with_twists, "append twists computed at a concrete --p and --r");

  std::vector<std::string> argv_storage{"cyclic-weights"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*chain) return cmd_chain(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*gr1) return cmd_gr1(o, out);
    if (*module) return cmd_module(o, out);
    if (*diagram) return cmd_diagram(o, out);
    if (*explore) return cmd_explore(o, out);
    if (*example) return cmd_example(o, out);
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace cyclic_weights
