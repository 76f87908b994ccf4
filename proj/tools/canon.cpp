// Command-line front end: canonical bases, classification verdicts and
// completion runs for ground equational presentations and finite abstract
// proof systems.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "canon/abstract.hpp"
#include "canon/completion.hpp"
#include "canon/eq_backend.hpp"
#include "canon/framework.hpp"
#include "canon/ground_completion.hpp"

using namespace canon;

namespace {

struct Options {
  std::string input;
  std::string backend = "auto";  // equational | abstract | auto (by extension)
  std::string ordering = "completion";
  std::string term_order_chain;
  int max_term_size = 7;
  int max_proof_depth = 7;
  std::string query;
  std::string mechanism;
  std::string policy = "largest";
  std::string trace_path;
  std::string output;
  std::string format = "text";
  std::string expect;
  std::string presentation_csv;
  size_t max_steps = 1000;
  unsigned seed = 0;
  bool exact_terms = false;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw CanonError("cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void emit(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opt.output);
    if (!out.good()) throw CanonError("cannot write '" + opt.output + "'");
    out << text;
  }
}

bool is_abstract(const Options& opt) {
  if (opt.backend == "abstract") return true;
  if (opt.backend == "equational") return false;
  return opt.input.size() >= 4 && opt.input.substr(opt.input.size() - 4) == ".sys";
}

OrderingConfig resolve_ordering(const Options& opt, const Signature& sig) {
  OrderingConfig cfg;
  if (std::ifstream probe(opt.ordering); probe.good()) {
    std::ostringstream text;
    text << probe.rdbuf();
    cfg = parse_ordering_config(text.str(), sig);
  } else {
    cfg = preset(opt.ordering);
  }
  if (!opt.term_order_chain.empty()) {
    cfg.term_order = TermOrdering{};
    add_term_order_chain(cfg, opt.term_order_chain, sig);
  }
  return cfg;
}

struct EqProblem {
  std::unique_ptr<EqBackend> backend;
  Pres presentation;
};

EqProblem load_equational(const Options& opt) {
  // parse once to discover the signature, then rebuild against the ordering
  std::string text = slurp(opt.input);
  TermPool scratch{Signature{}};
  FormulaPool scratch_formulas{scratch};
  parse_presentation(scratch_formulas, text);

  Bounds bounds{opt.max_term_size, opt.max_proof_depth};
  EqProblem prob;
  prob.backend = std::make_unique<EqBackend>(
      scratch.sig(), resolve_ordering(opt, scratch.sig()), bounds);
  prob.presentation = parse_presentation(prob.backend->formulas(), text);
  return prob;
}

struct AbsProblem {
  std::unique_ptr<AbstractSystem> system;
  Pres presentation;
  std::vector<std::string> warnings;
};

AbsProblem load_abstract(const Options& opt) {
  AbsProblem prob;
  prob.system = std::make_unique<AbstractSystem>(
      AbstractSystem::load_text(slurp(opt.input), &prob.warnings));
  if (!opt.presentation_csv.empty()) {
    std::istringstream in(opt.presentation_csv);
    std::string atom;
    while (std::getline(in, atom, ',')) {
      prob.presentation.insert(prob.system->parse_formula(atom));
    }
  } else if (!prob.system->default_presentation().empty()) {
    prob.presentation = prob.system->default_presentation();
  } else {
    prob.presentation = prob.system->all_atoms();
  }
  return prob;
}

template <class B>
std::vector<std::string> formula_lines(B& b, const Pres& pres, bool sugar) {
  std::vector<int32_t> sorted(pres.begin(), pres.end());
  std::sort(sorted.begin(), sorted.end(),
            [&](int32_t x, int32_t y) { return b.formula_less(x, y); });
  std::vector<std::string> out;
  for (int32_t f : sorted) out.push_back(b.show_formula(f, sugar));
  return out;
}

template <class B>
std::string render_basis(const Options& opt, B& b, const Pres& pres) {
  auto lines = formula_lines(b, pres, !opt.exact_terms);
  if (opt.format == "json") {
    nlohmann::json j;
    j["basis"] = lines;
    return j.dump(2) + "\n";
  }
  std::string out;
  for (auto& l : lines) out += l + "\n";
  return out;
}

template <class B>
std::string render_verdict(const Options& opt, B& b, const Verdict& v) {
  if (opt.format == "json") {
    nlohmann::json j;
    j["contracted"] = v.contracted;
    j["saturated"] = v.saturated;
    j["complete"] = v.complete;
    j["canonical"] = v.canonical;
    if (v.contracted_witness) j["contracted_witness"] = b.show_formula(*v.contracted_witness);
    if (v.saturated_witness) j["saturated_witness"] = b.show_proof(*v.saturated_witness);
    if (v.complete_witness) j["complete_witness"] = b.show_formula(*v.complete_witness);
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "contracted: " << (v.contracted ? "true" : "false");
  if (v.contracted_witness) out << "  (unused: " << b.show_formula(*v.contracted_witness) << ")";
  out << "\nsaturated: " << (v.saturated ? "true" : "false");
  if (v.saturated_witness) out << "  (escaping proof: " << b.show_proof(*v.saturated_witness) << ")";
  out << "\ncomplete: " << (v.complete ? "true" : "false");
  if (v.complete_witness) out << "  (unprovable in place: " << b.show_formula(*v.complete_witness) << ")";
  out << "\ncanonical: " << (v.canonical ? "true" : "false") << "\n";
  return out.str();
}

std::string render_derivation(const Options& opt, const DerivationVerdict& v) {
  if (opt.format == "json") {
    nlohmann::json j;
    j["good"] = v.good;
    j["fair"] = v.fair;
    j["uniformly_fair"] = v.uniformly_fair;
    j["contracting"] = v.contracting;
    j["saturating"] = v.saturating;
    j["completing"] = v.completing;
    j["canonical"] = v.canonical;
    if (!v.witness.empty()) j["witness"] = v.witness;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  auto flag = [&](const char* name, bool val) {
    out << name << ": " << (val ? "true" : "false") << "\n";
  };
  flag("good", v.good);
  flag("fair", v.fair);
  flag("uniformly_fair", v.uniformly_fair);
  flag("contracting", v.contracting);
  flag("saturating", v.saturating);
  flag("completing", v.completing);
  flag("canonical", v.canonical);
  if (!v.witness.empty()) out << "witness: " << v.witness << "\n";
  return out.str();
}

int check_expectations(const std::string& expect, const DerivationVerdict& v) {
  std::istringstream in(expect);
  std::string flagname;
  while (std::getline(in, flagname, ',')) {
    bool val;
    if (flagname == "good") val = v.good;
    else if (flagname == "fair") val = v.fair;
    else if (flagname == "uniformly_fair") val = v.uniformly_fair;
    else if (flagname == "contracting") val = v.contracting;
    else if (flagname == "saturating") val = v.saturating;
    else if (flagname == "completing") val = v.completing;
    else if (flagname == "canonical") val = v.canonical;
    else throw CanonError("unknown trace flag '" + flagname + "'");
    if (!val) {
      std::cerr << "expectation failed: " << flagname << "=false\n";
      return 1;
    }
  }
  return 0;
}

int cmd_validate(const Options& opt) {
  if (is_abstract(opt)) {
    auto prob = load_abstract(opt);
    for (auto& w : prob.warnings) std::cerr << "warning: " << w << "\n";
    PostulateReport rep = check_postulates(*prob.system, prob.system->all_proofs());
    std::cout << "proofs checked: " << rep.proofs_checked << "\n";
    std::cout << "cut pairs checked: " << rep.cut_pairs_checked << "\n";
    for (const auto& v : rep.violations) {
      std::cout << "violation (" << to_string(v.kind) << "): " << v.detail << "\n";
    }
    std::cout << (rep.ok() ? "postulates: ok" : "postulates: FAILED") << "\n";
    return rep.ok() ? 0 : 1;
  }
  auto prob = load_equational(opt);
  auto all = enumerate_proofs(prob.backend->proofs(), prob.presentation,
                              prob.backend->bounds());
  // keep the cut-pair check tractable on large enumerations
  if (all.size() > 400) {
    std::mt19937 rng(opt.seed);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(400);
  }
  PostulateReport rep = check_postulates(*prob.backend, all);
  std::cout << "proofs checked: " << rep.proofs_checked << "\n";
  std::cout << "cut pairs checked: " << rep.cut_pairs_checked << "\n";
  for (const auto& v : rep.violations) {
    std::cout << "violation (" << to_string(v.kind) << "): " << v.detail << "\n";
  }
  std::cout << (rep.ok() ? "postulates: ok" : "postulates: FAILED") << "\n";
  return rep.ok() ? 0 : 1;
}

int cmd_theory(const Options& opt) {
  if (opt.query.empty()) throw CanonError("theory needs --query");
  if (is_abstract(opt)) {
    auto prob = load_abstract(opt);
    auto f = prob.system->parse_formula(opt.query);
    bool yes = prob.system->theorems(prob.presentation).count(f) > 0;
    std::cout << (yes ? "yes" : "no") << "\n";
    return 0;
  }
  auto prob = load_equational(opt);
  FormulaId f = prob.backend->parse_formula(opt.query);
  bool yes = decide_membership(prob.backend->formulas(), prob.presentation, f);
  std::cout << (yes ? "yes" : "no") << "\n";
  return 0;
}

int cmd_sharp(const Options& opt) {
  if (is_abstract(opt)) {
    auto prob = load_abstract(opt);
    emit(opt, render_basis(opt, *prob.system, sharp(*prob.system, prob.presentation)));
    return 0;
  }
  auto prob = load_equational(opt);
  emit(opt, render_basis(opt, *prob.backend, sharp(*prob.backend, prob.presentation)));
  return 0;
}

template <class B>
int classify_and_report(const Options& opt, B& b, const Pres& pres) {
  Verdict v = classify(b, pres);
  emit(opt, render_verdict(opt, b, v));
  if (opt.expect.empty()) return 0;
  std::istringstream in(opt.expect);
  std::string flagname;
  while (std::getline(in, flagname, ',')) {
    bool val;
    if (flagname == "contracted") val = v.contracted;
    else if (flagname == "saturated") val = v.saturated;
    else if (flagname == "complete") val = v.complete;
    else if (flagname == "canonical") val = v.canonical;
    else throw CanonError("unknown verdict flag '" + flagname + "'");
    if (!val) {
      std::cerr << "expectation failed: " << flagname << "=false\n";
      return 1;
    }
  }
  return 0;
}

int cmd_classify(const Options& opt) {
  if (is_abstract(opt)) {
    auto prob = load_abstract(opt);
    return classify_and_report(opt, *prob.system, prob.presentation);
  }
  auto prob = load_equational(opt);
  return classify_and_report(opt, *prob.backend, prob.presentation);
}

template <class B>
int run_and_report(const Options& opt, B& b, const Trace& trace) {
  if (!opt.trace_path.empty()) {
    std::ofstream out(opt.trace_path);
    if (!out.good()) throw CanonError("cannot write '" + opt.trace_path + "'");
    out << dump_trace(trace, [&](int32_t f) { return b.show_formula(f, !opt.exact_terms); });
  }
  std::cout << "steps: " << trace.steps.size()
            << (trace.terminated ? "" : "  (max steps reached; not a fixpoint)") << "\n";
  std::cout << "final basis:\n";
  for (auto& line : formula_lines(b, trace.limit(), !opt.exact_terms)) {
    std::cout << "  " << line << "\n";
  }
  int rc = trace.terminated ? 0 : 1;
  DerivationVerdict v = check_derivation(b, trace);
  std::cout << render_derivation(opt, v);
  std::string expect = opt.expect.empty() ? "good,fair" : opt.expect;
  int ec = check_expectations(expect, v);
  return rc ? rc : ec;
}

int cmd_complete(const Options& opt, bool check_trace) {
  if (opt.mechanism.empty()) throw CanonError("complete needs --mechanism");
  if (is_abstract(opt)) {
    if (opt.mechanism == "ground") {
      throw CanonError("ground completion runs on equational presentations only");
    }
    auto prob = load_abstract(opt);
    Trace t = run_completion(*prob.system, prob.presentation,
                             mechanism_from_string(opt.mechanism), opt.max_steps);
    if (!check_trace) {
      if (!opt.trace_path.empty()) {
        std::ofstream out(opt.trace_path);
        out << dump_trace(t, [&](int32_t f) { return prob.system->show_formula(f); });
      }
      std::cout << "steps: " << t.steps.size() << "\nfinal basis:\n";
      for (auto& line : formula_lines(*prob.system, t.limit(), true)) {
        std::cout << "  " << line << "\n";
      }
      return t.terminated ? 0 : 1;
    }
    return run_and_report(opt, *prob.system, t);
  }
  auto prob = load_equational(opt);
  Trace t;
  if (opt.mechanism == "ground") {
    t = ground_completion(prob.backend->formulas(), prob.presentation,
                          prob.backend->ordering().config().term_order,
                          ground_policy_from_string(opt.policy), opt.max_steps);
  } else {
    t = run_completion(*prob.backend, prob.presentation,
                       mechanism_from_string(opt.mechanism), opt.max_steps);
  }
  if (!check_trace) {
    if (!opt.trace_path.empty()) {
      std::ofstream out(opt.trace_path);
      out << dump_trace(
          t, [&](int32_t f) { return prob.backend->show_formula(f, !opt.exact_terms); });
    }
    std::cout << "steps: " << t.steps.size() << "\nfinal basis:\n";
    for (auto& line : formula_lines(*prob.backend, t.limit(), !opt.exact_terms)) {
      std::cout << "  " << line << "\n";
    }
    return t.terminated ? 0 : 1;
  }
  return run_and_report(opt, *prob.backend, t);
}

int cmd_check_trace(const Options& opt) {
  if (opt.trace_path.empty()) throw CanonError("check-trace needs --trace");
  std::string text = slurp(opt.trace_path);
  if (is_abstract(opt)) {
    auto prob = load_abstract(opt);
    Trace t = parse_trace(text, [&](const std::string& s) {
      return prob.system->parse_formula(s);
    });
    DerivationVerdict v = check_derivation(*prob.system, t);
    std::cout << render_derivation(opt, v);
    return check_expectations(opt.expect.empty() ? "good,fair" : opt.expect, v);
  }
  auto prob = load_equational(opt);
  Trace t = parse_trace(
      text, [&](const std::string& s) { return prob.backend->parse_formula(s); });
  DerivationVerdict v = check_derivation(*prob.backend, t);
  std::cout << render_derivation(opt, v);
  return check_expectations(opt.expect.empty() ? "good,fair" : opt.expect, v);
}

int cmd_oracle(const Options& opt) {
  if (is_abstract(opt)) {
    auto prob = load_abstract(opt);
    auto pf = prob.system->proofs_from(prob.presentation);
    for (auto p : pf) {
      std::cout << prob.system->show_proof(p) << " : "
                << prob.system->show_formula(prob.system->conclusion(p)) << "\n";
    }
    std::cout << "total: " << pf.size() << "\n";
    return 0;
  }
  auto prob = load_equational(opt);
  std::optional<FormulaId> filter;
  if (!opt.query.empty()) filter = prob.backend->parse_formula(opt.query);
  auto all = enumerate_proofs(prob.backend->proofs(), prob.presentation,
                              prob.backend->bounds());
  size_t shown = 0;
  for (ProofId p : all) {
    if (filter && prob.backend->conclusion(p) != *filter) continue;
    std::cout << "depth " << prob.backend->proofs().depth(p) << "  "
              << prob.backend->show_proof(p, !opt.exact_terms) << " : "
              << prob.backend->show_formula(prob.backend->conclusion(p), !opt.exact_terms)
              << "\n";
    ++shown;
  }
  std::cout << "total: " << shown << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"canonical-inference engine: canonical bases, saturation verdicts and "
               "completion for ground equational presentations and finite abstract "
               "proof systems"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* cmd, bool needs_input = true) {
    auto* o = cmd->add_option("--input,-i", opt.input, "presentation (.eqs) or system (.sys) file");
    if (needs_input) o->required();
    cmd->add_option("--backend", opt.backend, "equational|abstract|auto")
        ->check(CLI::IsMember({"equational", "abstract", "auto"}));
    cmd->add_option("--ordering", opt.ordering, "preset name or ordering config path");
    cmd->add_option("--term-order", opt.term_order_chain,
                    "descending symbol chain, e.g. 's > a > b > c'");
    cmd->add_option("--max-term-size", opt.max_term_size, "term universe bound (node count)");
    cmd->add_option("--max-proof-depth", opt.max_proof_depth, "proof depth bound");
    cmd->add_option("--presentation", opt.presentation_csv,
                    "comma-separated atoms (abstract systems)");
    cmd->add_option("--format", opt.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--output,-o", opt.output, "write the main result here instead of stdout");
    cmd->add_flag("--exact-terms", opt.exact_terms, "print s(s(0)) instead of numerals");
    cmd->add_option("--seed", opt.seed, "seed for sampled checks (default 0)");
  };

  auto* validate = app.add_subcommand("validate", "check the structural postulates");
  add_common(validate);

  auto* theory = app.add_subcommand("theory", "decide membership in the theory");
  add_common(theory);
  theory->add_option("--query,-q", opt.query, "formula, e.g. 's^6(0) = 0'")->required();

  auto* sharp_cmd = app.add_subcommand("sharp", "print the canonical basis");
  add_common(sharp_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "contracted/saturated/complete/canonical");
  add_common(classify_cmd);
  classify_cmd->add_option("--expect", opt.expect,
                           "comma list of flags that must be true (exit 1 otherwise)");

  auto* complete = app.add_subcommand("complete", "run a completion mechanism");
  add_common(complete);
  complete->add_option("--mechanism,-m", opt.mechanism, "critical|bulk|mass|ground")->required();
  complete->add_option("--trace", opt.trace_path, "write the derivation trace (JSON)");
  complete->add_option("--max-steps", opt.max_steps, "step limit (default 1000)");
  complete->add_option("--policy", opt.policy, "ground pick order: largest|smallest");
  bool check_flag = false;
  complete->add_flag("--check-trace", check_flag, "validate the produced derivation");
  complete->add_option("--expect", opt.expect, "trace flags that must be true");

  auto* check_trace = app.add_subcommand("check-trace", "validate a recorded derivation");
  add_common(check_trace);
  check_trace->add_option("--trace", opt.trace_path, "trace file (JSON)")->required();
  check_trace->add_option("--expect", opt.expect,
                          "trace flags that must be true (default good,fair)");

  auto* oracle = app.add_subcommand("oracle", "dump the bounded proof enumeration");
  add_common(oracle);
  oracle->add_option("--query,-q", opt.query, "only proofs of this conclusion");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(validate)) return cmd_validate(opt);
    if (app.got_subcommand(theory)) return cmd_theory(opt);
    if (app.got_subcommand(sharp_cmd)) return cmd_sharp(opt);
    if (app.got_subcommand(classify_cmd)) return cmd_classify(opt);
    if (app.got_subcommand(complete)) return cmd_complete(opt, check_flag);
    if (app.got_subcommand(check_trace)) return cmd_check_trace(opt);
    if (app.got_subcommand(oracle)) return cmd_oracle(opt);
  } catch (const CanonError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
