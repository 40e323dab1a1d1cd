// Command-line surface: parse or generate objects, run the verifiers, emit
// text or JSON reports. Exit codes: 0 all checks pass, 1 an identity failed,
// 2 malformed input or bad parameters.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "latticemill/errors.hpp"
#include "latticemill/graph.hpp"
#include "latticemill/hilbert.hpp"
#include "latticemill/identities.hpp"
#include "latticemill/io.hpp"
#include "latticemill/monomial.hpp"
#include "latticemill/poset.hpp"
#include "latticemill/simplicial.hpp"

namespace lm = latticemill;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;

struct InputOptions {
  std::string poset_path;
  std::string complex_path;
  std::string generator;
  int p = -1;
  int n = -1;
  int d = -1;
  std::uint64_t seed = 1;
};

void add_input_flags(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--poset", in.poset_path, "poset text file");
  cmd->add_option("--complex", in.complex_path, "complex text file");
  cmd->add_option("--gen", in.generator,
                  "generator: chain | antichain | random-poset | simplex-boundary | "
                  "cross-polytope | cyclic-polytope");
  cmd->add_option("-p", in.p, "poset size for poset generators");
  cmd->add_option("-n", in.n, "vertex count for cyclic-polytope");
  cmd->add_option("-d", in.d, "dimension for polytope generators");
  cmd->add_option("--seed", in.seed, "seed for random-poset");
}

int count_sources(const InputOptions& in) {
  return (in.poset_path.empty() ? 0 : 1) + (in.complex_path.empty() ? 0 : 1) +
         (in.generator.empty() ? 0 : 1);
}

bool is_poset_generator(const std::string& g) {
  return g == "chain" || g == "antichain" || g == "random-poset";
}

bool is_complex_generator(const std::string& g) {
  return g == "simplex-boundary" || g == "cross-polytope" || g == "cyclic-polytope";
}

int require_param(int value, const std::string& flag, const std::string& generator) {
  if (value < 0)
    throw lm::ParseError("generator " + generator + " needs " + flag);
  return value;
}

lm::Poset make_poset(const InputOptions& in, std::string& label) {
  if (!in.poset_path.empty()) {
    label = "file:" + in.poset_path;
    return lm::parse_poset_file(in.poset_path);
  }
  if (in.generator == "chain") {
    int p = require_param(in.p, "-p", in.generator);
    label = "chain p=" + std::to_string(p);
    return lm::chain_poset(p);
  }
  if (in.generator == "antichain") {
    int p = require_param(in.p, "-p", in.generator);
    label = "antichain p=" + std::to_string(p);
    return lm::antichain_poset(p);
  }
  if (in.generator == "random-poset") {
    int p = require_param(in.p, "-p", in.generator);
    label = "random-poset p=" + std::to_string(p) + " seed=" + std::to_string(in.seed);
    return lm::random_poset(p, in.seed);
  }
  throw lm::ParseError("a poset input is required (--poset or a poset generator)");
}

lm::SimplicialComplex make_complex(const InputOptions& in, std::string& label,
                                   bool& generated) {
  generated = true;
  if (!in.complex_path.empty()) {
    generated = false;
    label = "file:" + in.complex_path;
    return lm::parse_complex_file(in.complex_path);
  }
  if (in.generator == "simplex-boundary") {
    int d = require_param(in.d, "-d", in.generator);
    label = "simplex-boundary d=" + std::to_string(d);
    return lm::boundary_simplex(d);
  }
  if (in.generator == "cross-polytope") {
    int d = require_param(in.d, "-d", in.generator);
    label = "cross-polytope d=" + std::to_string(d);
    return lm::boundary_cross_polytope(d);
  }
  if (in.generator == "cyclic-polytope") {
    int n = require_param(in.n, "-n", in.generator);
    int d = require_param(in.d, "-d", in.generator);
    label = "cyclic-polytope n=" + std::to_string(n) + " d=" + std::to_string(d);
    return lm::boundary_cyclic_polytope(n, d);
  }
  throw lm::ParseError("a complex input is required (--complex or a polytope generator)");
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw lm::ParseError("cannot write " + out_path);
  out << text;
}

int finish_reports(const std::vector<lm::VerificationReport>& reports, bool json,
                   const std::string& out_path, const lm::Json* envelope_extra = nullptr) {
  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.pass;

  if (json) {
    lm::Json doc;
    if (envelope_extra) doc = *envelope_extra;
    lm::Json arr = lm::Json::array();
    for (const auto& r : reports) arr.push_back(lm::report_to_json(r));
    doc["reports"] = std::move(arr);
    doc["pass"] = all_pass;
    emit(doc.dump(2) + "\n", out_path);
  } else {
    std::ostringstream text;
    for (const auto& r : reports) text << lm::report_to_text(r);
    text << (all_pass ? "all " : "FAILURES among ") << reports.size() << " report(s)\n";
    emit(text.str(), out_path);
  }
  return all_pass ? kExitPass : kExitViolation;
}

// --- verify ---------------------------------------------------------------

int run_verify(const std::string& name, const InputOptions& in, bool json,
               const std::string& out_path) {
  if (name == "antichain-example") {
    if (in.p < 1) throw lm::ParseError("verify antichain-example needs -p >= 1");
    return finish_reports({lm::verify_antichain_example(in.p)}, json, out_path);
  }

  if (count_sources(in) != 1)
    throw lm::ParseError("exactly one input source is required (file xor generator)");

  std::vector<lm::VerificationReport> reports;
  const bool wants_poset = name == "theorem1" || name == "gamma-dual";
  const bool wants_complex = name == "dehn-sommerville" || name == "flag-corollary";
  const bool poset_input =
      !in.poset_path.empty() || (!in.generator.empty() && is_poset_generator(in.generator));

  if (wants_poset || (name == "all" && poset_input)) {
    std::string label;
    lm::Poset P = make_poset(in, label);
    if (name == "theorem1" || name == "all")
      reports.push_back(lm::verify_theorem1(P, label));
    if (name == "gamma-dual" || name == "all")
      reports.push_back(lm::verify_gamma_dual_is_clique_complex(P, label));
  } else if (wants_complex || name == "all") {
    std::string label;
    bool generated = false;
    lm::SimplicialComplex c = make_complex(in, label, generated);
    if (!generated) label += " [unverified provenance]";
    if (name == "dehn-sommerville" || name == "all")
      reports.push_back(lm::verify_dehn_sommerville(c, label));
    if (name == "flag-corollary" || (name == "all" && lm::is_flag(c)))
      reports.push_back(lm::verify_flag_corollary(c, label));
  } else {
    throw lm::ParseError("unknown verifier: " + name);
  }
  return finish_reports(reports, json, out_path);
}

// --- hilbert ----------------------------------------------------------------

struct HilbertMethods {
  std::vector<std::string> names;
  std::vector<std::function<lm::BigInt(long long)>> eval;
};

HilbertMethods hilbert_methods_for_poset(const lm::Poset& P, const std::string& method) {
  const int p = P.size();
  lm::BooleanCensus census = lm::boolean_interval_counts(lm::order_ideals(P), P);
  lm::MonomialIdeal H = lm::hibi_ideal(P);
  lm::BettiTable T = lm::hibi_betti_table(P, census);
  lm::FVector fv = lm::f_vector(lm::clique_complex(lm::build_GP(P)));
  const int d = fv.dimension_plus_one();

  HilbertMethods m;
  auto want = [&](const std::string& name) { return method == "all" || method == name; };
  if (want("oracle")) {
    m.names.push_back("oracle");
    m.eval.push_back([H](long long t) { return lm::standard_monomial_count(H, t); });
  }
  if (want("closed-form")) {
    m.names.push_back("closed-form");
    m.eval.push_back([p, census](long long t) { return lm::hilbert_hibi_closed_form(p, census, t); });
  }
  if (want("resolution")) {
    m.names.push_back("resolution");
    m.eval.push_back([T](long long t) { return lm::hilbert_from_betti(T, t); });
  }
  if (want("dual-formula")) {
    m.names.push_back("dual-formula");
    m.eval.push_back(
        [p, d, fv](long long t) { return lm::hilbert_dual_closed_form(2 * p, d, fv, t); });
  }
  return m;
}

HilbertMethods hilbert_methods_for_complex(const lm::SimplicialComplex& c,
                                           const std::string& method) {
  if (method == "closed-form")
    throw lm::ParseError("method closed-form applies to poset inputs only");

  const int n = c.ground_size();
  lm::FVector fv = lm::f_vector(c);
  const int d = fv.dimension_plus_one();
  lm::MonomialIdeal I = lm::stanley_reisner_ideal(lm::alexander_dual(c));
  lm::BettiTable T = lm::dual_boundary_betti_table(fv, n);

  HilbertMethods m;
  auto want = [&](const std::string& name) { return method == "all" || method == name; };
  if (want("oracle")) {
    m.names.push_back("oracle");
    m.eval.push_back([I](long long t) { return lm::standard_monomial_count(I, t); });
  }
  if (want("resolution")) {
    m.names.push_back("resolution");
    m.eval.push_back([T](long long t) { return lm::hilbert_from_betti(T, t); });
  }
  if (want("dual-formula")) {
    m.names.push_back("dual-formula");
    m.eval.push_back([n, d, fv](long long t) { return lm::hilbert_dual_closed_form(n, d, fv, t); });
  }
  return m;
}

int run_hilbert(const InputOptions& in, long long t_max, const std::string& method, bool json,
                const std::string& out_path) {
  if (t_max < 0) throw lm::ParseError("--t-max must be nonnegative");
  static const std::vector<std::string> known = {"oracle", "closed-form", "resolution",
                                                 "dual-formula", "all"};
  if (std::find(known.begin(), known.end(), method) == known.end())
    throw lm::ParseError("unknown method: " + method);
  if (count_sources(in) != 1)
    throw lm::ParseError("exactly one input source is required (file xor generator)");

  std::string label;
  HilbertMethods methods;
  const bool poset_input =
      !in.poset_path.empty() || (!in.generator.empty() && is_poset_generator(in.generator));
  if (poset_input) {
    methods = hilbert_methods_for_poset(make_poset(in, label), method);
  } else {
    bool generated = false;
    methods = hilbert_methods_for_complex(make_complex(in, label, generated), method);
  }

  // Evaluate every method at every degree; `all` also demands agreement.
  std::vector<lm::HilbertSamples> table(methods.eval.size());
  bool agree = true;
  for (long long t = 0; t <= t_max; ++t)
    for (std::size_t i = 0; i < methods.eval.size(); ++i) {
      table[i].values.emplace_back(t, methods.eval[i](t));
      if (table[i].values.back().second != table[0].values.back().second) agree = false;
    }

  if (json) {
    lm::Json doc;
    doc["instance"] = label;
    doc["t-max"] = t_max;
    doc["methods"] = methods.names;
    lm::Json rows = lm::Json::array();
    for (long long t = 0; t <= t_max; ++t) {
      lm::Json row;
      row["t"] = t;
      for (std::size_t i = 0; i < methods.names.size(); ++i)
        row[methods.names[i]] = table[i].values[static_cast<std::size_t>(t)].second.str();
      rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    doc["agree"] = agree;
    emit(doc.dump(2) + "\n", out_path);
  } else {
    std::ostringstream text;
    text << "# " << label << "\n";
    text << "t";
    for (const auto& name : methods.names) text << "\t" << name;
    text << "\n";
    for (long long t = 0; t <= t_max; ++t) {
      text << t;
      for (std::size_t i = 0; i < methods.names.size(); ++i)
        text << "\t" << table[i].values[static_cast<std::size_t>(t)].second.str();
      text << "\n";
    }
    if (method == "all") text << (agree ? "# methods agree\n" : "# METHOD DISAGREEMENT\n");
    emit(text.str(), out_path);
  }
  return method == "all" && !agree ? kExitViolation : kExitPass;
}

// --- gen --------------------------------------------------------------------

int run_gen(const std::string& name, const InputOptions& in, const std::string& out_path) {
  InputOptions gen = in;
  gen.generator = name;
  std::ostringstream text;
  if (is_poset_generator(name)) {
    std::string label;
    lm::write_poset(text, make_poset(gen, label));
  } else if (is_complex_generator(name)) {
    std::string label;
    bool generated = false;
    lm::write_complex(text, make_complex(gen, label, generated));
  } else {
    throw lm::ParseError("unknown generator: " + name);
  }
  emit(text.str(), out_path);
  return kExitPass;
}

// --- corpus -----------------------------------------------------------------

int run_corpus_cmd(const lm::CorpusSpec& spec, bool json, const std::string& out_path) {
  std::vector<lm::VerificationReport> reports = lm::run_corpus(spec);

  if (json) {
    lm::Json families;
    families["exhaustive-p-max"] = spec.exhaustive_p_max;
    families["random-p"] = spec.random_p;
    families["random-count"] = spec.random_count;
    families["seed"] = spec.seed;
    families["antichain-p-max"] = spec.antichain_p_max;
    families["simplex-d-max"] = spec.simplex_d_max;
    families["cross-d-max"] = spec.cross_d_max;
    families["cyclic-n-max"] = spec.cyclic_n_max;
    families["cyclic-d-max"] = spec.cyclic_d_max;
    lm::Json envelope;
    envelope["corpus"] = std::move(families);
    return finish_reports(reports, true, out_path, &envelope);
  }

  bool all_pass = true;
  std::ostringstream text;
  for (const auto& r : reports) {
    all_pass = all_pass && r.pass;
    text << (r.pass ? "PASS " : "FAIL ") << r.identity << " :: " << r.instance << "\n";
  }
  text << reports.size() << " report(s), " << (all_pass ? "all pass" : "with failures") << "\n";
  emit(text.str(), out_path);
  return all_pass ? kExitPass : kExitViolation;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics engine: order-ideal lattices, clique counts, "
               "Stanley-Reisner data and the identities connecting them"};
  app.require_subcommand(1);

  // verify
  std::string verify_name;
  InputOptions verify_in;
  bool verify_json = false;
  std::string verify_out;
  CLI::App* verify = app.add_subcommand("verify", "check identities on one instance");
  verify->add_option("name", verify_name,
                     "theorem1 | antichain-example | gamma-dual | dehn-sommerville | "
                     "flag-corollary | all")
      ->required();
  add_input_flags(verify, verify_in);
  verify->add_flag("--json", verify_json, "emit a JSON report");
  verify->add_option("--out", verify_out, "write output to a file");

  // hilbert
  InputOptions hilbert_in;
  long long t_max = -1;
  std::string method = "all";
  bool hilbert_json = false;
  std::string hilbert_out;
  CLI::App* hilbert = app.add_subcommand("hilbert", "tabulate Hilbert function routes");
  add_input_flags(hilbert, hilbert_in);
  hilbert->add_option("--t-max", t_max, "largest degree bound")->required();
  hilbert->add_option("--method", method, "oracle | closed-form | resolution | dual-formula | all");
  hilbert->add_flag("--json", hilbert_json, "emit JSON");
  hilbert->add_option("--out", hilbert_out, "write output to a file");

  // gen
  std::string gen_name;
  InputOptions gen_in;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen", "write a generated object in its text format");
  gen->add_option("name", gen_name,
                  "chain | antichain | random-poset | simplex-boundary | cross-polytope | "
                  "cyclic-polytope")
      ->required();
  add_input_flags(gen, gen_in);
  gen->add_option("--out", gen_out, "write output to a file");

  // corpus
  lm::CorpusSpec spec;
  bool corpus_json = false;
  std::string corpus_out;
  CLI::App* corpus = app.add_subcommand("corpus", "run the verifier families in bulk");
  corpus->add_option("--p-max", spec.exhaustive_p_max, "exhaustive poset family bound");
  corpus->add_option("--random-p", spec.random_p, "random poset size");
  corpus->add_option("--random-count", spec.random_count, "number of random posets");
  corpus->add_option("--seed", spec.seed, "base seed for the random family");
  corpus->add_option("--antichain-p-max", spec.antichain_p_max, "antichain family bound");
  corpus->add_option("--simplex-d-max", spec.simplex_d_max, "simplex boundary family bound");
  corpus->add_option("--cross-d-max", spec.cross_d_max, "cross-polytope family bound");
  corpus->add_option("--cyclic-n-max", spec.cyclic_n_max, "cyclic polytope vertex bound");
  corpus->add_option("--cyclic-d-max", spec.cyclic_d_max, "cyclic polytope dimension bound");
  corpus->add_flag("--json", corpus_json, "emit JSON");
  corpus->add_option("--out", corpus_out, "write output to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*verify) return run_verify(verify_name, verify_in, verify_json, verify_out);
    if (*hilbert) return run_hilbert(hilbert_in, t_max, method, hilbert_json, hilbert_out);
    if (*gen) return run_gen(gen_name, gen_in, gen_out);
    if (*corpus) return run_corpus_cmd(spec, corpus_json, corpus_out);
  } catch (const lm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
