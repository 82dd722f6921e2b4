#include "motifspec/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "motifspec/catalog.hpp"
#include "motifspec/edge_list.hpp"
#include "motifspec/errors.hpp"
#include "motifspec/evolution.hpp"
#include "motifspec/families.hpp"
#include "motifspec/report_json.hpp"
#include "motifspec/verify.hpp"

namespace motifspec::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Everything the parser fills in; validated before any work starts.
struct RunConfig {
  std::string subcommand;
  std::optional<double> residual_tol;
  std::optional<double> group_tol;
  std::optional<double> rank_tol;

  // generate
  std::string family;
  std::size_t n = 0;
  std::size_t m = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::string output;
  std::string expected_output;

  // apply
  std::string operation;
  std::string graph;
  std::optional<Vertex> vertex;
  std::vector<Vertex> motif;
  std::size_t repeat = 1;
  std::string attachment;
  std::optional<Vertex> q;
  std::optional<Vertex> p_vertex;
  std::vector<std::string> f1;
  std::string sigma;
  std::string sigma_c = "all";
  std::vector<Vertex> anchors;
  std::vector<std::string> assignments;
  std::optional<double> candidate_lambda;
  std::vector<double> candidate_f;
  std::string claims_output;
  bool force = false;

  // spectrum / verify / demo-paper
  std::string format = "plain";
  std::string result;
  bool invariants = false;
  bool json_output = false;
  std::string only;
  std::size_t sweep = 0;
  std::uint64_t sweep_seed = 1;
  std::string catalog_output;

  Tolerances tolerances() const {
    Tolerances t;
    if (residual_tol) t.residual_per_vertex = *residual_tol;
    if (group_tol) t.group = *group_tol;
    if (rank_tol) t.rank = *rank_tol;
    return t;
  }
};

std::string fmt(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

template <typename T>
std::vector<T> parse_list(const std::string& text, const std::string& what) {
  std::vector<T> out;
  for (const auto& part : split(text, ',')) {
    std::istringstream in(part);
    T value{};
    if (!(in >> value) || !(in >> std::ws).eof()) {
      throw InvalidArgument(what + ": cannot parse \"" + part + "\" in \"" + text + "\"");
    }
    out.push_back(value);
  }
  if (out.empty()) throw InvalidArgument(what + ": empty list");
  return out;
}

void require_input(const std::string& path, const std::string& flag) {
  if (path.empty()) throw InvalidArgument(flag + " is required");
  if (!fs::is_regular_file(path)) throw InvalidArgument(flag + ": no such file " + path);
}

void require_output_dir(const std::string& path) {
  if (path.empty()) return;
  const auto dir = fs::path(path).parent_path();
  if (!dir.empty() && !fs::is_directory(dir)) {
    throw InvalidArgument("output directory does not exist: " + dir.string());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw InvalidArgument("cannot write " + path);
  f << text;
}

json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidArgument("cannot open " + path);
  try {
    return json::parse(f);
  } catch (const json::exception& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
}

void print_claim_record(std::ostream& out, const ClaimRecord& c) {
  out << (c.passed ? "PASS" : "FAIL") << "  claim " << provenance_tag(c.provenance)
      << " lambda=" << fmt(c.lambda, 12) << " mult>=" << c.multiplicity_at_least
      << " residual=" << fmt(c.residual_max, 3) << " rank=" << c.rank
      << " numeric=" << c.numeric_multiplicity << " oracle=" << c.oracle_multiplicity << "\n";
}

void print_report(std::ostream& out, const VerificationReport& r) {
  for (const auto& c : r.claims) print_claim_record(out, c);
  for (const auto& c : r.checks) {
    out << (c.passed ? "PASS" : "FAIL") << "  " << c.name << "  " << c.detail << "\n";
  }
}

// ---------------------------------------------------------------------------

int cmd_generate(const RunConfig& cfg, std::ostream& out) {
  const auto family = parse_family(cfg.family);
  if (!family) throw InvalidArgument("unknown family \"" + cfg.family + "\"");
  require_output_dir(cfg.output);
  require_output_dir(cfg.expected_output);

  FamilySpec spec;
  spec.family = *family;
  spec.n = cfg.n;
  spec.m = cfg.m;
  spec.edge_prob = cfg.p;
  spec.seed = cfg.seed;
  const auto generated = generate(spec);

  const std::string edges = to_edge_list_string(generated.graph);
  const std::string expected = expected_spectrum_to_json(generated.expected).dump(2) + "\n";
  if (cfg.output.empty()) {
    out << edges;
  } else {
    write_text(cfg.output, edges);
  }
  std::string expected_path = cfg.expected_output;
  if (expected_path.empty() && !cfg.output.empty()) expected_path = cfg.output + ".expected.json";
  if (!expected_path.empty()) write_text(expected_path, expected);
  return kExitOk;
}

std::vector<Vertex> parse_sigma_c(const std::string& text, const Graph& sigma) {
  if (text == "all") {
    std::vector<Vertex> all(sigma.order());
    for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
    return all;
  }
  return parse_list<Vertex>(text, "--sigma-c");
}

std::vector<Assignment> parse_assignments(const std::vector<std::string>& specs) {
  if (specs.empty()) throw InvalidArgument("attach-multi needs at least one --assign SUBSET:ANCHOR");
  std::vector<Assignment> out;
  for (const auto& s : specs) {
    const auto colon = s.rfind(':');
    if (colon == std::string::npos) throw InvalidArgument("--assign expects SUBSET:ANCHOR, got \"" + s + "\"");
    const auto anchor = parse_list<Vertex>(s.substr(colon + 1), "--assign anchor");
    if (anchor.size() != 1) throw InvalidArgument("--assign takes one anchor per subset");
    out.push_back({parse_list<Vertex>(s.substr(0, colon), "--assign subset"), anchor.front()});
  }
  return out;
}

template <typename T>
T required(const std::optional<T>& v, const char* flag) {
  if (!v) throw InvalidArgument(std::string(flag) + " is required");
  return *v;
}

int cmd_apply(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto& op = cfg.operation;
  require_input(cfg.graph, "--graph");
  if (op == "couple") require_input(cfg.attachment, "--attach");
  if (op == "attach" || op == "attach-multi") require_input(cfg.sigma, "--sigma");
  require_output_dir(cfg.output);
  require_output_dir(cfg.claims_output);

  const Graph host = read_edge_list_file(cfg.graph);
  const Tolerances tol = cfg.tolerances();
  json params = json::object();

  // Builds the result; `forced` relaxes the preconditions that --force may
  // override, keeping the construction but dropping unsupported claims.
  std::function<OperationResult(bool)> build;
  if (op == "double-vertex") {
    const Vertex v = required(cfg.vertex, "--vertex");
    params = {{"vertex", v}, {"repeat", cfg.repeat}};
    build = [&, v](bool forced) {
      return double_vertex_repeated(host, v, cfg.repeat, {forced, tol});
    };
  } else if (op == "double-motif") {
    if (cfg.motif.empty()) throw InvalidArgument("--motif is required");
    params = {{"motif", cfg.motif}, {"repeat", cfg.repeat}};
    build = [&](bool forced) {
      return double_motif_repeated(Motif(host, cfg.motif), cfg.repeat, {forced, tol});
    };
  } else if (op == "couple") {
    const Graph attachment = read_edge_list_file(cfg.attachment);
    const Vertex q = required(cfg.q, "--q");
    const Vertex p = required(cfg.p_vertex, "--p");
    std::vector<std::vector<double>> f1;
    if (cfg.f1.empty()) {
      f1 = eigenvalue_one_basis(attachment, tol.group);
    } else {
      for (const auto& s : cfg.f1) f1.push_back(parse_list<double>(s, "--f1"));
    }
    params = {{"attachment", cfg.attachment}, {"q", q}, {"p", p}, {"f1", f1}};
    build = [&, attachment, q, p, f1](bool forced) {
      const std::vector<std::vector<double>> none;
      return couple_via_neighbors(host, attachment, q, p, forced ? none : f1, {forced, tol});
    };
  } else if (op == "attach" || op == "attach-multi") {
    const Graph sigma = read_edge_list_file(cfg.sigma);
    std::vector<Assignment> assignments;
    if (op == "attach") {
      if (cfg.anchors.empty()) throw InvalidArgument("--anchor is required");
      const auto subset = parse_sigma_c(cfg.sigma_c, sigma);
      for (Vertex a : cfg.anchors) assignments.push_back({subset, a});
    } else {
      assignments = parse_assignments(cfg.assignments);
    }
    json assign = json::array();
    for (const auto& a : assignments) assign.push_back({{"subset", a.subset}, {"anchor", a.anchor}});
    params = {{"sigma", cfg.sigma}, {"assignments", assign}};
    if (cfg.candidate_lambda) {
      params["candidate"] = {{"lambda", *cfg.candidate_lambda}, {"f", cfg.candidate_f}};
    }
    build = [&, sigma, assignments](bool forced) {
      const OperationOptions opts{forced, tol};
      OperationResult r = attach_multi_subgraphs(host, sigma, assignments, opts);
      if (cfg.candidate_lambda) {
        // Validation mode: the caller's candidate replaces the computed claims.
        r.claims.clear();
        if (!forced) {
          r.claims.push_back(validate_attachment_candidate(host, sigma, assignments,
                                                           *cfg.candidate_lambda, cfg.candidate_f, opts));
        }
      }
      return r;
    };
  } else if (op == "duplicate-classes") {
    build = [&](bool forced) { return duplicate_class_claims(host, {forced, tol}); };
  } else {
    throw InvalidArgument("unknown operation \"" + op + "\"");
  }

  OperationResult result;
  try {
    result = build(false);
  } catch (const PreconditionError& e) {
    if (!cfg.force) throw;
    result = build(true);
    result.warnings.insert(result.warnings.begin(),
                           std::string("precondition overridden by --force: ") + e.what());
  }

  Report report = make_report(result, op, params);
  report.verification = verify_claims(result, tol);
  for (const auto& w : report.warnings) err << "warning: " << w << "\n";

  const std::string report_text = report_to_json(report).dump(2) + "\n";
  if (cfg.output.empty() && cfg.claims_output.empty()) {
    out << report_text;
  } else {
    if (!cfg.output.empty()) write_edge_list_file(cfg.output, result.graph);
    const std::string claims_path =
        cfg.claims_output.empty() ? cfg.output + ".claims.json" : cfg.claims_output;
    write_text(claims_path, report_text);
    out << result.graph.order() << " vertices, " << result.graph.edge_count() << " edges, "
        << result.claims.size() << " claims\n";
    for (const auto& c : result.claims) {
      out << "  lambda=" << fmt(c.lambda, 12);
      if (c.exact) out << " (" << c.exact->to_string() << ")";
      out << " x" << c.multiplicity_at_least << " " << provenance_tag(c.provenance) << "\n";
    }
  }
  if (!report.verification.passed()) {
    print_report(err, report.verification);
    return kExitVerificationFailed;
  }
  return kExitOk;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
  require_input(cfg.graph, "--graph");
  require_output_dir(cfg.output);
  const Graph g = read_edge_list_file(cfg.graph);
  const Spectrum s = laplacian_spectrum(g, cfg.tolerances().group);
  std::string text;
  if (cfg.format == "plain") {
    text = format_spectrum_plain(s) + "\n";
  } else if (cfg.format == "csv") {
    text = format_spectrum_csv(s);
  } else {
    text = spectrum_to_json(s).dump(2) + "\n";
  }
  if (cfg.output.empty()) {
    out << text;
  } else {
    write_text(cfg.output, text);
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.result.empty() && !(cfg.invariants && !cfg.graph.empty())) {
    throw InvalidArgument("verify needs --result FILE or --graph FILE --invariants");
  }
  if (!cfg.result.empty()) require_input(cfg.result, "--result");
  if (!cfg.graph.empty()) require_input(cfg.graph, "--graph");
  const Tolerances tol = cfg.tolerances();

  VerificationReport report;
  if (!cfg.result.empty()) {
    const Report stored = report_from_json(read_json(cfg.result));
    report.append(verify_claims(stored.graph, stored.claims, tol));
    if (cfg.invariants && cfg.graph.empty()) report.append(verify_graph_invariants(stored.graph, tol));
  }
  if (!cfg.graph.empty() && cfg.invariants) {
    report.append(verify_graph_invariants(read_edge_list_file(cfg.graph), tol));
  }
  if (cfg.json_output) {
    out << verification_to_json(report).dump(2) << "\n";
  } else {
    print_report(out, report);
  }
  return report.passed() ? kExitOk : kExitVerificationFailed;
}

bool matches_filter(const Fixture& f, const std::string& filter) {
  return filter.empty() || f.name.find(filter) != std::string::npos ||
         f.example.find(filter) != std::string::npos;
}

int cmd_demo_paper(const RunConfig& cfg, std::ostream& out) {
  require_output_dir(cfg.catalog_output);
  const Tolerances tol = cfg.tolerances();
  bool all_passed = true;
  json catalog = json::array();

  std::size_t width = 8;
  const auto fixtures = paper_example_catalog();
  for (const auto& f : fixtures) width = std::max(width, f.name.size());

  for (const auto& f : fixtures) {
    if (!matches_filter(f, cfg.only)) continue;
    const auto outcome = run_fixture(f, tol);
    all_passed = all_passed && outcome.passed;
    out << (outcome.passed ? "PASS  " : "FAIL  ") << f.name << std::string(width - f.name.size() + 2, ' ')
        << f.example << "\n";
    if (!outcome.passed) {
      std::ostringstream detail;
      print_report(detail, outcome.report);
      for (const auto& line : split(detail.str(), '\n')) {
        if (line.rfind("FAIL", 0) == 0) out << "      " << line << "\n";
      }
    }
    catalog.push_back({{"name", f.name},
                       {"example", f.example},
                       {"recipe", f.recipe},
                       {"passed", outcome.passed},
                       {"verification", verification_to_json(outcome.report)}});
  }

  if (cfg.sweep > 0) {
    const auto sweep = soundness_sweep(cfg.sweep, cfg.sweep_seed, tol);
    std::size_t claims = 0;
    for (const auto& t : sweep.trials) claims += t.claim_count;
    out << "sweep: " << sweep.passed_count() << "/" << sweep.trials.size() << " trials passed, " << claims
        << " claims checked (seed " << cfg.sweep_seed << ")\n";
    for (const auto& t : sweep.trials) {
      if (t.passed) continue;
      out << "  FAIL trial " << t.index << " " << t.operation << "\n";
    }
    all_passed = all_passed && sweep.passed();
  }

  if (!cfg.catalog_output.empty()) {
    write_text(cfg.catalog_output,
               json{{"schema_version", kSchemaVersion}, {"fixtures", catalog}}.dump(2) + "\n");
  }
  return all_passed ? kExitOk : kExitVerificationFailed;
}

}  // namespace

std::optional<double> parse_tolerance(const char* text) {
  if (text == nullptr || *text == '\0') return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(text, &end);
  if (end == text || *end != '\0' || !std::isfinite(v) || v <= 0.0) {
    throw InvalidArgument(std::string("tolerance must be a positive number, got \"") + text + "\"");
  }
  return v;
}

std::string format_spectrum_plain(const Spectrum& s) {
  std::string text;
  for (const auto& g : s.groups()) {
    const double v = std::fabs(g.value) <= s.group_tol ? 0.0 : g.value;
    if (!text.empty()) text += "; ";
    text += fmt(v, 10) + " ×" + std::to_string(g.multiplicity);
  }
  return text;
}

std::string format_spectrum_csv(const Spectrum& s) {
  std::string text;
  for (std::size_t k = 0; k < s.eigenvalues.size(); ++k) {
    text += std::to_string(k) + "," + fmt(s.eigenvalues[k], 17) + "\n";
  }
  return text;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Normalized-Laplacian spectra under graph evolution operations", "motifspec"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--tol", cfg.residual_tol, "Per-vertex residual tolerance (env " + std::string(kToleranceEnv) + ")")
      ->check(CLI::PositiveNumber);
  app.add_option("--group-tol", cfg.group_tol, "Eigenvalue grouping tolerance")->check(CLI::PositiveNumber);
  app.add_option("--rank-tol", cfg.rank_tol, "Rank-revealing cutoff")->check(CLI::PositiveNumber);

  auto* gen = app.add_subcommand("generate", "Write a named graph family and its expected spectrum");
  gen->add_option("--family", cfg.family, "complete|path|cycle|star|complete_bipartite|kite|star_of_triangles|erdos_renyi")
      ->required();
  gen->add_option("--n", cfg.n, "Main size parameter");
  gen->add_option("--m", cfg.m, "Second size parameter (kite, complete_bipartite)");
  gen->add_option("--p", cfg.p, "Edge probability (erdos_renyi)");
  gen->add_option("--seed", cfg.seed, "Random seed (erdos_renyi)");
  gen->add_option("-o,--output", cfg.output, "Edge-list output (default stdout)");
  gen->add_option("--expected", cfg.expected_output, "Expected-spectrum JSON output (default OUTPUT.expected.json)");

  auto* apply = app.add_subcommand("apply", "Apply an evolution operation and emit its eigenvalue claims");
  apply->add_option("operation", cfg.operation)
      ->required()
      ->check(CLI::IsMember({"double-vertex", "double-motif", "couple", "attach", "attach-multi",
                             "duplicate-classes"}));
  apply->add_option("--graph", cfg.graph, "Input (host) edge list")->required();
  apply->add_option("--vertex", cfg.vertex, "double-vertex: vertex to double");
  apply->add_option("--motif", cfg.motif, "double-motif: comma-separated motif vertices")->delimiter(',');
  apply->add_option("--repeat", cfg.repeat, "Number of copies")->check(CLI::PositiveNumber);
  apply->add_option("--attach", cfg.attachment, "couple: attachment edge list");
  apply->add_option("--q", cfg.q, "couple: host vertex joined to N(p)");
  apply->add_option("--p", cfg.p_vertex, "couple: attachment vertex whose neighbors are joined");
  apply->add_option("--f1", cfg.f1, "couple: eigenvalue-1 eigenfunction of the attachment, comma-separated (repeatable; default: computed basis)");
  apply->add_option("--sigma", cfg.sigma, "attach: edge list of the attached graph");
  apply->add_option("--sigma-c", cfg.sigma_c, "attach: 'all' or comma-separated connector vertices");
  apply->add_option("--anchor", cfg.anchors, "attach: comma-separated host anchors")->delimiter(',');
  apply->add_option("--assign", cfg.assignments, "attach-multi: SUBSET:ANCHOR, e.g. 0,2:1 (repeatable)");
  apply->add_option("--lambda", cfg.candidate_lambda, "attach: validate this candidate eigenvalue");
  apply->add_option("--f-sigma", cfg.candidate_f, "attach: candidate eigenfunction on sigma")->delimiter(',');
  apply->add_option("-o,--output", cfg.output, "Output edge list");
  apply->add_option("--claims", cfg.claims_output, "Report JSON output (default OUTPUT.claims.json)");
  apply->add_flag("--force", cfg.force, "Build despite a violated precondition, without unsupported claims");

  auto* spec = app.add_subcommand("spectrum", "Print the normalized-Laplacian spectrum");
  spec->add_option("--graph", cfg.graph, "Edge list")->required();
  spec->add_option("--format", cfg.format, "plain|csv|json")->check(CLI::IsMember({"plain", "csv", "json"}));
  spec->add_option("-o,--output", cfg.output, "Output file (default stdout)");

  auto* ver = app.add_subcommand("verify", "Re-verify a claims report or check spectral invariants");
  ver->add_option("--result", cfg.result, "Report JSON written by apply");
  ver->add_option("--graph", cfg.graph, "Edge list");
  ver->add_flag("--invariants", cfg.invariants, "Check the five spectral invariants");
  ver->add_flag("--json", cfg.json_output, "Print verification records as JSON");

  auto* demo = app.add_subcommand("demo-paper", "Replay every worked example and report pass/fail");
  demo->add_option("--only", cfg.only, "Run fixtures whose name or example contains this text");
  demo->add_option("--seed-sweep", cfg.sweep, "Append a randomized soundness sweep with this many trials");
  demo->add_option("--seed", cfg.sweep_seed, "Sweep seed");
  demo->add_option("--json", cfg.catalog_output, "Write fixture outcomes as JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadArguments;
  }

  try {
    if (!cfg.residual_tol) cfg.residual_tol = parse_tolerance(std::getenv(kToleranceEnv));
    cfg.subcommand = app.get_subcommands().front()->get_name();
    if (cfg.subcommand == "generate") return cmd_generate(cfg, out);
    if (cfg.subcommand == "apply") return cmd_apply(cfg, out, err);
    if (cfg.subcommand == "spectrum") return cmd_spectrum(cfg, out);
    if (cfg.subcommand == "verify") return cmd_verify(cfg, out);
    return cmd_demo_paper(cfg, out);
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadArguments;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadArguments;
  }
}

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace motifspec::cli
