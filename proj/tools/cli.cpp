#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "endorsim/endorsim.hpp"

namespace endorsim::cli {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

// Keys outside any [section] belong to the subcommand being run, so a config
// document can be a flat list of `flag = value` lines.
class FlatConfig : public CLI::ConfigINI {
 public:
  explicit FlatConfig(std::string section) : section_(std::move(section)) {}

  std::vector<CLI::ConfigItem> from_config(std::istream& in) const override {
    auto items = CLI::ConfigINI::from_config(in);
    if (section_.empty()) return items;
    for (auto& item : items) {
      if (item.parents.empty()) item.parents.push_back(section_);
    }
    return items;
  }

 private:
  std::string section_;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed, std::ostream& out) {
  if (seed) return *seed;
  std::random_device rd;
  const std::uint64_t s = (static_cast<std::uint64_t>(rd()) << 32) | rd();
  out << "seed " << s << '\n';
  return s;
}

// Every output is rendered in memory first; this only checks that the
// destinations are usable before the first file is moved into place.
void write_outputs(const std::vector<std::pair<fs::path, std::string>>& outputs) {
  std::set<fs::path> seen;
  for (const auto& [path, content] : outputs) {
    if (!seen.insert(fs::absolute(path).lexically_normal()).second) {
      throw ValidationError("output path '" + path.string() + "' given twice");
    }
    const fs::path dir = fs::absolute(path).parent_path();
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) throw IoError("output directory '" + dir.string() + "' does not exist");
    if (fs::is_directory(path, ec)) throw IoError("output path '" + path.string() + "' is a directory");
  }
  for (const auto& [path, content] : outputs) write_text_file_atomic(path, content);
}

struct GenerateArgs {
  std::string preset;
  std::vector<double> arrival_poly;
  std::vector<double> arrival_exp;
  std::optional<double> alpha, beta, lambda;
  std::optional<std::uint64_t> iterations;
  std::optional<std::size_t> max_nodes;
  std::optional<double> max_clock;
  std::optional<std::uint64_t> seed;
  std::string output;
  std::string events;
};

GrowthParams build_params(const GenerateArgs& a) {
  const bool have_preset = !a.preset.empty();
  GrowthParams p = have_preset ? preset(a.preset) : GrowthParams{};
  if (!a.arrival_poly.empty() && !a.arrival_exp.empty()) {
    throw ParameterError("give at most one of --arrival-poly and --arrival-exp");
  }
  if (!a.arrival_poly.empty()) {
    p.arrival = ArrivalFunction::polynomial(a.arrival_poly);
  } else if (!a.arrival_exp.empty()) {
    p.arrival = ArrivalFunction::exponential(a.arrival_exp.at(0), a.arrival_exp.at(1));
  } else if (!have_preset) {
    throw ParameterError("without --preset, --arrival-poly or --arrival-exp is required");
  }
  auto take = [&](const std::optional<double>& v, double& dst, const char* flag) {
    if (v) dst = *v;
    else if (!have_preset) throw ParameterError(std::string("without --preset, ") + flag + " is required");
  };
  take(a.alpha, p.alpha, "--alpha");
  take(a.beta, p.beta, "--beta");
  take(a.lambda, p.lambda, "--lambda");
  p.validate();
  return p;
}

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  const GrowthParams params = build_params(a);
  TerminationSpec term{a.max_clock, a.iterations, a.max_nodes};
  term.validate();
  const std::uint64_t seed = resolve_seed(a.seed, out);

  const auto t0 = Clock::now();
  const GrowthResult r = generate_base(params, term, seed);
  const double time1 = seconds_since(t0);

  std::vector<std::pair<fs::path, std::string>> outputs{{a.output, encode(r.graph)}};
  if (!a.events.empty()) outputs.emplace_back(a.events, event_log_csv(r.events));
  write_outputs(outputs);

  out << std::left << std::setw(12) << "Iterations" << std::setw(10) << "Nodes" << std::setw(10) << "Edges"
      << "Time 1 (s)\n";
  out << std::setw(12) << r.iterations << std::setw(10) << r.graph.vertex_count() << std::setw(10)
      << r.graph.edge_count() << std::fixed << std::setprecision(3) << time1 << '\n';
  out << std::defaultfloat << "stop " << to_string(r.stop) << " at day " << r.clock << '\n';
  return kSuccess;
}

struct EndorseArgs {
  std::string graph;
  std::string target;
  std::string weights;
  double diagonal_weight = kDefaultDiagonalWeight;
  double off_diagonal_weight = kDefaultOffDiagonalWeight;
  double threshold = kDefaultThreshold;
  std::uint64_t stall_limit = kDefaultStallLimit;
  std::uint64_t max_iterations = kDefaultMaxIterations;
  unsigned restarts = 0;
  std::string init = "greedy";
  std::optional<std::uint64_t> seed;
  std::string output;
  std::string trace;
};

int cmd_endorse(const EndorseArgs& a, std::ostream& out, std::ostream& err) {
  Dataset data = read_dataset(a.graph);
  const PatternMatrix target(read_matrix_csv(a.target));
  const std::size_t n = target.size();
  if (n == 0) throw DimensionError("target matrix is empty");
  for (const std::string& v : target.sanity_violations()) err << "warning: " << v << '\n';

  const WeightMatrix weights = a.weights.empty()
                                   ? WeightMatrix::diagonal_emphasis(n, a.diagonal_weight, a.off_diagonal_weight)
                                   : WeightMatrix(read_matrix_csv(a.weights));
  if (weights.size() != n) {
    throw DimensionError("weight matrix is " + std::to_string(weights.size()) + "x" +
                         std::to_string(weights.size()) + " but the target is " + std::to_string(n) + "x" +
                         std::to_string(n));
  }
  if (data.endorsements && data.endorsements->skill_count() != n) {
    throw ValidationError("input has " + std::to_string(data.endorsements->skill_count()) +
                          " skills but the target matrix has " + std::to_string(n));
  }
  if (!(a.threshold >= 0.0)) throw ValidationError("threshold must be nonnegative");
  if (a.stall_limit == 0) throw ValidationError("stall limit must be at least 1");

  SolveOptions opts;
  opts.search = {a.threshold, a.stall_limit, a.max_iterations};
  opts.restarts = a.restarts;
  if (a.init == "existing") {
    if (!data.endorsements) throw ValidationError("--init existing needs endorsements in the input file");
    if (a.restarts != 0) throw ValidationError("--init existing cannot be combined with --restarts");
  } else {
    opts.init = a.init == "random" ? InitKind::Random : InitKind::Greedy;
  }
  const std::uint64_t seed = resolve_seed(a.seed, out);

  const auto t0 = Clock::now();
  SearchResult result = [&] {
    if (a.init != "existing") return solve_endorsements(data.graph, target, weights, opts, seed);
    Rng rng = derived_rng(seed, 0);
    return local_search(target, weights, std::move(*data.endorsements), opts.search, rng);
  }();
  const double time2 = seconds_since(t0);

  const fs::path trace_path = a.trace.empty() ? fs::path(a.output).parent_path() / "trace.csv" : fs::path(a.trace);
  write_outputs({{a.output, encode(*data.graph, &result.endorsements)}, {trace_path, trace_to_csv(result.trace)}});

  out << std::left << std::setw(8) << "Skills" << std::setw(14) << "delta" << std::setw(12) << "Iterations"
      << std::setw(10) << "Arcs" << "Time 2 (s)\n";
  out << std::setw(8) << n << std::setw(14) << result.delta << std::setw(12) << result.iterations << std::setw(10)
      << result.endorsements.total_arcs() << std::fixed << std::setprecision(3) << time2 << '\n';
  out << std::defaultfloat << "status " << to_string(result.trace.status);
  if (a.restarts > 0) out << " (run " << result.run + 1 << " of at most " << a.restarts + 1 << ")";
  out << '\n';
  return result.trace.status == SearchStatus::ThresholdReached ? kSuccess : kStalled;
}

struct SampleArgs {
  std::string input;
  std::size_t size = 0;
  std::optional<Vertex> seed_vertex;
  std::optional<std::uint64_t> seed;
  std::string output;
  std::string pattern;
  std::string ids;
};

int cmd_sample(const SampleArgs& a, std::ostream& out) {
  const Dataset data = read_dataset(a.input);
  if (!a.pattern.empty() && !data.endorsements) {
    throw ValidationError("--pattern needs endorsements in the input file");
  }
  SampleSpec spec;
  spec.seed_vertex = a.seed_vertex;
  spec.target_size = a.size;
  spec.seed = resolve_seed(a.seed, out);
  const Sample s = bfs_sample(*data.graph, data.endorsements ? &*data.endorsements : nullptr, spec);

  std::vector<std::pair<fs::path, std::string>> outputs{
      {a.output, encode(*s.graph, s.endorsements ? &*s.endorsements : nullptr)}};
  if (!a.pattern.empty()) outputs.emplace_back(a.pattern, matrix_to_csv(estimate_pattern(s).matrix()));
  if (!a.ids.empty()) {
    std::string text;
    for (Vertex v : s.original_ids) text += std::to_string(v) + '\n';
    outputs.emplace_back(a.ids, std::move(text));
  }
  write_outputs(outputs);

  out << "sampled " << s.graph->vertex_count() << " of " << data.graph->vertex_count() << " vertices, "
      << s.graph->edge_count() << " edges";
  if (s.endorsements) out << ", " << s.endorsements->total_arcs() << " arcs";
  out << '\n';
  if (s.graph->vertex_count() < a.size) out << "seed component exhausted before the requested size\n";
  return kSuccess;
}

struct AnalyzeArgs {
  std::string input;
  std::string events;
  std::size_t checkpoints = 4;
  std::string trace;
  std::string preset;
  std::size_t k_min = kDefaultKMin;
  bool no_diameter = false;
  std::string output;
  std::string densification;
};

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
  const Dataset data = read_dataset(a.input);
  if (!a.densification.empty() && a.events.empty()) throw ValidationError("--densification needs --events");
  if (a.checkpoints == 0) throw ValidationError("checkpoints must be at least 1");
  const Graph& g = *data.graph;

  nlohmann::ordered_json report;
  report["nodes"] = g.vertex_count();
  report["edges"] = g.edge_count();
  report["average_degree"] =
      g.vertex_count() == 0 ? 0.0 : 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.vertex_count());

  if (!a.no_diameter) {
    try {
      report["diameter"] = diameter(g);
    } catch (const ValidationError& e) {
      report["diameter"] = nullptr;
      report["diameter_error"] = e.what();
    }
  }

  nlohmann::ordered_json fit;
  fit["k_min"] = a.k_min;
  try {
    fit["exponent"] = fit_power_law(degree_sequence(g), a.k_min);
  } catch (const ValidationError& e) {
    fit["exponent"] = nullptr;
    fit["error"] = e.what();
  }
  report["power_law"] = fit;
  if (!a.preset.empty()) report["theoretical_exponent"] = theoretical_exponent(preset(a.preset));

  if (data.endorsements) {
    const PatternMatrix m = compute_pattern_matrix(*data.endorsements);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j));
      rows.push_back(row);
    }
    report["pattern_matrix"] = rows;
  }

  if (!a.trace.empty()) {
    const ConvergenceTrace trace = parse_trace_csv(read_text_file(a.trace));
    nlohmann::ordered_json conv;
    conv["points"] = trace.points.size();
    if (!trace.points.empty()) {
      conv["final_iteration"] = trace.points.back().iteration;
      conv["final_delta"] = trace.points.back().delta;
    }
    try {
      const ExponentialFit e = fit_exponential(trace);
      conv["a"] = e.a;
      conv["b"] = e.b;
      conv["r2"] = e.r2 ? nlohmann::ordered_json(*e.r2) : nlohmann::ordered_json(nullptr);
    } catch (const ValidationError& e) {
      conv["error"] = e.what();
    }
    report["convergence"] = conv;
  }

  std::string dens_csv;
  if (!a.events.empty()) {
    const std::vector<Event> events = parse_event_log_csv(read_text_file(a.events));
    std::uint64_t total = 0;
    for (const Event& e : events) total += e.kind == EventKind::Wake || e.kind == EventKind::Expire;
    const auto rows = densification_report(events, even_checkpoints(total, a.checkpoints), !a.no_diameter);
    nlohmann::ordered_json table = nlohmann::ordered_json::array();
    for (const DensificationRow& r : rows) {
      table.push_back({{"iteration", r.iteration},
                       {"t", r.time},
                       {"nodes", r.nodes},
                       {"edges", r.edges},
                       {"average_degree", r.average_degree},
                       {"diameter", r.diameter ? nlohmann::ordered_json(*r.diameter) : nlohmann::ordered_json(nullptr)}});
    }
    report["densification"] = table;
    dens_csv = densification_csv(rows);
  }

  std::vector<std::pair<fs::path, std::string>> outputs;
  if (!a.output.empty()) outputs.emplace_back(a.output, report.dump(2) + '\n');
  if (!a.densification.empty()) outputs.emplace_back(a.densification, dens_csv);
  write_outputs(outputs);

  for (const auto& [key, value] : report.items()) {
    if (key == "densification") continue;
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
  if (!dens_csv.empty()) out << "densification:\n" << dens_csv;
  return kSuccess;
}

struct RipArgs {
  std::string input;
  std::string output;
  std::string matrix;
};

std::vector<std::vector<std::int64_t>> integer_rows(const SquareMatrix& m) {
  std::vector<std::vector<std::int64_t>> rows(m.size(), std::vector<std::int64_t>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      const double v = m(i, j);
      if (!(std::abs(v) < 9.0e15) || std::floor(v) != v) {
        throw ValidationError("entry (" + std::to_string(i) + ", " + std::to_string(j) + ") is not an integer");
      }
      rows[i][j] = static_cast<std::int64_t>(v);
    }
  }
  return rows;
}

int cmd_rip2rep(const RipArgs& a, std::ostream& out) {
  const RipInstance p(integer_rows(read_matrix_csv(a.input)));
  const RepInstance rep = rip_to_rep(p);
  write_outputs({{a.output, encode(*rep.graph)}, {a.matrix, matrix_to_csv(rep.target.matrix())}});

  out << "complete graph on " << rep.graph->vertex_count() << " vertices, " << rep.graph->edge_count()
      << " edges\n";
  for (const auto& row : rep.exact) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      out << (j ? " " : "") << row[j].num << '/' << row[j].den;
    }
    out << '\n';
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Synthetic social networks with skill endorsements", "endorsim"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key = value file; command-line flags override it");
  app.option_defaults()->always_capture_default();

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Grow a base network");
  g->fallthrough();
  g->add_option("--preset", gen.preset, "Parameter set")
      ->check(CLI::IsMember({"flickr", "delicious", "answers", "linkedin"}));
  g->add_option("--arrival-poly", gen.arrival_poly, "A(t) polynomial coefficients, highest degree first")
      ->delimiter(',');
  g->add_option("--arrival-exp", gen.arrival_exp, "A(t) = scale*exp(rate*t) as scale,rate")
      ->delimiter(',')
      ->expected(2);
  g->add_option("--alpha", gen.alpha);
  g->add_option("--beta", gen.beta);
  g->add_option("--lambda", gen.lambda);
  g->add_option("--iterations", gen.iterations, "Stop after this many main-cycle iterations");
  g->add_option("--max-nodes", gen.max_nodes, "Stop once the graph has at least this many nodes");
  g->add_option("--max-clock", gen.max_clock, "Stop before simulated time passes this many days");
  g->add_option("--seed", gen.seed);
  g->add_option("-o,--output", gen.output, "Graph file")->required();
  g->add_option("--events", gen.events, "Event log CSV");

  EndorseArgs end;
  auto* e = app.add_subcommand("endorse", "Fit endorsement digraphs to a target pattern matrix");
  e->fallthrough();
  e->add_option("--graph", end.graph, "Input graph file")->required();
  e->add_option("--target", end.target, "Target pattern matrix CSV")->required();
  e->add_option("--weights", end.weights, "Weight matrix CSV (overrides the two weight flags)");
  e->add_option("--diagonal-weight", end.diagonal_weight)->check(CLI::PositiveNumber);
  e->add_option("--off-diagonal-weight", end.off_diagonal_weight)->check(CLI::PositiveNumber);
  e->add_option("--threshold", end.threshold);
  e->add_option("--stall-limit", end.stall_limit);
  e->add_option("--max-iterations", end.max_iterations);
  e->add_option("--restarts", end.restarts);
  e->add_option("--init", end.init)->check(CLI::IsMember({"greedy", "random", "existing"}));
  e->add_option("--seed", end.seed);
  e->add_option("-o,--output", end.output, "Graph + endorsements file")->required();
  e->add_option("--trace", end.trace, "Trace CSV (default: trace.csv next to the output)");

  SampleArgs smp;
  auto* s = app.add_subcommand("sample", "Breadth-first sample of a graph");
  s->fallthrough();
  s->add_option("-i,--input", smp.input)->required();
  s->add_option("--size", smp.size, "Target number of vertices")->required();
  s->add_option("--seed-vertex", smp.seed_vertex, "Start vertex (default: uniform)");
  s->add_option("--seed", smp.seed);
  s->add_option("-o,--output", smp.output)->required();
  s->add_option("--pattern", smp.pattern, "Write the sample's pattern matrix CSV");
  s->add_option("--ids", smp.ids, "Write original vertex ids, one per line");

  AnalyzeArgs an;
  auto* z = app.add_subcommand("analyze", "Degree, diameter, convergence and densification statistics");
  z->fallthrough();
  z->add_option("-i,--input", an.input)->required();
  z->add_option("--events", an.events, "Event log CSV from generate");
  z->add_option("--checkpoints", an.checkpoints, "Evenly spaced densification checkpoints");
  z->add_option("--trace", an.trace, "Trace CSV from endorse");
  z->add_option("--preset", an.preset, "Report the predicted degree exponent of this parameter set")
      ->check(CLI::IsMember({"flickr", "delicious", "answers", "linkedin"}));
  z->add_option("--k-min", an.k_min);
  z->add_flag("--no-diameter", an.no_diameter, "Skip all-pairs diameters (slow on large graphs)");
  z->add_option("-o,--output", an.output, "JSON report");
  z->add_option("--densification", an.densification, "Densification CSV");

  RipArgs rip;
  auto* r = app.add_subcommand("rip2rep", "Endorsement-pattern instance from an intersection-pattern matrix");
  r->fallthrough();
  r->add_option("-i,--input", rip.input, "Symmetric integer matrix CSV")->required();
  r->add_option("-o,--output", rip.output, "Complete-graph file")->required();
  r->add_option("--matrix", rip.matrix, "Target pattern matrix CSV")->required();

  std::string section;
  for (const std::string& arg : args) {
    if (arg == "generate" || arg == "endorse" || arg == "sample" || arg == "analyze" || arg == "rip2rep") {
      section = arg;
      break;
    }
  }
  app.config_formatter(std::make_shared<FlatConfig>(section));

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kSuccess : kValidation;
  }

  try {
    if (*g) return cmd_generate(gen, out);
    if (*e) return cmd_endorse(end, out, err);
    if (*s) return cmd_sample(smp, out);
    if (*z) return cmd_analyze(an, out);
    if (*r) return cmd_rip2rep(rip, out);
  } catch (const IoError& ex) {
    err << "error: " << ex.what() << '\n';
    return kIo;
  } catch (const ValidationError& ex) {
    err << "error: " << ex.what() << '\n';
    return kValidation;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kFailure;
  }
  return kFailure;
}

}  // namespace endorsim::cli
