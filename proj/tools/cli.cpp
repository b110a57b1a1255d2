#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "baltree/baltree.hpp"

namespace baltree::cli {

namespace {

using nlohmann::json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string output;
  std::string format = "text";
  std::string method;
  std::string problem = "median";
  double lambda = 0.5;
  std::vector<double> lambdas{0.0, 0.2, 0.5, 1.0};
  int cap = kDefaultOracleCap;
  int grid = 11;
  int n = 0;
  std::uint64_t seed = 1;
  std::vector<int> sizes;
  double length_min = 0.01;
  double length_max = 5.0;
  std::string weights = "fixed";
  std::string service = "fixed";
};

void check_format(const std::string& format) {
  if (format != "text" && format != "json" && format != "csv") {
    throw ConfigError("unknown format '" + format + "' (expected text, json or csv)");
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << content;
  f.flush();
  if (!f) throw IoError("failed writing '" + path + "'");
}

// Summary to `out`; machine output to --output if given, otherwise the
// requested non-text format replaces the summary on `out`.
void emit(const Options& o, std::ostream& out, const std::string& text,
          const json& machine, const std::string& csv) {
  check_format(o.format);
  auto render = [&](const std::string& format) {
    if (format == "json") return machine.dump(2) + "\n";
    if (format == "csv") return csv;
    return text;
  };
  if (o.output.empty()) {
    out << render(o.format);
    return;
  }
  out << text;
  write_file(o.output, render(o.format == "text" ? "json" : o.format));
}

WeightedTree read_input(const Options& o) {
  if (o.input.empty()) throw ParseError(0, "--input is required");
  return load_tree(o.input);
}

json outcome_json(const SolveOutcome& s, double lambda) {
  json j = {
      {"problem", to_string(s.problem)},
      {"method", s.method},
      {"lambda", lambda},
      {"deleted_edge", {{"index", s.deleted_edge}, {"u", s.edge_u}, {"v", s.edge_v}}},
      {"facilities", {{"fac1", s.fac1}, {"fac2", s.fac2}}},
      {"transport", s.transport},
      {"f5", s.f5},
      {"objective", s.objective},
  };
  if (!s.warning.empty()) j["warning"] = s.warning;
  return j;
}

std::string outcome_text(const SolveOutcome& s, double lambda) {
  const bool median = s.problem == Problem::median;
  std::ostringstream t;
  t << "balanced 2-" << to_string(s.problem) << " (" << s.method
    << "), lambda = " << format_number(lambda) << "\n"
    << "deleted edge: (" << s.edge_u << "," << s.edge_v << ")\n"
    << (median ? "medians: " : "facilities: ") << s.fac1 << " serves the side of "
    << s.edge_u << ", " << s.fac2 << " serves the side of " << s.edge_v << "\n"
    << "transport (" << (median ? "f1" : "f2") << "): " << format_number(s.transport)
    << "\n"
    << "f5: " << format_number(s.f5) << "\n"
    << "objective: " << format_number(s.objective) << "\n";
  return t.str();
}

std::string outcome_csv(const SolveOutcome& s, double lambda) {
  std::ostringstream c;
  c << "problem,method,lambda,transport,f5,objective,edge_u,edge_v,fac1,fac2\n"
    << to_string(s.problem) << ',' << s.method << ',' << format_number(lambda) << ','
    << format_number(s.transport) << ',' << format_number(s.f5) << ','
    << format_number(s.objective) << ',' << s.edge_u << ',' << s.edge_v << ','
    << s.fac1 << ',' << s.fac2 << '\n';
  return c.str();
}

int cmd_solve(const Options& o, Problem problem, const std::string& method,
              std::ostream& out, std::ostream& err) {
  check_format(o.format);
  const WeightedTree tree = read_input(o);
  const SolverConfig cfg{o.lambda, 1e-9};
  cfg.validate();
  const SolveOutcome s = solve_problem(cfg, tree, problem, method, o.cap);
  if (!s.warning.empty()) err << "warning: " << s.warning << "\n";
  emit(o, out, outcome_text(s, o.lambda), outcome_json(s, o.lambda),
       outcome_csv(s, o.lambda));
  return kOk;
}

json records_json(const std::vector<ExperimentRecord>& records) {
  json arr = json::array();
  for (const auto& r : records) {
    arr.push_back({{"test", r.test_id}, {"n", r.n}, {"seed", r.seed},
                   {"problem", to_string(r.problem)}, {"method", r.method},
                   {"lambda", r.lambda}, {"transport", r.transport}, {"f5", r.f5},
                   {"objective", r.objective}, {"edge_u", r.edge_u},
                   {"edge_v", r.edge_v}, {"fac1", r.fac1}, {"fac2", r.fac2},
                   {"runtime_ms", r.runtime_ms}});
  }
  return arr;
}

ValueDist value_mode(const std::string& mode, double fixed_value, const char* what) {
  if (mode == "fixed") return ValueDist::fixed(fixed_value);
  if (mode == "uniform") return ValueDist::uniform(0.0, 5.0);
  throw ConfigError(std::string("unknown ") + what + " mode '" + mode +
                    "' (expected fixed or uniform)");
}

GenSpec gen_spec(const Options& o) {
  GenSpec g;
  g.n = o.n;
  g.seed = o.seed;
  g.lengths = ValueDist::uniform(o.length_min, o.length_max);
  g.weights = value_mode(o.weights, 5.0, "weight");
  g.service = value_mode(o.service, 1.0, "service");
  return g;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  check_format(o.format);
  const Problem problem = parse_problem(o.problem);
  std::vector<ExperimentRecord> records;
  if (!o.input.empty()) {
    SweepOptions opt;
    opt.method = o.method;
    records = lambda_sweep(read_input(o), problem, o.lambdas, opt);
  } else {
    if (o.sizes.empty()) throw ConfigError("sweep needs --input or --sizes");
    BenchmarkSpec spec;
    spec.sizes = o.sizes;
    spec.lambdas = o.lambdas;
    spec.problem = problem;
    spec.method = o.method;
    spec.base_seed = o.seed;
    spec.instance = gen_spec(o);  // n and seed are set per test
    records = run_benchmark(spec);
  }
  std::ostringstream csv;
  emit_csv(records, csv);
  Options csv_default = o;
  if (csv_default.format == "text") csv_default.format = "csv";
  emit(csv_default, out, csv.str(), records_json(records), csv.str());
  return kOk;
}

int cmd_pareto(const Options& o, std::ostream& out) {
  check_format(o.format);
  const Problem problem = parse_problem(o.problem);
  const auto front = pareto_front(read_input(o), problem, o.grid, o.method);
  std::ostringstream text, csv;
  text << "pareto front (" << to_string(problem) << ", grid " << o.grid << "): "
       << front.size() << " point(s)\n";
  csv << "transport,f5\n";
  json arr = json::array();
  for (const auto& p : front) {
    text << "  transport " << format_number(p.transport) << ", f5 "
         << format_number(p.f5) << "\n";
    csv << format_number(p.transport) << ',' << format_number(p.f5) << '\n';
    arr.push_back({{"transport", p.transport}, {"f5", p.f5}});
  }
  emit(o, out, text.str(), arr, csv.str());
  return kOk;
}

int cmd_gen(const Options& o, std::ostream& out) {
  const std::string text = render_tree(gen_random_tree(gen_spec(o)));
  if (o.output.empty()) {
    out << text;
  } else {
    write_file(o.output, text);
    out << "wrote " << o.n << "-vertex tree to " << o.output << "\n";
  }
  return kOk;
}

int cmd_report(const Options& o, std::ostream& out, std::ostream& err) {
  check_format(o.format);
  const Problem problem = parse_problem(o.problem);
  const WeightedTree tree = read_input(o);
  const SolverConfig cfg{o.lambda, 1e-9};
  cfg.validate();
  const SolveOutcome s = solve_problem(cfg, tree, problem, o.method, o.cap);
  if (!s.warning.empty()) err << "warning: " << s.warning << "\n";
  const AllocationReport r = allocation_report(
      tree, make_assignment(tree, s.deleted_edge, s.fac1, s.fac2, problem));

  std::ostringstream text, csv;
  text << outcome_text(s, o.lambda) << "vertices not served by their "
       << (problem == Problem::median ? "nearest" : "farthest")
       << " facility: " << r.deviations;
  if (!r.vertices.empty()) {
    text << " (";
    for (std::size_t i = 0; i < r.vertices.size(); ++i) {
      text << (i ? ", " : "") << r.vertices[i];
    }
    text << ")";
  }
  text << "\n";
  csv << "vertex\n";
  for (VertexId v : r.vertices) csv << v << '\n';
  json j = outcome_json(s, o.lambda);
  j["deviations"] = r.deviations;
  j["deviating_vertices"] = r.vertices;
  emit(o, out, text.str(), j, csv.str());
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Balanced 2-median / 2-maxian solvers on weighted trees", "baltree"};
  app.require_subcommand(1);
  Options o;

  auto add_io = [&o](CLI::App* sub) {
    sub->add_option("--input", o.input, "Tree file");
    sub->add_option("--output", o.output, "Machine-readable output file");
    sub->add_option("--format", o.format, "text | json | csv");
  };
  auto add_lambda = [&o](CLI::App* sub) {
    sub->add_option("--lambda", o.lambda, "Transport weight in [0,1]");
  };

  auto* median = app.add_subcommand("solve-median", "Balanced 2-median by edge deletion");
  add_io(median);
  add_lambda(median);
  median->add_option("--method", o.method, "edge-deletion | brute");
  median->add_option("--cap", o.cap, "Vertex cap for brute force");

  auto* maxian = app.add_subcommand("solve-maxian", "Balanced 2-maxian");
  add_io(maxian);
  add_lambda(maxian);
  maxian->add_option("--method", o.method, "linear | cubic");

  auto* oracle = app.add_subcommand("oracle", "Brute-force optimum (small trees)");
  add_io(oracle);
  add_lambda(oracle);
  oracle->add_option("--problem", o.problem, "median | maxian");
  oracle->add_option("--cap", o.cap, "Largest accepted vertex count");

  auto* sweep = app.add_subcommand("sweep", "Lambda sweep, CSV records");
  add_io(sweep);
  sweep->add_option("--problem", o.problem, "median | maxian");
  sweep->add_option("--lambdas", o.lambdas, "Comma-separated lambda values")->delimiter(',');
  sweep->add_option("--method", o.method, "Solver method");
  sweep->add_option("--sizes,--n", o.sizes, "Generated instance sizes")->delimiter(',');
  sweep->add_option("--seed", o.seed, "Base seed for generated instances");
  sweep->add_option("--length-min", o.length_min);
  sweep->add_option("--length-max", o.length_max);
  sweep->add_option("--weights", o.weights, "fixed (5) | uniform [0,5]");
  sweep->add_option("--service", o.service, "fixed (1) | uniform [0,5]");

  auto* pareto = app.add_subcommand("pareto", "Nondominated (transport, f5) points");
  add_io(pareto);
  pareto->add_option("--problem", o.problem, "median | maxian");
  pareto->add_option("--grid", o.grid, "Number of lambda grid points");
  pareto->add_option("--method", o.method, "Solver method");

  auto* gen = app.add_subcommand("gen", "Generate a random tree file");
  gen->add_option("--n", o.n, "Vertex count")->required();
  gen->add_option("--seed", o.seed, "Generator seed");
  gen->add_option("--output", o.output, "Tree file to write (stdout if absent)");
  gen->add_option("--length-min", o.length_min);
  gen->add_option("--length-max", o.length_max);
  gen->add_option("--weights", o.weights, "fixed (5) | uniform [0,5]");
  gen->add_option("--service", o.service, "fixed (1) | uniform [0,5]");

  auto* report = app.add_subcommand("report", "Allocation deviations of a solution");
  add_io(report);
  add_lambda(report);
  report->add_option("--problem", o.problem, "median | maxian");
  report->add_option("--method", o.method, "Solver method");
  report->add_option("--cap", o.cap, "Vertex cap for brute force");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    if (median->parsed()) return cmd_solve(o, Problem::median, o.method, out, err);
    if (maxian->parsed()) return cmd_solve(o, Problem::maxian, o.method, out, err);
    if (oracle->parsed()) {
      return cmd_solve(o, parse_problem(o.problem), "brute", out, err);
    }
    if (sweep->parsed()) return cmd_sweep(o, out);
    if (pareto->parsed()) return cmd_pareto(o, out);
    if (gen->parsed()) return cmd_gen(o, out);
    if (report->parsed()) return cmd_report(o, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}

}  // namespace baltree::cli
