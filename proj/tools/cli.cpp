#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "genergy/bounds.hpp"
#include "genergy/ensemble.hpp"
#include "genergy/error.hpp"
#include "genergy/extremal.hpp"
#include "genergy/graph.hpp"
#include "genergy/report_json.hpp"
#include "genergy/spectrum.hpp"

namespace genergy::cli {
namespace {

struct Options {
  std::string matrix_path;
  std::string graph_path;
  std::string family_spec;
  std::size_t n = 0;
  std::size_t trials = 8;
  std::uint64_t seed = 1;
  std::size_t bins = 50;
  std::uint64_t iterations = 5000;
  std::string format = "text";
  std::string method = "auto";
  std::string out_path;
  double tolerance = default_certify_tolerance;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Matrix from --matrix, or the adjacency matrix of --graph / --family.
DenseMatrix input_matrix(const Options& o) {
  if (!o.matrix_path.empty()) return parse_matrix(read_file(o.matrix_path));
  if (!o.graph_path.empty()) return adjacency(parse_edge_list(read_file(o.graph_path)));
  if (!o.family_spec.empty()) return adjacency(family(o.family_spec));
  throw UsageError("one of --matrix, --graph, --family is required");
}

std::optional<Graph> input_graph(const Options& o) {
  if (!o.graph_path.empty()) return parse_edge_list(read_file(o.graph_path));
  if (!o.family_spec.empty()) return family(o.family_spec);
  return std::nullopt;
}

void add_input_options(CLI::App* sub, Options& o, bool allow_matrix) {
  CLI::Option* m = nullptr;
  if (allow_matrix) m = sub->add_option("--matrix", o.matrix_path, "matrix text file");
  auto* g = sub->add_option("--graph", o.graph_path, "edge-list file");
  auto* f = sub->add_option("--family", o.family_spec,
                            "named graph, e.g. complete:4, complete_bipartite:2:3, petersen");
  g->excludes(f);
  if (m) {
    m->excludes(g);
    m->excludes(f);
  }
}

void add_format_option(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
}

void add_out_option(CLI::App* sub, Options& o) {
  sub->add_option("--out", o.out_path, "write primary output to this file instead of stdout");
}

std::string bounds_text(const CertificationReport& r) {
  std::ostringstream ss;
  ss << "energy " << format_text(r.energy) << '\n';
  for (const auto& b : r.reports) {
    ss << std::left << std::setw(16) << to_string(b.name) << ' ';
    if (b.applicable) {
      ss << (side_of(b.name) == BoundSide::upper ? "upper " : "lower ") << format_text(*b.value);
    } else {
      ss << "n/a  ";
      for (const auto& d : b.diagnostics)
        if (!d.held) ss << " [" << d.label << " failed]";
    }
    ss << '\n';
  }
  return ss.str();
}

std::string certify_text(const CertificationReport& r) {
  std::ostringstream ss;
  ss << bounds_text(r);
  if (r.violations.empty()) {
    ss << "violations: none\n";
  } else {
    ss << "violations: " << r.violations.size() << '\n';
    for (const auto& v : r.violations) {
      ss << "  " << to_string(v.name) << " bound " << format_text(v.bound) << " energy "
         << format_text(v.energy) << " excess " << format_text(v.excess) << '\n';
    }
  }
  return ss.str();
}

std::string search_text(const SearchResult& r) {
  std::ostringstream ss;
  ss << "n " << r.n << '\n'
     << "method " << to_string(r.method) << '\n'
     << "best_energy " << format_text(r.best_energy) << '\n'
     << "km_absolute " << format_text(r.km_absolute) << '\n'
     << "ratio " << format_text(r.ratio) << '\n'
     << "evaluations " << r.evaluations << '\n';
  if (r.seed) ss << "seed " << *r.seed << '\n';
  ss << "best_graph\n" << serialize_edge_list(r.best_graph);
  return ss.str();
}

std::string montecarlo_text(const EnsembleStats& s) {
  std::ostringstream ss;
  ss << "n " << s.n << '\n'
     << "trials " << s.trials << '\n'
     << "seed " << s.seed << '\n'
     << "mean_energy_ratio " << format_text(s.mean_energy_ratio) << '\n'
     << "mean_sigma1_ratio " << format_text(s.mean_sigma1_ratio) << '\n'
     << "max_sigma2_ratio " << format_text(s.max_sigma2_ratio) << '\n';
  return ss.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Energy of graphs and matrices: spectra, bounds, random-graph ensembles"};
  app.name(args.empty() ? "genergy" : args.front());
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);

  auto* energy_cmd = app.add_subcommand("energy", "energy (sum of singular values) of a matrix or graph");
  add_input_options(energy_cmd, o, true);
  add_format_option(energy_cmd, o);
  add_out_option(energy_cmd, o);

  auto* certify_cmd = app.add_subcommand("certify", "check every applicable bound against the energy; exit 2 on violation");
  add_input_options(certify_cmd, o, true);
  certify_cmd->add_option("--tolerance", o.tolerance, "violation slack")->check(CLI::NonNegativeNumber);
  add_format_option(certify_cmd, o);
  add_out_option(certify_cmd, o);

  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate every bound with its preconditions");
  add_input_options(bounds_cmd, o, true);
  add_format_option(bounds_cmd, o);
  add_out_option(bounds_cmd, o);

  auto* family_cmd = app.add_subcommand("family", "write the edge list of a named graph");
  family_cmd->add_option("--family", o.family_spec, "complete:N | complete_bipartite:A:B | cycle:N | path:N | star:N | petersen")
      ->required();
  add_out_option(family_cmd, o);

  auto* mc_cmd = app.add_subcommand("montecarlo", "energy and extreme singular values over G(n,1/2) samples");
  mc_cmd->add_option("--n", o.n, "vertices")->required()->check(CLI::Range(std::size_t{2}, std::size_t{100000}));
  mc_cmd->add_option("--trials", o.trials, "samples")->check(CLI::PositiveNumber);
  mc_cmd->add_option("--seed", o.seed, "master seed");
  add_format_option(mc_cmd, o);
  add_out_option(mc_cmd, o);

  auto* hist_cmd = app.add_subcommand("histogram", "scaled adjacency spectrum vs the semicircle, as CSV");
  add_input_options(hist_cmd, o, false);
  auto* hist_n = hist_cmd->add_option("--n", o.n, "sample G(n,1/2) with --seed when no graph is given");
  hist_cmd->add_option("--seed", o.seed, "seed for the G(n,1/2) sample");
  hist_cmd->add_option("--bins", o.bins, "bins over [-1.25, 1.25]")->check(CLI::Range(std::size_t{2}, std::size_t{1000000}));
  hist_n->excludes("--graph")->excludes("--family");
  add_out_option(hist_cmd, o);

  auto* search_cmd = app.add_subcommand("search", "look for maximum-energy graphs on n vertices");
  search_cmd->add_option("--n", o.n, "vertices")->required()->check(CLI::Range(std::size_t{2}, std::size_t{100000}));
  search_cmd->add_option("--seed", o.seed, "seed for local search restarts");
  search_cmd->add_option("--iterations", o.iterations, "energy evaluation budget for local search")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--method", o.method, "auto = exhaustive for n <= 6, else local")
      ->check(CLI::IsMember({"auto", "exhaustive", "local"}));
  add_format_option(search_cmd, o);
  add_out_option(search_cmd, o);

  if (args.size() > 1 && !args[1].starts_with('-') && app.get_subcommand_no_throw(args[1]) == nullptr) {
    err << "error: unknown subcommand '" << args[1] << "'\n";
    return exit_usage;
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  const bool json = o.format == "json";
  std::string output;
  int code = exit_ok;
  try {
    if (energy_cmd->parsed()) {
      const double e = energy(input_matrix(o));
      output = json ? dump(Json{{"energy", e}}) : format_text(e) + "\n";
    } else if (certify_cmd->parsed()) {
      const auto report = certify(input_matrix(o), o.tolerance);
      output = json ? dump(to_json(report)) : certify_text(report);
      if (!report.ok()) code = exit_violation;
    } else if (bounds_cmd->parsed()) {
      const auto report = certify(input_matrix(o));
      if (json) {
        Json bounds = Json::array();
        for (const auto& b : report.reports) bounds.push_back(to_json(b));
        output = dump(Json{{"energy", report.energy}, {"bounds", std::move(bounds)}});
      } else {
        output = bounds_text(report);
      }
    } else if (family_cmd->parsed()) {
      output = serialize_edge_list(family(o.family_spec));
    } else if (mc_cmd->parsed()) {
      const auto stats = montecarlo(o.n, o.trials, o.seed);
      output = json ? dump(to_json(stats)) : montecarlo_text(stats);
    } else if (hist_cmd->parsed()) {
      auto g = input_graph(o);
      if (!g) {
        if (o.n == 0) throw UsageError("histogram needs --graph, --family or --n");
        g = sample_gnp_half(o.n, o.seed);
      }
      output = histogram_csv(spectral_histogram(*g, o.bins));
    } else if (search_cmd->parsed()) {
      const bool exhaustive =
          o.method == "exhaustive" || (o.method == "auto" && o.n <= LabeledGraphs::max_order);
      const auto result =
          exhaustive ? exhaustive_max_energy(o.n) : local_search_max_energy(o.n, o.seed, o.iterations);
      output = json ? dump(to_json(result)) : search_text(result);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const genergy::Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  if (o.out_path.empty()) {
    out << output;
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file || !(file << output)) {
      err << "error: cannot write '" << o.out_path << "'\n";
      return exit_usage;
    }
  }
  return code;
}

}  // namespace genergy::cli
