#include "cli/commands.hpp"

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "cli/manifest.hpp"
#include "labelflow/benchgen.hpp"
#include "labelflow/diagnostics.hpp"
#include "labelflow/errors.hpp"
#include "labelflow/ground_truth.hpp"
#include "labelflow/io.hpp"
#include "labelflow/metrics.hpp"
#include "labelflow/propagation.hpp"

namespace labelflow::cli {

namespace {

const std::string kToolVersion = std::string("labelflow ") + LABELFLOW_VERSION;

struct GraphInput {
  std::string path;
  std::optional<std::size_t> nodes;
  bool one_based = false;
  std::string delimiter;
  std::string comment = "#";

  void attach(CLI::App& app) {
    app.add_option("graph", path, "Edge list: one 'u v' pair per line")->required();
    app.add_option("--nodes", nodes, "Declared node count; keeps isolated nodes, ids must be < N");
    app.add_flag("--one-based", one_based, "Ids start at 1");
    app.add_option("--delimiter", delimiter, "Field separator (default: whitespace)");
    app.add_option("--comment", comment, "Comment line prefix")->capture_default_str();
  }

  LoadedGraph load() const {
    EdgeListOptions opts;
    if (!delimiter.empty()) {
      if (delimiter.size() != 1) throw ConfigError("--delimiter must be a single character");
      opts.delimiter = delimiter.front();
    }
    opts.comment_prefix = comment;
    opts.id_base = one_based ? IdBase::one : IdBase::zero;
    opts.node_count = nodes;
    return load_edge_list_file(path, opts);
  }
};

struct SeedOptions {
  std::uint64_t seed = 0;
  bool random_seed = false;

  void attach(CLI::App& app) {
    app.add_option("--seed", seed, "RNG seed")->capture_default_str();
    app.add_flag("--random-seed", random_seed, "Draw the seed from system entropy (recorded in the manifest)");
  }

  std::uint64_t resolve() const {
    if (!random_seed) return seed;
    std::random_device rd;
    return (std::uint64_t{rd()} << 32) | rd();
  }
};

struct AlgorithmOptions {
  std::string algo = "clpa";
  std::uint32_t k = 100;
  std::optional<std::uint32_t> T;
  double delta = 0.1;
  double m = 0.1;
  std::string mode = "async";
  std::string anneal = "linear";

  void attach(CLI::App& app, bool with_algo) {
    if (with_algo) {
      app.add_option("--algo", algo, "classic | leung | clpa")->capture_default_str();
    }
    app.add_option("--k", k, "Capacity cycles (clpa)")->capture_default_str();
    app.add_option("--T", T, "Max iterations (default 5k for clpa, 100 otherwise)");
    app.add_option("--delta", delta, "Hop attenuation per link (leung)")->capture_default_str();
    app.add_option("--m", m, "Degree preference exponent (leung)")->capture_default_str();
    app.add_option("--mode", mode, "async | sync")->capture_default_str();
    app.add_option("--anneal", anneal, "Tie-break randomization schedule: linear | off (clpa)")
        ->capture_default_str();
  }

  PropagationConfig config(std::string_view name, std::uint64_t seed) const {
    PropagationConfig cfg;
    cfg.variant = parse_variant(name);
    cfg.mode = parse_mode(mode);
    cfg.max_iterations = T;
    cfg.cycles = k;
    cfg.delta = delta;
    cfg.pref_exponent = m;
    cfg.anneal = parse_anneal(anneal);
    cfg.seed = seed;
    cfg.validate();
    return cfg;
  }
};

struct SpecOptions {
  BenchmarkSpec spec;

  void attach(CLI::App& app) {
    app.add_option("--n", spec.node_count, "Node count")->capture_default_str();
    app.add_option("--dbar", spec.mean_degree, "Mean degree")->capture_default_str();
    app.add_option("--dmax", spec.max_degree, "Max degree")->capture_default_str();
    app.add_option("--tau", spec.degree_exponent, "Degree power-law exponent")->capture_default_str();
    app.add_option("--cmin", spec.community_min, "Smallest community")->capture_default_str();
    app.add_option("--cmax", spec.community_max, "Largest community")->capture_default_str();
  }
};

std::string default_prefix(const std::string& input) {
  std::filesystem::path p(input);
  return (p.parent_path() / p.stem()).string();
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  return out;
}

void write_json(const std::string& path, const nlohmann::json& j) {
  auto out = open_output(path);
  out << j.dump(2) << '\n';
}

std::vector<double> parse_mu_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double mu = 0.0;
    try {
      mu = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw ConfigError("bad mu value '" + item + "'");
    if (!(mu >= 0.0 && mu < 1.0)) throw ConfigError("mu out of range [0, 1): " + item);
    out.push_back(mu);
  }
  if (out.empty()) throw ConfigError("--mu-list is empty");
  return out;
}

std::size_t default_jobs() {
  if (const char* env = std::getenv("LABELFLOW_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

class Driver {
 public:
  Driver(std::vector<std::string> args, std::ostream& out, std::ostream& err)
      : args_(std::move(args)), out_(out), err_(err) {}

  int detect() {
    auto loaded = graph_.load();
    const Graph& g = loaded.graph;
    const std::uint64_t seed = seeds_.resolve();
    const PropagationConfig cfg = algo_.config(algo_.algo, seed);
    const PropagationResult result = labelflow::run(g, cfg);
    const auto labels = result.labeling.labels();

    const std::string prefix = prefix_.empty() ? default_prefix(graph_.path) : prefix_;
    std::vector<std::string> outputs = {prefix + ".communities.csv", prefix + ".report.json",
                                        prefix + ".trace.csv", prefix + ".remap.csv"};
    {
      auto f = open_output(outputs[0]);
      write_labeling_csv(f, g, labels);
    }
    const CommunityReport report = community_report(g, labels);
    nlohmann::json report_json = to_json(report);
    report_json["iterations"] = result.trace.iterations_used;
    report_json["converged"] = result.trace.converged;
    report_json["load"] = {{"nodes", g.node_count()},
                           {"edges", g.edge_count()},
                           {"duplicate_edges_dropped", loaded.stats.duplicate_edges},
                           {"self_loops_dropped", loaded.stats.self_loops}};

    RunManifest manifest = base_manifest("detect", to_json(cfg), seed);
    manifest.inputs.push_back({graph_.path, file_digest(graph_.path)});
    if (!ground_truth_.empty()) {
      const GroundTruth gt = load_ground_truth_file(ground_truth_, g);
      report_json["ground_truth"] = {{"path", ground_truth_},
                                     {"communities", gt.communities},
                                     {"nmi", nmi(labels, gt.labels)},
                                     {"multi_assigned", gt.multi_assigned},
                                     {"unassigned", gt.unassigned},
                                     {"unknown_ids", gt.unknown_ids}};
      manifest.inputs.push_back({ground_truth_, file_digest(ground_truth_)});
    }
    write_json(outputs[1], report_json);
    {
      auto f = open_output(outputs[2]);
      write_trace_csv(f, result.trace);
    }
    {
      auto f = open_output(outputs[3]);
      write_remap_csv(f, g);
    }
    outputs.push_back(prefix + ".manifest.json");
    manifest.outputs = outputs;
    write_json(outputs.back(), to_json(manifest));

    warn_dropped(loaded.stats);
    out_ << "communities " << report.community_count << "  modularity " << std::fixed
         << std::setprecision(6) << report.modularity << "  iterations "
         << result.trace.iterations_used << (result.trace.converged ? " (converged)" : "")
         << '\n';
    return kExitOk;
  }

  int diagnose() {
    auto loaded = graph_.load();
    const Graph& g = loaded.graph;
    const AttractionProfile profile = attraction_power(g);
    const FloodFillReport report = flood_fill_report(g, thresholds_);

    const std::string prefix = prefix_.empty() ? default_prefix(graph_.path) : prefix_;
    std::vector<std::string> outputs = {prefix + ".attraction.csv", prefix + ".risk.json",
                                        prefix + ".manifest.json"};
    {
      auto f = open_output(outputs[0]);
      write_attraction_csv(f, g, profile);
    }
    write_json(outputs[1], to_json(report, g));
    RunManifest manifest = base_manifest(
        "diagnose",
        {{"variance_warn", thresholds_.variance_warn}, {"hub_fraction", thresholds_.hub_fraction}},
        0);
    manifest.inputs.push_back({graph_.path, file_digest(graph_.path)});
    manifest.outputs = outputs;
    write_json(outputs[2], to_json(manifest));

    warn_dropped(loaded.stats);
    out_ << "var(A) " << std::setprecision(6) << report.variance << "  hubs " << report.hub_count
         << "  risk " << to_string(report.risk) << '\n';
    return kExitOk;
  }

  int generate() {
    BenchmarkSpec spec = spec_.spec;
    spec.mu = mu_;
    spec.seed = seeds_.resolve();
    const PlantedGraph planted = labelflow::generate(spec);

    const std::string prefix = prefix_.empty() ? "planted" : prefix_;
    std::vector<std::string> outputs = {prefix + ".edges.txt", prefix + ".communities.txt",
                                        prefix + ".meta.json", prefix + ".manifest.json"};
    {
      auto f = open_output(outputs[0]);
      f << "# " << kGeneratorDescription << '\n';
      f << "# N=" << planted.graph.node_count() << " M=" << planted.graph.edge_count() << '\n';
      write_edge_list(f, planted.graph);
    }
    {
      auto f = open_output(outputs[1]);
      write_ground_truth(f, planted.graph, planted.ground_truth.labels());
    }
    write_json(outputs[2], {{"generator", kGeneratorDescription},
                            {"spec", to_json(spec)},
                            {"nodes", planted.graph.node_count()},
                            {"edges", planted.graph.edge_count()},
                            {"communities", planted.ground_truth.distinct_labels()},
                            {"realized_mu", planted.realized_mu},
                            {"realized_mean_degree", planted.realized_mean_degree},
                            {"dropped_stubs", planted.dropped_stubs}});
    RunManifest manifest = base_manifest("generate", to_json(spec), spec.seed);
    manifest.outputs = outputs;
    write_json(outputs[3], to_json(manifest));

    out_ << "nodes " << planted.graph.node_count() << "  edges " << planted.graph.edge_count()
         << "  realized_mu " << std::fixed << std::setprecision(4) << planted.realized_mu
         << "  mean_degree " << planted.realized_mean_degree << '\n';
    return kExitOk;
  }

  int bench() {
    const std::vector<double> mus = parse_mu_list(mu_list_);
    if (seeds_per_point_ == 0) throw ConfigError("--seeds must be positive");
    BenchmarkSpec base = spec_.spec;
    base.seed = seeds_.resolve();

    std::vector<NamedAlgorithm> algorithms;
    std::stringstream ss(algos_);
    std::string name;
    while (std::getline(ss, name, ',')) {
      algorithms.push_back({name, algo_.config(name, 0)});
    }
    if (algorithms.empty()) throw ConfigError("--algos is empty");

    const std::size_t jobs = jobs_ ? *jobs_ : default_jobs();
    const SweepResult result =
        sweep(base, mus, algorithms, SweepOptions{seeds_per_point_, jobs});

    const std::string prefix = prefix_.empty() ? "bench" : prefix_;
    std::vector<std::string> outputs = {prefix + ".csv", prefix + ".summary.csv",
                                        prefix + ".manifest.json"};
    {
      auto f = open_output(outputs[0]);
      write_sweep_csv(f, result.rows);
    }
    {
      auto f = open_output(outputs[1]);
      write_sweep_summary_csv(f, result.summary);
    }
    nlohmann::json algos = nlohmann::json::array();
    for (const auto& a : algorithms) algos.push_back({{"name", a.name}, {"config", to_json(a.config)}});
    RunManifest manifest = base_manifest(
        "bench",
        {{"spec", to_json(base)},
         {"mu_list", mus},
         {"seeds_per_point", seeds_per_point_},
         {"algorithms", std::move(algos)}},
        base.seed);
    manifest.outputs = outputs;
    write_json(outputs[2], to_json(manifest));

    out_ << "mu        algorithm  mean_nmi  mean_Q    gt_dissatisfied\n";
    for (const auto& s : result.summary) {
      out_ << std::fixed << std::setprecision(3) << std::left << std::setw(10) << s.mu
           << std::setw(11) << s.algorithm << std::setw(10) << s.mean_nmi << std::setw(10)
           << s.mean_modularity << s.mean_gt_dissatisfied << '\n';
    }
    return kExitOk;
  }

  int main(int argc, const char* const* argv) {
    CLI::App app{"labelflow: label propagation community detection with capacity control"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    auto* detect = app.add_subcommand("detect", "Detect communities in an edge list");
    graph_.attach(*detect);
    algo_.attach(*detect, true);
    seeds_.attach(*detect);
    detect->add_option("-o,--output", prefix_, "Output prefix (default: input path sans extension)");
    detect->add_option("--ground-truth", ground_truth_,
                       "Community file (one line per community) to score NMI against");

    auto* diagnose = app.add_subcommand("diagnose", "Attraction power profile and flood-fill risk");
    graph_.attach(*diagnose);
    diagnose->add_option("--variance-warn", thresholds_.variance_warn, "var(A) warn level")
        ->capture_default_str();
    diagnose->add_option("--hub-fraction", thresholds_.hub_fraction,
                         "Degree fraction of N above which a node is a hub")
        ->capture_default_str();
    diagnose->add_option("-o,--output", prefix_, "Output prefix");

    auto* generate = app.add_subcommand("generate", "Generate a planted-partition benchmark graph");
    spec_.attach(*generate);
    generate->add_option("--mu", mu_, "Mixing parameter in [0, 1)")->capture_default_str();
    seeds_.attach(*generate);
    generate->add_option("-o,--output", prefix_, "Output prefix (default: planted)");

    auto* bench = app.add_subcommand("bench", "Sweep mu over planted-partition benchmarks");
    spec_.attach(*bench);
    bench->add_option("--mu-list", mu_list_, "Comma-separated mu values")->capture_default_str();
    bench->add_option("--seeds", seeds_per_point_, "Graphs per mu value")->capture_default_str();
    bench->add_option("--algos", algos_, "Comma-separated: classic, leung, clpa")
        ->capture_default_str();
    algo_.attach(*bench, false);
    seeds_.attach(*bench);
    bench->add_option("--jobs", jobs_, "Worker threads (default: $LABELFLOW_JOBS or cores)");
    bench->add_option("-o,--output", prefix_, "Output prefix (default: bench)");

    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out_, err_);
      return code == 0 ? kExitOk : kExitUserError;
    }

    if (detect->parsed()) return this->detect();
    if (diagnose->parsed()) return this->diagnose();
    if (generate->parsed()) return this->generate();
    return this->bench();
  }

 private:
  RunManifest base_manifest(std::string command, nlohmann::json config, std::uint64_t seed) const {
    RunManifest m;
    m.command = std::move(command);
    m.arguments = args_;
    m.config = std::move(config);
    m.tool_version = kToolVersion;
    m.seed = seed;
    return m;
  }

  void warn_dropped(const LoadStats& stats) const {
    if (stats.duplicate_edges > 0 || stats.self_loops > 0) {
      err_ << "warning: dropped " << stats.duplicate_edges << " duplicate edge(s) and "
           << stats.self_loops << " self-loop(s)\n";
    }
  }

  std::vector<std::string> args_;
  std::ostream& out_;
  std::ostream& err_;

  GraphInput graph_;
  AlgorithmOptions algo_;
  SeedOptions seeds_;
  SpecOptions spec_;
  RiskThresholds thresholds_;
  std::string prefix_;
  std::string ground_truth_;
  double mu_ = 0.3;
  std::string mu_list_ = "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8";
  std::size_t seeds_per_point_ = 10;
  std::string algos_ = "classic,clpa";
  std::optional<std::size_t> jobs_;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + std::min(argc, 1), argv + argc);
  Driver driver(args, out, err);
  try {
    return driver.main(argc, argv);
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUserError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUserError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("labelflow");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace labelflow::cli
