#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>

#include "tvsc/clustering.hpp"
#include "tvsc/generators.hpp"
#include "tvsc/io.hpp"
#include "tvsc/metrics.hpp"
#include "tvsc/pointcloud.hpp"

namespace tvsc::cli {

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

/// Bad user input: exit code 1.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

constexpr const char* kGraphFile = "graph.tvg";
constexpr const char* kTruthFile = "truth.lbl";
constexpr const char* kLabelsFile = "labels.lbl";

const std::vector<std::string> kConfigKeys = {
    "alpha",   "gamma1", "gamma2",  "epsilon", "sigma",   "max_iters", "restarts",  "seed",
    "n_per_cluster", "k", "t_len", "p_intra", "p_inter", "flip_prob", "method",   "trials"};

json load_config(const std::string& path) {
  if (path.empty()) return json::object();
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read config file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ValidationError("config " + path + ": " + e.what());
  }
  if (!j.is_object()) throw ValidationError("config " + path + ": expected a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (std::find(kConfigKeys.begin(), kConfigKeys.end(), key) == kConfigKeys.end()) {
      throw ValidationError("config " + path + ": unknown key '" + key + "'");
    }
  }
  return j;
}

/// Flag value if given, else config value if present, else the default.
template <typename T>
T pick(const CLI::Option* flag, const T& flag_value, const json& config, const char* key, T fallback) {
  if (flag != nullptr && flag->count() > 0) return flag_value;
  if (config.contains(key)) {
    try {
      return config.at(key).get<T>();
    } catch (const json::exception& e) {
      throw ValidationError(std::string("config key '") + key + "': " + e.what());
    }
  }
  return fallback;
}

template <typename T>
std::optional<T> pick_optional(const CLI::Option* flag, const T& flag_value, const json& config,
                               const char* key) {
  if (flag != nullptr && flag->count() > 0) return flag_value;
  if (config.contains(key)) return config.at(key).get<T>();
  return std::nullopt;
}

std::string trial_dir(int trial) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "trial_%03d", trial);
  return buf;
}

/// Trial subdirectories of a run directory, or {""} for a single-run layout.
std::vector<std::string> discover_trials(const fs::path& dir, const char* file) {
  if (fs::exists(dir / file)) return {""};
  std::vector<std::string> out;
  if (fs::is_directory(dir)) {
    for (const auto& e : fs::directory_iterator(dir)) {
      const auto name = e.path().filename().string();
      if (e.is_directory() && name.rfind("trial_", 0) == 0 && fs::exists(e.path() / file)) {
        out.push_back(name);
      }
    }
  }
  std::sort(out.begin(), out.end());
  if (out.empty()) throw ValidationError("no " + std::string(file) + " found under " + dir.string());
  return out;
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
  std::string preset = "dense";
  std::size_t n_per_cluster = 0;
  int k = 0;
  std::size_t t_len = 0;
  double p_intra = 0, p_inter = 0, flip = 0;
  std::uint64_t seed = 0;
  int trials = 1;
  std::string config, out;
  CLI::Option *o_npc{}, *o_k{}, *o_t{}, *o_pi{}, *o_po{}, *o_flip{}, *o_seed{}, *o_trials{};
};

void add_generate(CLI::App& app, GenerateArgs& a) {
  auto* sub = app.add_subcommand("generate-sbm", "Generate SBM time-varying graphs with ground truth");
  sub->add_option("--preset", a.preset, "Parameter preset")->check(CLI::IsMember({"dense", "sparse"}));
  a.o_npc = sub->add_option("--n-per-cluster", a.n_per_cluster, "Nodes per cluster");
  a.o_k = sub->add_option("--k", a.k, "Number of clusters");
  a.o_t = sub->add_option("--t", a.t_len, "Number of frames");
  a.o_pi = sub->add_option("--p-intra", a.p_intra, "Intra-cluster edge probability");
  a.o_po = sub->add_option("--p-inter", a.p_inter, "Inter-cluster edge probability");
  a.o_flip = sub->add_option("--flip", a.flip, "Per-node per-frame label change probability");
  a.o_seed = sub->add_option("--seed", a.seed, "RNG seed");
  a.o_trials = sub->add_option("--trials", a.trials, "Number of independent sequences");
  sub->add_option("--config", a.config, "JSON config file");
  sub->add_option("--out", a.out, "Output directory")->required();
}

int cmd_generate(const GenerateArgs& a) {
  const json cfg = load_config(a.config);
  SbmTvParams base = a.preset == "sparse" ? SbmTvParams::sparse() : SbmTvParams::dense();
  base.n_per_cluster = pick(a.o_npc, a.n_per_cluster, cfg, "n_per_cluster", base.n_per_cluster);
  base.k = pick(a.o_k, a.k, cfg, "k", base.k);
  base.t_len = pick(a.o_t, a.t_len, cfg, "t_len", base.t_len);
  base.p_intra = pick(a.o_pi, a.p_intra, cfg, "p_intra", base.p_intra);
  base.p_inter = pick(a.o_po, a.p_inter, cfg, "p_inter", base.p_inter);
  base.flip_prob = pick(a.o_flip, a.flip, cfg, "flip_prob", base.flip_prob);
  base.seed = pick(a.o_seed, a.seed, cfg, "seed", std::uint64_t{0});
  const int trials = pick(a.o_trials, a.trials, cfg, "trials", 1);
  if (trials < 1) throw ValidationError("--trials must be at least 1");
  try {
    base.validate();
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }

  for (int tr = 0; tr < trials; ++tr) {
    SbmTvParams p = base;
    if (trials > 1) p.seed = derive_seed(base.seed, static_cast<std::uint64_t>(tr));
    const auto [seq, truth] = sbm_tv_sequence(p);
    const fs::path dir = trials > 1 ? fs::path(a.out) / trial_dir(tr) : fs::path(a.out);
    io::write_tvg(dir / kGraphFile, seq);
    io::write_labels(dir / kTruthFile, truth);

    std::size_t edges = 0, intra = 0, intra_pairs = 0, inter_pairs = 0;
    for (std::size_t t = 0; t < seq.t_len(); ++t) {
      const auto lab = truth.frame(t);
      edges += seq[t].edge_count();
      for (const Edge& e : seq[t].edges()) intra += lab[e.i] == lab[e.j] ? 1 : 0;
      std::vector<std::size_t> sizes(static_cast<std::size_t>(p.k), 0);
      for (int l : lab) ++sizes[static_cast<std::size_t>(l)];
      std::size_t same = 0;
      for (auto s : sizes) same += s * (s - 1) / 2;
      intra_pairs += same;
      inter_pairs += seq.n() * (seq.n() - 1) / 2 - same;
    }
    std::cout << (trials > 1 ? trial_dir(tr) + ": " : "") << "N=" << seq.n() << " T=" << seq.t_len()
              << " K=" << p.k << " edges=" << edges << " intra_density="
              << (intra_pairs ? static_cast<double>(intra) / intra_pairs : 0.0) << " inter_density="
              << (inter_pairs ? static_cast<double>(edges - intra) / inter_pairs : 0.0) << '\n';
  }
  return 0;
}

// --------------------------------------------------------------- build-knn

struct KnnArgs {
  std::string input, out;
  std::size_t k = 8;
  std::size_t target_n = 301;
  std::uint64_t seed = 0;
};

void add_knn(CLI::App& app, KnnArgs& a) {
  auto* sub = app.add_subcommand("build-knn", "Build k-NN graphs from a registered point-cloud directory");
  sub->add_option("--input", a.input, "Directory of per-frame x,y,z CSV files")->required();
  sub->add_option("--k", a.k, "Neighbours per point");
  sub->add_option("--target-n", a.target_n, "Points kept after farthest-point downsampling");
  sub->add_option("--seed", a.seed, "Seed for the downsampling start point");
  sub->add_option("--out", a.out, "Output directory")->required();
}

int cmd_knn(const KnnArgs& a) {
  if (a.k == 0 || a.k >= a.target_n) {
    throw ValidationError("--k must satisfy 1 <= k < target-n");
  }
  PointFrameSequence frames;
  try {
    frames = load_frames(a.input);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
  if (a.target_n > frames.n()) {
    throw ValidationError("--target-n " + std::to_string(a.target_n) + " exceeds the " +
                          std::to_string(frames.n()) + " points per frame");
  }
  const PointFrameSequence sampled = downsample(frames, a.target_n, a.seed);
  const TVGraphSequence seq = knn_sequence(sampled, a.k);
  io::write_tvg(fs::path(a.out) / kGraphFile, seq);
  std::size_t min_deg = seq.n();
  for (const auto& g : seq.graphs()) {
    const Laplacian L(g);
    for (double d : L.degrees()) min_deg = std::min(min_deg, static_cast<std::size_t>(d));
  }
  std::cout << "N=" << seq.n() << " T=" << seq.t_len() << " k=" << a.k << " min_degree=" << min_deg
            << '\n';
  return 0;
}

// ----------------------------------------------------------------- cluster

struct ClusterArgs {
  std::string in, graph, method = "tv-pds", config, out;
  int k = 3;
  double alpha = 0, gamma1 = 0, gamma2 = 0, epsilon = 0, sigma = 0;
  int max_iters = 0, restarts = 0;
  std::uint64_t seed = 0;
  CLI::Option *o_method{}, *o_k{}, *o_alpha{}, *o_g1{}, *o_g2{}, *o_eps{}, *o_sigma{}, *o_iters{},
      *o_restarts{}, *o_seed{};
};

void add_cluster(CLI::App& app, ClusterArgs& a) {
  auto* sub = app.add_subcommand("cluster", "Cluster a time-varying graph");
  auto* in = sub->add_option("--in", a.in, "Run directory (graph.tvg or trial_*/graph.tvg)");
  auto* graph = sub->add_option("--graph", a.graph, "Single TV-graph file");
  in->excludes(graph);
  a.o_method = sub->add_option("--method", a.method, "tv-pds or static-sc")
                   ->check(CLI::IsMember({"tv-pds", "static-sc"}));
  a.o_k = sub->add_option("--k", a.k, "Number of clusters");
  a.o_alpha = sub->add_option("--alpha", a.alpha, "Temporal regularization weight");
  a.o_g1 = sub->add_option("--gamma1", a.gamma1, "Primal step size");
  a.o_g2 = sub->add_option("--gamma2", a.gamma2, "Dual step size");
  a.o_eps = sub->add_option("--epsilon", a.epsilon, "Slab half-width");
  a.o_sigma = sub->add_option("--sigma", a.sigma, "Relative-change stopping threshold");
  a.o_iters = sub->add_option("--max-iters", a.max_iters, "Iteration cap");
  a.o_restarts = sub->add_option("--restarts", a.restarts, "Solver restarts");
  a.o_seed = sub->add_option("--seed", a.seed, "Seed");
  sub->add_option("--config", a.config, "JSON config file");
  sub->add_option("--out", a.out, "Output directory")->required();
}

json solve_report(const SolveResult& r) {
  return {{"iterations", r.iters},
          {"converged", r.converged},
          {"final_objective", r.final_objective},
          {"raw_slab_violation", r.raw_slab_violation},
          {"beta", r.beta},
          {"gamma1", r.gamma1},
          {"gamma2", r.gamma2},
          {"epsilon", r.epsilon}};
}

int cmd_cluster(const ClusterArgs& a) {
  const json cfg = load_config(a.config);
  const std::string method = pick(a.o_method, a.method, cfg, "method", std::string("tv-pds"));
  const int k = pick(a.o_k, a.k, cfg, "k", 3);
  if (k < 2) throw ValidationError("--k must be at least 2");
  SolverConfig scfg;
  scfg.alpha = pick(a.o_alpha, a.alpha, cfg, "alpha", scfg.alpha);
  scfg.gamma1 = pick_optional(a.o_g1, a.gamma1, cfg, "gamma1");
  scfg.gamma2 = pick_optional(a.o_g2, a.gamma2, cfg, "gamma2");
  scfg.epsilon = pick_optional(a.o_eps, a.epsilon, cfg, "epsilon");
  scfg.sigma = pick(a.o_sigma, a.sigma, cfg, "sigma", scfg.sigma);
  scfg.max_iters = pick(a.o_iters, a.max_iters, cfg, "max_iters", scfg.max_iters);
  scfg.restarts = pick(a.o_restarts, a.restarts, cfg, "restarts", scfg.restarts);
  scfg.seed = pick(a.o_seed, a.seed, cfg, "seed", std::uint64_t{0});
  try {
    scfg.validate();
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }

  std::vector<std::pair<fs::path, fs::path>> jobs;  // (graph file, output dir)
  if (!a.graph.empty()) {
    jobs.emplace_back(a.graph, a.out);
  } else {
    if (a.in.empty()) throw ValidationError("one of --in or --graph is required");
    for (const auto& trial : discover_trials(a.in, kGraphFile)) {
      jobs.emplace_back(fs::path(a.in) / trial / kGraphFile, fs::path(a.out) / trial);
    }
  }

  std::vector<TVGraphSequence> inputs;
  inputs.reserve(jobs.size());
  for (const auto& [graph, _] : jobs) inputs.push_back(io::read_tvg(graph));
  for (const auto& seq : inputs) {
    if (static_cast<std::size_t>(k) > seq.n()) throw ValidationError("--k exceeds node count");
  }

  std::vector<LabelSequence> labels(jobs.size());
  std::vector<json> reports(jobs.size());
  std::vector<double> seconds(jobs.size());
  std::vector<std::string> errors(jobs.size());
  const auto count = static_cast<std::ptrdiff_t>(jobs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t j = 0; j < count; ++j) {
    try {
      const auto start = std::chrono::steady_clock::now();
      const TVGraphSequence& seq = inputs[j];
      json rep = {{"method", method}, {"k", k}, {"n", seq.n()}, {"t_len", seq.t_len()}};
      if (method == "static-sc") {
        labels[j] = static_sc(seq, k, scfg.seed);
      } else if (k == 2) {
        TwoWayResult r = tv_cluster_two(seq, scfg);
        labels[j] = std::move(r.labels);
        rep["alpha"] = scfg.alpha;
        rep["solves"] = json::array({solve_report(r.solve)});
      } else {
        MultiWayResult r = tv_cluster_multi(seq, k, scfg);
        labels[j] = std::move(r.labels);
        rep["alpha"] = scfg.alpha;
        rep["solves"] = json::array();
        for (const auto& s : r.solves) rep["solves"].push_back(solve_report(s));
      }
      reports[j] = std::move(rep);
      seconds[j] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    } catch (const std::exception& e) {
      errors[j] = e.what();
    }
  }
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    if (!errors[j].empty()) throw std::runtime_error(jobs[j].first.string() + ": " + errors[j]);
  }

  for (std::size_t j = 0; j < jobs.size(); ++j) {
    const fs::path& dir = jobs[j].second;
    io::write_labels(dir / kLabelsFile, labels[j]);
    write_text(dir / "report.json", reports[j].dump(2) + "\n");
    write_text(dir / "timing.json", json{{"wall_time_s", seconds[j]}}.dump(2) + "\n");
    std::cout << jobs[j].first.string() << ": " << method << " k=" << k;
    if (reports[j].contains("solves")) {
      for (const auto& s : reports[j]["solves"]) {
        std::cout << " [iters=" << s["iterations"] << " converged=" << s["converged"]
                  << " objective=" << s["final_objective"] << "]";
      }
    }
    std::cout << " wall=" << seconds[j] << "s\n";
  }
  return 0;
}

// ---------------------------------------------------------------- evaluate

struct EvaluateArgs {
  std::string est, truth, out;
  bool svg = false;
};

void add_evaluate(CLI::App& app, EvaluateArgs& a) {
  auto* sub = app.add_subcommand("evaluate", "Per-frame pair-counting accuracy against ground truth");
  sub->add_option("--est", a.est, "Estimate labels file or run directory")->required();
  sub->add_option("--truth", a.truth, "Ground-truth labels file or run directory")->required();
  sub->add_option("--out", a.out, "Output directory")->required();
  sub->add_flag("--svg", a.svg, "Also write accuracy.svg");
}

int cmd_evaluate(const EvaluateArgs& a) {
  std::vector<std::pair<fs::path, fs::path>> pairs;  // (estimate, truth)
  std::vector<std::string> names;
  if (fs::is_regular_file(a.est)) {
    if (!fs::is_regular_file(a.truth)) throw ValidationError("--truth must be a file when --est is");
    pairs.emplace_back(a.est, a.truth);
    names.push_back(trial_dir(0));
  } else {
    const auto trials = discover_trials(a.est, kLabelsFile);
    for (std::size_t i = 0; i < trials.size(); ++i) {
      const fs::path truth = fs::path(a.truth) / trials[i] / kTruthFile;
      if (!fs::exists(truth)) throw ValidationError("missing ground truth " + truth.string());
      pairs.emplace_back(fs::path(a.est) / trials[i] / kLabelsFile, truth);
      names.push_back(trials[i].empty() ? trial_dir(0) : trials[i]);
    }
  }

  std::vector<AccuracyReport> reports;
  std::vector<std::size_t> truth_mismatch;
  std::size_t T = 0;
  for (const auto& [est_path, truth_path] : pairs) {
    const LabelSequence est = io::read_labels(est_path);
    const LabelSequence truth = io::read_labels(truth_path);
    if (est.n() != truth.n() || est.t_len() != truth.t_len()) {
      throw ValidationError("shape mismatch between " + est_path.string() + " and " + truth_path.string());
    }
    if (T != 0 && est.t_len() != T) throw ValidationError("trials have different frame counts");
    T = est.t_len();
    reports.push_back(evaluate(est, truth));
    std::size_t tm = 0;
    for (auto m : aligned_mismatches(truth)) tm += m;
    truth_mismatch.push_back(tm);
  }

  std::vector<std::string> header = {"t"};
  header.insert(header.end(), names.begin(), names.end());
  header.push_back("mean");
  std::vector<std::vector<double>> rows;
  std::vector<double> mean_curve;
  for (std::size_t t = 0; t < T; ++t) {
    std::vector<double> row = {static_cast<double>(t)};
    double s = 0.0;
    for (const auto& r : reports) {
      row.push_back(r.per_frame[t]);
      s += r.per_frame[t];
    }
    row.push_back(s / static_cast<double>(reports.size()));
    mean_curve.push_back(row.back());
    rows.push_back(std::move(row));
  }
  const fs::path out(a.out);
  io::write_csv(out / "accuracy.csv", header, rows);

  std::string summary;
  double grand = 0.0, lowest = 1.0;
  std::size_t mism = 0, tmism = 0;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    std::size_t m = 0;
    for (auto x : reports[i].mismatch_per_frame) m += x;
    const double mn = *std::min_element(reports[i].per_frame.begin(), reports[i].per_frame.end());
    summary += names[i] + " mean=" + io::format_real(reports[i].mean) + " min=" + io::format_real(mn) +
               " mismatch_total=" + std::to_string(m) +
               " truth_mismatch_total=" + std::to_string(truth_mismatch[i]) + "\n";
    grand += reports[i].mean;
    lowest = std::min(lowest, mn);
    mism += m;
    tmism += truth_mismatch[i];
  }
  const std::string line = "summary trials=" + std::to_string(reports.size()) +
                           " mean=" + io::format_real(grand / static_cast<double>(reports.size())) +
                           " min=" + io::format_real(lowest) + " mismatch_total=" + std::to_string(mism) +
                           " truth_mismatch_total=" + std::to_string(tmism) + "\n";
  write_text(out / "summary.txt", summary + line);
  std::cout << line;
  if (a.svg) {
    io::write_svg_lines(out / "accuracy.svg", "Pair-counting accuracy", {"mean"}, {mean_curve}, 0.0, 1.0);
  }
  return 0;
}

// ---------------------------------------------------------------- eigengap

struct EigengapArgs {
  std::string graph, out;
  std::size_t m = 6;
  bool svg = false;
};

void add_eigengap(CLI::App& app, EigengapArgs& a) {
  auto* sub = app.add_subcommand("eigengap", "Per-frame gaps between the smallest Laplacian eigenvalues");
  sub->add_option("--graph", a.graph, "TV-graph file")->required();
  sub->add_option("--m", a.m, "Number of smallest eigenvalues (m - 1 gaps)");
  sub->add_option("--out", a.out, "Output directory")->required();
  sub->add_flag("--svg", a.svg, "Also write eigengap.svg");
}

int cmd_eigengap(const EigengapArgs& a) {
  const TVGraphSequence seq = io::read_tvg(a.graph);
  if (a.m < 2 || a.m > seq.n()) throw ValidationError("--m must satisfy 2 <= m <= N");
  std::vector<std::vector<double>> gaps(seq.t_len());
  const auto frames = static_cast<std::ptrdiff_t>(seq.t_len());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t t = 0; t < frames; ++t) gaps[t] = eigengap_profile(Laplacian(seq[t]), a.m);

  std::vector<std::string> header = {"t"};
  for (std::size_t g = 1; g < a.m; ++g) header.push_back("gap_" + std::to_string(g));
  std::vector<std::vector<double>> rows;
  std::vector<double> means(a.m - 1, 0.0);
  for (std::size_t t = 0; t < seq.t_len(); ++t) {
    std::vector<double> row = {static_cast<double>(t)};
    for (std::size_t g = 0; g + 1 < a.m; ++g) {
      row.push_back(gaps[t][g]);
      means[g] += gaps[t][g] / static_cast<double>(seq.t_len());
    }
    rows.push_back(std::move(row));
  }
  io::write_csv(fs::path(a.out) / "eigengap.csv", header, rows);
  std::cout << "mean gaps:";
  for (std::size_t g = 0; g < means.size(); ++g) std::cout << " gap_" << g + 1 << "=" << means[g];
  std::cout << '\n';
  if (a.svg) {
    std::vector<std::vector<double>> series(a.m - 1);
    double hi = 0.0;
    for (std::size_t g = 0; g + 1 < a.m; ++g) {
      for (const auto& gt : gaps) {
        series[g].push_back(gt[g]);
        hi = std::max(hi, gt[g]);
      }
    }
    io::write_svg_lines(fs::path(a.out) / "eigengap.svg", "Laplacian eigengaps",
                        std::vector<std::string>(header.begin() + 1, header.end()), series, 0.0, hi);
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"Temporal spectral clustering of time-varying graphs", "tvsc"};
  app.require_subcommand(1);
  GenerateArgs gen;
  KnnArgs knn;
  ClusterArgs clu;
  EvaluateArgs ev;
  EigengapArgs eg;
  add_generate(app, gen);
  add_knn(app, knn);
  add_cluster(app, clu);
  add_evaluate(app, ev);
  add_eigengap(app, eg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand("generate-sbm")) return cmd_generate(gen);
    if (app.got_subcommand("build-knn")) return cmd_knn(knn);
    if (app.got_subcommand("cluster")) return cmd_cluster(clu);
    if (app.got_subcommand("evaluate")) return cmd_evaluate(ev);
    if (app.got_subcommand("eigengap")) return cmd_eigengap(eg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}

int run(const std::vector<std::string>& args) {
  std::vector<const char*> argv = {"tvsc"};
  for (const auto& s : args) argv.push_back(s.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace tvsc::cli
