#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "gpspec/edge_list.hpp"
#include "gpspec/errors.hpp"
#include "gpspec/estimator.hpp"
#include "gpspec/evaluation.hpp"
#include "gpspec/exact_spectra.hpp"
#include "gpspec/linalg.hpp"
#include "gpspec/products.hpp"
#include "gpspec/randgen.hpp"
#include "gpspec/rng.hpp"
#include "gpspec/version.hpp"

namespace gpspec::cli {
namespace {

using nlohmann::ordered_json;
namespace fs = std::filesystem;

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

ordered_json manifest(const std::string& command, ordered_json parameters,
                      std::optional<std::uint64_t> seed) {
  ordered_json m;
  m["command"] = command;
  m["parameters"] = std::move(parameters);
  m["seed"] = seed ? ordered_json(*seed) : ordered_json(nullptr);
  m["version"] = kVersion;
  m["timestamp"] = utc_timestamp();
  return m;
}

ordered_json spectrum_json(ordered_json man, const Spectrum& s) {
  ordered_json j;
  j["manifest"] = std::move(man);
  j["kind"] = std::string(to_string(s.kind()));
  j["eigenvalues"] = s.values();
  return j;
}

ordered_json summary_json(const DistributionSummary& s) {
  return {{"count", s.count}, {"min", s.min},           {"p5", s.p5},
          {"q25", s.q25},     {"median", s.median},     {"q75", s.q75},
          {"p95", s.p95},     {"max", s.max},           {"mean", s.mean},
          {"box_low", s.box_low}, {"box_high", s.box_high}, {"outliers", s.outliers}};
}

void emit_json(const ordered_json& j, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << j.dump(2) << '\n';
}

std::ofstream open_csv(const std::string& path, const ordered_json& man) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << "# manifest: " << man.dump() << '\n';
  return f;
}

void write_trial_csv(const std::string& path, const ordered_json& man,
                     const std::vector<TrialReport>& reports) {
  auto f = open_csv(path, man);
  f << "trial,seed,rmse,t_exact_ms,t_estimate_ms\n";
  f << std::setprecision(17);
  for (std::size_t t = 0; t < reports.size(); ++t) {
    const auto& r = reports[t];
    f << t << ',' << r.config.seed << ',' << r.rmse << ','
      << r.wall_time_exact.count() * 1e3 << ',' << r.wall_time_estimate.count() * 1e3 << '\n';
  }
}

ProductKind require_kind(const std::string& name) {
  auto k = parse_product_kind(name);
  if (!k) throw ArgumentError("unknown product kind '" + name + "'");
  return *k;
}

Graph load_connected(const std::string& path, std::ostream& err, bool required) {
  Graph g = load_edge_list(path);
  if (!is_connected(g)) {
    if (required)
      throw ArgumentError(path + " is not connected; the estimate assumes a single zero "
                          "Laplacian eigenvalue per factor");
    err << "warning: " << path << " is not connected\n";
  }
  return g;
}

struct Options {
  // product / estimate / exact
  std::string kind = "direct";
  std::string g_path, h_path, graph_path, out_path;
  std::string ordering = "correlated";
  std::string matrix = "laplacian";
  std::uint64_t seed = 0;
  // evaluate
  std::string g_model, h_model;
  std::size_t trials = 100;
  std::size_t jobs = 1;
};

int cmd_product(const Options& o, std::ostream& err) {
  const ProductKind kind = require_kind(o.kind);
  const Graph g = load_connected(o.g_path, err, false);
  const Graph h = load_connected(o.h_path, err, false);
  const Graph p = product_graph(kind, g, h);
  auto man = manifest("product", {{"kind", o.kind}, {"g", o.g_path}, {"h", o.h_path}}, std::nullopt);
  save_edge_list(o.out_path, p, "manifest: " + man.dump());
  return kOk;
}

int cmd_estimate(const Options& o, std::ostream& out, std::ostream& err) {
  const ProductKind kind = require_kind(o.kind);
  if (kind == ProductKind::cartesian)
    throw ArgumentError(
        "the Cartesian product Laplacian spectrum is exact: use "
        "`exact --matrix laplacian --kind cartesian --g G --h H`");
  auto method = parse_ordering(o.ordering);
  if (!method) throw ArgumentError("unknown ordering '" + o.ordering + "'");
  const Graph g = load_connected(o.g_path, err, true);
  const Graph h = load_connected(o.h_path, err, true);
  const Spectrum s = estimate_pipeline(kind, g, h, *method, o.seed);
  auto man = manifest("estimate",
                      {{"kind", o.kind}, {"g", o.g_path}, {"h", o.h_path}, {"ordering", o.ordering}},
                      o.seed);
  emit_json(spectrum_json(std::move(man), s), o.out_path, out);
  return kOk;
}

Spectrum single_graph_spectrum(const std::string& matrix, const Graph& g) {
  if (matrix == "degree") return degree_spectrum(g);
  if (matrix == "adjacency") return adjacency_spectrum(adjacency_matrix(g));
  return laplacian_spectrum(laplacian_matrix(g));
}

int cmd_exact(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.matrix != "degree" && o.matrix != "adjacency" && o.matrix != "laplacian")
    throw ArgumentError("unknown matrix '" + o.matrix + "'");
  ordered_json params{{"matrix", o.matrix}};
  Spectrum s;
  if (!o.graph_path.empty()) {
    params["graph"] = o.graph_path;
    s = single_graph_spectrum(o.matrix, load_connected(o.graph_path, err, false));
  } else {
    if (o.g_path.empty() || o.h_path.empty())
      throw ArgumentError("exact needs --graph FILE, or --kind with --g and --h");
    const ProductKind kind = require_kind(o.kind);
    if (o.matrix == "laplacian" && kind != ProductKind::cartesian)
      throw ArgumentError("no exact formula is known for the Laplacian spectrum of a " +
                          std::string(to_string(kind)) +
                          " product; use `estimate` for a heuristic estimate");
    params["kind"] = o.kind;
    params["g"] = o.g_path;
    params["h"] = o.h_path;
    const Graph g = load_connected(o.g_path, err, false);
    const Graph h = load_connected(o.h_path, err, false);
    const Spectrum sg = single_graph_spectrum(o.matrix, g);
    const Spectrum sh = single_graph_spectrum(o.matrix, h);
    if (o.matrix == "degree")
      s = compose_degree_spectrum(kind, sg, sh);
    else if (o.matrix == "adjacency")
      s = compose_adjacency_spectrum(kind, sg, sh);
    else
      s = compose_cartesian_laplacian(sg, sh);
  }
  emit_json(spectrum_json(manifest("exact", std::move(params), std::nullopt), s), o.out_path, out);
  return kOk;
}

ordered_json evaluate_params(const std::string& sub, const Options& o) {
  return {{"subcommand", sub}, {"kind", o.kind},     {"g", o.g_model},
          {"h", o.h_model},    {"trials", o.trials}, {"jobs", o.jobs}};
}

int cmd_rmse_compare(const Options& o, std::ostream& out) {
  const ProductKind kind = require_kind(o.kind);
  auto mg = parse_model(o.g_model), mh = parse_model(o.h_model);
  auto mc = run_method_comparison(kind, mg, mh, o.trials, o.seed, o.jobs);
  auto man = manifest("evaluate", evaluate_params("rmse-compare", o), o.seed);

  ordered_json j;
  j["manifest"] = man;
  ordered_json methods;
  std::vector<std::pair<double, std::string>> order;
  for (auto m : kAllOrderings) {
    methods[std::string(to_string(m))] = summary_json(mc.rmse.at(m));
    order.emplace_back(mc.rmse.at(m).median, std::string(to_string(m)));
  }
  std::sort(order.begin(), order.end());
  j["rmse"] = methods;
  ordered_json ranking = ordered_json::array();
  for (auto& [_, name] : order) ranking.push_back(name);
  j["methods_by_median_rmse"] = ranking;

  if (!o.out_path.empty() && o.out_path != "-") {
    for (auto m : kAllOrderings)
      write_trial_csv(o.out_path + "." + std::string(to_string(m)) + ".csv", man,
                      mc.reports.at(m));
    emit_json(j, o.out_path + ".json", out);
  } else {
    emit_json(j, "", out);
  }
  return kOk;
}

int cmd_error_profile(const Options& o, std::ostream& out) {
  const ProductKind kind = require_kind(o.kind);
  auto method = parse_ordering(o.ordering);
  if (!method) throw ArgumentError("unknown ordering '" + o.ordering + "'");
  auto mg = parse_model(o.g_model), mh = parse_model(o.h_model);
  auto ep = run_error_profile(kind, mg, mh, o.trials, o.seed, o.jobs, *method);
  auto params = evaluate_params("error-profile", o);
  params["ordering"] = o.ordering;
  auto man = manifest("evaluate", params, o.seed);

  ordered_json j;
  j["manifest"] = man;
  j["fraction_within_10pct"] = ep.fraction_within_10pct;
  j["defined_count"] = ep.defined_count;
  j["within_10pct_count"] = ep.within_10pct_count;
  j["undefined_per_rank"] = ep.undefined_per_rank;
  ordered_json ranks = ordered_json::array();
  for (const auto& s : ep.per_rank) ranks.push_back(summary_json(s));
  j["per_rank"] = ranks;

  if (!o.out_path.empty() && o.out_path != "-") {
    auto f = open_csv(o.out_path + ".ranks.csv", man);
    f << "rank,p5,q25,median,q75,p95\n" << std::setprecision(17);
    for (std::size_t k = 0; k < ep.per_rank.size(); ++k) {
      const auto& s = ep.per_rank[k];
      f << (k + 1) << ',' << s.p5 << ',' << s.q25 << ',' << s.median << ',' << s.q75 << ','
        << s.p95 << '\n';
    }
    write_trial_csv(o.out_path + ".trials.csv", man, ep.reports);
    emit_json(j, o.out_path + ".json", out);
  } else {
    emit_json(j, "", out);
  }
  return kOk;
}

int cmd_correlation(const Options& o, std::ostream& out) {
  auto mg = parse_model(o.g_model), mh = parse_model(o.h_model);
  auto man = manifest("evaluate", evaluate_params("correlation", o), o.seed);
  ordered_json j;
  j["manifest"] = man;
  ordered_json trials = ordered_json::array();
  std::unique_ptr<std::ofstream> csv;
  if (!o.out_path.empty() && o.out_path != "-") {
    csv = std::make_unique<std::ofstream>(open_csv(o.out_path + ".csv", man));
    *csv << "trial,seed,coefficient\n" << std::setprecision(17);
  }
  for (std::size_t t = 0; t < o.trials; ++t) {
    const std::uint64_t seed = split_seed(o.seed, t);
    auto [g, h] = trial_factors(mg, mh, seed);
    auto res = correlation_experiment(g, h);
    auto s = summarize(res.coefficients);
    std::size_t above = 0;
    for (double c : res.coefficients) above += c > 0.8 ? 1 : 0;
    trials.push_back({{"trial", t},
                      {"seed", seed},
                      {"summary", summary_json(s)},
                      {"fraction_above_0_8", static_cast<double>(above) /
                                                 static_cast<double>(res.coefficients.size())},
                      {"excluded_pairs", res.excluded.size()}});
    if (csv)
      for (double c : res.coefficients) *csv << t << ',' << seed << ',' << c << '\n';
  }
  j["trials"] = trials;
  emit_json(j, csv ? o.out_path + ".json" : "", out);
  return kOk;
}

int cmd_exhaustive(const Options& o, std::ostream& out) {
  const ProductKind kind = require_kind(o.kind);
  auto mg = parse_model(o.g_model), mh = parse_model(o.h_model);
  auto [g, h] = trial_factors(mg, mh, o.seed);
  auto ex = exhaustive_ordering_oracle(kind, g, h);
  const double corr = rmse(exact_product_laplacian(kind, g, h),
                           estimate_pipeline(kind, g, h, OrderingMethod::correlated, 0));
  auto params = evaluate_params("exhaustive", o);
  params.erase("trials");
  ordered_json j;
  j["manifest"] = manifest("evaluate", params, o.seed);
  j["best_rmse"] = ex.best_rmse;
  j["correlated_rmse"] = corr;
  j["best_order_g"] = ex.best_order_g;
  j["best_order_h"] = ex.best_order_h;
  j["orderings_searched"] = ex.orderings_searched;
  emit_json(j, o.out_path.empty() || o.out_path == "-" ? "" : o.out_path + ".json", out);
  return kOk;
}

int cmd_timing(const Options& o, std::ostream& out) {
  const ProductKind kind = require_kind(o.kind);
  auto mg = parse_model(o.g_model), mh = parse_model(o.h_model);
  auto tr = timing_comparison(kind, mg, mh, o.seed);
  auto params = evaluate_params("timing", o);
  params.erase("trials");
  ordered_json j;
  j["manifest"] = manifest("evaluate", params, o.seed);
  j["product_nodes"] = tr.actual.size();
  j["t_exact_ms"] = tr.t_exact.count() * 1e3;
  j["t_estimate_ms"] = tr.t_estimate.count() * 1e3;
  j["speedup"] = tr.speedup;
  j["rmse"] = rmse(tr.actual, tr.estimated);
  emit_json(j, o.out_path.empty() || o.out_path == "-" ? "" : o.out_path + ".json", out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph product spectra: construction, exact composition, Laplacian estimation"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Options o;

  auto* product = app.add_subcommand("product", "Write the edge list of a product graph");
  product->add_option("--kind", o.kind, "cartesian | direct | strong")->required();
  product->add_option("--g", o.g_path, "First factor edge list")->required();
  product->add_option("--h", o.h_path, "Second factor edge list")->required();
  product->add_option("--out", o.out_path, "Output edge list")->required();

  auto* estimate = app.add_subcommand("estimate", "Estimate a direct/strong product Laplacian spectrum");
  estimate->add_option("--kind", o.kind, "direct | strong")->required();
  estimate->add_option("--g", o.g_path)->required();
  estimate->add_option("--h", o.h_path)->required();
  estimate->add_option("--ordering", o.ordering, "Eigenvalue ordering method");
  estimate->add_option("--seed", o.seed, "Seed for randomized orderings");
  estimate->add_option("--out", o.out_path, "Output JSON (default stdout)");

  auto* exact = app.add_subcommand("exact", "Exact spectrum of a graph or a composed product");
  exact->add_option("--matrix", o.matrix, "degree | adjacency | laplacian")->required();
  exact->add_option("--graph", o.graph_path, "Single graph edge list");
  exact->add_option("--kind", o.kind, "Product kind for composed spectra");
  exact->add_option("--g", o.g_path);
  exact->add_option("--h", o.h_path);
  exact->add_option("--out", o.out_path, "Output JSON (default stdout)");

  auto* evaluate = app.add_subcommand("evaluate", "Run an evaluation experiment");
  std::string sub;
  evaluate->add_option("experiment", sub, "rmse-compare | error-profile | correlation | exhaustive | timing")
      ->required()
      ->check(CLI::IsMember({"rmse-compare", "error-profile", "correlation", "exhaustive", "timing"}));
  evaluate->add_option("--kind", o.kind, "Product kind")->capture_default_str();
  evaluate->add_option("--g", o.g_model, "Model for G: er:N:M or ba:N:m")->required();
  evaluate->add_option("--h", o.h_model, "Model for H")->required();
  auto* trials_opt = evaluate->add_option("--trials", o.trials, "Independent trials");
  evaluate->add_option("--seed", o.seed, "Base seed")->required();
  evaluate->add_option("--jobs", o.jobs, "Worker threads")->capture_default_str();
  evaluate->add_option("--ordering", o.ordering, "Ordering for error-profile")->capture_default_str();
  evaluate->add_option("--out", o.out_path, "Output path prefix (default: JSON to stdout)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (*product) return cmd_product(o, err);
    if (*estimate) return cmd_estimate(o, out, err);
    if (*exact) return cmd_exact(o, out, err);
    if (sub == "correlation" && trials_opt->count() == 0) o.trials = 5;
    if (o.trials < 1) throw ArgumentError("--trials must be at least 1");
    if (sub == "rmse-compare") return cmd_rmse_compare(o, out);
    if (sub == "error-profile") return cmd_error_profile(o, out);
    if (sub == "correlation") return cmd_correlation(o, out);
    if (sub == "exhaustive") return cmd_exhaustive(o, out);
    return cmd_timing(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InfeasibleConfiguration& e) {
    err << "error: " << e.what() << '\n';
    return kInfeasible;
  } catch (const GenerationError& e) {
    err << "error: " << e.what() << '\n';
    return kInfeasible;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return kNumericalError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace gpspec::cli
