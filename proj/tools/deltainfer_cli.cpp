// Command-line front end for the delta-method / influence-function toolkit.
//
// Layout: one subcommand per estimand under `infer`, the attributable-
// fraction diagnostic under `diagnose af`, and the convergence experiment
// under `experiment clt`. Results go to stdout in json, csv or plain form;
// errors go to stderr with a machine-readable category and a distinct exit
// code per category.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "deltainfer/deltainfer.hpp"

namespace {

using namespace deltainfer;

struct CommonOptions {
  std::string input;
  std::string format = "json";
  double level = 0.95;
  std::string convention = "unbiased";
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::size_t bootstrap_b = 0;
  unsigned threads = 1;
  std::string export_if;
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_input = true) {
  if (with_input)
    cmd->add_option("--input", opt.input, "CSV file (header row, numeric cells)")
        ->required();
  cmd->add_option("--format", opt.format, "json|csv|plain");
  cmd->add_option("--level", opt.level, "confidence level (default 0.95)");
  cmd->add_option("--variance-convention", opt.convention, "unbiased|population");
  cmd->add_option("--seed", opt.seed, "RNG seed")->each([&opt](const std::string&) {
    opt.seed_set = true;
  });
  cmd->add_option("--bootstrap", opt.bootstrap_b, "bootstrap replicates (B >= 200)");
  cmd->add_option("--threads", opt.threads, "worker threads for resampling");
  cmd->add_option("--export-if", opt.export_if,
                  "write the influence curve to this CSV path");
}

VarianceConvention parse_convention(const std::string& name) {
  if (name == "unbiased") return VarianceConvention::Unbiased;
  if (name == "population") return VarianceConvention::Population;
  throw InvalidArgument("unknown variance convention: " + name);
}

std::vector<double> parse_profile(const std::string& text) {
  std::vector<double> values;
  std::string cell;
  std::istringstream stream(text);
  while (std::getline(stream, cell, ',')) {
    try {
      values.push_back(std::stod(cell));
    } catch (const std::exception&) {
      throw InvalidArgument("profile entry '" + cell + "' is not numeric");
    }
  }
  if (values.empty()) throw InvalidArgument("empty profile");
  return values;
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << body;
}

void emit(const InferenceResult& result, const CommonOptions& opt,
          const std::optional<BootstrapResult>& boot) {
  const std::optional<std::uint64_t> seed =
      opt.seed_set ? std::optional<std::uint64_t>(opt.seed) : std::nullopt;
  switch (parse_format(opt.format)) {
    case OutputFormat::Json:
      std::cout << to_json(result, boot, seed) << "\n";
      break;
    case OutputFormat::Csv:
      std::cout << to_csv(result, boot);
      break;
    case OutputFormat::Plain:
      std::cout << to_plain(result, boot);
      break;
  }
  for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
}

/// Shared tail of every sample-based `infer` subcommand: inference,
/// optional bootstrap, optional influence-curve export, emission.
void run_sample_estimand(const EstimandSpec& spec, const Sample& sample,
                         const CommonOptions& opt) {
  const InferenceResult result = run_inference(spec, sample);
  std::optional<BootstrapResult> boot;
  if (opt.bootstrap_b > 0)
    boot = bootstrap(sample, spec, opt.bootstrap_b, opt.seed, opt.threads);
  if (!opt.export_if.empty()) {
    if (!result.influence)
      throw InvalidArgument("this estimand does not produce an influence curve");
    write_file(opt.export_if, influence_curve_csv(*result.influence));
  }
  emit(result, opt, boot);
}

int dispatch(CLI::App& app, int argc, char** argv) {
  // --- infer ---------------------------------------------------------------
  CLI::App* infer = app.add_subcommand("infer", "estimate, SE and Wald CI");
  infer->require_subcommand(1);

  auto mean_opt = std::make_shared<CommonOptions>();
  auto mean_col = std::make_shared<std::string>();
  CLI::App* mean_cmd = infer->add_subcommand("mean", "sample mean");
  add_common(mean_cmd, *mean_opt);
  mean_cmd->add_option("--column", *mean_col, "column name (default: first)");
  mean_cmd->callback([mean_opt, mean_col] {
    const CsvTable table = read_csv(mean_opt->input);
    EstimandSpec spec;
    spec.kind = EstimandKind::Mean;
    spec.level = mean_opt->level;
    spec.convention = parse_convention(mean_opt->convention);
    const Sample sample =
        table.select({mean_col->empty() ? table.headers.front() : *mean_col});
    run_sample_estimand(spec, sample, *mean_opt);
  });

  auto ratio_opt = std::make_shared<CommonOptions>();
  auto ratio_x = std::make_shared<std::string>();
  auto ratio_y = std::make_shared<std::string>();
  CLI::App* ratio_cmd =
      infer->add_subcommand("ratio-of-means", "ratio of two paired means");
  add_common(ratio_cmd, *ratio_opt);
  ratio_cmd->add_option("--x", *ratio_x, "numerator column (default: first)");
  ratio_cmd->add_option("--y", *ratio_y, "denominator column (default: second)");
  ratio_cmd->callback([ratio_opt, ratio_x, ratio_y] {
    const CsvTable table = read_csv(ratio_opt->input);
    if (table.headers.size() < 2)
      throw InvalidArgument("ratio-of-means needs two columns");
    EstimandSpec spec;
    spec.kind = EstimandKind::RatioOfMeans;
    spec.level = ratio_opt->level;
    spec.convention = parse_convention(ratio_opt->convention);
    const Sample sample =
        table.select({ratio_x->empty() ? table.headers[0] : *ratio_x,
                      ratio_y->empty() ? table.headers[1] : *ratio_y});
    run_sample_estimand(spec, sample, *ratio_opt);
  });

  auto rr_opt = std::make_shared<CommonOptions>();
  auto rr_vals = std::make_shared<std::vector<double>>(std::vector<double>(2, 0.0));
  auto rr_ns = std::make_shared<std::vector<std::size_t>>(std::vector<std::size_t>(2, 0));
  CLI::App* rr_cmd =
      infer->add_subcommand("risk-ratio", "ratio of two independent proportions");
  add_common(rr_cmd, *rr_opt, /*with_input=*/false);
  rr_cmd->add_option("--p1", (*rr_vals)[0], "proportion, arm 1")->required();
  rr_cmd->add_option("--n1", (*rr_ns)[0], "size, arm 1")->required();
  rr_cmd->add_option("--p2", (*rr_vals)[1], "proportion, arm 2")->required();
  rr_cmd->add_option("--n2", (*rr_ns)[1], "size, arm 2")->required();
  rr_cmd->callback([rr_opt, rr_vals, rr_ns] {
    if (rr_opt->bootstrap_b > 0)
      throw InvalidArgument("risk-ratio is summary-based; bootstrap needs row data");
    EstimandSpec spec;
    spec.kind = EstimandKind::RiskRatio;
    spec.level = rr_opt->level;
    const InferenceResult result = risk_ratio_inference(
        (*rr_vals)[0], (*rr_ns)[0], (*rr_vals)[1], (*rr_ns)[1], spec);
    emit(result, *rr_opt, std::nullopt);
  });

  auto q_opt = std::make_shared<CommonOptions>();
  auto q_col = std::make_shared<std::string>();
  auto q_p = std::make_shared<double>(0.5);
  auto q_bw = std::make_shared<double>(0.0);
  CLI::App* q_cmd = infer->add_subcommand("quantile", "order-p quantile via KDE");
  add_common(q_cmd, *q_opt);
  q_cmd->add_option("--p", *q_p, "quantile order in (0,1)")->required();
  q_cmd->add_option("--bandwidth", *q_bw, "KDE bandwidth (default: rule)");
  q_cmd->add_option("--column", *q_col, "column name (default: first)");
  q_cmd->callback([q_opt, q_col, q_p, q_bw] {
    const CsvTable table = read_csv(q_opt->input);
    EstimandSpec spec;
    spec.kind = EstimandKind::Quantile;
    spec.level = q_opt->level;
    spec.convention = parse_convention(q_opt->convention);
    spec.quantile_p = *q_p;
    spec.bandwidth = *q_bw;
    const Sample sample =
        table.select({q_col->empty() ? table.headers.front() : *q_col});
    run_sample_estimand(spec, sample, *q_opt);
  });

  auto corr_opt = std::make_shared<CommonOptions>();
  auto corr_x = std::make_shared<std::string>();
  auto corr_y = std::make_shared<std::string>();
  CLI::App* corr_cmd = infer->add_subcommand("correlation", "Pearson correlation");
  add_common(corr_cmd, *corr_opt);
  corr_cmd->add_option("--x", *corr_x, "first column (default: first)");
  corr_cmd->add_option("--y", *corr_y, "second column (default: second)");
  corr_cmd->callback([corr_opt, corr_x, corr_y] {
    const CsvTable table = read_csv(corr_opt->input);
    if (table.headers.size() < 2) throw InvalidArgument("correlation needs two columns");
    EstimandSpec spec;
    spec.kind = EstimandKind::Correlation;
    spec.level = corr_opt->level;
    spec.convention = parse_convention(corr_opt->convention);
    const Sample sample =
        table.select({corr_x->empty() ? table.headers[0] : *corr_x,
                      corr_y->empty() ? table.headers[1] : *corr_y});
    run_sample_estimand(spec, sample, *corr_opt);
  });

  auto reg_opt = std::make_shared<CommonOptions>();
  auto reg_outcome = std::make_shared<std::string>();
  auto reg_covariates = std::make_shared<std::string>();
  auto reg_a = std::make_shared<std::string>();
  auto reg_b = std::make_shared<std::string>();
  CLI::App* reg_cmd = infer->add_subcommand(
      "regression-rr", "risk ratio between two covariate profiles of a logit fit");
  add_common(reg_cmd, *reg_opt);
  reg_cmd->add_option("--outcome", *reg_outcome, "binary outcome column (default: first)");
  reg_cmd->add_option("--covariates", *reg_covariates,
                      "comma-separated covariate columns (default: the rest)");
  reg_cmd->add_option("--profile-a", *reg_a, "numerator profile, intercept first")
      ->required();
  reg_cmd->add_option("--profile-b", *reg_b, "denominator profile, intercept first")
      ->required();
  reg_cmd->callback([reg_opt, reg_outcome, reg_covariates, reg_a, reg_b] {
    const CsvTable table = read_csv(reg_opt->input);
    std::vector<std::string> columns;
    columns.push_back(reg_outcome->empty() ? table.headers.front() : *reg_outcome);
    if (reg_covariates->empty()) {
      for (const auto& h : table.headers)
        if (h != columns.front()) columns.push_back(h);
    } else {
      std::string cell;
      std::istringstream stream(*reg_covariates);
      while (std::getline(stream, cell, ',')) columns.push_back(cell);
    }
    EstimandSpec spec;
    spec.kind = EstimandKind::RegressionRr;
    spec.level = reg_opt->level;
    spec.profile_a = parse_profile(*reg_a);
    spec.profile_b = parse_profile(*reg_b);
    run_sample_estimand(spec, table.select(columns), *reg_opt);
  });

  // --- diagnose ------------------------------------------------------------
  CLI::App* diagnose = app.add_subcommand("diagnose", "delta-method validity checks");
  diagnose->require_subcommand(1);

  auto af_opt = std::make_shared<CommonOptions>();
  auto af_theta = std::make_shared<double>(0.0);
  auto af_se = std::make_shared<double>(0.0);
  auto af_x = std::make_shared<double>(1.0);
  auto af_draws = std::make_shared<std::size_t>(10000);
  CLI::App* af_cmd = diagnose->add_subcommand(
      "af", "attributable-fraction linearization vs Monte-Carlo SE");
  add_common(af_cmd, *af_opt, /*with_input=*/false);
  af_cmd->add_option("--theta", *af_theta, "estimated parameter")->required();
  af_cmd->add_option("--se", *af_se, "its standard error")->required();
  af_cmd->add_option("--x", *af_x, "exposure level (> 0)")->required();
  af_cmd->add_option("--draws", *af_draws, "Monte-Carlo draws");
  af_cmd->callback([af_opt, af_theta, af_se, af_x, af_draws] {
    EstimandSpec spec;
    spec.kind = EstimandKind::AttributableFraction;
    spec.af_draws = *af_draws;
    spec.af_seed = af_opt->seed;
    const AfDiagnostic d =
        attributable_fraction_diagnostic(*af_theta, *af_se, *af_x, spec);
    switch (parse_format(af_opt->format)) {
      case OutputFormat::Json:
        std::cout << to_json(d) << "\n";
        break;
      default:
        std::cout << to_plain(d);
        break;
    }
    if (d.warning)
      std::cerr << "warning: delta-method SE diverges from the Monte-Carlo SE "
                   "(ratio "
                << d.divergence_ratio << ")\n";
  });

  // --- experiment ----------------------------------------------------------
  CLI::App* experiment = app.add_subcommand("experiment", "simulation studies");
  experiment->require_subcommand(1);

  auto clt_opt = std::make_shared<CommonOptions>();
  auto clt_dist = std::make_shared<std::string>("poisson");
  auto clt_param = std::make_shared<double>(1.0);
  auto clt_ns = std::make_shared<std::vector<std::size_t>>();
  auto clt_reps = std::make_shared<std::size_t>(2000);
  auto clt_export = std::make_shared<std::string>();
  CLI::App* clt_cmd = experiment->add_subcommand(
      "clt", "KS distance of standardized means from the normal limit");
  add_common(clt_cmd, *clt_opt, /*with_input=*/false);
  clt_cmd->add_option("--distribution", *clt_dist, "poisson|uniform|bernoulli");
  clt_cmd->add_option("--param", *clt_param, "rate (poisson) or p (bernoulli)");
  clt_cmd->add_option("--n", *clt_ns, "sample sizes")->required()->delimiter(',');
  clt_cmd->add_option("--replicates", *clt_reps, "draws of Z_n per sample size");
  clt_cmd->add_option("--export", *clt_export, "write replicate-level CSV here");
  clt_cmd->callback([clt_opt, clt_dist, clt_param, clt_ns, clt_reps, clt_export] {
    const CltDistribution dist = CltDistribution::parse(*clt_dist, *clt_param);
    const CltReport report =
        clt_experiment(dist, *clt_ns, *clt_reps, clt_opt->seed, clt_opt->threads);
    if (!clt_export->empty()) write_file(*clt_export, to_csv(report));
    switch (parse_format(clt_opt->format)) {
      case OutputFormat::Json:
        std::cout << to_json(report) << "\n";
        break;
      case OutputFormat::Csv:
        std::cout << to_csv(report);
        break;
      case OutputFormat::Plain:
        std::cout << to_plain(report);
        break;
    }
  });

  app.require_subcommand(1);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // usage errors share one exit category
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"delta-method / influence-function inference toolkit"};
  try {
    return dispatch(app, argc, argv);
  } catch (const Error& e) {
    std::cerr << "error category=" << e.category() << ": " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error category=internal: " << e.what() << "\n";
    return 1;
  }
}
