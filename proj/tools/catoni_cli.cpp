// Command-line front end for the catoni shared library. Four subcommands:
//
//   estimate  robust mean of a sample CSV with the deviation bound
//   bounds    bound-comparison curves over an epsilon grid, as CSV
//   simulate  Monte Carlo exceedance frequencies for the deviation claims
//   regress   truncated-loss l1 regression with an excess-risk certificate
//
// Outputs are deterministic functions of the flags: numbers are printed with
// 17 significant digits and Monte Carlo trials use per-trial seeds, so a
// repeated invocation reproduces its output byte for byte at any --threads.
//
// Exit codes: 0 success, 1 internal error, 2 invalid input or a violated
// guarantee hypothesis.

#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "catoni/catoni.h"

namespace {

constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;

class CliError : public std::runtime_error {
 public:
  CliError(int code, const std::string& message) : std::runtime_error(message), code_(code) {}
  int code() const noexcept { return code_; }

 private:
  int code_;
};

[[noreturn]] void fail(catoni_status status) {
  const int code = status == CATONI_ERR_INTERNAL ? kExitInternal : kExitUsage;
  throw CliError(code, catoni_last_error());
}

void check(catoni_status status) {
  if (status != CATONI_OK) fail(status);
}

template <typename T>
T* checked(T* handle) {
  if (handle == nullptr) fail(CATONI_ERR_INVALID);
  return handle;
}

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

// Tiny ordered JSON emitter; keys appear in insertion order and every number
// carries 17 significant digits.
class JsonOut {
 public:
  JsonOut& field(const std::string& key, double value) { return raw(key, fmt17(value)); }
  JsonOut& field(const std::string& key, std::int64_t value) {
    return raw(key, std::to_string(value));
  }
  JsonOut& field(const std::string& key, bool value) { return raw(key, value ? "true" : "false"); }
  JsonOut& field_null(const std::string& key) { return raw(key, "null"); }
  JsonOut& field(const std::string& key, const std::string& text) {
    std::string quoted = "\"";
    for (char c : text) {
      if (c == '"' || c == '\\') quoted += '\\';
      quoted += c;
    }
    quoted += '"';
    return raw(key, quoted);
  }
  // value must already be valid JSON (nested object, array, ...).
  JsonOut& raw(const std::string& key, const std::string& value) {
    if (!body_.empty()) body_ += ',';
    body_ += '"' + key + "\":" + value;
    return *this;
  }

  std::string str() const { return "{" + body_ + "}"; }

 private:
  std::string body_;
};

std::string double_array_json(const double* values, std::int64_t count) {
  std::string out = "[";
  for (std::int64_t i = 0; i < count; ++i) {
    if (i > 0) out += ',';
    out += fmt17(values[i]);
  }
  return out + "]";
}

void write_output(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::fputs(payload.c_str(), stdout);
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw CliError(kExitUsage, "cannot open output file: " + out_path);
  file << payload;
}

// --law accepts a file path or an inline JSON object.
std::string load_law_text(const std::string& spec) {
  if (!spec.empty() && spec.front() == '{') return spec;
  std::ifstream file(spec, std::ios::binary);
  if (!file) throw CliError(kExitUsage, "cannot open law file: " + spec);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

struct BatchDeleter {
  void operator()(catoni_batch* b) const { catoni_batch_free(b); }
};
struct LawDeleter {
  void operator()(catoni_law* l) const { catoni_law_free(l); }
};
struct ReportDeleter {
  void operator()(catoni_bound_report* r) const { catoni_bound_report_free(r); }
};
struct ProblemDeleter {
  void operator()(catoni_problem* p) const { catoni_problem_free(p); }
};
struct RegLawDeleter {
  void operator()(catoni_reglaw* l) const { catoni_reglaw_free(l); }
};
struct StringDeleter {
  void operator()(char* s) const { catoni_string_free(s); }
};

std::string conditions_json(const catoni_conditions& cond) {
  return JsonOut()
      .field("assu_ok", cond.assu_ok != 0)
      .field("exisineq_ok", cond.exisineq_ok != 0)
      .field("exisineq2_ok", cond.exisineq2_ok != 0)
      .field("en_ok", cond.en_ok != 0)
      .str();
}

// --- estimate --------------------------------------------------------------

struct EstimateArgs {
  std::string input;
  std::string out;
  double alpha = 0.0;
  std::optional<double> v;
  std::optional<double> epsilon;
  std::optional<double> beta;
  bool estimate_v = false;
  bool header = false;
};

int run_estimate(const EstimateArgs& args) {
  std::unique_ptr<catoni_batch, BatchDeleter> batch(
      checked(catoni_batch_from_csv(args.input.c_str(), args.header ? 1 : 0)));
  const std::int64_t n = catoni_batch_size(batch.get());

  double v = 0.0;
  std::string v_source;
  if (args.v.has_value()) {
    v = *args.v;
    v_source = "given";
  } else if (args.estimate_v) {
    check(catoni_batch_plugin_v(batch.get(), args.alpha, &v));
    v_source = "plugin";
  } else {
    throw CliError(kExitUsage, "estimate needs --v or --estimate-v");
  }

  JsonOut json;
  json.field("n", n).field("alpha", args.alpha).field("v", v).field("v_source", v_source);

  double theta_hat = 0.0;
  if (args.epsilon.has_value()) {
    double beta = 0.0;
    check(catoni_tune_beta(args.alpha, v, n, *args.epsilon, &beta));
    double bound = 0.0;
    check(catoni_deviation_bound(args.alpha, v, n, *args.epsilon, &bound));
    catoni_conditions cond{};
    check(catoni_check_conditions(args.alpha, v, n, *args.epsilon, beta, &cond));
    check(catoni_solve_theta_hat(batch.get(), beta, args.alpha, 0.0, &theta_hat));
    json.field("epsilon", *args.epsilon)
        .field("beta", beta)
        .field("theta_hat", theta_hat)
        .field("bound", bound)
        .raw("conditions", conditions_json(cond));
  } else {
    // Explicit beta reproduces non-tuned studies; the deviation bound and
    // its hypotheses are defined only for the tuned beta, so they are null.
    check(catoni_solve_theta_hat(batch.get(), *args.beta, args.alpha, 0.0, &theta_hat));
    json.field("beta", *args.beta)
        .field("theta_hat", theta_hat)
        .field_null("bound")
        .field_null("conditions");
  }

  write_output(args.out, json.str() + "\n");
  return 0;
}

// --- bounds ------------------------------------------------------------------

struct BoundsArgs {
  std::string grid;
  std::string out;
  double alpha = 0.0;
  double v = 1.0;
  std::int64_t n = 0;
};

struct GridSpec {
  double start, step, end;
};

GridSpec parse_grid(const std::string& text) {
  GridSpec g{};
  const auto first = text.find(':');
  const auto second = text.find(':', first == std::string::npos ? first : first + 1);
  if (first == std::string::npos || second == std::string::npos ||
      text.find(':', second + 1) != std::string::npos) {
    throw CliError(kExitUsage, "--eps grid must be start:step:end, got '" + text + "'");
  }
  try {
    std::size_t used = 0;
    g.start = std::stod(text.substr(0, first), &used);
    g.step = std::stod(text.substr(first + 1, second - first - 1), &used);
    g.end = std::stod(text.substr(second + 1), &used);
  } catch (const std::exception&) {
    throw CliError(kExitUsage, "malformed grid '" + text + "'");
  }
  return g;
}

int run_bounds(const BoundsArgs& args) {
  const GridSpec grid = parse_grid(args.grid);
  std::unique_ptr<catoni_bound_report, ReportDeleter> report(
      checked(catoni_figure_curves(args.alpha, args.v, args.n, grid.start, grid.step, grid.end)));
  std::unique_ptr<char, StringDeleter> csv(checked(catoni_bound_report_csv(report.get())));
  write_output(args.out, csv.get());

  // First grid point where the M-estimator bound beats the empirical-mean
  // lower bound; goes to the side channel so the CSV stays clean.
  const std::int64_t rows = catoni_bound_report_rows(report.get());
  for (std::int64_t i = 0; i < rows; ++i) {
    double eps = 0.0, m_bound = 0.0, upper = 0.0, lower = 0.0;
    check(catoni_bound_report_row(report.get(), i, &eps, &m_bound, &upper, &lower));
    if (m_bound < lower) {
      std::FILE* channel = args.out.empty() ? stderr : stdout;
      std::fprintf(channel,
                   "m_estimator_bound first drops below empirical_lower at epsilon = %s "
                   "(%s < %s)\n",
                   fmt17(eps).c_str(), fmt17(m_bound).c_str(), fmt17(lower).c_str());
      break;
    }
  }
  return 0;
}

// --- simulate ------------------------------------------------------------------

struct SimulateArgs {
  std::string law;
  std::string out;
  std::int64_t n = 0;
  double epsilon = 0.0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  int threads = 1;
};

std::string resolve_law_text(const std::string& raw_text, std::int64_t n, double epsilon) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(raw_text);
  } catch (const nlohmann::json::exception& e) {
    throw CliError(kExitUsage, std::string("invalid law JSON: ") + e.what());
  }
  if (doc.is_object() && doc.value("kind", "") == "worst_case" && !doc.contains("eta")) {
    // Default eta to the empirical-mean lower-bound radius for this (n, eps),
    // the choice under which the law attains its guarantee.
    const double alpha = doc.value("alpha", 0.0);
    const double v = doc.value("v", 0.0);
    double eta = 0.0;
    check(catoni_empirical_mean_lower(alpha, v, n, epsilon, &eta));
    doc["eta"] = eta;
  }
  return doc.dump();
}

int run_simulate(const SimulateArgs& args) {
  const std::string law_text = resolve_law_text(load_law_text(args.law), args.n, args.epsilon);
  std::unique_ptr<catoni_law, LawDeleter> law(checked(catoni_law_from_json(law_text.c_str())));

  catoni_simulation_result result{};
  check(catoni_simulate(law.get(), args.n, args.epsilon, args.trials, args.seed, args.threads,
                        &result));

  std::unique_ptr<char, StringDeleter> law_json(checked(catoni_law_to_json(law.get())));
  const double trials = static_cast<double>(result.trials);
  const double cov_m = static_cast<double>(result.exceed_m_estimator) / trials;
  const double cov_u = static_cast<double>(result.exceed_empirical_upper) / trials;
  const double hit_l = static_cast<double>(result.exceed_empirical_lower) / trials;
  const auto se = [&](double p) { return std::sqrt(p * (1.0 - p) / trials); };

  JsonOut json;
  json.raw("law", law_json.get())
      .field("n", args.n)
      .field("epsilon", args.epsilon)
      .field("trials", result.trials)
      .field("seed", static_cast<std::int64_t>(args.seed))
      .field("beta", result.beta)
      .raw("thresholds", JsonOut()
                             .field("m_estimator_bound", result.m_estimator_bound)
                             .field("empirical_upper", result.empirical_upper)
                             .field("empirical_lower_eta", result.empirical_lower_eta)
                             .str())
      .field("coverage_mestimator", cov_m)
      .field("coverage_mestimator_se", se(cov_m))
      .field("coverage_empirical_upper", cov_u)
      .field("coverage_empirical_upper_se", se(cov_u))
      .field("hit_rate_lower", hit_l)
      .field("hit_rate_lower_se", se(hit_l));
  write_output(args.out, json.str() + "\n");
  return 0;
}

// --- regress -----------------------------------------------------------------

struct RegressArgs {
  std::string input;
  std::string law;
  std::string out;
  double alpha = 0.0;
  double radius = 0.0;
  double delta = 0.0;
  std::uint64_t seed = 0;
  bool header = false;
  std::int64_t mc_samples = 1000000;
};

int run_regress(const RegressArgs& args) {
  std::unique_ptr<catoni_problem, ProblemDeleter> problem(
      checked(catoni_problem_from_csv(args.input.c_str(), args.header ? 1 : 0, args.radius)));
  const std::int64_t n = catoni_problem_n(problem.get());
  const std::int64_t d = catoni_problem_d(problem.get());

  std::unique_ptr<catoni_reglaw, RegLawDeleter> reglaw;
  catoni_moments moments{};
  bool have_analytic = false;
  if (!args.law.empty()) {
    const std::string law_text = load_law_text(args.law);
    reglaw.reset(checked(catoni_reglaw_from_json(law_text.c_str())));
    if (catoni_reglaw_dim(reglaw.get()) != d) {
      throw CliError(kExitUsage, "law dimension does not match the problem's column count");
    }
    check(catoni_reglaw_moments(reglaw.get(), args.alpha, args.radius, &moments));
    have_analytic = true;
  } else {
    check(catoni_problem_empirical_moments(problem.get(), args.alpha, &moments));
  }

  std::vector<double> theta(static_cast<std::size_t>(d));
  catoni_certificate cert{};
  int budget_exhausted = 0;
  check(catoni_regress(problem.get(), args.alpha, args.delta, have_analytic ? &moments : nullptr,
                       args.seed, theta.data(), &cert, &budget_exhausted));

  double risk = 0.0;
  check(catoni_truncated_risk(problem.get(), theta.data(), cert.beta_used, args.alpha, &risk));

  JsonOut json;
  json.field("n", n)
      .field("d", d)
      .field("alpha", args.alpha)
      .field("radius_r", args.radius)
      .field("delta", args.delta)
      .field("seed", static_cast<std::int64_t>(args.seed))
      .raw("theta_hat", double_array_json(theta.data(), d))
      .field("budget_exhausted", budget_exhausted != 0)
      .field("truncated_risk", risk)
      .field("beta", cert.beta_used)
      .field("covering_log", cert.covering_log)
      .raw("certificate", JsonOut()
                              .field("bound_value", cert.bound_value)
                              .field("net_term", cert.net_term)
                              .field("moment_term", cert.moment_term)
                              .field("log_term", cert.log_term)
                              .str())
      .raw("moments", JsonOut()
                          .field("e_abs_x", moments.e_abs_x)
                          .field("e_abs_x_alpha", moments.e_abs_x_alpha)
                          .field("sup_r_alpha", moments.sup_r_alpha)
                          .field("source", std::string(have_analytic ? "analytic" : "empirical"))
                          .str());

  if (reglaw != nullptr) {
    std::vector<double> theta_star(static_cast<std::size_t>(d));
    check(catoni_reglaw_theta_star(reglaw.get(), theta_star.data()));
    double excess = 0.0;
    double se = 0.0;
    check(catoni_reglaw_l1_excess(reglaw.get(), theta.data(), theta_star.data(), args.mc_samples,
                                  args.seed ^ 0x9e3779b97f4a7c15ULL, &excess, &se));
    json.raw("realized_excess_risk", JsonOut()
                                         .field("value", excess)
                                         .field("std_error", se)
                                         .field("mc_samples", args.mc_samples)
                                         .str());
  }

  write_output(args.out, json.str() + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized Catoni M-estimation for heavy-tailed samples"};
  app.require_subcommand(1);

  EstimateArgs est;
  CLI::App* estimate = app.add_subcommand("estimate", "robust mean of a sample CSV");
  estimate->add_option("--input", est.input, "sample CSV, one value per line")->required();
  estimate->add_option("--alpha", est.alpha, "moment exponent in (1,2)")->required();
  estimate->add_option("--v", est.v, "alpha-th central moment");
  estimate->add_flag("--estimate-v", est.estimate_v,
                     "plug in the empirical alpha-th central moment (heuristic)");
  CLI::Option* est_eps = estimate->add_option("--eps", est.epsilon, "confidence parameter");
  CLI::Option* est_beta = estimate->add_option("--beta", est.beta, "explicit tuning parameter");
  est_eps->excludes(est_beta);
  estimate->add_flag("--header", est.header, "skip the first CSV line");
  estimate->add_option("--out", est.out, "output path (default stdout)");

  BoundsArgs bnd;
  CLI::App* bounds = app.add_subcommand("bounds", "bound-comparison curves as CSV");
  bounds->add_option("--alpha", bnd.alpha, "moment exponent in (1,2)")->required();
  bounds->add_option("--v", bnd.v, "alpha-th central moment")->required();
  bounds->add_option("--n", bnd.n, "sample size")->required();
  bounds->add_option("--eps", bnd.grid, "epsilon grid start:step:end")->required();
  bounds->add_option("--out", bnd.out, "output path (default stdout)");

  SimulateArgs sim;
  CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo validation of the bounds");
  simulate->add_option("--law", sim.law, "law JSON (inline or file path)")->required();
  simulate->add_option("--n", sim.n, "samples per trial")->required();
  simulate->add_option("--eps", sim.epsilon, "confidence parameter")->required();
  simulate->add_option("--trials", sim.trials, "number of trials")->required();
  simulate->add_option("--seed", sim.seed, "master seed");
  simulate->add_option("--threads", sim.threads, "worker threads (0 = all cores)");
  simulate->add_option("--out", sim.out, "output path (default stdout)");

  RegressArgs reg;
  CLI::App* regress = app.add_subcommand("regress", "truncated-loss l1 regression");
  regress->add_option("--input", reg.input, "problem CSV with columns x_1,...,x_d,y")->required();
  regress->add_option("--alpha", reg.alpha, "moment exponent in (1,2)")->required();
  regress->add_option("--radius", reg.radius, "parameter-ball radius")->required();
  regress->add_option("--delta", reg.delta, "confidence parameter in (0,1/2)")->required();
  regress->add_option("--law", reg.law, "generating law JSON for the realized excess risk");
  regress->add_option("--seed", reg.seed, "optimizer seed");
  regress->add_option("--mc-samples", reg.mc_samples, "surrogate sample count");
  regress->add_flag("--header", reg.header, "skip the first CSV line");
  regress->add_option("--out", reg.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (estimate->parsed()) {
      if (est.epsilon.has_value() == est.beta.has_value()) {
        throw CliError(kExitUsage, "estimate needs exactly one of --eps or --beta");
      }
      return run_estimate(est);
    }
    if (bounds->parsed()) return run_bounds(bnd);
    if (simulate->parsed()) return run_simulate(sim);
    if (regress->parsed()) return run_regress(reg);
  } catch (const CliError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return e.code();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return kExitInternal;
  }
  return kExitUsage;
}
