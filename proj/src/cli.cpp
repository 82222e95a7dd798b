// Copyright 2026 The umax Authors
// SPDX-License-Identifier: Apache-2.0

#include "umax/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "umax/constants.hpp"
#include "umax/stats.hpp"
#include "umax/verify.hpp"

namespace umax::cli {
namespace {

class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::array<std::pair<Command, const char*>, 7> kCommands = {{
    {Command::Constants, "constants"},
    {Command::Simulate, "simulate"},
    {Command::Tail, "tail"},
    {Command::Bound, "bound"},
    {Command::Rate, "rate"},
    {Command::Search, "search"},
    {Command::Verify, "verify"},
}};

std::optional<MethodChoice> parse_method(const std::string& s) {
  if (s == "brute") return MethodChoice::BruteForce;
  if (s == "dp") return MethodChoice::CyclicDP;
  if (s == "auto") return MethodChoice::Auto;
  return std::nullopt;
}

// Raw option storage shared by all subcommands.
struct Raw {
  std::string kind, method = "auto", format = "json", out;
  int m = 0;
  std::vector<long long> n;
  long long reps = 0, trials = 0, completions = 1;
  double s = 0.0, t = 0.0;
  int r = 0;
  std::uint64_t seed = 0;
  int threads = 0;
  int cap = kDefaultBruteForceCap;
  std::vector<double> angles;
  bool json = false;
};

void add_common(CLI::App* sub, Raw& raw) {
  sub->add_option("--seed", raw.seed, "RNG seed")->default_val(0);
  sub->add_option("--threads", raw.threads, "worker threads (0 = auto)");
  sub->add_option("--out", raw.out, "report destination (default stdout)");
  sub->add_option("--format", raw.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

CLI::Option* add_kind(CLI::App* sub, Raw& raw) {
  return sub->add_option("--kind", raw.kind, "ins-peri | ins-area | circ-peri | circ-area")
      ->check(CLI::IsMember({"ins-peri", "ins-area", "circ-peri", "circ-area"}));
}

CLI::Option* add_method(CLI::App* sub, Raw& raw) {
  return sub->add_option("--method", raw.method, "brute | dp | auto")
      ->check(CLI::IsMember({"brute", "dp", "auto"}));
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

double now_seconds() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

Json law_json(const LimitLaw& law) {
  Json j;
  j["M"] = law.extremal_value;
  j["K"] = law.constant;
  j["beta"] = law.weibull_exponent;
  j["gamma"] = law.scaling_exponent;
  return j;
}

std::string num(double v) { return format_double(v); }
std::string num(long long v) { return std::to_string(v); }

void run_constants(const Invocation& inv, RunReport& rep) {
  std::vector<KernelKind> kinds(kAllKinds.begin(), kAllKinds.end());
  if (inv.kind) kinds = {*inv.kind};
  const int m = *inv.m;
  rep.results["m"] = m;
  rep.results["kinds"] = Json::array();
  rep.csv_header = {"kind", "m", "M", "K", "K_asymptotic", "beta", "gamma", "tail_coefficient"};
  for (KernelKind kind : kinds) {
    const LimitLaw law = LimitLaw::make(kind, m);
    Json row;
    row["kind"] = std::string(to_string(kind));
    row["orientation"] = law.orientation == Orientation::Max ? "max" : "min";
    row["M"] = law.extremal_value;
    row["K"] = law.constant;
    row["K_asymptotic"] = asymptotic_constant(kind, m);
    row["beta"] = law.weibull_exponent;
    row["gamma"] = law.scaling_exponent;
    row["tail_coefficient"] = tail_coefficient(kind, m);
    rep.results["kinds"].push_back(row);
    rep.csv_rows.push_back({std::string(to_string(kind)), num(static_cast<long long>(m)),
                            num(law.extremal_value), num(law.constant),
                            num(asymptotic_constant(kind, m)), num(law.weibull_exponent),
                            num(law.scaling_exponent), num(tail_coefficient(kind, m))});
  }
}

ExperimentConfig experiment_config(const Invocation& inv, long long n, double budget) {
  ExperimentConfig cfg;
  cfg.kind = *inv.kind;
  cfg.m = *inv.m;
  cfg.n = static_cast<int>(n);
  cfg.replications = *inv.reps;
  cfg.seed = inv.seed;
  cfg.method = inv.method;
  cfg.threads = inv.threads;
  cfg.budget = budget;
  return cfg;
}

void run_simulate(const Invocation& inv, double budget, RunReport& rep) {
  const ExperimentConfig cfg = experiment_config(inv, inv.n.front(), budget);
  const std::vector<double> stats = run_experiment(cfg);
  const LimitLaw law = LimitLaw::make(cfg.kind, cfg.m);
  const EmpiricalDistribution emp(stats);
  const auto sorted = emp.sorted_values();
  double mean = 0.0;
  for (double v : sorted) mean += v;
  mean /= static_cast<double>(sorted.size());
  const double median = sorted[sorted.size() / 2];
  const double ks = ks_statistic(emp, law);
  const std::string method(to_string(resolve_method(cfg)));

  rep.results["method"] = method;
  rep.results["replications"] = cfg.replications;
  rep.results["limit"] = law_json(law);
  rep.results["summary"] = {{"mean", mean}, {"median", median},
                            {"min", sorted.front()}, {"max", sorted.back()}};
  rep.results["ks_distance"] = ks;
  if (cfg.replications > 1000) {
    rep.samples = stats;
    rep.write_sidecar = inv.out.has_value();
    rep.results["samples_file"] =
        inv.out ? Json(*inv.out + ".samples.csv") : Json(nullptr);
  } else {
    rep.results["samples"] = stats;
  }
  rep.csv_header = {"kind", "m", "n", "replications", "method", "mean", "median", "min", "max",
                    "ks_distance"};
  rep.csv_rows.push_back({std::string(to_string(cfg.kind)), num(static_cast<long long>(cfg.m)),
                          num(static_cast<long long>(cfg.n)), num(cfg.replications), method,
                          num(mean), num(median), num(sorted.front()), num(sorted.back()),
                          num(ks)});
}

void run_tail(const Invocation& inv, RunReport& rep) {
  const TailEstimate e =
      estimate_tail(*inv.kind, *inv.m, *inv.s, *inv.trials, inv.seed, inv.threads);
  Json& j = rep.results;
  j["kind"] = std::string(to_string(e.kind));
  j["m"] = e.m;
  j["s"] = e.s;
  j["trials"] = e.trials;
  j["hits"] = e.hits;
  j["p_hat"] = e.p_hat;
  j["ci_low"] = e.ci_low;
  j["ci_high"] = e.ci_high;
  j["level"] = e.level;
  j["lemma_ratio"] = e.lemma_ratio;
  j["lemma_target"] = e.lemma_target;
  j["warning"] = e.warning.empty() ? Json(nullptr) : Json(e.warning);
  rep.csv_header = {"kind", "m", "s", "trials", "hits", "p_hat",
                    "ci_low", "ci_high", "lemma_ratio", "lemma_target"};
  rep.csv_rows.push_back({std::string(to_string(e.kind)), num(static_cast<long long>(e.m)),
                          num(e.s), num(e.trials), num(e.hits), num(e.p_hat), num(e.ci_low),
                          num(e.ci_high), num(e.lemma_ratio), num(e.lemma_target)});
}

Json overlap_json(const OverlapEstimate& e) {
  Json j;
  j["r"] = e.r;
  j["trials"] = e.trials;
  j["completions"] = e.completions;
  j["first_hits"] = e.first_hits;
  j["joint_hits"] = e.joint_hits;
  j["p_hat"] = e.p_hat;
  j["p_ci"] = {e.p_ci_low, e.p_ci_high};
  j["tau_hat"] = e.tau_hat;
  j["joint_hat"] = e.joint_hat;
  j["lambda_hat"] = e.lambda_hat;
  j["lambda_ci"] = {e.lambda_ci_low, e.lambda_ci_high};
  j["p_zero"] = e.p_zero;
  return j;
}

void run_bound(const Invocation& inv, RunReport& rep) {
  const int m = *inv.m;
  const long long n = inv.n.front();
  std::vector<int> rs;
  if (inv.r) {
    rs = {*inv.r};
  } else {
    for (int r = 1; r < m; ++r) rs.push_back(r);
  }
  std::vector<OverlapEstimate> overlaps;
  for (int r : rs) {
    overlaps.push_back(estimate_overlap(*inv.kind, m, n, *inv.t, r, *inv.trials, inv.seed,
                                        inv.completions, inv.threads));
  }
  const LimitLaw law = LimitLaw::make(*inv.kind, m);
  rep.results["kind"] = std::string(to_string(*inv.kind));
  rep.results["m"] = m;
  rep.results["n"] = n;
  rep.results["t"] = *inv.t;
  rep.results["z"] = overlaps.front().z;
  rep.results["lambda_limit"] = std::pow(*inv.t, law.weibull_exponent) / law.constant;
  rep.results["overlaps"] = Json::array();
  for (const auto& e : overlaps) rep.results["overlaps"].push_back(overlap_json(e));

  std::optional<BoundReport> bound;
  if (!inv.r) {
    std::vector<double> taus;
    for (const auto& e : overlaps) taus.push_back(e.tau_hat);
    bound = lao_mayer_bound(n, m, overlaps.front().z, overlaps.front().p_hat, taus);
    Json b;
    b["lambda_hat"] = bound->lambda_hat;
    b["term_count"] = bound->term_count;
    b["per_r_terms"] = bound->per_r_terms;
    b["bound"] = bound->bound;
    b["poisson_approx"] = bound->poisson_approx;
    rep.results["bound"] = b;
  } else {
    rep.results["bound"] = nullptr;
  }
  rep.csv_header = {"kind", "m", "n", "t", "z", "r", "p_hat", "tau_hat", "joint_hat",
                    "lambda_hat", "per_r_term", "bound", "poisson_approx"};
  for (std::size_t i = 0; i < overlaps.size(); ++i) {
    const auto& e = overlaps[i];
    rep.csv_rows.push_back(
        {std::string(to_string(e.kind)), num(static_cast<long long>(m)), num(n), num(e.t),
         num(e.z), num(static_cast<long long>(e.r)), num(e.p_hat), num(e.tau_hat),
         num(e.joint_hat), num(e.lambda_hat),
         bound ? num(bound->per_r_terms[e.r - 1]) : "", bound ? num(bound->bound) : "",
         bound ? num(bound->poisson_approx) : ""});
  }
}

void run_rate(const Invocation& inv, double budget, RunReport& rep) {
  std::vector<std::pair<double, double>> pairs;
  const LimitLaw law = LimitLaw::make(*inv.kind, *inv.m);
  for (long long n : inv.n) {
    const std::vector<double> stats = run_experiment(experiment_config(inv, n, budget));
    pairs.emplace_back(static_cast<double>(n), ks_statistic(EmpiricalDistribution(stats), law));
  }
  const RateFit fit = rate_fit(pairs);
  rep.results["pairs"] = Json::array();
  for (const auto& [n, d] : fit.pairs) {
    rep.results["pairs"].push_back({{"n", static_cast<long long>(n)}, {"ks_distance", d}});
  }
  rep.results["exponent"] = fit.exponent;
  rep.results["intercept"] = fit.intercept;
  rep.results["r_squared"] = fit.r_squared;
  rep.csv_header = {"n", "ks_distance", "exponent", "intercept", "r_squared"};
  for (const auto& [n, d] : fit.pairs) {
    rep.csv_rows.push_back({num(static_cast<long long>(n)), num(d), num(fit.exponent),
                            num(fit.intercept), num(fit.r_squared)});
  }
}

void run_search(const Invocation& inv, RunReport& rep) {
  const int n = static_cast<int>(inv.angles.size());
  const bool brute = inv.method == MethodChoice::BruteForce ||
                     (inv.method == MethodChoice::Auto && n <= inv.cap);
  const SearchResult res = brute ? umax_bruteforce(*inv.kind, inv.angles, *inv.m, inv.cap)
                                 : umax_cyclic_dp(*inv.kind, inv.angles, *inv.m);
  rep.results["kind"] = std::string(to_string(*inv.kind));
  rep.results["m"] = *inv.m;
  rep.results["n"] = n;
  rep.results["method"] = std::string(to_string(res.method));
  rep.results["value"] = res.value;
  rep.results["deficit"] = res.deficit;
  rep.results["subset"] = res.subset;
  rep.results["sorted_angles"] = sorted_sample(inv.angles);
  std::vector<std::string> idx;
  for (int i : res.subset) idx.push_back(std::to_string(i));
  rep.csv_header = {"kind", "m", "n", "method", "value", "deficit", "subset"};
  rep.csv_rows.push_back({std::string(to_string(*inv.kind)),
                          num(static_cast<long long>(*inv.m)),
                          num(static_cast<long long>(n)), std::string(to_string(res.method)),
                          num(res.value), num(res.deficit), join(idx, ' ')});
}

bool run_verify(const Invocation& inv, RunReport& rep) {
  const auto suites = run_invariant_suites(inv.seed);
  bool all = true;
  rep.results["suites"] = Json::array();
  rep.csv_header = {"name", "passed", "detail"};
  for (const auto& s : suites) {
    all = all && s.passed;
    rep.results["suites"].push_back({{"name", s.name}, {"passed", s.passed}, {"detail", s.detail}});
    rep.csv_rows.push_back({s.name, s.passed ? "true" : "false", s.detail});
  }
  rep.results["all_passed"] = all;
  return all;
}

}  // namespace

std::string_view to_string(Command command) {
  for (const auto& [c, name] : kCommands) {
    if (c == command) return name;
  }
  return "unknown";
}

Invocation parse_invocation(std::span<const std::string> args) {
  CLI::App app{"umax: U-max statistics of random polygons on the unit circle", "umax"};
  app.require_subcommand(1, 1);
  Raw raw;

  auto* constants = app.add_subcommand("constants", "limit constants per kernel kind");
  add_kind(constants, raw);
  constants->add_option("--m", raw.m, "polygon order")->required();
  constants->add_flag("--json", raw.json, "JSON output (the default)");
  add_common(constants, raw);

  auto* simulate = app.add_subcommand("simulate", "replicate the normalised statistic");
  add_kind(simulate, raw)->required();
  simulate->add_option("--m", raw.m)->required();
  simulate->add_option("--n", raw.n, "sample size")->required()->expected(1);
  simulate->add_option("--reps", raw.reps)->required();
  add_method(simulate, raw);
  add_common(simulate, raw);

  auto* tail = app.add_subcommand("tail", "tail probability P{deficit <= s}");
  add_kind(tail, raw)->required();
  tail->add_option("--m", raw.m)->required();
  tail->add_option("--s", raw.s, "tail width")->required();
  tail->add_option("--trials", raw.trials)->required();
  add_common(tail, raw);

  auto* bound = app.add_subcommand("bound", "overlap estimates and the Poisson bound");
  add_kind(bound, raw)->required();
  bound->add_option("--m", raw.m)->required();
  bound->add_option("--n", raw.n)->required()->expected(1);
  bound->add_option("--t", raw.t, "normalised threshold")->required();
  bound->add_option("--trials", raw.trials)->required();
  bound->add_option("--r", raw.r, "single overlap size (skips the bound)");
  bound->add_option("--completions", raw.completions, "second-kernel draws per first hit");
  add_common(bound, raw);

  auto* rate = app.add_subcommand("rate", "KS distance across sample sizes and log-log fit");
  add_kind(rate, raw)->required();
  rate->add_option("--m", raw.m)->required();
  rate->add_option("--n", raw.n, "comma-separated sample sizes")->required()->delimiter(',');
  rate->add_option("--reps", raw.reps)->required();
  add_method(rate, raw);
  add_common(rate, raw);

  auto* search = app.add_subcommand("search", "extremal subset of explicit angles");
  add_kind(search, raw)->required();
  search->add_option("--m", raw.m)->required();
  search->add_option("--angles", raw.angles, "comma-separated radians")
      ->required()
      ->delimiter(',');
  search->add_option("--cap", raw.cap, "brute-force size cap");
  add_method(search, raw);
  add_common(search, raw);

  auto* verify = app.add_subcommand("verify", "run the built-in invariant suites");
  add_common(verify, raw);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    std::string what = e.what();
    for (CLI::App* sub : app.get_subcommands()) {
      if (!sub->parsed()) continue;
      what += "\n" + sub->help();
    }
    throw UsageError(what);
  }

  Invocation inv;
  CLI::App* chosen = app.get_subcommands().front();
  for (const auto& [c, name] : kCommands) {
    if (chosen->get_name() == name) inv.command = c;
  }
  auto given = [&](const char* flag) {
    const CLI::Option* opt = chosen->get_option_no_throw(flag);
    return opt != nullptr && opt->count() > 0;
  };

  if (!raw.kind.empty()) inv.kind = parse_kernel_kind(raw.kind);
  if (given("--m")) {
    require(raw.m >= 3, "constraint violated: m >= 3 (got m=" + std::to_string(raw.m) + ")");
    inv.m = raw.m;
  }
  if (given("--n")) {
    inv.n = raw.n;
    for (long long n : inv.n) {
      require(n >= *inv.m, "constraint violated: n >= m (got n=" + std::to_string(n) +
                               ", m=" + std::to_string(*inv.m) + ")");
    }
    if (inv.command == Command::Rate) {
      require(inv.n.size() >= 3, "constraint violated: rate needs at least 3 sample sizes");
    }
  }
  if (given("--reps")) {
    require(raw.reps >= 1, "constraint violated: reps >= 1");
    inv.reps = raw.reps;
  }
  if (given("--trials")) {
    require(raw.trials >= 1, "constraint violated: trials >= 1");
    inv.trials = raw.trials;
  }
  if (given("--s")) {
    require(raw.s > 0.0, "constraint violated: s > 0");
    inv.s = raw.s;
  }
  if (given("--t")) {
    require(raw.t > 0.0, "constraint violated: t > 0");
    inv.t = raw.t;
  }
  if (given("--r")) {
    require(raw.r >= 1 && raw.r <= *inv.m - 1, "constraint violated: 1 <= r <= m-1");
    inv.r = raw.r;
  }
  if (inv.command == Command::Bound) {
    require(inv.n.front() >= 2LL * *inv.m - inv.r.value_or(1),
            "constraint violated: n >= 2m - r");
  }
  if (given("--completions")) {
    require(raw.completions >= 1, "constraint violated: completions >= 1");
    inv.completions = raw.completions;
  }
  if (given("--cap")) {
    require(raw.cap >= 1, "constraint violated: cap >= 1");
    inv.cap = raw.cap;
  }
  if (given("--angles")) {
    inv.angles = raw.angles;
    require(static_cast<long long>(inv.angles.size()) >= *inv.m,
            "constraint violated: number of angles >= m");
  }
  require(raw.threads >= 0, "constraint violated: threads >= 0");
  inv.seed = raw.seed;
  inv.threads = raw.threads;
  inv.method = *parse_method(raw.method);
  if (given("--out")) inv.out = raw.out;
  inv.format = raw.format == "csv" ? Format::Csv : Format::Json;
  return inv;
}

std::vector<std::string> to_argv(const Invocation& inv) {
  std::vector<std::string> a{std::string(to_string(inv.command))};
  auto add = [&a](const char* flag, std::string value) {
    a.emplace_back(flag);
    a.push_back(std::move(value));
  };
  if (inv.kind) add("--kind", std::string(to_string(*inv.kind)));
  if (inv.m) add("--m", std::to_string(*inv.m));
  if (!inv.n.empty()) {
    std::vector<std::string> parts;
    for (long long n : inv.n) parts.push_back(std::to_string(n));
    add("--n", join(parts, ','));
  }
  if (inv.reps) add("--reps", std::to_string(*inv.reps));
  if (inv.trials) add("--trials", std::to_string(*inv.trials));
  if (inv.s) add("--s", format_double(*inv.s));
  if (inv.t) add("--t", format_double(*inv.t));
  if (inv.r) add("--r", std::to_string(*inv.r));
  if (inv.command == Command::Bound) add("--completions", std::to_string(inv.completions));
  if (inv.command == Command::Search) {
    std::vector<std::string> parts;
    for (double v : inv.angles) parts.push_back(format_double(v));
    add("--angles", join(parts, ','));
    add("--cap", std::to_string(inv.cap));
  }
  if (inv.command == Command::Simulate || inv.command == Command::Rate ||
      inv.command == Command::Search) {
    add("--method", std::string(to_string(inv.method)));
  }
  add("--seed", std::to_string(inv.seed));
  add("--threads", std::to_string(inv.threads));
  if (inv.out) add("--out", *inv.out);
  add("--format", inv.format == Format::Csv ? "csv" : "json");
  return a;
}

Json config_echo(const Invocation& inv) {
  Json j;
  if (inv.kind) j["kind"] = std::string(to_string(*inv.kind));
  if (inv.m) j["m"] = *inv.m;
  if (inv.n.size() == 1) j["n"] = inv.n.front();
  if (inv.n.size() > 1) j["n"] = inv.n;
  if (inv.reps) j["reps"] = *inv.reps;
  if (inv.trials) j["trials"] = *inv.trials;
  if (inv.s) j["s"] = *inv.s;
  if (inv.t) j["t"] = *inv.t;
  if (inv.r) j["r"] = *inv.r;
  j["seed"] = inv.seed;
  j["threads"] = inv.threads;
  j["method"] = std::string(to_string(inv.method));
  j["argv"] = to_argv(inv);
  return j;
}

RunReport execute(const Invocation& inv, double budget) {
  const double start = now_seconds();
  RunReport rep;
  rep.command = std::string(to_string(inv.command));
  rep.config = config_echo(inv);
  switch (inv.command) {
    case Command::Constants: run_constants(inv, rep); break;
    case Command::Simulate: run_simulate(inv, budget, rep); break;
    case Command::Tail: run_tail(inv, rep); break;
    case Command::Bound: run_bound(inv, rep); break;
    case Command::Rate: run_rate(inv, budget, rep); break;
    case Command::Search: run_search(inv, rep); break;
    case Command::Verify: run_verify(inv, rep); break;
  }
  rep.elapsed_seconds = now_seconds() - start;
  return rep;
}

int main_entry(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Invocation inv;
  try {
    inv = parse_invocation(args);
  } catch (const HelpRequested& h) {
    out << h.what();
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  double budget = kDefaultBudget;
  if (const char* env = std::getenv("UMAX_BUDGET")) {
    char* end = nullptr;
    budget = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(budget > 0.0)) {
      err << "usage error: UMAX_BUDGET must be a positive number\n";
      return kExitUsage;
    }
  }

  RunReport rep;
  try {
    rep = execute(inv, budget);
  } catch (const BudgetExceeded& e) {
    err << "refused: " << e.what() << '\n';
    return kExitBudget;
  } catch (const InvalidInput& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    emit_report(rep, inv.format, inv.out, out);
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitIo;
  }
  if (inv.command == Command::Verify && !rep.results["all_passed"].get<bool>()) {
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace umax::cli
