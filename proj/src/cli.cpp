#include "vilenkin/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "vilenkin/builtin.hpp"
#include "vilenkin/csv.hpp"
#include "vilenkin/error.hpp"
#include "vilenkin/kernels.hpp"
#include "vilenkin/means.hpp"
#include "vilenkin/points.hpp"
#include "vilenkin/weights.hpp"

namespace vilenkin::cli {

namespace {

constexpr double kIdentityTol = 1e-12;
constexpr double kRouteTol = 1e-10;

const std::vector<std::string> kCommands = {
    "kernel-profile", "identity-check", "converge", "classify-weights",
    "bench-transform"};

const std::vector<std::string> kFields = {
    "group", "levels", "weights", "n-min", "n-max", "tail-rank", "function",
    "point", "p", "seed", "out", "kernel", "mode", "form"};

const std::vector<std::string> kDefaultFamilies = {
    "constant", "cesaro:0.5", "icesaro:0.5", "power:0.5",
    "riesz",    "nlog",       "logpow:0.5"};

/// Raised for anything wrong with the configuration; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Raw {
  std::map<std::string, std::string> values;
  bool has(const std::string& k) const { return values.count(k) != 0; }
  std::optional<std::string> get(const std::string& k) const {
    auto it = values.find(k);
    if (it == values.end()) return std::nullopt;
    return it->second;
  }
};

std::string json_to_text(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ',';
      out += json_to_text(v[i]);
    }
    return out;
  }
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return csv::real(v.get<double>());
  throw ConfigError("unsupported JSON value " + v.dump());
}

void merge_config_file(const std::string& path, Raw& raw) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config '" + path + "': " + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config '" + path + "': not an object");
  for (const auto& [key, value] : doc.items()) {
    std::string name = key;
    std::replace(name.begin(), name.end(), '_', '-');
    if (std::find(kFields.begin(), kFields.end(), name) == kFields.end()) {
      throw ConfigError("config '" + path + "': unknown field '" + key + "'");
    }
    if (!raw.has(name)) raw.values[name] = json_to_text(value);
  }
}

template <class T>
T parse_number(const Raw& raw, const std::string& field, T fallback) {
  const auto text = raw.get(field);
  if (!text) return fallback;
  std::istringstream in(*text);
  T value{};
  if (!(in >> value) || !(in >> std::ws).eof()) {
    throw ConfigError("field '" + field + "': cannot parse '" + *text + "'");
  }
  return value;
}

/// Fully parsed experiment configuration.
struct Config {
  GroupSpec group;
  Raw raw;

  Index n_max() const {
    const Index n = parse_number<Index>(raw, "n-max", group.size());
    if (n > group.size()) {
      throw ConfigError("field 'n-max': " + std::to_string(n) +
                        " exceeds M_N = " + std::to_string(group.size()));
    }
    return n;
  }
  Index n_min(Index fallback) const {
    return parse_number<Index>(raw, "n-min", fallback);
  }
  std::uint64_t seed() const { return parse_number<std::uint64_t>(raw, "seed", 1); }
  ConvergenceMode mode() const {
    const auto m = raw.get("mode").value_or("all");
    if (m == "all") return ConvergenceMode::all;
    if (m == "block") return ConvergenceMode::block;
    throw ConfigError("field 'mode': expected all|block, got '" + m + "'");
  }
  std::optional<MeanForm> form() const {
    const auto f = raw.get("form");
    if (!f) return std::nullopt;
    if (*f == "t") return MeanForm::t;
    if (*f == "norlund") return MeanForm::norlund;
    throw ConfigError("field 'form': expected t|norlund, got '" + *f + "'");
  }
  std::vector<std::string> families() const {
    if (auto w = raw.get("weights")) return {*w};
    return kDefaultFamilies;
  }
};

Config make_config(Raw raw) {
  try {
    const std::vector<int> pattern =
        parse_int_list(raw.get("group").value_or("2,3,2,3"));
    const auto levels = parse_number<std::size_t>(raw, "levels", pattern.size());
    return Config{GroupSpec::make(pattern, levels), std::move(raw)};
  } catch (const vilenkin::Error& e) {
    throw ConfigError(std::string("field 'group'/'levels': ") + e.what());
  }
}

template <class F>
auto config_field(const std::string& field, F&& build) -> decltype(build()) {
  try {
    return build();
  } catch (const vilenkin::Error& e) {
    throw ConfigError("field '" + field + "': " + e.what());
  }
}

std::string verdict(bool ok) { return ok ? "ok" : "FAIL"; }

// --- kernel-profile ------------------------------------------------------

int kernel_profile(const Config& cfg, std::ostream& csv_out, std::ostream& log) {
  const auto family = config_field("kernel", [&] {
    return parse_kernel_family(cfg.raw.get("kernel").value_or("fejer"));
  });
  std::optional<WeightSequence> weights;
  if (family == KernelFamily::t || family == KernelFamily::norlund) {
    const auto text = cfg.raw.get("weights");
    if (!text) throw ConfigError("field 'weights': required for this kernel");
    weights = config_field("weights", [&] { return WeightSequence::parse(*text); });
  }
  const Index n_first = cfg.n_min(weights ? weights->first_valid() : 1);
  const auto tail_rank = parse_number<std::size_t>(
      cfg.raw, "tail-rank", std::min<std::size_t>(1, cfg.group.levels()));
  if (tail_rank > cfg.group.levels()) {
    throw ConfigError("field 'tail-rank': exceeds levels");
  }
  const auto ns = config_field("n-min", [&] {
    return index_range(cfg.group, n_first, cfg.n_max(), cfg.mode());
  });
  if (weights) {
    for (const Index n : ns) {
      if (!(weights->Q(n) > 0.0)) {
        throw ConfigError("field 'n-min': Q_" + std::to_string(n) + " = 0");
      }
    }
  }
  const auto rows = l1_profile(family, weights ? &*weights : nullptr, ns,
                               tail_rank, cfg.group);
  write_csv(csv_out, rows);

  double worst_integral = 0.0, sup_l1 = 0.0;
  bool ordered = true;
  for (const auto& r : rows) {
    Complex expected = r.n == 0 ? 0.0 : 1.0;
    if (family == KernelFamily::t) {
      expected = (weights->Q(r.n) - weights->q(0)) / weights->Q(r.n);
    }
    worst_integral = std::max(worst_integral, std::abs(r.integral - expected));
    sup_l1 = std::max(sup_l1, r.l1);
    ordered = ordered && r.l1 + kIdentityTol >= std::abs(r.integral) &&
              r.tail <= r.l1 + kIdentityTol;
  }
  const bool integral_ok = worst_integral <= kIdentityTol;
  const std::string id =
      to_string(family) + (weights ? "[" + weights->name() + "]" : "");
  log << "kernel-profile " << id << " integral: max deviation "
      << csv::real(worst_integral) << " over " << rows.size() << " rows: "
      << verdict(integral_ok) << '\n';
  log << "kernel-profile " << id << " l1 >= |integral|, tail <= l1: "
      << verdict(ordered) << '\n';
  log << "kernel-profile " << id << " sup l1 " << csv::real(sup_l1)
      << ", last tail " << csv::real(rows.empty() ? 0.0 : rows.back().tail)
      << '\n';
  return integral_ok && ordered ? kOk : kCheckFailed;
}

// --- identity-check ------------------------------------------------------

struct ResidualLog {
  std::string check;
  std::string weights;
  Index n;
  Index j;
  double residual;
};

int identity_check(const Config& cfg, std::ostream& csv_out, std::ostream& log) {
  const auto& g = cfg.group;
  const Index n_max = cfg.n_max();
  std::vector<WeightSequence> families;
  for (const auto& name : cfg.families()) {
    families.push_back(config_field("weights", [&] {
      return WeightSequence::parse(name);
    }));
  }
  const GridFunction f = random_function(g, cfg.seed());

  std::vector<ResidualLog> rows;
  std::map<std::string, std::pair<double, std::size_t>> summary;
  auto record = [&](std::string check, std::string w, Index n, Index j,
                    double r) {
    auto& s = summary[check];
    s.first = std::max(s.first, r);
    ++s.second;
    rows.push_back({std::move(check), std::move(w), n, j, r});
  };

  for (std::size_t rank = 0; rank <= g.levels(); ++rank) {
    for (Index j = 0; j < g.place(rank); ++j) {
      record("reflection", "-", rank, j, reflection_residual(g, rank, j));
    }
  }
  for (const auto& w : families) {
    for (Index n = 3; n <= n_max; ++n) {
      record("abel-weights", w.name(), n, 0, abel_weight_residual(w, n));
    }
    for (Index n = w.first_valid(); n <= n_max; ++n) {
      record("abel-kernel", w.name(), n, 0, abel_kernel_residual(w, n, g));
      const GridFunction direct = t_mean(f, w, n, MeanMethod::direct);
      const GridFunction abel = t_mean(f, w, n, MeanMethod::abel);
      record("abel-mean", w.name(), n, 0,
             max_abs_diff(direct.values(), abel.values()));
    }
    for (std::size_t rank = 0; rank <= g.levels(); ++rank) {
      if (g.place(rank) < w.first_valid()) continue;
      record("block", w.name(), rank, 0, block_residual(w, rank, g));
    }
  }

  csv_out << "check,weights,n,j,residual\n";
  for (const auto& r : rows) {
    csv_out << r.check << ',' << r.weights << ',' << r.n << ',' << r.j << ','
            << csv::real(r.residual) << '\n';
  }
  bool ok = true;
  for (const auto& [check, s] : summary) {
    const bool pass = s.first <= kIdentityTol;
    ok = ok && pass;
    log << "identity-check " << check << ": max residual " << csv::real(s.first)
        << " over " << s.second << " cases: " << verdict(pass) << '\n';
  }
  return ok ? kOk : kCheckFailed;
}

// --- converge ------------------------------------------------------------

int converge(const Config& cfg, std::ostream& csv_out, std::ostream& log) {
  const auto& g = cfg.group;
  const auto fn = config_field("function", [&] {
    return make_function(cfg.raw.get("function").value_or("random:1,2"), g);
  });
  const MeanSpec mean = config_field("weights", [&] {
    return MeanSpec::parse(cfg.raw.get("weights").value_or("riesz"), cfg.form());
  });
  const ConvergenceMode mode = cfg.mode();
  const auto ns = config_field("n-min", [&] {
    return index_range(g, cfg.n_min(mean.first_valid()), cfg.n_max(), mode);
  });
  for (const Index n : ns) {
    if (!(mean.weights.Q(n) > 0.0)) {
      throw ConfigError("field 'n-min': Q_" + std::to_string(n) + " = 0");
    }
  }

  std::optional<Element> point;
  if (auto text = cfg.raw.get("point")) {
    point = config_field("point", [&] { return Element(g, parse_int_list(*text)); });
  }
  const double p = parse_number<double>(cfg.raw, "p", 1.0);
  if (!point && !(p >= 1.0)) throw ConfigError("field 'p': must be >= 1");

  const auto rows = point ? convergence_profile(fn.f, *point, mean, ns, mode)
                          : convergence_profile(fn.f, p, mean, ns, mode);
  write_csv(csv_out, rows);

  // Rank-r step functions: every row with n >= M_r obeys the step bound.
  const double bound_p = point ? INFINITY : p;
  const Index Mr = g.place(fn.rank);
  bool ok = true;
  std::size_t checked = 0;
  for (const auto& r : rows) {
    if (r.n < Mr) continue;
    const double bound = step_function_bound(fn.f, mean, r.n, fn.rank, bound_p);
    ok = ok && r.err <= bound + kRouteTol;
    ++checked;
  }
  const std::string target =
      point ? "point " + format_digits(point->digits())
            : "L_" + csv::real(p);
  log << "converge " << mean.id() << " " << target << " step bound (rank "
      << fn.rank << ") on " << checked << " rows: " << verdict(ok) << '\n';
  if (!rows.empty()) {
    log << "converge " << mean.id() << " final n " << rows.back().n << " err "
        << csv::real(rows.back().err) << '\n';
  }
  return ok ? kOk : kCheckFailed;
}

// --- classify-weights ----------------------------------------------------

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int classify_weights(const Config& cfg, std::ostream& csv_out, std::ostream& log) {
  const Index n_max = parse_number<Index>(cfg.raw, "n-max", 10000);
  if (n_max < 4) throw ConfigError("field 'n-max': must be at least 4");
  bool ok = true;
  csv_out << "weights,n,q,Q,fn01_ratio,fn011_ratio\n";
  for (const auto& name : cfg.families()) {
    const auto w = config_field("weights", [&] { return WeightSequence::parse(name); });
    const WeightClass c = classify(w, n_max);
    for (Index n = 1; n <= n_max; ++n) {
      const double Qn = c.cumulative[n];
      const double nn = static_cast<double>(n);
      csv_out << w.name() << ',' << n << ',' << csv::real(w.q(n - 1)) << ','
              << csv::real(Qn) << ','
              << csv::real(Qn > 0 ? nn * w.q(n - 1) / Qn : 0.0) << ','
              << csv::real(Qn > 0 ? nn * w.q(0) / Qn : 0.0) << '\n';
    }
    log << "classify-weights " << w.name() << ": monotonicity "
        << to_string(c.monotonicity) << ", fn01 sup " << csv::real(c.fn01_sup)
        << " (bounded " << yes_no(c.fn01_bounded) << "), fn011 sup "
        << csv::real(c.fn011_sup) << " (bounded " << yes_no(c.fn011_bounded)
        << "), Q growth " << csv::real(c.growth_ratio) << " (regular "
        << yes_no(c.regular) << "), gates: domination "
        << yes_no(domination_gate(c)) << ", convergence "
        << yes_no(convergence_gate(c)) << ", block " << yes_no(block_gate(c))
        << '\n';
    if (w.kind() == WeightKind::log_power) {
      bool within = true;
      const double a = w.alpha();
      for (Index n = 4; n <= n_max; ++n) {
        const double nn = static_cast<double>(n);
        const double lower = nn / 2 * std::pow(std::log(nn / 2), a);
        const double upper = nn * std::pow(std::log(nn), a);
        within = within && lower <= c.cumulative[n] && c.cumulative[n] <= upper;
      }
      ok = ok && within;
      log << "classify-weights " << w.name()
          << " n/2 log^a(n/2) <= Q_n <= n log^a(n) for 4 <= n <= " << n_max
          << ": " << verdict(within) << '\n';
    }
  }
  return ok ? kOk : kCheckFailed;
}

// --- bench-transform -----------------------------------------------------

int bench_transform(const Config& cfg, std::ostream& csv_out, std::ostream& log) {
  using clock = std::chrono::steady_clock;
  const GridFunction f = random_function(cfg.group, cfg.seed());

  auto t0 = clock::now();
  const Spectrum naive = forward(f, Method::naive);
  const double naive_s = std::chrono::duration<double>(clock::now() - t0).count();

  int reps = 0;
  double fast_total = 0.0;
  Spectrum fast(cfg.group);
  do {
    t0 = clock::now();
    fast = forward(f, Method::fast);
    fast_total += std::chrono::duration<double>(clock::now() - t0).count();
    ++reps;
  } while (fast_total < 0.05 && reps < 1000);
  const double fast_s = fast_total / reps;

  const double diff = max_abs_diff(naive.values(), fast.values());
  const bool agree = diff <= kRouteTol;
  log << "bench-transform M_N " << cfg.group.size() << " agreement max-abs "
      << csv::real(diff) << ": " << verdict(agree) << '\n';
  if (!agree) return kCheckFailed;
  csv_out << "method,seconds,max_abs_diff\n";
  csv_out << "naive," << csv::real(naive_s) << ",0\n";
  csv_out << "fast," << csv::real(fast_s) << ',' << csv::real(diff) << '\n';
  log << "bench-transform naive " << csv::real(naive_s) << " s, fast "
      << csv::real(fast_s) << " s, speedup " << csv::real(naive_s / fast_s)
      << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& log, std::ostream& err) {
  CLI::App app{"Harmonic analysis experiments on bounded Vilenkin groups",
               "vilenkin"};
  std::string command;
  app.add_option("command", command, "experiment to run")
      ->required()
      ->check(CLI::IsMember(kCommands));
  std::string config_path;
  app.add_option("--config", config_path, "JSON file with the same fields");
  std::map<std::string, std::string> flag_values;
  std::map<std::string, CLI::Option*> flags;
  for (const auto& name : kFields) {
    flags[name] = app.add_option("--" + name, flag_values[name]);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "vilenkin: " << e.what() << '\n';
    return kConfigError;
  }

  try {
    Raw raw;
    for (const auto& [name, opt] : flags) {
      if (opt->count() > 0) raw.values[name] = flag_values[name];
    }
    if (!config_path.empty()) merge_config_file(config_path, raw);
    const Config cfg = make_config(std::move(raw));

    std::ofstream file;
    std::ostream* csv_out = &out;
    if (auto path = cfg.raw.get("out")) {
      file.open(*path);
      if (!file) throw ConfigError("field 'out': cannot write '" + *path + "'");
      csv_out = &file;
    }
    if (command == "kernel-profile") return kernel_profile(cfg, *csv_out, log);
    if (command == "identity-check") return identity_check(cfg, *csv_out, log);
    if (command == "converge") return converge(cfg, *csv_out, log);
    if (command == "classify-weights") return classify_weights(cfg, *csv_out, log);
    return bench_transform(cfg, *csv_out, log);
  } catch (const ConfigError& e) {
    err << "vilenkin: config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const vilenkin::Error& e) {
    err << "vilenkin: " << e.what() << '\n';
    return kConfigError;
  }
}

}  // namespace vilenkin::cli
