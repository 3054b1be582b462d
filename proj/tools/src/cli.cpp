#include "robustmine/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <nlohmann/json.hpp>

#include "robustmine/errors.hpp"
#include "robustmine/experiments.hpp"
#include "robustmine/mining.hpp"
#include "robustmine/oracle.hpp"
#include "robustmine/robustness.hpp"

namespace robustmine::cli {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string input;
  std::string labels;
};

struct OutputOptions {
  std::string format = "tsv";
  std::string output = "-";
};

void add_input(CLI::App* app, InputOptions& in, bool with_labels) {
  app->add_option("-i,--input", in.input, "Transaction database in FIMI format")->required();
  if (with_labels) app->add_option("--labels", in.labels, "Item labels, one \"id<TAB>label\" per line");
}

void add_output(CLI::App* app, OutputOptions& out) {
  app->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
  app->add_option("-o,--output", out.output, "Output file, '-' for stdout");
}

TransactionDatabase load_database(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  try {
    return parse_fimi(in);
  } catch (const ParseError& e) {
    throw IoError(path + ": " + e.what());
  }
}

LabelMap load_labels(const std::string& path) {
  if (path.empty()) return {};
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return LabelMap::parse(in);
}

void emit(const OutputOptions& options, const std::string& text, std::ostream& out) {
  if (options.output == "-") {
    out << text;
    return;
  }
  std::ofstream file(options.output, std::ios::binary);
  if (!file) throw IoError("cannot write '" + options.output + "'");
  file << text;
}

double unit_interval(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) throw UsageError(fmt::format("{} must be in [0,1]", name));
  return value;
}

PredicateKind predicate_of(const std::string& name) {
  const auto kind = parse_predicate(name);
  if (!kind) throw UsageError("unknown predicate '" + name + "'");
  return *kind;
}

Count min_support_of(const std::string& text, const TransactionDatabase& db) {
  try {
    return resolve_min_support(text, db.size());
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

std::string number(double v) { return fmt::format("{:.12g}", v); }

std::string render(const LabelMap& labels, const Itemset& x) {
  return labels.empty() ? x.to_string() : labels.render(x);
}

json items_json(const Itemset& x, const LabelMap& labels) {
  json j;
  j["items"] = std::vector<Item>(x.begin(), x.end());
  if (!labels.empty()) {
    std::vector<std::string> names;
    for (Item item : x) names.push_back(labels.find(item).value_or(std::to_string(item)));
    j["labels"] = names;
  }
  return j;
}

std::string key_descriptor(const OrderKey& key) {
  if (const auto* mv = std::get_if<MarginVector>(&key.payload)) {
    return fmt::format("[{}]", fmt::join(mv->values(), ","));
  }
  return std::get<RobustnessPolynomial>(key.payload).signature();
}

// mine ---------------------------------------------------------------------

struct MineOptions {
  InputOptions in;
  OutputOptions out;
  std::string predicate = "free";
  double alpha = 0.5;
  double rho = 0.0;
  std::string min_support = "1";
  std::optional<std::size_t> max_size;
  bool include_empty = false;
};

void setup_mine(CLI::App& app, MineOptions& o) {
  auto* cmd = app.add_subcommand("mine", "Mine itemsets whose robustness reaches rho");
  add_input(cmd, o.in, true);
  add_output(cmd, o.out);
  cmd->add_option("-p,--predicate", o.predicate, "free | ndi | ts");
  cmd->add_option("-a,--alpha", o.alpha, "Probability of keeping a transaction");
  cmd->add_option("-r,--rho", o.rho, "Minimum robustness");
  cmd->add_option("-s,--min-support", o.min_support, "Count, or fraction of |D| when written with a '.'");
  cmd->add_option("--max-size", o.max_size, "Largest itemset size");
  cmd->add_flag("--include-empty", o.include_empty, "Report the empty itemset too");
  cmd->footer("TSV columns: itemset, support, robustness.");
}

int cmd_mine(const MineOptions& o, std::ostream& out) {
  const PredicateKind kind = predicate_of(o.predicate);
  if (kind == PredicateKind::Closed) throw UsageError("closed mining uses the rank command");
  unit_interval(o.rho, "rho");
  unit_interval(o.alpha, "alpha");
  const TransactionDatabase db = load_database(o.in.input);
  const LabelMap labels = load_labels(o.in.labels);

  MiningConfig config;
  config.kind = kind;
  config.alpha = Alpha(o.alpha);
  config.rho = o.rho;
  config.min_support = min_support_of(o.min_support, db);
  config.max_size = o.max_size;
  config.include_empty = o.include_empty;
  const auto mined = mine_robust(db, config);

  std::string text;
  if (o.out.format == "json") {
    json doc{{"schema_version", kSchemaVersion}, {"command", "mine"},       {"predicate", o.predicate},
             {"alpha", o.alpha},                 {"rho", o.rho},            {"min_support", config.min_support},
             {"transactions", db.size()},        {"itemsets", json::array()}};
    for (const auto& m : mined) {
      json row = items_json(m.itemset, labels);
      row["support"] = m.support;
      row["robustness"] = m.robustness;
      doc["itemsets"].push_back(std::move(row));
    }
    text = doc.dump(2) + "\n";
  } else {
    text = "itemset\tsupport\trobustness\n";
    for (const auto& m : mined) {
      text += fmt::format("{}\t{}\t{}\n", render(labels, m.itemset), m.support, number(m.robustness));
    }
  }
  emit(o.out, text, out);
  return kOk;
}

// rank ---------------------------------------------------------------------

struct RankOptions {
  InputOptions in;
  OutputOptions out;
  std::string predicate = "free";
  std::size_t top_k = 10;
  std::string min_support = "1";
  std::size_t min_size = 0;
  std::optional<std::size_t> max_size;
  bool include_empty = false;
};

void setup_rank(CLI::App& app, RankOptions& o) {
  auto* cmd = app.add_subcommand("rank", "Rank itemsets by robustness near alpha = 1");
  add_input(cmd, o.in, true);
  add_output(cmd, o.out);
  cmd->add_option("-p,--predicate", o.predicate, "free | ndi | ts | closed");
  cmd->add_option("-k,--top-k", o.top_k, "Number of itemsets to report");
  cmd->add_option("-s,--min-support", o.min_support, "Count, or fraction of |D| when written with a '.'");
  cmd->add_option("--min-size", o.min_size, "Smallest itemset size");
  cmd->add_option("--max-size", o.max_size, "Largest itemset size");
  cmd->add_flag("--include-empty", o.include_empty, "Rank the empty itemset too");
  cmd->footer(
      "TSV columns: rank, itemset, support, key (margin vector or polynomial signature), "
      "exactness (closed rankings over a thresholded family may rest on estimated coefficients).");
}

int cmd_rank(const RankOptions& o, std::ostream& out) {
  const PredicateKind kind = predicate_of(o.predicate);
  if (o.top_k < 1) throw UsageError("top-k must be at least 1");
  const TransactionDatabase db = load_database(o.in.input);
  const LabelMap labels = load_labels(o.in.labels);

  TopKOptions options;
  options.min_support = min_support_of(o.min_support, db);
  options.min_size = o.min_size;
  options.max_size = o.max_size;
  options.include_empty = o.include_empty;
  const auto ranked = top_k(db, kind, o.top_k, options);

  std::string text;
  if (o.out.format == "json") {
    json doc{{"schema_version", kSchemaVersion}, {"command", "rank"}, {"predicate", o.predicate},
             {"min_support", options.min_support}, {"transactions", db.size()}, {"itemsets", json::array()}};
    for (std::size_t i = 0; i < ranked.size(); ++i) {
      const auto& r = ranked[i];
      json row = items_json(r.itemset, labels);
      row["rank"] = i + 1;
      row["support"] = r.support;
      row["key_type"] = std::holds_alternative<MarginVector>(r.key.payload) ? "margins" : "polynomial";
      row["key"] = key_descriptor(r.key);
      row["estimated"] = r.estimated;
      doc["itemsets"].push_back(std::move(row));
    }
    text = doc.dump(2) + "\n";
  } else {
    text = "rank\titemset\tsupport\tkey\texactness\n";
    for (std::size_t i = 0; i < ranked.size(); ++i) {
      const auto& r = ranked[i];
      text += fmt::format("{}\t{}\t{}\t{}\t{}\n", i + 1, render(labels, r.itemset), r.support, key_descriptor(r.key),
                          r.estimated ? "estimated" : "exact");
    }
  }
  emit(o.out, text, out);
  return kOk;
}

// verify -------------------------------------------------------------------

struct VerifyOptions {
  InputOptions in;
  OutputOptions out;
  std::string itemset;
  std::string predicate = "free";
  double alpha = 0.5;
  std::string method = "exhaustive";
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
};

void setup_verify(CLI::App& app, VerifyOptions& o) {
  auto* cmd = app.add_subcommand("verify", "Check an analytic robustness value against an oracle");
  add_input(cmd, o.in, false);
  add_output(cmd, o.out);
  cmd->add_option("-x,--itemset", o.itemset, "Item ids, e.g. \"0 1\"")->required();
  cmd->add_option("-p,--predicate", o.predicate, "free | ndi | ts | closed");
  cmd->add_option("-a,--alpha", o.alpha, "Probability of keeping a transaction");
  cmd->add_option("-m,--method", o.method, "exhaustive | mc")->check(CLI::IsMember({"exhaustive", "mc"}));
  cmd->add_option("-n,--samples", o.samples, "Monte-Carlo draws");
  cmd->add_option("--seed", o.seed, "Monte-Carlo seed");
  cmd->footer("Exit status 0 when the values agree (1e-9 exhaustive, 5 standard errors mc), 1 otherwise.");
}

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  const PredicateKind kind = predicate_of(o.predicate);
  unit_interval(o.alpha, "alpha");
  if (o.samples < 1) throw UsageError("samples must be at least 1");
  const TransactionDatabase db = load_database(o.in.input);
  Itemset x;
  try {
    x = Itemset::parse(o.itemset);
    db.validate(x);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  const bool mc = o.method == "mc";
  if (!mc && db.size() > kExhaustiveLimit) {
    throw UsageError(fmt::format("exhaustive verification supports at most {} transactions; use --method mc",
                                 kExhaustiveLimit));
  }

  ClosedFamily family;
  if (kind == PredicateKind::Closed) family = closed_family(db, 1);
  const EvaluationContext context{kind == PredicateKind::Closed ? &family : nullptr};
  const double analytic = robustness(db, x, kind, Alpha(o.alpha), context);
  MonteCarloEstimate oracle;
  if (mc) {
    oracle = monte_carlo_robustness(db, x, kind, Alpha(o.alpha), o.samples, o.seed);
  } else {
    oracle.estimate = exhaustive_robustness(db, x, kind, Alpha(o.alpha));
  }
  const double diff = std::abs(analytic - oracle.estimate);
  const bool ok = within_tolerance(analytic, oracle.estimate, mc, oracle.standard_error, o.samples);

  std::string text;
  if (o.out.format == "json") {
    json doc{{"schema_version", kSchemaVersion}, {"command", "verify"}, {"predicate", o.predicate},
             {"itemset", std::vector<Item>(x.begin(), x.end())},
             {"alpha", o.alpha}, {"method", o.method}, {"analytic", analytic}, {"oracle", oracle.estimate},
             {"abs_diff", diff}, {"ok", ok}};
    if (mc) {
      doc["standard_error"] = oracle.standard_error;
      doc["samples"] = o.samples;
      doc["seed"] = o.seed;
    }
    text = doc.dump(2) + "\n";
  } else {
    text = fmt::format("analytic\t{}\noracle\t{}\n", number(analytic), number(oracle.estimate));
    if (mc) text += fmt::format("standard_error\t{}\n", number(oracle.standard_error));
    text += fmt::format("abs_diff\t{}\nresult\t{}\n", number(diff), ok ? "ok" : "mismatch");
  }
  emit(o.out, text, out);
  return ok ? kOk : kFailure;
}

// experiment ---------------------------------------------------------------

struct SweepOptions {
  InputOptions in;
  OutputOptions out;
  std::string predicate = "free";
  std::string alphas = "0.1:0.9:0.1";
  std::string rhos = "0.1:0.9:0.1";
  std::string min_support = "1";
  std::optional<std::size_t> max_size;
  std::uint64_t seed = 1;
};

struct NoiseOptions {
  InputOptions in;
  OutputOptions out;
  double eta = 0.05;
  std::uint64_t seed = 1;
  std::string min_support = "1";
  std::size_t top_k = 100;
};

struct DistanceOptions {
  InputOptions in;
  OutputOptions out;
  std::string predicate = "free";
  std::optional<double> alpha;
  std::string alphas = "0.1:0.9:0.1";
  std::string min_support = "1";
  std::optional<std::size_t> max_size;
  std::uint64_t seed = 1;
};

struct ExperimentOptions {
  SweepOptions sweep;
  NoiseOptions noise;
  DistanceOptions distance;
};

void setup_experiment(CLI::App& app, ExperimentOptions& o) {
  auto* cmd = app.add_subcommand("experiment", "Experiment protocols");
  cmd->require_subcommand(1);

  auto* sweep = cmd->add_subcommand("sweep", "Itemset counts over an alpha x rho grid");
  add_input(sweep, o.sweep.in, false);
  add_output(sweep, o.sweep.out);
  sweep->add_option("-p,--predicate", o.sweep.predicate, "free | ndi | ts");
  sweep->add_option("--alphas", o.sweep.alphas, "Grid, \"from:to:step\" or comma list");
  sweep->add_option("--rhos", o.sweep.rhos, "Grid, \"from:to:step\" or comma list");
  sweep->add_option("-s,--min-support", o.sweep.min_support, "Count or fraction of |D|");
  sweep->add_option("--max-size", o.sweep.max_size, "Largest itemset size");
  sweep->add_option("--seed", o.sweep.seed, "Unused; accepted for uniformity");
  sweep->footer("TSV columns: alpha, rho, count.");

  auto* noise = cmd->add_subcommand("noise", "Compliance of the closed ranking under noise");
  add_input(noise, o.noise.in, true);
  add_output(noise, o.noise.out);
  noise->add_option("--eta", o.noise.eta, "Probability of replacing a cell by independent noise");
  noise->add_option("--seed", o.noise.seed, "Noise seed");
  noise->add_option("-s,--min-support", o.noise.min_support, "Count or fraction of |D|");
  noise->add_option("-k,--top-k", o.noise.top_k, "Ranking length");
  noise->footer("TSV columns: rank, itemset, noisy_rank ('-' when missing), compliance; "
                "a final '# mean_compliance' line follows.");

  auto* distance = cmd->add_subcommand("rank-distance", "Parameter-free ranking vs robustness ranking");
  add_input(distance, o.distance.in, false);
  add_output(distance, o.distance.out);
  distance->add_option("-p,--predicate", o.distance.predicate, "free | ndi | ts | closed");
  distance->add_option("-a,--alpha", o.distance.alpha, "Single alpha (overrides --alphas)");
  distance->add_option("--alphas", o.distance.alphas, "Grid, \"from:to:step\" or comma list");
  distance->add_option("-s,--min-support", o.distance.min_support, "Count or fraction of |D|");
  distance->add_option("--max-size", o.distance.max_size, "Largest itemset size");
  distance->add_option("--seed", o.distance.seed, "Unused; accepted for uniformity");
  distance->footer("TSV columns: alpha, distance (NA when every itemset has the same robustness).");
}

std::vector<double> unit_grid(const std::string& text, const char* name) {
  std::vector<double> grid;
  try {
    grid = parse_grid(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(fmt::format("{}: {}", name, e.what()));
  }
  for (double v : grid) unit_interval(v, name);
  return grid;
}

int cmd_sweep(const SweepOptions& o, std::ostream& out) {
  const PredicateKind kind = predicate_of(o.predicate);
  if (kind == PredicateKind::Closed) throw UsageError("sweep supports free, ndi and ts");
  const auto alphas = unit_grid(o.alphas, "alphas");
  const auto rhos = unit_grid(o.rhos, "rhos");
  const TransactionDatabase db = load_database(o.in.input);
  const SweepResult result = sweep(db, kind, alphas, rhos, min_support_of(o.min_support, db), o.max_size);

  std::string text;
  if (o.out.format == "json") {
    json doc{{"schema_version", kSchemaVersion}, {"command", "experiment sweep"}, {"predicate", o.predicate},
             {"min_support", result.min_support}, {"monotone", result.monotone()}, {"grid", json::array()}};
    for (std::size_t i = 0; i < alphas.size(); ++i) {
      for (std::size_t j = 0; j < rhos.size(); ++j) {
        doc["grid"].push_back({{"alpha", alphas[i]}, {"rho", rhos[j]}, {"count", result.counts[i][j]}});
      }
    }
    text = doc.dump(2) + "\n";
  } else {
    text = "alpha\trho\tcount\n";
    for (std::size_t i = 0; i < alphas.size(); ++i) {
      for (std::size_t j = 0; j < rhos.size(); ++j) {
        text += fmt::format("{}\t{}\t{}\n", number(alphas[i]), number(rhos[j]), result.counts[i][j]);
      }
    }
  }
  emit(o.out, text, out);
  return kOk;
}

int cmd_noise(const NoiseOptions& o, std::ostream& out) {
  unit_interval(o.eta, "eta");
  if (o.top_k < 1) throw UsageError("top-k must be at least 1");
  const TransactionDatabase db = load_database(o.in.input);
  const LabelMap labels = load_labels(o.in.labels);
  const NoiseCompliance result = noise_compliance(db, o.eta, o.seed, min_support_of(o.min_support, db), o.top_k);

  auto noisy_rank = [&](const Itemset& x) -> std::optional<std::size_t> {
    const auto it = std::find(result.noisy.begin(), result.noisy.end(), x);
    if (it == result.noisy.end()) return std::nullopt;
    return static_cast<std::size_t>(it - result.noisy.begin()) + 1;
  };

  std::string text;
  if (o.out.format == "json") {
    json doc{{"schema_version", kSchemaVersion}, {"command", "experiment noise"}, {"eta", o.eta},
             {"seed", o.seed}, {"mean_compliance", result.mean()}, {"itemsets", json::array()}};
    for (std::size_t i = 0; i < result.original.size(); ++i) {
      json row = items_json(result.original[i], labels);
      row["rank"] = i + 1;
      const auto j = noisy_rank(result.original[i]);
      row["noisy_rank"] = j ? json(*j) : json(nullptr);
      row["compliance"] = result.scores[i];
      doc["itemsets"].push_back(std::move(row));
    }
    text = doc.dump(2) + "\n";
  } else {
    text = "rank\titemset\tnoisy_rank\tcompliance\n";
    for (std::size_t i = 0; i < result.original.size(); ++i) {
      const auto j = noisy_rank(result.original[i]);
      text += fmt::format("{}\t{}\t{}\t{}\n", i + 1, render(labels, result.original[i]),
                          j ? std::to_string(*j) : std::string("-"), number(result.scores[i]));
    }
    text += fmt::format("# mean_compliance\t{}\n", number(result.mean()));
  }
  emit(o.out, text, out);
  return kOk;
}

int cmd_distance(const DistanceOptions& o, std::ostream& out) {
  const PredicateKind kind = predicate_of(o.predicate);
  const auto alphas = o.alpha ? std::vector<double>{unit_interval(*o.alpha, "alpha")} : unit_grid(o.alphas, "alphas");
  const TransactionDatabase db = load_database(o.in.input);
  const auto curve = rank_distance_curve(db, kind, alphas, min_support_of(o.min_support, db), o.max_size);

  std::string text;
  if (o.out.format == "json") {
    json doc{{"schema_version", kSchemaVersion}, {"command", "experiment rank-distance"},
             {"predicate", o.predicate}, {"points", json::array()}};
    for (const auto& p : curve) {
      doc["points"].push_back({{"alpha", p.alpha}, {"distance", p.distance ? json(*p.distance) : json(nullptr)}});
    }
    text = doc.dump(2) + "\n";
  } else {
    text = "alpha\tdistance\n";
    for (const auto& p : curve) {
      text += fmt::format("{}\t{}\n", number(p.alpha), p.distance ? number(*p.distance) : std::string("NA"));
    }
  }
  emit(o.out, text, out);
  return kOk;
}

}  // namespace

bool within_tolerance(double analytic, double oracle, bool monte_carlo, double standard_error,
                      std::uint64_t samples) {
  const double diff = std::abs(analytic - oracle);
  if (!monte_carlo) return diff <= 1e-9;
  if (standard_error == 0.0) {
    standard_error = std::sqrt(analytic * (1.0 - analytic) / static_cast<double>(std::max<std::uint64_t>(samples, 1)));
  }
  return diff <= std::max(5.0 * standard_error, 1e-12);
}

std::vector<double> parse_grid(const std::string& text) {
  auto to_double = [](const std::string& token) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != token.size()) throw std::invalid_argument("bad number '" + token + "'");
    return v;
  };
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
    if (parts.size() != 3) throw std::invalid_argument("expected from:to:step");
    const double from = to_double(parts[0]), to = to_double(parts[1]), step = to_double(parts[2]);
    if (!(step > 0.0) || to < from) throw std::invalid_argument("empty or unbounded range");
    const auto n = static_cast<std::size_t>(std::floor((to - from) / step + 1e-9));
    for (std::size_t i = 0; i <= n; ++i) {
      // Rounded so 0.1 + 2 * 0.1 prints as 0.3.
      out.push_back(std::round((from + static_cast<double>(i) * step) * 1e12) / 1e12);
    }
    return out;
  }
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) out.push_back(to_double(part));
  if (out.empty()) throw std::invalid_argument("empty grid");
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Itemset mining with robustness under random transaction deletion", "robust-miner"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "robust-miner 0.1.0");
  app.footer("Parallelism is capped by the ROBUST_MINER_THREADS environment variable.");

  MineOptions mine;
  RankOptions rank_options;
  VerifyOptions verify;
  ExperimentOptions experiment;
  setup_mine(app, mine);
  setup_rank(app, rank_options);
  setup_verify(app, verify);
  setup_experiment(app, experiment);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (app.got_subcommand("mine")) return cmd_mine(mine, out);
    if (app.got_subcommand("rank")) return cmd_rank(rank_options, out);
    if (app.got_subcommand("verify")) return cmd_verify(verify, out);
    auto* exp = app.get_subcommand("experiment");
    if (exp->got_subcommand("sweep")) return cmd_sweep(experiment.sweep, out);
    if (exp->got_subcommand("noise")) return cmd_noise(experiment.noise, out);
    return cmd_distance(experiment.distance, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace robustmine::cli
