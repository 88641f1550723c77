#include "flagbound/cli.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "flagbound/arrangement.hpp"
#include "flagbound/flags.hpp"
#include "flagbound/homology.hpp"
#include "flagbound/threshold.hpp"
#include "flagbound/verify.hpp"

namespace flagbound::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string str(const Integer& x) { return x.get_str(); }
std::string str(const Rational& x) { return x.get_str(); }

VectorSet load_input(const RunConfig& c) {
  if (c.n && c.input) throw UsageError("give exactly one of --n and --input");
  if (c.n) return generate_e(*c.n);
  if (c.input) {
    std::ifstream in(*c.input);
    if (!in) throw std::invalid_argument("cannot open vector-set file '" + *c.input + "'");
    return read_vector_set(in);
  }
  throw UsageError("one of --n or --input is required");
}

int require_n(const RunConfig& c) {
  if (!c.n) throw UsageError(c.subcommand + " requires --n");
  if (c.input) throw UsageError(c.subcommand + " does not take --input");
  return *c.n;
}

std::vector<WeightVector> load_weights(const std::string& source, std::size_t count) {
  if (source == "uniform") return {WeightVector::uniform(count)};
  if (source.rfind("random:", 0) == 0) {
    std::istringstream parts(source.substr(7));
    std::uint64_t seed = 0;
    std::size_t vectors = 0;
    char sep = 0;
    if (!(parts >> seed >> sep >> vectors) || sep != ':' || vectors == 0 || !parts.eof()) {
      throw UsageError("weights must look like random:<seed>:<count>, got '" + source + "'");
    }
    std::mt19937_64 rng(seed);
    std::vector<WeightVector> out;
    for (std::size_t k = 0; k < vectors; ++k) out.push_back(random_weight_vector(count, rng));
    return out;
  }
  std::ifstream in(source);
  if (!in) throw std::invalid_argument("cannot open weight file '" + source + "'");
  WeightVector p = read_weight_vector(in);
  if (p.size() != count) {
    throw std::invalid_argument("weight file has " + std::to_string(p.size()) + " entries, expected " +
                                std::to_string(count));
  }
  return {std::move(p)};
}

Field parse_field(const std::string& s) {
  if (s == "Q" || s == "q") return Field::rationals();
  try {
    std::size_t used = 0;
    const unsigned long p = std::stoul(s, &used);
    if (used == s.size()) return Field::gf(static_cast<std::uint32_t>(p));
  } catch (const std::logic_error&) {
  }
  throw UsageError("field must be a prime or Q, got '" + s + "'");
}

// Emits a flat record either as "key: value" lines or as one JSON object.
void emit(const Json& record, Format format, std::ostream& out) {
  if (format == Format::json) {
    out << record.dump() << '\n';
    return;
  }
  for (const auto& [key, value] : record.items()) {
    out << key << ": ";
    if (value.is_string()) out << value.get<std::string>();
    else if (value.is_array()) {
      for (std::size_t k = 0; k < value.size(); ++k) {
        if (k) out << ' ';
        out << (value[k].is_string() ? value[k].get<std::string>() : value[k].dump());
      }
    } else out << value.dump();
    out << '\n';
  }
}

int cmd_gen_e(const RunConfig& c, std::ostream& out) {
  write_vector_set(out, generate_e(require_n(c)));
  return 0;
}

int cmd_chambers(const RunConfig& c, std::ostream& out) {
  const VectorSet h = load_input(c);
  const Integer chambers = chamber_count(build_lattice(h, c.threads));
  Json r;
  r["chambers"] = str(chambers);
  bool ok = true;
  if (c.oracle) {
    const Integer dr = chamber_count_dr(h);
    ok = dr == chambers;
    r["deletion_restriction"] = str(dr);
    r["agree"] = ok;
  }
  emit(r, c.format, out);
  return ok ? 0 : 1;
}

int cmd_lambda(const RunConfig& c, std::ostream& out) {
  const VectorSet h = load_input(c);
  const IntersectionLattice lattice = build_lattice(h, c.threads);
  const Integer base = lambda_count(lattice, OrderPermutation::identity(h.size()));
  Json r;
  r["lambda"] = str(base);
  bool ok = true;
  if (c.order_trials > 0) {
    std::mt19937_64 rng(c.order_seed);
    Json values = Json::array();
    for (std::uint64_t k = 0; k < c.order_trials; ++k) {
      const Integer v = lambda_count(lattice, OrderPermutation::random(h.size(), rng));
      ok = ok && v == base;
      values.push_back(str(v));
    }
    r["random_orders"] = values;
    r["order_independent"] = ok;
  }
  emit(r, c.format, out);
  return ok ? 0 : 1;
}

int cmd_bound(const RunConfig& c, std::ostream& out) {
  const int n = require_n(c);
  const VectorSet e = generate_e(n);
  const IntersectionLattice lattice = build_lattice(e, c.threads);
  const auto weights = load_weights(c.weights, e.size());
  Json sums = Json::array();
  Json bounds = Json::array();
  bool same = true;
  Rational first;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    const Rational s = theorem1_sum(lattice, weights[k], c.threads);
    if (k == 0) first = s;
    same = same && s == first;
    sums.push_back(str(s));
    bounds.push_back(str(Rational(2 * s)));
  }
  Json r;
  r["n"] = n;
  r["weights"] = c.weights;
  r["flag_sums"] = sums;
  r["lower_bounds"] = bounds;
  r["p_independent"] = same;
  emit(r, c.format, out);
  return same ? 0 : 1;
}

int cmd_homology(const RunConfig& c, std::ostream& out) {
  const VectorSet h = load_input(c);
  const int degree = c.degree.value_or(static_cast<int>(h.ambient_dim()) - 2);
  const Field field = parse_field(c.field);
  Json r;
  r["degree"] = degree;
  r["field"] = field.name();
  r["rank"] = std::to_string(homology_rank(h, degree, field));
  emit(r, c.format, out);
  return 0;
}

int cmd_count_threshold(const RunConfig& c, std::ostream& out) {
  const int n = require_n(c);
  Json r;
  r["n"] = n;
  r["threshold_functions"] = str(count_threshold_functions(n, c.threads));
  emit(r, c.format, out);
  return 0;
}

int cmd_monte_carlo(const RunConfig& c, std::ostream& out) {
  const VectorSet h = load_input(c);
  const IntersectionLattice lattice = build_lattice(h, c.threads);
  const auto weights = load_weights(c.weights, h.size());
  const auto mc = monte_carlo_expectation(lattice, weights.front(), c.samples, c.seed);
  const Integer lambda = lambda_count(lattice, OrderPermutation::identity(h.size()));
  Json r;
  r["samples"] = mc.samples;
  r["mean"] = str(mc.mean);
  r["stderr_approx"] = mc.standard_error;
  r["min"] = str(mc.min_sample);
  r["max"] = str(mc.max_sample);
  r["lambda"] = str(lambda);
  emit(r, c.format, out);
  return mc.min_sample == lambda && mc.max_sample == lambda ? 0 : 1;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  const int n = require_n(c);
  VerifyLevel level;
  if (c.level == "fast") level = VerifyLevel::fast;
  else if (c.level == "full") level = VerifyLevel::full;
  else throw UsageError("level must be fast or full");
  const auto results = run_verification(n, level, c.seed, c.threads);
  bool all = true;
  Json checks = Json::array();
  for (const auto& check : results) {
    all = all && check.passed;
    if (c.format == Format::text) {
      out << (check.passed ? "PASS " : "FAIL ") << check.name << "  (" << check.detail << ")\n";
    }
    checks.push_back(Json{{"name", check.name}, {"passed", check.passed}, {"detail", check.detail}});
  }
  if (c.format == Format::json) {
    out << Json{{"n", n}, {"level", c.level}, {"all_passed", all}, {"checks", checks}}.dump() << '\n';
  } else {
    out << (all ? "all checks passed" : "some checks FAILED") << '\n';
  }
  return all ? 0 : 1;
}

int cmd_report(const RunConfig& c, std::ostream& out) {
  const int n = require_n(c);
  const BoundsReport report = bounds_report(n, true, c.threads);
  Json r;
  r["n"] = n;
  r["lower_bound"] = str(report.corollary_lower_bound);
  r["two_lambda"] = str(report.two_lambda);
  r["chambers"] = str(report.chamber_count);
  if (report.brute_force_count) r["brute_force"] = str(*report.brute_force_count);
  r["schlafli"] = str(report.schlafli_upper_bound);
  emit(r, c.format, out);
  return report.chain_holds() ? 0 : 1;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const std::string& s = config.subcommand;
    if (s == "gen-e") return cmd_gen_e(config, out);
    if (s == "chambers") return cmd_chambers(config, out);
    if (s == "lambda") return cmd_lambda(config, out);
    if (s == "bound") return cmd_bound(config, out);
    if (s == "homology") return cmd_homology(config, out);
    if (s == "count-threshold") return cmd_count_threshold(config, out);
    if (s == "monte-carlo") return cmd_monte_carlo(config, out);
    if (s == "verify") return cmd_verify(config, out);
    if (s == "report") return cmd_report(config, out);
    throw UsageError("unknown subcommand '" + s + "'");
  } catch (const GuardViolation& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return 2;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact bounds on the number of threshold Boolean functions"};
  app.require_subcommand(1);
  RunConfig config;
  std::string format = "text";
  app.add_option("--threads", config.threads, "worker threads (0: FLAGBOUND_THREADS or all cores)");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", config.out, "write output to this file");
  app.add_option("--seed", config.seed, "random seed");

  const auto add_common = [&](CLI::App* sub, bool allow_input) {
    auto* n_opt = sub->add_option("--n", config.n, "number of Boolean variables; uses the vector set E");
    if (allow_input) {
      auto* in_opt = sub->add_option("--input", config.input, "vector-set file");
      n_opt->excludes(in_opt);
    }
    sub->add_option("--threads", config.threads, "worker threads");
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", config.out, "write output to this file");
    sub->add_option("--seed", config.seed, "random seed");
  };

  auto* gen = app.add_subcommand("gen-e", "write the vector set E to a vector-set file");
  add_common(gen, false);
  auto* chambers = app.add_subcommand("chambers", "chamber count via the intersection lattice");
  add_common(chambers, true);
  chambers->add_flag("--oracle", config.oracle, "cross-check by deletion-restriction");
  auto* lambda = app.add_subcommand("lambda", "order-minimal independent tuple count");
  add_common(lambda, true);
  lambda->add_option("--order-seed", config.order_seed, "seed for random orders");
  lambda->add_option("--order-trials", config.order_trials, "number of random orders to compare");
  auto* bound = app.add_subcommand("bound", "flag-sum lower bound for each weight vector");
  add_common(bound, false);
  bound->add_option("--weights", config.weights, "file, uniform, or random:<seed>:<count>");
  auto* homology = app.add_subcommand("homology", "reduced homology rank of K^H");
  add_common(homology, true);
  homology->add_option("--degree", config.degree, "homology degree (default: ambient dimension - 2)");
  homology->add_option("--field", config.field, "prime characteristic or Q");
  auto* count = app.add_subcommand("count-threshold", "brute-force threshold function count");
  add_common(count, false);
  auto* mc = app.add_subcommand("monte-carlo", "sample I(gamma) under random orders");
  add_common(mc, true);
  mc->add_option("--samples", config.samples, "number of sampled orders")->check(CLI::PositiveNumber);
  mc->add_option("--weights", config.weights, "file or uniform (nonnegative)");
  auto* verify = app.add_subcommand("verify", "run the identity suite");
  add_common(verify, false);
  verify->add_option("--level", config.level, "fast or full")->check(CLI::IsMember({"fast", "full"}));
  auto* report = app.add_subcommand("report", "bounds table");
  add_common(report, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  config.subcommand = app.get_subcommands().front()->get_name();
  config.format = format == "json" ? Format::json : Format::text;

  if (config.out) {
    std::ofstream file(*config.out);
    if (!file) {
      err << "error: cannot write '" << *config.out << "'\n";
      return 2;
    }
    return run(config, file, err);
  }
  return run(config, out, err);
}

}  // namespace flagbound::cli
