#include "msum/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "msum/census.hpp"
#include "msum/closure.hpp"
#include "msum/errors.hpp"
#include "msum/json_io.hpp"
#include "msum/linearity.hpp"
#include "msum/schmerl.hpp"
#include "msum/set_io.hpp"

namespace msum {

namespace {

struct RunConfig {
  std::string seed;
  std::string input;
  std::optional<Value> bound;
  Value n = 3;
  Value min_window = kDefaultMinWindow;
  std::string family;
  std::string mode;
  std::string format = "text";
  std::size_t witnesses = 10;
  std::string out_path;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Loads --seed or --input; the horizon is --bound when given.
IntSet load_set(const RunConfig& cfg, bool bound_is_horizon) {
  if (cfg.seed.empty() == cfg.input.empty()) {
    throw UsageError("exactly one of --seed and --input is required");
  }
  IntSet s = cfg.seed.empty() ? read_set_file(cfg.input) : IntSet(parse_seed_list(cfg.seed));
  if (bound_is_horizon && cfg.bound) {
    if (*cfg.bound < s.max()) {
      throw InputError("--bound " + std::to_string(*cfg.bound) + " is below element " +
                       std::to_string(s.max()));
    }
    if (*cfg.bound > universe_cap()) {
      throw ResourceError("--bound exceeds universe cap " + std::to_string(universe_cap()));
    }
    s = IntSet(std::vector<Value>(s.elements().begin(), s.elements().end()), *cfg.bound);
  }
  return s;
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (cfg.format == f) return;
  }
  throw UsageError("unsupported --format " + cfg.format + " for this command");
}

std::string join(const std::vector<Value>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json"});
  const IntSet s = load_set(cfg, true);
  const SumProfile profile(s);
  const Classification c = classify(s, profile);
  const std::vector<Value> ms = multisums(profile);
  if (cfg.format == "json") {
    Json j{{"set", to_json(s)}, {"classification", to_json(c)}, {"multisums", ms}};
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  if (!c.is_multisum_closed) out << "not a multisum set\n";
  else if (c.is_vacuously_multisum) out << "multisum set (vacuous)\n";
  else out << "multisum set (non-vacuous)\n";
  out << "horizon: " << s.horizon() << '\n'
      << "sum_closed: " << yes_no(c.is_sum_closed) << '\n'
      << "multisum_closed: " << yes_no(c.is_multisum_closed) << '\n'
      << "vacuously_multisum: " << yes_no(c.is_vacuously_multisum) << '\n'
      << "sum_free: " << yes_no(c.is_sum_free) << '\n'
      << "multisum_free: " << yes_no(c.is_multisum_free) << '\n'
      << "complete_from: " << (c.complete_from ? std::to_string(*c.complete_from) : "none") << '\n'
      << "multisums: " << join(ms, " ") << '\n';
  return kExitOk;
}

int cmd_close(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json"});
  const IntSet seed = load_set(cfg, false);
  const Value bound = cfg.bound.value_or(seed.horizon());
  const std::string rule = cfg.mode.empty() ? "multisum" : cfg.mode;
  if (rule != "multisum" && rule != "sum") throw UsageError("--mode for close is multisum or sum");
  const ClosureResult r = rule == "sum" ? sum_closure(seed, bound) : multisum_closure(seed, bound);
  if (cfg.format == "json") {
    Json j = closure_stats_json(r);
    j["horizon"] = r.result.horizon();
    j["elements"] = std::vector<Value>(r.result.elements().begin(), r.result.elements().end());
    out << j.dump() << '\n';
  } else {
    write_set_text(out, r.result);
  }
  return r.saturated ? kExitOk : kExitNegative;
}

int cmd_multisums(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json"});
  const IntSet s = load_set(cfg, true);
  const SumProfile p(s);
  const auto ms = multisums(p);
  const auto strict = strict_multisums(p);
  const auto uni = unisums(p);
  if (cfg.format == "json") {
    out << Json{{"multisums", ms}, {"strict_multisums", strict}, {"unisums", uni}}.dump() << '\n';
  } else {
    out << "multisums: " << join(ms, " ") << '\n'
        << "strict_multisums: " << join(strict, " ") << '\n'
        << "unisums: " << join(uni, " ") << '\n';
  }
  return kExitOk;
}

int cmd_detect_linear(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json"});
  const IntSet s = load_set(cfg, true);
  const LinearityResult r = detect_linear(s, cfg.min_window);
  if (cfg.format == "json") {
    out << to_json(r).dump() << '\n';
  } else if (r.certificate) {
    out << "certificate k=" << r.certificate->k << " N=" << r.certificate->N
        << " horizon=" << r.certificate->horizon << " window_count=" << r.certificate->window_count
        << '\n';
  } else {
    out << to_string(r.status) << '\n';
  }
  return r.certificate ? kExitOk : kExitNegative;
}

int cmd_schmerl(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json"});
  const IntSet input = load_set(cfg, false);
  const Value bound = cfg.bound.value_or(input.horizon());
  const IntSet ambient = multisum_closure(input, bound).result;
  const SequencePrefix prefix = SequencePrefix::leading(ambient, cfg.n);

  const ConditionReport report = check_conditions(prefix);
  if (!report.passed) {
    out << Json{{"conditions", to_json(report)}}.dump(2) << '\n';
    return kExitNegative;
  }
  try {
    const ExtractionResult r = extract_modulus(prefix, ambient, cfg.min_window);
    out << to_json(r).dump(2) << '\n';
    return r.consistent ? kExitOk : kExitNegative;
  } catch (const ConditionViolation& e) {
    out << Json{{"conditions", to_json(report)},
                {"violation", {{"condition", e.condition()}, {"detail", e.what()}}}}
               .dump(2)
        << '\n';
    return kExitNegative;
  } catch (const WitnessError& e) {
    out << Json{{"conditions", to_json(report)}, {"witness_error", e.what()}}.dump(2) << '\n';
    return kExitNegative;
  }
}

int cmd_census(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json", "csv"});
  if (!cfg.bound) throw UsageError("census requires --bound");
  std::vector<Family> families;
  if (cfg.family.empty()) {
    families = {Family::multisum_set, Family::multisum_free, Family::sum_free, Family::sum_closed};
  } else if (auto f = parse_family(cfg.family)) {
    families = {*f};
  } else {
    throw UsageError("unknown --family " + cfg.family);
  }
  CensusMode mode = CensusMode::dfs_pruned;
  if (!cfg.mode.empty()) {
    auto m = parse_mode(cfg.mode);
    if (!m) throw UsageError("unknown --mode " + cfg.mode);
    mode = *m;
  }
  CensusOptions options;
  options.max_witnesses = cfg.witnesses;
  options.threads = std::max(1U, std::thread::hardware_concurrency());

  std::vector<CensusRecord> records;
  for (Family f : families) records.push_back(enumerate(f, *cfg.bound, mode, options));

  if (cfg.format == "csv") {
    out << "family,B,count,max_size\n";
    for (const auto& r : records) {
      out << to_string(r.family) << ',' << r.B << ',' << r.count << ',' << r.max_size << '\n';
    }
  } else if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& r : records) arr.push_back(to_json(r));
    out << arr.dump() << '\n';
  } else {
    for (const auto& r : records) {
      out << to_string(r.family) << " B=" << r.B << " count=" << r.count
          << " max_size=" << r.max_size << '\n';
      for (const auto& w : r.witnesses) out << "  {" << join(w, ",") << "}\n";
    }
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multisum set toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_set_options = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "Comma-separated ascending integers");
    sub->add_option("--input", cfg.input, "Set file (one integer per line, !horizon header)");
    sub->add_option("--bound", cfg.bound, "Horizon / closure bound B");
    sub->add_option("--format", cfg.format, "text|json");
    sub->add_option("--out", cfg.out_path, "Write output to this file");
  };

  auto* classify_cmd = app.add_subcommand("classify", "Classify a set against each family");
  add_set_options(classify_cmd);
  auto* close_cmd = app.add_subcommand("close", "Multisum (or sum) closure within [1, B]");
  add_set_options(close_cmd);
  close_cmd->add_option("--mode", cfg.mode, "multisum|sum");
  auto* multisums_cmd = app.add_subcommand("multisums", "List multisums, strict multisums, unisums");
  add_set_options(multisums_cmd);
  auto* linear_cmd = app.add_subcommand("detect-linear", "Certify eventual linearity to the horizon");
  add_set_options(linear_cmd);
  linear_cmd->add_option("--min-window", cfg.min_window, "Minimum multiples in the window");
  auto* schmerl_cmd = app.add_subcommand("schmerl", "Run the constructive pipeline on a closure");
  add_set_options(schmerl_cmd);
  schmerl_cmd->add_option("--n", cfg.n, "Condition threshold index n");
  schmerl_cmd->add_option("--min-window", cfg.min_window, "Minimum multiples in the window");
  auto* census_cmd = app.add_subcommand("census", "Count family members within {1..B}");
  census_cmd->add_option("--family", cfg.family, "multisum_set|multisum_free|sum_free|sum_closed");
  census_cmd->add_option("--bound", cfg.bound, "Universe {1..B}");
  census_cmd->add_option("--mode", cfg.mode, "exhaustive|dfs_pruned");
  census_cmd->add_option("--witnesses", cfg.witnesses, "Maximum extremal examples per family");
  census_cmd->add_option("--format", cfg.format, "text|json|csv");
  census_cmd->add_option("--out", cfg.out_path, "Write output to this file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    if (*classify_cmd) code = cmd_classify(cfg, buffer);
    else if (*close_cmd) code = cmd_close(cfg, buffer);
    else if (*multisums_cmd) code = cmd_multisums(cfg, buffer);
    else if (*linear_cmd) code = cmd_detect_linear(cfg, buffer);
    else if (*schmerl_cmd) code = cmd_schmerl(cfg, buffer);
    else if (*census_cmd) code = cmd_census(cfg, buffer);
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
    return kExitResource;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConditionViolation& e) {
    err << "condition violated: " << e.what() << '\n';
    return kExitNegative;
  }

  if (cfg.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.out_path);
    if (!file) {
      err << "cannot write " << cfg.out_path << '\n';
      return kExitUsage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace msum
