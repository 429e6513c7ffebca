#include "json_io.hpp"
#include "selftest.hpp"

#include "indcalc/compile.hpp"
#include "indcalc/family.hpp"
#include "indcalc/history.hpp"
#include "indcalc/kindex.hpp"
#include "indcalc/programs.hpp"
#include "indcalc/validate.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace indcalc;
using io::json;

namespace {

// stable exit codes, listed in the README
enum Exit : int {
  ok = 0,
  usage = 2,
  bad_input = 3,
  partiality = 4,
  selftest_failed = 5,
  no_termination = 6,
  not_an_index = 10,
  oracle_undefined = 11,
  partial_induction = 12,
  budget_exceeded = 13,
  totality_violation = 14,
  loop = 15,
  internal = 70,
};

int exit_of(Outcome o) {
  switch (o) {
    case Outcome::value: return ok;
    case Outcome::not_an_index: return not_an_index;
    case Outcome::oracle_undefined: return oracle_undefined;
    case Outcome::partial_induction: return partial_induction;
    case Outcome::budget_exceeded: return budget_exceeded;
    case Outcome::totality_violation: return totality_violation;
    case Outcome::loop: return loop;
  }
  return internal;
}

struct Config {
  std::uint64_t budget = 200'000;
  std::uint64_t seed = 0;
  std::size_t n = 2;
  std::string out;
  // index and environment
  std::string index;
  std::string env_path;
  std::string battery_name;
  bool total = false;
  bool norm = false;
  bool trace = false;
  std::string input;
  std::size_t family_range = 2;
  std::vector<std::uint64_t> family_values{0, 1, 2};
  bool family_set = false;
  std::string family = "auto";
};

void emit(const Config& cfg, const json& j) {
  if (cfg.out.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw io::input_error(cfg.out, "cannot write");
  f << j.dump(2) << "\n";
}

struct Target {
  Index e;
  Env env;
  std::size_t family_range = 2;
  std::vector<Nat> family_values;
};

Target target_of(const Config& cfg) {
  Target t;
  if (!cfg.battery_name.empty()) {
    if (!cfg.index.empty() || !cfg.env_path.empty())
      throw io::input_error("--battery", "cannot be combined with --index or --env");
    for (auto& it : battery())
      if (it.name == cfg.battery_name) {
        t.e = it.e;
        t.env = it.env;
        t.family_range = it.family_range;
        t.family_values = it.family_values;
      }
    if (!t.e) throw io::input_error("--battery", "no battery item named " + cfg.battery_name);
  } else {
    if (cfg.index.empty()) throw io::input_error("--index", "an index or --battery is required");
    t.e = io::index_of(cfg.index);
    if (!cfg.env_path.empty()) t.env = io::env_of(io::read_file(cfg.env_path));
    t.family_range = 2;
    t.family_values = {0, 1, 2};
  }
  if (cfg.family_set) {
    t.family_range = cfg.family_range;
    t.family_values.clear();
    for (auto v : cfg.family_values) t.family_values.push_back(Nat(v));
  }
  return t;
}

const Type2Oracle& first_oracle(const Target& t) {
  if (t.env.oracles.empty()) throw io::input_error("/oracles", "the environment needs an oracle F");
  return t.env.oracles[0];
}

// every support-n table, plus F last when it has the same support; F alone otherwise, since
// the induction base follows the oracle's support
ProcedureFamily family_of(const Config& cfg, const Target& t) {
  if (cfg.n > 3) throw io::input_error("--n", "family support above 3");
  const auto& f = first_oracle(t);
  std::vector<Type2Oracle> oracles;
  if (cfg.family != "self" && f.support() == cfg.n) oracles = oracle_tables(cfg.n, t.family_range, t.family_values);
  if (cfg.family == "tables" && oracles.empty())
    throw io::input_error("--family", "F has support " + std::to_string(f.support()) + ", not --n");
  oracles.push_back(f);
  auto fam = compiled_family(t.e, t.env, oracles, cfg.budget);
  if (fam.members.empty() || fam.sources.back().id() != f.id()) throw nontermination_error(eval_p(t.e, t.env, cfg.budget));
  return fam;
}

int cmd_induct(const Config& cfg) {
  auto f = io::step_functional_of(io::read_file(cfg.input));
  auto t = iterate(f);
  emit(cfg, io::ind_trace_json(t));
  return t.closed ? ok : partiality;
}

int cmd_eval(const Config& cfg) {
  auto t = target_of(cfg);
  Evaluator ev({cfg.total ? Mode::total : Mode::partial, cfg.budget, true});
  auto tree = ev.eval_tree(Comp{t.e, t.env});
  json out = io::comp_result_json(tree->result);
  if (cfg.norm && tree->result.ok()) out["norm"] = tree->norm;
  if (cfg.trace) {
    try {
      out["trace"] = io::trace_json(moschovakis_trace(t.e, t.env, cfg.budget));
    } catch (const terminates_error&) {
      out["trace"] = nullptr;
    }
  }
  out["version"] = io::format_version;
  emit(cfg, out);
  return exit_of(tree->result.kind);
}

int cmd_compile(const Config& cfg) {
  auto t = target_of(cfg);
  auto calc = compile_computation(t.e, t.env, first_oracle(t), cfg.budget);
  emit(cfg, io::calc_json(calc));
  return ok;
}

int cmd_validate(const Config& cfg) {
  auto t = target_of(cfg);
  auto rep = io::representation_of_json(io::read_file(cfg.input));
  auto v = validate_representation(t.e, t.env, rep, cfg.budget);
  json out;
  if (auto* a = std::get_if<Accept>(&v)) {
    out["verdict"] = "accept";
    out["value"] = io::nat_json(a->value);
  } else {
    out["verdict"] = "reject";
    out["reason"] = std::get<Reject>(v).reason;
  }
  out["version"] = io::format_version;
  emit(cfg, out);
  return ok;
}

int cmd_honest(const Config& cfg) {
  auto t = target_of(cfg);
  const auto& f = first_oracle(t);
  auto fam = family_of(cfg, t);
  auto h = honest_history(fam, f);
  auto d = decode_history(h);
  json out;
  out["codes"] = h.size();
  out["calculation"] = d ? io::calc_json(*d) : json(nullptr);
  out["agrees"] = d && *d == fam.members.back();
  out["version"] = io::format_version;
  emit(cfg, out);
  return ok;
}

int cmd_delay(const Config& cfg) {
  auto t = target_of(cfg);
  auto fam = family_of(cfg, t);
  const auto& calc = fam.members.back();
  json delays = json::array();
  for (std::size_t b = 0; b < calc.size(); ++b) delays.push_back(delay_at(fam, calc, b));
  json out;
  out["members"] = fam.members.size();
  out["delays"] = delays;
  out["version"] = io::format_version;
  emit(cfg, out);
  return ok;
}

int cmd_consistency(const Config& cfg) {
  auto t = target_of(cfg);
  auto fam = family_of(cfg, t);
  auto bad = consistency_check(fam.members);
  json out;
  out["members"] = fam.members.size();
  out["consistent"] = !bad;
  out["conflict"] = bad ? json::array({bad->first, bad->second}) : json(nullptr);
  out["version"] = io::format_version;
  emit(cfg, out);
  return ok;
}

int cmd_hb(const Config& cfg) {
  auto f = io::depth_oracle_of(io::read_file(cfg.input));
  auto leaves = strong_hb(f);
  json ls = json::array(), cover = json::array();
  for (auto l : leaves) ls.push_back(io::bits_string(f.bits(l)));
  for (const auto& c : weak_from_strong(f, leaves)) cover.push_back(io::bits_string(c));
  json out;
  out["leaves"] = ls;
  out["cover"] = cover;
  out["version"] = io::format_version;
  emit(cfg, out);
  return ok;
}

int cmd_pincherle(const Config& cfg) {
  auto f = io::depth_oracle_of(io::read_file(cfg.input));
  json w = json::array();
  for (auto v : pincherle_witness(f)) w.push_back(v);
  json out;
  out["bound"] = pincherle(f);
  out["witness"] = w;
  out["version"] = io::format_version;
  emit(cfg, out);
  return ok;
}

int cmd_recover(const Config& cfg) {
  auto f = io::step_functional_of(io::read_file(cfg.input));
  if (f.base_size() > 3) throw io::input_error("/n", "recover needs B <= 3");
  PinConstruction pin(f);
  auto got = recover_pwo(pin);
  auto want = stage_order(iterate(f));
  json out;
  out["recovered"] = io::finorder_json(got);
  out["stage_order"] = io::finorder_json(want);
  out["agreement"] = got == want;
  out["threshold"] = pin.threshold();
  out["version"] = io::format_version;
  emit(cfg, out);
  return ok;
}

int cmd_selftest(const Config& cfg) {
  if (cfg.n > 2) throw io::input_error("--n", "selftest sweeps stop at n = 2");
  auto out = cli::selftest(cfg.n, cfg.seed, cfg.budget);
  emit(cfg, out);
  return out["pass"].get<bool>() ? ok : selftest_failed;
}

void target_options(CLI::App* app, Config& cfg) {
  app->add_option("--index", cfg.index, "index as an s-expression such as (S4 (S1) (S3)) or a numeric code");
  app->add_option("--env", cfg.env_path, "environment JSON file");
  app->add_option("--battery", cfg.battery_name, "use a built-in battery item instead of --index/--env");
}

void family_options(CLI::App* app, Config& cfg) {
  app->add_option("--family", cfg.family, "tables: every support-n table plus F; self: F alone; auto: tables when F has support n")
      ->check(CLI::IsMember({"auto", "tables", "self"}));
  app->add_option("--family-range", cfg.family_range, "argument range of the family oracles")
      ->check(CLI::Range(1, 4))
      ->each([&](const std::string&) { cfg.family_set = true; });
  app->add_option("--family-values", cfg.family_values, "answer alphabet of the family oracles")
      ->delimiter(',')
      ->each([&](const std::string&) { cfg.family_set = true; });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"inductive definitions, Kleene computations and their calculations"};
  app.fallthrough();
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--budget", cfg.budget, "step budget")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for sampled checks");
  app.add_option("--n", cfg.n, "base size: family support for procedure commands, sweep size for selftest")
      ->check(CLI::Range(0, 8));
  app.add_option("--out", cfg.out, "write the JSON here instead of stdout");

  std::function<int()> action;

  auto* induct = app.add_subcommand("induct", "iterate a step functional to its closure stage");
  induct->add_option("file", cfg.input, "step functional JSON")->required();
  induct->callback([&] { action = [&] { return cmd_induct(cfg); }; });

  auto* eval = app.add_subcommand("eval", "evaluate an index");
  target_options(eval, cfg);
  auto* total = eval->add_flag("--total", cfg.total, "total semantics");
  auto* partial = eval->add_flag("--partial", "partial semantics (default)");
  total->excludes(partial);
  eval->add_flag("--norm", cfg.norm, "report the norm of a terminating computation");
  eval->add_flag("--trace", cfg.trace, "report the leftmost divergence chain, at most --budget frames");
  eval->callback([&] { action = [&] { return cmd_eval(cfg); }; });

  auto* proc = app.add_subcommand("procedure", "calculations and procedures");
  proc->require_subcommand(1);
  auto* compile = proc->add_subcommand("compile", "the calculation of a terminating computation for F = oracle 0");
  target_options(compile, cfg);
  compile->callback([&] { action = [&] { return cmd_compile(cfg); }; });
  auto* validate = proc->add_subcommand("validate", "check a representation file against an index");
  target_options(validate, cfg);
  validate->add_option("file", cfg.input, "representation JSON")->required();
  validate->callback([&] { action = [&] { return cmd_validate(cfg); }; });
  auto* honest = proc->add_subcommand("honest", "least fixed point of the history operator, decoded");
  target_options(honest, cfg);
  family_options(honest, cfg);
  honest->callback([&] { action = [&] { return cmd_honest(cfg); }; });
  auto* delay = proc->add_subcommand("delay", "delay of every position of F's calculation over the family");
  target_options(delay, cfg);
  family_options(delay, cfg);
  delay->callback([&] { action = [&] { return cmd_delay(cfg); }; });
  auto* consistency = proc->add_subcommand("consistency", "branching consistency of the compiled family");
  target_options(consistency, cfg);
  family_options(consistency, cfg);
  consistency->callback([&] { action = [&] { return cmd_consistency(cfg); }; });

  auto* real = app.add_subcommand("realiser", "Heine-Borel and Pincherle realisers");
  real->require_subcommand(1);
  auto* hb = real->add_subcommand("hb", "finite subcover of a depth oracle");
  hb->add_option("file", cfg.input, "depth oracle JSON")->required();
  hb->callback([&] { action = [&] { return cmd_hb(cfg); }; });
  auto* pin = real->add_subcommand("pincherle", "least uniform bound of a depth oracle");
  pin->add_option("file", cfg.input, "depth oracle JSON")->required();
  pin->callback([&] { action = [&] { return cmd_pincherle(cfg); }; });
  auto* rec = real->add_subcommand("recover", "the stage prewellordering read off the Pincherle realiser");
  rec->add_option("file", cfg.input, "step functional JSON, B <= 3")->required();
  rec->callback([&] { action = [&] { return cmd_recover(cfg); }; });

  auto* self = app.add_subcommand("selftest", "exhaustive sweeps at n <= 2 and L <= 2");
  self->callback([&] { action = [&] { return cmd_selftest(cfg); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }
  try {
    return action();
  } catch (const io::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return bad_input;
  } catch (const partiality_error& e) {
    std::cerr << e.what() << "\n";
    return partiality;
  } catch (const nontermination_error& e) {
    std::cerr << e.what() << "\n";
    return no_termination;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return internal;
  }
}
