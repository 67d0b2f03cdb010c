#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "glstar/glstar.hpp"
#include "glstar/io_json.hpp"

namespace {

using namespace glstar;

enum ExitCode : int { ok = 0, failure = 1, bad_input = 2, over_budget = 3, no_algebra = 4 };

struct Flags {
  std::string mode = "prefix";
  std::size_t budget = 10000;
  std::uint64_t seed = 1;
  std::string dot;
  std::string json;
  bool quiet = false;
  bool interactive = false;
  std::string alphabet = "ab";
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << text;
}

/// A target named on the command line: "builtin:NAME" or a JSON file.
struct TargetSpec {
  std::string label;
  std::optional<BuiltinTarget> builtin;
  std::optional<Json> file;

  std::string file_kind() const { return file ? file->value("kind", std::string()) : std::string(); }
};

TargetSpec resolve(const std::string& spec) {
  TargetSpec t;
  t.label = spec;
  const std::string prefix = "builtin:";
  if (spec.rfind(prefix, 0) == 0)
    t.builtin = builtin_target(spec.substr(prefix.size()));
  else
    t.file = parse_json_text(read_file(spec));
  return t;
}

MooreMachine boolean_target(const TargetSpec& t) {
  if (t.builtin) {
    if (!t.builtin->dfa) throw InvalidInput("'" + t.label + "' is not a language of finite words");
    return *t.builtin->dfa;
  }
  return moore_from_json(*t.file);
}

CounterexampleMode parse_mode(const std::string& m) {
  if (m == "prefix") return CounterexampleMode::prefix;
  if (m == "suffix") return CounterexampleMode::suffix;
  throw InvalidInput("mode must be prefix or suffix");
}

LearnOptions options_from(const Flags& f) {
  LearnOptions o;
  o.mode = parse_mode(f.mode);
  o.max_membership_queries = f.budget;
  return o;
}

/// Teacher on stdin/stderr: membership answered y/n, equivalence with
/// "accept" or a counterexample word.
class PromptTeacher : public DfaTeacherBase {
 public:
  explicit PromptTeacher(Alphabet sigma) : sigma_(std::move(sigma)) {}

  bool membership(const Word& w) const override {
    while (true) {
      std::string line = ask("member? " + sigma_.format(w) + " [y/n] ");
      if (line == "y" || line == "yes") return true;
      if (line == "n" || line == "no") return false;
    }
  }

  std::optional<Word> equivalence(const MooreMachine& h) const override {
    std::cerr << to_json(h).dump(2) << "\n";
    std::string line = ask("equivalent? type accept or a counterexample: ");
    if (line == "accept") return std::nullopt;
    return sigma_.parse(line);
  }

 private:
  static std::string ask(const std::string& prompt) {
    std::cerr << prompt << std::flush;
    std::string line;
    if (!std::getline(std::cin, line)) throw InvalidInput("input closed while waiting for an answer");
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    return line;
  }

  Alphabet sigma_;
};

struct Report {
  Json json = Json::object();
  std::string dot;
};

Report make_report(const std::string& kind, const TargetSpec& t, const Flags& f, Json machine, const LearnStats& stats,
                   double ms, bool equivalent, bool minimal) {
  Report r;
  r.json["kind"] = kind;
  r.json["target"] = t.label;
  r.json["mode"] = f.mode;
  r.json["machine"] = std::move(machine);
  r.json["stats"] = to_json(stats);
  r.json["wall_time_ms"] = ms;
  r.json["verification"] = {{"equivalent", equivalent}, {"minimal", minimal}};
  return r;
}

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Report learn_dfa(const TargetSpec& t, const Flags& f) {
  Stopwatch clock;
  if (f.interactive) {
    PromptTeacher teacher(Alphabet::from_chars(f.alphabet));
    auto r = learn(BoolDomain(Alphabet::from_chars(f.alphabet)), teacher, options_from(f));
    Report rep = make_report("dfa", t, f, to_json(r.hypothesis), r.stats, clock.ms(), true, is_minimal(r.hypothesis));
    rep.dot = to_dot(r.hypothesis);
    return rep;
  }
  MooreMachine target = boolean_target(t);
  DfaTeacher teacher(target);
  auto r = learn(BoolDomain(target.alphabet()), teacher, options_from(f));
  Report rep = make_report("dfa", t, f, to_json(r.hypothesis), r.stats, clock.ms(),
                           !moore_distinguish(target, r.hypothesis), is_minimal(r.hypothesis));
  rep.dot = to_dot(r.hypothesis);
  return rep;
}

Report learn_wfa(const TargetSpec& t, const Flags& f) {
  Stopwatch clock;
  WeightedAutomaton target = [&] {
    if (t.builtin) {
      if (!t.builtin->wfa) throw InvalidInput("'" + t.label + "' is not a weighted target");
      return *t.builtin->wfa;
    }
    return wfa_from_json(*t.file);
  }();
  WfaTeacher teacher(target);
  auto r = learn(WeightedDomain(target.alphabet()), teacher, options_from(f));
  return make_report("wfa", t, f, to_json(r.hypothesis), r.stats, clock.ms(), !wfa_distinguish(target, r.hypothesis),
                     is_minimal(r.hypothesis));
}

Report learn_rfsa(const TargetSpec& t, const Flags& f) {
  Stopwatch clock;
  MooreMachine target = boolean_target(t);
  DfaTeacher teacher(target);
  JslDomain domain(target.alphabet());
  auto r = learn(domain, teacher, options_from(f));
  const auto& h = r.hypothesis;
  bool equivalent = !moore_distinguish(target, h.machine) && !rfsa_language_equiv(h.rfsa, target);
  Report rep = make_report("rfsa", t, f, to_json(h.rfsa), r.stats, clock.ms(), equivalent, domain.is_minimal(h));
  rep.json["lattice"] = to_json(h.machine);
  rep.dot = to_dot(h.machine);
  return rep;
}

Report learn_sorted(const TargetSpec& t, const Flags& f) {
  Stopwatch clock;
  SortedMachine target = [&] {
    if (t.builtin) {
      if (t.builtin->dfa) return as_single_sorted(*t.builtin->dfa);
      if (t.builtin->semigroup) return t.builtin->semigroup->reference;
      if (t.builtin->omega) return t.builtin->omega->reference;
      throw InvalidInput("'" + t.label + "' has no sorted reference machine");
    }
    if (t.file_kind() == "moore") return as_single_sorted(moore_from_json(*t.file));
    return sorted_from_json(*t.file);
  }();
  SortedTeacher teacher(target);
  auto r = learn(SortedDomain(target.alphabet()), teacher, options_from(f));
  Report rep = make_report("sorted", t, f, to_json(r.hypothesis), r.stats, clock.ms(),
                           !sorted_distinguish(target, r.hypothesis), is_minimal(r.hypothesis));
  rep.dot = to_dot(r.hypothesis);
  return rep;
}

SemigroupTarget semigroup_target(const TargetSpec& t) {
  if (t.builtin && t.builtin->semigroup) return *t.builtin->semigroup;
  if (t.builtin && t.builtin->kind != TargetKind::boolean)
    throw InvalidInput("'" + t.label + "' is not a language of finite words");
  MooreMachine dfa = boolean_target(t);
  Presentation p = Presentation::semigroup(dfa.alphabet());
  return {p, [dfa](const Word& w) { return !w.empty() && run_moore(dfa, w); }, transition_semigroup_machine(dfa, p)};
}

/// A sorted machine file over a semigroup or weak Wilke presentation whose
/// base letters are the generator names.
std::pair<Presentation, SortedMachine> presented_machine(const TargetSpec& t, bool wilke) {
  SortedMachine m = sorted_from_json(*t.file);
  std::vector<std::string> names;
  for (const auto& g : m.alphabet().generators()) names.push_back(g.name);
  Alphabet base(names);
  Presentation p = wilke ? Presentation::wilke(base) : Presentation::semigroup(base);
  if (!(p.alphabet() == m.alphabet()))
    throw InvalidInput(std::string("machine alphabet is not the ") + (wilke ? "weak Wilke" : "semigroup") +
                       " presentation of its generators");
  return {p, m};
}

Report learn_presented(const std::string& kind, const TargetSpec& t, const Flags& f, const Presentation& p,
                       const SortedTeacherBase& teacher, const SortedMachine& reference, bool extract) {
  Stopwatch clock;
  auto r = learn(SortedDomain(p.alphabet()), teacher, options_from(f));
  Json algebra;
  if (extract)
    algebra = p.is_wilke() ? to_json(extract_wilke_algebra(p, r.hypothesis), p.base())
                           : to_json(extract_syntactic_semigroup(p, r.hypothesis), p.base());
  Report rep = make_report(kind, t, f, to_json(r.hypothesis), r.stats, clock.ms(),
                           !sorted_distinguish(reference, r.hypothesis), is_minimal(r.hypothesis));
  if (extract) rep.json["algebra"] = std::move(algebra);
  rep.dot = to_dot(r.hypothesis);
  return rep;
}

Report learn_semigroup(const TargetSpec& t, const Flags& f) {
  if (t.file && t.file_kind() == "sorted") {
    auto [p, m] = presented_machine(t, false);
    return learn_presented("semigroup", t, f, p, SortedTeacher(m), m, true);
  }
  SemigroupTarget target = semigroup_target(t);
  return learn_presented("semigroup", t, f, target.presentation, semigroup_teacher(target), target.reference, true);
}

Report learn_omega(const TargetSpec& t, const Flags& f, const std::string& kind, bool extract) {
  if (t.file && t.file_kind() == "sorted") {
    auto [p, m] = presented_machine(t, true);
    return learn_presented(kind, t, f, p, SortedTeacher(m), m, extract);
  }
  if (!t.builtin || !t.builtin->omega) throw InvalidInput("'" + t.label + "' is not a lasso target");
  const LassoOracleTarget& target = *t.builtin->omega;
  return learn_presented(kind, t, f, target.presentation, wilke_teacher(target), target.reference, extract);
}

void emit(const Json& j, const Flags& f) {
  if (!f.json.empty()) write_file(f.json, j.dump(2) + "\n");
  if (!f.quiet) std::cout << j.dump(2) << "\n";
}

int cmd_learn(const std::string& kind, const std::string& target, const Flags& f) {
  if (f.interactive && kind != "dfa") throw InvalidInput("--interactive is only available for dfa learning");
  TargetSpec t = f.interactive ? TargetSpec{"interactive", std::nullopt, std::nullopt} : resolve(target);
  parse_mode(f.mode);
  Report rep;
  if (kind == "dfa")
    rep = learn_dfa(t, f);
  else if (kind == "wfa")
    rep = learn_wfa(t, f);
  else if (kind == "rfsa")
    rep = learn_rfsa(t, f);
  else if (kind == "sorted")
    rep = learn_sorted(t, f);
  else if (kind == "semigroup")
    rep = learn_semigroup(t, f);
  else if (kind == "omega")
    rep = learn_omega(t, f, "omega", false);
  else if (kind == "wilke")
    rep = learn_omega(t, f, "wilke", true);
  else
    throw InvalidInput("unknown kind '" + kind + "'");
  if (!f.dot.empty()) {
    if (rep.dot.empty()) throw InvalidInput("no DOT rendering for kind '" + kind + "'");
    write_file(f.dot, rep.dot);
  }
  emit(rep.json, f);
  return rep.json["verification"]["equivalent"].get<bool>() ? ok : failure;
}

int cmd_minimize(const std::string& path, const Flags& f) {
  Json j = parse_json_text(read_file(path));
  std::string kind = j.value("kind", std::string());
  if (kind == "moore") {
    MooreMachine m = minimize_moore(moore_from_json(j));
    if (!f.dot.empty()) write_file(f.dot, to_dot(m));
    emit(to_json(m), f);
  } else if (kind == "sorted") {
    SortedMachine m = minimize_sorted(sorted_from_json(j));
    if (!f.dot.empty()) write_file(f.dot, to_dot(m));
    emit(to_json(m), f);
  } else {
    throw InvalidInput("minimize expects a moore or sorted machine");
  }
  return ok;
}

int cmd_validate(const std::string& target, const Flags& f) {
  TargetSpec t = resolve(target);
  Json out = Json::object();
  out["target"] = t.label;
  if (t.builtin) {
    const BuiltinTarget& b = *t.builtin;
    out["kind"] = kind_name(b.kind);
    bool self = true;
    if (b.dfa) self = !DfaTeacher(*b.dfa).equivalence(*b.dfa);
    if (b.wfa) self = !WfaTeacher(*b.wfa).equivalence(*b.wfa);
    if (b.semigroup) self = !semigroup_teacher(*b.semigroup).equivalence(b.semigroup->reference);
    if (b.omega) {
      b.omega->validate(f.seed);
      self = !wilke_teacher(*b.omega).equivalence(b.omega->reference);
    }
    out["self_equivalent"] = self;
    if (!self) throw InvalidInput("builtin target '" + b.name + "' is not equivalent to itself");
  } else {
    std::string kind = t.file_kind();
    out["kind"] = kind;
    if (kind == "moore") {
      MooreMachine m = moore_from_json(*t.file);
      out["states"] = m.size();
      out["minimal"] = is_minimal(m);
    } else if (kind == "wfa") {
      WeightedAutomaton m = wfa_from_json(*t.file);
      out["dimension"] = m.dimension();
      out["minimal"] = is_minimal(m);
    } else if (kind == "sorted") {
      SortedMachine m = sorted_from_json(*t.file);
      out["states"] = m.state_counts();
      out["minimal"] = is_minimal(m);
    } else if (kind == "rfsa") {
      Rfsa r = rfsa_from_json(*t.file);
      out["states"] = r.states;
    } else {
      throw InvalidInput("unknown machine kind '" + kind + "'");
    }
  }
  out["valid"] = true;
  emit(out, f);
  return ok;
}

struct BenchRow {
  std::string target;
  std::size_t states = 0;
  LearnStats stats;
};

std::vector<std::pair<std::string, MooreMachine>> bench_suite(const std::string& suite, std::uint64_t seed,
                                                              std::size_t count) {
  std::vector<std::pair<std::string, MooreMachine>> out;
  if (suite == "empty") return out;
  if (suite == "mod-counters") {
    for (std::size_t k = 2; k <= 8; ++k) out.emplace_back("mod-" + std::to_string(k), mod_counter_dfa(k));
    return out;
  }
  if (suite == "builtin") {
    for (const auto& t : builtin_targets())
      if (t.dfa) out.emplace_back(t.name, *t.dfa);
    return out;
  }
  if (suite == "random") {
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < count; ++i)
      out.emplace_back("random-" + std::to_string(i), random_minimal_dfa(rng, 12, ab_alphabet()));
    return out;
  }
  if (suite.rfind("builtin:", 0) == 0) {
    BuiltinTarget t = builtin_target(suite.substr(8));
    if (!t.dfa) throw InvalidInput("bench suites hold DFA targets only");
    out.emplace_back(t.name, *t.dfa);
    return out;
  }
  throw InvalidInput("unknown suite '" + suite + "'");
}

int cmd_bench(const std::string& suite, std::size_t count, std::size_t jobs, const Flags& f) {
  auto targets = bench_suite(suite, f.seed, count);
  LearnOptions options = options_from(f);
  auto run_one = [&](std::size_t i) {
    const auto& [name, dfa] = targets[i];
    DfaTeacher teacher(dfa);
    auto r = learn(BoolDomain(dfa.alphabet()), teacher, options);
    return BenchRow{name, dfa.size(), r.stats};
  };
  std::vector<BenchRow> rows(targets.size());
  jobs = std::max<std::size_t>(jobs, 1);
  for (std::size_t start = 0; start < targets.size(); start += jobs) {
    std::vector<std::future<BenchRow>> batch;
    for (std::size_t i = start; i < std::min(start + jobs, targets.size()); ++i)
      batch.push_back(std::async(jobs == 1 ? std::launch::deferred : std::launch::async, run_one, i));
    for (std::size_t i = 0; i < batch.size(); ++i) rows[start + i] = batch[i].get();
  }

  Json out = Json::object();
  out["suite"] = suite;
  out["seed"] = f.seed;
  out["mode"] = f.mode;
  Json table = Json::array();
  for (const auto& r : rows)
    table.push_back({{"target", r.target},
                     {"states", r.states},
                     {"membership_queries", r.stats.membership_queries},
                     {"equivalence_queries", r.stats.equivalence_queries},
                     {"rounds", r.stats.rounds},
                     {"extend_s_calls", r.stats.extend_s_calls},
                     {"extend_t_calls", r.stats.extend_t_calls}});
  out["rows"] = table;
  if (!f.json.empty()) write_file(f.json, out.dump(2) + "\n");
  if (!f.quiet) {
    std::cout << "# suite " << suite << " seed " << f.seed << " mode " << f.mode << "\n";
    std::cout << std::left << std::setw(16) << "target" << std::right << std::setw(8) << "states" << std::setw(10)
              << "mq" << std::setw(6) << "eq" << std::setw(8) << "rounds" << "\n";
    for (const auto& r : rows)
      std::cout << std::left << std::setw(16) << r.target << std::right << std::setw(8) << r.states << std::setw(10)
                << r.stats.membership_queries << std::setw(6) << r.stats.equivalence_queries << std::setw(8)
                << r.stats.rounds << "\n";
  }
  return ok;
}

int cmd_list(const Flags& f) {
  Json out = Json::array();
  for (const auto& t : builtin_targets())
    out.push_back({{"name", t.name}, {"kind", kind_name(t.kind)}, {"description", t.description}});
  if (f.quiet) return ok;
  for (const auto& t : out)
    std::cout << std::left << std::setw(16) << t["name"].get<std::string>() << std::setw(11)
              << t["kind"].get<std::string>() << t["description"].get<std::string>() << "\n";
  return ok;
}

void add_output_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--json", f.json, "write the JSON result to PATH");
  cmd->add_flag("--quiet,-q", f.quiet, "do not print the result");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"glstar: active learning of automata and syntactic algebras"};
  app.require_subcommand(1);
  Flags f;

  std::string kind, target;
  auto* learn_cmd = app.add_subcommand("learn", "learn a target with membership and equivalence queries");
  learn_cmd->add_option("--kind", kind, "dfa, wfa, rfsa, sorted, omega, semigroup or wilke")
      ->required()
      ->check(CLI::IsMember({"dfa", "wfa", "rfsa", "sorted", "omega", "semigroup", "wilke"}));
  learn_cmd->add_option("--target", target, "builtin:NAME or a JSON machine file");
  learn_cmd->add_option("--mode", f.mode, "counterexample handling: prefix or suffix")
      ->check(CLI::IsMember({"prefix", "suffix"}));
  learn_cmd->add_option("--budget", f.budget, "membership query budget (0 for none)");
  learn_cmd->add_option("--seed", f.seed, "seed for randomized target checks");
  learn_cmd->add_option("--dot", f.dot, "write the learned machine as DOT to PATH");
  learn_cmd->add_flag("--interactive", f.interactive, "answer queries on the terminal");
  learn_cmd->add_option("--alphabet", f.alphabet, "letters for --interactive, one per character");
  add_output_flags(learn_cmd, f);

  std::string file;
  auto* min_cmd = app.add_subcommand("minimize", "minimize a moore or sorted machine");
  min_cmd->add_option("file", file, "JSON machine")->required();
  min_cmd->add_option("--dot", f.dot, "write the result as DOT to PATH");
  add_output_flags(min_cmd, f);

  std::string suite = "mod-counters";
  std::size_t count = 20, jobs = 1;
  auto* bench_cmd = app.add_subcommand("bench", "learn a suite of DFA targets and tabulate query counts");
  bench_cmd->add_option("--suite", suite, "mod-counters, builtin, random, empty or builtin:NAME");
  bench_cmd->add_option("--seed", f.seed, "seed for the random suite");
  bench_cmd->add_option("--count", count, "size of the random suite");
  bench_cmd->add_option("--jobs", jobs, "targets learned concurrently");
  bench_cmd->add_option("--mode", f.mode, "counterexample handling: prefix or suffix")
      ->check(CLI::IsMember({"prefix", "suffix"}));
  bench_cmd->add_option("--budget", f.budget, "membership query budget per target (0 for none)");
  add_output_flags(bench_cmd, f);

  std::string vtarget;
  auto* validate_cmd = app.add_subcommand("validate", "check that a target file or builtin is well formed");
  validate_cmd->add_option("target", vtarget, "builtin:NAME or a JSON machine file")->required();
  validate_cmd->add_option("--seed", f.seed, "seed for sampled lasso checks");
  add_output_flags(validate_cmd, f);

  auto* list_cmd = app.add_subcommand("list", "list builtin targets");
  list_cmd->add_flag("--quiet,-q", f.quiet, "print nothing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : bad_input;
  }

  try {
    if (*learn_cmd) {
      if (target.empty() && !f.interactive) throw InvalidInput("--target is required");
      return cmd_learn(kind, target, f);
    }
    if (*min_cmd) return cmd_minimize(file, f);
    if (*bench_cmd) return cmd_bench(suite, count, jobs, f);
    if (*validate_cmd) return cmd_validate(vtarget, f);
    if (*list_cmd) return cmd_list(f);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bad_input;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return over_budget;
  } catch (const ExtractionError& e) {
    std::cerr << "extraction failed: " << e.what() << "\n";
    return no_algebra;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return failure;
  }
  return failure;
}
