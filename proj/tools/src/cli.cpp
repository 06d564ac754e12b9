#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "siacp/analysis/bisim.hpp"
#include "siacp/analysis/traces.hpp"
#include "siacp/frontend/config.hpp"
#include "siacp/frontend/export.hpp"
#include "siacp/frontend/parser.hpp"
#include "siacp/frontend/render.hpp"
#include "siacp/kernel/error.hpp"
#include "siacp/kernel/normalize.hpp"
#include "siacp/rewrite/eliminate.hpp"
#include "siacp/rewrite/reduce.hpp"
#include "siacp/sos/lts.hpp"
#include "siacp/sos/semantics.hpp"

namespace siacp::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Session {
  std::string config_path;
  frontend::LoadedConfig loaded = frontend::default_config();

  void load() {
    if (!config_path.empty()) loaded = frontend::load_config_file(config_path);
  }

  Term parse(const std::string& src) {
    frontend::ParseOptions opts;
    opts.infer_actions = config_path.empty();
    return frontend::parse_term(src, loaded.cfg, *loaded.strategy, opts);
  }

  const SystemConfig& cfg() const { return loaded.cfg; }
  const strategy::Strategy& strat() const { return *loaded.strategy; }
};

// One term, given inline or with -f.
struct TermInput {
  std::string inline_src;
  std::string file;

  void attach(CLI::App* cmd) {
    cmd->add_option("term", inline_src, "Term source");
    cmd->add_option("-f,--file", file, "Read the term from a file");
  }

  std::string source() const {
    if (!file.empty() && !inline_src.empty()) throw UsageError("give the term inline or with -f, not both");
    if (!file.empty()) return read_file(file);
    if (inline_src.empty()) throw UsageError("no term given");
    return inline_src;
  }
};

struct LtsFlags {
  std::size_t max_states = 100000;
  std::size_t max_depth = 10000;
  std::string digest = "on";

  void attach(CLI::App* cmd) {
    cmd->add_option("--max-states", max_states, "State budget")->capture_default_str();
    cmd->add_option("--max-depth", max_depth, "Depth budget")->capture_default_str();
    cmd->add_option("--digest", digest, "Quotient histories by the strategy digest")
        ->check(CLI::IsMember({"on", "off"}))
        ->capture_default_str();
  }

  sos::LtsOptions options(bool complete) const {
    sos::LtsOptions o;
    o.max_states = max_states;
    o.max_depth = max_depth;
    o.digest = digest == "on";
    o.require_complete = complete;
    return o;
  }
};

void print_violations(const std::vector<analysis::Violation>& vs, std::ostream& out) {
  for (const auto& v : vs) {
    out << to_string(v.kind) << " at state " << v.state << ": " << analysis::render_trace(v.witness);
    if (!v.detail.empty()) out << " (" << v.detail << ")";
    out << "\n";
  }
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Strategic interleaving toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Session session;
  app.add_option("-c,--config", session.config_path, "System configuration (YAML)");

  TermInput parse_in, lts_in, elim_in, reduce_in, sim_in, mutex_in, dead_in;
  LtsFlags lts_flags, mutex_flags, dead_flags, bisim_flags;

  auto* parse_cmd = app.add_subcommand("parse", "Echo the canonical form of a term");
  parse_in.attach(parse_cmd);

  auto* lts_cmd = app.add_subcommand("lts", "Build and export the transition system");
  lts_in.attach(lts_cmd);
  lts_flags.attach(lts_cmd);
  std::string format = "dot";
  lts_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"dot", "json"}))
      ->capture_default_str();

  auto* elim_cmd = app.add_subcommand("eliminate", "Rewrite to a basic term");
  elim_in.attach(elim_cmd);

  auto* reduce_cmd = app.add_subcommand("reduce", "Rewrite to a recursive specification");
  reduce_in.attach(reduce_cmd);

  auto* bisim_cmd = app.add_subcommand("bisim", "Decide strong bisimilarity of two terms");
  std::vector<std::string> bisim_terms;
  bisim_cmd->add_option("terms", bisim_terms, "Two terms, or one together with -f")->expected(0, 2);
  std::vector<std::string> bisim_files;
  bisim_cmd->add_option("-f,--file", bisim_files, "Read a term from a file (repeatable)")->allow_extra_args(false);
  bisim_flags.attach(bisim_cmd);

  auto* sim_cmd = app.add_subcommand("simulate", "Run one pseudo-random execution");
  sim_in.attach(sim_cmd);
  std::uint64_t seed = 0;
  std::size_t steps = 100;
  sim_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
  sim_cmd->add_option("--steps", steps, "Step limit")->capture_default_str();

  auto* mutex_cmd = app.add_subcommand("check-mutex", "Check critical regions never overlap");
  mutex_in.attach(mutex_cmd);
  mutex_flags.attach(mutex_cmd);
  std::string regions_path;
  mutex_cmd->add_option("--regions", regions_path, "Region instrumentation (YAML)")->required();

  auto* dead_cmd = app.add_subcommand("check-deadlock", "Find reachable deadlocks");
  dead_in.attach(dead_cmd);
  dead_flags.attach(dead_cmd);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  session.load();

  if (parse_cmd->parsed()) {
    out << frontend::render_term(session.parse(parse_in.source())) << "\n";
    return kOk;
  }

  if (lts_cmd->parsed()) {
    const Term t = session.parse(lts_in.source());
    const auto l = sos::build_lts(t, session.cfg(), session.strat(), lts_flags.options(false));
    out << frontend::export_lts(l, format == "dot" ? frontend::LtsFormat::Dot : frontend::LtsFormat::Json);
    if (l.truncated()) {
      err << "warning: exploration truncated by --max-states/--max-depth\n";
      return kBudget;
    }
    return kOk;
  }

  if (elim_cmd->parsed()) {
    const Term t = session.parse(elim_in.source());
    out << frontend::render_term(rewrite::eliminate(t, session.cfg(), session.strat())) << "\n";
    return kOk;
  }

  if (reduce_cmd->parsed()) {
    const Term t = session.parse(reduce_in.source());
    const auto r = rewrite::reduce_spec(t, session.cfg(), session.strat());
    out << frontend::render_equations(*r.spec, r.root);
    return kOk;
  }

  if (bisim_cmd->parsed()) {
    std::vector<std::string> srcs = bisim_terms;
    for (const auto& f : bisim_files) srcs.push_back(read_file(f));
    if (srcs.size() != 2) throw UsageError("bisim needs exactly two terms");
    const Term a = session.parse(srcs[0]);
    const Term b = session.parse(srcs[1]);
    const auto opts = bisim_flags.options(true);
    const auto la = sos::build_lts(a, session.cfg(), session.strat(), opts);
    const auto lb = sos::build_lts(b, session.cfg(), session.strat(), opts);
    if (analysis::bisimilar(la, lb)) {
      out << "bisimilar\n";
      return kOk;
    }
    out << "not bisimilar\n";
    return kPropertyFails;
  }

  if (sim_cmd->parsed()) {
    Term t = session.parse(sim_in.source());
    sos::Semantics sem(session.cfg(), session.strat());
    const HistDigest digest = session.strat().hist_digest();
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < steps; ++k) {
      const auto& moves = sem.step(t);
      const bool can_stop = sem.terminates(t);
      const std::size_t choices = moves.size() + (can_stop ? 1 : 0);
      if (choices == 0) {
        out << "deadlock\n";
        return kOk;
      }
      const std::size_t pick = std::uniform_int_distribution<std::size_t>(0, choices - 1)(rng);
      if (pick == moves.size()) {
        out << "terminated\n";
        return kOk;
      }
      out << moves[pick].label << "\n";
      t = normalize(moves[pick].target, digest);
    }
    out << "step limit reached\n";
    return kOk;
  }

  if (mutex_cmd->parsed()) {
    const auto regions = frontend::load_regions_file(regions_path);
    const Term t = session.parse(mutex_in.source());
    const auto l = sos::build_lts(t, session.cfg(), session.strat(), mutex_flags.options(true));
    const auto vs = analysis::check_mutex(l, regions);
    if (vs.empty()) {
      out << "no mutex violation in " << l.size() << " states\n";
      return kOk;
    }
    print_violations(vs, out);
    return kPropertyFails;
  }

  if (dead_cmd->parsed()) {
    const Term t = session.parse(dead_in.source());
    const auto l = sos::build_lts(t, session.cfg(), session.strat(), dead_flags.options(true));
    const auto vs = analysis::find_deadlocks(l);
    if (vs.empty()) {
      out << "no deadlock in " << l.size() << " states\n";
      return kOk;
    }
    print_violations(vs, out);
    return kPropertyFails;
  }
  return kUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const ConfigError& e) {
    for (const auto& f : e.findings()) {
      err << "config";
      if (f.where.line != 0) err << ":" << f.where.str();
      err << ": " << f.message << "\n";
    }
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const TruncatedInput& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const HistoryError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace siacp::cli
