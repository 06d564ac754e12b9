#include "criteria.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>
#include <vector>

#include "axioms.hpp"
#include "generators.hpp"
#include "siacp/analysis/bisim.hpp"
#include "siacp/analysis/traces.hpp"
#include "siacp/frontend/config.hpp"
#include "siacp/frontend/parser.hpp"
#include "siacp/frontend/render.hpp"
#include "siacp/kernel/error.hpp"
#include "siacp/kernel/guarded.hpp"
#include "siacp/kernel/normalize.hpp"
#include "siacp/rewrite/eliminate.hpp"
#include "siacp/rewrite/hnf.hpp"
#include "siacp/rewrite/reduce.hpp"
#include "siacp/sos/lts.hpp"
#include "siacp/sos/semantics.hpp"
#include "siacp/strategy/round_robin.hpp"
#include "siacp/strategy/semaphore.hpp"

namespace siacp::acceptance {

namespace {

using Clock = std::chrono::steady_clock;
using testing::Gen;
using testing::World;

class Timer {
 public:
  explicit Timer(std::chrono::seconds budget) : budget_(budget), start_(Clock::now()) {}
  double seconds() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }
  bool within() const { return Clock::now() - start_ <= budget_; }
  std::string report() const {
    std::ostringstream os;
    os << seconds() << " s of " << budget_.count() << " s";
    return os.str();
  }

 private:
  std::chrono::seconds budget_;
  Clock::time_point start_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string corpus(const std::string& name) { return std::string(SIACP_CORPUS_DIR) + "/" + name; }

std::uint64_t seed_of(const std::string& s) { return std::hash<std::string>{}(s) & 0xffffffffu; }

sos::Lts complete_lts(const Term& t, const World& w) {
  sos::LtsOptions o;
  o.require_complete = true;
  return sos::build_lts(t, w.cfg, *w.strat, o);
}

std::vector<World> strategy_worlds(DeadlockMode mode) {
  return {testing::rr_world(mode), testing::sem_world(mode)};
}

}  // namespace

// 1 -----------------------------------------------------------------------

Verdict axiom_soundness() {
  constexpr std::size_t kPerAxiom = 100;
  Timer timer(kSoundnessBudget);
  std::size_t pairs = 0;
  std::size_t groups = 0;
  std::vector<std::string> problems;

  auto run_mode = [&](DeadlockMode mode) {
    const bool deferred = mode == DeadlockMode::Deferred;
    std::vector<testing::Axiom> axioms = testing::acp_axioms();
    for (auto& a : testing::si_axioms(deferred)) axioms.push_back(std::move(a));
    if (deferred) {
      for (auto& a : testing::deferred_axioms()) axioms.push_back(std::move(a));
    }
    for (const World& w : strategy_worlds(mode)) {
      for (const auto& ax : axioms) {
        const std::string tag = ax.name + "/" + w.label + (deferred ? "/deferred" : "/immediate");
        const auto t = testing::check_axiom(ax, w, kPerAxiom, seed_of(tag));
        pairs += t.checked;
        ++groups;
        if (t.failed > 0) {
          problems.push_back(tag + ": " + std::to_string(t.failed) + " failures, e.g. " +
                             t.first_failure);
        } else if (t.checked == 0) {
          // No instance exists: SI0 needs a partial scheduler, SI5Tb control actions.
          const bool impossible = !w.semaphore && (ax.name == "SI0" || ax.name == "SI5Tb");
          if (!impossible) problems.push_back(tag + ": no instances drawn");
        } else if (t.checked < kPerAxiom) {
          problems.push_back(tag + ": only " + std::to_string(t.checked) + " instances");
        }
      }
    }
  };
  run_mode(DeadlockMode::Immediate);
  run_mode(DeadlockMode::Deferred);

  std::ostringstream os;
  os << pairs << " bisimilar pairs over " << groups << " axiom/strategy/mode groups, "
     << timer.report();
  for (const auto& p : problems) os << "\n    " << p;
  return {problems.empty() && timer.within(), os.str()};
}

// 2 -----------------------------------------------------------------------

Verdict elimination() {
  constexpr int kTerms = 100;
  Timer timer(kEliminationBudget);
  int passed = 0;
  std::vector<std::string> problems;
  int drawn = 0;
  for (const World& w : strategy_worlds(DeadlockMode::Immediate)) {
    Gen g(w, seed_of("elimination/" + w.label));
    for (int k = 0; k < kTerms / 2; ++k, ++drawn) {
      const Term t = g.full(4);
      try {
        const Term e = rewrite::eliminate(t, w.cfg, *w.strat);
        const bool ok = is_basic(e) && testing::terms_bisimilar(t, e, w);
        if (ok) {
          ++passed;
        } else if (problems.size() < 3) {
          problems.push_back(frontend::render_term(t) + " => " + frontend::render_term(e));
        }
      } catch (const std::exception& ex) {
        if (problems.size() < 3) problems.push_back(frontend::render_term(t) + " threw " + ex.what());
      }
    }
  }
  std::ostringstream os;
  os << passed << "/" << drawn << " eliminated to bisimilar basic terms, " << timer.report();
  for (const auto& p : problems) os << "\n    " << p;
  return {passed == drawn && timer.within(), os.str()};
}

// 3 -----------------------------------------------------------------------

namespace {

// A variant of t that the axioms prove equal, built by random sound
// rewrites at random positions.
Term sound_variant(Gen& g, const Term& t, int budget) {
  if (budget <= 0) return t;
  switch (g.uniform(0, 7)) {
    case 0:
      return Term::alt(t, Term::delta());
    case 1:
      return Term::seq(t, Term::epsilon());
    case 2:
      return Term::seq(Term::epsilon(), t);
    case 3:
      return Term::alt(t, t);
    default:
      break;
  }
  switch (t.kind()) {
    case TermKind::Alt:
      return g.coin() ? Term::alt(sound_variant(g, t.rhs(), budget - 1), t.lhs())
                      : Term::alt(sound_variant(g, t.lhs(), budget - 1), t.rhs());
    case TermKind::Seq:
      if (t.lhs().is(TermKind::Alt) && g.coin()) {
        return Term::alt(Term::seq(t.lhs().lhs(), t.rhs()), Term::seq(t.lhs().rhs(), t.rhs()));
      }
      return Term::seq(sound_variant(g, t.lhs(), budget - 1), sound_variant(g, t.rhs(), budget - 1));
    case TermKind::Par:
      return g.coin() ? Term::par(t.rhs(), t.lhs())
                      : Term::par(sound_variant(g, t.lhs(), budget - 1), t.rhs());
    case TermKind::Encap:
      return Term::encap(t.blocked(), sound_variant(g, t.operand(), budget - 1));
    default:
      return t;
  }
}

// t with one action occurrence renamed; may or may not change behaviour.
Term perturb(Gen& g, const Term& t, bool& done) {
  if (done) return t;
  switch (t.kind()) {
    case TermKind::Action:
      if (g.coin(0.3)) {
        done = true;
        return g.action();
      }
      return t;
    case TermKind::Alt:
      return Term::alt(perturb(g, t.lhs(), done), perturb(g, t.rhs(), done));
    case TermKind::Seq:
      return Term::seq(perturb(g, t.lhs(), done), perturb(g, t.rhs(), done));
    case TermKind::Par:
      return Term::par(perturb(g, t.lhs(), done), perturb(g, t.rhs(), done));
    case TermKind::LeftMerge:
      return Term::left_merge(perturb(g, t.lhs(), done), perturb(g, t.rhs(), done));
    case TermKind::CommMerge:
      return Term::comm_merge(perturb(g, t.lhs(), done), perturb(g, t.rhs(), done));
    case TermKind::Encap:
      return Term::encap(t.blocked(), perturb(g, t.operand(), done));
    default:
      return t;
  }
}

}  // namespace

Verdict conservativity() {
  constexpr int kPairs = 200;
  Timer timer(kConservativityBudget);
  const World w = testing::rr_world();
  Gen g(w, seed_of("conservativity"));
  int agree = 0, equal = 0, si_stable = 0;
  std::vector<std::string> problems;

  rewrite::EliminateOptions plain_opts;
  plain_opts.rewrite.si_axioms = false;
  auto plain_form = [&](const Term& t) {
    return rewrite::canonical_basic_form(rewrite::eliminate(t, w.cfg, *w.strat, plain_opts));
  };
  auto si_form = [&](const Term& t) {
    const Term wrapped = Term::si({}, w.strat->initial_state(), {t});
    return rewrite::canonical_basic_form(rewrite::eliminate(wrapped, w.cfg, *w.strat));
  };

  for (int k = 0; k < kPairs; ++k) {
    const Term t1 = g.plain(4);
    Term t2;
    switch (k % 3) {
      case 0:
        t2 = g.plain(4);
        break;
      case 1:
        t2 = sound_variant(g, t1, 3);
        break;
      default: {
        bool done = false;
        t2 = perturb(g, sound_variant(g, t1, 2), done);
      }
    }
    const bool derivable = plain_form(t1) == plain_form(t2);
    const bool bisim = testing::terms_bisimilar(t1, t2, w);
    const bool with_si = si_form(t1) == si_form(t2);
    equal += bisim ? 1 : 0;
    if (derivable == bisim) {
      ++agree;
    } else if (problems.size() < 3) {
      problems.push_back("verdicts differ on " + frontend::render_term(t1) + " / " +
                         frontend::render_term(t2));
    }
    if (with_si == derivable) {
      ++si_stable;
    } else if (problems.size() < 3) {
      problems.push_back("si axioms changed the verdict on " + frontend::render_term(t1) + " / " +
                         frontend::render_term(t2));
    }
  }
  std::ostringstream os;
  os << agree << "/" << kPairs << " verdicts agree (" << equal << " bisimilar pairs), " << si_stable
     << "/" << kPairs << " unchanged with si axioms, " << timer.report();
  for (const auto& p : problems) os << "\n    " << p;
  return {agree == kPairs && si_stable == kPairs && timer.within(), os.str()};
}

// 4 -----------------------------------------------------------------------

namespace {

bool reduction_holds(const Term& t, const World& w, std::string& why) {
  const auto r = rewrite::reduce_spec(t, w.cfg, *w.strat);
  const auto report = check_guarded(*r.spec);
  for (const auto& e : report.equations) {
    if (e.verdict != Guardedness::SyntacticallyGuarded) {
      why = "equation " + e.var + " not syntactically guarded";
      return false;
    }
  }
  for (const auto& [x, body] : r.spec->equations()) {
    for (const auto& a : actions_of(body)) {
      if (!w.cfg.declared(a) || w.cfg.is_control(a)) {
        why = "unexpected label " + a;
        return false;
      }
    }
  }
  const auto source = complete_lts(t, w);
  const auto reduced = complete_lts(r.as_term(), w);
  if (!analysis::bisimilar(source, reduced)) {
    why = "not bisimilar";
    return false;
  }
  if (analysis::maximal_traces(source, kReductionTraceDepth) !=
      analysis::maximal_traces(reduced, kReductionTraceDepth)) {
    why = "traces differ within depth";
    return false;
  }
  return true;
}

}  // namespace

Verdict reduction() {
  Timer timer(kReductionBudget);
  std::vector<std::string> problems;
  const World w = testing::rr_world();
  SystemConfig cfg = w.cfg;
  const Term two = frontend::parse_term(
      "si[2; ; init](rec X { X = a . X } X, rec Y { Y = b . Y } Y)", cfg, *w.strat);
  const auto r = rewrite::reduce_spec(two, w.cfg, *w.strat);
  std::string why;
  if (r.spec->equations().size() != 2) {
    problems.push_back("two-process system gave " + std::to_string(r.spec->equations().size()) +
                       " equations");
  }
  if (!reduction_holds(two, w, why)) problems.push_back("two-process system: " + why);

  int random_ok = 0;
  constexpr int kSystems = 20;
  for (const World& rw : strategy_worlds(DeadlockMode::Immediate)) {
    Gen g(rw, seed_of("reduction/" + rw.label));
    for (int k = 0; k < kSystems / 2; ++k) {
      const Term t = testing::random_recursive_system(g);
      std::string reason;
      bool ok = false;
      try {
        ok = reduction_holds(t, rw, reason);
      } catch (const std::exception& e) {
        reason = e.what();
      }
      if (ok) {
        ++random_ok;
      } else if (problems.size() < 4) {
        problems.push_back(frontend::render_term(t) + ": " + reason);
      }
    }
  }
  std::ostringstream os;
  os << "two-process system -> " << r.spec->equations().size() << " equations; " << random_ok
     << "/" << kSystems << " random systems reduce to bisimilar guarded specifications, "
     << timer.report();
  for (const auto& p : problems) os << "\n    " << p;
  return {problems.empty() && random_ok == kSystems && timer.within(), os.str()};
}

// 5 -----------------------------------------------------------------------

Verdict round_robin_determinism() {
  std::vector<std::string> problems;
  SystemConfig cfg;
  cfg.declare("a");
  cfg.declare("b");
  const auto rr = strategy::rr_strategy();
  const Term si = frontend::parse_term("si[2; ; init](a . eps, b . eps)", cfg, *rr);
  const Term free = frontend::parse_term("a || b", cfg, *rr);

  const Term e1 = rewrite::canonical_basic_form(rewrite::eliminate(si, cfg, *rr));
  const Term want1 = Term::seq(Term::action("a"), Term::action("b"));
  if (e1 != want1) problems.push_back("si eliminates to " + frontend::render_term(e1));

  const auto l = sos::build_lts(si, cfg, *rr);
  const bool path = l.size() == 3 && l.edge_count() == 2 && l.states[l.init].out.size() == 1 &&
                    l.states[l.init].out[0].first == "a" &&
                    l.states[l.states[l.init].out[0].second].out.size() == 1 &&
                    l.states[l.states[l.init].out[0].second].out[0].first == "b" &&
                    l.states[l.states[l.states[l.init].out[0].second].out[0].second].terminating;
  if (!path) problems.push_back("si LTS is not the 3-state path a, b");

  const Term e2 = rewrite::canonical_basic_form(rewrite::eliminate(free, cfg, *rr));
  const Term want2 = rewrite::canonical_basic_form(
      Term::alt(Term::seq(Term::action("a"), Term::action("b")),
                Term::seq(Term::action("b"), Term::action("a"))));
  if (e2 != want2) problems.push_back("a || b eliminates to " + frontend::render_term(e2));

  std::ostringstream os;
  os << "si -> " << frontend::render_term(e1) << " (" << l.size() << " states), a || b -> "
     << frontend::render_term(e2);
  for (const auto& p : problems) os << "\n    " << p;
  return {problems.empty(), os.str()};
}

// 6 -----------------------------------------------------------------------

Verdict mutual_exclusion() {
  Timer timer(kMutexBudget);
  std::vector<std::string> problems;
  std::ostringstream os;
  for (const int n : {2, 3}) {
    const std::string term_src = slurp(corpus("mutex" + std::to_string(n) + ".term"));
    const auto regions =
        frontend::load_regions_file(corpus("mutex" + std::to_string(n) + ".regions.yaml"));
    for (const char* cfg_name : {"mutex_sem.yaml", "mutex_sem_as_written.yaml"}) {
      auto loaded = frontend::load_config_file(corpus(cfg_name));
      const Term t = frontend::parse_term(term_src, loaded.cfg, *loaded.strategy);
      sos::LtsOptions o;
      o.require_complete = true;
      o.max_states = kMutexStateBound;
      const auto l = sos::build_lts(t, loaded.cfg, *loaded.strategy, o);
      const auto vs = analysis::check_mutex(l, regions);
      os << n << "-process " << cfg_name << ": " << l.size() << " states, " << vs.size()
         << " overlaps; ";
      if (!vs.empty()) problems.push_back(std::to_string(n) + "-process guarded program overlaps");
    }
    auto plain = frontend::load_config_file(corpus("mutex_plain.yaml"));
    const Term t = frontend::parse_term(term_src, plain.cfg, *plain.strategy);
    const auto l = sos::build_lts(t, plain.cfg, *plain.strategy);
    const auto vs = analysis::check_mutex(l, regions);
    os << n << "-process demoted: " << vs.size() << " overlaps; ";
    if (vs.empty()) problems.push_back(std::to_string(n) + "-process demoted program has no overlap");
  }
  os << timer.report();
  for (const auto& p : problems) os << "\n    " << p;
  return {problems.empty() && timer.within(), os.str()};
}

// 7 -----------------------------------------------------------------------

Verdict deadlock() {
  std::vector<std::string> problems;
  auto loaded = frontend::load_config_file(corpus("cross.yaml"));
  const Term t = frontend::parse_term(slurp(corpus("cross.term")), loaded.cfg, *loaded.strategy);
  sos::LtsOptions o;
  o.require_complete = true;
  const auto l = sos::build_lts(t, loaded.cfg, *loaded.strategy, o);
  const auto vs = analysis::find_deadlocks(l);

  const auto m = analysis::minimize(l);
  std::size_t classes = 0;
  for (const auto& s : m.states) classes += (s.out.empty() && !s.terminating && !s.truncated) ? 1 : 0;
  if (vs.size() != 1) problems.push_back(std::to_string(vs.size()) + " deadlock reports");
  if (classes != 1) problems.push_back(std::to_string(classes) + " deadlock classes");
  for (const auto& v : vs) {
    if (!analysis::replay(l, v.witness).contains(v.state)) problems.push_back("witness does not replay");
  }

  const Term free =
      frontend::parse_term(slurp(corpus("cross_free.term")), loaded.cfg, *loaded.strategy);
  const auto lf = sos::build_lts(free, loaded.cfg, *loaded.strategy, o);
  bool completes = false;
  for (const auto& tr : analysis::maximal_traces(lf, 64)) {
    completes = completes || tr.outcome == analysis::Outcome::Terminated;
  }
  if (!completes) problems.push_back("free merge has no completing trace");

  std::ostringstream os;
  os << classes << " deadlock class";
  if (!vs.empty()) os << ", witness " << analysis::render_trace(vs.front().witness);
  os << "; free merge completes: " << (completes ? "yes" : "no");
  for (const auto& p : problems) os << "\n    " << p;
  return {problems.empty(), os.str()};
}

// 8 -----------------------------------------------------------------------

Verdict sos_rewrite_agreement() {
  constexpr int kTerms = 200;
  Timer timer(kAgreementBudget);
  std::vector<World> worlds = strategy_worlds(DeadlockMode::Immediate);
  for (auto& w : strategy_worlds(DeadlockMode::Deferred)) worlds.push_back(std::move(w));
  int agree = 0, drawn = 0;
  std::vector<std::string> problems;
  for (const World& w : worlds) {
    Gen g(w, seed_of("agreement/" + w.label + std::to_string(static_cast<int>(w.cfg.deadlock_mode))));
    const HistDigest digest = w.strat->hist_digest();
    for (int k = 0; k < kTerms / static_cast<int>(worlds.size()); ++k, ++drawn) {
      const Term t = g.full(4);
      const auto h = rewrite::head_normal_form(t, w.cfg, *w.strat).canonical(digest);
      sos::Semantics sem(w.cfg, *w.strat);
      std::vector<std::pair<std::string, Term>> moves;
      for (const auto& tr : sem.step(t)) moves.emplace_back(tr.label, normalize(tr.target, digest));
      std::sort(moves.begin(), moves.end());
      moves.erase(std::unique(moves.begin(), moves.end()), moves.end());
      if (moves == h.summands && sem.terminates(t) == h.has_epsilon) {
        ++agree;
      } else if (problems.size() < 3) {
        problems.push_back(frontend::render_term(t));
      }
    }
  }
  std::ostringstream os;
  os << agree << "/" << drawn << " terms agree, " << timer.report();
  for (const auto& p : problems) os << "\n    " << p;
  return {agree == drawn && timer.within(), os.str()};
}

// 9 -----------------------------------------------------------------------

namespace {

Hist H(std::vector<Turn> t) { return Hist::from(std::move(t)); }

// Length of the first run of `a` in the unique maximal trace.
std::size_t first_run(int k, strategy::TurnsConvention conv) {
  SystemConfig cfg;
  cfg.declare("a");
  cfg.declare("b");
  const auto strat = strategy::sem_strategy(k, {"r"}, conv);
  strategy::declare_semaphores(cfg, {"r"});
  const Term t = frontend::parse_term(
      "si[2; ; init](a . a . a . a . a . a . eps, b . b . b . b . b . b . eps)", cfg, *strat);
  const auto traces = analysis::maximal_traces(sos::build_lts(t, cfg, *strat), 64);
  if (traces.size() != 1) return 0;
  const auto& tr = traces.begin()->trace;
  std::size_t run = 0;
  while (run < tr.size() && tr[run] == "a") ++run;
  return run;
}

}  // namespace

Verdict semaphore_clauses() {
  using namespace strategy;
  using Q = Queues;
  const auto AW = TurnsConvention::AsWritten;
  const auto PR = TurnsConvention::Prose;
  std::vector<std::string> failed;
  int rows = 0;
  auto check = [&](bool ok, const std::string& row) {
    ++rows;
    if (!ok) failed.push_back(row);
  };

  check(sem_turns(H({}), 3) == 0, "turns(<>,3)=0");
  check(sem_turns(H({{2, 2}, {1, 2}}), 1) == 1, "turns(<(2,2),(1,2)>,1)=1");
  check(sem_turns(H({{1, 2}, {2, 2}}), 1) == 0, "turns(<(1,2),(2,2)>,1)=0");

  check(sem_next(2, H({}), 0, 1, AW) == 1, "next(2,<>,0)=1");
  check(sem_next(2, H({{1, 2}}), 0, 1, AW) == 1, "next(2,<(1,2)>,0)=1 as-written");
  check(sem_next(2, H({{1, 2}, {1, 2}}), 0, 1, AW) == 2, "next(2,<(1,2),(1,2)>,0)=2 as-written");

  check(sem_waiting({}).empty(), "waiting({})={}");
  check(sem_waiting(Q{{"r", {}}}).empty(), "waiting({r:[]})={}");
  check(sem_waiting(Q{{"r", {2}}, {"q", {1, 3}}}) == std::set<int>{1, 2, 3}, "waiting={1,2,3}");

  check(sem_sched(2, H({}), {}, 1, AW) == 1, "sched(2,<>,{})=1");
  // The second sched row only holds when the guard counts the last turn.
  check(sem_sched(2, H({{1, 2}}), Q{{"r", {1}}}, 1, PR) == 2, "sched(2,<(1,2)>,{r:[1]})=2 prose");
  check(!sem_sched(2, H({{1, 2}}), Q{{"r", {1}}}, 1, AW).has_value(),
        "sched(2,<(1,2)>,{r:[1]}) undefined as-written");
  for (const auto conv : {AW, PR}) {
    check(!sem_sched(2, H({{1, 2}}), Q{{"r", {1}}, {"q", {2}}}, 1, conv).has_value(),
          "sched with everyone waiting undefined");
  }

  check(sem_remove(2, {}, 1).empty(), "remove({},1)={}");
  check(sem_remove(3, Q{{"r", {3}}}, 1) == Q{{"r", {2}}}, "remove({r:[3]},1)={r:[2]}");
  check(sem_remove(3, Q{{"r", {1, 3}}}, 1) == Q{{"r", {2}}}, "remove({r:[1,3]},1)={r:[2]}");

  const Hist h12 = H({{1, 2}});
  check(sem_updat(2, h12, {}, 2, SemStep::p("r")) == Q{{"r", {}}}, "updat P on {}");
  check(sem_updat(2, h12, Q{{"r", {}}}, 2, SemStep::p("r")) == Q{{"r", {2}}}, "updat P appends");
  check(sem_updat(2, h12, Q{{"r", {}}}, 1, SemStep::v("r")).empty(), "updat V subtracts");
  check(sem_updat(2, h12, Q{{"r", {2}}}, 1, SemStep::v("r")) == Q{{"r", {}}}, "updat V dequeues");
  // Clause evaluation: remove'(<2>, 2) deletes the 2.
  check(sem_updat(2, h12, Q{{"r", {2}}}, 2, SemStep::eps()) == Q{{"r", {}}}, "updat eps removes");

  check(sem_strategy(1, {"r"}, AW)->sched(1, H({}), make_queue_state({})) == 1, "instance sched");
  check(!sem_strategy(1, {"r"}, AW)->sched(2, h12, make_queue_state(Q{{"r", {1, 2}}})),
        "instance sched undefined");

  std::ostringstream runs;
  for (const int k : {1, 2}) {
    const auto aw = first_run(k, AW);
    const auto pr = first_run(k, PR);
    runs << "k=" << k << ": as-written " << aw << ", prose " << pr << "; ";
    check(aw == static_cast<std::size_t>(k + 1), "as-written run k+1 for k=" + std::to_string(k));
    check(pr == static_cast<std::size_t>(k), "prose run k for k=" + std::to_string(k));
  }

  std::ostringstream os;
  os << rows - static_cast<int>(failed.size()) << "/" << rows << " rows; consecutive turns "
     << runs.str();
  for (const auto& f : failed) os << "\n    failed: " << f;
  return {failed.empty(), os.str()};
}

}  // namespace siacp::acceptance
