#include <gtest/gtest.h>

#include <fstream>
#include <iterator>
#include <set>

#include "generators.hpp"
#include "siacp/analysis/bisim.hpp"
#include "siacp/frontend/config.hpp"
#include "siacp/frontend/parser.hpp"
#include "siacp/kernel/error.hpp"
#include "siacp/kernel/normalize.hpp"
#include "siacp/sos/lts.hpp"
#include "siacp/sos/semantics.hpp"
#include "siacp/strategy/semaphore.hpp"

namespace siacp::sos {
namespace {

using strategy::Queues;

const Term a = Term::action("a");
const Term b = Term::action("b");
const Term eps = Term::epsilon();
Term dot(Term x, Term y) { return Term::seq(std::move(x), std::move(y)); }

// Targets up to normalization (a . x steps to eps . x).
std::vector<Transition> nstep(const Term& t, const testing::World& w) {
  std::vector<Transition> out;
  for (const auto& [l, target] : step(t, w.cfg, *w.strat)) out.push_back({l, normalize(target)});
  return out;
}

Hist hist(std::initializer_list<std::pair<int, int>> ps) {
  std::vector<Turn> out;
  for (auto [i, n] : ps) out.push_back({i, n});
  return Hist::from(out);
}

TEST(Step, Prefix) {
  const auto w = testing::rr_world();
  EXPECT_EQ(nstep(dot(a, eps), w), (std::vector<Transition>{{"a", eps}}));
  EXPECT_TRUE(step(Term::delta(), w.cfg, *w.strat).empty());
}

TEST(Step, RoundRobinSchedulesFirstProcess) {
  const auto w = testing::rr_world();
  const Term t = Term::si({}, {}, {dot(a, eps), dot(b, eps)});
  const Term expected = Term::si(hist({{1, 2}}), {}, {eps, dot(b, eps)});
  EXPECT_EQ(nstep(t, w), (std::vector<Transition>{{"a", normalize(expected)}}));
}

TEST(Step, AllWaitingIsInactive) {
  const auto w = testing::sem_world();
  const Term t = Term::si(hist({{1, 2}}), strategy::make_queue_state({{"r", {1}}, {"q", {2}}}),
                          {eps, eps});
  EXPECT_TRUE(step(t, w.cfg, *w.strat).empty());
  EXPECT_FALSE(terminates(t, w.cfg, *w.strat));
}

TEST(Step, ControlActionShowsBar) {
  const auto w = testing::sem_world();
  const Term t = Term::si({}, w.strat->initial_state(), {dot(Term::action("P_r"), eps)});
  const Term expected = Term::si(hist({{1, 1}}), strategy::make_queue_state({{"r", {}}}), {eps});
  EXPECT_EQ(nstep(t, w), (std::vector<Transition>{{"P_r~", expected}}));
}

TEST(Step, CreationAppendsProcess) {
  const auto w = testing::rr_world();
  const Term t = Term::si({}, {}, {dot(Term::action("cr_n"), eps)});
  const Term expected = Term::si(hist({{1, 2}}), {}, {eps, w.cfg.creation_body("n")});
  EXPECT_EQ(nstep(t, w), (std::vector<Transition>{{"cr_n~", normalize(expected)}}));
}

TEST(Step, UndeclaredAction) {
  const auto w = testing::rr_world();
  EXPECT_THROW(step(Term::action("zz"), w.cfg, *w.strat), UndeclaredAction);
}

TEST(Terminates, Examples) {
  const auto w = testing::rr_world();
  EXPECT_TRUE(terminates(eps, w.cfg, *w.strat));
  EXPECT_FALSE(terminates(dot(a, eps), w.cfg, *w.strat));
  EXPECT_TRUE(terminates(Term::si({}, {}, {eps}), w.cfg, *w.strat));
  EXPECT_TRUE(terminates(Term::par(eps, eps), w.cfg, *w.strat));
  EXPECT_FALSE(terminates(Term::par(eps, a), w.cfg, *w.strat));
}

TEST(BuildLts, Path) {
  const auto w = testing::rr_world();
  const Lts l = build_lts(dot(a, dot(b, eps)), w.cfg, *w.strat);
  ASSERT_EQ(l.size(), 3u);
  ASSERT_EQ(l.states[l.init].out.size(), 1u);
  const auto [la, s1] = l.states[l.init].out[0];
  EXPECT_EQ(la, "a");
  ASSERT_EQ(l.states[s1].out.size(), 1u);
  const auto [lb, s2] = l.states[s1].out[0];
  EXPECT_EQ(lb, "b");
  EXPECT_TRUE(l.states[s2].terminating);
  EXPECT_TRUE(l.states[s2].out.empty());
}

TEST(BuildLts, RoundRobinIsOnePath) {
  const auto w = testing::rr_world();
  const Lts l = build_lts(Term::si({}, {}, {dot(a, eps), dot(b, eps)}), w.cfg, *w.strat);
  StateId s = l.init;
  std::vector<std::string> labels;
  while (!l.states[s].out.empty()) {
    ASSERT_EQ(l.states[s].out.size(), 1u);
    labels.push_back(l.states[s].out[0].first);
    s = l.states[s].out[0].second;
  }
  EXPECT_EQ(labels, (std::vector<std::string>{"a", "b"}));
  EXPECT_TRUE(l.states[s].terminating);
}

Term loop(const char* var, const Term& act) {
  auto spec = std::make_shared<RecSpec>(std::map<std::string, Term>{{var, dot(act, Term::variable(var))}});
  return Term::rec(var, spec);
}

TEST(BuildLts, DigestMakesRecursionFinite) {
  const auto w = testing::rr_world();
  const Term t = Term::si({}, {}, {loop("X", a), loop("Y", b)});
  const Lts l = build_lts(t, w.cfg, *w.strat, {.require_complete = true});
  const Lts m = analysis::minimize(l);
  EXPECT_EQ(m.size(), 2u);
  EXPECT_EQ(m.edge_count(), 2u);
  EXPECT_LE(l.size(), 3u);

  LtsOptions off;
  off.digest = false;
  off.max_states = 50;
  EXPECT_TRUE(build_lts(t, w.cfg, *w.strat, off).truncated());
  off.require_complete = true;
  EXPECT_THROW(build_lts(t, w.cfg, *w.strat, off), BudgetExceeded);
}

TEST(BuildLts, TerminationFlagAgreesWithPredicate) {
  for (const auto& w : {testing::rr_world(), testing::sem_world()}) {
    testing::Gen g(w, 41);
    for (int round = 0; round < 100; ++round) {
      const Lts l = build_lts(g.full(4), w.cfg, *w.strat);
      for (const auto& st : l.states) {
        ASSERT_TRUE(st.term.has_value());
        EXPECT_EQ(st.terminating, terminates(*st.term, w.cfg, *w.strat));
      }
    }
  }
}

// Each strategic interleaving step is taken by the single scheduled process:
// the history of a target extends the source's with that process first.
TEST(Step, OneActingIndex) {
  for (const auto& w : {testing::rr_world(), testing::sem_world(),
                        testing::sem_world(DeadlockMode::Deferred, 2, strategy::TurnsConvention::Prose)}) {
    testing::Gen g(w, 43);
    std::size_t checked = 0;
    for (int round = 0; round < 400; ++round) {
      const Term t = g.full(4);
      if (!t.is(TermKind::Si)) continue;
      const auto i = acting_index(t, *w.strat);
      const auto moves = step(t, w.cfg, *w.strat);
      if (!i) {
        EXPECT_TRUE(moves.empty());
        continue;
      }
      EXPECT_GE(*i, 1);
      EXPECT_LE(*i, t.arity());
      for (const auto& [label, target] : moves) {
        if (!target.is(TermKind::Si)) continue;
        const auto& before = t.history().turns();
        const auto& after = target.history().turns();
        ASSERT_GT(after.size(), before.size()) << label;
        EXPECT_TRUE(std::equal(before.begin(), before.end(), after.begin()));
        EXPECT_EQ(after[before.size()].process, *i);
        ++checked;
      }
    }
    EXPECT_GT(checked, 20u) << w.label;
  }
}

void collect_queues(const Term& t, std::vector<std::pair<int, Queues>>& out) {
  switch (t.kind()) {
    case TermKind::Si:
    case TermKind::PosSi:
      if (const auto* q = t.state().as<strategy::QueueState>()) out.emplace_back(t.arity(), q->queues());
      for (const Term& x : t.args()) collect_queues(x, out);
      break;
    case TermKind::Alt:
    case TermKind::Seq:
    case TermKind::Par:
    case TermKind::LeftMerge:
    case TermKind::CommMerge:
      collect_queues(t.lhs(), out);
      collect_queues(t.rhs(), out);
      break;
    case TermKind::Encap:
      collect_queues(t.operand(), out);
      break;
    default:
      break;
  }
}

void expect_distinct_queues(const Lts& l) {
  for (const auto& st : l.states) {
    std::vector<std::pair<int, Queues>> found;
    collect_queues(*st.term, found);
    for (const auto& [n, qs] : found) {
      for (const auto& [r, q] : qs) {
        const std::set<int> distinct(q.begin(), q.end());
        EXPECT_EQ(distinct.size(), q.size()) << r;
        EXPECT_LE(static_cast<int>(q.size()), n);
        for (int j : q) {
          EXPECT_GE(j, 1);
          EXPECT_LE(j, n);
        }
      }
    }
  }
}

// A process of plain actions and P_r . x . V_r blocks.
Term balanced_process(testing::Gen& g) {
  std::vector<Term> parts;
  const int blocks = g.uniform(1, 3);
  for (int k = 0; k < blocks; ++k) {
    if (g.coin()) {
      parts.push_back(Term::action("P_r"));
      parts.push_back(Term::action(g.plain_action_name()));
      parts.push_back(Term::action("V_r"));
    } else {
      parts.push_back(Term::action(g.plain_action_name()));
    }
  }
  parts.push_back(eps);
  return Term::seq_of(parts);
}

TEST(BuildLts, QueuesStayDistinct) {
  for (int k : {1, 2}) {
    for (auto conv : {strategy::TurnsConvention::AsWritten, strategy::TurnsConvention::Prose}) {
      const auto w = testing::sem_world(DeadlockMode::Immediate, k, conv);
      testing::Gen g(w, 47 + k);
      for (int round = 0; round < 40; ++round) {
        std::vector<Term> procs;
        const int n = g.uniform(2, 3);
        for (int j = 0; j < n; ++j) procs.push_back(balanced_process(g));
        expect_distinct_queues(build_lts(Term::si({}, w.strat->initial_state(), procs), w.cfg, *w.strat));
      }
    }
  }
}

TEST(BuildLts, CorpusQueuesStayDistinct) {
  const std::string dir = SIACP_CORPUS_DIR;
  for (const char* cfg_name : {"mutex_sem.yaml", "mutex_sem_as_written.yaml"}) {
    auto loaded = frontend::load_config_file(dir + "/" + cfg_name);
    for (const char* term_name : {"mutex2.term", "mutex3.term"}) {
      std::ifstream in(dir + "/" + term_name);
      const std::string src((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      const Term t = frontend::parse_term(src, loaded.cfg, *loaded.strategy);
      expect_distinct_queues(build_lts(t, loaded.cfg, *loaded.strategy));
    }
  }
}

TEST(BuildLts, DigestQuotientIsSafe) {
  for (const auto& w : {testing::rr_world(), testing::sem_world(),
                        testing::sem_world(DeadlockMode::Deferred, 1, strategy::TurnsConvention::Prose)}) {
    testing::Gen g(w, 53);
    for (int round = 0; round < 150; ++round) {
      const Term t = g.full(4);
      LtsOptions on{.require_complete = true};
      LtsOptions off{.digest = false, .require_complete = true};
      const Lts lon = build_lts(t, w.cfg, *w.strat, on);
      const Lts loff = build_lts(t, w.cfg, *w.strat, off);
      EXPECT_LE(lon.size(), loff.size());
      EXPECT_TRUE(analysis::bisimilar(lon, loff)) << w.label;
    }
  }
}

TEST(BuildLts, StatesIdentifiedUpToNormalization) {
  const auto w = testing::rr_world();
  const Lts l = build_lts(Term::alt(dot(a, eps), Term::alt(dot(a, eps), Term::delta())), w.cfg, *w.strat);
  EXPECT_EQ(l.size(), 2u);
}

TEST(BuildLts, DepthBudgetTruncates) {
  const auto w = testing::rr_world();
  LtsOptions opts;
  opts.max_depth = 1;
  const Lts l = build_lts(dot(a, dot(b, eps)), w.cfg, *w.strat, opts);
  EXPECT_TRUE(l.truncated());
}

}  // namespace
}  // namespace siacp::sos
