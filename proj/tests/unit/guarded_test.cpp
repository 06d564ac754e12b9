#include <gtest/gtest.h>

#include <algorithm>

#include "siacp/kernel/guarded.hpp"
#include "siacp/kernel/term.hpp"

namespace siacp {
namespace {

const Term a = Term::action("a");
const Term b = Term::action("b");
Term var(const char* x) { return Term::variable(x); }

GuardednessReport check(std::map<std::string, Term> eqs) {
  return check_guarded(RecSpec(std::move(eqs)));
}

TEST(Guarded, PrefixIsSyntactic) {
  const auto r = check({{"X", Term::seq(a, var("X"))}});
  EXPECT_EQ(r.of("X").verdict, Guardedness::SyntacticallyGuarded);
  EXPECT_TRUE(r.all_guarded());
}

TEST(Guarded, SelfReferenceIsNotShown) {
  const auto r = check({{"X", var("X")}});
  EXPECT_EQ(r.of("X").verdict, Guardedness::NotShownGuarded);
  EXPECT_FALSE(r.of("X").reason.empty());
  EXPECT_FALSE(r.all_guarded());
}

// The occurrence already lies inside the subterm a.X.
TEST(Guarded, EpsilonPrefixAroundPrefix) {
  const auto r = check({{"X", Term::seq(Term::epsilon(), Term::seq(a, var("X")))}});
  EXPECT_EQ(r.of("X").verdict, Guardedness::SyntacticallyGuarded);
}

bool applied(const EquationGuardedness& e, const std::string& rule) {
  return std::find(e.rewrite_steps.begin(), e.rewrite_steps.end(), rule) != e.rewrite_steps.end();
}

TEST(Guarded, EpsilonPrefixRewritesByA9) {
  const auto r = check({{"X", Term::alt(Term::seq(Term::epsilon(), Term::seq(a, var("X"))),
                                         Term::seq(Term::epsilon(), var("Y")))},
                        {"Y", Term::seq(b, var("X"))}});
  const auto& x = r.of("X");
  EXPECT_EQ(x.verdict, Guardedness::GuardedAfterRewriting);
  EXPECT_TRUE(applied(x, "A9"));
  ASSERT_TRUE(x.witness.has_value());
  EXPECT_TRUE(is_syntactically_guarded(*x.witness, {"X", "Y"}));
}

TEST(Guarded, DeltaPrefixRewritesByA7) {
  const auto r = check({{"X", Term::alt(Term::seq(a, var("X")), Term::seq(Term::delta(), var("X")))}});
  EXPECT_EQ(r.of("X").verdict, Guardedness::GuardedAfterRewriting);
  EXPECT_TRUE(applied(r.of("X"), "A7"));
}

TEST(Guarded, AliasUnfoldsLeftToRight) {
  const auto r = check({{"X", Term::seq(a, var("X"))}, {"Y", var("X")}});
  EXPECT_EQ(r.of("X").verdict, Guardedness::SyntacticallyGuarded);
  EXPECT_EQ(r.of("Y").verdict, Guardedness::GuardedAfterRewriting);
  EXPECT_TRUE(r.all_guarded());
}

TEST(Guarded, MutualAliasIsNotShown) {
  const auto r = check({{"X", var("Y")}, {"Y", var("X")}});
  EXPECT_EQ(r.of("X").verdict, Guardedness::NotShownGuarded);
  EXPECT_EQ(r.of("Y").verdict, Guardedness::NotShownGuarded);
}

TEST(Guarded, SumNeedsEveryOccurrenceGuarded) {
  EXPECT_EQ(check({{"X", Term::alt(Term::seq(a, var("X")), var("X"))}}).of("X").verdict,
            Guardedness::NotShownGuarded);
  EXPECT_EQ(check({{"X", Term::alt(Term::seq(a, var("X")), Term::seq(b, var("X")))}}).of("X").verdict,
            Guardedness::SyntacticallyGuarded);
}

TEST(Guarded, MergeExpandsToGuardedSummands) {
  // a || X unfolds by CM1T into a.X + X |_ a + ...; X itself stays unguarded
  EXPECT_EQ(check({{"X", Term::par(a, var("X"))}}).of("X").verdict, Guardedness::NotShownGuarded);
  EXPECT_EQ(check({{"X", Term::left_merge(Term::seq(a, Term::epsilon()), var("X"))}}).of("X").verdict,
            Guardedness::GuardedAfterRewriting);
}

TEST(Guarded, UnknownVariableThrows) {
  const auto r = check({{"X", Term::seq(a, var("X"))}});
  EXPECT_THROW(r.of("Y"), std::out_of_range);
}

}  // namespace
}  // namespace siacp
