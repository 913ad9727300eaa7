#include <gtest/gtest.h>

#include "hopf/catalog.hpp"
#include "hopf/group_algebras.hpp"
#include "hopf/partial.hpp"

using namespace hopf;

namespace {

Cyclotomic Q(const HopfAlgebra& H, long n, long d = 1) { return Cyclotomic(H.order, Rational(n, d)); }

Vec sweedler_lambda(const HopfAlgebra& H, long alpha) {
  Vec l = H.zero();
  l[H.require_index("1")] = Q(H, 1);
  l[H.require_index("x")] = Q(H, alpha);
  l[H.require_index("gx")] = Q(H, alpha);
  return l;
}

std::vector<std::string> labels_of(const HopfAlgebra& H, const std::vector<int>& idx) {
  std::vector<std::string> out;
  for (int i : idx) out.push_back(H.labels[i]);
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup sub(const GroupLikeSet& GL, const std::string& spec) { return parse_subgroup(GL.group, spec); }

}  // namespace

TEST(Partial, DefectExamples) {
  HopfAlgebra H = get_algebra("Sweedler");
  const int g = H.require_index("g"), one = H.require_index("1");
  EXPECT_TRUE(partial_defect(H, sweedler_lambda(H, 3), g, g).is_zero());
  Vec bad = H.zero();
  bad[one] = Q(H, 1);
  bad[g] = Q(H, 1, 2);
  EXPECT_EQ(partial_defect(H, bad, g, one), Q(H, 1, 4));
  for (int k = 0; k < H.dim; ++k) EXPECT_TRUE(partial_defect(H, bad, one, k).is_zero());
}

TEST(Partial, IsPartialAction) {
  HopfAlgebra H = get_algebra("Sweedler");
  EXPECT_TRUE(is_partial_action(H, H.counit));
  for (long a : {-2L, 0L, 1L, 7L}) EXPECT_TRUE(is_partial_action(H, sweedler_lambda(H, a)));
  Vec bad = H.zero();
  bad[H.require_index("1")] = Q(H, 1);
  bad[H.require_index("x")] = Q(H, 1);
  EXPECT_FALSE(is_partial_action(H, bad));
  for (const auto& name : algebra_names()) {
    if (catalog_entry(name).kind == "dual") continue;
    HopfAlgebra A = get_algebra(name);
    EXPECT_TRUE(is_partial_action(A, A.counit)) << name;
    EXPECT_TRUE(is_symmetric(A, A.counit)) << name;
  }
}

TEST(Partial, SymmetricRejectsNonPartial) {
  HopfAlgebra H = get_algebra("Sweedler");
  Vec bad = H.zero();
  bad[H.require_index("1")] = Q(H, 1);
  bad[H.require_index("x")] = Q(H, 1);
  EXPECT_THROW(is_symmetric(H, bad), NotAPartialAction);
}

TEST(Partial, TransversalSweedler) {
  HopfAlgebra H = get_algebra("Sweedler");
  GroupLikeSet GL = group_likes(H);
  TransversalData T = build_transversal(H, GL, sub(GL, "1"));
  EXPECT_EQ(labels_of(H, T.transversal), (std::vector<std::string>{"gx", "x"}));
  EXPECT_EQ(labels_of(H, T.reduced), (std::vector<std::string>{"gx"}));
}

TEST(Partial, TransversalA4pp) {
  HopfAlgebra H = get_algebra("A4''");
  GroupLikeSet GL = group_likes(H);
  TransversalData T = build_transversal(H, GL, sub(GL, "g^2"));
  EXPECT_EQ(T.classes.size(), 2u);
  EXPECT_EQ(labels_of(H, T.reduced), (std::vector<std::string>{"gx"}));
  TransversalData T1 = build_transversal(H, GL, sub(GL, "1"));
  EXPECT_EQ(labels_of(H, T1.reduced), (std::vector<std::string>{"g^2x", "g^3x", "gx"}));
}

TEST(Partial, ReducedSystemSizes) {
  HopfAlgebra S = get_algebra("Sweedler");
  GroupLikeSet GS = group_likes(S);
  EXPECT_EQ(build_reduced_system(S, GS, sub(GS, "1")).equations.size(), 4u);
  HopfAlgebra A = get_algebra("A4''");
  GroupLikeSet GA = group_likes(A);
  EXPECT_EQ(build_reduced_system(A, GA, sub(GA, "g^2")).equations.size(), 8u);
  HopfAlgebra H6 = get_algebra("H6");
  GroupLikeSet G6 = group_likes(H6);
  EXPECT_EQ(build_reduced_system(H6, G6, sub(G6, "g^2")).equations.size(), 64u);
}

TEST(Partial, SolveExamples) {
  HopfAlgebra S = get_algebra("Sweedler");
  GroupLikeSet GS = group_likes(S);
  auto sol = solve_partial_actions(S, GS, sub(GS, "1"));
  ASSERT_EQ(sol.families.size(), 1u);
  EXPECT_EQ(sol.families[0].param_names, std::vector<std::string>{"alpha"});

  HopfAlgebra A = get_algebra("A4''");
  GroupLikeSet GA = group_likes(A);
  auto sa = solve_partial_actions(A, GA, sub(GA, "1"));
  ASSERT_EQ(sa.families.size(), 1u);
  ASSERT_EQ(sa.families[0].constraints.size(), 1u);
  EXPECT_EQ(sa.families[0].constraints[0].str(sa.families[0].display_names()), "alpha^2 + 1");

  HopfAlgebra H6 = get_algebra("H6");
  GroupLikeSet G6 = group_likes(H6);
  EXPECT_TRUE(solve_partial_actions(H6, G6, sub(G6, "1")).families.empty());
}

TEST(Partial, EnumerateCounts) {
  std::size_t total = 0;
  for (const auto& s : enumerate_all_partial_actions(get_algebra("A22"))) total += s.families.size();
  EXPECT_EQ(total, 5u);
  total = 0;
  for (const auto& s : enumerate_all_partial_actions(get_algebra("kC2"))) total += s.families.size();
  EXPECT_EQ(total, 2u);
}

// Every family, specialized, is a partial action that passes the property suite.
TEST(Partial, SoundnessAndPropertySuite) {
  for (const auto& name : tabulated_algebras()) {
    HopfAlgebra H = get_algebra(name);
    GroupLikeSet GL = group_likes(H);
    for (const auto& sol : enumerate_all_partial_actions(H))
      for (const auto& f : sol.families) {
        for (const auto& defaults : std::vector<std::vector<long>>{{1, 2, 3}, {-1, 5, 2}, {3, -2, 7}}) {
          std::vector<Cyclotomic> d;
          for (long v : defaults) d.push_back(Q(H, v));
          auto pt = specialize(f, {}, d);
          ASSERT_TRUE(pt.has_value()) << name;
          Vec lam = lambda_from_point(H, GL, sol.N, sol.var_basis, *pt);
          ASSERT_TRUE(is_partial_action(H, lam)) << name << " " << sol.N.str(GL.group);
          PropertyReport rep = check_property_suite(H, lam);
          EXPECT_TRUE(rep.ok) << name << " " << (rep.failures.empty() ? "" : rep.failures.front());
        }
      }
  }
}

// The reduced method agrees with the full unreduced system on every initial condition.
TEST(Partial, FullSystemOracleDim8) {
  for (const std::string name : {"Sweedler", "A2", "A4'", "A4''", "A4'''", "A22", "kC2xC2xC2"}) {
    HopfAlgebra H = get_algebra(name);
    GroupLikeSet GL = group_likes(H);
    PolyRing full(H.order, H.labels);
    for (const auto& N : enumerate_subgroups(GL.group)) {
      auto sol = solve_partial_actions(H, GL, N);
      auto fams = solve_full_system(H, std::make_pair(GL, N));
      std::vector<std::vector<Poly>> a;
      for (const auto& f : fams) a.push_back(f.ideal);
      auto b = full_ring_ideals(H, GL, sol, full);
      ASSERT_EQ(a.empty(), b.empty()) << name << " " << N.str(GL.group);
      if (!a.empty()) EXPECT_TRUE(same_variety(a, b)) << name << " " << N.str(GL.group);
    }
  }
}

TEST(Partial, ConvolutionIdempotent) {
  HopfAlgebra H = get_algebra("Sweedler");
  Vec l = sweedler_lambda(H, 5);
  EXPECT_EQ(convolution_square(H, l), l);
}

TEST(Partial, PropertySuiteRejectsNonPartial) {
  HopfAlgebra H = get_algebra("Sweedler");
  Vec bad = H.zero();
  bad[H.require_index("1")] = Q(H, 1);
  bad[H.require_index("g")] = Q(H, 1, 2);
  EXPECT_THROW(check_property_suite(H, bad), NotAPartialAction);
}

TEST(Partial, SymmetricVerdicts) {
  HopfAlgebra H = get_algebra("kC4");
  GroupLikeSet GL = group_likes(H);
  for (const auto& sol : enumerate_all_partial_actions(H))
    for (const auto& f : sol.families) EXPECT_EQ(symmetric_verdict(H, GL, sol.N, sol.var_basis, f), "true");
}

TEST(Partial, SplitBudget) {
  HopfAlgebra H = get_algebra("kC2xC2xC2");
  ExtractOptions tight;
  tight.split_budget = 2;
  EXPECT_THROW(solve_full_system(H, std::nullopt, tight), SplitBudgetExceeded);
}
