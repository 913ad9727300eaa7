#include <gtest/gtest.h>

#include "hopf/catalog.hpp"
#include "hopf/group_algebras.hpp"
#include "hopf/smash.hpp"

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

}  // namespace

TEST(Span, SolverBasics) {
  SpanSolver s(4);
  Vec a = {Cyclotomic(4, Rational(1)), Cyclotomic(4, Rational(2))};
  Vec b = {Cyclotomic(4, Rational(2)), Cyclotomic(4, Rational(4))};
  EXPECT_TRUE(s.insert(a));
  EXPECT_FALSE(s.insert(b));
  EXPECT_EQ(s.rank(), 1);
  EXPECT_TRUE(s.contains(b));
  EXPECT_TRUE(same_span(4, {a}, {b}));
}

TEST(HLambda, GroupAlgebraDimensionIsOrderOfN) {
  for (const std::string g : {"C4", "C2xC2", "S3", "C2xC2xC2", "D4"}) {
    FiniteGroup G = named_group(g);
    HopfAlgebra kG = group_algebra(G);
    for (const auto& N : enumerate_subgroups(G)) {
      Vec lam = lambda_N(kG, G, N);
      SubalgebraBasis S = compute_H_lambda(kG, lam);
      EXPECT_EQ(S.dim, N.order()) << g;
      std::vector<Vec> kN;
      for (int n : N.members) kN.push_back(kG.basis(n));
      EXPECT_TRUE(same_span(kG.order, S.basis, kN));
      EXPECT_TRUE(check_carac(kG, lam).holds);
      EXPECT_TRUE(check_strong(kG, lam).holds);
      EXPECT_TRUE(check_coproduct_closure(kG, S));
      EXPECT_TRUE(smash_matches_H_lambda(kG, smash_product(kG, lam), S));
    }
  }
}

TEST(HLambda, SweedlerDeformation) {
  HopfAlgebra H = get_algebra("Sweedler");
  for (long alpha : {1L, 2L, -3L}) {
    Vec lam = sweedler_lambda(H, alpha);
    SubalgebraBasis S = compute_H_lambda(H, lam);
    EXPECT_EQ(S.dim, 2);
    Vec v = H.zero();
    v[H.require_index("g")] = Q(H, alpha);
    v[H.require_index("gx")] = Q(H, 1);
    EXPECT_TRUE(same_span(H.order, S.basis, {H.unit, v}));
    Vec sq = H.unit;
    for (auto& c : sq) c = c * Q(H, alpha * alpha);
    EXPECT_EQ(H.multiply(v, v), sq);

    CaracResult c = check_carac(H, lam);
    EXPECT_FALSE(c.holds);
    EXPECT_FALSE(check_strong(H, lam).holds);
    EXPECT_FALSE(check_coproduct_closure(H, S));
    EXPECT_TRUE(check_restriction_lemma(H, lam, S));
    CorollaryReport cor = check_skew_corollaries(H, lam);
    EXPECT_TRUE(cor.applies);
    EXPECT_TRUE(cor.one_zero);
    EXPECT_TRUE(cor.zero_one);
    EXPECT_TRUE(cor.consistent);

    SmashAlgebra A = smash_product(H, lam);
    EXPECT_EQ(A.dim, 2);
    EXPECT_TRUE(smash_matches_H_lambda(H, A, S));
  }
}

TEST(HLambda, CaracWitnessForSkewPrimitive) {
  // gx lies in P_{g,1}; lambda(g) = 0 and lambda(1) = 1, so
  // lambda(x_1)x_2 = alpha g + gx while lambda(x_1)x_2 lambda(x_3) = alpha.
  HopfAlgebra H = get_algebra("Sweedler");
  CaracResult c = check_carac(H, sweedler_lambda(H, 4));
  ASSERT_FALSE(c.holds);
  EXPECT_EQ(H.labels[c.witness], "gx");
  EXPECT_EQ(c.lhs, parse_element(H, "4g + gx"));
  EXPECT_EQ(c.rhs, parse_element(H, "4"));
}

TEST(HLambda, CounitGivesWholeAlgebra) {
  for (const std::string name : {"Sweedler", "A4''", "H6", "Taft(3,2)"}) {
    HopfAlgebra H = get_algebra(name);
    SubalgebraBasis S = compute_H_lambda(H, H.counit);
    EXPECT_EQ(S.dim, H.dim) << name;
    EXPECT_TRUE(check_carac(H, H.counit).holds);
    EXPECT_TRUE(check_strong(H, H.counit).holds);
    EXPECT_FALSE(check_skew_corollaries(H, H.counit).applies);
  }
}

TEST(HLambda, RejectsNonPartial) {
  HopfAlgebra H = get_algebra("Sweedler");
  Vec bad = H.zero();
  bad[H.require_index("1")] = Q(H, 1);
  bad[H.require_index("x")] = Q(H, 1);
  EXPECT_THROW(compute_H_lambda(H, bad), NotAPartialAction);
  EXPECT_THROW(smash_product(H, bad), NotAPartialAction);
}

TEST(HLambda, H6CorollaryApplies) {
  HopfAlgebra H = get_algebra("H6");
  GroupLikeSet GL = group_likes(H);
  Vec lam = H.zero();
  for (int g : parse_subgroup(GL.group, "g^2").members) lam[GL.elements[g]] = Q(H, 1);
  for (const std::string b : {"x", "gx", "g^2x", "g^3x"}) lam[H.require_index(b)] = Q(H, 1);
  for (const std::string b : {"y", "gy", "g^2y", "g^3y"}) lam[H.require_index(b)] = Q(H, 2);
  ASSERT_TRUE(is_partial_action(H, lam));
  CorollaryReport cor = check_skew_corollaries(H, lam);
  EXPECT_TRUE(cor.applies);
  EXPECT_FALSE(cor.carac);
}

TEST(Tensor, PartialActionProducts) {
  HopfAlgebra A2 = get_algebra("A2");
  FiniteGroup C2 = cyclic_group(2, "h");
  HopfAlgebra kC2 = group_algebra(C2, "kC2", A2.order);
  Vec lam = tensor_partial_action(A2, A2.counit, kC2, lambda_N(kC2, C2, Subgroup{{0}}));
  HopfAlgebra T = get_algebra("A2(x)kC2");
  ASSERT_TRUE(is_partial_action(T, lam));

  // carried to H12 by the identification, it is the {1,g} row
  HopfAlgebra H12 = get_algebra("H12");
  const TensorIdentification* id = nullptr;
  for (const auto& t : tensor_identifications())
    if (t.algebra == "H12") id = &t;
  ASSERT_NE(id, nullptr);
  MorphismReport m = verify_hopf_morphism(H12, T, parse_images(T, id->images));
  ASSERT_TRUE(m.bijective);
  Vec pulled = H12.zero();
  for (int b = 0; b < H12.dim; ++b) pulled[b] = apply_functional(lam, m.images[b]);
  GroupLikeSet GL = group_likes(H12);
  Vec expect = H12.zero();
  for (int g : parse_subgroup(GL.group, "g").members) expect[GL.elements[g]] = Q(H12, 1);
  EXPECT_EQ(pulled, expect);

  HopfAlgebra kV = get_algebra("kC2xC2");
  Vec e2 = tensor_partial_action(kC2, kC2.counit, kC2, kC2.counit);
  EXPECT_EQ(e2, tensor_hopf(kC2, kC2).counit);
  Vec l11 = tensor_partial_action(kC2, lambda_N(kC2, C2, Subgroup{{0}}), kC2, lambda_N(kC2, C2, Subgroup{{0}}));
  EXPECT_EQ(l11, lambda_N(kV, named_group("C2xC2"), Subgroup{{0}}));
}

TEST(Witness, UniversalityConstruction) {
  for (const std::string name : {"Sweedler", "A2", "kC4"}) {
    WitnessConstruction w = lambda_hopf_witness_construction(get_algebra(name), cyclic_group(2, "u"));
    EXPECT_EQ(w.H_lambda.dim, get_algebra(name).dim) << name;
    EXPECT_TRUE(w.carac);
    EXPECT_TRUE(w.morphism.injective);
    EXPECT_TRUE(w.image_matches);
  }
  WitnessConstruction w = lambda_hopf_witness_construction(get_algebra("kC2"), cyclic_group(3, "u"));
  EXPECT_EQ(w.H_lambda.dim, 2);
  EXPECT_TRUE(w.image_matches);
}

TEST(Witness, Taft) {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 4}, {3, 2}}) {
    TaftWitness w = taft_lambda_hopf(n, k);
    EXPECT_EQ(w.dim, n * n);
    EXPECT_TRUE(w.carac);
    EXPECT_TRUE(w.closure);
    EXPECT_TRUE(w.morphism.injective);
    EXPECT_TRUE(w.image_matches);
  }
  EXPECT_EQ(taft_lambda(taft_algebra(2, 1), 1), taft_algebra(2, 1).counit);
}

TEST(Morphism, IdentityAndFailure) {
  HopfAlgebra H = get_algebra("A4''");
  std::map<std::string, Vec> id;
  for (const auto& [sym, v] : H.generators) id[sym] = v;
  EXPECT_TRUE(verify_hopf_morphism(H, H, id).bijective);
  HopfAlgebra S = get_algebra("Sweedler");
  std::map<std::string, Vec> bad = {{"g", parse_element(S, "g")}, {"x", parse_element(S, "gx")}};
  EXPECT_THROW(verify_hopf_morphism(S, S, bad), NotAMorphism);
  EXPECT_FALSE(is_hopf_morphism(S, S, bad));
}

TEST(Morphism, TaftSubalgebraEmbedding) {
  HopfAlgebra T = taft_algebra(2, 2);
  HopfAlgebra S = get_algebra("Sweedler");
  std::map<std::string, Vec> im = {{"g", parse_element(T, "g^2")}, {"x", parse_element(T, "x")}};
  MorphismReport m = verify_hopf_morphism(S, T, im);
  EXPECT_TRUE(m.injective);
  EXPECT_FALSE(m.bijective);
}

TEST(Report, SmashReportFields) {
  HopfAlgebra H = get_algebra("Sweedler");
  SmashReport r = smash_report(H, sweedler_lambda(H, 1));
  EXPECT_EQ(r.dim, 2);
  EXPECT_FALSE(r.carac.holds);
  EXPECT_TRUE(r.restriction);
  EXPECT_TRUE(r.smash_agrees);
  EXPECT_EQ(r.subgroup, std::vector<std::string>{"1"});
}
