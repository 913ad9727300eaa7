#include <gtest/gtest.h>

#include <random>

#include "hopf/catalog.hpp"
#include "hopf/group_algebras.hpp"
#include "hopf/hopfcore.hpp"
#include "hopf/smash.hpp"

using namespace hopf;

namespace {

Vec e(const HopfAlgebra& H, const std::string& label) { return H.basis(H.require_index(label)); }

Cyclotomic qbinomial_product(int j, int l, const Cyclotomic& q) {
  // prod_{a=1..j} (q^a - 1) / (prod_{a=1..l} (q^a - 1) prod_{a=1..j-l} (q^a - 1))
  const Cyclotomic one = Cyclotomic::one(q.order());
  auto fact = [&](int n) {
    Cyclotomic r = one;
    for (int a = 1; a <= n; ++a) r = r * (q.pow(a) - one);
    return r;
  };
  return fact(j) * (fact(l) * fact(j - l)).inverse();
}

}  // namespace

TEST(HopfCore, SweedlerRelations) {
  HopfAlgebra H = get_algebra("Sweedler");
  EXPECT_EQ(H.dim, 4);
  EXPECT_EQ(H.multiply(e(H, "x"), e(H, "g")), parse_element(H, "-gx"));
  EXPECT_EQ(H.multiply(e(H, "x"), e(H, "x")), H.zero());
  Tensor2 dx;
  accumulate(dx, H.require_index("x"), H.require_index("1"), Cyclotomic::one(H.order));
  accumulate(dx, H.require_index("g"), H.require_index("x"), Cyclotomic::one(H.order));
  EXPECT_EQ(H.comultiply(e(H, "x")), dx);
}

TEST(HopfCore, A4ppSquare) {
  HopfAlgebra H = get_algebra("A4''");
  EXPECT_EQ(H.multiply(e(H, "x"), e(H, "x")), parse_element(H, "g^2 - 1"));
}

TEST(HopfCore, H6CrossRelation) {
  HopfAlgebra H = get_algebra("H6");
  EXPECT_EQ(H.dim, 16);
  EXPECT_EQ(H.multiply(e(H, "y"), e(H, "x")), parse_element(H, "-xy + g^2 - 1"));
}

TEST(HopfCore, UnitComultiplication) {
  for (const std::string name : {"Sweedler", "H9", "kS3"}) {
    HopfAlgebra H = get_algebra(name);
    Tensor2 t;
    accumulate(t, H.require_index("1"), H.require_index("1"), Cyclotomic::one(H.order));
    EXPECT_EQ(H.comultiply(H.unit), t) << name;
  }
}

TEST(HopfCore, TaftCoproductExamples) {
  HopfAlgebra T = taft_algebra(3, 1);
  const Cyclotomic q = T.constants.at("omega");
  Tensor2 dgx;
  accumulate(dgx, T.require_index("gx"), T.require_index("g"), Cyclotomic::one(T.order));
  accumulate(dgx, T.require_index("g^2"), T.require_index("gx"), Cyclotomic::one(T.order));
  EXPECT_EQ(T.comultiply(e(T, "gx")), dgx);
  Tensor2 dx2;
  accumulate(dx2, T.require_index("x^2"), T.require_index("1"), Cyclotomic::one(T.order));
  accumulate(dx2, T.require_index("gx"), T.require_index("x"), Cyclotomic::one(T.order) + q);
  accumulate(dx2, T.require_index("g^2"), T.require_index("x^2"), Cyclotomic::one(T.order));
  EXPECT_EQ(T.comultiply(e(T, "x^2")), dx2);
}

TEST(HopfCore, TaftClosedFormCoproduct) {
  for (int n = 2; n <= 4; ++n)
    for (int k = 1; k <= 4; ++k) {
      HopfAlgebra T = taft_algebra(n, k);
      EXPECT_EQ(T.dim, k * n * n);
      EXPECT_EQ(group_likes(T).group.order(), k * n);
      for (int i = 0; i < k * n; ++i)
        for (int j = 0; j < n; ++j) {
          int b = j * k * n + i;
          EXPECT_EQ(T.comultiply(T.basis(b)), taft_closed_form_coproduct(T, n, k, i, j))
              << "n=" << n << " k=" << k << " " << T.labels[b];
        }
    }
}

TEST(HopfCore, QBinomial) {
  const Cyclotomic q4 = primitive_root(4);
  EXPECT_TRUE(qbinomial(1, 0, q4).is_one());
  EXPECT_TRUE(qbinomial(2, 1, Cyclotomic(2, Rational(-1))).is_zero());
  EXPECT_EQ(qbinomial(2, 1, q4), Cyclotomic::one(4) + q4);
  for (const Cyclotomic& q : {primitive_root(3), q4, Cyclotomic(2, Rational(-1)), primitive_root(8)}) {
    const int ord = multiplicative_order(q);
    for (int j = 0; j <= 6; ++j)
      for (int l = 0; l <= j; ++l)
        if (j < ord) EXPECT_EQ(qbinomial(j, l, q), qbinomial_product(j, l, q)) << q.str() << " " << j << " " << l;
  }
}

TEST(HopfCore, GroupLikes) {
  EXPECT_EQ(group_likes(get_algebra("Sweedler")).elements.size(), 2u);
  GroupLikeSet GL = group_likes(get_algebra("H13"));
  EXPECT_EQ(GL.group.order(), 4);
  EXPECT_TRUE(GL.group.is_abelian());
  EXPECT_EQ(GL.group.exponent(), 2);
  EXPECT_THROW(group_likes(get_algebra("(kC2)^*")), NotClosed);
}

TEST(HopfCore, SkewPrimitives) {
  HopfAlgebra S = get_algebra("Sweedler");
  bool found = false;
  for (const auto& p : skew_primitives(S))
    if (S.labels[p.x] == "x") {
      found = true;
      EXPECT_EQ(S.labels[p.t], "1");
      EXPECT_EQ(S.labels[p.s], "g");
    }
  EXPECT_TRUE(found);

  HopfAlgebra H7 = get_algebra("H7");
  std::map<std::string, std::pair<std::string, std::string>> got;
  for (const auto& p : skew_primitives(H7)) got[H7.labels[p.x]] = {H7.labels[p.t], H7.labels[p.s]};
  EXPECT_EQ(got["x"], std::make_pair(std::string("1"), std::string("g")));
  EXPECT_EQ(got["y"], std::make_pair(std::string("1"), std::string("g^3")));

  EXPECT_TRUE(skew_primitives(get_algebra("kC4")).empty());
}

TEST(HopfCore, CatalogAxioms) {
  for (const auto& entry : catalog()) {
    HopfAlgebra H = entry.build();
    EXPECT_EQ(H.dim, entry.expected_dim) << entry.name;
    AxiomReport r = check_hopf_axioms(H);
    EXPECT_TRUE(r.ok) << entry.name << ": " << (r.failures.empty() ? "" : r.failures.front());
    if (entry.expected_group_likes) EXPECT_EQ(group_likes(H).group.order(), entry.expected_group_likes) << entry.name;
  }
}

TEST(HopfCore, MutatedSweedlerFails) {
  HopfAlgebra H = get_algebra("Sweedler");
  const int x = H.require_index("x"), g = H.require_index("g");
  H.comult[x] = {{Cyclotomic::one(H.order), x, g}, {Cyclotomic::one(H.order), g, x}};
  AxiomReport r = check_hopf_axioms(H);
  EXPECT_FALSE(r.ok);
}

TEST(HopfCore, AssociativityOnRandomTriples) {
  HopfAlgebra H = get_algebra("H16");
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(0, H.dim - 1);
  for (int t = 0; t < 200; ++t) {
    Vec a = H.basis(pick(rng)), b = H.basis(pick(rng)), c = H.basis(pick(rng));
    EXPECT_EQ(H.multiply(H.multiply(a, b), c), H.multiply(a, H.multiply(b, c)));
  }
}

TEST(HopfCore, TensorIdentifications) {
  for (const auto& id : tensor_identifications()) {
    HopfAlgebra P = get_algebra(id.algebra), T = get_algebra(id.tensor);
    EXPECT_EQ(P.dim, T.dim);
    MorphismReport m = verify_hopf_morphism(P, T, parse_images(T, id.images));
    EXPECT_TRUE(m.bijective) << id.tensor << " -> " << id.algebra;
  }
}

TEST(HopfCore, TensorWithTrivialGroup) {
  HopfAlgebra S = get_algebra("Sweedler");
  HopfAlgebra T = tensor_hopf(S, group_algebra(cyclic_group(1), "k1"));
  EXPECT_EQ(T.dim, S.dim);
  EXPECT_TRUE(check_hopf_axioms(T).ok);
}

TEST(HopfCore, NonConfluentPresentationRejected) {
  PresentationSpec S = presentation_spec("Sweedler");
  S.skew[0].chi["g"] = "1";
  EXPECT_THROW(build_hopf(S), Error);
}
