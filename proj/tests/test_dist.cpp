#include <gtest/gtest.h>

#include "ver4/dist.hpp"

using namespace ver4;

namespace {

std::size_t tangentIndex(const HopfData& h, const std::string& label) {
  const auto cot = h.algebra.cotangentBasis();
  for (std::size_t k = 0; k < h.tangentLabels.size(); ++k)
    if (h.tangentLabels[k] == label) return cot[k];
  throw std::out_of_range(label);
}

// (φψ)(b_i) = Σ φ(p)ψ(q) over the terms p⊗q of Δ(b_i), evaluated directly.
BitVector convolutionOracle(const HopfData& h, const BitVector& phi, const BitVector& psi) {
  BitVector out(h.algebra.dim());
  for (std::size_t i = 0; i < h.algebra.dim(); ++i) {
    bool value = false;
    h.coproduct[i].forEachSetBit([&](std::size_t k) {
      value = value != (phi.get(h.t2.component(k, 0)) && psi.get(h.t2.component(k, 1)));
    });
    if (value) out.set(i);
  }
  return out;
}

}  // namespace

TEST(Dist, LayerDimensions) {
  const auto dist = distAlgebra(buildGa(4), 3);
  EXPECT_EQ(dist.layerDim(0), 1U);
  EXPECT_EQ(dist.layerDim(1), 3U);
  EXPECT_EQ(dist.layerDim(2), 5U);
  EXPECT_EQ(dist.label(0), "η");
  EXPECT_EQ(dist.label(1), "e");
  EXPECT_EQ(dist.label(2), "f");
  EXPECT_THROW(distAlgebra(buildGa(3), 3), std::invalid_argument);
}

TEST(Dist, ProductMatchesDirectConvolution) {
  for (const auto& h : {buildGa(4), buildGm(4), buildGL(0, 1, 4), buildGL(1, 1, 3)}) {
    const auto dist = distAlgebra(h, h.truncation() - 1);
    const std::size_t top = dist.maxOrder();
    for (std::size_t i = 0; i < dist.layerDim(top); ++i)
      for (std::size_t j = 0; j < dist.layerDim(top - h.algebra.degree(i)); ++j)
        ASSERT_EQ(dist.product(dist.basis(i), dist.basis(j)),
                  convolutionOracle(h, dist.basis(i), dist.basis(j)))
            << h.name << " (" << dist.label(i) << ", " << dist.label(j) << ")";
  }
}

TEST(Dist, ProductRespectsMaxOrder) {
  const auto dist = distAlgebra(buildGa(4), 2);
  const auto e = dist.basis(1);
  const auto f = dist.basis(2);
  EXPECT_NO_THROW((void)dist.product(e, f));
  ASSERT_EQ(dist.label(3), "δ(x^2)");
  EXPECT_THROW((void)dist.product(dist.basis(3), e), std::invalid_argument);
}

TEST(Dist, CounitIsUnit) {
  const auto dist = distAlgebra(buildGm(4), 3);
  for (std::size_t i = 0; i < dist.layerDim(3); ++i) {
    EXPECT_EQ(dist.product(dist.unit(), dist.basis(i)), dist.basis(i));
    EXPECT_TRUE(commutatorBeta(dist, dist.unit(), dist.basis(i)).isZero());
  }
}

TEST(Dist, GaBracketVanishes) {
  const auto h = buildGa(4);
  const auto dist = distAlgebra(h, 3);
  const auto e = dist.basis(tangentIndex(h, "e"));
  const auto f = dist.basis(tangentIndex(h, "f"));
  EXPECT_TRUE(commutatorBeta(dist, e, f).isZero());
  EXPECT_TRUE(commutatorBeta(dist, e, e).isZero());
  // No term x⊗x occurs in any Δ(b), so e·e = 0 as for the ordinary additive group.
  EXPECT_TRUE(dist.product(e, e).isZero());
  EXPECT_EQ(dist.format(dist.product(f, e)), dist.format(dist.product(e, f)));
}

TEST(Dist, GmSquareOfE) {
  const auto h = buildGm(4);
  const auto dist = distAlgebra(h, 3);
  const auto e = dist.basis(tangentIndex(h, "e"));
  // Δ(t) ∋ t⊗t, so (e·e)(t) = 1.
  const auto ee = dist.product(e, e);
  EXPECT_TRUE(ee.get(tangentIndex(h, "e")));
  EXPECT_FALSE(ee.get(tangentIndex(h, "f")));
}

TEST(Dist, GL11BracketOfF) {
  const auto h = buildGL(0, 1, 4);
  const auto dist = distAlgebra(h, 3);
  const auto f = dist.basis(tangentIndex(h, "f11"));
  EXPECT_EQ(commutatorBeta(dist, f, f), dist.basis(tangentIndex(h, "e11")));
}

TEST(Dist, DualBraidingIsTransposeOfBraiding) {
  for (const auto& h : {buildGa(4), buildGm(4), buildGL(0, 1, 4), buildGL(1, 1, 3), buildGL(0, 2, 3)}) {
    const auto r = verifyDualBraiding(distAlgebra(h, 2));
    EXPECT_TRUE(r.passed()) << h.name << ": " << r.summary();
  }
}

TEST(Dist, IdentitiesHoldForPFamilies) {
  for (const auto& h : {buildGa(4), buildGm(4), buildGL(0, 1, 4)}) {
    const auto r = verifyDistIdentities(distAlgebra(h, 3));
    EXPECT_TRUE(r.passed()) << h.name << ": " << r.summary();
  }
  const auto r = verifyDistIdentities(distAlgebra(buildGL(0, 2, 3), 2));
  EXPECT_TRUE(r.passed()) << r.summary();
}

TEST(Dist, GL21DifferentialIsNotADerivation) {
  const auto h = buildGL(1, 1, 4);
  const auto dist = distAlgebra(h, 3);
  const auto r = verifyDistIdentities(dist);
  EXPECT_FALSE(r.passed());
  ASSERT_FALSE(r.violations().empty());
  EXPECT_EQ(r.violations().front().law, "pairs: d(φψ) = dφ·ψ + φ·dψ");
  // (d⊗1 + 1⊗d)Δ(t21) ∋ t21⊗w11 while Δ(d t21) = 0, so d(e21·f11) and
  // de21·f11 + e21·df11 differ at t21.
  const auto e21 = dist.basis(tangentIndex(h, "e21"));
  const auto f11 = dist.basis(tangentIndex(h, "f11"));
  const auto lhs = dist.d(dist.product(e21, f11));
  const auto rhs = dist.product(dist.d(e21), f11) + dist.product(e21, dist.d(f11));
  EXPECT_TRUE((lhs + rhs).get(tangentIndex(h, "e21")));
}

TEST(Dist, FaultInjectionBreaksIdentities) {
  auto h = buildGm(4);
  const auto& a = h.algebra;
  // Corrupt Δ(t^2) by the term t⊗t.
  const auto tt = a.countBelow(2);
  ASSERT_EQ(a.label(tt), "t^2");
  h.coproduct[tt] ^= h.t2.pure(a.element("t"), a.element("t"));
  const auto r = verifyDistIdentities(distAlgebra(h, 3));
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.violations().empty());
}
