#include <gtest/gtest.h>

#include "ver4/hopf.hpp"

using namespace ver4;

namespace {

BitVector el(const HopfData& h, const std::string& label) { return h.algebra.element(label); }

BitVector pure(const HopfData& h, const std::string& p, const std::string& q) {
  return h.t2.pure(el(h, p), el(h, q));
}

// Inverse of X = I + T as I + T + T^2 + ... (signs vanish in characteristic 2).
std::vector<BitVector> neumannInverse(const HopfData& h, std::size_t r) {
  const LocalAlgebra& a = h.algebra;
  AlgebraMatrix t{r, std::vector<BitVector>(r * r, BitVector(a.dim()))};
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) t.at(i, j) = el(h, "t" + indexPair(i + 1, j + 1));
  AlgebraMatrix sum = t;
  AlgebraMatrix power = t;
  for (std::size_t k = 2; k < a.truncation(); ++k) {
    power = matrixProduct(a, power, t);
    for (std::size_t e = 0; e < r * r; ++e) sum.entries[e] ^= power.entries[e];
  }
  return sum.entries;
}

}  // namespace

TEST(Ga, Structure) {
  const auto h = buildGa(4);
  EXPECT_EQ(h.delta(el(h, "x")), pure(h, "x", "1") + pure(h, "1", "x"));
  EXPECT_EQ(h.delta(el(h, "w")), pure(h, "w", "1") + pure(h, "1", "w"));
  // (x⊗1 + 1⊗x)^2 in the twisted product picks up (1⊗x)(x⊗1) = x⊗x + w⊗w.
  EXPECT_EQ(h.delta(el(h, "x^2")), pure(h, "x^2", "1") + pure(h, "1", "x^2") + pure(h, "w", "w"));
  EXPECT_EQ(h.tau(el(h, "x")), el(h, "x"));
  EXPECT_FALSE(h.eta(el(h, "x")));
  EXPECT_TRUE(h.eta(h.algebra.unit()));
}

TEST(Gm, AntipodeIsGeometricSeries) {
  const auto h = buildGm(4);
  EXPECT_EQ(h.tau(el(h, "t")), el(h, "t") + el(h, "t^2") + el(h, "t^3"));
  EXPECT_EQ(h.delta(el(h, "t")), pure(h, "t", "1") + pure(h, "1", "t") + pure(h, "t", "t"));
  // Δ(w) = w⊗x + x⊗w with x = 1 + t.
  EXPECT_EQ(h.delta(el(h, "w")), pure(h, "w", "1") + pure(h, "w", "t") + pure(h, "1", "w") + pure(h, "t", "w"));
}

TEST(GL, DeterminantAndInverseOfGL11) {
  const auto h = buildGL(0, 1, 4);
  EXPECT_EQ(h.name, "GL(1|1)");
  EXPECT_EQ(h.named.at("det"), h.algebra.unit() + el(h, "t11"));
  EXPECT_EQ(h.algebra.mul(h.named.at("det"), h.named.at("u")), h.algebra.unit());
}

TEST(GL, AntipodeMatchesNeumannSeries) {
  for (auto [m, n, N] : {std::tuple{0U, 1U, 4U}, std::tuple{0U, 2U, 3U}, std::tuple{1U, 1U, 4U}, std::tuple{2U, 1U, 3U}}) {
    const auto h = buildGL(m, n, N);
    const std::size_t r = m + n;
    const auto inv = neumannInverse(h, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        EXPECT_EQ(h.tau(el(h, "t" + indexPair(i + 1, j + 1))), inv[i * r + j]) << h.name << " t" << i + 1 << j + 1;
  }
}

TEST(GL, GeneratorCounts) {
  const auto h = buildGL(1, 2, 2);
  EXPECT_EQ(h.name, "GL(3|2)");
  EXPECT_EQ(h.algebra.cotangentBasis().size(), 9U + 4U);
  EXPECT_EQ(h.tangentLabels.front(), "e11");
  EXPECT_EQ(h.tangentLabels.back(), "f22");
}

TEST(Hopf, AxiomsHoldForPFamilies) {
  for (std::size_t N = 2; N <= 4; ++N) {
    for (const auto& h : {buildGa(N), buildGm(N), buildGL(0, 1, N)}) {
      const auto r = verifyHopf(h);
      EXPECT_TRUE(r.passed()) << h.name << " N=" << N << ": " << r.summary();
    }
  }
  const auto gl22 = buildGL(0, 2, 3);
  EXPECT_TRUE(verifyHopf(gl22).passed()) << verifyHopf(gl22).summary();
}

TEST(Hopf, GL21CoproductIsNotDCompatible) {
  // Δ(t12) contains t11⊗t12, so (d⊗1 + 1⊗d)Δ(t12) ∋ w11⊗t12 while d t12 = 0.
  const auto h = buildGL(1, 1, 3);
  const auto t12 = el(h, "t12");
  EXPECT_TRUE(h.algebra.d(t12).isZero());
  EXPECT_EQ(tensorD(h.algebra, h.t2, h.delta(t12)), pure(h, "w11", "t12"));
  const auto r = verifyHopf(h);
  EXPECT_FALSE(r.passed());
  ASSERT_FALSE(r.violations().empty());
  EXPECT_EQ(r.violations().front().law, "d-compatibility: Δ∘d = (d⊗1 + 1⊗d)∘Δ");
  // The remaining axioms hold.
  for (const auto& v : r.violations()) EXPECT_NE(v.law.find("∘d"), std::string::npos) << v.law;
}

TEST(Hopf, FaultInjectionFlipsCounit) {
  auto h = buildGa(3);
  const auto x = h.algebra.generatorIndex("x");
  h.coproduct[x] ^= pure(h, "1", "1");
  const auto r = verifyHopf(h);
  EXPECT_FALSE(r.passed());
  bool named = false;
  for (const auto& v : r.violations()) named = named || (v.law == "counit: (η⊗1)∘Δ = id" && v.witness.rfind("x ->", 0) == 0);
  EXPECT_TRUE(named);
}

TEST(Hopf, FaultInjectionFlipsAntipode) {
  auto h = buildGm(3);
  const auto t = h.algebra.generatorIndex("t");
  h.antipode[t] ^= el(h, "t^2");
  const auto r = verifyHopf(h);
  EXPECT_FALSE(r.passed());
  ASSERT_FALSE(r.violations().empty());
  bool antipode = false;
  for (const auto& v : r.violations()) antipode = antipode || v.law == "antipode: μ∘(τ⊗1)∘Δ = ι∘η";
  EXPECT_TRUE(antipode);
}

TEST(Filtration, DeltaFiltrationAndGradedCocommutativity) {
  for (const auto& h : {buildGa(4), buildGm(4), buildGL(0, 1, 4), buildGL(1, 1, 4)}) {
    for (std::size_t j = 0; j < 4; ++j) EXPECT_TRUE(verifyDeltaFiltration(h, j).passed()) << h.name << " j=" << j;
    EXPECT_TRUE(verifyGrCocommutative(h).passed()) << h.name;
  }
  EXPECT_THROW(verifyDeltaFiltration(buildGa(3), 3), std::invalid_argument);
}

TEST(Filtration, OmegaArityTwoAndThree) {
  for (const auto& h : {buildGa(4), buildGm(4), buildGL(0, 1, 4), buildGL(1, 1, 4)}) {
    EXPECT_TRUE(omegaFiltrationCheck(h, 2, 1).passed()) << h.name;
    EXPECT_TRUE(omegaFiltrationCheck(h, 2, 2).passed()) << h.name;
    EXPECT_TRUE(omegaFiltrationCheck(h, 3, 1).passed()) << h.name;
    EXPECT_TRUE(omegaFiltrationCheck(h, 3, 2).passed()) << h.name;
  }
  EXPECT_THROW(omegaFiltrationCheck(buildGa(3), 3, 2), std::invalid_argument);
  EXPECT_THROW(omegaFiltrationCheck(buildGa(3), 1, 1), std::invalid_argument);
}

TEST(Filtration, FaultInjectionBreaksGradedCocommutativity) {
  auto h = buildGa(3);
  const auto x = h.algebra.generatorIndex("x");
  h.coproduct[x] ^= pure(h, "x", "1");
  h.coproduct[x] ^= pure(h, "w", "1");
  EXPECT_FALSE(verifyGrCocommutative(h).passed());
}

TEST(Underlying, OrdinaryGroupSchemeOfGa) {
  const auto u = underlyingGroupScheme(buildGa(4));
  EXPECT_EQ(u.algebra.labels(), (std::vector<std::string>{"1", "x", "x^2", "x^3"}));
  EXPECT_TRUE(verifyHopf(u).passed()) << verifyHopf(u).summary();
  // The ordinary additive group: Δ(x^2) = x^2⊗1 + 1⊗x^2 in characteristic 2.
  const auto& a = u.algebra;
  EXPECT_EQ(u.delta(a.basis(2)), u.t2.pure(a.basis(2), a.unit()) + u.t2.pure(a.unit(), a.basis(2)));
}
