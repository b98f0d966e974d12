#include <gtest/gtest.h>

#include "ver4/derivation.hpp"
#include "ver4/lie.hpp"

using namespace ver4;

namespace {

std::size_t idx(const RestrictedLie& l, const std::string& label) {
  for (std::size_t i = 0; i < l.dim(); ++i)
    if (l.labels()[i] == label) return i;
  throw std::out_of_range(label);
}

BitVector el(const RestrictedLie& l, const std::string& label) { return l.basis(idx(l, label)); }

BitVector br(const RestrictedLie& l, const std::string& a, const std::string& b) {
  return l.bracket(el(l, a), el(l, b));
}

bool hasLaw(const Report& r, const std::string& prefix) {
  for (const auto& v : r.violations())
    if (v.law.rfind(prefix, 0) == 0) return true;
  return false;
}

// Number of v in L⊗L with s v = v, by exhaustive enumeration.
std::size_t invariantCountByEnumeration(const Ver4Object& v) {
  const BitMatrix s = braiding(v, v).matrix();
  const std::size_t n = v.dim() * v.dim();
  std::size_t count = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    BitVector x(n);
    for (std::size_t k = 0; k < n; ++k)
      if (mask >> k & 1U) x.set(k);
    if (s.apply(x) == x) ++count;
  }
  return count;
}

}  // namespace

TEST(LieOfGroup, Ga) {
  const auto l = lieOfGroup(buildGa(4));
  EXPECT_EQ(l.labels(), (std::vector<std::string>{"e", "f"}));
  EXPECT_EQ(l.d(el(l, "f")), el(l, "e"));
  EXPECT_TRUE(l.d(el(l, "e")).isZero());
  for (const auto& b : l.brackets) EXPECT_TRUE(b.isZero());
  EXPECT_TRUE(l.square(el(l, "e")).isZero());
  EXPECT_FALSE(l.squareBasis(idx(l, "f")).has_value());
  EXPECT_THROW((void)l.square(el(l, "f")), std::domain_error);
}

TEST(LieOfGroup, Gm) {
  const auto l = lieOfGroup(buildGm(4));
  EXPECT_EQ(l.d(el(l, "f")), el(l, "e"));
  EXPECT_EQ(l.square(el(l, "e")), el(l, "e"));
  EXPECT_TRUE(br(l, "e", "e").isZero());
  EXPECT_TRUE(br(l, "e", "f").isZero());
  EXPECT_TRUE(br(l, "f", "e").isZero());
  // Restricted axiom (iv): [f,f] = (df)^[2] = e^[2] = e.
  EXPECT_EQ(br(l, "f", "f"), el(l, "e"));
  EXPECT_FALSE(l.squareBasis(idx(l, "f")).has_value());
}

TEST(LieOfGroup, GL11) {
  const auto l = lieOfGroup(buildGL(0, 1, 4));
  EXPECT_EQ(l.labels(), (std::vector<std::string>{"e11", "f11"}));
  EXPECT_EQ(l.d(el(l, "f11")), el(l, "e11"));
  EXPECT_EQ(l.square(el(l, "e11")), el(l, "e11"));
  EXPECT_EQ(br(l, "f11", "f11"), el(l, "e11"));
  EXPECT_TRUE(br(l, "e11", "f11").isZero());
}

TEST(LieOfGroup, BracketMatchesDerivationCommutator) {
  // [F_φ, F_ψ] = F_[ψ,φ]; reading off η∘[F_i, F_j] gives the bracket
  // without going through the distribution product.
  for (const auto& h : {buildGa(4), buildGm(4), buildGL(0, 1, 4), buildGL(0, 2, 3)}) {
    const auto l = lieOfGroup(h);
    const auto tangent = tangentBasis(h);
    const auto cot = h.algebra.cotangentBasis();
    std::vector<Derivation> fs;
    for (const auto& t : tangent) fs.push_back(derivationFromTangent(h, t));
    for (std::size_t i = 0; i < fs.size(); ++i)
      for (std::size_t j = 0; j < fs.size(); ++j) {
        const BitVector phi = counitOf(h, commutatorOfDerivations(h.algebra, fs[i], fs[j]));
        BitVector coords(cot.size());
        for (std::size_t k = 0; k < cot.size(); ++k)
          if (phi.get(cot[k])) coords.set(k);
        EXPECT_EQ(coords, l.bracketBasis(j, i)) << h.name << " (" << l.labels()[i] << ", " << l.labels()[j] << ")";
      }
  }
}

TEST(LieOfGroup, GL22GeneralLinearBrackets) {
  // Commutators of matrix units: [e_ij, e_kl] = δ_jk e_il + δ_li e_kj.
  const auto l = lieOfGroup(buildGL(0, 2, 3));
  auto e = [&](std::size_t i, std::size_t j) { return el(l, "e" + indexPair(i, j)); };
  for (std::size_t i = 1; i <= 2; ++i)
    for (std::size_t j = 1; j <= 2; ++j)
      for (std::size_t k = 1; k <= 2; ++k)
        for (std::size_t m = 1; m <= 2; ++m) {
          BitVector expected = l.zero();
          if (j == k) expected ^= e(i, m);
          if (m == i) expected ^= e(k, j);
          EXPECT_EQ(l.bracket(e(i, j), e(k, m)), expected) << i << j << k << m;
        }
  for (std::size_t i = 1; i <= 2; ++i) EXPECT_EQ(l.square(e(i, i)), e(i, i));
  EXPECT_TRUE(l.square(e(1, 2)).isZero());
}

TEST(LieOfGroup, GL21FailsAxiomI) {
  const auto l = lieOfGroupUnchecked(buildGL(1, 1, 4));
  const auto r = verifyLieAxioms(l);
  EXPECT_FALSE(r.passed());
  EXPECT_TRUE(hasLaw(r, "(i)"));
  EXPECT_THROW((void)lieOfGroup(buildGL(1, 1, 4)), std::logic_error);
  EXPECT_TRUE(verifyRestrictedAxioms(l).passed()) << verifyRestrictedAxioms(l).summary();
  EXPECT_THROW((void)lieOfGroupUnchecked(buildGa(2)), std::invalid_argument);
}

TEST(LieFromAssociative, MatrixCommutator) {
  // End(k^2) with d = 0: the ordinary commutator.
  const Ver4Object v({"a", "b"}, BitMatrix(2, 2));
  const auto a = endomorphismAlgebra(v);
  const auto l = lieFromAssociative(a);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const auto x = a.basis(i), y = a.basis(j);
      EXPECT_EQ(l.bracket(x, y), a.mul(x, y) + a.mul(y, x));
    }
  EXPECT_TRUE(verifyLieAxioms(l).passed());
  EXPECT_TRUE(verifyRestrictedAxioms(l).passed());
}

TEST(LieFromAssociative, DualNumbersAreAbelian) {
  const auto l = lieFromAssociative(dualNumbers());
  for (const auto& b : l.brackets) EXPECT_TRUE(b.isZero());
}

TEST(LieFromAssociative, EndomorphismAlgebrasSatisfyAxioms) {
  for (const auto& v : {makeObject(0, 1), makeObject(1, 1)}) {
    const auto l = lieFromAssociative(endomorphismAlgebra(v));
    EXPECT_TRUE(verifyLieAxioms(l).passed()) << verifyLieAxioms(l).summary();
    EXPECT_TRUE(verifyRestrictedAxioms(l).passed()) << verifyRestrictedAxioms(l).summary();
  }
}

TEST(LieAxioms, FaultInjection) {
  auto l = lieOfGroup(buildGL(0, 1, 4));
  l.bracketBasis(idx(l, "e11"), idx(l, "f11")).flip(idx(l, "f11"));
  EXPECT_FALSE(verifyLieAxioms(l).passed());

  auto m = lieOfGroup(buildGm(4));
  m.squareValues[0].flip(idx(m, "e"));
  const auto r = verifyRestrictedAxioms(m);
  EXPECT_FALSE(r.passed());
  EXPECT_TRUE(hasLaw(r, "(iv)")) << r.summary();
}

TEST(Gamma2, GaSpanAndPhi) {
  const auto l = lieOfGroup(buildGa(4));
  const auto g = gamma2Span(l);
  EXPECT_TRUE(g.report.passed()) << g.report.summary();
  EXPECT_EQ(std::size_t{1} << g.invariantDim, invariantCountByEnumeration(l.object));
  const auto tp = tensor(l.object, l.object);
  BitVector ee(4);
  ee.set(tp.index(0, 0));
  Subspace span(4);
  for (const auto& b : g.basis) span.insert(b);
  EXPECT_FALSE(span.insert(ee));
}

TEST(Gamma2, DimensionMatchesEnumeration) {
  for (const auto& l : {lieOfGroup(buildGm(4)), lieOfGroup(buildGL(0, 1, 4)), lieFromAssociative(endomorphismAlgebra(makeObject(0, 1)))}) {
    const auto g = gamma2Span(l);
    EXPECT_TRUE(g.report.passed()) << g.report.summary();
    EXPECT_EQ(g.basis.size(), g.invariantDim);
    EXPECT_EQ(std::size_t{1} << g.invariantDim, invariantCountByEnumeration(l.object));
  }
}

TEST(Gamma2, InconsistentSquareIsDetected) {
  // In Lie(Ga), f⊗f + d⊗d combination equals e⊗e, so φ₂ forces e^[2] = [f,f] = 0.
  auto l = lieOfGroup(buildGa(4));
  l.squareValues[0].flip(idx(l, "e"));
  EXPECT_FALSE(gamma2Span(l).report.passed());
}
