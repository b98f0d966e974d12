// Derivations of O/m^N, right invariance, and the correspondence between
// right invariant derivations and tangent functionals.
#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dist.hpp"
#include "hopf.hpp"
#include "report.hpp"
#include "tangent.hpp"

namespace ver4 {

/// A linear map F: O/m^N -> O known modulo m^precision. Column j of matrix
/// is F(b_j).
struct Derivation {
  BitMatrix matrix;
  std::size_t precision = 0;

  [[nodiscard]] std::size_t dim() const { return matrix.cols(); }
  [[nodiscard]] BitVector operator()(const BitVector& v) const { return matrix.apply(v); }
  [[nodiscard]] BitVector column(std::size_t j) const { return matrix.column(j); }
};

inline Derivation truncated(const LocalAlgebra& a, Derivation f) {
  for (std::size_t r = a.countBelow(f.precision); r < a.dim(); ++r) f.matrix.row(r) = BitVector(f.matrix.cols());
  return f;
}

inline bool sameDerivation(const LocalAlgebra& a, const Derivation& f, const Derivation& g) {
  const std::size_t p = std::min(f.precision, g.precision);
  for (std::size_t r = 0; r < a.countBelow(p); ++r)
    if (!(f.matrix.row(r) == g.matrix.row(r))) return false;
  return true;
}

/// F_φ = (φ ⊗ 1)∘Δ for a functional φ of order k, known modulo m^(N-k).
inline Derivation derivationFromFunctional(const HopfData& h, const BitVector& phi) {
  const LocalAlgebra& a = h.algebra;
  std::size_t order = 0;
  phi.forEachSetBit([&](std::size_t i) { order = std::max(order, a.degree(i)); });
  Derivation f{BitMatrix(a.dim(), a.dim()), a.truncation() - order};
  for (std::size_t j = 0; j < a.dim(); ++j)
    h.coproduct[j].forEachSetBit([&](std::size_t k) {
      if (phi.get(h.t2.component(k, 0))) f.matrix.flip(h.t2.component(k, 1), j);
    });
  return truncated(a, std::move(f));
}

inline Derivation derivationFromTangent(const HopfData& h, const EpsDerivation& f) {
  return derivationFromFunctional(h, f.functional);
}

/// dF = d∘F + F∘d.
inline Derivation dOf(const LocalAlgebra& a, const Derivation& f) {
  return truncated(a, {a.diff() * f.matrix + f.matrix * a.diff(), f.precision});
}

/// F∘G; G lowers degree by at most one, so one step of precision is lost.
inline Derivation composeDerivations(const LocalAlgebra& a, const Derivation& f, const Derivation& g) {
  const std::size_t p = std::min(f.precision, g.precision == 0 ? 0 : g.precision - 1);
  return truncated(a, {f.matrix * g.matrix, p});
}

/// [F,G] = F∘G + G∘F + dG∘dF.
inline Derivation commutatorOfDerivations(const LocalAlgebra& a, const Derivation& f, const Derivation& g) {
  const Derivation fg = composeDerivations(a, f, g);
  const Derivation gf = composeDerivations(a, g, f);
  const Derivation dd = composeDerivations(a, dOf(a, g), dOf(a, f));
  const std::size_t p = std::min({fg.precision, gf.precision, dd.precision});
  return truncated(a, {fg.matrix + gf.matrix + dd.matrix, p});
}

/// F(ab) = F(a)b + aF(b) + da·(dF)(b) on basis pairs, modulo m^precision.
inline Report verifyDerivation(const LocalAlgebra& a, const Derivation& f) {
  Report r("derivation");
  const Derivation df = dOf(a, f);
  const std::vector<BitVector> cols = f.matrix.columns();
  const std::vector<BitVector> dcols = df.matrix.columns();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.countBelow(a.truncation() - a.degree(i)); ++j) {
      const BitVector lhs = a.truncate(f(a.mulBasis(i, j)), f.precision);
      const BitVector rhs =
          a.truncate(a.mul(cols[i], a.basis(j)) + a.mul(a.basis(i), cols[j]) + a.mul(a.dBasis(i), dcols[j]),
                     f.precision);
      r.check(lhs == rhs, "F(ab) = F(a)b + aF(b) + da·(dF)(b)", [&] {
        return "(" + a.label(i) + ", " + a.label(j) + "): " + a.format(lhs + rhs);
      });
    }
  return r;
}

/// (F ⊗ 1)∘Δ = Δ∘F modulo total degree precision.
inline Report verifyRightInvariant(const HopfData& h, const Derivation& f) {
  const LocalAlgebra& a = h.algebra;
  Report r("right invariance");
  const std::vector<BitVector> cols = f.matrix.columns();
  for (std::size_t j = 0; j < a.dim(); ++j) {
    const BitVector lhs = h.t2.truncate(applyOnFactor(h.t2, h.coproduct[j], 0, cols), f.precision);
    const BitVector rhs = h.t2.truncate(h.delta(cols[j]), f.precision);
    r.check(lhs == rhs, "(F⊗1)∘Δ = Δ∘F", [&] { return a.label(j) + ": " + h.formatT2(lhs + rhs); });
  }
  return r;
}

/// All right invariant derivations of O/m^N modulo m^(N-1). The unknowns
/// are the values F(g) on the generators; F is extended to monomials by the
/// Leibniz rule and the remaining derivation identities and right
/// invariance are imposed as linear equations.
inline std::vector<Derivation> rightInvariantDerivations(const HopfData& h) {
  const LocalAlgebra& a = h.algebra;
  if (!a.isFree()) throw std::invalid_argument("rightInvariantDerivations: needs a free presentation");
  const std::size_t trunc = a.truncation();
  if (trunc < 3) throw std::invalid_argument("rightInvariantDerivations: truncation N must be >= 3");
  const std::size_t p = trunc - 1;
  const std::size_t rows = a.countBelow(p);
  const auto& fd = a.freeData();
  std::vector<std::size_t> gens;
  for (const auto& x : fd.xNames) gens.push_back(a.generatorIndex(x));
  for (const auto& w : fd.wNames) gens.push_back(a.generatorIndex(w));
  const std::size_t unknowns = gens.size() * rows;

  // Symbolic F(b): row r holds the coefficient of b_r as a form in the unknowns.
  using Sym = BitMatrix;
  auto left = [&](std::size_t c, const Sym& s) {
    Sym out(rows, unknowns);
    for (std::size_t r = 0; r < rows; ++r) {
      if (s.row(r).isZero()) continue;
      a.mulBasis(c, r).forEachSetBit([&](std::size_t t) {
        if (t < rows) out.row(t) ^= s.row(r);
      });
    }
    return out;
  };
  auto leftBy = [&](const BitVector& v, const Sym& s) {
    Sym out(rows, unknowns);
    v.forEachSetBit([&](std::size_t c) { out = out + left(c, s); });
    return out;
  };
  auto right = [&](const Sym& s, std::size_t c) {
    Sym out(rows, unknowns);
    for (std::size_t r = 0; r < rows; ++r) {
      if (s.row(r).isZero()) continue;
      a.mulBasis(r, c).forEachSetBit([&](std::size_t t) {
        if (t < rows) out.row(t) ^= s.row(r);
      });
    }
    return out;
  };
  auto diff = [&](const Sym& s) {
    Sym out(rows, unknowns);
    for (std::size_t r = 0; r < rows; ++r) {
      if (s.row(r).isZero()) continue;
      a.dBasis(r).forEachSetBit([&](std::size_t t) { out.row(t) ^= s.row(r); });
    }
    return out;
  };

  std::vector<Sym> sym(a.dim(), Sym(rows, unknowns));
  std::vector<bool> done(a.dim(), false);
  done[0] = true;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    for (std::size_t r = 0; r < rows; ++r) sym[gens[g]].set(r, g * rows + r);
    done[gens[g]] = true;
  }
  auto apply = [&](const BitVector& v) {
    Sym out(rows, unknowns);
    v.forEachSetBit([&](std::size_t c) { out = out + sym[c]; });
    return out;
  };
  auto applyD = [&](std::size_t c) { return diff(sym[c]) + apply(a.dBasis(c)); };
  for (std::size_t c = 1; c < a.dim(); ++c) {
    if (done[c]) continue;
    const auto [g, rest] = detail::splitFirst(a, c);
    if (!(a.mulBasis(g, rest) == a.basis(c))) throw std::logic_error("rightInvariantDerivations: bad split");
    sym[c] = right(sym[g], rest) + left(g, sym[rest]) + leftBy(a.dBasis(g), applyD(rest));
    done[c] = true;
  }

  Subspace equations(unknowns);
  auto impose = [&](const Sym& s) {
    for (std::size_t r = 0; r < s.rows(); ++r)
      if (!s.row(r).isZero()) equations.insert(s.row(r));
  };
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.countBelow(trunc - a.degree(i)); ++j)
      impose(apply(a.mulBasis(i, j)) + right(sym[i], j) + left(i, sym[j]) + leftBy(a.dBasis(i), applyD(j)));

  const TensorBasis tp(a, 2, p);
  for (std::size_t j = 0; j < a.dim(); ++j) {
    Sym eq(tp.size(), unknowns);
    h.coproduct[j].forEachSetBit([&](std::size_t k) {
      const auto u = h.t2.component(k, 0);
      const auto v = h.t2.component(k, 1);
      for (std::size_t r = 0; r < rows; ++r)
        if (!sym[u].row(r).isZero())
          if (auto t = tp.find(static_cast<std::uint32_t>(r), v)) eq.row(*t) ^= sym[u].row(r);
    });
    for (std::size_t r = 0; r < rows; ++r) {
      if (sym[j].row(r).isZero()) continue;
      h.coproduct[r].forEachSetBit([&](std::size_t k) {
        if (auto t = tp.find(h.t2.component(k, 0), h.t2.component(k, 1))) eq.row(*t) ^= sym[j].row(r);
      });
    }
    impose(eq);
  }

  std::vector<Derivation> out;
  const BitMatrix system = equations.basis().empty() ? BitMatrix(0, unknowns)
                                                     : BitMatrix::fromRows(unknowns, equations.basis());
  for (const auto& sol : kernelBasis(system)) {
    Derivation f{BitMatrix(a.dim(), a.dim()), p};
    for (std::size_t c = 0; c < a.dim(); ++c)
      for (std::size_t r = 0; r < rows; ++r)
        if (sym[c].row(r).dot(sol)) f.matrix.set(r, c);
    out.push_back(std::move(f));
  }
  return out;
}

/// η∘F as a functional on O.
inline BitVector counitOf(const HopfData& h, const Derivation& f) {
  BitVector out(h.algebra.dim());
  for (std::size_t j = 0; j < h.algebra.dim(); ++j)
    if (h.counit.dot(f.column(j))) out.set(j);
  return out;
}

/// Right invariant derivations correspond to tangent functionals via
/// F |-> η∘F and f' |-> (f'⊗1)∘Δ, and [F_φ, F_ψ] = F_β(ψ,φ).
inline Report verifyUniversality(const HopfData& h) {
  const LocalAlgebra& a = h.algebra;
  Report report("universality " + h.name);
  if (a.truncation() < 3) {
    report.error("universality needs truncation N >= 3");
    return report;
  }
  const auto tangent = tangentBasis(h);
  const auto cot = a.cotangentBasis();
  const auto ders = rightInvariantDerivations(h);
  report.note("right invariant derivations: " + std::to_string(ders.size()) +
              ", tangent dimension: " + std::to_string(tangent.size()) +
              ", dim Dist_1^+: " + std::to_string(a.countBelow(2) - 1));
  report.check(ders.size() == tangent.size(), "dim Der_R = dim T_e", [&] {
    return std::to_string(ders.size()) + " vs " + std::to_string(tangent.size());
  });
  report.check(a.countBelow(2) - 1 == tangent.size(), "dim Dist_1^+ = dim T_e");

  Subspace images(cot.size());
  for (std::size_t s = 0; s < ders.size(); ++s) {
    const BitVector f = counitOf(h, ders[s]);
    BitVector coords(cot.size());
    for (std::size_t k = 0; k < cot.size(); ++k)
      if (f.get(cot[k])) coords.set(k);
    const bool epsOk = isEpsDerivation(h, {"η∘F", f}).passed();
    report.check(epsOk, "η∘F is an η-derivation", [&] { return a.format(f); });
    report.check(images.insert(coords), "F ↦ η∘F injective", [&] { return "solution " + std::to_string(s); });
    const Derivation back = derivationFromFunctional(h, f);
    report.check(sameDerivation(a, back, ders[s]), "(η∘F ⊗ 1)∘Δ = F", [&] {
      return "solution " + std::to_string(s);
    });
  }
  report.check(images.dim() == tangent.size(), "F ↦ η∘F surjective onto T_e");

  std::vector<Derivation> fs;
  for (const auto& t : tangent) {
    fs.push_back(derivationFromTangent(h, t));
    report.check(counitOf(h, fs.back()) == t.functional, "η∘F_f' = f'", [&] { return t.label; });
    report.absorb(verifyDerivation(a, fs.back()));
    report.absorb(verifyRightInvariant(h, fs.back()));
  }

  const DistAlgebra dist = distAlgebra(h, 2);
  for (std::size_t i = 0; i < tangent.size(); ++i)
    for (std::size_t j = 0; j < tangent.size(); ++j) {
      const Derivation br = commutatorOfDerivations(a, fs[i], fs[j]);
      const Derivation viaDist =
          derivationFromFunctional(h, dist.beta(tangent[j].functional, tangent[i].functional));
      report.check(sameDerivation(a, br, viaDist), "[F_φ, F_ψ] = F_β(ψ,φ)", [&] {
        return "(" + tangent[i].label + ", " + tangent[j].label + ")";
      });
    }
  return report;
}

}  // namespace ver4
