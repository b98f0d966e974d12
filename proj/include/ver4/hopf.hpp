// Hopf algebras in Ver4+ on truncated local algebras at the identity: the
// additive, multiplicative and general linear group schemes.
#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "parallel.hpp"
#include "report.hpp"
#include "tensor.hpp"

namespace ver4 {

struct HopfData {
  std::string name;
  LocalAlgebra algebra;
  /// O (x) O modulo total degree N.
  TensorBasis t2;
  /// Delta of each basis element, in t2 coordinates.
  std::vector<BitVector> coproduct;
  /// The counit as a functional on the basis.
  BitVector counit;
  /// tau of each basis element.
  std::vector<BitVector> antipode;
  /// Labels of the tangent functionals dual to the degree-one basis.
  std::vector<std::string> tangentLabels;
  /// Human-readable generator formulas.
  std::vector<std::string> formulas;
  /// Auxiliary elements (for GL: "det" and "u").
  std::map<std::string, BitVector> named;

  [[nodiscard]] std::size_t truncation() const { return algebra.truncation(); }

  [[nodiscard]] BitVector delta(const BitVector& v) const {
    BitVector out = t2.zero();
    v.forEachSetBit([&](std::size_t i) { out ^= coproduct[i]; });
    return out;
  }
  [[nodiscard]] BitVector tau(const BitVector& v) const {
    BitVector out(algebra.dim());
    v.forEachSetBit([&](std::size_t i) { out ^= antipode[i]; });
    return out;
  }
  [[nodiscard]] bool eta(const BitVector& v) const { return counit.dot(v); }

  [[nodiscard]] std::string formatT2(const BitVector& v) const { return t2.format(v, algebra); }
};

namespace detail {

/// First letter of a normal monomial and the remaining monomial.
inline std::pair<std::size_t, std::size_t> splitFirst(const LocalAlgebra& a, std::size_t idx) {
  const auto& f = a.freeData();
  Monomial m = a.monomial(idx);
  Monomial g = f.one();
  bool done = false;
  for (std::size_t k = 0; k < m.x.size() && !done; ++k)
    if (m.x[k]) {
      --m.x[k];
      g.x[k] = 1;
      done = true;
    }
  for (std::size_t j = 0; j < m.w.size() && !done; ++j)
    if (m.w[j]) {
      m.w[j] = 0;
      g.w[j] = 1;
      done = true;
    }
  if (!done) throw std::logic_error("splitFirst: monomial 1 has no letters");
  return {*a.indexOf(g), *a.indexOf(m)};
}

}  // namespace detail

/// Extends generator data multiplicatively over the normal monomials.
/// xCoproduct[i], xAntipode[i] are the images of x_i; the images of each w
/// are the differentials of the images of its partner.
inline HopfData hopfFromGenerators(std::string name, LocalAlgebra a, const std::vector<BitVector>& xCoproduct,
                                   const std::vector<BitVector>& xAntipode) {
  const auto& f = a.freeData();
  if (xCoproduct.size() != f.xNames.size() || xAntipode.size() != f.xNames.size())
    throw std::invalid_argument("hopfFromGenerators: one image per x generator required");
  HopfData h;
  h.name = std::move(name);
  h.t2 = TensorBasis(a, 2, a.truncation());
  const std::size_t dim = a.dim();
  h.coproduct.assign(dim, h.t2.zero());
  h.antipode.assign(dim, BitVector(dim));
  h.counit = BitVector::unit(dim, 0);

  std::vector<bool> isGenerator(dim, false);
  for (std::size_t i = 0; i < f.xNames.size() && a.truncation() > 1; ++i) {
    const std::size_t gi = a.generatorIndex(f.xNames[i]);
    h.coproduct[gi] = xCoproduct[i];
    h.antipode[gi] = xAntipode[i];
    isGenerator[gi] = true;
  }
  for (std::size_t j = 0; j < f.wNames.size() && a.truncation() > 1; ++j) {
    const std::size_t gi = a.generatorIndex(f.wNames[j]);
    const auto src = static_cast<std::size_t>(f.source[j]);
    h.coproduct[gi] = tensorD(a, h.t2, xCoproduct[src]);
    h.antipode[gi] = a.d(xAntipode[src]);
    isGenerator[gi] = true;
  }
  h.coproduct[0] = h.t2.pure(a.unit(), a.unit());
  h.antipode[0] = a.unit();
  for (std::size_t c = 1; c < dim; ++c) {
    if (isGenerator[c]) continue;
    const auto [g, rest] = detail::splitFirst(a, c);
    h.coproduct[c] = twistedMultiply(a, h.t2, h.coproduct[g], h.coproduct[rest]);
    h.antipode[c] = a.mul(h.antipode[g], h.antipode[rest]);
  }
  h.algebra = std::move(a);
  return h;
}

/// Additive group: O = k[[x]] with dx = w, Delta(x) = x(x)1 + 1(x)x, tau(x) = x.
inline HopfData buildGa(std::size_t truncation) {
  if (truncation < 2) throw std::invalid_argument("buildGa: truncation N must be >= 2");
  LocalAlgebra a = freeCommutative(0, 1, truncation);
  const std::size_t x = a.generatorIndex("x");
  TensorBasis t2(a, 2, truncation);
  BitVector dx = t2.pure(a.basis(x), a.unit()) + t2.pure(a.unit(), a.basis(x));
  HopfData h = hopfFromGenerators("Ga", std::move(a), {dx}, {BitVector::unit(t2.factorDim(), x)});
  h.tangentLabels = {"e", "f"};
  h.formulas = {"Δ(x) = x⊗1 + 1⊗x", "Δ(w) = w⊗1 + 1⊗w", "η(x) = 0", "τ(x) = x", "τ(w) = w"};
  return h;
}

/// Multiplicative group in the local coordinate t = x - 1:
/// Delta(t) = t(x)1 + 1(x)t + t(x)t, tau(t) = (1+t)^{-1} - 1.
inline HopfData buildGm(std::size_t truncation) {
  if (truncation < 2) throw std::invalid_argument("buildGm: truncation N must be >= 2");
  LocalAlgebra a = freeCommutativeOn({"t"}, {"w"}, {0}, truncation);
  const std::size_t t = a.generatorIndex("t");
  TensorBasis t2(a, 2, truncation);
  const BitVector tv = a.basis(t);
  BitVector dt = t2.pure(tv, a.unit()) + t2.pure(a.unit(), tv) + t2.pure(tv, tv);
  BitVector tauT = invertModM(a, a.unit() + tv) + a.unit();
  HopfData h = hopfFromGenerators("Gm", std::move(a), {dt}, {tauT});
  h.tangentLabels = {"e", "f"};
  h.formulas = {"x = 1 + t", "Δ(t) = t⊗1 + 1⊗t + t⊗t", "Δ(w) = w⊗(1+t) + (1+t)⊗w", "η(t) = 0",
                "τ(t) = (1+t)^-1 - 1", "τ(w) = (1+t)^-2 w"};
  return h;
}

/// Matrix with entries in an algebra.
struct AlgebraMatrix {
  std::size_t size = 0;
  std::vector<BitVector> entries;
  [[nodiscard]] const BitVector& at(std::size_t i, std::size_t j) const { return entries[i * size + j]; }
  BitVector& at(std::size_t i, std::size_t j) { return entries[i * size + j]; }
};

inline AlgebraMatrix matrixProduct(const Algebra& a, const AlgebraMatrix& p, const AlgebraMatrix& q) {
  AlgebraMatrix out{p.size, std::vector<BitVector>(p.size * p.size, BitVector(a.dim()))};
  for (std::size_t i = 0; i < p.size; ++i)
    for (std::size_t j = 0; j < p.size; ++j)
      for (std::size_t l = 0; l < p.size; ++l) out.at(i, j) ^= a.mul(p.at(i, l), q.at(l, j));
  return out;
}

/// Determinant with each term multiplied in row order (rows ascending), by
/// expansion along the first remaining row. rows/cols select a minor.
inline BitVector rowOrderDeterminant(const Algebra& a, const AlgebraMatrix& m, const std::vector<std::size_t>& rows,
                                     const std::vector<std::size_t>& cols) {
  std::map<std::vector<std::size_t>, BitVector> memo;
  std::function<BitVector(std::size_t, const std::vector<std::size_t>&)> rec =
      [&](std::size_t r, const std::vector<std::size_t>& remaining) -> BitVector {
    if (remaining.empty()) return a.unit();
    auto it = memo.find(remaining);
    if (it != memo.end()) return it->second;
    BitVector sum(a.dim());
    for (std::size_t k = 0; k < remaining.size(); ++k) {
      std::vector<std::size_t> rest = remaining;
      rest.erase(rest.begin() + static_cast<long>(k));
      const BitVector& entry = m.at(rows[r], remaining[k]);
      if (entry.isZero()) continue;
      sum ^= a.mul(entry, rec(r + 1, rest));
    }
    memo.emplace(remaining, sum);
    return sum;
  };
  return rec(0, cols);
}

/// GL(m+n|n) in local coordinates t_ij = x_ij - delta_ij (all i, j <= m+n)
/// and w_ij = d t_ij (i, j <= n). Delta(x_ij) = sum_l x_il (x) x_lj,
/// tau(X) = Adj(X).u.X.Adj(X).u with u = det(X)^{-1}, det and Adj taken in
/// row (lexicographic) order.
inline HopfData buildGL(std::size_t m, std::size_t n, std::size_t truncation) {
  if (truncation < 2) throw std::invalid_argument("buildGL: truncation N must be >= 2");
  const std::size_t r = m + n;
  if (r == 0) throw std::invalid_argument("buildGL: m + n must be >= 1");
  std::vector<std::string> xs;
  std::vector<std::string> ws;
  std::vector<int> partner;
  for (std::size_t i = 1; i <= r; ++i)
    for (std::size_t j = 1; j <= r; ++j) {
      xs.push_back("t" + indexPair(i, j));
      if (i <= n && j <= n) {
        partner.push_back(static_cast<int>(ws.size()));
        ws.push_back("w" + indexPair(i, j));
      } else {
        partner.push_back(-1);
      }
    }
  LocalAlgebra a = freeCommutativeOn(xs, ws, partner, truncation);
  TensorBasis t2(a, 2, truncation);
  const std::size_t dim = a.dim();
  auto tEntry = [&](std::size_t i, std::size_t j) { return a.basis(a.generatorIndex(xs[i * r + j])); };

  std::vector<BitVector> deltas;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      BitVector dv = t2.pure(tEntry(i, j), a.unit()) + t2.pure(a.unit(), tEntry(i, j));
      for (std::size_t l = 0; l < r; ++l) t2.addPure(dv, tEntry(i, l), tEntry(l, j));
      deltas.push_back(std::move(dv));
    }

  AlgebraMatrix x{r, std::vector<BitVector>(r * r, BitVector(dim))};
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      x.at(i, j) = tEntry(i, j);
      if (i == j) x.at(i, j) ^= a.unit();
    }
  std::vector<std::size_t> all(r);
  for (std::size_t i = 0; i < r; ++i) all[i] = i;
  const BitVector det = rowOrderDeterminant(a, x, all, all);
  const BitVector u = invertModM(a, det);
  AlgebraMatrix adjU{r, std::vector<BitVector>(r * r, BitVector(dim))};
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<std::size_t> rows;
      std::vector<std::size_t> cols;
      for (std::size_t k = 0; k < r; ++k) {
        if (k != j) rows.push_back(k);
        if (k != i) cols.push_back(k);
      }
      adjU.at(i, j) = a.mul(rowOrderDeterminant(a, x, rows, cols), u);
    }
  const AlgebraMatrix inv = matrixProduct(a, matrixProduct(a, adjU, x), adjU);
  std::vector<BitVector> taus;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      BitVector tv = inv.at(i, j);
      if (i == j) tv ^= a.unit();
      taus.push_back(std::move(tv));
    }

  HopfData h = hopfFromGenerators("GL(" + std::to_string(r) + "|" + std::to_string(n) + ")", std::move(a), deltas,
                                  taus);
  for (std::size_t i = 1; i <= r; ++i)
    for (std::size_t j = 1; j <= r; ++j) h.tangentLabels.push_back("e" + indexPair(i, j));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) h.tangentLabels.push_back("f" + indexPair(i, j));
  h.formulas = {"x_ij = δ_ij + t_ij", "Δ(x_ij) = Σ_l x_il⊗x_lj", "η(x_ij) = δ_ij",
                "u = det(x)^-1 (row-order determinant)", "τ(X) = Adj(X)·u·X·Adj(X)·u", "Δ(w_ij) = dΔ(t_ij)",
                "τ(w_ij) = dτ(t_ij)"};
  h.named["det"] = det;
  h.named["u"] = u;
  return h;
}

/// Checks the Hopf axioms in Ver4+ on every basis element (and every basis
/// pair for the multiplicativity laws).
inline Report verifyHopf(const HopfData& h) {
  Report report("hopf " + h.name);
  const LocalAlgebra& a = h.algebra;
  const std::size_t n = a.dim();
  const std::size_t trunc = a.truncation();
  const TensorBasis& t2 = h.t2;
  const TensorBasis t1(a, 1, trunc);
  const TensorBasis t3(a, 3, trunc);
  const BitVector one = a.unit();

  Report dcompat("d-compatibility");
  for (std::size_t i = 0; i < n; ++i) {
    const BitVector bi = a.basis(i);
    const BitVector lhs = h.delta(a.dBasis(i));
    const BitVector rhs = tensorD(a, t2, h.coproduct[i]);
    dcompat.check(lhs == rhs, "Δ∘d = (d⊗1 + 1⊗d)∘Δ", [&] {
      return a.label(i) + ": Δ(d" + a.label(i) + ") = " + h.formatT2(lhs) + ", dΔ = " + h.formatT2(rhs);
    });
    dcompat.check(!h.eta(a.dBasis(i)), "η∘d = 0", [&] { return a.label(i); });
    const BitVector tl = h.tau(a.dBasis(i));
    const BitVector tr = a.d(h.antipode[i]);
    dcompat.check(tl == tr, "τ∘d = d∘τ", [&] { return a.label(i) + ": " + a.format(tl) + " vs " + a.format(tr); });
    (void)bi;
  }
  report.absorb(dcompat);

  Report counit("counit");
  for (std::size_t i = 0; i < n; ++i) {
    const BitVector bi = a.basis(i);
    const BitVector left = contract2(t2, n, h.coproduct[i], 0, h.counit);
    const BitVector right = contract2(t2, n, h.coproduct[i], 1, h.counit);
    counit.check(left == bi, "(η⊗1)∘Δ = id", [&] { return a.label(i) + " -> " + a.format(left); });
    counit.check(right == bi, "(1⊗η)∘Δ = id", [&] { return a.label(i) + " -> " + a.format(right); });
  }
  report.absorb(counit);

  Report coassoc("coassociativity");
  for (std::size_t i = 0; i < n; ++i) {
    const BitVector left = expandFactor(t2, t3, t2, h.coproduct[i], 0, h.coproduct);
    const BitVector right = expandFactor(t2, t3, t2, h.coproduct[i], 1, h.coproduct);
    coassoc.check(left == right, "(Δ⊗1)∘Δ = (1⊗Δ)∘Δ", [&] {
      return a.label(i) + ": difference " + t3.format(left + right, a);
    });
  }
  report.absorb(coassoc);

  std::vector<Report> parts(chunkCount(n));
  parallelChunks(n, [&](std::size_t c, std::size_t begin, std::size_t end) {
    Report& mult = parts[c];
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t j = 0; j < a.countBelow(trunc - a.degree(i)); ++j) {
        const BitVector prod = a.mulBasis(i, j);
        const BitVector lhs = h.delta(prod);
        const BitVector rhs = twistedMultiply(a, t2, h.coproduct[i], h.coproduct[j]);
        mult.check(lhs == rhs, "Δ(ab) = Δ(a)Δ(b)", [&] {
          return "(" + a.label(i) + ", " + a.label(j) + "): difference " + h.formatT2(lhs + rhs);
        });
        mult.check(h.eta(prod) == (h.counit.get(i) && h.counit.get(j)), "η(ab) = η(a)η(b)",
                   [&] { return "(" + a.label(i) + ", " + a.label(j) + ")"; });
        const BitVector tl = h.tau(prod);
        const BitVector tr = a.mul(h.antipode[i], h.antipode[j]);
        mult.check(tl == tr, "τ(ab) = τ(a)τ(b)", [&] { return "(" + a.label(i) + ", " + a.label(j) + ")"; });
      }
  });
  Report mult("multiplicativity");
  for (const auto& p : parts) mult.absorb(p);
  mult.check(h.delta(one) == t2.pure(one, one), "Δ(1) = 1⊗1");
  mult.check(h.eta(one), "η(1) = 1");
  report.absorb(mult);

  Report anti("antipode");
  for (std::size_t i = 0; i < n; ++i) {
    BitVector left(n);
    BitVector right(n);
    h.coproduct[i].forEachSetBit([&](std::size_t k) {
      const auto p = t2.component(k, 0);
      const auto q = t2.component(k, 1);
      left ^= a.mul(h.antipode[p], a.basis(q));
      right ^= a.mul(a.basis(p), h.antipode[q]);
    });
    const BitVector expect = h.counit.get(i) ? one : BitVector(n);
    anti.check(left == expect, "μ∘(τ⊗1)∘Δ = ι∘η", [&] { return a.label(i) + " -> " + a.format(left); });
    anti.check(right == expect, "μ∘(1⊗τ)∘Δ = ι∘η", [&] { return a.label(i) + " -> " + a.format(right); });
  }
  report.absorb(anti);

  if (h.named.count("det") && h.named.count("u")) {
    Report inv("determinant inverse");
    const BitVector& det = h.named.at("det");
    const BitVector& u = h.named.at("u");
    inv.check(a.mul(det, u) == one, "det·u = 1", [&] { return a.format(a.mul(det, u)); });
    inv.check(a.mul(u, det) == one, "u·det = 1", [&] { return a.format(a.mul(u, det)); });
    report.absorb(inv);
  }
  (void)t1;
  return report;
}

/// Lemma on (1 - s)∘Δ: the image of O lies in m (x) m and the image of m^j
/// lies in the sum of m^i (x) m^{j+1-i}, i = 1..j.
inline Report verifyDeltaFiltration(const HopfData& h, std::size_t j) {
  const LocalAlgebra& a = h.algebra;
  if (j >= a.truncation()) throw std::invalid_argument("verifyDeltaFiltration: j must be < N");
  Report r("delta filtration j=" + std::to_string(j));
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const BitVector v = h.coproduct[i] + braidAdjacent(a, h.t2, h.coproduct[i], 0);
    bool inMM = true;
    bool inFilt = true;
    v.forEachSetBit([&](std::size_t k) {
      const std::size_t dp = a.degree(h.t2.component(k, 0));
      const std::size_t dq = a.degree(h.t2.component(k, 1));
      if (dp < 1 || dq < 1) inMM = false;
      if (dp < 1 || dq < 1 || dp + dq < j + 1) inFilt = false;
    });
    r.check(inMM, "(1-s)Δ(O) ⊆ m⊗m", [&] { return a.label(i) + " -> " + h.formatT2(v); });
    if (j >= 1 && a.degree(i) >= j)
      r.check(inFilt, "(1-s)Δ(m^j) ⊆ Σ m^i⊗m^(j+1-i)", [&] { return a.label(i) + " -> " + h.formatT2(v); });
  }
  return r;
}

/// The coproduct induced on the associated graded is cocommutative.
inline Report verifyGrCocommutative(const HopfData& h) {
  const LocalAlgebra& a = h.algebra;
  Report r("graded cocommutativity");
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const std::size_t k = a.degree(i);
    BitVector top = h.t2.zero();
    h.coproduct[i].forEachSetBit([&](std::size_t t) {
      if (h.t2.degree(t) == k) top.set(t);
    });
    const BitVector swapped = braidAdjacent(a, h.t2, top, 0);
    r.check(swapped == top, "s∘gr(Δ) = gr(Δ)", [&] { return a.label(i) + ": gr Δ = " + h.formatT2(top); });
  }
  return r;
}

/// The composite Δ, (1-s), (Δ⊗1), ((1-s)⊗1), ... sends m^j into tensors whose
/// factors all lie in m with total degree >= n + j - 1.
inline Report omegaFiltrationCheck(const HopfData& h, std::size_t arity, std::size_t j) {
  const LocalAlgebra& a = h.algebra;
  if (arity < 2) throw std::invalid_argument("omegaFiltrationCheck: arity must be >= 2");
  if (j < 1) throw std::invalid_argument("omegaFiltrationCheck: filtration index must be >= 1");
  if (arity + j - 1 > a.truncation()) throw std::invalid_argument("omegaFiltrationCheck: n + j - 1 exceeds truncation");
  Report r("omega n=" + std::to_string(arity) + " j=" + std::to_string(j));
  std::vector<TensorBasis> bases;
  bases.emplace_back(a, 1, a.truncation());
  bases.push_back(h.t2);
  for (std::size_t k = 3; k <= arity; ++k) bases.emplace_back(a, k, a.truncation());
  for (std::size_t i = a.countBelow(j); i < a.dim(); ++i) {
    BitVector v = h.coproduct[i];
    v ^= braidAdjacent(a, bases[1], v, 0);
    for (std::size_t k = 3; k <= arity; ++k) {
      v = expandFactor(bases[k - 2], bases[k - 1], h.t2, v, 0, h.coproduct);
      v ^= braidAdjacent(a, bases[k - 1], v, 0);
    }
    const TensorBasis& tb = bases[arity - 1];
    bool ok = true;
    v.forEachSetBit([&](std::size_t t) {
      for (std::size_t p = 0; p < arity; ++p)
        if (a.degree(tb.component(t, p)) < 1) ok = false;
      if (tb.degree(t) < arity + j - 1) ok = false;
    });
    r.check(ok, "ω_n∘Δ^(n-1)(m^j) ⊆ Σ m^i1⊗...⊗m^in, Σi = n+j-1",
            [&] { return a.label(i) + " -> " + tb.format(v, a); });
  }
  return r;
}

/// Descends the Hopf structure to the underlying ordinary commutative
/// algebra O / (a.db).
inline HopfData underlyingGroupScheme(const HopfData& h) {
  const LocalAlgebra& a = h.algebra;
  auto q = underlyingQuotient(a);
  std::vector<std::size_t> degrees;
  for (auto rep : q.representatives) degrees.push_back(a.degree(rep));
  LocalAlgebra u(std::move(q.algebra), std::move(degrees), a.truncation());
  HopfData out;
  out.name = "u(" + h.name + ")";
  out.t2 = TensorBasis(u, 2, u.truncation());
  const auto& proj = q.projection;
  for (auto rep : q.representatives) {
    BitVector dv = out.t2.zero();
    h.coproduct[rep].forEachSetBit([&](std::size_t k) {
      out.t2.addPure(dv, proj.apply(a.basis(h.t2.component(k, 0))), proj.apply(a.basis(h.t2.component(k, 1))));
    });
    out.coproduct.push_back(std::move(dv));
    out.antipode.push_back(proj.apply(h.antipode[rep]));
  }
  out.counit = BitVector(u.dim());
  for (std::size_t c = 0; c < q.representatives.size(); ++c)
    if (h.counit.get(q.representatives[c])) out.counit.set(c);
  out.algebra = std::move(u);
  return out;
}

}  // namespace ver4
