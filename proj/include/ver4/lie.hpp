// Restricted Lie algebras in Ver4+: Lie(G) from distributions, the
// commutator algebra of an associative algebra, axiom checks and Γ².
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "dist.hpp"
#include "f2.hpp"
#include "object.hpp"
#include "report.hpp"
#include "tangent.hpp"

namespace ver4 {

/// (L, d) with bracket structure constants and a square map given on a
/// basis of ker d.
struct RestrictedLie {
  Ver4Object object;
  /// [b_i, b_j] at index i * dim + j.
  std::vector<BitVector> brackets;
  /// Basis of ker d on which the square is prescribed.
  std::vector<BitVector> squareDomain;
  std::vector<BitVector> squareValues;

  [[nodiscard]] std::size_t dim() const { return object.dim(); }
  [[nodiscard]] const std::vector<std::string>& labels() const { return object.labels(); }
  [[nodiscard]] BitVector d(const BitVector& v) const { return object.d(v); }
  [[nodiscard]] BitVector zero() const { return BitVector(dim()); }
  [[nodiscard]] BitVector basis(std::size_t i) const { return BitVector::unit(dim(), i); }
  [[nodiscard]] std::string format(const BitVector& v) const { return object.format(v); }

  [[nodiscard]] const BitVector& bracketBasis(std::size_t i, std::size_t j) const { return brackets[i * dim() + j]; }
  BitVector& bracketBasis(std::size_t i, std::size_t j) { return brackets[i * dim() + j]; }

  [[nodiscard]] BitVector bracket(const BitVector& x, const BitVector& y) const {
    BitVector out = zero();
    x.forEachSetBit([&](std::size_t i) { y.forEachSetBit([&](std::size_t j) { out ^= bracketBasis(i, j); }); });
    return out;
  }

  [[nodiscard]] bool inKernel(const BitVector& v) const { return d(v).isZero(); }

  /// x^[2] for dx = 0, extended from the domain basis by
  /// (Σ b_k)^[2] = Σ b_k^[2] + Σ_{k<l} [b_k, b_l].
  [[nodiscard]] BitVector square(const BitVector& x) const {
    if (!inKernel(x)) throw std::domain_error("square undefined: d(" + format(x) + ") != 0");
    const auto coeffs = solve(BitMatrix::fromColumns(dim(), squareDomain), x);
    if (!coeffs) throw std::logic_error("square: domain does not span ker d");
    BitVector out = zero();
    std::vector<std::size_t> used;
    coeffs->forEachSetBit([&](std::size_t k) { used.push_back(k); });
    for (std::size_t a = 0; a < used.size(); ++a) {
      out ^= squareValues[used[a]];
      for (std::size_t b = a + 1; b < used.size(); ++b) out ^= bracket(squareDomain[used[a]], squareDomain[used[b]]);
    }
    return out;
  }

  /// The square on basis element i, or nullopt when d b_i != 0.
  [[nodiscard]] std::optional<BitVector> squareBasis(std::size_t i) const {
    if (!inKernel(basis(i))) return std::nullopt;
    return square(basis(i));
  }
};

/// Basis of ker d: the d-closed basis vectors first, completed by kernel
/// vectors.
inline std::vector<BitVector> kernelDomain(const Ver4Object& v) {
  Subspace span(v.dim());
  std::vector<BitVector> out;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    BitVector b = BitVector::unit(v.dim(), i);
    if (v.d(b).isZero() && span.insert(b)) out.push_back(std::move(b));
  }
  for (auto& k : kernelBasis(v.diff()))
    if (span.insert(k)) out.push_back(std::move(k));
  return out;
}

/// Elements of ker d used for the non-linear axioms: all of them when the
/// kernel has dimension <= 6, otherwise sums of at most two domain vectors.
inline std::vector<BitVector> kernelSamples(const RestrictedLie& l) {
  const auto& dom = l.squareDomain;
  std::vector<BitVector> out;
  if (dom.size() <= 6) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << dom.size()); ++mask) {
      BitVector v = l.zero();
      for (std::size_t k = 0; k < dom.size(); ++k)
        if ((mask >> k) & 1U) v ^= dom[k];
      out.push_back(std::move(v));
    }
    return out;
  }
  out.push_back(l.zero());
  for (std::size_t a = 0; a < dom.size(); ++a) {
    out.push_back(dom[a]);
    for (std::size_t b = a + 1; b < dom.size(); ++b) out.push_back(dom[a] + dom[b]);
  }
  return out;
}

/// All elements of L when small, otherwise sums of at most two basis vectors.
inline std::vector<BitVector> elementSamples(const RestrictedLie& l) {
  std::vector<BitVector> out;
  const std::size_t n = l.dim();
  if (n <= 12) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      BitVector v = l.zero();
      for (std::size_t k = 0; k < n; ++k)
        if ((mask >> k) & 1U) v.set(k);
      out.push_back(std::move(v));
    }
    return out;
  }
  out.push_back(l.zero());
  for (std::size_t a = 0; a < n; ++a) {
    out.push_back(l.basis(a));
    for (std::size_t b = a + 1; b < n; ++b) out.push_back(l.basis(a) + l.basis(b));
  }
  return out;
}

/// Lie algebra axioms (i)-(iv), the consequences [dx,dx] = 0 and
/// [x,dy] = [dy,x], and the ad form of the Jacobi identity.
inline Report verifyLieAxioms(const RestrictedLie& l) {
  Report r("lie axioms");
  const std::size_t n = l.dim();
  auto lbl = [&](std::size_t i) { return l.labels()[i]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const BitVector x = l.basis(i);
      const BitVector y = l.basis(j);
      auto who = [&] { return "(" + lbl(i) + ", " + lbl(j) + ")"; };
      const BitVector dl = l.d(l.bracket(x, y));
      const BitVector dr = l.bracket(l.d(x), y) + l.bracket(x, l.d(y));
      r.check(dl == dr, "(i) d[x,y] = [dx,y] + [x,dy]", [&] { return who() + ": " + l.format(dl + dr); });
      const BitVector yx = l.bracket(y, x);
      const BitVector rhs = l.bracket(x, y) + l.bracket(l.d(x), l.d(y));
      r.check(yx == rhs, "(ii) [y,x] = [x,y] + [dx,dy]", [&] { return who() + ": " + l.format(yx + rhs); });
      r.check(l.bracket(x, l.d(y)) == l.bracket(l.d(y), x), "[x,dy] = [dy,x]", who);
    }
  for (std::size_t i = 0; i < n; ++i) {
    const BitVector dx = l.d(l.basis(i));
    r.check(l.bracket(dx, dx).isZero(), "[dx,dx] = 0", [&] { return lbl(i); });
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const BitVector x = l.basis(i);
        const BitVector y = l.basis(j);
        const BitVector z = l.basis(k);
        const BitVector dx = l.d(x);
        const BitVector dy = l.d(y);
        const BitVector dz = l.d(z);
        auto who = [&] { return "(" + lbl(i) + ", " + lbl(j) + ", " + lbl(k) + ")"; };
        const BitVector jl =
            l.bracket(x, l.bracket(y, z)) + l.bracket(y, l.bracket(z, x)) + l.bracket(z, l.bracket(x, y));
        const BitVector jr =
            l.bracket(dx, l.bracket(y, dz)) + l.bracket(dy, l.bracket(z, dx)) + l.bracket(dz, l.bracket(x, dy));
        r.check(jl == jr, "(iii) [x,[y,z]] + [y,[z,x]] + [z,[x,y]] = [dx,[y,dz]] + [dy,[z,dx]] + [dz,[x,dy]]",
                [&] { return who() + ": " + l.format(jl + jr); });
        const BitVector al = l.bracket(l.bracket(x, y), z);
        const BitVector ar = l.bracket(x, l.bracket(y, z)) + l.bracket(y, l.bracket(x, z)) +
                             l.bracket(dy, l.bracket(dx, z));
        r.check(al == ar, "[[x,y],z] = [x,[y,z]] + [y,[x,z]] + [dy,[dx,z]]",
                [&] { return who() + ": " + l.format(al + ar); });
      }
  for (const auto& x : kernelSamples(l))
    r.check(l.bracket(x, x).isZero(), "(iv) dx = 0 implies [x,x] = 0", [&] { return l.format(x); });
  return r;
}

/// Restricted axioms (i)-(v).
inline Report verifyRestrictedAxioms(const RestrictedLie& l) {
  Report r("restricted axioms");
  if (l.squareDomain.size() != l.squareValues.size()) {
    r.error("square domain and values differ in size");
    return r;
  }
  for (const auto& b : l.squareDomain)
    if (!l.inKernel(b)) {
      r.error("square domain vector " + l.format(b) + " is not d-closed");
      return r;
    }
  if (rankOf(l.squareDomain, l.dim()) != l.dim() - l.object.pCount()) {
    r.error("square domain does not span ker d");
    return r;
  }
  const auto ks = kernelSamples(l);
  r.check(l.square(l.zero()).isZero(), "(ii) (0x)^[2] = 0");
  for (const auto& b : l.squareDomain) r.check(l.square(b) == l.square(b + l.zero()), "(ii) (1x)^[2] = x^[2]");
  for (const auto& x : ks) {
    const BitVector sx = l.square(x);
    r.check(l.d(sx).isZero(), "(iii) dx = 0 implies d(x^[2]) = 0", [&] { return l.format(x); });
    for (const auto& y : ks) {
      const BitVector lhs = l.square(x + y);
      const BitVector rhs = sx + l.square(y) + l.bracket(x, y);
      r.check(lhs == rhs, "(i) (x+y)^[2] = x^[2] + y^[2] + [x,y]",
              [&] { return "x = " + l.format(x) + ", y = " + l.format(y) + ": " + l.format(lhs + rhs); });
    }
    for (std::size_t j = 0; j < l.dim(); ++j) {
      const BitVector y = l.basis(j);
      const BitVector lhs = l.bracket(x, l.bracket(x, y));
      const BitVector rhs = l.bracket(sx, y);
      r.check(lhs == rhs, "(v) dx = 0 implies [x,[x,y]] = [x^[2],y]",
              [&] { return "x = " + l.format(x) + ", y = " + l.labels()[j] + ": " + l.format(lhs + rhs); });
    }
  }
  for (const auto& x : elementSamples(l)) {
    const BitVector lhs = l.bracket(x, x);
    const BitVector rhs = l.square(l.d(x));
    r.check(lhs == rhs, "(iv) [x,x] = (dx)^[2]",
            [&] { return l.format(x) + ": [x,x] = " + l.format(lhs) + ", (dx)^[2] = " + l.format(rhs); });
  }
  return r;
}

/// Lie(G) from Dist_1^+ without checking the axioms. Throws if a bracket or
/// square leaves Dist_1^+.
inline RestrictedLie lieOfGroupUnchecked(const HopfData& h) {
  if (h.truncation() < 3) throw std::invalid_argument("lieOfGroup: truncation N must be >= 3");
  const DistAlgebra dist = distAlgebra(h, 2);
  const LocalAlgebra& a = h.algebra;
  const auto cot = a.cotangentBasis();
  const std::size_t n = cot.size();
  std::vector<int> pos(a.dim(), -1);
  for (std::size_t k = 0; k < n; ++k) pos[cot[k]] = static_cast<int>(k);
  const Ver4Object obj = tangentObject(h);

  auto lift = [&](const BitVector& v) {
    BitVector out = dist.zero();
    v.forEachSetBit([&](std::size_t k) { out.set(cot[k]); });
    return out;
  };
  auto project = [&](const BitVector& phi, const std::string& what) {
    BitVector out(n);
    phi.forEachSetBit([&](std::size_t i) {
      if (pos[i] < 0) throw std::runtime_error("lieOfGroup: " + what + " = " + dist.format(phi) + " is not in Dist_1^+");
      out.set(static_cast<std::size_t>(pos[i]));
    });
    return out;
  };

  RestrictedLie l;
  l.object = obj;
  l.brackets.assign(n * n, BitVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      l.bracketBasis(i, j) = project(dist.beta(dist.basis(cot[i]), dist.basis(cot[j])),
                                     "[" + obj.label(i) + "," + obj.label(j) + "]");
  l.squareDomain = kernelDomain(obj);
  for (const auto& b : l.squareDomain) {
    const BitVector phi = lift(b);
    l.squareValues.push_back(project(dist.product(phi, phi), "(" + obj.format(b) + ")^[2]"));
  }
  return l;
}

/// Lie(G) with bracket β and square b·b; both axiom suites must pass.
inline RestrictedLie lieOfGroup(const HopfData& h) {
  RestrictedLie l = lieOfGroupUnchecked(h);
  const Report lie = verifyLieAxioms(l);
  const Report res = verifyRestrictedAxioms(l);
  if (!lie.passed() || !res.passed())
    throw std::logic_error("lieOfGroup(" + h.name + "): " + (lie.passed() ? res.summary() : lie.summary()));
  return l;
}

/// [x,y] = xy + yx + dy·dx and x^[2] = x·x on ker d.
inline RestrictedLie lieFromAssociative(const Algebra& a) {
  const std::size_t n = a.dim();
  RestrictedLie l;
  l.object = a.object();
  l.brackets.assign(n * n, BitVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      l.bracketBasis(i, j) = a.mulBasis(i, j) + a.mulBasis(j, i) + a.mul(a.dBasis(j), a.dBasis(i));
  l.squareDomain = kernelDomain(l.object);
  for (const auto& b : l.squareDomain) l.squareValues.push_back(a.mul(b, b));
  return l;
}

struct Gamma2 {
  /// Basis of Γ²L inside L (x) L (index i * dim + j for b_i (x) b_j).
  std::vector<BitVector> basis;
  /// dim ker(1 + s) on L (x) L.
  std::size_t invariantDim = 0;
  /// Span equality with the invariants and well-definedness of φ₂.
  Report report{"gamma2"};
};

/// Γ²L spanned by x⊗y + y⊗x + dy⊗dx and x⊗x with dx = 0. φ₂ sends these to
/// [x,y] and x^[2]; the report records whether that is well defined.
inline Gamma2 gamma2Span(const RestrictedLie& l) {
  const std::size_t n = l.dim();
  const auto tp = tensor(l.object, l.object);
  const BitMatrix s = braiding(l.object, l.object).matrix();
  Gamma2 out;
  Subspace span(n * n, n);
  auto add = [&](const BitVector& v, const BitVector& image, const std::string& what) {
    auto [res, tag] = span.reduceTagged(v);
    if (res.isZero()) {
      out.report.check(tag == image, "φ₂ well defined",
                       [&] { return what + " is dependent but φ₂ gives " + l.format(tag + image) + " extra"; });
      return;
    }
    span.insertTagged(v, image);
  };
  auto pure = [&](const BitVector& x, const BitVector& y) {
    BitVector v(n * n);
    x.forEachSetBit([&](std::size_t i) { y.forEachSetBit([&](std::size_t j) { v.flip(tp.index(i, j)); }); });
    return v;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const BitVector x = l.basis(i);
      const BitVector y = l.basis(j);
      add(pure(x, y) + pure(y, x) + pure(l.d(y), l.d(x)), l.bracket(x, y),
          l.labels()[i] + "⊗" + l.labels()[j] + " + " + l.labels()[j] + "⊗" + l.labels()[i] + " + d⊗d");
    }
  for (std::size_t k = 0; k < l.squareDomain.size(); ++k)
    add(pure(l.squareDomain[k], l.squareDomain[k]), l.squareValues[k],
        "(" + l.format(l.squareDomain[k]) + ")⊗(" + l.format(l.squareDomain[k]) + ")");
  out.basis = span.basis();
  const auto inv = kernelBasis(s + BitMatrix::identity(n * n));
  out.invariantDim = inv.size();
  for (const auto& v : out.basis)
    out.report.check((s.apply(v) + v).isZero(), "Γ²L ⊆ ker(1+s)", [&] { return tp.object.format(v); });
  out.report.check(out.basis.size() == out.invariantDim, "dim Γ²L = dim ker(1+s)", [&] {
    return std::to_string(out.basis.size()) + " vs " + std::to_string(out.invariantDim);
  });
  return out;
}

}  // namespace ver4
