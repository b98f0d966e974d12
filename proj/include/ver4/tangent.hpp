// Dual numbers, tangent spaces at the identity and the exhaustive
// enumeration of algebra maps to the dual numbers.
#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "algebra.hpp"
#include "hopf.hpp"
#include "object.hpp"
#include "parallel.hpp"
#include "report.hpp"

namespace ver4 {

/// E = k[eps, d eps]/(eps^2, eps d eps, (d eps)^2) with basis 1, ε, dε.
inline LocalAlgebra dualNumbers() { return freeCommutativeOn({"ε"}, {"dε"}, {0}, 2); }

/// A functional on O/m^N with f(1) = 0, vanishing on m^2.
struct EpsDerivation {
  std::string label;
  BitVector functional;

  [[nodiscard]] bool operator()(const BitVector& v) const { return functional.dot(v); }
};

/// Functionals dual to the degree-one basis elements, in cotangent order.
inline std::vector<EpsDerivation> tangentBasis(const HopfData& h) {
  const LocalAlgebra& a = h.algebra;
  if (a.truncation() < 2) throw std::invalid_argument("tangentBasis: truncation N must be >= 2");
  const auto cot = a.cotangentBasis();
  std::vector<EpsDerivation> out;
  for (std::size_t k = 0; k < cot.size(); ++k) {
    std::string label = k < h.tangentLabels.size() ? h.tangentLabels[k] : a.label(cot[k]) + "*";
    out.push_back({std::move(label), BitVector::unit(a.dim(), cot[k])});
  }
  return out;
}

/// f(ab) = f(a)η(b) + η(a)f(b) on all basis pairs, f(1) = 0 and f(m^2) = 0.
inline Report isEpsDerivation(const HopfData& h, const EpsDerivation& f) {
  const LocalAlgebra& a = h.algebra;
  Report r("eps-derivation " + f.label);
  r.check(!f(a.unit()), "f'(1) = 0");
  for (std::size_t i = a.countBelow(2); i < a.dim(); ++i)
    r.check(!f.functional.get(i), "f'(m^2) = 0", [&] { return a.label(i); });
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.countBelow(a.truncation() - a.degree(i)); ++j) {
      const bool lhs = f(a.mulBasis(i, j));
      const bool rhs = (f.functional.get(i) && h.counit.get(j)) != (h.counit.get(i) && f.functional.get(j));
      r.check(lhs == rhs, "f'(ab) = f'(a)η(b) + η(a)f'(b)",
              [&] { return "(" + a.label(i) + ", " + a.label(j) + ")"; });
    }
  return r;
}

/// The map O -> E, a |-> η(a) + f'(da) ε + f'(a) dε, as a matrix with
/// rows 1, ε, dε.
inline BitMatrix homToDualNumbers(const HopfData& h, const EpsDerivation& f) {
  const auto inv = isEpsDerivation(h, f);
  if (!inv.passed()) throw std::invalid_argument("homToDualNumbers: not an eps-derivation (" + inv.summary() + ")");
  const LocalAlgebra& a = h.algebra;
  BitMatrix m(3, a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (h.counit.get(i)) m.set(0, i);
    if (f(a.dBasis(i))) m.set(1, i);
    if (f.functional.get(i)) m.set(2, i);
  }
  return m;
}

/// Checks that a linear map O -> E is a morphism of commutative algebras in
/// Ver4+ compatible with the counits.
inline Report verifyAlgebraMap(const HopfData& h, const BitMatrix& map) {
  const LocalAlgebra& a = h.algebra;
  const LocalAlgebra e = dualNumbers();
  Report r("algebra map to dual numbers");
  if (map.rows() != e.dim() || map.cols() != a.dim()) {
    r.error("map shape mismatch");
    return r;
  }
  auto image = [&](const BitVector& v) { return map.apply(v); };
  r.check(image(a.unit()) == e.unit(), "f(1) = 1");
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const BitVector bi = a.basis(i);
    r.check(image(a.dBasis(i)) == e.d(image(bi)), "f∘d = d∘f", [&] { return a.label(i); });
    r.check(e.eta(image(bi)) == h.counit.get(i), "η_E∘f = η", [&] { return a.label(i); });
    for (std::size_t j = 0; j < a.countBelow(a.truncation() - a.degree(i)); ++j) {
      const BitVector lhs = image(a.mulBasis(i, j));
      const BitVector rhs = e.mul(image(bi), image(a.basis(j)));
      r.check(lhs == rhs, "f(ab) = f(a)f(b)", [&] {
        return "(" + a.label(i) + ", " + a.label(j) + "): " + e.format(lhs) + " vs " + e.format(rhs);
      });
    }
  }
  return r;
}

struct TangentOracleResult {
  std::size_t tangentDim = 0;
  /// Functionals on m/m^2 (bit k = value on cotangent element k) whose
  /// induced map to E is an algebra map, ascending.
  std::vector<std::uint32_t> homs;
  [[nodiscard]] std::size_t count() const { return homs.size(); }
};

inline constexpr std::size_t kTangentOracleBound = 20;

/// Enumerates every functional on m/m^2 over F2 and keeps those whose map
/// a |-> η(a) + f'(da)ε + f'(a)dε is multiplicative, unital, counital and
/// commutes with d. The conditions are evaluated on every basis element and
/// basis pair through the degree <= 1 parts of products and differentials.
inline TangentOracleResult enumerateTangentOracle(const HopfData& h) {
  const LocalAlgebra& a = h.algebra;
  const auto cot = a.cotangentBasis();
  if (cot.size() > kTangentOracleBound) throw std::invalid_argument("oracle too large");
  std::vector<int> cotPos(a.dim(), -1);
  for (std::size_t k = 0; k < cot.size(); ++k) cotPos[cot[k]] = static_cast<int>(k);

  // Value of f on v as three bits (1, ε, dε) given f' as a mask.
  struct Summary {
    bool unit = false;
    std::uint32_t dMask = 0;
    std::uint32_t mask = 0;
    auto operator<=>(const Summary&) const = default;
  };
  auto summarize = [&](const BitVector& v) {
    Summary s;
    s.unit = h.counit.dot(v);
    v.forEachSetBit([&](std::size_t i) {
      if (cotPos[i] >= 0) s.mask ^= 1U << cotPos[i];
    });
    a.d(v).forEachSetBit([&](std::size_t i) {
      if (cotPos[i] >= 0) s.dMask ^= 1U << cotPos[i];
    });
    return s;
  };
  auto eval = [](const Summary& s, std::uint32_t f) {
    return std::array<bool, 3>{s.unit, (std::popcount(s.dMask & f) & 1) != 0, (std::popcount(s.mask & f) & 1) != 0};
  };
  auto mulE = [](const std::array<bool, 3>& x, const std::array<bool, 3>& y) {
    return std::array<bool, 3>{x[0] && y[0], (x[0] && y[1]) != (x[1] && y[0]), (x[0] && y[2]) != (x[2] && y[0])};
  };

  std::vector<Summary> basisSummary(a.dim());
  std::vector<Summary> dSummary(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    basisSummary[i] = summarize(a.basis(i));
    dSummary[i] = summarize(a.dBasis(i));
  }
  // Distinct (summary(a), summary(b), summary(ab)) constraints.
  std::set<std::tuple<Summary, Summary, Summary>> products;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.countBelow(a.truncation() - a.degree(i)); ++j)
      products.emplace(basisSummary[i], basisSummary[j], summarize(a.mulBasis(i, j)));
  std::set<std::pair<Summary, Summary>> diffs;
  for (std::size_t i = 0; i < a.dim(); ++i) diffs.emplace(basisSummary[i], dSummary[i]);
  const std::vector<std::tuple<Summary, Summary, Summary>> prodList(products.begin(), products.end());
  const std::vector<std::pair<Summary, Summary>> diffList(diffs.begin(), diffs.end());
  const Summary unitSummary = summarize(a.unit());

  const std::size_t total = std::size_t{1} << cot.size();
  std::vector<std::vector<std::uint32_t>> parts(chunkCount(total));
  parallelChunks(total, [&](std::size_t c, std::size_t begin, std::size_t end) {
    for (std::size_t cand = begin; cand < end; ++cand) {
      const auto f = static_cast<std::uint32_t>(cand);
      bool ok = eval(unitSummary, f) == std::array<bool, 3>{true, false, false};
      for (std::size_t k = 0; ok && k < diffList.size(); ++k) {
        const auto fa = eval(diffList[k].first, f);
        const auto fda = eval(diffList[k].second, f);
        // d on E: 1 -> 0, ε -> dε, dε -> 0.
        ok = fda == std::array<bool, 3>{false, false, fa[1]};
      }
      for (std::size_t k = 0; ok && k < prodList.size(); ++k) {
        const auto& [sa, sb, sab] = prodList[k];
        ok = eval(sab, f) == mulE(eval(sa, f), eval(sb, f));
      }
      if (ok) parts[c].push_back(f);
    }
  });
  TangentOracleResult out;
  out.tangentDim = cot.size();
  for (auto& p : parts) out.homs.insert(out.homs.end(), p.begin(), p.end());
  return out;
}

/// The tangent space with the dual differential (d f')(a) = f'(da).
inline Ver4Object tangentObject(const HopfData& h) {
  const LocalAlgebra& a = h.algebra;
  const auto basis = tangentBasis(h);
  const auto cot = a.cotangentBasis();
  std::vector<std::string> labels;
  for (const auto& f : basis) labels.push_back(f.label);
  BitMatrix d(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t k = 0; k < cot.size(); ++k)
      if (basis[j](a.dBasis(cot[k]))) d.set(k, j);
  return {std::move(labels), std::move(d)};
}

}  // namespace ver4
