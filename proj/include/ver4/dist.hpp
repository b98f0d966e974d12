// Distribution algebras: functionals on O/m^N supported in low degree, with
// the convolution product dual to the coproduct.
#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hopf.hpp"
#include "parallel.hpp"
#include "report.hpp"

namespace ver4 {

/// Dist_i is the space of functionals on O vanishing on m^(i+1), spanned by
/// the dual basis elements of degree <= i. Elements are stored as vectors
/// over the dual basis of O/m^N.
class DistAlgebra {
 public:
  DistAlgebra(std::shared_ptr<const HopfData> h, std::size_t maxOrder) : h_(std::move(h)), maxOrder_(maxOrder) {
    if (!h_) throw std::invalid_argument("distAlgebra: null Hopf data");
    const LocalAlgebra& a = h_->algebra;
    if (maxOrder_ + 1 > a.truncation())
      throw std::invalid_argument("distAlgebra: max order " + std::to_string(maxOrder_) +
                                  " needs truncation N >= " + std::to_string(maxOrder_ + 1));
    // coefficient of p (x) q in Delta(a), indexed by the tensor basis.
    preimage_.resize(h_->t2.size());
    for (std::size_t i = 0; i < a.dim(); ++i)
      h_->coproduct[i].forEachSetBit([&](std::size_t k) { preimage_[k].push_back(static_cast<std::uint32_t>(i)); });
    dualDiff_ = a.diff().transpose();
  }

  [[nodiscard]] const HopfData& hopf() const { return *h_; }
  [[nodiscard]] std::shared_ptr<const HopfData> hopfPtr() const { return h_; }
  [[nodiscard]] const LocalAlgebra& algebra() const { return h_->algebra; }
  [[nodiscard]] std::size_t maxOrder() const { return maxOrder_; }
  [[nodiscard]] std::size_t dim() const { return algebra().dim(); }
  [[nodiscard]] std::size_t layerDim(std::size_t i) const { return algebra().countBelow(i + 1); }

  /// Dual basis elements spanning Dist_i.
  [[nodiscard]] std::vector<std::size_t> layerBasis(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < layerDim(std::min(i, maxOrder_)); ++k) out.push_back(k);
    return out;
  }

  [[nodiscard]] BitVector zero() const { return BitVector(dim()); }
  /// The counit, the unit of the convolution product.
  [[nodiscard]] BitVector unit() const { return h_->counit; }
  [[nodiscard]] BitVector basis(std::size_t i) const { return BitVector::unit(dim(), i); }

  /// Smallest i with v in Dist_i (0 for v = 0).
  [[nodiscard]] std::size_t order(const BitVector& v) const {
    std::size_t o = 0;
    v.forEachSetBit([&](std::size_t i) { o = std::max(o, algebra().degree(i)); });
    return o;
  }

  /// (φψ)(a) = (φ (x) ψ)(Δa).
  [[nodiscard]] BitVector product(const BitVector& phi, const BitVector& psi) const {
    if (order(phi) + order(psi) > maxOrder_)
      throw std::invalid_argument("Dist product: order " + std::to_string(order(phi) + order(psi)) +
                                  " exceeds max order " + std::to_string(maxOrder_));
    BitVector out = zero();
    const TensorBasis& t2 = h_->t2;
    phi.forEachSetBit([&](std::size_t p) {
      psi.forEachSetBit([&](std::size_t q) {
        if (auto k = t2.find(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(q)))
          for (auto i : preimage_[*k]) out.flip(i);
      });
    });
    return out;
  }

  /// (dφ)(a) = φ(da).
  [[nodiscard]] BitVector d(const BitVector& phi) const { return dualDiff_.apply(phi); }

  /// s(φ (x) ψ) = ψ (x) φ + dψ (x) dφ.
  using Pair = std::pair<BitVector, BitVector>;
  [[nodiscard]] std::vector<Pair> braid(const BitVector& phi, const BitVector& psi) const {
    return {{psi, phi}, {d(psi), d(phi)}};
  }

  /// β(φ, ψ) = μ(1 - s)(φ (x) ψ) = φψ + ψφ + dψ·dφ.
  [[nodiscard]] BitVector beta(const BitVector& phi, const BitVector& psi) const {
    return product(phi, psi) + product(psi, phi) + product(d(psi), d(phi));
  }

  [[nodiscard]] std::string label(std::size_t i) const {
    const LocalAlgebra& a = algebra();
    if (i == 0) return "η";
    if (a.degree(i) == 1) {
      const auto cot = a.cotangentBasis();
      for (std::size_t k = 0; k < cot.size() && k < h_->tangentLabels.size(); ++k)
        if (cot[k] == i) return h_->tangentLabels[k];
    }
    return "δ(" + a.label(i) + ")";
  }
  [[nodiscard]] std::string format(const BitVector& v) const {
    std::string out;
    v.forEachSetBit([&](std::size_t i) {
      if (!out.empty()) out += " + ";
      out += label(i);
    });
    return out.empty() ? "0" : out;
  }

 private:
  std::shared_ptr<const HopfData> h_;
  std::size_t maxOrder_;
  std::vector<std::vector<std::uint32_t>> preimage_;
  BitMatrix dualDiff_;
};

inline DistAlgebra distAlgebra(const HopfData& h, std::size_t maxOrder) {
  return {std::make_shared<const HopfData>(h), maxOrder};
}

inline BitVector commutatorBeta(const DistAlgebra& dist, const BitVector& phi, const BitVector& psi) {
  return dist.beta(phi, psi);
}

/// The dual braiding given by the formula agrees with the transpose of the
/// braiding of O (x) O on every pair of basis functionals.
inline Report verifyDualBraiding(const DistAlgebra& dist) {
  const LocalAlgebra& a = dist.algebra();
  const TensorBasis& t2 = dist.hopf().t2;
  Report r("dual braiding");
  // Transpose: column (p,q) of s^T is the row (p,q) of s.
  std::vector<std::vector<std::size_t>> transposed(t2.size());
  for (std::size_t k = 0; k < t2.size(); ++k)
    braidAdjacent(a, t2, BitVector::unit(t2.size(), k), 0).forEachSetBit([&](std::size_t row) {
      transposed[row].push_back(k);
    });
  for (std::size_t k = 0; k < t2.size(); ++k) {
    BitVector viaFormula = t2.zero();
    for (const auto& [u, v] : dist.braid(dist.basis(t2.component(k, 0)), dist.basis(t2.component(k, 1))))
      t2.addPure(viaFormula, u, v);
    BitVector viaTranspose = t2.zero();
    for (auto c : transposed[k]) viaTranspose.flip(c);
    r.check(viaFormula == viaTranspose, "s* = transpose of s", [&] {
      return t2.label(k, a) + ": " + t2.format(viaFormula, a) + " vs " + t2.format(viaTranspose, a);
    });
  }
  return r;
}

namespace detail {

using DistPair = std::pair<BitVector, BitVector>;
using DistTriple = std::array<BitVector, 3>;

/// (s (x) 1) on a sum of pure triples.
inline std::vector<DistTriple> braidTriple(const DistAlgebra& dist, const std::vector<DistTriple>& xs,
                                           std::size_t pos) {
  std::vector<DistTriple> out;
  for (const auto& t : xs)
    for (const auto& [u, v] : dist.braid(t[pos], t[pos + 1])) {
      DistTriple n = t;
      n[pos] = u;
      n[pos + 1] = v;
      out.push_back(std::move(n));
    }
  return out;
}

}  // namespace detail

/// Poisson identity, anticommutativity, Jacobi identity, the filtration drop
/// of β and commutativity of Gr Dist on all basis tuples within max order.
inline Report verifyDistIdentities(const DistAlgebra& dist) {
  const LocalAlgebra& a = dist.algebra();
  const std::size_t top = dist.maxOrder();
  const std::size_t n = dist.layerDim(top);
  Report report("dist identities");

  Report unit("unit");
  for (std::size_t i = 0; i < n; ++i) {
    const BitVector phi = dist.basis(i);
    unit.check(dist.product(dist.unit(), phi) == phi && dist.product(phi, dist.unit()) == phi, "ηφ = φ = φη",
               [&] { return dist.label(i); });
    unit.check(dist.beta(dist.unit(), phi).isZero(), "β(η, φ) = 0", [&] { return dist.label(i); });
  }
  report.absorb(unit);

  Report pairs("pairs");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < dist.layerDim(top - a.degree(i)); ++j) {
      const BitVector phi = dist.basis(i);
      const BitVector psi = dist.basis(j);
      const std::size_t oi = a.degree(i);
      const std::size_t oj = a.degree(j);
      auto who = [&] { return "(" + dist.label(i) + ", " + dist.label(j) + ")"; };
      const BitVector prod = dist.product(phi, psi);
      pairs.check(dist.order(prod) <= oi + oj, "μ(Dist_i ⊗ Dist_j) ⊆ Dist_(i+j)", who);
      const BitVector dl = dist.d(prod);
      const BitVector dr = dist.product(dist.d(phi), psi) + dist.product(phi, dist.d(psi));
      pairs.check(dl == dr, "d(φψ) = dφ·ψ + φ·dψ", [&] { return who() + ": " + dist.format(dl + dr); });
      const BitVector b = dist.beta(phi, psi);
      BitVector anti = b;
      for (const auto& [u, v] : dist.braid(phi, psi)) anti ^= dist.beta(u, v);
      pairs.check(anti.isZero(), "β∘(1+s) = 0", [&] { return who() + ": " + dist.format(anti); });
      if (oi >= 1 && oj >= 1)
        pairs.check(dist.order(b) + 1 <= oi + oj, "β(Dist_i ⊗ Dist_j) ⊆ Dist_(i+j-1)",
                    [&] { return who() + ": β = " + dist.format(b); });
      // Symbols in Gr_(i+j) of φψ and μ(s(φ⊗ψ)).
      BitVector swapped = dist.zero();
      for (const auto& [u, v] : dist.braid(phi, psi)) swapped ^= dist.product(u, v);
      BitVector diff = prod + swapped;
      BitVector symbol = dist.zero();
      diff.forEachSetBit([&](std::size_t k) {
        if (a.degree(k) == oi + oj) symbol.set(k);
      });
      pairs.check(symbol.isZero(), "Gr Dist commutative", [&] { return who() + ": " + dist.format(symbol); });
    }
  report.absorb(pairs);

  std::vector<Report> parts(chunkCount(n));
  parallelChunks(n, [&](std::size_t c, std::size_t begin, std::size_t end) {
    Report& tr = parts[c];
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t j = 0; j < dist.layerDim(top - a.degree(i)); ++j)
        for (std::size_t k = 0; k < dist.layerDim(top - a.degree(i) - a.degree(j)); ++k) {
          const BitVector x = dist.basis(i);
          const BitVector y = dist.basis(j);
          const BitVector z = dist.basis(k);
          auto who = [&] { return "(" + dist.label(i) + ", " + dist.label(j) + ", " + dist.label(k) + ")"; };
          const BitVector assocL = dist.product(dist.product(x, y), z);
          const BitVector assocR = dist.product(x, dist.product(y, z));
          tr.check(assocL == assocR, "(φψ)χ = φ(ψχ)", who);

          // Poisson: β(x, yz) = β(x,y)z + μ(1⊗β)(s⊗1)(x⊗y⊗z).
          const BitVector pl = dist.beta(x, dist.product(y, z));
          BitVector pr = dist.product(dist.beta(x, y), z);
          for (const auto& t : detail::braidTriple(dist, {{x, y, z}}, 0)) pr ^= dist.product(t[0], dist.beta(t[1], t[2]));
          tr.check(pl == pr, "β∘(1⊗μ) = μ∘(β⊗1 + (1⊗β)∘(s⊗1))",
                   [&] { return who() + ": " + dist.format(pl + pr); });

          // Jacobi: β(β⊗1)(1 + (s⊗1)(1⊗s) + (1⊗s)(s⊗1)) = 0.
          std::vector<detail::DistTriple> terms{{x, y, z}};
          for (auto& t : detail::braidTriple(dist, detail::braidTriple(dist, {{x, y, z}}, 1), 0)) terms.push_back(t);
          for (auto& t : detail::braidTriple(dist, detail::braidTriple(dist, {{x, y, z}}, 0), 1)) terms.push_back(t);
          BitVector jac = dist.zero();
          for (const auto& t : terms) jac ^= dist.beta(dist.beta(t[0], t[1]), t[2]);
          tr.check(jac.isZero(), "β∘(β⊗1)∘(1 + (s⊗1)(1⊗s) + (1⊗s)(s⊗1)) = 0",
                   [&] { return who() + ": " + dist.format(jac); });
        }
  });
  Report triples("triples");
  for (const auto& p : parts) triples.absorb(p);
  report.absorb(triples);
  return report;
}

}  // namespace ver4
