// Truncated tensor powers of a local algebra and the maps between them.
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "algebra.hpp"
#include "f2.hpp"

namespace ver4 {

/// Basis of the k-fold tensor power O (x) ... (x) O modulo total degree
/// >= bound: tuples of basis indices whose degrees sum to less than bound.
class TensorBasis {
 public:
  TensorBasis() = default;
  TensorBasis(const LocalAlgebra& a, std::size_t factors, std::size_t bound)
      : factors_(factors), bound_(bound), dim_(a.dim()), degrees_(a.degrees()) {
    if (factors == 0) throw std::invalid_argument("TensorBasis: need at least one factor");
    std::vector<std::uint32_t> cur(factors);
    enumerate(a, cur, 0, 0);
  }

  [[nodiscard]] std::size_t size() const { return totalDegree_.size(); }
  [[nodiscard]] std::size_t factors() const { return factors_; }
  [[nodiscard]] std::size_t bound() const { return bound_; }
  [[nodiscard]] std::size_t factorDim() const { return dim_; }

  [[nodiscard]] std::span<const std::uint32_t> tuple(std::size_t idx) const {
    return {tuples_.data() + idx * factors_, factors_};
  }
  [[nodiscard]] std::uint32_t component(std::size_t idx, std::size_t pos) const {
    return tuples_[idx * factors_ + pos];
  }
  [[nodiscard]] std::size_t degree(std::size_t idx) const { return totalDegree_[idx]; }

  [[nodiscard]] std::optional<std::size_t> find(std::span<const std::uint32_t> t) const {
    auto it = index_.find(key(t));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  [[nodiscard]] std::optional<std::size_t> find(std::uint32_t p, std::uint32_t q) const {
    const std::array<std::uint32_t, 2> t{p, q};
    return find(t);
  }

  /// Toggles the tuple in acc if it survives the truncation.
  void toggle(BitVector& acc, std::span<const std::uint32_t> t) const {
    if (auto i = find(t)) acc.flip(*i);
  }
  void toggle(BitVector& acc, std::uint32_t p, std::uint32_t q) const {
    if (auto i = find(p, q)) acc.flip(*i);
  }

  [[nodiscard]] BitVector zero() const { return BitVector(size()); }

  /// u (x) v for elements of the factor algebra (two factors only).
  [[nodiscard]] BitVector pure(const BitVector& u, const BitVector& v) const {
    BitVector out(size());
    addPure(out, u, v);
    return out;
  }
  void addPure(BitVector& acc, const BitVector& u, const BitVector& v) const {
    u.forEachSetBit([&](std::size_t p) {
      v.forEachSetBit([&](std::size_t q) {
        toggle(acc, static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(q));
      });
    });
  }

  /// v with all tuples of total degree >= k removed.
  [[nodiscard]] BitVector truncate(BitVector v, std::size_t k) const {
    v.forEachSetBit([&](std::size_t i) {
      if (totalDegree_[i] >= k) v.reset(i);
    });
    return v;
  }

  [[nodiscard]] std::string label(std::size_t idx, const Algebra& a) const {
    std::string out;
    for (std::size_t p = 0; p < factors_; ++p) {
      if (p) out += "⊗";
      out += a.label(component(idx, p));
    }
    return out;
  }
  [[nodiscard]] std::string format(const BitVector& v, const Algebra& a) const {
    std::string out;
    v.forEachSetBit([&](std::size_t i) {
      if (!out.empty()) out += " + ";
      out += label(i, a);
    });
    return out.empty() ? "0" : out;
  }

 private:
  [[nodiscard]] std::uint64_t key(std::span<const std::uint32_t> t) const {
    std::uint64_t k = 0;
    for (auto c : t) k = k * dim_ + c;
    return k;
  }

  void enumerate(const LocalAlgebra& a, std::vector<std::uint32_t>& cur, std::size_t pos, std::size_t deg) {
    if (pos == factors_) {
      index_.emplace(key(cur), totalDegree_.size());
      tuples_.insert(tuples_.end(), cur.begin(), cur.end());
      totalDegree_.push_back(static_cast<std::uint32_t>(deg));
      return;
    }
    const std::size_t limit = a.countBelow(bound_ > deg ? bound_ - deg : 0);
    for (std::size_t i = 0; i < limit; ++i) {
      cur[pos] = static_cast<std::uint32_t>(i);
      enumerate(a, cur, pos + 1, deg + a.degree(i));
    }
  }

  std::size_t factors_ = 0;
  std::size_t bound_ = 0;
  std::size_t dim_ = 0;
  std::vector<std::size_t> degrees_;
  std::vector<std::uint32_t> tuples_;
  std::vector<std::uint32_t> totalDegree_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

/// Twisted product in O (x) O: (p (x) q)(p' (x) q') = pp' (x) qq' + p.dp' (x) dq.q'.
inline BitVector twistedMultiply(const LocalAlgebra& a, const TensorBasis& t2, const BitVector& x,
                                 const BitVector& y) {
  BitVector out = t2.zero();
  x.forEachSetBit([&](std::size_t i) {
    const auto p = t2.component(i, 0);
    const auto q = t2.component(i, 1);
    const BitVector dq = a.dBasis(q);
    y.forEachSetBit([&](std::size_t j) {
      const auto p2 = t2.component(j, 0);
      const auto q2 = t2.component(j, 1);
      t2.addPure(out, a.mulBasis(p, p2), a.mulBasis(q, q2));
      if (dq.any()) {
        const BitVector dp2 = a.dBasis(p2);
        if (dp2.any()) t2.addPure(out, a.mul(a.basis(p), dp2), a.mul(dq, a.basis(q2)));
      }
    });
  });
  return out;
}

/// Braiding on factors pos, pos+1 of a tensor: s(u (x) v) = v (x) u + dv (x) du.
inline BitVector braidAdjacent(const LocalAlgebra& a, const TensorBasis& tb, const BitVector& x, std::size_t pos) {
  BitVector out = tb.zero();
  std::vector<std::uint32_t> t(tb.factors());
  x.forEachSetBit([&](std::size_t i) {
    auto src = tb.tuple(i);
    t.assign(src.begin(), src.end());
    const auto u = src[pos];
    const auto v = src[pos + 1];
    t[pos] = v;
    t[pos + 1] = u;
    tb.toggle(out, t);
    const BitVector du = a.dBasis(u);
    const BitVector dv = a.dBasis(v);
    dv.forEachSetBit([&](std::size_t p) {
      du.forEachSetBit([&](std::size_t q) {
        t[pos] = static_cast<std::uint32_t>(p);
        t[pos + 1] = static_cast<std::uint32_t>(q);
        tb.toggle(out, t);
      });
    });
  });
  return out;
}

/// Applies a linear map (given by column images in the factor algebra) to
/// factor pos.
inline BitVector applyOnFactor(const TensorBasis& tb, const BitVector& x, std::size_t pos,
                               const std::vector<BitVector>& images) {
  BitVector out = tb.zero();
  std::vector<std::uint32_t> t(tb.factors());
  x.forEachSetBit([&](std::size_t i) {
    auto src = tb.tuple(i);
    t.assign(src.begin(), src.end());
    images[src[pos]].forEachSetBit([&](std::size_t r) {
      t[pos] = static_cast<std::uint32_t>(r);
      tb.toggle(out, t);
    });
  });
  return out;
}

/// Replaces factor pos by its image in O (x) O (a coproduct-like map),
/// landing in a tensor with one more factor.
inline BitVector expandFactor(const TensorBasis& src, const TensorBasis& dst, const TensorBasis& t2,
                              const BitVector& x, std::size_t pos, const std::vector<BitVector>& images) {
  if (dst.factors() != src.factors() + 1) throw std::invalid_argument("expandFactor: arity mismatch");
  BitVector out = dst.zero();
  std::vector<std::uint32_t> t(dst.factors());
  x.forEachSetBit([&](std::size_t i) {
    auto s = src.tuple(i);
    images[s[pos]].forEachSetBit([&](std::size_t j) {
      std::size_t k = 0;
      for (std::size_t f = 0; f < s.size(); ++f) {
        if (f == pos) {
          t[k++] = t2.component(j, 0);
          t[k++] = t2.component(j, 1);
        } else {
          t[k++] = s[f];
        }
      }
      dst.toggle(out, t);
    });
  });
  return out;
}

/// Applies a functional to factor pos, landing in a tensor with one factor
/// fewer (or in the algebra itself when dst has one factor).
inline BitVector contractFactor(const TensorBasis& src, const TensorBasis& dst, const BitVector& x, std::size_t pos,
                                const BitVector& functional) {
  if (dst.factors() + 1 != src.factors()) throw std::invalid_argument("contractFactor: arity mismatch");
  BitVector out = dst.zero();
  std::vector<std::uint32_t> t(dst.factors());
  x.forEachSetBit([&](std::size_t i) {
    auto s = src.tuple(i);
    if (!functional.get(s[pos])) return;
    std::size_t k = 0;
    for (std::size_t f = 0; f < s.size(); ++f)
      if (f != pos) t[k++] = s[f];
    dst.toggle(out, t);
  });
  return out;
}

/// Contracts a two-factor tensor with a functional on the given side,
/// returning an element of the algebra.
inline BitVector contract2(const TensorBasis& t2, std::size_t algebraDim, const BitVector& x, std::size_t pos,
                           const BitVector& functional) {
  BitVector out(algebraDim);
  x.forEachSetBit([&](std::size_t i) {
    if (functional.get(t2.component(i, pos))) out.flip(t2.component(i, 1 - pos));
  });
  return out;
}

/// Multiplication O (x) O -> O after applying maps to each factor.
inline BitVector multiplyFactors(const LocalAlgebra& a, const TensorBasis& t2, const BitVector& x) {
  BitVector out(a.dim());
  x.forEachSetBit([&](std::size_t i) { a.addProduct(out, t2.component(i, 0), t2.component(i, 1)); });
  return out;
}

/// d (x) 1 + 1 (x) d on a tensor.
inline BitVector tensorD(const LocalAlgebra& a, const TensorBasis& tb, const BitVector& x) {
  BitVector out = tb.zero();
  std::vector<std::uint32_t> t(tb.factors());
  x.forEachSetBit([&](std::size_t i) {
    auto s = tb.tuple(i);
    for (std::size_t pos = 0; pos < s.size(); ++pos) {
      t.assign(s.begin(), s.end());
      a.dBasis(s[pos]).forEachSetBit([&](std::size_t r) {
        t[pos] = static_cast<std::uint32_t>(r);
        tb.toggle(out, t);
      });
    }
  });
  return out;
}

}  // namespace ver4
