// Objects of Ver4+: finite-dimensional spaces with a square-zero
// differential, their tensor products, braiding and duals.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "f2.hpp"

namespace ver4 {

/// Formats a vector as a sum of labels ("0" when zero).
inline std::string formatCombination(const BitVector& v, const std::vector<std::string>& labels) {
  std::string out;
  v.forEachSetBit([&](std::size_t i) {
    if (!out.empty()) out += " + ";
    out += labels.at(i);
  });
  return out.empty() ? "0" : out;
}

/// A space with basis labels and a differential. Column j of diff() is
/// d applied to basis vector j.
class Ver4Object {
 public:
  Ver4Object() = default;
  Ver4Object(std::vector<std::string> labels, BitMatrix diff)
      : labels_(std::move(labels)), diff_(std::move(diff)) {
    if (diff_.rows() != labels_.size() || diff_.cols() != labels_.size())
      throw std::invalid_argument("Ver4Object: differential must be square of size dim");
    if (!(diff_ * diff_).isZero()) throw std::invalid_argument("Ver4Object: d^2 != 0");
    rank_ = diff_.rank();
  }

  [[nodiscard]] std::size_t dim() const { return labels_.size(); }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] const std::string& label(std::size_t i) const { return labels_.at(i); }
  [[nodiscard]] const BitMatrix& diff() const { return diff_; }
  [[nodiscard]] BitVector d(const BitVector& v) const { return diff_.apply(v); }

  /// Number of P-summands, the rank of d.
  [[nodiscard]] std::size_t pCount() const { return rank_; }
  /// Number of k-summands.
  [[nodiscard]] std::size_t kCount() const { return dim() - 2 * rank_; }

  [[nodiscard]] std::string format(const BitVector& v) const { return formatCombination(v, labels_); }

  /// Canonical form: vectors x_1..x_{m+n}, w_1..w_n (as columns in the
  /// current basis) with d(x_i) = w_i for i <= n and d x_i = 0 otherwise.
  struct Decomposition {
    std::size_t mK = 0;
    std::size_t nP = 0;
    /// Column c is canonical basis vector c written in the old basis.
    BitMatrix changeOfBasis;
  };

  [[nodiscard]] Decomposition decompose() const {
    const std::size_t n = dim();
    // Pick x_1..x_r whose images form a basis of im d.
    Subspace image(n);
    std::vector<BitVector> xs;
    std::vector<BitVector> ws;
    for (std::size_t j = 0; j < n; ++j) {
      BitVector img = diff_.column(j);
      if (image.insert(img)) {
        xs.push_back(BitVector::unit(n, j));
        ws.push_back(std::move(img));
      }
    }
    // Complete im d to a basis of ker d with kernel vectors.
    const auto ker = kernelBasis(diff_);
    Subspace kerSpan(n);
    for (const auto& w : ws) kerSpan.insert(w);
    std::vector<BitVector> extra;
    for (const auto& k : ker)
      if (kerSpan.insert(k)) extra.push_back(k);

    std::vector<BitVector> cols;
    for (const auto& x : xs) cols.push_back(x);
    for (const auto& k : extra) cols.push_back(k);
    for (const auto& w : ws) cols.push_back(w);
    if (cols.size() != n) throw std::logic_error("Ver4Object::decompose: basis completion failed");
    return {extra.size(), xs.size(), BitMatrix::fromColumns(n, cols)};
  }

  friend bool operator==(const Ver4Object& a, const Ver4Object& b) {
    return a.labels_ == b.labels_ && a.diff_ == b.diff_;
  }

 private:
  std::vector<std::string> labels_;
  BitMatrix diff_;
  std::size_t rank_ = 0;
};

/// V_{m+n|n}: m copies of k and n copies of P with basis x_1..x_{m+n},
/// w_1..w_n and d(x_i) = w_i for i <= n.
inline Ver4Object makeObject(std::size_t m, std::size_t n) {
  const std::size_t xs = m + n;
  const std::size_t dim = xs + n;
  std::vector<std::string> labels;
  if (xs == 1) {
    labels.push_back("x");
    if (n == 1) labels.push_back("w");
  } else {
    for (std::size_t i = 1; i <= xs; ++i) labels.push_back("x" + std::to_string(i));
    for (std::size_t i = 1; i <= n; ++i) labels.push_back("w" + std::to_string(i));
  }
  BitMatrix d(dim, dim);
  for (std::size_t i = 0; i < n; ++i) d.set(xs + i, i);
  return {std::move(labels), std::move(d)};
}

inline Ver4Object unitObject() { return makeObject(1, 0); }

/// A linear map commuting with the differentials.
class Ver4Map {
 public:
  Ver4Map(Ver4Object source, Ver4Object target, BitMatrix matrix)
      : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim())
      throw std::invalid_argument("Ver4Map: matrix shape does not match source/target");
    if (!(matrix_ * source_.diff() == target_.diff() * matrix_))
      throw std::invalid_argument("Ver4Map: matrix does not commute with d");
  }

  [[nodiscard]] const Ver4Object& source() const { return source_; }
  [[nodiscard]] const Ver4Object& target() const { return target_; }
  [[nodiscard]] const BitMatrix& matrix() const { return matrix_; }
  [[nodiscard]] BitVector operator()(const BitVector& v) const { return matrix_.apply(v); }

 private:
  Ver4Object source_;
  Ver4Object target_;
  BitMatrix matrix_;
};

inline Ver4Map identityMap(const Ver4Object& a) { return {a, a, BitMatrix::identity(a.dim())}; }

inline Ver4Map compose(const Ver4Map& g, const Ver4Map& f) {
  if (!(f.target() == g.source())) throw std::invalid_argument("compose: maps are not composable");
  return {f.source(), g.target(), g.matrix() * f.matrix()};
}

struct TensorProduct {
  Ver4Object object;
  std::size_t leftDim = 0;
  std::size_t rightDim = 0;
  /// Position of a_i (x) b_j in the product basis; row-major in the left factor.
  [[nodiscard]] std::size_t index(std::size_t i, std::size_t j) const { return i * rightDim + j; }
};

inline std::string tensorLabel(const std::string& a, const std::string& b) { return a + "⊗" + b; }

inline TensorProduct tensor(const Ver4Object& a, const Ver4Object& b) {
  std::vector<std::string> labels;
  labels.reserve(a.dim() * b.dim());
  for (const auto& la : a.labels())
    for (const auto& lb : b.labels()) labels.push_back(tensorLabel(la, lb));
  BitMatrix d = a.diff().kron(BitMatrix::identity(b.dim())) + BitMatrix::identity(a.dim()).kron(b.diff());
  return {Ver4Object(std::move(labels), std::move(d)), a.dim(), b.dim()};
}

/// s(a (x) b) = b (x) a + db (x) da.
inline Ver4Map braiding(const Ver4Object& a, const Ver4Object& b) {
  const auto ab = tensor(a, b);
  const auto ba = tensor(b, a);
  BitMatrix s(ba.object.dim(), ab.object.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const BitVector da = a.diff().column(i);
    for (std::size_t j = 0; j < b.dim(); ++j) {
      const std::size_t col = ab.index(i, j);
      s.flip(ba.index(j, i), col);
      const BitVector db = b.diff().column(j);
      db.forEachSetBit([&](std::size_t q) {
        da.forEachSetBit([&](std::size_t p) { s.flip(ba.index(q, p), col); });
      });
    }
  }
  return {ab.object, ba.object, std::move(s)};
}

/// f (x) g as a map A (x) B -> A' (x) B'.
inline Ver4Map tensorMaps(const Ver4Map& f, const Ver4Map& g) {
  return {tensor(f.source(), g.source()).object, tensor(f.target(), g.target()).object,
          f.matrix().kron(g.matrix())};
}

struct DualPairing {
  Ver4Object dual;
  /// ev: A* (x) A -> k, ev(a_i* (x) a_j) = delta_ij.
  Ver4Map evaluation;
};

inline DualPairing dualPairing(const Ver4Object& a) {
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back(l + "*");
  Ver4Object dual(std::move(labels), a.diff().transpose());
  const auto prod = tensor(dual, a);
  BitMatrix ev(1, prod.object.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) ev.set(0, prod.index(i, i));
  return {dual, Ver4Map(prod.object, unitObject(), std::move(ev))};
}

}  // namespace ver4
