// Exact linear algebra over the two-element field.
//
// Vectors and matrices are dense and bit-packed into 64-bit words. Every
// other part of the library reduces its questions (membership in an ideal,
// kernels of structure maps, solving for derivations) to the routines here.
#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ver4 {

/// An element of the prime field of characteristic two.
class F2 {
 public:
  constexpr F2() = default;
  constexpr explicit F2(bool v) : v_(v) {}
  constexpr explicit F2(int v) : v_((v & 1) != 0) {}

  [[nodiscard]] constexpr bool value() const { return v_; }
  constexpr explicit operator bool() const { return v_; }

  friend constexpr F2 operator+(F2 a, F2 b) { return F2(a.v_ != b.v_); }
  friend constexpr F2 operator-(F2 a, F2 b) { return a + b; }
  friend constexpr F2 operator*(F2 a, F2 b) { return F2(a.v_ && b.v_); }
  friend constexpr bool operator==(F2, F2) = default;

  /// Only 1 is invertible.
  [[nodiscard]] F2 inverse() const {
    if (!v_) throw std::domain_error("F2: zero has no inverse");
    return *this;
  }

 private:
  bool v_ = false;
};

class BitVector {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_(wordCount(size), 0) {}

  static BitVector unit(std::size_t size, std::size_t index) {
    BitVector v(size);
    v.set(index);
    return v;
  }

  static BitVector fromIndices(std::size_t size, std::span<const std::size_t> indices) {
    BitVector v(size);
    for (std::size_t i : indices) v.flip(i);
    return v;
  }

  static BitVector fromBits(std::initializer_list<int> bits) {
    BitVector v(bits.size());
    std::size_t i = 0;
    for (int b : bits) {
      if (b & 1) v.set(i);
      ++i;
    }
    return v;
  }

  [[nodiscard]] std::size_t size() const { return size_; }
  [[nodiscard]] bool empty() const { return size_ == 0; }

  [[nodiscard]] bool get(std::size_t i) const {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  bool operator[](std::size_t i) const { return get(i); }

  void set(std::size_t i, bool value = true) {
    const word_type mask = word_type{1} << (i % kWordBits);
    if (value)
      words_[i / kWordBits] |= mask;
    else
      words_[i / kWordBits] &= ~mask;
  }
  void reset(std::size_t i) { set(i, false); }
  void flip(std::size_t i) { words_[i / kWordBits] ^= word_type{1} << (i % kWordBits); }

  BitVector& operator^=(const BitVector& other) {
    checkSameSize(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }
  BitVector& operator+=(const BitVector& other) { return *this ^= other; }
  BitVector& operator&=(const BitVector& other) {
    checkSameSize(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
  }
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator+(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }

  [[nodiscard]] bool isZero() const {
    return std::all_of(words_.begin(), words_.end(), [](word_type w) { return w == 0; });
  }
  [[nodiscard]] bool any() const { return !isZero(); }

  [[nodiscard]] std::size_t count() const {
    std::size_t c = 0;
    for (word_type w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// Parity of the bitwise AND: the standard bilinear pairing.
  [[nodiscard]] bool dot(const BitVector& other) const {
    checkSameSize(other);
    word_type acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return (std::popcount(acc) & 1) != 0;
  }

  /// Index of the first set bit at or after `from`, or size() if none.
  [[nodiscard]] std::size_t findNext(std::size_t from) const {
    if (from >= size_) return size_;
    std::size_t w = from / kWordBits;
    word_type cur = words_[w] & (~word_type{0} << (from % kWordBits));
    while (true) {
      if (cur != 0) {
        std::size_t idx = w * kWordBits + static_cast<std::size_t>(std::countr_zero(cur));
        return idx < size_ ? idx : size_;
      }
      if (++w >= words_.size()) return size_;
      cur = words_[w];
    }
  }
  [[nodiscard]] std::size_t findFirst() const { return findNext(0); }

  template <typename Fn>
  void forEachSetBit(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      word_type cur = words_[w];
      while (cur != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(cur));
        fn(w * kWordBits + bit);
        cur &= cur - 1;
      }
    }
  }

  [[nodiscard]] std::vector<std::size_t> setBits() const {
    std::vector<std::size_t> out;
    forEachSetBit([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  /// Copy with a different length: truncates or zero-extends.
  [[nodiscard]] BitVector resized(std::size_t size) const {
    BitVector out(size);
    forEachSetBit([&](std::size_t i) {
      if (i < size) out.set(i);
    });
    return out;
  }

  [[nodiscard]] std::span<const word_type> words() const { return words_; }

  friend bool operator==(const BitVector& a, const BitVector& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }
  friend bool operator<(const BitVector& a, const BitVector& b) {
    if (a.size_ != b.size_) return a.size_ < b.size_;
    for (std::size_t w = 0; w < a.words_.size(); ++w)
      if (a.words_[w] != b.words_[w]) return a.words_[w] < b.words_[w];
    return false;
  }

  [[nodiscard]] std::string toString() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }

  [[nodiscard]] std::size_t hash() const {
    std::size_t h = size_;
    for (word_type w : words_) h = h * 1099511628211ULL ^ std::hash<word_type>{}(w);
    return h;
  }

 private:
  static std::size_t wordCount(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }
  void checkSameSize(const BitVector& other) const {
    if (size_ != other.size_)
      throw std::invalid_argument("BitVector: size mismatch (" + std::to_string(size_) + " vs " +
                                  std::to_string(other.size_) + ")");
  }

  std::size_t size_ = 0;
  std::vector<word_type> words_;
};

/// Dense row-major matrix over F2.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
  }

  static BitMatrix fromRows(std::size_t cols, std::vector<BitVector> rows) {
    BitMatrix m;
    m.cols_ = cols;
    for (const auto& r : rows)
      if (r.size() != cols) throw std::invalid_argument("BitMatrix::fromRows: row length mismatch");
    m.rows_ = std::move(rows);
    return m;
  }

  /// Builds the matrix whose j-th column is columns[j].
  static BitMatrix fromColumns(std::size_t rows, std::span<const BitVector> columns) {
    BitMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows)
        throw std::invalid_argument("BitMatrix::fromColumns: column length mismatch");
      columns[j].forEachSetBit([&](std::size_t i) { m.set(i, j); });
    }
    return m;
  }

  static BitMatrix fromBits(std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<BitVector> rs;
    std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
    for (const auto& r : rows) {
      if (r.size() != cols) throw std::invalid_argument("BitMatrix::fromBits: ragged rows");
      rs.push_back(BitVector::fromBits(r));
    }
    return fromRows(cols, std::move(rs));
  }

  [[nodiscard]] std::size_t rows() const { return rows_.size(); }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  [[nodiscard]] bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }
  void flip(std::size_t r, std::size_t c) { rows_[r].flip(c); }

  [[nodiscard]] const BitVector& row(std::size_t r) const { return rows_[r]; }
  BitVector& row(std::size_t r) { return rows_[r]; }

  [[nodiscard]] BitVector column(std::size_t c) const {
    BitVector out(rows());
    for (std::size_t r = 0; r < rows(); ++r)
      if (rows_[r].get(c)) out.set(r);
    return out;
  }

  [[nodiscard]] std::vector<BitVector> columns() const {
    std::vector<BitVector> out(cols_, BitVector(rows()));
    for (std::size_t r = 0; r < rows(); ++r)
      rows_[r].forEachSetBit([&](std::size_t c) { out[c].set(r); });
    return out;
  }

  [[nodiscard]] BitVector apply(const BitVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("BitMatrix::apply: dimension mismatch");
    BitVector out(rows());
    for (std::size_t r = 0; r < rows(); ++r)
      if (rows_[r].dot(v)) out.set(r);
    return out;
  }

  [[nodiscard]] BitMatrix transpose() const {
    BitMatrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r) rows_[r].forEachSetBit([&](std::size_t c) { t.set(c, r); });
    return t;
  }

  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols_ != b.rows()) throw std::invalid_argument("BitMatrix: product dimension mismatch");
    BitMatrix out(a.rows(), b.cols_);
    for (std::size_t r = 0; r < a.rows(); ++r)
      a.rows_[r].forEachSetBit([&](std::size_t k) { out.rows_[r] ^= b.rows_[k]; });
    return out;
  }
  friend BitMatrix operator+(BitMatrix a, const BitMatrix& b) {
    if (a.rows() != b.rows() || a.cols_ != b.cols_)
      throw std::invalid_argument("BitMatrix: sum dimension mismatch");
    for (std::size_t r = 0; r < a.rows(); ++r) a.rows_[r] ^= b.rows_[r];
    return a;
  }
  friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

  [[nodiscard]] bool isZero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const BitVector& r) { return r.isZero(); });
  }

  /// Kronecker product; row/column index of (i, j) is i * other.size + j.
  [[nodiscard]] BitMatrix kron(const BitMatrix& b) const {
    BitMatrix out(rows() * b.rows(), cols_ * b.cols_);
    for (std::size_t i = 0; i < rows(); ++i)
      rows_[i].forEachSetBit([&](std::size_t j) {
        for (std::size_t k = 0; k < b.rows(); ++k)
          b.rows_[k].forEachSetBit(
              [&](std::size_t l) { out.set(i * b.rows() + k, j * b.cols_ + l); });
      });
    return out;
  }

  [[nodiscard]] std::size_t rank() const;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

/// A subspace of F2^n kept in echelon form, keyed by the lowest set bit of
/// each basis row. Each row optionally carries a tag vector recording which
/// inserted vectors it is a combination of.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient, std::size_t tagSize = 0)
      : ambient_(ambient), tagSize_(tagSize), pivotRow_(ambient, kNone) {}

  [[nodiscard]] std::size_t ambient() const { return ambient_; }
  [[nodiscard]] std::size_t dim() const { return rows_.size(); }

  /// Adds v; returns true if it enlarged the span.
  bool insert(BitVector v) { return insertTagged(std::move(v), BitVector(tagSize_)); }

  bool insertTagged(BitVector v, BitVector tag) {
    checkAmbient(v);
    reduceInPlace(v, &tag);
    const std::size_t p = v.findFirst();
    if (p >= ambient_) return false;
    pivotRow_[p] = rows_.size();
    pivots_.push_back(p);
    rows_.push_back(std::move(v));
    tags_.push_back(std::move(tag));
    return true;
  }

  [[nodiscard]] BitVector reduce(BitVector v) const {
    checkAmbient(v);
    reduceInPlace(v, nullptr);
    return v;
  }

  /// Residual of v together with the tag combination that was subtracted.
  [[nodiscard]] std::pair<BitVector, BitVector> reduceTagged(BitVector v) const {
    checkAmbient(v);
    BitVector tag(tagSize_);
    reduceInPlace(v, &tag);
    return {std::move(v), std::move(tag)};
  }

  [[nodiscard]] bool contains(const BitVector& v) const { return reduce(v).isZero(); }

  [[nodiscard]] const std::vector<BitVector>& basis() const { return rows_; }
  [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }
  [[nodiscard]] bool isPivot(std::size_t i) const { return pivotRow_[i] != kNone; }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  void checkAmbient(const BitVector& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("Subspace: vector has wrong length");
  }

  void reduceInPlace(BitVector& v, BitVector* tag) const {
    std::size_t i = v.findFirst();
    while (i < ambient_) {
      const std::size_t r = pivotRow_[i];
      if (r != kNone) {
        v ^= rows_[r];
        if (tag != nullptr && tagSize_ > 0) *tag ^= tags_[r];
      }
      i = v.findNext(i + 1);
    }
  }

  std::size_t ambient_ = 0;
  std::size_t tagSize_ = 0;
  std::vector<std::size_t> pivotRow_;
  std::vector<std::size_t> pivots_;
  std::vector<BitVector> rows_;
  std::vector<BitVector> tags_;
};

inline std::size_t BitMatrix::rank() const {
  Subspace s(cols_);
  for (const auto& r : rows_) s.insert(r);
  return s.dim();
}

/// Rank of a family of vectors of equal length.
inline std::size_t rankOf(std::span<const BitVector> vectors, std::size_t ambient) {
  Subspace s(ambient);
  for (const auto& v : vectors) s.insert(v);
  return s.dim();
}

/// Returns x with A x = b, or nothing if the system is inconsistent.
inline std::optional<BitVector> solve(const BitMatrix& a, const BitVector& b) {
  if (b.size() != a.rows())
    throw std::invalid_argument("solve: right-hand side has length " + std::to_string(b.size()) +
                                ", matrix has " + std::to_string(a.rows()) + " rows");
  // Echelonize the columns; tags record which original columns combine to
  // each echelon row.
  const std::size_t n = a.cols();
  Subspace cols(a.rows(), n);
  const auto columns = a.columns();
  for (std::size_t j = 0; j < n; ++j) cols.insertTagged(columns[j], BitVector::unit(n, j));
  auto [residual, tag] = cols.reduceTagged(b);
  if (!residual.isZero()) return std::nullopt;
  return tag;
}

/// A basis of the null space. One vector per free column of the row echelon
/// form, so the count is cols - rank.
inline std::vector<BitVector> kernelBasis(const BitMatrix& a) {
  const std::size_t n = a.cols();
  // Reduced row echelon form with pivots taken from the highest column index
  // first would also work; we use the lowest-index pivots of Subspace and
  // then back-substitute to full reduction.
  Subspace rowspace(n);
  for (std::size_t r = 0; r < a.rows(); ++r) rowspace.insert(a.row(r));
  std::vector<BitVector> rows = rowspace.basis();
  std::vector<std::size_t> pivots = rowspace.pivots();
  // Full reduction: clear each pivot column in every other row.
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t k = 0; k < rows.size(); ++k)
      if (k != i && rows[k].get(pivots[i])) rows[k] ^= rows[i];

  std::vector<bool> isPivot(n, false);
  for (std::size_t p : pivots) isPivot[p] = true;

  std::vector<BitVector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (isPivot[free]) continue;
    BitVector v = BitVector::unit(n, free);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i].get(free)) v.set(pivots[i]);
    basis.push_back(std::move(v));
  }
  return basis;
}

struct QuotientBasis {
  /// Vectors of `space` that, together with `subspace`, form a basis of
  /// span(space). Chosen greedily in the order given.
  std::vector<BitVector> representatives;
  /// Linear map from the ambient space to coordinates on the
  /// representatives. On span(space) it is surjective with kernel
  /// span(subspace); it vanishes on a fixed complement of span(space).
  BitMatrix projection;
};

inline QuotientBasis quotientBasis(std::span<const BitVector> space,
                                   std::span<const BitVector> subspace) {
  std::size_t ambient = 0;
  if (!space.empty())
    ambient = space.front().size();
  else if (!subspace.empty())
    ambient = subspace.front().size();

  Subspace spaceSpan(ambient);
  for (const auto& v : space) spaceSpan.insert(v);
  for (const auto& v : subspace)
    if (!spaceSpan.contains(v))
      throw std::invalid_argument("quotientBasis: subspace is not contained in space");

  // Pass 1: pick representatives.
  Subspace sub(ambient);
  for (const auto& v : subspace) sub.insert(v);
  std::vector<BitVector> reps;
  {
    Subspace grow = sub;
    for (const auto& v : space)
      if (grow.insert(v)) reps.push_back(v);
  }

  // Pass 2: subspace ++ reps ++ standard complement, tagged by representative.
  const std::size_t k = reps.size();
  Subspace full(ambient, k);
  for (const auto& v : subspace) full.insertTagged(v, BitVector(k));
  for (std::size_t i = 0; i < k; ++i) full.insertTagged(reps[i], BitVector::unit(k, i));
  for (std::size_t i = 0; i < ambient; ++i) full.insertTagged(BitVector::unit(ambient, i), BitVector(k));

  std::vector<BitVector> images;
  images.reserve(ambient);
  for (std::size_t i = 0; i < ambient; ++i)
    images.push_back(full.reduceTagged(BitVector::unit(ambient, i)).second);
  return {std::move(reps), BitMatrix::fromColumns(k, images)};
}

}  // namespace ver4

template <>
struct std::hash<ver4::BitVector> {
  std::size_t operator()(const ver4::BitVector& v) const noexcept { return v.hash(); }
};
