// Finite-dimensional algebras in Ver4+, free commutative algebras with a
// monomial normal form, and their truncations at powers of the
// augmentation ideal.
#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "f2.hpp"
#include "object.hpp"
#include "parallel.hpp"
#include "report.hpp"

namespace ver4 {

/// Structure constants. Row i may be shorter than dim: products b_i b_j
/// with j past the row length are zero (used for truncated graded algebras
/// where high-degree products vanish).
class ProductTable {
 public:
  ProductTable() = default;

  /// Builds the table from fn(i, j) -> BitVector for j < rowLength(i).
  template <typename Fn, typename LenFn>
  static ProductTable build(std::size_t dim, LenFn&& rowLength, Fn&& fn) {
    ProductTable t;
    t.dim_ = dim;
    t.rowStart_.resize(dim + 1, 0);
    t.rowLen_.resize(dim, 0);
    for (std::size_t i = 0; i < dim; ++i) {
      t.rowLen_[i] = static_cast<std::uint32_t>(rowLength(i));
      t.rowStart_[i + 1] = t.rowStart_[i] + t.rowLen_[i];
    }
    const std::size_t pairs = t.rowStart_[dim];
    std::vector<std::vector<std::uint32_t>> parts(chunkCount(dim));
    std::vector<std::vector<std::uint32_t>> counts(parts.size());
    parallelChunks(dim, [&](std::size_t c, std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i)
        for (std::size_t j = 0; j < t.rowLen_[i]; ++j) {
          const BitVector v = fn(i, j);
          std::uint32_t n = 0;
          v.forEachSetBit([&](std::size_t k) {
            parts[c].push_back(static_cast<std::uint32_t>(k));
            ++n;
          });
          counts[c].push_back(n);
        }
    });
    t.offsets_.reserve(pairs + 1);
    t.offsets_.push_back(0);
    for (std::size_t c = 0; c < parts.size(); ++c) {
      for (std::uint32_t n : counts[c]) t.offsets_.push_back(t.offsets_.back() + n);
      t.entries_.insert(t.entries_.end(), parts[c].begin(), parts[c].end());
    }
    return t;
  }

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] std::size_t rowLength(std::size_t i) const { return rowLen_[i]; }

  [[nodiscard]] std::span<const std::uint32_t> get(std::size_t i, std::size_t j) const {
    if (j >= rowLen_[i]) return {};
    const std::size_t p = rowStart_[i] + j;
    return {entries_.data() + offsets_[p], offsets_[p + 1] - offsets_[p]};
  }

  /// Copy with the product b_i b_j replaced (for fault injection).
  [[nodiscard]] ProductTable withEntry(std::size_t i, std::size_t j, const BitVector& value) const {
    if (j >= rowLen_[i]) throw std::out_of_range("ProductTable::withEntry: entry not stored");
    return build(
        dim_, [&](std::size_t r) { return rowLen_[r]; },
        [&](std::size_t r, std::size_t c) {
          if (r == i && c == j) return value;
          BitVector v(dim_);
          for (auto k : get(r, c)) v.flip(k);
          return v;
        });
  }

 private:
  std::size_t dim_ = 0;
  std::vector<std::size_t> rowStart_;
  std::vector<std::uint32_t> rowLen_;
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> entries_;
};

/// A finite-dimensional associative unital algebra with differential, and
/// optionally an augmentation functional.
class Algebra {
 public:
  Algebra() = default;
  Algebra(std::vector<std::string> labels, BitMatrix diff, ProductTable table, BitVector unit,
          std::optional<BitVector> augmentation = std::nullopt)
      : object_(std::move(labels), std::move(diff)),
        table_(std::move(table)),
        unit_(std::move(unit)),
        aug_(std::move(augmentation)) {
    if (table_.dim() != object_.dim() || unit_.size() != object_.dim())
      throw std::invalid_argument("Algebra: table/unit size mismatch");
    if (aug_ && aug_->size() != object_.dim())
      throw std::invalid_argument("Algebra: augmentation size mismatch");
    dcols_ = object_.diff().columns();
  }

  [[nodiscard]] std::size_t dim() const { return object_.dim(); }
  [[nodiscard]] const Ver4Object& object() const { return object_; }
  [[nodiscard]] const std::vector<std::string>& labels() const { return object_.labels(); }
  [[nodiscard]] const std::string& label(std::size_t i) const { return object_.label(i); }
  [[nodiscard]] const BitMatrix& diff() const { return object_.diff(); }
  [[nodiscard]] BitVector d(const BitVector& v) const { return object_.d(v); }
  [[nodiscard]] const BitVector& dBasis(std::size_t i) const { return dcols_[i]; }
  [[nodiscard]] const ProductTable& table() const { return table_; }
  [[nodiscard]] const BitVector& unit() const { return unit_; }
  [[nodiscard]] bool hasAugmentation() const { return aug_.has_value(); }
  [[nodiscard]] const BitVector& augmentation() const {
    if (!aug_) throw std::logic_error("Algebra: no augmentation");
    return *aug_;
  }
  [[nodiscard]] bool eta(const BitVector& v) const { return augmentation().dot(v); }

  [[nodiscard]] BitVector basis(std::size_t i) const { return BitVector::unit(dim(), i); }

  [[nodiscard]] BitVector mulBasis(std::size_t i, std::size_t j) const {
    BitVector out(dim());
    for (auto k : table_.get(i, j)) out.flip(k);
    return out;
  }

  /// Adds b_i b_j into acc.
  void addProduct(BitVector& acc, std::size_t i, std::size_t j) const {
    for (auto k : table_.get(i, j)) acc.flip(k);
  }

  [[nodiscard]] BitVector mul(const BitVector& a, const BitVector& b) const {
    BitVector out(dim());
    a.forEachSetBit([&](std::size_t i) { b.forEachSetBit([&](std::size_t j) { addProduct(out, i, j); }); });
    return out;
  }

  [[nodiscard]] std::string format(const BitVector& v) const { return object_.format(v); }

  [[nodiscard]] Algebra withProduct(std::size_t i, std::size_t j, const BitVector& value) const {
    Algebra copy = *this;
    copy.table_ = table_.withEntry(i, j, value);
    return copy;
  }

 protected:
  Ver4Object object_;
  ProductTable table_;
  BitVector unit_;
  std::optional<BitVector> aug_;
  std::vector<BitVector> dcols_;
};

/// A monomial x^a w^S of a free commutative algebra.
struct Monomial {
  std::vector<std::uint8_t> x;
  std::vector<std::uint8_t> w;

  [[nodiscard]] std::size_t degree() const {
    std::size_t d = 0;
    for (auto e : x) d += e;
    for (auto e : w) d += e;
    return d;
  }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Generator names and multiplication rules of a free commutative algebra.
struct FreeData {
  std::vector<std::string> xNames;
  std::vector<std::string> wNames;
  /// partner[i] = index of w_i = d(x_i), or -1 when d(x_i) = 0.
  std::vector<int> partner;
  /// Inverse of partner: the x whose differential is w_j.
  std::vector<int> source;
  std::vector<Monomial> monomials;
  std::map<Monomial, std::size_t> index;

  using Poly = std::map<Monomial, bool>;

  static void toggle(Poly& p, Monomial m) {
    auto [it, inserted] = p.emplace(std::move(m), true);
    if (!inserted) p.erase(it);
  }

  /// m * x_k in normal form. Moving x_k left past each x_q with q > k
  /// leaves a correction term with x_q removed and w_k w_q appended.
  [[nodiscard]] Poly timesX(const Monomial& m, std::size_t k) const {
    Poly out;
    Monomial main = m;
    ++main.x[k];
    toggle(out, std::move(main));
    const int wk = partner[k];
    if (wk < 0 || m.w[static_cast<std::size_t>(wk)]) return out;
    for (std::size_t q = k + 1; q < m.x.size(); ++q) {
      if ((m.x[q] & 1U) == 0) continue;
      const int wq = partner[q];
      if (wq < 0 || m.w[static_cast<std::size_t>(wq)]) continue;
      Monomial t = m;
      --t.x[q];
      t.w[static_cast<std::size_t>(wk)] = 1;
      t.w[static_cast<std::size_t>(wq)] = 1;
      toggle(out, std::move(t));
    }
    return out;
  }

  [[nodiscard]] static std::optional<Monomial> timesW(const Monomial& m, std::size_t j) {
    if (m.w[j]) return std::nullopt;
    Monomial t = m;
    t.w[j] = 1;
    return t;
  }

  [[nodiscard]] Poly multiply(const Poly& p, const Monomial& b, std::size_t truncation) const {
    Poly cur = p;
    for (std::size_t k = 0; k < b.x.size(); ++k)
      for (std::uint8_t e = 0; e < b.x[k]; ++e) {
        Poly next;
        for (const auto& [m, bit] : cur) {
          if (m.degree() + 1 >= truncation) continue;
          for (auto& [t, tb] : timesX(m, k)) toggle(next, t);
        }
        cur = std::move(next);
      }
    for (std::size_t j = 0; j < b.w.size(); ++j) {
      if (!b.w[j]) continue;
      Poly next;
      for (const auto& [m, bit] : cur) {
        if (m.degree() + 1 >= truncation) continue;
        if (auto t = timesW(m, j)) toggle(next, std::move(*t));
      }
      cur = std::move(next);
    }
    return cur;
  }

  [[nodiscard]] Monomial one() const {
    return {std::vector<std::uint8_t>(xNames.size(), 0), std::vector<std::uint8_t>(wNames.size(), 0)};
  }

  [[nodiscard]] std::string label(const Monomial& m) const {
    std::string out;
    auto append = [&](const std::string& name, unsigned e) {
      if (!out.empty()) out += "*";
      out += name;
      if (e > 1) out += "^" + std::to_string(e);
    };
    for (std::size_t i = 0; i < m.x.size(); ++i)
      if (m.x[i]) append(xNames[i], m.x[i]);
    for (std::size_t j = 0; j < m.w.size(); ++j)
      if (m.w[j]) append(wNames[j], 1);
    return out.empty() ? "1" : out;
  }
};

/// A truncated graded commutative algebra O/m^N with homogeneous basis:
/// basis element i has degree(i), and m^k is spanned by the basis elements
/// of degree >= k. Basis elements are ordered by degree.
class LocalAlgebra : public Algebra {
 public:
  LocalAlgebra() = default;
  LocalAlgebra(Algebra alg, std::vector<std::size_t> degrees, std::size_t truncation,
               std::shared_ptr<const FreeData> free = nullptr)
      : Algebra(std::move(alg)), degrees_(std::move(degrees)), n_(truncation), free_(std::move(free)) {
    if (degrees_.size() != dim()) throw std::invalid_argument("LocalAlgebra: degree list size mismatch");
    for (std::size_t i = 1; i < degrees_.size(); ++i)
      if (degrees_[i] < degrees_[i - 1]) throw std::invalid_argument("LocalAlgebra: basis not sorted by degree");
    for (auto d : degrees_)
      if (d >= n_) throw std::invalid_argument("LocalAlgebra: basis element beyond truncation");
    degreeStart_.assign(n_ + 1, dim());
    for (std::size_t i = dim(); i-- > 0;) degreeStart_[degrees_[i]] = i;
    for (std::size_t k = n_; k-- > 0;) degreeStart_[k] = std::min(degreeStart_[k], degreeStart_[k + 1]);
  }

  [[nodiscard]] std::size_t truncation() const { return n_; }
  [[nodiscard]] std::size_t degree(std::size_t i) const { return degrees_[i]; }
  [[nodiscard]] const std::vector<std::size_t>& degrees() const { return degrees_; }

  /// Number of basis elements of degree < k (the dimension of O/m^k).
  [[nodiscard]] std::size_t countBelow(std::size_t k) const { return k >= n_ ? dim() : degreeStart_[k]; }

  /// Basis indices spanning m^k.
  [[nodiscard]] std::vector<std::size_t> filtration(std::size_t k) const {
    std::vector<std::size_t> out;
    for (std::size_t i = countBelow(k); i < dim(); ++i) out.push_back(i);
    return out;
  }

  /// Lowest degree occurring in v, or truncation() if v = 0.
  [[nodiscard]] std::size_t order(const BitVector& v) const {
    const std::size_t i = v.findFirst();
    return i < dim() ? degrees_[i] : n_;
  }

  /// v with all components of degree >= k removed.
  [[nodiscard]] BitVector truncate(BitVector v, std::size_t k) const {
    for (std::size_t i = countBelow(k); i < dim(); ++i) v.reset(i);
    return v;
  }

  /// Indices of the degree-one basis elements, which span m/m^2.
  [[nodiscard]] std::vector<std::size_t> cotangentBasis() const {
    std::vector<std::size_t> out;
    for (std::size_t i = countBelow(1); i < countBelow(2); ++i) out.push_back(i);
    return out;
  }

  [[nodiscard]] bool isFree() const { return free_ != nullptr; }
  [[nodiscard]] const FreeData& freeData() const {
    if (!free_) throw std::logic_error("LocalAlgebra: not a free commutative algebra");
    return *free_;
  }
  [[nodiscard]] std::shared_ptr<const FreeData> freeDataPtr() const { return free_; }

  [[nodiscard]] const Monomial& monomial(std::size_t i) const { return freeData().monomials.at(i); }

  [[nodiscard]] std::optional<std::size_t> indexOf(const Monomial& m) const {
    const auto& idx = freeData().index;
    auto it = idx.find(m);
    if (it == idx.end()) return std::nullopt;
    return it->second;
  }

  [[nodiscard]] BitVector fromPoly(const FreeData::Poly& p) const {
    BitVector v(dim());
    for (const auto& [m, bit] : p)
      if (auto i = indexOf(m)) v.flip(*i);
    return v;
  }

  /// Basis index of a generator given by name.
  [[nodiscard]] std::size_t generatorIndex(const std::string& name) const {
    const auto& f = freeData();
    Monomial m = f.one();
    bool found = false;
    for (std::size_t i = 0; i < f.xNames.size() && !found; ++i)
      if (f.xNames[i] == name) {
        m.x[i] = 1;
        found = true;
      }
    for (std::size_t j = 0; j < f.wNames.size() && !found; ++j)
      if (f.wNames[j] == name) {
        m.w[j] = 1;
        found = true;
      }
    if (!found) throw std::invalid_argument("unknown generator '" + name + "'");
    auto i = indexOf(m);
    if (!i) throw std::invalid_argument("generator '" + name + "' truncated away (N = 1)");
    return *i;
  }

  /// The basis element with the given label.
  [[nodiscard]] BitVector element(const std::string& label) const {
    const auto& ls = labels();
    auto it = std::find(ls.begin(), ls.end(), label);
    if (it == ls.end()) throw std::invalid_argument("no basis element labelled '" + label + "'");
    return basis(static_cast<std::size_t>(it - ls.begin()));
  }

  [[nodiscard]] LocalAlgebra withProduct(std::size_t i, std::size_t j, const BitVector& value) const {
    LocalAlgebra copy = *this;
    copy.table_ = table_.withEntry(i, j, value);
    return copy;
  }

 private:
  std::vector<std::size_t> degrees_;
  std::vector<std::size_t> degreeStart_;
  std::size_t n_ = 1;
  std::shared_ptr<const FreeData> free_;
};

/// Number of monomials of degree < n in nx x-generators and nw w-generators,
/// saturating at `cap`.
inline double freeBasisSize(std::size_t nx, std::size_t nw, std::size_t n) {
  auto binom = [](double a, std::size_t b) {
    double r = 1;
    for (std::size_t i = 1; i <= b; ++i) r = r * (a - static_cast<double>(b - i)) / static_cast<double>(i);
    return r;
  };
  double total = 0;
  for (std::size_t d = 0; d < n; ++d)
    for (std::size_t r = 0; r <= std::min(d, nw); ++r) {
      const std::size_t s = d - r;
      const double xs = nx == 0 ? (s == 0 ? 1.0 : 0.0) : binom(static_cast<double>(nx + s - 1), s);
      total += binom(static_cast<double>(nw), r) * xs;
    }
  return total;
}

namespace detail {

inline void exponentVectors(std::size_t vars, std::size_t sum, std::vector<std::uint8_t>& cur, std::size_t pos,
                            std::vector<std::vector<std::uint8_t>>& out) {
  if (pos + 1 == vars) {
    cur[pos] = static_cast<std::uint8_t>(sum);
    out.push_back(cur);
    return;
  }
  for (std::size_t e = sum + 1; e-- > 0;) {
    cur[pos] = static_cast<std::uint8_t>(e);
    exponentVectors(vars, sum - e, cur, pos + 1, out);
  }
}

inline void subsets(std::size_t n, std::size_t r, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == r) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, r, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// Free commutative algebra on generators x_i (names xNames) and w_j
/// (names wNames), where partner[i] >= 0 means d(x_i) = w_{partner[i]}.
/// Relations: w_j^2 = 0, w central, x_j x_i = x_i x_j + w_i w_j for j > i.
inline LocalAlgebra freeCommutativeOn(std::vector<std::string> xNames, std::vector<std::string> wNames,
                                      std::vector<int> partner, std::size_t truncation) {
  if (truncation < 1) throw std::invalid_argument("freeCommutative: truncation N must be >= 1");
  if (partner.size() != xNames.size()) throw std::invalid_argument("freeCommutative: partner list size mismatch");
  auto data = std::make_shared<FreeData>();
  data->xNames = std::move(xNames);
  data->wNames = std::move(wNames);
  data->partner = std::move(partner);
  data->source.assign(data->wNames.size(), -1);
  for (std::size_t i = 0; i < data->partner.size(); ++i) {
    const int p = data->partner[i];
    if (p < 0) continue;
    if (static_cast<std::size_t>(p) >= data->wNames.size() || data->source[static_cast<std::size_t>(p)] >= 0)
      throw std::invalid_argument("freeCommutative: invalid partner assignment");
    data->source[static_cast<std::size_t>(p)] = static_cast<int>(i);
  }
  for (std::size_t j = 0; j < data->source.size(); ++j)
    if (data->source[j] < 0) throw std::invalid_argument("freeCommutative: w generator without an x partner");

  const std::size_t nx = data->xNames.size();
  const std::size_t nw = data->wNames.size();
  std::vector<std::size_t> degrees;
  for (std::size_t d = 0; d < truncation; ++d) {
    std::vector<std::vector<std::uint8_t>> xs;
    for (std::size_t s = (d > nw ? d - nw : 0); s <= d; ++s) {
      if (nx == 0) {
        if (s == 0) xs.emplace_back();
        continue;
      }
      std::vector<std::uint8_t> cur(nx, 0);
      detail::exponentVectors(nx, s, cur, 0, xs);
    }
    std::sort(xs.begin(), xs.end(), std::greater<>());
    for (const auto& xv : xs) {
      std::size_t s = 0;
      for (auto e : xv) s += e;
      std::vector<std::vector<std::size_t>> ws;
      std::vector<std::size_t> cur;
      detail::subsets(nw, d - s, 0, cur, ws);
      for (const auto& wsIdx : ws) {
        Monomial m{xv, std::vector<std::uint8_t>(nw, 0)};
        for (auto j : wsIdx) m.w[j] = 1;
        data->index.emplace(m, data->monomials.size());
        data->monomials.push_back(std::move(m));
        degrees.push_back(d);
      }
    }
  }

  const std::size_t dim = data->monomials.size();
  std::vector<std::string> labels;
  labels.reserve(dim);
  for (const auto& m : data->monomials) labels.push_back(data->label(m));

  BitMatrix diff(dim, dim);
  std::vector<std::size_t> degreeStart(truncation + 1, dim);
  for (std::size_t i = dim; i-- > 0;) degreeStart[degrees[i]] = i;
  for (std::size_t k = truncation; k-- > 0;) degreeStart[k] = std::min(degreeStart[k], degreeStart[k + 1]);

  auto lookup = [&](const FreeData::Poly& p) {
    BitVector v(dim);
    for (const auto& [m, bit] : p) {
      auto it = data->index.find(m);
      if (it != data->index.end()) v.flip(it->second);
    }
    return v;
  };

  // d on a normal word x_{i1}..x_{ik} w_S: Leibniz, with d w = 0.
  for (std::size_t c = 0; c < dim; ++c) {
    const Monomial& m = data->monomials[c];
    FreeData::Poly prefix;
    FreeData::toggle(prefix, data->one());
    FreeData::Poly result;
    std::vector<std::size_t> word;
    for (std::size_t k = 0; k < nx; ++k)
      for (std::uint8_t e = 0; e < m.x[k]; ++e) word.push_back(k);
    for (std::size_t pos = 0; pos < word.size(); ++pos) {
      const std::size_t k = word[pos];
      const int wk = data->partner[k];
      if (wk >= 0) {
        Monomial rest = data->one();
        for (std::size_t q = pos + 1; q < word.size(); ++q) ++rest.x[word[q]];
        rest.w = m.w;
        FreeData::Poly term;
        for (const auto& [pm, bit] : prefix)
          if (auto t = FreeData::timesW(pm, static_cast<std::size_t>(wk))) FreeData::toggle(term, *t);
        for (auto& [t, bit] : data->multiply(term, rest, truncation)) FreeData::toggle(result, t);
      }
      FreeData::Poly next;
      for (const auto& [pm, bit] : prefix)
        for (auto& [t, tb] : data->timesX(pm, k)) FreeData::toggle(next, t);
      prefix = std::move(next);
    }
    lookup(result).forEachSetBit([&](std::size_t r) { diff.set(r, c); });
  }

  auto table = ProductTable::build(
      dim, [&](std::size_t i) { return degreeStart[truncation - degrees[i]]; },
      [&](std::size_t i, std::size_t j) {
        FreeData::Poly p;
        FreeData::toggle(p, data->monomials[i]);
        return lookup(data->multiply(p, data->monomials[j], truncation));
      });

  BitVector unit = BitVector::unit(dim, 0);
  BitVector aug = BitVector::unit(dim, 0);
  Algebra alg(std::move(labels), std::move(diff), std::move(table), std::move(unit), std::move(aug));
  return {std::move(alg), std::move(degrees), truncation, std::move(data)};
}

/// Free commutative algebra on V_{m+n|n}: generators x_1..x_{m+n} with
/// d(x_i) = w_i for i <= n, truncated at degree N.
inline LocalAlgebra freeCommutative(std::size_t m, std::size_t n, std::size_t truncation) {
  const auto obj = makeObject(m, n);
  std::vector<std::string> xs(obj.labels().begin(), obj.labels().begin() + static_cast<long>(m + n));
  std::vector<std::string> ws(obj.labels().begin() + static_cast<long>(m + n), obj.labels().end());
  std::vector<int> partner(m + n, -1);
  for (std::size_t i = 0; i < n; ++i) partner[i] = static_cast<int>(i);
  return freeCommutativeOn(std::move(xs), std::move(ws), std::move(partner), truncation);
}

/// Normal form of a word in the generators of a free commutative algebra.
inline BitVector normalForm(const std::vector<std::string>& word, const LocalAlgebra& target) {
  const auto& f = target.freeData();
  FreeData::Poly cur;
  FreeData::toggle(cur, f.one());
  for (const auto& token : word) {
    Monomial g = f.one();
    bool found = false;
    for (std::size_t i = 0; i < f.xNames.size() && !found; ++i)
      if (f.xNames[i] == token) {
        g.x[i] = 1;
        found = true;
      }
    for (std::size_t j = 0; j < f.wNames.size() && !found; ++j)
      if (f.wNames[j] == token) {
        g.w[j] = 1;
        found = true;
      }
    if (!found) throw std::invalid_argument("normalForm: unknown generator '" + token + "'");
    cur = f.multiply(cur, g, target.truncation());
  }
  return target.fromPoly(cur);
}

/// Twisted tensor product: (a (x) b)(a' (x) b') = aa' (x) bb' + a.da' (x) db.b',
/// truncated at total degree N.
inline LocalAlgebra twistedTensor(const LocalAlgebra& a, const LocalAlgebra& b) {
  if (a.truncation() != b.truncation()) throw std::invalid_argument("twistedTensor: truncations differ");
  const std::size_t n = a.truncation();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::size_t> degrees;
  for (std::size_t d = 0; d < n; ++d)
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < b.dim(); ++j)
        if (a.degree(i) + b.degree(j) == d) {
          pairs.emplace_back(i, j);
          degrees.push_back(d);
        }
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  for (std::size_t k = 0; k < pairs.size(); ++k) index[pairs[k]] = k;
  const std::size_t dim = pairs.size();
  auto embed = [&](const BitVector& u, const BitVector& v, BitVector& acc) {
    u.forEachSetBit([&](std::size_t p) {
      v.forEachSetBit([&](std::size_t q) {
        auto it = index.find({p, q});
        if (it != index.end()) acc.flip(it->second);
      });
    });
  };
  std::vector<std::string> labels;
  BitMatrix diff(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const auto [i, j] = pairs[k];
    labels.push_back(tensorLabel(a.label(i), b.label(j)));
    BitVector col(dim);
    embed(a.dBasis(i), b.basis(j), col);
    embed(a.basis(i), b.dBasis(j), col);
    col.forEachSetBit([&](std::size_t r) { diff.set(r, k); });
  }
  auto table = ProductTable::build(
      dim, [&](std::size_t) { return dim; },
      [&](std::size_t k, std::size_t l) {
        const auto [i, j] = pairs[k];
        const auto [i2, j2] = pairs[l];
        BitVector out(dim);
        embed(a.mulBasis(i, i2), b.mulBasis(j, j2), out);
        embed(a.mul(a.basis(i), a.dBasis(i2)), b.mul(b.dBasis(j), b.basis(j2)), out);
        return out;
      });
  BitVector unit(dim);
  embed(a.unit(), b.unit(), unit);
  BitVector aug(dim);
  for (std::size_t k = 0; k < dim; ++k)
    if (a.augmentation().get(pairs[k].first) && b.augmentation().get(pairs[k].second)) aug.set(k);
  Algebra alg(std::move(labels), std::move(diff), std::move(table), std::move(unit), std::move(aug));
  return {std::move(alg), std::move(degrees), n};
}

enum class IdealClosure {
  /// Close under d as well; the quotient always inherits a differential.
  Differential,
  /// Two-sided ideal only; d must already preserve it.
  Plain,
};

struct QuotientAlgebra {
  Algebra algebra;
  /// Basis indices of the original algebra used as representatives.
  std::vector<std::size_t> representatives;
  /// Projection from the original algebra onto the quotient basis.
  BitMatrix projection;
};

/// Basis of the two-sided ideal generated by gens (and closed under d when
/// requested).
inline Subspace idealSpan(const Algebra& a, const std::vector<BitVector>& gens, IdealClosure closure) {
  Subspace ideal(a.dim());
  std::vector<BitVector> queue;
  auto push = [&](const BitVector& v) {
    if (ideal.insert(v)) queue.push_back(v);
  };
  for (const auto& g : gens) {
    if (g.size() != a.dim()) throw std::invalid_argument("quotient: ideal generator has wrong length");
    push(g);
  }
  while (!queue.empty()) {
    BitVector v = std::move(queue.back());
    queue.pop_back();
    if (closure == IdealClosure::Differential) push(a.d(v));
    for (std::size_t j = 0; j < a.dim(); ++j) {
      push(a.mul(v, a.basis(j)));
      push(a.mul(a.basis(j), v));
    }
  }
  return ideal;
}

inline QuotientAlgebra quotient(const Algebra& a, const std::vector<BitVector>& gens,
                                IdealClosure closure = IdealClosure::Differential) {
  const Subspace ideal = idealSpan(a, gens, closure);
  if (ideal.contains(a.unit())) throw std::invalid_argument("inconsistent presentation: the ideal contains 1");
  if (closure == IdealClosure::Plain)
    for (const auto& v : ideal.basis())
      if (!ideal.contains(a.d(v)))
        throw std::invalid_argument("quotient: d does not preserve the ideal (" + a.format(v) + ")");

  std::vector<BitVector> space;
  for (std::size_t i = 0; i < a.dim(); ++i) space.push_back(a.basis(i));
  auto qb = quotientBasis(space, ideal.basis());
  std::vector<std::size_t> reps;
  for (const auto& r : qb.representatives) reps.push_back(r.findFirst());
  const std::size_t q = reps.size();
  const BitMatrix& proj = qb.projection;

  std::vector<std::string> labels;
  BitMatrix diff(q, q);
  for (std::size_t c = 0; c < q; ++c) {
    labels.push_back(a.label(reps[c]));
    proj.apply(a.dBasis(reps[c])).forEachSetBit([&](std::size_t r) { diff.set(r, c); });
  }
  auto table = ProductTable::build(
      q, [&](std::size_t) { return q; },
      [&](std::size_t i, std::size_t j) { return proj.apply(a.mulBasis(reps[i], reps[j])); });
  std::optional<BitVector> aug;
  if (a.hasAugmentation()) {
    bool descends = true;
    for (const auto& v : ideal.basis()) descends = descends && !a.eta(v);
    if (descends) {
      BitVector e(q);
      for (std::size_t c = 0; c < q; ++c)
        if (a.augmentation().get(reps[c])) e.set(c);
      aug = std::move(e);
    }
  }
  Algebra alg(std::move(labels), std::move(diff), std::move(table), proj.apply(a.unit()), std::move(aug));
  return {std::move(alg), std::move(reps), proj};
}

/// Inverse of an element with augmentation 1, as the geometric series in
/// a - 1 (which is nilpotent).
inline BitVector invertModM(const Algebra& a, const BitVector& v) {
  if (!a.eta(v)) throw std::invalid_argument("not invertible: augmentation is 0");
  const BitVector m = v + a.unit();
  BitVector sum = a.unit();
  BitVector power = a.unit();
  for (std::size_t k = 0; k <= a.dim() + 1; ++k) {
    power = a.mul(power, m);
    if (power.isZero()) return sum;
    sum ^= power;
  }
  throw std::invalid_argument("not invertible: a - 1 is not nilpotent");
}

/// The underlying ordinary commutative algebra: the quotient by the ideal
/// spanned by the products a.db.
inline QuotientAlgebra underlyingQuotient(const Algebra& a) {
  std::vector<BitVector> gens;
  for (std::size_t j = 0; j < a.dim(); ++j) {
    const BitVector db = a.dBasis(j);
    if (db.isZero()) continue;
    for (std::size_t i = 0; i < a.dim(); ++i) gens.push_back(a.mul(a.basis(i), db));
  }
  return quotient(a, gens, IdealClosure::Plain);
}

inline LocalAlgebra underlyingCommutative(const LocalAlgebra& a) {
  auto q = underlyingQuotient(a);
  std::vector<std::size_t> degrees;
  for (auto r : q.representatives) degrees.push_back(a.degree(r));
  return {std::move(q.algebra), std::move(degrees), a.truncation()};
}

/// ab + ba = da.db on all ordered basis pairs.
inline Report verifyCommutativity(const Algebra& a) {
  Report r("commutativity");
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const BitVector di = a.dBasis(i);
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const BitVector lhs = a.mulBasis(i, j) + a.mulBasis(j, i);
      const BitVector rhs = a.mul(di, a.dBasis(j));
      r.check(lhs == rhs, "ab + ba = da.db",
              [&] { return "(" + a.label(i) + ", " + a.label(j) + "): ab+ba = " + a.format(lhs) + ", da.db = " + a.format(rhs); });
    }
  }
  return r;
}

/// Unit, associativity, Leibniz rule for d, and (if present) the
/// augmentation being an algebra map commuting with d.
inline Report verifyAlgebra(const Algebra& a) {
  Report r("algebra");
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    const BitVector bi = a.basis(i);
    r.check(a.mul(a.unit(), bi) == bi && a.mul(bi, a.unit()) == bi, "unit", [&] { return a.label(i); });
  }
  std::vector<Report> parts(chunkCount(n));
  parallelChunks(n, [&](std::size_t c, std::size_t begin, std::size_t end) {
    Report& p = parts[c];
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const BitVector ij = a.mulBasis(i, j);
        const BitVector dij = a.d(ij);
        const BitVector leib = a.mul(a.dBasis(i), a.basis(j)) + a.mul(a.basis(i), a.dBasis(j));
        p.check(dij == leib, "d(ab) = da.b + a.db", [&] { return "(" + a.label(i) + ", " + a.label(j) + ")"; });
        for (std::size_t k = 0; k < n; ++k) {
          const BitVector left = a.mul(ij, a.basis(k));
          const BitVector right = a.mul(a.basis(i), a.mulBasis(j, k));
          p.check(left == right, "associativity",
                  [&] { return "(" + a.label(i) + ", " + a.label(j) + ", " + a.label(k) + ")"; });
        }
        if (a.hasAugmentation())
          p.check(a.eta(ij) == (a.eta(a.basis(i)) && a.eta(a.basis(j))), "augmentation multiplicative",
                  [&] { return "(" + a.label(i) + ", " + a.label(j) + ")"; });
      }
  });
  for (const auto& p : parts) r.absorb(p);
  if (a.hasAugmentation()) {
    r.check(a.eta(a.unit()), "augmentation of 1 is 1");
    for (std::size_t i = 0; i < n; ++i)
      r.check(!a.eta(a.dBasis(i)), "augmentation commutes with d", [&] { return a.label(i); });
  }
  return r;
}

/// m^i m^j lies in m^{i+j} for a truncated local algebra.
inline Report verifyFiltration(const LocalAlgebra& a) {
  Report r("filtration");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const BitVector p = a.mulBasis(i, j);
      r.check(a.order(p) >= a.degree(i) + a.degree(j) || p.isZero(), "m^i m^j in m^(i+j)",
              [&] { return "(" + a.label(i) + ", " + a.label(j) + ")"; });
    }
  return r;
}

/// Joins indices for matrix-entry labels: "12", or "1,12" once an index
/// needs two digits.
inline std::string indexPair(std::size_t i, std::size_t j) {
  if (i >= 10 || j >= 10) return std::to_string(i) + "," + std::to_string(j);
  return std::to_string(i) + std::to_string(j);
}

/// End(V) with composition as product and d(f) = d f + f d.
inline Algebra endomorphismAlgebra(const Ver4Object& v) {
  const std::size_t n = v.dim();
  const std::size_t dim = n * n;
  auto idx = [n](std::size_t i, std::size_t j) { return i * n + j; };
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) labels.push_back("E" + indexPair(i + 1, j + 1));
  // E_ij sends basis j to basis i. d E_ij = D E_ij + E_ij D.
  BitMatrix diff(dim, dim);
  const BitMatrix& d = v.diff();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t c = idx(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (d.get(k, i)) diff.flip(idx(k, j), c);
        if (d.get(j, k)) diff.flip(idx(i, k), c);
      }
    }
  auto table = ProductTable::build(
      dim, [&](std::size_t) { return dim; },
      [&](std::size_t a, std::size_t b) {
        BitVector out(dim);
        const std::size_t i = a / n, j = a % n, k = b / n, l = b % n;
        if (j == k) out.set(idx(i, l));
        return out;
      });
  BitVector unit(dim);
  for (std::size_t i = 0; i < n; ++i) unit.set(idx(i, i));
  return {std::move(labels), std::move(diff), std::move(table), std::move(unit)};
}

}  // namespace ver4
