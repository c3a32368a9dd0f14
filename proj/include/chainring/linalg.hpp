#pragma once

// Exact dense linear algebra over K on Eigen matrices: reduced row echelon
// form, kernels, solving, and subspaces kept in canonical echelon form.
//
// Constants are always produced through FieldOps so that GF(p) entries carry
// their modulus.

#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "chainring/field.hpp"

namespace chainring {

template <class K>
using Mat = Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic>;
template <class K>
using Vec = Eigen::Matrix<K, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class K>
Mat<K> zeros(const FieldOps<K>& F, Index r, Index c) {
  return Mat<K>::Constant(r, c, F.from_int(0));
}

template <class K>
Vec<K> zero_vec(const FieldOps<K>& F, Index n) {
  return Vec<K>::Constant(n, F.from_int(0));
}

template <class K>
Mat<K> identity(const FieldOps<K>& F, Index n) {
  Mat<K> I = zeros(F, n, n);
  for (Index i = 0; i < n; ++i) I(i, i) = F.from_int(1);
  return I;
}

template <class K>
Vec<K> unit_vec(const FieldOps<K>& F, Index n, Index i) {
  Vec<K> v = zero_vec(F, n);
  v(i) = F.from_int(1);
  return v;
}

template <class K>
bool is_zero_vec(const Vec<K>& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!is_zero(v(i))) return false;
  return true;
}

template <class K>
bool is_zero_mat(const Mat<K>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

/// Entrywise equality through K's own operator==.
template <class K>
bool mat_equal(const Mat<K>& a, const Mat<K>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

template <class K>
bool vec_equal(const Vec<K>& a, const Vec<K>& b) {
  if (a.size() != b.size()) return false;
  for (Index i = 0; i < a.size(); ++i)
    if (!(a(i) == b(i))) return false;
  return true;
}

template <class K>
struct Echelon {
  Mat<K> rows;                 // rank x cols, reduced
  std::vector<Index> pivots;   // pivot column of each row
};

template <class K>
Echelon<K> rref(Mat<K> A) {
  Index r = 0;
  std::vector<Index> piv;
  for (Index c = 0; c < A.cols() && r < A.rows(); ++c) {
    Index p = r;
    while (p < A.rows() && is_zero(A(p, c))) ++p;
    if (p == A.rows()) continue;
    if (p != r) A.row(p).swap(A.row(r));
    K inv = A(r, c).inverse();
    for (Index j = c; j < A.cols(); ++j) A(r, j) = A(r, j) * inv;
    for (Index i = 0; i < A.rows(); ++i) {
      if (i == r || is_zero(A(i, c))) continue;
      K f = A(i, c);
      for (Index j = c; j < A.cols(); ++j) A(i, j) = A(i, j) - f * A(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return {A.topRows(r), std::move(piv)};
}

template <class K>
Index rank(const Mat<K>& A) {
  return static_cast<Index>(rref(A).pivots.size());
}

/// Basis of {x : A x = 0} as columns.
template <class K>
Mat<K> kernel(const FieldOps<K>& F, const Mat<K>& A) {
  auto E = rref(A);
  Index n = A.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index c : E.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  Mat<K> out = zeros(F, n, n - static_cast<Index>(E.pivots.size()));
  Index k = 0;
  for (Index f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    out(f, k) = F.from_int(1);
    for (std::size_t i = 0; i < E.pivots.size(); ++i) out(E.pivots[i], k) = -E.rows(static_cast<Index>(i), f);
    ++k;
  }
  return out;
}

/// Some x with A x = b, or nullopt.
template <class K>
std::optional<Vec<K>> solve(const FieldOps<K>& F, const Mat<K>& A, const Vec<K>& b) {
  if (b.size() != A.rows()) throw DimensionError("solve: right-hand side has the wrong length");
  Mat<K> aug(A.rows(), A.cols() + 1);
  aug << A, b;
  auto E = rref(aug);
  Vec<K> x = zero_vec(F, A.cols());
  for (std::size_t i = 0; i < E.pivots.size(); ++i) {
    if (E.pivots[i] == A.cols()) return std::nullopt;
    x(E.pivots[i]) = E.rows(static_cast<Index>(i), A.cols());
  }
  return x;
}

template <class K>
std::optional<Mat<K>> inverse(const FieldOps<K>& F, const Mat<K>& A) {
  if (A.rows() != A.cols()) throw DimensionError("inverse of a non-square matrix");
  Index n = A.rows();
  Mat<K> aug(n, 2 * n);
  aug << A, identity(F, n);
  auto E = rref(aug);
  if (static_cast<Index>(E.pivots.size()) < n || (n > 0 && E.pivots[static_cast<std::size_t>(n - 1)] >= n))
    return std::nullopt;
  return Mat<K>(E.rows.rightCols(n));
}

/// A subspace of K^n stored as the rows of its reduced echelon basis, so two
/// subspaces are equal iff their stored matrices are.
template <class K>
class Subspace {
 public:
  Subspace(FieldOps<K> F, Index ambient) : F_(std::move(F)), n_(ambient), rows_(0, ambient) {}

  /// Span of the columns of `cols` (ambient = cols.rows()).
  static Subspace span(const FieldOps<K>& F, const Mat<K>& cols) {
    Subspace s(F, cols.rows());
    if (cols.cols() == 0) return s;
    auto E = rref(Mat<K>(cols.transpose()));
    s.rows_ = std::move(E.rows);
    s.piv_ = std::move(E.pivots);
    return s;
  }
  static Subspace span(const FieldOps<K>& F, Index ambient, const std::vector<Vec<K>>& vecs) {
    Mat<K> m = zeros(F, ambient, static_cast<Index>(vecs.size()));
    for (std::size_t j = 0; j < vecs.size(); ++j) {
      if (vecs[j].size() != ambient) throw DimensionError("span: vector of the wrong length");
      m.col(static_cast<Index>(j)) = vecs[j];
    }
    return span(F, m);
  }
  static Subspace whole(const FieldOps<K>& F, Index n) { return span(F, identity(F, n)); }
  static Subspace kernel_of(const FieldOps<K>& F, const Mat<K>& A) { return span(F, kernel(F, A)); }

  const FieldOps<K>& field() const { return F_; }
  Index ambient() const { return n_; }
  Index dim() const { return rows_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_whole() const { return dim() == n_; }
  /// Basis vectors as rows, reduced echelon.
  const Mat<K>& rows() const { return rows_; }
  const std::vector<Index>& pivots() const { return piv_; }
  /// Basis vectors as columns.
  Mat<K> columns() const { return rows_.transpose(); }
  std::vector<Vec<K>> basis() const {
    std::vector<Vec<K>> out;
    for (Index i = 0; i < dim(); ++i) out.push_back(rows_.row(i).transpose());
    return out;
  }

  /// Normal form of v: zero in every pivot coordinate.
  Vec<K> reduce(Vec<K> v) const {
    check(v.size());
    for (std::size_t i = 0; i < piv_.size(); ++i) {
      K c = v(piv_[i]);
      if (chainring::is_zero(c)) continue;
      v -= rows_.row(static_cast<Index>(i)).transpose() * c;
    }
    return v;
  }
  bool contains(const Vec<K>& v) const { return is_zero_vec(reduce(v)); }
  bool contains(const Subspace& o) const {
    check(o.n_);
    for (Index i = 0; i < o.dim(); ++i)
      if (!contains(Vec<K>(o.rows_.row(i).transpose()))) return false;
    return true;
  }

  /// Coordinates outside the pivots: a basis of the quotient K^n / this.
  std::vector<Index> complement() const {
    std::vector<Index> out;
    std::size_t p = 0;
    for (Index c = 0; c < n_; ++c) {
      if (p < piv_.size() && piv_[p] == c) {
        ++p;
        continue;
      }
      out.push_back(c);
    }
    return out;
  }

  friend Subspace operator+(const Subspace& a, const Subspace& b) {
    a.check(b.n_);
    Mat<K> both(a.n_, a.dim() + b.dim());
    both << a.columns(), b.columns();
    return span(a.F_, both);
  }
  friend Subspace intersect(const Subspace& a, const Subspace& b) {
    a.check(b.n_);
    if (a.is_zero() || b.is_zero()) return Subspace(a.F_, a.n_);
    // x a^T = y b^T  <=>  [a^T | -b^T] (x; y) = 0.
    Mat<K> M(a.n_, a.dim() + b.dim());
    M << a.columns(), -b.columns();
    Mat<K> Z = kernel(a.F_, M);
    return span(a.F_, Mat<K>(a.columns() * Z.topRows(a.dim())));
  }
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.piv_ == b.piv_ && mat_equal(a.rows_, b.rows_);
  }

 private:
  void check(Index n) const {
    if (n != n_) throw DimensionError("subspaces of different ambient spaces");
  }

  FieldOps<K> F_;
  Index n_;
  Mat<K> rows_;
  std::vector<Index> piv_;
};

/// Block-diagonal matrix with `copies` copies of m.
template <class K>
Mat<K> block_diag(const FieldOps<K>& F, const Mat<K>& m, Index copies) {
  Mat<K> out = zeros(F, m.rows() * copies, m.cols() * copies);
  for (Index b = 0; b < copies; ++b) out.block(b * m.rows(), b * m.cols(), m.rows(), m.cols()) = m;
  return out;
}

template <class K>
Mat<K> kron(const FieldOps<K>& F, const Mat<K>& a, const Mat<K>& b) {
  Mat<K> out = zeros(F, a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (!is_zero(a(i, j))) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = b * a(i, j);
  return out;
}

}  // namespace chainring
