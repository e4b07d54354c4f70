#pragma once

// Dense matrices over an exact field, with the handful of exact linear
// algebra routines the representation analysis needs: reduced row echelon
// form, kernel bases, rank, solving, inversion and span tracking.  There is
// deliberately no floating point and no tolerance anywhere: every zero test
// is an exact field comparison.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace coxcell {

template <class K>
class Matrix {
 public:
  using Scalar = typename K::Scalar;

  Matrix() : rows_(0), cols_(0) {}
  Matrix(size_t rows, size_t cols, const Scalar& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(size_t n, const K& k) {
    Matrix m(n, n, k.zero());
    for (size_t i = 0; i < n; ++i) m.at(i, i) = k.one();
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Scalar& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const Scalar& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (size_t i = 0; i < a.data_.size(); ++i)
      if (!(a.data_[i] == b.data_[i])) return false;
    return true;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix r = a;
    for (size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix r = a;
    for (size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    if (a.rows_ == 0 || b.cols_ == 0 || a.cols_ == 0)
      throw std::invalid_argument("matrix product with empty dimension");
    Matrix r(a.rows_, b.cols_, a.data_.empty() ? b.data_[0] : a.data_[0]);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t j = 0; j < b.cols_; ++j) {
        Scalar s = a.at(i, 0) * b.at(0, j);
        for (size_t l = 1; l < a.cols_; ++l) s += a.at(i, l) * b.at(l, j);
        r.at(i, j) = s;
      }
    return r;
  }

  Matrix scaled(const Scalar& c) const {
    Matrix r = *this;
    for (auto& x : r.data_) x = x * c;
    return r;
  }

  Matrix pow(unsigned e, const K& k) const {
    if (rows_ != cols_) throw std::invalid_argument("pow of non-square matrix");
    Matrix r = identity(rows_, k);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  bool is_zero() const {
    for (auto& x : data_)
      if (!K::is_zero(x)) return false;
    return true;
  }

  std::vector<Scalar> col(size_t j) const {
    std::vector<Scalar> v;
    v.reserve(rows_);
    for (size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
    return v;
  }

  Scalar trace() const {
    if (rows_ != cols_ || rows_ == 0)
      throw std::invalid_argument("trace needs a nonempty square matrix");
    Scalar s = at(0, 0);
    for (size_t i = 1; i < rows_; ++i) s += at(i, i);
    return s;
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }

  size_t rows_, cols_;
  std::vector<Scalar> data_;
};

template <class K>
Matrix<K> direct_sum(const Matrix<K>& a, const Matrix<K>& b, const K& k) {
  Matrix<K> r(a.rows() + b.rows(), a.cols() + b.cols(), k.zero());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j) r.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return r;
}

template <class K>
Matrix<K> vstack(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack shape mismatch");
  if (a.rows() == 0 && b.rows() == 0) throw std::invalid_argument("vstack of empty matrices");
  Matrix<K> r(a.rows() + b.rows(), a.cols(), a.rows() ? a.at(0, 0) : b.at(0, 0));
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
  return r;
}

// In-place Gauss-Jordan; returns the pivot columns.
template <class K>
std::vector<size_t> rref(Matrix<K>& m, const K& k) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t colj = 0; colj < m.cols() && row < m.rows(); ++colj) {
    size_t p = row;
    while (p < m.rows() && K::is_zero(m.at(p, colj))) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
    auto inv = k.inv(m.at(row, colj));
    for (size_t j = 0; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == row || K::is_zero(m.at(i, colj))) continue;
      auto f = m.at(i, colj);
      for (size_t j = 0; j < m.cols(); ++j)
        m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(colj);
    ++row;
  }
  return pivots;
}

template <class K>
size_t rank(Matrix<K> m, const K& k) {
  return rref(m, k).size();
}

// Basis of {x : m x = 0}, one vector per free column, in column order.
// The free coordinate of each basis vector is 1.
template <class K>
std::vector<std::vector<typename K::Scalar>> kernel_basis(Matrix<K> m, const K& k) {
  auto pivots = rref(m, k);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<typename K::Scalar>> basis;
  for (size_t freej = 0; freej < m.cols(); ++freej) {
    if (is_pivot[freej]) continue;
    std::vector<typename K::Scalar> v(m.cols(), k.zero());
    v[freej] = k.one();
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = k.zero() - m.at(r, freej);
    basis.push_back(std::move(v));
  }
  return basis;
}

// One solution of A x = b, or nullopt if inconsistent.
template <class K>
std::optional<std::vector<typename K::Scalar>> solve(const Matrix<K>& a,
                                                     const std::vector<typename K::Scalar>& b,
                                                     const K& k) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve shape mismatch");
  Matrix<K> aug(a.rows(), a.cols() + 1, k.zero());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  auto pivots = rref(aug, k);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<typename K::Scalar> x(a.cols(), k.zero());
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, a.cols());
  return x;
}

template <class K>
Matrix<K> inverse(const Matrix<K>& m, const K& k) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  size_t n = m.rows();
  Matrix<K> aug(n, 2 * n, k.zero());
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = k.one();
  }
  auto pivots = rref(aug, k);
  if (pivots.size() != n || pivots.back() != n - 1)
    throw std::domain_error("matrix is singular");
  Matrix<K> r(n, n, k.zero());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) r.at(i, j) = aug.at(i, n + j);
  return r;
}

// Incremental row-space tracker for the Burnside span test.
template <class K>
class SpanTracker {
 public:
  explicit SpanTracker(const K& k) : k_(k) {}

  size_t dimension() const { return rows_.size(); }

  // Reduces v against the span; inserts and returns true if independent.
  bool insert(std::vector<typename K::Scalar> v) {
    for (auto& [pivot, row] : rows_) {
      if (K::is_zero(v[pivot])) continue;
      auto f = v[pivot];
      for (size_t j = 0; j < v.size(); ++j) v[j] -= f * row[j];
    }
    size_t pivot = v.size();
    for (size_t j = 0; j < v.size(); ++j) {
      if (!K::is_zero(v[j])) {
        pivot = j;
        break;
      }
    }
    if (pivot == v.size()) return false;
    auto inv = k_.inv(v[pivot]);
    for (auto& x : v) x = x * inv;
    // Keep the stored rows fully reduced against each other, so one
    // elimination pass per insert stays sound.
    for (auto& [p, row] : rows_) {
      if (K::is_zero(row[pivot])) continue;
      auto f = row[pivot];
      for (size_t j = 0; j < row.size(); ++j) row[j] -= f * v[j];
    }
    rows_.emplace_back(pivot, std::move(v));
    return true;
  }

 private:
  K k_;
  std::vector<std::pair<size_t, std::vector<typename K::Scalar>>> rows_;
};

}  // namespace coxcell
