#ifndef TANGENCY_LINALG_HPP
#define TANGENCY_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "tangency/errors.hpp"
#include "tangency/interval.hpp"

namespace tangency {

template <class T>
class DenseVector {
 public:
  DenseVector() = default;
  explicit DenseVector(std::size_t n) : data_(n, T(0.0)) {}
  DenseVector(std::initializer_list<T> values) : data_(values) {}
  explicit DenseVector(std::vector<T> values) : data_(std::move(values)) {}

  [[nodiscard]] std::size_t size() const noexcept { return data_.size(); }
  T& operator[](std::size_t i) { return data_[i]; }
  const T& operator[](std::size_t i) const { return data_[i]; }
  auto begin() noexcept { return data_.begin(); }
  auto end() noexcept { return data_.end(); }
  auto begin() const noexcept { return data_.begin(); }
  auto end() const noexcept { return data_.end(); }
  [[nodiscard]] const std::vector<T>& values() const noexcept { return data_; }

  friend bool operator==(const DenseVector&, const DenseVector&) = default;

 private:
  std::vector<T> data_;
};

// Row-major dense matrix.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0.0)) {}
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<T> row_major)
      : rows_(rows), cols_(cols), data_(std::move(row_major)) {
    if (data_.size() != rows * cols) throw ShapeError("matrix data does not match its shape");
  }
  DenseMatrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    for (const auto& r : rows) {
      if (r.size() != cols_) throw ShapeError("ragged matrix initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1.0);
    return m;
  }

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  [[nodiscard]] const std::vector<T>& values() const noexcept { return data_; }

  [[nodiscard]] DenseVector<T> row(std::size_t i) const {
    return DenseVector<T>(std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                         data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)));
  }
  [[nodiscard]] DenseVector<T> column(std::size_t j) const {
    DenseVector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntervalVector = DenseVector<Interval>;
using IntervalMatrix = DenseMatrix<Interval>;
using Vector = DenseVector<double>;
using Matrix = DenseMatrix<double>;

// Conversions between point and interval objects.
IntervalVector to_interval(const Vector& v);
IntervalMatrix to_interval(const Matrix& m);
Vector mid(const IntervalVector& v);
Matrix mid(const IntervalMatrix& m);
// Entrywise upward-rounded radii.
Matrix rad(const IntervalMatrix& m);

IntervalVector operator+(const IntervalVector& a, const IntervalVector& b);
IntervalVector operator-(const IntervalVector& a, const IntervalVector& b);
IntervalVector operator*(const Interval& s, const IntervalVector& v);
IntervalMatrix operator+(const IntervalMatrix& a, const IntervalMatrix& b);
IntervalMatrix operator-(const IntervalMatrix& a, const IntervalMatrix& b);
IntervalMatrix operator*(const Interval& s, const IntervalMatrix& a);

IntervalMatrix mat_mul(const IntervalMatrix& a, const IntervalMatrix& b);
IntervalVector mat_vec(const IntervalMatrix& a, const IntervalVector& v);
IntervalMatrix transpose(const IntervalMatrix& a);
Interval dot(const IntervalVector& a, const IntervalVector& b);

// Upper bound of the Euclidean norm of every point vector in v.
double norm_bound(const IntervalVector& v);
// Upper bound of the induced infinity norm of every point matrix in a.
double inf_norm_bound(const IntervalMatrix& a);

// Cofactor-expansion enclosure of det over all point matrices in a; n <= 4.
Interval det(const IntervalMatrix& a);
// det restricted to 4x4 input.
Interval det4(const IntervalMatrix& a);

// Entrywise hull / intersection. Intersection throws DomainError when empty.
IntervalVector hull(const IntervalVector& a, const IntervalVector& b);
IntervalVector intersect(const IntervalVector& a, const IntervalVector& b);
IntervalMatrix intersect(const IntervalMatrix& a, const IntervalMatrix& b);
bool subset_of(const IntervalVector& a, const IntervalVector& b);

// Approximate inverse by Gaussian elimination with partial pivoting; no
// rigor. Throws SingularMatrixError on a zero pivot.
Matrix approximate_inverse(const Matrix& a);

// Verified enclosure of a^{-1} for a point matrix. An approximate inverse R
// is validated through ||I - R a||_inf < 1 and the enclosure is tightened
// with the Krawczyk operator X -> (R + (I - R a) X) cap X. Throws
// SingularMatrixError when the residual check fails.
IntervalMatrix inverse_enclosure(const Matrix& a);

std::ostream& operator<<(std::ostream& os, const IntervalVector& v);
std::ostream& operator<<(std::ostream& os, const IntervalMatrix& m);

}  // namespace tangency

#endif  // TANGENCY_LINALG_HPP
