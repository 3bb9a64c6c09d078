#include "tangency/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <utility>

namespace tangency {

using namespace rounding;

namespace {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw ShapeError(what);
}

}  // namespace

IntervalVector to_interval(const Vector& v) {
  IntervalVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Interval(v[i]);
  return out;
}

IntervalMatrix to_interval(const Matrix& m) {
  IntervalMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Interval(m(i, j));
  return out;
}

Vector mid(const IntervalVector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].mid();
  return out;
}

Matrix mid(const IntervalMatrix& m) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).mid();
  return out;
}

Matrix rad(const IntervalMatrix& m) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).rad();
  return out;
}

IntervalVector operator+(const IntervalVector& a, const IntervalVector& b) {
  require_same_size(a.size(), b.size(), "vector sizes differ");
  IntervalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntervalVector operator-(const IntervalVector& a, const IntervalVector& b) {
  require_same_size(a.size(), b.size(), "vector sizes differ");
  IntervalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IntervalVector operator*(const Interval& s, const IntervalVector& v) {
  IntervalVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

IntervalMatrix operator+(const IntervalMatrix& a, const IntervalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("matrix shapes differ");
  IntervalMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

IntervalMatrix operator-(const IntervalMatrix& a, const IntervalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("matrix shapes differ");
  IntervalMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

IntervalMatrix operator*(const Interval& s, const IntervalMatrix& a) {
  IntervalMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = s * a(i, j);
  return out;
}

IntervalMatrix mat_mul(const IntervalMatrix& a, const IntervalMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("non-conformable matrix product");
  IntervalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Interval s(0.0);
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      out(i, j) = s;
    }
  }
  return out;
}

IntervalVector mat_vec(const IntervalMatrix& a, const IntervalVector& v) {
  if (a.cols() != v.size()) throw ShapeError("non-conformable matrix-vector product");
  IntervalVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Interval s(0.0);
    for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * v[k];
    out[i] = s;
  }
  return out;
}

IntervalMatrix transpose(const IntervalMatrix& a) {
  IntervalMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

Interval dot(const IntervalVector& a, const IntervalVector& b) {
  require_same_size(a.size(), b.size(), "vector sizes differ");
  Interval s(0.0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm_bound(const IntervalVector& v) {
  double s = 0.0;
  for (const auto& x : v) {
    const double m = x.mag();
    s = add_up(s, mul_up(m, m));
  }
  return sqrt_up(s);
}

double inf_norm_bound(const IntervalMatrix& a) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s = add_up(s, a(i, j).mag());
    best = std::max(best, s);
  }
  return best;
}

namespace {

IntervalMatrix minor_of(const IntervalMatrix& a, std::size_t row, std::size_t col) {
  const std::size_t n = a.rows();
  IntervalMatrix m(n - 1, n - 1);
  for (std::size_t i = 0, mi = 0; i < n; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, mj = 0; j < n; ++j) {
      if (j == col) continue;
      m(mi, mj++) = a(i, j);
    }
    ++mi;
  }
  return m;
}

}  // namespace

Interval det(const IntervalMatrix& a) {
  if (a.rows() != a.cols()) throw ShapeError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0 || n > 4) throw ShapeError("determinant supports sizes 1..4");
  if (n == 1) return a(0, 0);
  if (n == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  Interval s(0.0);
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j) == Interval(0.0)) continue;
    const Interval term = a(0, j) * det(minor_of(a, 0, j));
    s = (j % 2 == 0) ? s + term : s - term;
  }
  return s;
}

Interval det4(const IntervalMatrix& a) {
  if (a.rows() != 4 || a.cols() != 4) throw ShapeError("det4 requires a 4x4 matrix");
  return det(a);
}

IntervalVector hull(const IntervalVector& a, const IntervalVector& b) {
  require_same_size(a.size(), b.size(), "vector sizes differ");
  IntervalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = Interval::hull(a[i], b[i]);
  return out;
}

IntervalVector intersect(const IntervalVector& a, const IntervalVector& b) {
  require_same_size(a.size(), b.size(), "vector sizes differ");
  IntervalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = intersect(a[i], b[i]);
  return out;
}

IntervalMatrix intersect(const IntervalMatrix& a, const IntervalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("matrix shapes differ");
  IntervalMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = intersect(a(i, j), b(i, j));
  return out;
}

bool subset_of(const IntervalVector& a, const IntervalVector& b) {
  require_same_size(a.size(), b.size(), "vector sizes differ");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].subset_of(b[i])) return false;
  return true;
}

Matrix approximate_inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw ShapeError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix work = a;
  Matrix inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::fabs(work(r, col)) > std::fabs(work(pivot, col))) pivot = r;
    if (work(pivot, col) == 0.0) throw SingularMatrixError("zero pivot in approximate inverse");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(pivot, j), work(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const double p = work(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      work(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = work(r, col);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        work(r, j) -= f * work(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

IntervalMatrix inverse_enclosure(const Matrix& a) {
  const Matrix r_point = approximate_inverse(a);
  const std::size_t n = a.rows();
  const IntervalMatrix r = to_interval(r_point);
  const IntervalMatrix eye = IntervalMatrix::identity(n);
  const IntervalMatrix g = eye - mat_mul(r, to_interval(a));
  const double g_norm = inf_norm_bound(g);
  if (!(g_norm < 1.0)) throw SingularMatrixError("residual check failed: ||I - R A|| >= 1");
  // (I - G)^{-1} - I has infinity norm at most ||G|| / (1 - ||G||), so every
  // entry lies in [-beta, beta].
  const double beta = div_up(g_norm, sub_down(1.0, g_norm));
  IntervalMatrix x = r;
  {
    IntervalMatrix perturb(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) perturb(i, j) = Interval::symmetric(beta);
    x = mat_mul(eye + perturb, r);
  }
  for (int iter = 0; iter < 3; ++iter) {
    const IntervalMatrix k = r + mat_mul(g, x);
    x = intersect(k, x);
  }
  return x;
}

std::ostream& operator<<(std::ostream& os, const IntervalVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  return os << ')';
}

std::ostream& operator<<(std::ostream& os, const IntervalMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", " : "") << m.row(i);
  }
  return os << ']';
}

}  // namespace tangency
