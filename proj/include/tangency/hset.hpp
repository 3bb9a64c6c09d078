#ifndef TANGENCY_HSET_HPP
#define TANGENCY_HSET_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "tangency/interval.hpp"
#include "tangency/linalg.hpp"

namespace tangency {

using Grid = std::vector<std::size_t>;

// Diagonal quadratic form Q(z) = sum_i coeffs[i] z_i^2 in the local
// (un-normalized) coordinates of an h-set.
class QuadraticForm {
 public:
  QuadraticForm() = default;
  explicit QuadraticForm(std::vector<double> coeffs);

  [[nodiscard]] std::size_t size() const noexcept { return coeffs_.size(); }
  [[nodiscard]] const std::vector<double>& coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] double operator[](std::size_t i) const { return coeffs_[i]; }

  // Enclosure of Q(z).
  [[nodiscard]] Interval value(const IntervalVector& z) const;
  // diag(coeffs) as an interval matrix.
  [[nodiscard]] IntervalMatrix matrix() const;
  // Operator norms of the positive part alpha and of beta, where Q = alpha - beta.
  [[nodiscard]] double alpha_norm() const;
  [[nodiscard]] double beta_norm() const;
  [[nodiscard]] std::vector<std::size_t> positive_axes() const;
  [[nodiscard]] std::vector<std::size_t> negative_axes() const;

  // Form restricted to the listed axes.
  [[nodiscard]] QuadraticForm restricted(const std::vector<std::size_t>& axes) const;
  [[nodiscard]] QuadraticForm negated() const;

 private:
  std::vector<double> coeffs_;
};

// Free-function spelling of QuadraticForm::value.
Interval local_q_value(const QuadraticForm& q, const IntervalVector& z);

// Parallelepiped N = center + coord_matrix * (diameters . [-1, 1]^n) with a
// split of the local axes into unstable (exit) and stable (entry) ones.
class HSet {
 public:
  HSet() = default;
  HSet(std::string name, Vector center, Matrix coord_matrix, Vector diameters,
       std::vector<std::size_t> unstable_axes);

  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  [[nodiscard]] std::size_t dimension() const noexcept { return center_.size(); }
  [[nodiscard]] const Vector& center() const noexcept { return center_; }
  [[nodiscard]] const Matrix& coord_matrix() const noexcept { return coord_; }
  [[nodiscard]] const IntervalMatrix& inv_coord() const noexcept { return inv_coord_; }
  [[nodiscard]] const Vector& diameters() const noexcept { return diameters_; }
  [[nodiscard]] const std::vector<std::size_t>& unstable_axes() const noexcept { return unstable_; }
  [[nodiscard]] const std::vector<std::size_t>& stable_axes() const noexcept { return stable_; }
  [[nodiscard]] bool is_unstable(std::size_t axis) const;

  // Local un-normalized coordinates: inv_coord (p - center).
  [[nodiscard]] IntervalVector to_local(const IntervalVector& p) const;
  // Normalized coordinates: diameters^{-1} . to_local(p). Points whose
  // enclosure lies in [-1, 1]^n are certified members of the set.
  [[nodiscard]] IntervalVector to_normalized(const IntervalVector& p) const;
  [[nodiscard]] IntervalVector from_local(const IntervalVector& z) const;
  [[nodiscard]] IntervalVector from_normalized(const IntervalVector& z) const;
  // Interval hull of the whole set in ambient coordinates.
  [[nodiscard]] IntervalVector hull() const;
  [[nodiscard]] bool certainly_contains(const IntervalVector& p) const;

  // Cover of the face {z_axis = side} of [-1, 1]^n by grid[j] equal pieces
  // along every other axis j. The axis must be unstable; side is +1 or -1.
  [[nodiscard]] std::vector<IntervalVector> walls(std::size_t axis, int side, const Grid& grid) const;
  // Cover of [-1, 1]^n by grid[j] pieces along each axis.
  [[nodiscard]] std::vector<IntervalVector> pieces(const Grid& grid) const;

  // The set spanned by the listed local axes, with the coordinate matrix
  // restricted to the same rows and columns.
  [[nodiscard]] HSet restricted(const std::vector<std::size_t>& axes, std::string name) const;

  // Throws ConfigError unless q is positive on unstable and negative on
  // stable axes.
  void require_compatible(const QuadraticForm& q) const;

 private:
  std::string name_;
  Vector center_;
  Matrix coord_;
  IntervalMatrix inv_coord_;
  Vector diameters_;
  std::vector<std::size_t> unstable_;
  std::vector<std::size_t> stable_;
};

// Cover of [-1, 1] by `count` closed pieces of equal width.
std::vector<Interval> split_unit(std::size_t count);

}  // namespace tangency

#endif  // TANGENCY_HSET_HPP
