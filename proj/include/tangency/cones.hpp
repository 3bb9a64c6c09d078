#ifndef TANGENCY_CONES_HPP
#define TANGENCY_CONES_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "tangency/hset.hpp"
#include "tangency/vector_map.hpp"

namespace tangency {

// Outcome of an interval Cholesky factorization.
struct CholeskyResult {
  bool success = false;
  // Pivot enclosures a_jj - sum_k l_jk^2, up to the first one that is not
  // certainly positive.
  std::vector<Interval> pivots;
  // Lower bound of the smallest pivot (<= 0 on failure).
  double min_pivot = 0.0;
};

// Interval Cholesky on a symmetric interval matrix. Success certifies that
// every symmetric point matrix in it is positive definite.
CholeskyResult interval_cholesky(const IntervalMatrix& a);

struct VertexCheck {
  std::vector<int> signs;
  CholeskyResult cholesky;
};

struct DefinitenessResult {
  bool positive_definite = false;
  Matrix center;
  Matrix radius;
  std::vector<VertexCheck> vertices;
  // Smallest certified pivot over all vertices.
  double margin = 0.0;
};

// Positive definiteness of every symmetric matrix in [A_c - A_0, A_c + A_0]
// through the 2^(n-1) vertex matrices A_c - diag(z) A_0 diag(z), z_0 = +1
// (Rump). The input must be symmetric.
DefinitenessResult rump_positive_definite(const IntervalMatrix& a);

// Symmetrized enclosure of D^T Q_M D - Q_N over the set, where D is the
// derivative of the map in local coordinates of source and target.
IntervalMatrix cone_matrix(const HSet& src, const QuadraticForm& qn, const HSet& tgt, const QuadraticForm& qm,
                           const VectorMap& map);

// Derivative of the map over the whole source set in local coordinates:
// inv_coord_tgt DF(N) coord_src.
IntervalMatrix local_derivative(const HSet& src, const HSet& tgt, const VectorMap& map);

struct ConeCertificate {
  std::string source;
  std::string target;
  bool passed = false;
  IntervalMatrix matrix;
  DefinitenessResult definiteness;
  std::string failure;
};

// Cone condition for N => M with forms Q_N, Q_M: D^T Q_M D - Q_N > 0 over N.
ConeCertificate check_cone(const HSet& src, const QuadraticForm& qn, const HSet& tgt, const QuadraticForm& qm,
                           const VectorMap& map);

struct ConeLink {
  const HSet* source = nullptr;
  const QuadraticForm* source_form = nullptr;
  const HSet* target = nullptr;
  const QuadraticForm* target_form = nullptr;
  std::shared_ptr<const VectorMap> map;
};

struct ConeChainResult {
  std::vector<ConeCertificate> certificates;
  bool passed = false;
};

ConeChainResult check_cone_chain(const std::vector<ConeLink>& links, std::size_t threads = 1);

}  // namespace tangency

#endif  // TANGENCY_CONES_HPP
