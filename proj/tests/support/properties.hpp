#ifndef TANGENCY_TESTS_PROPERTIES_HPP
#define TANGENCY_TESTS_PROPERTIES_HPP

#include <cstddef>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "tangency/interval.hpp"

namespace tangency::testing {

using Rational = boost::multiprecision::cpp_rational;
using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<50>,
                                           boost::multiprecision::et_off>;

// Exact containment tests against the oracles.
bool encloses(const Interval& x, const Rational& v);
bool encloses(const Interval& x, const Real& v);

struct SuiteResult {
  std::size_t checks = 0;
  std::size_t violations = 0;
  std::string first_violation;

  [[nodiscard]] bool passed() const { return checks > 0 && violations == 0; }
  void fail(const std::string& what);
};

// Point soundness of + - * / sqr sqrt sin cos atan on `samples` random
// point pairs: the exact result (rational, or 50 digits for the elementary
// functions) and the rounded binary64 result lie in the interval result.
SuiteResult interval_point_soundness(std::size_t samples, std::uint64_t seed);

// op(X, Y) is contained in op(X', Y') for random nested X in X', Y in Y'.
SuiteResult interval_monotonicity(std::size_t samples, std::uint64_t seed);

// Gradients and Hessians of a 50-expression corpus against central finite
// differences in 50-digit arithmetic, at `points` random points each.
SuiteResult jet_finite_difference_corpus(std::size_t points, std::uint64_t seed);
inline constexpr std::size_t kJetCorpusSize = 50;

// Random symmetric 2x2 and 3x3 interval matrices: when the vertex criterion
// certifies positive definiteness, no sampled point matrix has a
// non-positive smallest eigenvalue; when it fails with a vertex whose
// smallest eigenvalue is clearly negative, that vertex is an indefinite
// sample. A clearly positive definite set that is not certified also counts
// as a violation.
struct RumpSuiteResult : SuiteResult {
  std::size_t certified = 0;
  std::size_t rejected = 0;
};
RumpSuiteResult rump_eigenvalue_sampling(std::size_t matrices, std::uint64_t seed);

// det4 of the transversality matrix minus g_a g_tt encloses 0.
SuiteResult transversality_identity(std::size_t samples, std::uint64_t seed);

}  // namespace tangency::testing

#endif  // TANGENCY_TESTS_PROPERTIES_HPP
