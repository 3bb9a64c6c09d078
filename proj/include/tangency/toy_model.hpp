#ifndef TANGENCY_TOY_MODEL_HPP
#define TANGENCY_TOY_MODEL_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "tangency/cones.hpp"
#include "tangency/covering.hpp"
#include "tangency/hset.hpp"
#include "tangency/projective.hpp"

namespace tangency {

struct ToyModelParams {
  double lambda = 2.0;
  double mu = 0.5;
  double delta = 0.5;
  double epsilon = 0.01;

  // Throws ConfigError unless |lambda| > 1, |mu| < 1, 0 < delta < 1 and
  // epsilon is small and positive.
  void validate() const;
};

// (x, y) -> (lambda x, mu y) near the fixed point.
PlanarMapFamily toy_map_linear(const ToyModelParams& p);
// (1 + x, y) -> (x^2 + y + a, 1 - x) near (1, 0).
PlanarMapFamily toy_map_switch();

// Tangent directions in slope form: horizontal is [(1, s)], vertical [(s, 1)].
enum class SlopeChart { horizontal, vertical };

// Projectivized planar family on (x, y, s, a) with slope charts on both
// sides. Evaluation outside the declared planar domain throws DomainError.
class SlopeMap final : public VectorMap {
 public:
  SlopeMap(PlanarMapFamily family, SlopeChart source, SlopeChart target, Interval x_domain, Interval y_domain);

  [[nodiscard]] std::size_t dimension() const override { return 4; }
  [[nodiscard]] IntervalVector image(const IntervalVector& box) const override;
  [[nodiscard]] IntervalMatrix jacobian(const IntervalVector& box) const override;
  [[nodiscard]] std::string name() const override;

 private:
  [[nodiscard]] std::array<Jet2, 4> evaluate(const IntervalVector& box) const;

  PlanarMapFamily family_;
  SlopeChart source_;
  SlopeChart target_;
  Interval x_domain_;
  Interval y_domain_;
};

// Ratios of the form coefficients along the chain: beta_i = beta_ratio *
// beta_{i+1} on the N sets and D_{i-1} = d_ratio * D_i on the M sets, whose
// links run M_i => M_{i-1}. The a-entry of the cone matrix of a link is
// beta_{i+1} - beta_i resp. D_i - D_{i-1}, so the cone conditions need
// beta_ratio < 1 and d_ratio < 1. D = D_s enters the switch link.
struct ToyFormScheme {
  double alpha = 1.0;
  double beta = 0.25;
  double gamma = 4.0;
  double delta = 2.0;
  double A = 1.0;
  double B = 1.0;
  double C = 1.0;
  double D = 0.5;
  double beta_ratio = 0.9;
  double d_ratio = 0.9;
};

// N_0 .. N_k near the unstable end in (x, y, v, a), then M_s .. M_0 near the
// stable end in (x, y, w, a), with the map of every link.
struct ToyChain {
  ToyModelParams params;
  std::size_t k = 0;
  std::size_t s = 0;
  std::vector<HSet> sets;
  std::vector<QuadraticForm> forms;
  std::vector<std::shared_ptr<const VectorMap>> link_maps;  // sets[i] -> sets[i+1]
  std::size_t switch_link = 0;
  std::vector<std::string> notes;
};

ToyChain build_toy_chain(const ToyModelParams& params, std::size_t k, std::size_t s,
                         const ToyFormScheme& forms = {});

// The two 2x2 blocks of the switch cone matrix at x = 0 in closed form.
IntervalMatrix toy_switch_block_1(const ToyFormScheme& f);  // [[4B - C - alpha, 2B], [2B, B + delta]]
IntervalMatrix toy_switch_block_2(const ToyFormScheme& f);  // [[A - D - beta, A], [A, A + gamma]]

// det of [[1,0,1,0],[0,1,0,1],[0,0,g_a,0],[0,0,g_ta,g_tt]]; equals g_a g_tt.
Interval transversality_determinant(const Interval& g_a, const Interval& g_tt, const Interval& g_ta);

struct ToyReport {
  ChainResult chain;
  ConeChainResult linear_cones;  // all links except the switch
  // Switch cone at x = 0 from the map derivative, and its two blocks.
  DefinitenessResult switch_cone_at_center;
  DefinitenessResult switch_block_1;
  DefinitenessResult switch_block_2;
  // Largest certified half-width in x around the switch center on which the
  // full switch cone matrix stays positive definite (bisection).
  double switch_cone_radius = 0.0;
  // det - g_a g_tt over sampled triples.
  std::size_t determinant_samples = 0;
  std::size_t determinant_failures = 0;
  bool passed = false;
  std::vector<std::string> notes;
};

// Cone conditions of every link except the switch.
ConeChainResult toy_linear_cones(const ToyChain& chain, std::size_t threads = 1);

ToyReport check_toy(const ToyModelParams& params, std::size_t k = 3, std::size_t s = 3,
                    std::size_t determinant_samples = 1000, std::size_t threads = 1,
                    const ToyFormScheme& scheme = {});

}  // namespace tangency

#endif  // TANGENCY_TOY_MODEL_HPP
