#ifndef TANGENCY_VECTOR_MAP_HPP
#define TANGENCY_VECTOR_MAP_HPP

#include <cstddef>
#include <memory>
#include <string>

#include "tangency/linalg.hpp"

namespace tangency {

// A C^1 map R^n -> R^n evaluated on boxes. Both calls must return sound
// enclosures over the whole input box.
class VectorMap {
 public:
  virtual ~VectorMap() = default;
  [[nodiscard]] virtual std::size_t dimension() const = 0;
  [[nodiscard]] virtual IntervalVector image(const IntervalVector& box) const = 0;
  [[nodiscard]] virtual IntervalMatrix jacobian(const IntervalVector& box) const = 0;
  [[nodiscard]] virtual std::string name() const = 0;
};

// Restriction of an (n+1)-dimensional map whose last coordinate is an
// invariant parameter to the first n coordinates, with the parameter ranging
// over a fixed interval.
class FixedParameterMap final : public VectorMap {
 public:
  FixedParameterMap(std::shared_ptr<const VectorMap> full, const Interval& parameter);

  [[nodiscard]] std::size_t dimension() const override { return full_->dimension() - 1; }
  [[nodiscard]] IntervalVector image(const IntervalVector& box) const override;
  [[nodiscard]] IntervalMatrix jacobian(const IntervalVector& box) const override;
  [[nodiscard]] std::string name() const override;

  [[nodiscard]] const Interval& parameter() const noexcept { return parameter_; }

 private:
  [[nodiscard]] IntervalVector extend(const IntervalVector& box) const;

  std::shared_ptr<const VectorMap> full_;
  Interval parameter_;
};

}  // namespace tangency

#endif  // TANGENCY_VECTOR_MAP_HPP
