#pragma once

#include <limits>
#include <vector>

#include "core/measure.hpp"

namespace lux {

// The value used to encode an unbounded exponent at an atom.
inline constexpr double exponent_infinity = std::numeric_limits<double>::infinity();

// Measurable exponent p(·) with values in [1, ∞], one value per atom.
// Unbounded atoms carry essential-supremum semantics in the norm module.
class VariableExponent {
public:
  VariableExponent(SpacePtr space, std::vector<double> values);

  static VariableExponent constant(SpacePtr space, double p0);
  // Constant on every cell of the partition.
  static VariableExponent piecewise(const Partition& cells,
                                    const std::vector<double>& cell_values);

  const SpacePtr& space() const { return space_; }
  const std::vector<double>& values() const { return values_; }
  double value(std::size_t j) const { return values_[j]; }
  std::size_t size() const { return values_.size(); }

  double p_minus() const { return p_minus_; }
  double p_plus() const { return p_plus_; }
  bool bounded() const { return p_plus_ < exponent_infinity; }

  // Pointwise conjugate: 1/p + 1/p' = 1 with the conventions 1 ↔ ∞.
  VariableExponent conjugate() const;

private:
  SpacePtr space_;
  std::vector<double> values_;
  double p_minus_;
  double p_plus_;
};

// True iff |1/s - 1/p - 1/q| <= tol at every atom, with 1/∞ read as 0.
bool holder_triple_valid(const VariableExponent& s, const VariableExponent& p,
                         const VariableExponent& q, double tol);

}  // namespace lux
