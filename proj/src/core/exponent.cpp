#include "core/exponent.hpp"

#include <cmath>
#include <utility>

namespace lux {

VariableExponent::VariableExponent(SpacePtr space, std::vector<double> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (!space_) throw invalid_argument("variable exponent needs a measure space");
  if (values_.size() != space_->size())
    throw invalid_argument("exponent value count does not match atom count");
  p_minus_ = exponent_infinity;
  p_plus_ = 1.0;
  for (double p : values_) {
    if (std::isnan(p) || p < 1.0)
      throw invalid_argument("exponent values must lie in [1, inf]");
    p_minus_ = std::min(p_minus_, p);
    p_plus_ = std::max(p_plus_, p);
  }
}

VariableExponent VariableExponent::constant(SpacePtr space, double p0) {
  if (!space) throw invalid_argument("variable exponent needs a measure space");
  std::vector<double> v(space->size(), p0);
  return VariableExponent(std::move(space), std::move(v));
}

VariableExponent VariableExponent::piecewise(const Partition& cells,
                                             const std::vector<double>& cell_values) {
  if (cell_values.size() != cells.cell_count())
    throw invalid_argument("piecewise exponent needs one value per cell");
  std::vector<double> v(cells.space()->size());
  for (std::size_t k = 0; k < cells.cell_count(); ++k)
    for (std::size_t j : cells.cell(k)) v[j] = cell_values[k];
  return VariableExponent(cells.space(), std::move(v));
}

VariableExponent VariableExponent::conjugate() const {
  std::vector<double> v(values_.size());
  for (std::size_t j = 0; j < values_.size(); ++j) {
    const double p = values_[j];
    if (p == 1.0)
      v[j] = exponent_infinity;
    else if (p == exponent_infinity)
      v[j] = 1.0;
    else
      v[j] = p / (p - 1.0);
  }
  return VariableExponent(space_, std::move(v));
}

namespace {
double reciprocal(double p) { return p == exponent_infinity ? 0.0 : 1.0 / p; }
}  // namespace

bool holder_triple_valid(const VariableExponent& s, const VariableExponent& p,
                         const VariableExponent& q, double tol) {
  require_same_space(*s.space(), *p.space(), "holder_triple_valid");
  require_same_space(*s.space(), *q.space(), "holder_triple_valid");
  if (!(tol >= 0.0)) throw invalid_argument("holder_triple_valid needs tol >= 0");
  for (std::size_t j = 0; j < s.size(); ++j) {
    const double gap =
        std::abs(reciprocal(s.value(j)) - reciprocal(p.value(j)) - reciprocal(q.value(j)));
    if (gap > tol) return false;
  }
  return true;
}

}  // namespace lux
