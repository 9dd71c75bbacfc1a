#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "core/errors.hpp"

namespace lux {

using complex = std::complex<double>;

// Finite atomic measure space: a list of sample points with strictly positive
// weights. Every integral in the toolkit is a finite weighted sum over these
// atoms, taken in ascending atom order so results reproduce bit for bit.
class MeasureSpace {
public:
  MeasureSpace(int dim, std::vector<double> coords, std::vector<double> weights);

  // Midpoint grid on [0,1]: atoms (j + 1/2)/n with weight 1/n each.
  static std::shared_ptr<const MeasureSpace> unit_interval(std::size_t n_atoms);

  // Uniform grid on the n-torus: atoms j/N per coordinate (lexicographic over
  // multi-indices), weight N^{-dim} each. Total mass is exactly 1.
  static std::shared_ptr<const MeasureSpace> torus(int dim, int points_per_dim);

  int dim() const { return dim_; }
  std::size_t size() const { return weights_.size(); }
  double weight(std::size_t j) const { return weights_[j]; }
  const std::vector<double>& weights() const { return weights_; }
  std::span<const double> point(std::size_t j) const {
    return {coords_.data() + static_cast<std::size_t>(dim_) * j,
            static_cast<std::size_t>(dim_)};
  }
  const std::vector<double>& coords() const { return coords_; }
  double total_mass() const { return total_mass_; }

private:
  int dim_;
  std::vector<double> coords_;  // row-major, size() * dim entries
  std::vector<double> weights_;
  double total_mass_;
};

using SpacePtr = std::shared_ptr<const MeasureSpace>;

// True when both handles denote the same atoms and weights (shared object, or
// structurally identical).
bool same_space(const MeasureSpace& a, const MeasureSpace& b);
void require_same_space(const MeasureSpace& a, const MeasureSpace& b,
                        const char* what);

// Complex-valued function known by its values at the atoms.
class GridFunction {
public:
  GridFunction(SpacePtr space, std::vector<complex> values);

  static GridFunction constant(SpacePtr space, complex value);
  static GridFunction from_real(SpacePtr space, const std::vector<double>& values);

  template <class F>
  static GridFunction sample(SpacePtr space, F&& fn) {
    std::vector<complex> v(space->size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = complex(fn(space->point(j)));
    return GridFunction(std::move(space), std::move(v));
  }

  const SpacePtr& space() const { return space_; }
  const std::vector<complex>& values() const { return values_; }
  complex value(std::size_t j) const { return values_[j]; }
  std::size_t size() const { return values_.size(); }

  double max_abs() const;
  bool is_zero() const;

private:
  SpacePtr space_;
  std::vector<complex> values_;
};

// ∫ f dμ = Σ_j w_j f_j, ascending atom order.
complex integrate(const GridFunction& f);

// Bilinear pairing ⟨f, g⟩ = ∫ f·g dμ (no conjugation).
complex duality_pairing(const GridFunction& f, const GridFunction& g);

// Finite measurable partition: disjoint nonempty atom-index cells covering the
// space. Cell order is part of the value; indices inside a cell are ascending.
class Partition {
public:
  Partition(SpacePtr space, std::vector<std::vector<std::size_t>> cells);

  static Partition trivial(SpacePtr space);
  // Splits along one coordinate axis into k equal intervals of [0,1); cells
  // that catch no atom are dropped.
  static Partition equal_intervals(SpacePtr space, int k, int axis = 0);
  // Groups atoms by exactly equal function value.
  static Partition level_sets(const GridFunction& f);

  const SpacePtr& space() const { return space_; }
  std::size_t cell_count() const { return cells_.size(); }
  const std::vector<std::size_t>& cell(std::size_t k) const { return cells_[k]; }
  // Atom index -> cell index.
  const std::vector<std::size_t>& cell_of() const { return cell_of_; }
  double cell_mass(std::size_t k) const { return masses_[k]; }
  const std::vector<double>& cell_masses() const { return masses_; }

private:
  SpacePtr space_;
  std::vector<std::vector<std::size_t>> cells_;
  std::vector<std::size_t> cell_of_;
  std::vector<double> masses_;
};

// True iff every cell of `coarse` is a union of cells of `fine`.
bool partition_refines(const Partition& coarse, const Partition& fine);

// All nonempty pairwise intersections, ordered by (cell index in a, cell index
// in b). Refines both inputs.
Partition common_refinement(const Partition& a, const Partition& b);

}  // namespace lux
