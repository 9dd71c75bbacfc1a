#include "core/measure.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "core/parallel.hpp"

namespace lux {

MeasureSpace::MeasureSpace(int dim, std::vector<double> coords,
                           std::vector<double> weights)
    : dim_(dim), coords_(std::move(coords)), weights_(std::move(weights)) {
  if (dim_ < 1) throw invalid_argument("measure space dimension must be >= 1");
  if (weights_.empty()) throw invalid_argument("measure space needs at least one atom");
  if (coords_.size() != weights_.size() * static_cast<std::size_t>(dim_))
    throw invalid_argument("coordinate array size does not match atom count * dim");
  for (double c : coords_)
    if (!std::isfinite(c)) throw invalid_argument("atom coordinates must be finite");
  total_mass_ = 0.0;
  for (double w : weights_) {
    if (!(w > 0.0) || !std::isfinite(w))
      throw invalid_argument("atom weights must be finite and > 0");
    total_mass_ += w;
  }
  if (!std::isfinite(total_mass_) || total_mass_ <= 0.0)
    throw invalid_argument("total mass must be finite and > 0");
}

SpacePtr MeasureSpace::unit_interval(std::size_t n_atoms) {
  if (n_atoms == 0) throw invalid_argument("unit interval grid needs >= 1 atom");
  std::vector<double> coords(n_atoms), weights(n_atoms, 1.0 / static_cast<double>(n_atoms));
  for (std::size_t j = 0; j < n_atoms; ++j)
    coords[j] = (static_cast<double>(j) + 0.5) / static_cast<double>(n_atoms);
  return std::make_shared<const MeasureSpace>(1, std::move(coords), std::move(weights));
}

SpacePtr MeasureSpace::torus(int dim, int points_per_dim) {
  if (dim < 1) throw invalid_argument("torus dimension must be >= 1");
  if (points_per_dim < 1) throw invalid_argument("torus grid needs >= 1 point per dimension");
  double atoms_d = 1.0;
  for (int d = 0; d < dim; ++d) atoms_d *= points_per_dim;
  if (atoms_d > 1.0e7) throw invalid_argument("torus grid too large");
  const std::size_t atoms = static_cast<std::size_t>(atoms_d);
  const double n = static_cast<double>(points_per_dim);
  std::vector<double> coords(atoms * static_cast<std::size_t>(dim));
  std::vector<double> weights(atoms, std::pow(n, -dim));
  std::vector<int> idx(static_cast<std::size_t>(dim), 0);
  for (std::size_t j = 0; j < atoms; ++j) {
    for (int d = 0; d < dim; ++d)
      coords[j * static_cast<std::size_t>(dim) + static_cast<std::size_t>(d)] =
          static_cast<double>(idx[static_cast<std::size_t>(d)]) / n;
    for (int d = dim - 1; d >= 0; --d) {
      if (++idx[static_cast<std::size_t>(d)] < points_per_dim) break;
      idx[static_cast<std::size_t>(d)] = 0;
    }
  }
  return std::make_shared<const MeasureSpace>(dim, std::move(coords), std::move(weights));
}

bool same_space(const MeasureSpace& a, const MeasureSpace& b) {
  if (&a == &b) return true;
  return a.dim() == b.dim() && a.size() == b.size() && a.coords() == b.coords() &&
         a.weights() == b.weights();
}

void require_same_space(const MeasureSpace& a, const MeasureSpace& b, const char* what) {
  if (!same_space(a, b))
    throw domain_mismatch(std::string(what) + ": operands live on different measure spaces");
}

GridFunction::GridFunction(SpacePtr space, std::vector<complex> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (!space_) throw invalid_argument("grid function needs a measure space");
  if (values_.size() != space_->size())
    throw invalid_argument("grid function value count does not match atom count");
  for (const complex& v : values_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw invalid_argument("grid function values must be finite");
}

GridFunction GridFunction::constant(SpacePtr space, complex value) {
  if (!space) throw invalid_argument("grid function needs a measure space");
  std::vector<complex> v(space->size(), value);
  return GridFunction(std::move(space), std::move(v));
}

GridFunction GridFunction::from_real(SpacePtr space, const std::vector<double>& values) {
  std::vector<complex> v(values.begin(), values.end());
  return GridFunction(std::move(space), std::move(v));
}

double GridFunction::max_abs() const {
  double m = 0.0;
  for (const complex& v : values_) m = std::max(m, std::abs(v));
  return m;
}

bool GridFunction::is_zero() const {
  for (const complex& v : values_)
    if (v != complex(0.0, 0.0)) return false;
  return true;
}

complex integrate(const GridFunction& f) {
  const MeasureSpace& sp = *f.space();
  return chunked_sum<complex>(sp.size(),
                              [&](std::size_t j) { return sp.weight(j) * f.value(j); });
}

complex duality_pairing(const GridFunction& f, const GridFunction& g) {
  require_same_space(*f.space(), *g.space(), "duality_pairing");
  const MeasureSpace& sp = *f.space();
  return chunked_sum<complex>(
      sp.size(), [&](std::size_t j) { return sp.weight(j) * (f.value(j) * g.value(j)); });
}

Partition::Partition(SpacePtr space, std::vector<std::vector<std::size_t>> cells)
    : space_(std::move(space)), cells_(std::move(cells)) {
  if (!space_) throw invalid_argument("partition needs a measure space");
  if (cells_.empty()) throw invalid_argument("partition needs at least one cell");
  const std::size_t atoms = space_->size();
  cell_of_.assign(atoms, static_cast<std::size_t>(-1));
  masses_.assign(cells_.size(), 0.0);
  for (std::size_t k = 0; k < cells_.size(); ++k) {
    auto& cell = cells_[k];
    if (cell.empty()) throw invalid_argument("partition cells must be nonempty");
    std::sort(cell.begin(), cell.end());
    for (std::size_t j : cell) {
      if (j >= atoms) throw invalid_argument("partition cell index out of range");
      if (cell_of_[j] != static_cast<std::size_t>(-1))
        throw invalid_argument("partition cells must be disjoint");
      cell_of_[j] = k;
      masses_[k] += space_->weight(j);
    }
  }
  for (std::size_t j = 0; j < atoms; ++j)
    if (cell_of_[j] == static_cast<std::size_t>(-1))
      throw invalid_argument("partition cells must cover every atom");
}

Partition Partition::trivial(SpacePtr space) {
  if (!space) throw invalid_argument("partition needs a measure space");
  std::vector<std::size_t> all(space->size());
  for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
  return Partition(std::move(space), {std::move(all)});
}

Partition Partition::equal_intervals(SpacePtr space, int k, int axis) {
  if (!space) throw invalid_argument("partition needs a measure space");
  if (k < 1) throw invalid_argument("equal_intervals needs k >= 1");
  if (axis < 0 || axis >= space->dim())
    throw invalid_argument("equal_intervals axis out of range");
  std::vector<std::vector<std::size_t>> buckets(static_cast<std::size_t>(k));
  for (std::size_t j = 0; j < space->size(); ++j) {
    const double x = space->point(j)[static_cast<std::size_t>(axis)];
    long long c = static_cast<long long>(std::floor(x * k));
    c = std::clamp(c, 0ll, static_cast<long long>(k - 1));
    buckets[static_cast<std::size_t>(c)].push_back(j);
  }
  std::vector<std::vector<std::size_t>> cells;
  for (auto& b : buckets)
    if (!b.empty()) cells.push_back(std::move(b));
  return Partition(std::move(space), std::move(cells));
}

Partition Partition::level_sets(const GridFunction& f) {
  std::map<std::pair<double, double>, std::size_t> seen;
  std::vector<std::vector<std::size_t>> cells;
  for (std::size_t j = 0; j < f.size(); ++j) {
    const complex v = f.value(j);
    const auto key = std::make_pair(v.real(), v.imag());
    auto it = seen.find(key);
    if (it == seen.end()) {
      it = seen.emplace(key, cells.size()).first;
      cells.emplace_back();
    }
    cells[it->second].push_back(j);
  }
  return Partition(f.space(), std::move(cells));
}

bool partition_refines(const Partition& coarse, const Partition& fine) {
  require_same_space(*coarse.space(), *fine.space(), "partition_refines");
  // Both cover the space, so "each coarse cell is a union of fine cells" is
  // equivalent to "each fine cell sits inside a single coarse cell".
  for (std::size_t k = 0; k < fine.cell_count(); ++k) {
    const auto& cell = fine.cell(k);
    const std::size_t owner = coarse.cell_of()[cell.front()];
    for (std::size_t j : cell)
      if (coarse.cell_of()[j] != owner) return false;
  }
  return true;
}

Partition common_refinement(const Partition& a, const Partition& b) {
  require_same_space(*a.space(), *b.space(), "common_refinement");
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> groups;
  for (std::size_t j = 0; j < a.space()->size(); ++j)
    groups[{a.cell_of()[j], b.cell_of()[j]}].push_back(j);
  std::vector<std::vector<std::size_t>> cells;
  cells.reserve(groups.size());
  for (auto& [key, atoms] : groups) cells.push_back(std::move(atoms));
  return Partition(a.space(), std::move(cells));
}

}  // namespace lux
