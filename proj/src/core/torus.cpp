#include "core/torus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "core/norms.hpp"
#include "core/parallel.hpp"

namespace lux {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<complex> unit_roots(int n) {
  std::vector<complex> w(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    w[static_cast<std::size_t>(k)] = std::polar(1.0, kTwoPi * k / n);
  return w;
}

// (Σ_d a_d b_d) mod n, mapped into [0, n).
int phase_mod(std::span<const int> a, std::span<const int> b, int n) {
  long long s = 0;
  for (std::size_t d = 0; d < a.size(); ++d)
    s += static_cast<long long>(a[d]) * b[d];
  const long long m = s % n;
  return static_cast<int>(m < 0 ? m + n : m);
}

}  // namespace

TorusGrid::TorusGrid(int dim, int points_per_dim)
    : dim_(dim), n_(points_per_dim), space_(MeasureSpace::torus(dim, points_per_dim)) {
  indices_.resize(space_->size() * static_cast<std::size_t>(dim_));
  std::vector<int> idx(static_cast<std::size_t>(dim_), 0);
  for (std::size_t j = 0; j < space_->size(); ++j) {
    for (int d = 0; d < dim_; ++d)
      indices_[j * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(d)] =
          idx[static_cast<std::size_t>(d)];
    for (int d = dim_ - 1; d >= 0; --d) {
      if (++idx[static_cast<std::size_t>(d)] < n_) break;
      idx[static_cast<std::size_t>(d)] = 0;
    }
  }
}

FrequencyBox::FrequencyBox(int dim, int radius) : dim_(dim), radius_(radius) {
  if (dim_ < 1) throw invalid_argument("frequency box dimension must be >= 1");
  if (radius_ < 0) throw invalid_argument("frequency box radius must be >= 0");
  const int side = 2 * radius_ + 1;
  double size_d = 1.0;
  for (int d = 0; d < dim_; ++d) size_d *= side;
  if (size_d > 2.0e7) throw invalid_argument("frequency box too large");
  size_ = static_cast<std::size_t>(size_d);
  points_.resize(size_ * static_cast<std::size_t>(dim_));
  std::vector<int> xi(static_cast<std::size_t>(dim_), -radius_);
  for (std::size_t k = 0; k < size_; ++k) {
    for (int d = 0; d < dim_; ++d)
      points_[k * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(d)] =
          xi[static_cast<std::size_t>(d)];
    for (int d = dim_ - 1; d >= 0; --d) {
      if (++xi[static_cast<std::size_t>(d)] <= radius_) break;
      xi[static_cast<std::size_t>(d)] = -radius_;
    }
  }
}

int FrequencyBox::max_norm(std::size_t k) const {
  int m = 0;
  for (int c : point(k)) m = std::max(m, std::abs(c));
  return m;
}

double FrequencyBox::euclid_sq(std::size_t k) const {
  double s = 0.0;
  for (int c : point(k)) s += static_cast<double>(c) * c;
  return s;
}

bool aliasing_free(const TorusGrid& grid, const FrequencyBox& box) {
  return grid.dim() == box.dim() && grid.points_per_dim() >= 2 * box.radius() + 1;
}

void require_aliasing_free(const TorusGrid& grid, const FrequencyBox& box,
                           const char* what) {
  if (grid.dim() != box.dim())
    throw domain_mismatch(std::string(what) + ": grid and frequency box dimensions differ");
  if (grid.points_per_dim() < 2 * box.radius() + 1)
    throw precondition_failed(std::string(what) +
                              ": grid needs N >= 2*radius+1 points per dimension");
}

ToroidalSymbol::ToroidalSymbol(TorusGrid grid, FrequencyBox box, Eigen::MatrixXcd table,
                               bool multiplier, std::optional<double> bessel_tau)
    : grid_(std::move(grid)),
      box_(std::move(box)),
      table_(std::move(table)),
      multiplier_(multiplier),
      tau_(bessel_tau) {
  if (grid_.dim() != box_.dim())
    throw domain_mismatch("symbol grid and frequency box dimensions differ");
  if (table_.rows() != static_cast<Eigen::Index>(grid_.atoms()) ||
      table_.cols() != static_cast<Eigen::Index>(box_.size()))
    throw invalid_argument("symbol table shape does not match grid * box");
  if (!table_.allFinite()) throw invalid_argument("symbol table values must be finite");
  if (multiplier_) {
    for (Eigen::Index c = 0; c < table_.cols(); ++c)
      for (Eigen::Index a = 1; a < table_.rows(); ++a)
        if (table_(a, c) != table_(0, c))
          throw invalid_argument("multiplier symbol must be x-independent");
  }
}

ToroidalSymbol ToroidalSymbol::multiplier_symbol(const TorusGrid& grid,
                                                 const FrequencyBox& box,
                                                 const std::vector<complex>& values) {
  if (values.size() != box.size())
    throw invalid_argument("multiplier symbol needs one value per lattice point");
  Eigen::MatrixXcd table(static_cast<Eigen::Index>(grid.atoms()),
                         static_cast<Eigen::Index>(box.size()));
  for (Eigen::Index c = 0; c < table.cols(); ++c)
    table.col(c).setConstant(values[static_cast<std::size_t>(c)]);
  return ToroidalSymbol(grid, box, std::move(table), true);
}

ToroidalSymbol ToroidalSymbol::bessel(double tau, const TorusGrid& grid,
                                      const FrequencyBox& box) {
  if (!(tau > 0.0)) throw invalid_argument("bessel symbol needs tau > 0");
  std::vector<complex> values(box.size());
  for (std::size_t k = 0; k < box.size(); ++k)
    values[k] = std::pow(1.0 + kTwoPi * kTwoPi * box.euclid_sq(k), -tau / 2.0);
  ToroidalSymbol sym = multiplier_symbol(grid, box, values);
  sym.tau_ = tau;
  return sym;
}

std::vector<complex> dft_forward(const TorusGrid& grid, const FrequencyBox& box,
                                 const GridFunction& f) {
  require_aliasing_free(grid, box, "dft_forward");
  require_same_space(*f.space(), *grid.space(), "dft_forward");
  const auto omega = unit_roots(grid.points_per_dim());
  const int n = grid.points_per_dim();
  std::vector<complex> coeffs(box.size());
  for (std::size_t k = 0; k < box.size(); ++k) {
    const auto xi = box.point(k);
    coeffs[k] = chunked_sum<complex>(grid.atoms(), [&](std::size_t j) {
      const int idx = phase_mod(grid.index(j), xi, n);
      // e^{-2πi x·ξ} is the conjugate root of unity.
      return grid.space()->weight(j) * std::conj(omega[static_cast<std::size_t>(idx)]) *
             f.value(j);
    });
  }
  return coeffs;
}

GridFunction dft_inverse(const TorusGrid& grid, const FrequencyBox& box,
                         const std::vector<complex>& coeffs) {
  require_aliasing_free(grid, box, "dft_inverse");
  if (coeffs.size() != box.size())
    throw invalid_argument("dft_inverse needs one coefficient per lattice point");
  const auto omega = unit_roots(grid.points_per_dim());
  const int n = grid.points_per_dim();
  std::vector<complex> values(grid.atoms());
  detail::for_each_chunk((grid.atoms() + 255) / 256, [&](std::size_t c) {
    const std::size_t lo = c * 256, hi = std::min(grid.atoms(), lo + 256);
    for (std::size_t j = lo; j < hi; ++j) {
      complex acc(0.0, 0.0);
      for (std::size_t k = 0; k < box.size(); ++k) {
        const int idx = phase_mod(grid.index(j), box.point(k), n);
        acc += omega[static_cast<std::size_t>(idx)] * coeffs[k];
      }
      values[j] = acc;
    }
  });
  return GridFunction(grid.space(), std::move(values));
}

Eigen::MatrixXcd quantize(const ToroidalSymbol& sigma) {
  const TorusGrid& grid = sigma.grid();
  const FrequencyBox& box = sigma.box();
  require_aliasing_free(grid, box, "quantize");
  const std::size_t atoms = grid.atoms();
  const double work = static_cast<double>(atoms) * atoms * box.size();
  if (work > 4.0e9) throw invalid_argument("quantization size exceeds desk scale");
  const auto omega = unit_roots(grid.points_per_dim());
  const int n = grid.points_per_dim();
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(atoms), static_cast<Eigen::Index>(atoms));
  const double inv_mass = 1.0 / std::pow(static_cast<double>(n), grid.dim());
  detail::for_each_chunk(atoms, [&](std::size_t i) {
    std::vector<int> d(static_cast<std::size_t>(grid.dim()));
    const auto xi_i = grid.index(i);
    for (std::size_t j = 0; j < atoms; ++j) {
      const auto xi_j = grid.index(j);
      for (std::size_t t = 0; t < d.size(); ++t) d[t] = xi_i[t] - xi_j[t];
      complex acc(0.0, 0.0);
      for (std::size_t k = 0; k < box.size(); ++k) {
        const int idx = phase_mod(d, box.point(k), n);
        acc += omega[static_cast<std::size_t>(idx)] * sigma.value(i, k);
      }
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = inv_mass * acc;
    }
  });
  return m;
}

GridFunction apply_via_dft(const ToroidalSymbol& sigma, const GridFunction& f) {
  const TorusGrid& grid = sigma.grid();
  const FrequencyBox& box = sigma.box();
  const auto coeffs = dft_forward(grid, box, f);
  const auto omega = unit_roots(grid.points_per_dim());
  const int n = grid.points_per_dim();
  std::vector<complex> values(grid.atoms());
  for (std::size_t j = 0; j < grid.atoms(); ++j) {
    complex acc(0.0, 0.0);
    for (std::size_t k = 0; k < box.size(); ++k) {
      const int idx = phase_mod(grid.index(j), box.point(k), n);
      acc += omega[static_cast<std::size_t>(idx)] * sigma.value(j, k) * coeffs[k];
    }
    values[j] = acc;
  }
  return GridFunction(grid.space(), std::move(values));
}

NuclearRepresentation symbol_nuclear_decomposition(const ToroidalSymbol& sigma) {
  const TorusGrid& grid = sigma.grid();
  const FrequencyBox& box = sigma.box();
  const auto omega = unit_roots(grid.points_per_dim());
  const int n = grid.points_per_dim();
  std::vector<GridFunction> g, h;
  g.reserve(box.size());
  h.reserve(box.size());
  for (std::size_t k = 0; k < box.size(); ++k) {
    const auto xi = box.point(k);
    std::vector<complex> gv(grid.atoms()), hv(grid.atoms());
    for (std::size_t j = 0; j < grid.atoms(); ++j) {
      const int idx = phase_mod(grid.index(j), xi, n);
      const complex character = omega[static_cast<std::size_t>(idx)];
      gv[j] = character * sigma.value(j, k);
      hv[j] = std::conj(character);
    }
    g.emplace_back(grid.space(), std::move(gv));
    h.emplace_back(grid.space(), std::move(hv));
  }
  return NuclearRepresentation(std::move(g), std::move(h));
}

complex symbol_trace(const ToroidalSymbol& sigma) {
  const TorusGrid& grid = sigma.grid();
  return chunked_sum<complex>(grid.atoms(), [&](std::size_t j) {
    complex row(0.0, 0.0);
    for (std::size_t k = 0; k < sigma.box().size(); ++k) row += sigma.value(j, k);
    return grid.space()->weight(j) * row;
  });
}

SummabilityResult symbol_summability(const ToroidalSymbol& sigma, double r,
                                     const VariableExponent& p_conj) {
  if (!(r > 0.0) || r > 1.0) throw invalid_argument("summability index r must lie in (0, 1]");
  require_same_space(*p_conj.space(), *sigma.grid().space(), "symbol_summability");
  const FrequencyBox& box = sigma.box();
  SummabilityResult res;
  std::vector<complex> column(sigma.grid().atoms());
  for (std::size_t k = 0; k < box.size(); ++k) {
    for (std::size_t j = 0; j < column.size(); ++j) column[j] = sigma.value(j, k);
    const double nrm = luxemburg_norm(GridFunction(sigma.grid().space(), column), p_conj).value;
    const double term = nrm == 0.0 ? 0.0 : std::pow(nrm, r);
    res.sum += term;
    if (box.max_norm(k) == box.radius()) res.last_shell += term;
  }
  return res;
}

bool summability_predicate(double r, double tau, int n) {
  if (!(r > 0.0) || r > 1.0) throw invalid_argument("summability index r must lie in (0, 1]");
  if (!(tau > 0.0)) throw invalid_argument("summability needs tau > 0");
  if (n < 1) throw invalid_argument("summability needs dimension n >= 1");
  return r * tau > static_cast<double>(n);
}

ToroidalSymbol multiplier_compose(const GridFunction& alpha, const ToroidalSymbol& sigma0) {
  if (!sigma0.multiplier())
    throw precondition_failed("multiplier_compose needs an x-independent symbol");
  require_same_space(*alpha.space(), *sigma0.grid().space(), "multiplier_compose");
  Eigen::MatrixXcd table(sigma0.table().rows(), sigma0.table().cols());
  for (Eigen::Index a = 0; a < table.rows(); ++a) {
    const complex av = alpha.value(static_cast<std::size_t>(a));
    for (Eigen::Index c = 0; c < table.cols(); ++c)
      table(a, c) = av * sigma0.table()(0, c);
  }
  return ToroidalSymbol(sigma0.grid(), sigma0.box(), std::move(table), false,
                        sigma0.bessel_tau());
}

std::vector<complex> spectrum(const Eigen::MatrixXcd& action,
                              const std::vector<double>& weights) {
  if (action.rows() != action.cols()) throw invalid_argument("spectrum needs a square matrix");
  if (weights.size() != static_cast<std::size_t>(action.rows()))
    throw invalid_argument("spectrum needs one weight per matrix row");
  // Similarity by diag(√w) moves the operator into the unweighted geometry
  // without changing eigenvalues; it balances the matrix when weights vary.
  Eigen::MatrixXcd b = action;
  for (Eigen::Index i = 0; i < b.rows(); ++i) {
    const double s = std::sqrt(weights[static_cast<std::size_t>(i)]);
    b.row(i) *= s;
    b.col(i) /= s;
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(b, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw numerical_failure("eigenvalue solver did not converge");
  std::vector<complex> eig(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(eig.begin(), eig.end(), [](const complex& a, const complex& b2) {
    const double ma = std::abs(a), mb = std::abs(b2);
    if (ma != mb) return ma > mb;
    return std::arg(a) < std::arg(b2);
  });
  return eig;
}

SpectralReport lidskii_report(const ToroidalSymbol& sigma, double r) {
  if (!(r > 0.0) || r > 1.0) throw invalid_argument("lidskii index r must lie in (0, 1]");
  require_aliasing_free(sigma.grid(), sigma.box(), "lidskii_report");
  SpectralReport rep;
  const Eigen::MatrixXcd m = quantize(sigma);
  rep.eigenvalues = spectrum(m, sigma.grid().space()->weights());
  for (const complex& ev : rep.eigenvalues) rep.eigen_sum += ev;
  for (Eigen::Index i = 0; i < m.rows(); ++i) rep.matrix_trace += m(i, i);
  rep.symbol_trace_value = symbol_trace(sigma);
  rep.d_eigen_matrix = std::abs(rep.eigen_sum - rep.matrix_trace);
  rep.d_eigen_symbol = std::abs(rep.eigen_sum - rep.symbol_trace_value);
  rep.d_matrix_symbol = std::abs(rep.matrix_trace - rep.symbol_trace_value);
  rep.r = r;
  rep.tau = sigma.bessel_tau().value_or(std::numeric_limits<double>::quiet_NaN());
  rep.radius = sigma.box().radius();
  rep.points_per_dim = sigma.grid().points_per_dim();
  rep.dim = sigma.grid().dim();
  rep.grothendieck_regime = r <= 2.0 / 3.0;
  rep.summability_warning =
      sigma.bessel_tau().has_value() &&
      !summability_predicate(r, *sigma.bessel_tau(), sigma.grid().dim());
  return rep;
}

}  // namespace lux
