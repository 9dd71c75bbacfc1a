#pragma once

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "core/exponent.hpp"
#include "core/measure.hpp"
#include "core/nuclear.hpp"

namespace lux {

// Uniform grid on the n-torus: atoms j/N per coordinate, weight N^{-n}, total
// mass exactly 1. Keeps the integer multi-indices so character phases can be
// computed exactly as N-th roots of unity.
class TorusGrid {
public:
  TorusGrid(int dim, int points_per_dim);

  int dim() const { return dim_; }
  int points_per_dim() const { return n_; }
  std::size_t atoms() const { return space_->size(); }
  const SpacePtr& space() const { return space_; }
  std::span<const int> index(std::size_t j) const {
    return {indices_.data() + static_cast<std::size_t>(dim_) * j,
            static_cast<std::size_t>(dim_)};
  }

private:
  int dim_;
  int n_;
  SpacePtr space_;
  std::vector<int> indices_;  // row-major, atoms * dim entries
};

// Truncated frequency lattice {ξ ∈ ℤⁿ : |ξ_d| <= Ξ}, enumerated
// lexicographically with each coordinate running -Ξ..Ξ.
class FrequencyBox {
public:
  FrequencyBox(int dim, int radius);

  int dim() const { return dim_; }
  int radius() const { return radius_; }
  std::size_t size() const { return size_; }
  std::span<const int> point(std::size_t k) const {
    return {points_.data() + static_cast<std::size_t>(dim_) * k,
            static_cast<std::size_t>(dim_)};
  }
  int max_norm(std::size_t k) const;
  double euclid_sq(std::size_t k) const;

private:
  int dim_;
  int radius_;
  std::size_t size_;
  std::vector<int> points_;  // row-major, size * dim entries
};

// Pairing a grid with a frequency box is aliasing-free when N >= 2Ξ+1; the
// grid character sums are then exactly orthogonal up to frequency Ξ.
bool aliasing_free(const TorusGrid& grid, const FrequencyBox& box);
void require_aliasing_free(const TorusGrid& grid, const FrequencyBox& box,
                           const char* what);

// Symbol table σ(x, ξ) over grid × box. The multiplier flag asserts that the
// table is x-independent (constant columns); it is verified at construction.
class ToroidalSymbol {
public:
  ToroidalSymbol(TorusGrid grid, FrequencyBox box, Eigen::MatrixXcd table,
                 bool multiplier = false, std::optional<double> bessel_tau = {});

  // x-independent symbol from one value per lattice point.
  static ToroidalSymbol multiplier_symbol(const TorusGrid& grid, const FrequencyBox& box,
                                          const std::vector<complex>& values);
  // σ(ξ) = (1 + 4π²|ξ|²)^{-τ/2}, the symbol of (I-Δ)^{-τ/2}.
  static ToroidalSymbol bessel(double tau, const TorusGrid& grid,
                               const FrequencyBox& box);

  const TorusGrid& grid() const { return grid_; }
  const FrequencyBox& box() const { return box_; }
  const Eigen::MatrixXcd& table() const { return table_; }
  complex value(std::size_t atom, std::size_t freq) const {
    return table_(static_cast<Eigen::Index>(atom), static_cast<Eigen::Index>(freq));
  }
  bool multiplier() const { return multiplier_; }
  std::optional<double> bessel_tau() const { return tau_; }

private:
  TorusGrid grid_;
  FrequencyBox box_;
  Eigen::MatrixXcd table_;  // atoms × lattice points
  bool multiplier_;
  std::optional<double> tau_;
};

// f̂(ξ) = N^{-n} Σ_j e^{-2πi x_j·ξ} f(x_j); exact for trigonometric
// polynomials of degree <= Ξ on aliasing-free pairings.
std::vector<complex> dft_forward(const TorusGrid& grid, const FrequencyBox& box,
                                 const GridFunction& f);

// f(x_j) = Σ_ξ e^{2πi x_j·ξ} c(ξ).
GridFunction dft_inverse(const TorusGrid& grid, const FrequencyBox& box,
                         const std::vector<complex>& coeffs);

// Dense action matrix M[i,j] = N^{-n} Σ_ξ e^{2πi(x_i-x_j)·ξ} σ(x_i, ξ).
// Requires an aliasing-free pairing.
Eigen::MatrixXcd quantize(const ToroidalSymbol& sigma);

// Same action through the Fourier side: multiply f̂ by σ(x_i, ·) row-wise and
// invert. Used as an independent route to cross-check quantize.
GridFunction apply_via_dft(const ToroidalSymbol& sigma, const GridFunction& f);

// One term per lattice point: g_ξ(x) = e^{2πi x·ξ} σ(x,ξ), h_ξ(y) = e^{-2πi y·ξ}.
NuclearRepresentation symbol_nuclear_decomposition(const ToroidalSymbol& sigma);

// Tr(T_σ) = ∫ Σ_ξ σ(x,ξ) dx over the truncated box.
complex symbol_trace(const ToroidalSymbol& sigma);

struct SummabilityResult {
  double sum = 0.0;         // Σ_ξ ‖σ(·,ξ)‖_{p'(·)}^r over the box
  double last_shell = 0.0;  // contribution of the outermost shell |ξ|_∞ = Ξ
};

// Truncated symbol summability Σ_ξ ‖σ(·,ξ)‖_{p'}^r with the outermost-shell
// magnitude as the truncation diagnostic. No aliasing constraint: the sum is
// a per-frequency norm computation, not a quantization.
SummabilityResult symbol_summability(const ToroidalSymbol& sigma, double r,
                                     const VariableExponent& p_conj);

// Whether Σ_ξ (1+4π²|ξ|²)^{-rτ/2} converges over ℤⁿ: true iff rτ > n.
bool summability_predicate(double r, double tau, int n);

// σ(x,ξ) = α(x) σ0(ξ) for an x-independent σ0.
ToroidalSymbol multiplier_compose(const GridFunction& alpha, const ToroidalSymbol& sigma0);

// All eigenvalues of the grid operator in the μ-weighted geometry, sorted by
// descending modulus, ties by ascending argument in (-π, π].
std::vector<complex> spectrum(const Eigen::MatrixXcd& action,
                              const std::vector<double>& weights);

struct SpectralReport {
  std::vector<complex> eigenvalues;
  complex eigen_sum{0.0, 0.0};
  complex matrix_trace{0.0, 0.0};
  complex symbol_trace_value{0.0, 0.0};
  double d_eigen_matrix = 0.0;
  double d_eigen_symbol = 0.0;
  double d_matrix_symbol = 0.0;
  double r = 0.0;
  double tau = 0.0;  // NaN when the symbol carries no Bessel decay tag
  int radius = 0;
  int points_per_dim = 0;
  int dim = 0;
  bool grothendieck_regime = false;  // r <= 2/3
  bool summability_warning = false;  // Bessel tag present but rτ <= n
};

// Assembles the three trace routes (eigenvalue sum, matrix trace, symbol
// trace) with their pairwise discrepancies.
SpectralReport lidskii_report(const ToroidalSymbol& sigma, double r);

}  // namespace lux
