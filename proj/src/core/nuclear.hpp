#pragma once

#include <vector>

#include <Eigen/Core>

#include "core/exponent.hpp"
#include "core/measure.hpp"

namespace lux {

// Finite representation Σ_n g_n ⊗ h_n of an integral operator
//   (Tf)(x) = ∫ (Σ_n g_n(x) h_n(y)) f(y) dμ(y).
// Term order is part of the value: every sum over terms follows it.
class NuclearRepresentation {
public:
  NuclearRepresentation(std::vector<GridFunction> g, std::vector<GridFunction> h);

  std::size_t term_count() const { return g_.size(); }
  const GridFunction& g(std::size_t n) const { return g_[n]; }
  const GridFunction& h(std::size_t n) const { return h_[n]; }
  const SpacePtr& out_space() const { return g_.front().space(); }
  const SpacePtr& in_space() const { return h_.front().space(); }
  bool endomorphism() const;  // out and in space coincide

private:
  std::vector<GridFunction> g_;
  std::vector<GridFunction> h_;
};

// (Tf)(x_i) = Σ_n ⟨f, h_n⟩ g_n(x_i) with the bilinear pairing.
GridFunction rep_apply(const NuclearRepresentation& rep, const GridFunction& f);

// Kernel table k(x_i, y_j) = Σ_n g_n(x_i) h_n(y_j).
Eigen::MatrixXcd rep_kernel(const NuclearRepresentation& rep);

// Action matrix A[i,j] = k(x_i, y_j) w_j, so that (Tf)_i = Σ_j A[i,j] f_j.
Eigen::MatrixXcd kernel_action_matrix(const Eigen::MatrixXcd& kernel,
                                      const MeasureSpace& in_space);

// Σ_n ‖g_n‖_{p_out}^r ‖h_n‖_{p_in_conj}^r for 0 < r <= 1. An upper-bound
// certificate for the r-nuclear quasi-norm (to the r-th power); the infimum
// over representations is out of scope.
double rep_quasinorm_sum(const NuclearRepresentation& rep, double r,
                         const VariableExponent& p_out,
                         const VariableExponent& p_in_conj);

// Tr(T) = Σ_n ⟨g_n, h_n⟩; equals the μ-weighted integral of the kernel
// diagonal. Requires out and in space to coincide.
complex rep_trace(const NuclearRepresentation& rep);

// Schatten quasi-norm (Σ_j s_j^r)^{1/r} of the kernel operator in the
// μ-weighted L² geometry: singular values of diag(√w_out) k diag(√w_in).
// Singular values below max_sv * 1e-12 are treated as numerical zeros.
double schatten_quasinorm(const Eigen::MatrixXcd& kernel, const MeasureSpace& out_space,
                          const MeasureSpace& in_space, double r);

struct OloffReport {
  double schatten = 0.0;   // ‖T‖_{S_r} from singular values
  double rep_bound = 0.0;  // Σ ‖g_n‖_2^r ‖h_n‖_2^r (the r-th-power sum)
  bool holds = false;      // schatten <= rep_bound^{1/r} (1 + 1e-8)
};

// One-sided Schatten comparison at exponent 2: the singular-value quasi-norm
// never exceeds the representation certificate. Equality is not asserted; a
// given representation need not attain the infimum.
OloffReport oloff_check(const NuclearRepresentation& rep, double r);

}  // namespace lux
