#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "core/exponent.hpp"
#include "core/measure.hpp"
#include "core/norms.hpp"

namespace lux {

// Dense finite-rank operator on a grid space. For partition averaging the
// matrix is real and block-constant on cells; the builder keeps the partition
// so norm sampling can draw simple functions adapted to it.
class FiniteRankOperator {
public:
  FiniteRankOperator(SpacePtr space, Eigen::MatrixXcd matrix, std::size_t rank_bound,
                     std::optional<Partition> cells = std::nullopt);

  static FiniteRankOperator identity(SpacePtr space);

  const SpacePtr& space() const { return space_; }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  std::size_t rank_bound() const { return rank_bound_; }
  // Partition used to sample simple functions; the all-singletons partition
  // when the operator was not built from one.
  const Partition& sampling_cells() const { return cells_; }

private:
  SpacePtr space_;
  Eigen::MatrixXcd matrix_;
  std::size_t rank_bound_;
  Partition cells_;
};

// Averaging operator of a partition: f ↦ Σ_k μ(Ω_k)^{-1} ⟨f, 1_{Ω_k}⟩ 1_{Ω_k}.
// Matrix entry (i,j) is w_j/μ(Ω_k) when atoms i, j share cell k, else 0.
FiniteRankOperator partition_operator(const Partition& P);

// Matrix-vector action with fixed ascending summation order per row.
GridFunction apply(const FiniteRankOperator& op, const GridFunction& f);

struct NormEstimate {
  // Max over sampled unit-ball simple functions of ‖op f‖_{p(·)}; a lower
  // bound on the operator norm, never an upper bound.
  double lower_bound = 0.0;
  std::optional<GridFunction> argmax;
};

// Samples `trials` random simple functions (one complex value per sampling
// cell, uniform on the unit disc), and reports max ‖op f‖/‖f‖ in the
// Luxemburg norm of p. Deterministic for a given seed regardless of threads.
NormEstimate operator_norm_estimate(const FiniteRankOperator& op,
                                    const VariableExponent& p, int trials,
                                    std::uint64_t seed);

struct BapStep {
  std::size_t partition_index = 0;
  std::size_t cells = 0;
  double error = 0.0;  // ‖f - L_P f‖_{p(·)}
};

// Approximation errors of f along an increasing refinement chain. Throws when
// the chain is not increasing. Once a chain element refines the level sets of
// a simple f the error vanishes identically.
std::vector<BapStep> bap_demo(const GridFunction& f, const VariableExponent& p,
                              const std::vector<Partition>& chain);

}  // namespace lux
