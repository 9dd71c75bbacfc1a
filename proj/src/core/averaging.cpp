#include "core/averaging.hpp"

#include <cmath>
#include <utility>

#include "core/parallel.hpp"
#include "core/rng.hpp"

namespace lux {

namespace {

Partition singletons(const SpacePtr& space) {
  std::vector<std::vector<std::size_t>> cells(space->size());
  for (std::size_t j = 0; j < space->size(); ++j) cells[j] = {j};
  return Partition(space, std::move(cells));
}

}  // namespace

FiniteRankOperator::FiniteRankOperator(SpacePtr space, Eigen::MatrixXcd matrix,
                                       std::size_t rank_bound,
                                       std::optional<Partition> cells)
    : space_(std::move(space)),
      matrix_(std::move(matrix)),
      rank_bound_(rank_bound),
      cells_(cells ? std::move(*cells) : singletons(space_)) {
  if (!space_) throw invalid_argument("operator needs a measure space");
  const auto n = static_cast<Eigen::Index>(space_->size());
  if (matrix_.rows() != n || matrix_.cols() != n)
    throw invalid_argument("operator matrix shape does not match atom count");
  require_same_space(*cells_.space(), *space_, "operator sampling cells");
}

FiniteRankOperator FiniteRankOperator::identity(SpacePtr space) {
  if (!space) throw invalid_argument("operator needs a measure space");
  const auto n = static_cast<Eigen::Index>(space->size());
  return FiniteRankOperator(space, Eigen::MatrixXcd::Identity(n, n), space->size());
}

FiniteRankOperator partition_operator(const Partition& P) {
  const SpacePtr& space = P.space();
  const auto n = static_cast<Eigen::Index>(space->size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t k = 0; k < P.cell_count(); ++k) {
    const double inv_mass = 1.0 / P.cell_mass(k);
    for (std::size_t i : P.cell(k))
      for (std::size_t j : P.cell(k))
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            space->weight(j) * inv_mass;
  }
  return FiniteRankOperator(space, std::move(m), P.cell_count(), P);
}

GridFunction apply(const FiniteRankOperator& op, const GridFunction& f) {
  require_same_space(*op.space(), *f.space(), "operator apply");
  const std::size_t n = f.size();
  std::vector<complex> out(n);
  detail::for_each_chunk((n + 255) / 256, [&](std::size_t c) {
    const std::size_t lo = c * 256, hi = std::min(n, lo + 256);
    for (std::size_t i = lo; i < hi; ++i) {
      complex acc = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        acc += op.matrix()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) *
               f.value(j);
      out[i] = acc;
    }
  });
  return GridFunction(f.space(), std::move(out));
}

NormEstimate operator_norm_estimate(const FiniteRankOperator& op,
                                    const VariableExponent& p, int trials,
                                    std::uint64_t seed) {
  require_same_space(*op.space(), *p.space(), "operator_norm_estimate");
  if (trials < 1) throw invalid_argument("operator_norm_estimate needs trials >= 1");
  const Partition& cells = op.sampling_cells();
  NormEstimate best;
  for (int t = 0; t < trials; ++t) {
    auto gen = make_stream(seed, static_cast<std::uint64_t>(t));
    std::vector<complex> v(op.space()->size());
    bool nonzero = false;
    for (std::size_t k = 0; k < cells.cell_count(); ++k) {
      const complex z = uniform_disc(gen);
      if (z != complex(0.0, 0.0)) nonzero = true;
      for (std::size_t j : cells.cell(k)) v[j] = z;
    }
    if (!nonzero) continue;  // probability-zero draw, simply skip the trial
    GridFunction f(op.space(), std::move(v));
    const double nf = luxemburg_norm(f, p).value;
    const double nLf = luxemburg_norm(apply(op, f), p).value;
    // ‖op (f/‖f‖)‖ by homogeneity; dividing norms avoids rescaling noise.
    const double ratio = nLf / nf;
    if (ratio > best.lower_bound) {
      best.lower_bound = ratio;
      std::vector<complex> unit(f.values());
      for (complex& z : unit) z /= nf;
      best.argmax = GridFunction(op.space(), std::move(unit));
    }
  }
  return best;
}

std::vector<BapStep> bap_demo(const GridFunction& f, const VariableExponent& p,
                              const std::vector<Partition>& chain) {
  require_same_space(*f.space(), *p.space(), "bap_demo");
  if (chain.empty()) throw invalid_argument("bap_demo needs a nonempty chain");
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (!partition_refines(chain[i], chain[i + 1]))
      throw precondition_failed("bap_demo chain must be increasing in refinement order");
  std::vector<BapStep> steps;
  steps.reserve(chain.size());
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const FiniteRankOperator L = partition_operator(chain[i]);
    const GridFunction Lf = apply(L, f);
    std::vector<complex> diff(f.size());
    for (std::size_t j = 0; j < f.size(); ++j) diff[j] = f.value(j) - Lf.value(j);
    const double err = luxemburg_norm(GridFunction(f.space(), std::move(diff)), p).value;
    steps.push_back({i, chain[i].cell_count(), err});
  }
  return steps;
}

}  // namespace lux
