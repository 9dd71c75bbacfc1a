#include "core/nuclear.hpp"

#include <cmath>

#include <Eigen/SVD>

#include "core/norms.hpp"
#include "core/parallel.hpp"

namespace lux {

NuclearRepresentation::NuclearRepresentation(std::vector<GridFunction> g,
                                             std::vector<GridFunction> h)
    : g_(std::move(g)), h_(std::move(h)) {
  if (g_.empty() || g_.size() != h_.size())
    throw invalid_argument("representation needs equally many, and at least one, g and h factors");
  for (const auto& gn : g_)
    require_same_space(*gn.space(), *g_.front().space(), "representation g factors");
  for (const auto& hn : h_)
    require_same_space(*hn.space(), *h_.front().space(), "representation h factors");
}

bool NuclearRepresentation::endomorphism() const {
  return same_space(*out_space(), *in_space());
}

GridFunction rep_apply(const NuclearRepresentation& rep, const GridFunction& f) {
  require_same_space(*f.space(), *rep.in_space(), "rep_apply");
  std::vector<complex> out(rep.out_space()->size(), complex(0.0, 0.0));
  for (std::size_t n = 0; n < rep.term_count(); ++n) {
    const complex c = duality_pairing(f, rep.h(n));
    const auto& gn = rep.g(n);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += c * gn.value(i);
  }
  return GridFunction(rep.out_space(), std::move(out));
}

Eigen::MatrixXcd rep_kernel(const NuclearRepresentation& rep) {
  const auto rows = static_cast<Eigen::Index>(rep.out_space()->size());
  const auto cols = static_cast<Eigen::Index>(rep.in_space()->size());
  Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(rows, cols);
  for (std::size_t n = 0; n < rep.term_count(); ++n) {
    const auto& gn = rep.g(n);
    const auto& hn = rep.h(n);
    for (Eigen::Index i = 0; i < rows; ++i) {
      const complex gi = gn.value(static_cast<std::size_t>(i));
      for (Eigen::Index j = 0; j < cols; ++j)
        k(i, j) += gi * hn.value(static_cast<std::size_t>(j));
    }
  }
  return k;
}

Eigen::MatrixXcd kernel_action_matrix(const Eigen::MatrixXcd& kernel,
                                      const MeasureSpace& in_space) {
  if (kernel.cols() != static_cast<Eigen::Index>(in_space.size()))
    throw invalid_argument("kernel column count does not match input space");
  Eigen::MatrixXcd a = kernel;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    a.col(j) *= in_space.weight(static_cast<std::size_t>(j));
  return a;
}

double rep_quasinorm_sum(const NuclearRepresentation& rep, double r,
                         const VariableExponent& p_out,
                         const VariableExponent& p_in_conj) {
  if (!(r > 0.0) || r > 1.0) throw invalid_argument("quasi-norm index r must lie in (0, 1]");
  require_same_space(*p_out.space(), *rep.out_space(), "rep_quasinorm_sum");
  require_same_space(*p_in_conj.space(), *rep.in_space(), "rep_quasinorm_sum");
  double acc = 0.0;
  for (std::size_t n = 0; n < rep.term_count(); ++n) {
    const double ng = luxemburg_norm(rep.g(n), p_out).value;
    const double nh = luxemburg_norm(rep.h(n), p_in_conj).value;
    acc += std::pow(ng, r) * std::pow(nh, r);
  }
  return acc;
}

complex rep_trace(const NuclearRepresentation& rep) {
  if (!rep.endomorphism())
    throw domain_mismatch("rep_trace needs matching input and output spaces");
  complex acc(0.0, 0.0);
  for (std::size_t n = 0; n < rep.term_count(); ++n)
    acc += duality_pairing(rep.g(n), rep.h(n));
  return acc;
}

double schatten_quasinorm(const Eigen::MatrixXcd& kernel, const MeasureSpace& out_space,
                          const MeasureSpace& in_space, double r) {
  if (!(r > 0.0) || r > 1.0) throw invalid_argument("quasi-norm index r must lie in (0, 1]");
  if (kernel.rows() != static_cast<Eigen::Index>(out_space.size()) ||
      kernel.cols() != static_cast<Eigen::Index>(in_space.size()))
    throw invalid_argument("kernel shape does not match the given spaces");
  // Conjugating by diag(√w) turns the weighted-space operator into an
  // ordinary matrix with the same singular values.
  Eigen::MatrixXcd s = kernel;
  for (Eigen::Index i = 0; i < s.rows(); ++i)
    s.row(i) *= std::sqrt(out_space.weight(static_cast<std::size_t>(i)));
  for (Eigen::Index j = 0; j < s.cols(); ++j)
    s.col(j) *= std::sqrt(in_space.weight(static_cast<std::size_t>(j)));
  Eigen::VectorXd sv;
  if (s.rows() <= 128 && s.cols() <= 128) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(s);
    if (svd.info() != Eigen::Success) throw numerical_failure("SVD did not converge");
    sv = svd.singularValues();
  } else {
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(s);
    if (svd.info() != Eigen::Success) throw numerical_failure("SVD did not converge");
    sv = svd.singularValues();
  }
  if (sv.size() == 0) return 0.0;
  const double top = sv(0);
  if (top <= 0.0) return 0.0;
  const double cutoff = top * 1e-12;
  double acc = 0.0;
  for (Eigen::Index j = 0; j < sv.size(); ++j)
    if (sv(j) > cutoff) acc += std::pow(sv(j), r);
  return std::pow(acc, 1.0 / r);
}

OloffReport oloff_check(const NuclearRepresentation& rep, double r) {
  if (!rep.endomorphism())
    throw domain_mismatch("oloff_check needs matching input and output spaces");
  const SpacePtr& sp = rep.out_space();
  const VariableExponent p2 = VariableExponent::constant(sp, 2.0);
  OloffReport report;
  report.schatten = schatten_quasinorm(rep_kernel(rep), *sp, *sp, r);
  report.rep_bound = rep_quasinorm_sum(rep, r, p2, p2.conjugate());
  report.holds = report.schatten <= std::pow(report.rep_bound, 1.0 / r) * (1.0 + 1e-8);
  return report;
}

}  // namespace lux
