#include "core/norms.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "core/parallel.hpp"

namespace lux {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kMaxIterations = 200;

[[noreturn]] void bisection_failed(const char* what, double lo, double hi) {
  std::ostringstream msg;
  msg << what << " (last bracket [" << lo << ", " << hi << "])";
  throw nonconvergence(msg.str());
}

// Shared Luxemburg bisection. The constraint set is
//   {λ >= ess_sup : rho_fin(λ) <= 1}
// where ess_sup = max |value| over ∞-exponent entries (0 if none) and rho_fin
// is the finite-exponent part of the modular, continuous and strictly
// decreasing wherever it is positive.
template <class Rho>
NormResult luxemburg_bisect(double ess_sup, double finite_max, Rho&& rho_fin,
                            double tol) {
  if (!(tol > 0.0)) throw invalid_argument("luxemburg norm needs tol > 0");
  NormResult res;
  if (ess_sup == 0.0 && finite_max == 0.0) return res;  // zero input
  if (finite_max == 0.0) {
    // Only ∞-exponent entries carry the function: the norm is the essential
    // supremum itself, no root finding involved.
    res.value = ess_sup;
    res.saturated_at_infinity_atoms = true;
    return res;
  }

  int iter = 0;
  // Feasible upper end: expand geometrically until the modular drops to 1.
  double hi = std::max(ess_sup, finite_max);
  double rho_hi = rho_fin(hi);
  while (rho_hi > 1.0) {
    const double next_hi = hi * 2.0;
    if (++iter > kMaxIterations)
      bisection_failed("luxemburg norm bracket expansion exhausted its budget", hi, next_hi);
    const double next = rho_fin(next_hi);
    if (next > rho_hi * (1.0 + 1e-12))
      throw numerical_failure("modular is not non-increasing in the scale parameter");
    hi = next_hi;
    rho_hi = next;
  }

  // Infeasible lower end.
  double lo, rho_lo;
  if (ess_sup > 0.0) {
    const double at_ess = rho_fin(ess_sup);
    if (at_ess <= 1.0) {
      // λ < ess_sup is infeasible outright (∞-exponent atoms blow up), and
      // λ = ess_sup already satisfies the finite part: the infimum is attained
      // on the essential-supremum constraint.
      res.value = ess_sup;
      res.iterations = iter;
      res.saturated_at_infinity_atoms = true;
      return res;
    }
    lo = ess_sup;
    rho_lo = at_ess;
  } else {
    lo = hi;
    rho_lo = rho_hi;
    while (rho_lo <= 1.0) {
      if (++iter > kMaxIterations)
        bisection_failed("luxemburg norm lower-bracket search exhausted its budget", lo, hi);
      const double next_lo = lo * 0.5;
      const double next = rho_fin(next_lo);
      if (next < rho_lo * (1.0 - 1e-12))
        throw numerical_failure("modular is not non-increasing in the scale parameter");
      hi = lo;
      rho_hi = rho_lo;
      lo = next_lo;
      rho_lo = next;
    }
  }

  while (hi - lo > tol) {
    if (++iter > kMaxIterations)
      bisection_failed("luxemburg norm bisection did not reach tolerance", lo, hi);
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket at floating-point resolution
    const double rho_mid = rho_fin(mid);
    if (rho_mid > rho_lo * (1.0 + 1e-12) || rho_mid < rho_hi * (1.0 - 1e-12))
      throw numerical_failure("modular is not non-increasing in the scale parameter");
    if (rho_mid <= 1.0) {
      hi = mid;
      rho_hi = rho_mid;
    } else {
      lo = mid;
      rho_lo = rho_mid;
    }
  }

  // hi is feasible and lo is not, so the infimum lies in (lo, hi]. Report the
  // feasible end: it is within the final bracket width of the true norm.
  res.value = hi;
  res.iterations = iter;
  res.bracket_width = hi - lo;
  return res;
}

}  // namespace

double modular(const GridFunction& f, const VariableExponent& p) {
  require_same_space(*f.space(), *p.space(), "modular");
  const MeasureSpace& sp = *f.space();
  bool infinite = false;
  const double finite_part = chunked_sum<double>(sp.size(), [&](std::size_t j) {
    const double a = std::abs(f.value(j));
    const double pj = p.value(j);
    if (pj == kInf) {
      if (a > 1.0) infinite = true;
      return 0.0;
    }
    return a == 0.0 ? 0.0 : sp.weight(j) * std::pow(a, pj);
  });
  return infinite ? kInf : finite_part;
}

NormResult luxemburg_norm(const GridFunction& f, const VariableExponent& p, double tol) {
  require_same_space(*f.space(), *p.space(), "luxemburg_norm");
  const MeasureSpace& sp = *f.space();
  double ess_sup = 0.0, finite_max = 0.0;
  for (std::size_t j = 0; j < sp.size(); ++j) {
    const double a = std::abs(f.value(j));
    if (p.value(j) == kInf)
      ess_sup = std::max(ess_sup, a);
    else if (a > 0.0)
      finite_max = std::max(finite_max, a);
  }
  auto rho_fin = [&](double lambda) {
    return chunked_sum<double>(sp.size(), [&](std::size_t j) {
      const double pj = p.value(j);
      if (pj == kInf) return 0.0;
      const double a = std::abs(f.value(j));
      return a == 0.0 ? 0.0 : sp.weight(j) * std::pow(a / lambda, pj);
    });
  };
  return luxemburg_bisect(ess_sup, finite_max, rho_fin, tol);
}

NormResult seq_norm(const std::vector<complex>& h, const std::vector<double>& p,
                    double tol) {
  if (h.size() != p.size())
    throw invalid_argument("seq_norm needs one exponent per sequence entry");
  for (double pk : p)
    if (std::isnan(pk) || pk < 1.0)
      throw invalid_argument("seq_norm exponents must lie in [1, inf]");
  for (const complex& v : h)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw invalid_argument("seq_norm entries must be finite");
  double ess_sup = 0.0, finite_max = 0.0;
  for (std::size_t k = 0; k < h.size(); ++k) {
    const double a = std::abs(h[k]);
    if (p[k] == kInf)
      ess_sup = std::max(ess_sup, a);
    else if (a > 0.0)
      finite_max = std::max(finite_max, a);
  }
  auto rho_fin = [&](double lambda) {
    double acc = 0.0;
    for (std::size_t k = 0; k < h.size(); ++k) {
      if (p[k] == kInf) continue;
      const double a = std::abs(h[k]);
      if (a > 0.0) acc += std::pow(a / lambda, p[k]);
    }
    return acc;
  };
  return luxemburg_bisect(ess_sup, finite_max, rho_fin, tol);
}

HolderReport holder_check(const GridFunction& f, const GridFunction& g,
                          const VariableExponent& p, const VariableExponent& q,
                          const VariableExponent& s, double tol) {
  require_same_space(*f.space(), *g.space(), "holder_check");
  if (!holder_triple_valid(s, p, q, 1e-9))
    throw precondition_failed("holder_check needs 1/s = 1/p + 1/q pointwise");
  std::vector<complex> prod(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) prod[j] = f.value(j) * g.value(j);
  const GridFunction fg(f.space(), std::move(prod));
  HolderReport rep;
  rep.lhs = luxemburg_norm(fg, s).value;
  rep.rhs = 2.0 * luxemburg_norm(f, p).value * luxemburg_norm(g, q).value;
  rep.holds = rep.lhs <= rep.rhs + tol;
  return rep;
}

}  // namespace lux
