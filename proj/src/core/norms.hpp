#pragma once

#include <vector>

#include "core/exponent.hpp"
#include "core/measure.hpp"

namespace lux {

struct NormResult {
  double value = 0.0;
  int iterations = 0;
  // Final width of the root-finding bracket; 0 when no bisection was needed.
  double bracket_width = 0.0;
  // True when the returned value is pinned by the essential supremum over the
  // ∞-exponent atoms rather than by the finite-exponent modular equation.
  bool saturated_at_infinity_atoms = false;
};

// ρ_{p(·)}(f) = Σ_j w_j |f_j|^{p_j} over atoms with p_j < ∞; atoms with
// p_j = ∞ contribute 0 when |f_j| <= 1 and make the modular +∞ otherwise.
double modular(const GridFunction& f, const VariableExponent& p);

// Luxemburg norm inf{λ > 0 : ρ(f/λ) <= 1} by bracketed bisection on the
// monotone map λ ↦ ρ(f/λ). On return with 0 < value < ∞ the bracket
// guarantees ρ(f/(value+tol)) <= 1 <= ρ(f/(value-tol)).
NormResult luxemburg_norm(const GridFunction& f, const VariableExponent& p,
                          double tol = 1e-12);

// Same norm for finite sequences under counting measure:
// inf{λ > 0 : Σ_k |h_k/λ|^{p_k} <= 1}. Entries p_k = ∞ are allowed.
NormResult seq_norm(const std::vector<complex>& h, const std::vector<double>& p,
                    double tol = 1e-12);

struct HolderReport {
  double lhs = 0.0;  // ‖fg‖_{s(·)}
  double rhs = 0.0;  // 2 ‖f‖_{p(·)} ‖g‖_{q(·)}
  bool holds = false;
};

// Checks ‖fg‖_{s(·)} <= 2 ‖f‖_{p(·)} ‖g‖_{q(·)} for a pointwise Hölder triple
// 1/s = 1/p + 1/q; holds = (lhs <= rhs + tol).
HolderReport holder_check(const GridFunction& f, const GridFunction& g,
                          const VariableExponent& p, const VariableExponent& q,
                          const VariableExponent& s, double tol);

}  // namespace lux
