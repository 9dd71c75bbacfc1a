#include "luxtrace/luxtrace.h"

#include <cmath>
#include <cstring>
#include <limits>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "core/averaging.hpp"
#include "core/exponent.hpp"
#include "core/measure.hpp"
#include "core/norms.hpp"
#include "core/nuclear.hpp"
#include "core/parallel.hpp"
#include "core/torus.hpp"

struct lux_space {
  lux::SpacePtr impl;
};
struct lux_function {
  lux::GridFunction impl;
};
struct lux_exponent {
  lux::VariableExponent impl;
};
struct lux_partition {
  lux::Partition impl;
};
struct lux_operator {
  lux::FiniteRankOperator impl;
};
struct lux_rep {
  lux::NuclearRepresentation impl;
};
struct lux_symbol {
  lux::ToroidalSymbol impl;
};

namespace {

thread_local std::string t_last_error;

template <class Fn>
lux_status guard(Fn&& fn) noexcept {
  try {
    fn();
    t_last_error.clear();
    return LUX_OK;
  } catch (const lux::invalid_argument& e) {
    t_last_error = e.what();
    return LUX_ERR_INVALID_ARGUMENT;
  } catch (const lux::domain_mismatch& e) {
    t_last_error = e.what();
    return LUX_ERR_DOMAIN_MISMATCH;
  } catch (const lux::precondition_failed& e) {
    t_last_error = e.what();
    return LUX_ERR_PRECONDITION;
  } catch (const lux::nonconvergence& e) {
    t_last_error = e.what();
    return LUX_ERR_NONCONVERGENCE;
  } catch (const lux::numerical_failure& e) {
    t_last_error = e.what();
    return LUX_ERR_NUMERICAL;
  } catch (const std::bad_alloc&) {
    t_last_error = "out of memory";
    return LUX_ERR_INTERNAL;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return LUX_ERR_INTERNAL;
  } catch (...) {
    t_last_error = "unknown error";
    return LUX_ERR_INTERNAL;
  }
}

void require(bool ok, const char* msg) {
  if (!ok) throw lux::invalid_argument(msg);
}

template <class T>
const T& deref(const T* p, const char* msg) {
  require(p != nullptr, msg);
  return *p;
}

std::vector<lux::complex> to_complex(std::uint64_t n, const double* re, const double* im) {
  require(re != nullptr, "null real-part array");
  std::vector<lux::complex> v(n);
  for (std::uint64_t j = 0; j < n; ++j)
    v[j] = lux::complex(re[j], im ? im[j] : 0.0);
  return v;
}

void write_complex(const lux::complex& z, double* re, double* im) {
  if (re) *re = z.real();
  if (im) *im = z.imag();
}

void write_complex_array(const std::vector<lux::complex>& v, double* re, double* im) {
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (re) re[j] = v[j].real();
    if (im) im[j] = v[j].imag();
  }
}

void write_norm_result(const lux::NormResult& r, lux_norm_result* out) {
  require(out != nullptr, "null result pointer");
  out->value = r.value;
  out->iterations = r.iterations;
  out->bracket_width = r.bracket_width;
  out->saturated_at_infinity = r.saturated_at_infinity_atoms ? 1 : 0;
}

lux::TorusGrid make_grid_checked(int dim, int points_per_dim) {
  return lux::TorusGrid(dim, points_per_dim);
}

}  // namespace

extern "C" {

const char* lux_version(void) { return "1.0.0"; }

const char* lux_last_error(void) { return t_last_error.c_str(); }

const char* lux_status_name(lux_status status) {
  switch (status) {
    case LUX_OK: return "ok";
    case LUX_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LUX_ERR_DOMAIN_MISMATCH: return "domain mismatch";
    case LUX_ERR_PRECONDITION: return "precondition failed";
    case LUX_ERR_NONCONVERGENCE: return "nonconvergence";
    case LUX_ERR_NUMERICAL: return "numerical failure";
    case LUX_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

lux_status lux_set_threads(int threads) {
  return guard([&] {
    require(threads >= 1, "thread count must be >= 1");
    lux::set_thread_count(threads);
  });
}

/* ---------------------------------------------------------------- spaces */

lux_status lux_space_create(int dim, uint64_t atoms, const double* coords,
                            const double* weights, lux_space** out) {
  return guard([&] {
    require(out != nullptr, "null output handle");
    require(coords != nullptr && weights != nullptr, "null coordinate or weight array");
    std::vector<double> c(coords, coords + atoms * static_cast<uint64_t>(dim > 0 ? dim : 0));
    std::vector<double> w(weights, weights + atoms);
    *out = new lux_space{std::make_shared<const lux::MeasureSpace>(dim, std::move(c),
                                                                   std::move(w))};
  });
}

lux_status lux_space_unit_interval(uint64_t atoms, lux_space** out) {
  return guard([&] {
    require(out != nullptr, "null output handle");
    *out = new lux_space{lux::MeasureSpace::unit_interval(atoms)};
  });
}

lux_status lux_space_torus(int dim, int points_per_dim, lux_space** out) {
  return guard([&] {
    require(out != nullptr, "null output handle");
    *out = new lux_space{lux::MeasureSpace::torus(dim, points_per_dim)};
  });
}

void lux_space_release(lux_space* space) { delete space; }

lux_status lux_space_dim(const lux_space* space, int* out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    *out = deref(space, "null space handle").impl->dim();
  });
}

lux_status lux_space_atom_count(const lux_space* space, uint64_t* out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    *out = deref(space, "null space handle").impl->size();
  });
}

lux_status lux_space_total_mass(const lux_space* space, double* out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    *out = deref(space, "null space handle").impl->total_mass();
  });
}

lux_status lux_space_coords(const lux_space* space, double* out) {
  return guard([&] {
    require(out != nullptr, "null output buffer");
    const auto& sp = *deref(space, "null space handle").impl;
    std::memcpy(out, sp.coords().data(), sp.coords().size() * sizeof(double));
  });
}

lux_status lux_space_weights(const lux_space* space, double* out) {
  return guard([&] {
    require(out != nullptr, "null output buffer");
    const auto& sp = *deref(space, "null space handle").impl;
    std::memcpy(out, sp.weights().data(), sp.weights().size() * sizeof(double));
  });
}

/* ------------------------------------------------------------- functions */

lux_status lux_function_create(const lux_space* space, const double* re, const double* im,
                               lux_function** out) {
  return guard([&] {
    require(out != nullptr, "null output handle");
    const auto& sp = deref(space, "null space handle").impl;
    *out = new lux_function{lux::GridFunction(sp, to_complex(sp->size(), re, im))};
  });
}

lux_status lux_function_constant(const lux_space* space, double re, double im,
                                 lux_function** out) {
  return guard([&] {
    require(out != nullptr, "null output handle");
    const auto& sp = deref(space, "null space handle").impl;
    *out = new lux_function{lux::GridFunction::constant(sp, lux::complex(re, im))};
  });
}

void lux_function_release(lux_function* f) { delete f; }

lux_status lux_function_size(const lux_function* f, uint64_t* out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    *out = deref(f, "null function handle").impl.size();
  });
}

lux_status lux_function_values(const lux_function* f, double* re, double* im) {
  return guard([&] {
    write_complex_array(deref(f, "null function handle").impl.values(), re, im);
  });
}

lux_status lux_function_space(const lux_function* f, lux_space** out) {
  return guard([&] {
    require(out != nullptr, "null output handle");
    *out = new lux_space{deref(f, "null function handle").impl.space()};
  });
}

lux_status lux_integrate(const lux_function* f, double* re, double* im) {
  return guard([&] {
    write_complex(lux::integrate(deref(f, "null function handle").impl), re, im);
  });
}

lux_status lux_duality_pairing(const lux_function* f, const lux_function* g, double* re,
                               double* im) {
  return guard([&] {
    write_complex(lux::duality_pairing(deref(f, "null function handle").impl,
                                       deref(g, "null function handle").impl),
                  re, im);
  });
}

/* ------------------------------------------------------------- exponents */

lux_status lux_exponent_create(const lux_space* space, const double* values,
                               lux_exponent** out) {
  return guard([&] {
    require(out != nullptr, "null output handle");
    require(values != nullptr, "null value array");
    const auto& sp = deref(space, "null space handle").impl;
    std::vector<double> v(values, values + sp->size());
    *out = new lux_exponent{lux::VariableExponent(sp, std::move(v))};
  });
}

lux_status lux_exponent_constant(const lux_space* space, double p0, lux_exponent** out) {
  return guard([&] {
    require(out != nullptr, "null output handle");
    *out = new lux_exponent{
        lux::VariableExponent::constant(deref(space, "null space handle").impl, p0)};
  });
}

lux_status lux_exponent_piecewise(const lux_partition* cells, const double* cell_values,
                                  lux_exponent** out) {
  return guard([&] {
    require(out != nullptr, "null output handle");
    require(cell_values != nullptr, "null cell value array");
    const auto& part = deref(cells, "null partition handle").impl;
    std::vector<double> v(cell_values, cell_values + part.cell_count());
    *out = new lux_exponent{lux::VariableExponent::piecewise(part, v)};
  });
}

void lux_exponent_release(lux_exponent* p) { delete p; }

lux_status lux_exponent_values(const lux_exponent* p, double* out) {
  return guard([&] {
    require(out != nullptr, "null output buffer");
    const auto& v = deref(p, "null exponent handle").impl.values();
    std::memcpy(out, v.data(), v.size() * sizeof(double));
  });
}

lux_status lux_exponent_bounds(const lux_exponent* p, double* p_minus, double* p_plus) {
  return guard([&] {
    const auto& e = deref(p, "null exponent handle").impl;
    if (p_minus) *p_minus = e.p_minus();
    if (p_plus) *p_plus = e.p_plus();
  });
}

lux_status lux_exponent_conjugate(const lux_exponent* p, lux_exponent** out) {
  return guard([&] {
    require(out != nullptr, "null output handle");
    *out = new lux_exponent{deref(p, "null exponent handle").impl.conjugate()};
  });
}

lux_status lux_holder_triple_valid(const lux_exponent* s, const lux_exponent* p,
                                   const lux_exponent* q, double tol, int* out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    *out = lux::holder_triple_valid(deref(s, "null exponent handle").impl,
                                    deref(p, "null exponent handle").impl,
                                    deref(q, "null exponent handle").impl, tol)
               ? 1
               : 0;
  });
}

/* ------------------------------------------------------------ partitions */

lux_status lux_partition_create(const lux_space* space, uint64_t cell_count,
                                const uint64_t* cell_sizes, const uint64_t* indices,
                                lux_partition** out) {
  return guard([&] {
    require(out != nullptr, "null output handle");
    require(cell_sizes != nullptr && indices != nullptr, "null cell arrays");
    const auto& sp = deref(space, "null space handle").impl;
    std::vector<std::vector<std::size_t>> cells(cell_count);
    std::uint64_t offset = 0;
    for (std::uint64_t k = 0; k < cell_count; ++k) {
      cells[k].assign(indices + offset, indices + offset + cell_sizes[k]);
      offset += cell_sizes[k];
    }
    *out = new lux_partition{lux::Partition(sp, std::move(cells))};
  });
}

lux_status lux_partition_trivial(const lux_space* space, lux_partition** out) {
  return guard([&] {
    require(out != nullptr, "null output handle");
    *out = new lux_partition{
        lux::Partition::trivial(deref(space, "null space handle").impl)};
  });
}

lux_status lux_partition_equal_intervals(const lux_space* space, int k, int axis,
                                         lux_partition** out) {
  return guard([&] {
    require(out != nullptr, "null output handle");
    *out = new lux_partition{lux::Partition::equal_intervals(
        deref(space, "null space handle").impl, k, axis)};
  });
}

lux_status lux_partition_level_sets(const lux_function* f, lux_partition** out) {
  return guard([&] {
    require(out != nullptr, "null output handle");
    *out = new lux_partition{
        lux::Partition::level_sets(deref(f, "null function handle").impl)};
  });
}

void lux_partition_release(lux_partition* p) { delete p; }

lux_status lux_partition_cell_count(const lux_partition* p, uint64_t* out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    *out = deref(p, "null partition handle").impl.cell_count();
  });
}

lux_status lux_partition_cell_size(const lux_partition* p, uint64_t cell, uint64_t* out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    const auto& part = deref(p, "null partition handle").impl;
    require(cell < part.cell_count(), "cell index out of range");
    *out = part.cell(cell).size();
  });
}

lux_status lux_partition_cell(const lux_partition* p, uint64_t cell, uint64_t* indices) {
  return guard([&] {
    require(indices != nullptr, "null output buffer");
    const auto& part = deref(p, "null partition handle").impl;
    require(cell < part.cell_count(), "cell index out of range");
    const auto& c = part.cell(cell);
    for (std::size_t j = 0; j < c.size(); ++j) indices[j] = c[j];
  });
}

lux_status lux_partition_cell_mass(const lux_partition* p, uint64_t cell, double* out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    const auto& part = deref(p, "null partition handle").impl;
    require(cell < part.cell_count(), "cell index out of range");
    *out = part.cell_mass(cell);
  });
}

lux_status lux_partition_refines(const lux_partition* coarse, const lux_partition* fine,
                                 int* out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    *out = lux::partition_refines(deref(coarse, "null partition handle").impl,
                                  deref(fine, "null partition handle").impl)
               ? 1
               : 0;
  });
}

lux_status lux_partition_common_refinement(const lux_partition* a, const lux_partition* b,
                                           lux_partition** out) {
  return guard([&] {
    require(out != nullptr, "null output handle");
    *out = new lux_partition{
        lux::common_refinement(deref(a, "null partition handle").impl,
                               deref(b, "null partition handle").impl)};
  });
}

/* ----------------------------------------------------------------- norms */

lux_status lux_modular(const lux_function* f, const lux_exponent* p, double* out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    *out = lux::modular(deref(f, "null function handle").impl,
                        deref(p, "null exponent handle").impl);
  });
}

lux_status lux_luxemburg_norm(const lux_function* f, const lux_exponent* p, double tol,
                              lux_norm_result* out) {
  return guard([&] {
    write_norm_result(lux::luxemburg_norm(deref(f, "null function handle").impl,
                                          deref(p, "null exponent handle").impl, tol),
                      out);
  });
}

lux_status lux_seq_norm(uint64_t count, const double* re, const double* im,
                        const double* exponents, double tol, lux_norm_result* out) {
  return guard([&] {
    require(exponents != nullptr, "null exponent array");
    const auto h = to_complex(count, re, im);
    std::vector<double> p(exponents, exponents + count);
    write_norm_result(lux::seq_norm(h, p, tol), out);
  });
}

lux_status lux_holder_check(const lux_function* f, const lux_function* g,
                            const lux_exponent* p, const lux_exponent* q,
                            const lux_exponent* s, double tol, lux_holder_report* out) {
  return guard([&] {
    require(out != nullptr, "null report pointer");
    const auto rep = lux::holder_check(
        deref(f, "null function handle").impl, deref(g, "null function handle").impl,
        deref(p, "null exponent handle").impl, deref(q, "null exponent handle").impl,
        deref(s, "null exponent handle").impl, tol);
    out->lhs = rep.lhs;
    out->rhs = rep.rhs;
    out->holds = rep.holds ? 1 : 0;
  });
}

/* ---------------------------------------------------- averaging operators */

lux_status lux_partition_operator(const lux_partition* p, lux_operator** out) {
  return guard([&] {
    require(out != nullptr, "null output handle");
    *out = new lux_operator{
        lux::partition_operator(deref(p, "null partition handle").impl)};
  });
}

lux_status lux_operator_identity(const lux_space* space, lux_operator** out) {
  return guard([&] {
    require(out != nullptr, "null output handle");
    *out = new lux_operator{
        lux::FiniteRankOperator::identity(deref(space, "null space handle").impl)};
  });
}

void lux_operator_release(lux_operator* op) { delete op; }

lux_status lux_operator_space(const lux_operator* op, lux_space** out) {
  return guard([&] {
    require(out != nullptr, "null output handle");
    *out = new lux_space{deref(op, "null operator handle").impl.space()};
  });
}

lux_status lux_operator_rank_bound(const lux_operator* op, uint64_t* out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    *out = deref(op, "null operator handle").impl.rank_bound();
  });
}

lux_status lux_operator_matrix(const lux_operator* op, double* re, double* im) {
  return guard([&] {
    const auto& m = deref(op, "null operator handle").impl.matrix();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        const std::size_t idx =
            static_cast<std::size_t>(i) * static_cast<std::size_t>(m.cols()) +
            static_cast<std::size_t>(j);
        if (re) re[idx] = m(i, j).real();
        if (im) im[idx] = m(i, j).imag();
      }
  });
}

lux_status lux_operator_apply(const lux_operator* op, const lux_function* f,
                              lux_function** out) {
  return guard([&] {
    require(out != nullptr, "null output handle");
    *out = new lux_function{lux::apply(deref(op, "null operator handle").impl,
                                       deref(f, "null function handle").impl)};
  });
}

lux_status lux_operator_norm_estimate(const lux_operator* op, const lux_exponent* p,
                                      int trials, uint64_t seed, double* lower_bound,
                                      lux_function** argmax) {
  return guard([&] {
    require(lower_bound != nullptr, "null output pointer");
    auto est = lux::operator_norm_estimate(deref(op, "null operator handle").impl,
                                           deref(p, "null exponent handle").impl, trials,
                                           seed);
    *lower_bound = est.lower_bound;
    if (argmax)
      *argmax = est.argmax ? new lux_function{std::move(*est.argmax)} : nullptr;
  });
}

lux_status lux_bap_demo(const lux_function* f, const lux_exponent* p,
                        const lux_partition* const* chain, uint64_t chain_len,
                        lux_bap_step* steps) {
  return guard([&] {
    require(chain != nullptr, "null chain array");
    require(steps != nullptr, "null step buffer");
    std::vector<lux::Partition> parts;
    parts.reserve(chain_len);
    for (uint64_t i = 0; i < chain_len; ++i)
      parts.push_back(deref(chain[i], "null partition handle in chain").impl);
    const auto result = lux::bap_demo(deref(f, "null function handle").impl,
                                      deref(p, "null exponent handle").impl, parts);
    for (std::size_t i = 0; i < result.size(); ++i)
      steps[i] = {result[i].partition_index, result[i].cells, result[i].error};
  });
}

/* --------------------------------------------------- nuclear representations */

lux_status lux_rep_create(uint64_t terms, const lux_function* const* g,
                          const lux_function* const* h, lux_rep** out) {
  return guard([&] {
    require(out != nullptr, "null output handle");
    require(g != nullptr && h != nullptr, "null factor arrays");
    std::vector<lux::GridFunction> gs, hs;
    gs.reserve(terms);
    hs.reserve(terms);
    for (uint64_t n = 0; n < terms; ++n) {
      gs.push_back(deref(g[n], "null g factor").impl);
      hs.push_back(deref(h[n], "null h factor").impl);
    }
    *out = new lux_rep{lux::NuclearRepresentation(std::move(gs), std::move(hs))};
  });
}

void lux_rep_release(lux_rep* rep) { delete rep; }

lux_status lux_rep_term_count(const lux_rep* rep, uint64_t* out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    *out = deref(rep, "null representation handle").impl.term_count();
  });
}

lux_status lux_rep_out_space(const lux_rep* rep, lux_space** out) {
  return guard([&] {
    require(out != nullptr, "null output handle");
    *out = new lux_space{deref(rep, "null representation handle").impl.out_space()};
  });
}

lux_status lux_rep_in_space(const lux_rep* rep, lux_space** out) {
  return guard([&] {
    require(out != nullptr, "null output handle");
    *out = new lux_space{deref(rep, "null representation handle").impl.in_space()};
  });
}

lux_status lux_rep_apply(const lux_rep* rep, const lux_function* f, lux_function** out) {
  return guard([&] {
    require(out != nullptr, "null output handle");
    *out = new lux_function{lux::rep_apply(deref(rep, "null representation handle").impl,
                                           deref(f, "null function handle").impl)};
  });
}

lux_status lux_rep_kernel(const lux_rep* rep, double* re, double* im) {
  return guard([&] {
    const auto k = lux::rep_kernel(deref(rep, "null representation handle").impl);
    for (Eigen::Index i = 0; i < k.rows(); ++i)
      for (Eigen::Index j = 0; j < k.cols(); ++j) {
        const std::size_t idx =
            static_cast<std::size_t>(i) * static_cast<std::size_t>(k.cols()) +
            static_cast<std::size_t>(j);
        if (re) re[idx] = k(i, j).real();
        if (im) im[idx] = k(i, j).imag();
      }
  });
}

lux_status lux_rep_trace(const lux_rep* rep, double* re, double* im) {
  return guard([&] {
    write_complex(lux::rep_trace(deref(rep, "null representation handle").impl), re, im);
  });
}

lux_status lux_rep_quasinorm_sum(const lux_rep* rep, double r, const lux_exponent* p_out,
                                 const lux_exponent* p_in_conj, double* out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    *out = lux::rep_quasinorm_sum(deref(rep, "null representation handle").impl, r,
                                  deref(p_out, "null exponent handle").impl,
                                  deref(p_in_conj, "null exponent handle").impl);
  });
}

lux_status lux_rep_schatten(const lux_rep* rep, double r, double* out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    const auto& impl = deref(rep, "null representation handle").impl;
    *out = lux::schatten_quasinorm(lux::rep_kernel(impl), *impl.out_space(),
                                   *impl.in_space(), r);
  });
}

lux_status lux_oloff_check(const lux_rep* rep, double r, lux_oloff_report* out) {
  return guard([&] {
    require(out != nullptr, "null report pointer");
    const auto report =
        lux::oloff_check(deref(rep, "null representation handle").impl, r);
    out->schatten = report.schatten;
    out->rep_bound = report.rep_bound;
    out->holds = report.holds ? 1 : 0;
  });
}

/* ------------------------------------------------------------------ torus */

lux_status lux_symbol_create(int dim, int points_per_dim, int radius, const double* re,
                             const double* im, int multiplier, lux_symbol** out) {
  return guard([&] {
    require(out != nullptr, "null output handle");
    lux::TorusGrid grid = make_grid_checked(dim, points_per_dim);
    lux::FrequencyBox box(dim, radius);
    const std::size_t rows = grid.atoms(), cols = box.size();
    require(re != nullptr, "null real-part table");
    Eigen::MatrixXcd table(static_cast<Eigen::Index>(rows),
                           static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        const std::size_t idx = i * cols + j;
        table(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            lux::complex(re[idx], im ? im[idx] : 0.0);
      }
    *out = new lux_symbol{lux::ToroidalSymbol(std::move(grid), std::move(box),
                                              std::move(table), multiplier != 0)};
  });
}

lux_status lux_symbol_multiplier(int dim, int points_per_dim, int radius,
                                 const double* re, const double* im, lux_symbol** out) {
  return guard([&] {
    require(out != nullptr, "null output handle");
    lux::TorusGrid grid = make_grid_checked(dim, points_per_dim);
    lux::FrequencyBox box(dim, radius);
    const auto values = to_complex(box.size(), re, im);
    *out = new lux_symbol{lux::ToroidalSymbol::multiplier_symbol(grid, box, values)};
  });
}

lux_status lux_symbol_bessel(double tau, int dim, int points_per_dim, int radius,
                             lux_symbol** out) {
  return guard([&] {
    require(out != nullptr, "null output handle");
    lux::TorusGrid grid = make_grid_checked(dim, points_per_dim);
    lux::FrequencyBox box(dim, radius);
    *out = new lux_symbol{lux::ToroidalSymbol::bessel(tau, grid, box)};
  });
}

lux_status lux_symbol_compose_multiplier(const lux_function* alpha,
                                         const lux_symbol* sigma0, lux_symbol** out) {
  return guard([&] {
    require(out != nullptr, "null output handle");
    *out = new lux_symbol{
        lux::multiplier_compose(deref(alpha, "null function handle").impl,
                                deref(sigma0, "null symbol handle").impl)};
  });
}

void lux_symbol_release(lux_symbol* sym) { delete sym; }

lux_status lux_symbol_dims(const lux_symbol* sym, int* dim, int* points_per_dim,
                           int* radius, uint64_t* atoms, uint64_t* lattice) {
  return guard([&] {
    const auto& s = deref(sym, "null symbol handle").impl;
    if (dim) *dim = s.grid().dim();
    if (points_per_dim) *points_per_dim = s.grid().points_per_dim();
    if (radius) *radius = s.box().radius();
    if (atoms) *atoms = s.grid().atoms();
    if (lattice) *lattice = s.box().size();
  });
}

lux_status lux_symbol_space(const lux_symbol* sym, lux_space** out) {
  return guard([&] {
    require(out != nullptr, "null output handle");
    *out = new lux_space{deref(sym, "null symbol handle").impl.grid().space()};
  });
}

lux_status lux_symbol_table(const lux_symbol* sym, double* re, double* im) {
  return guard([&] {
    const auto& t = deref(sym, "null symbol handle").impl.table();
    for (Eigen::Index i = 0; i < t.rows(); ++i)
      for (Eigen::Index j = 0; j < t.cols(); ++j) {
        const std::size_t idx =
            static_cast<std::size_t>(i) * static_cast<std::size_t>(t.cols()) +
            static_cast<std::size_t>(j);
        if (re) re[idx] = t(i, j).real();
        if (im) im[idx] = t(i, j).imag();
      }
  });
}

lux_status lux_symbol_tau(const lux_symbol* sym, double* tau) {
  return guard([&] {
    require(tau != nullptr, "null output pointer");
    const auto& s = deref(sym, "null symbol handle").impl;
    *tau = s.bessel_tau().value_or(std::numeric_limits<double>::quiet_NaN());
  });
}

lux_status lux_symbol_trace(const lux_symbol* sym, double* re, double* im) {
  return guard([&] {
    write_complex(lux::symbol_trace(deref(sym, "null symbol handle").impl), re, im);
  });
}

lux_status lux_symbol_summability(const lux_symbol* sym, double r,
                                  const lux_exponent* p_conj,
                                  lux_summability_result* out) {
  return guard([&] {
    require(out != nullptr, "null result pointer");
    const auto res = lux::symbol_summability(deref(sym, "null symbol handle").impl, r,
                                             deref(p_conj, "null exponent handle").impl);
    out->sum = res.sum;
    out->last_shell = res.last_shell;
  });
}

lux_status lux_summability_predicate(double r, double tau, int n, int* out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    *out = lux::summability_predicate(r, tau, n) ? 1 : 0;
  });
}

lux_status lux_quantize(const lux_symbol* sym, lux_operator** out) {
  return guard([&] {
    require(out != nullptr, "null output handle");
    const auto& s = deref(sym, "null symbol handle").impl;
    Eigen::MatrixXcd m = lux::quantize(s);
    const std::size_t rank = std::min(s.grid().atoms(), s.box().size());
    *out = new lux_operator{
        lux::FiniteRankOperator(s.grid().space(), std::move(m), rank)};
  });
}

lux_status lux_symbol_nuclear_decomposition(const lux_symbol* sym, lux_rep** out) {
  return guard([&] {
    require(out != nullptr, "null output handle");
    *out = new lux_rep{
        lux::symbol_nuclear_decomposition(deref(sym, "null symbol handle").impl)};
  });
}

lux_status lux_spectrum(const lux_operator* op, double* re, double* im) {
  return guard([&] {
    const auto& impl = deref(op, "null operator handle").impl;
    const auto eig = lux::spectrum(impl.matrix(), impl.space()->weights());
    write_complex_array(eig, re, im);
  });
}

lux_status lux_lidskii_report(const lux_symbol* sym, double r, lux_lidskii_scalars* out,
                              double* eig_re, double* eig_im, uint64_t eig_capacity,
                              uint64_t* eig_count) {
  return guard([&] {
    require(out != nullptr, "null report pointer");
    const auto rep = lux::lidskii_report(deref(sym, "null symbol handle").impl, r);
    out->eigen_sum[0] = rep.eigen_sum.real();
    out->eigen_sum[1] = rep.eigen_sum.imag();
    out->matrix_trace[0] = rep.matrix_trace.real();
    out->matrix_trace[1] = rep.matrix_trace.imag();
    out->symbol_trace[0] = rep.symbol_trace_value.real();
    out->symbol_trace[1] = rep.symbol_trace_value.imag();
    out->d_eigen_matrix = rep.d_eigen_matrix;
    out->d_eigen_symbol = rep.d_eigen_symbol;
    out->d_matrix_symbol = rep.d_matrix_symbol;
    out->r = rep.r;
    out->tau = rep.tau;
    out->radius = rep.radius;
    out->points_per_dim = rep.points_per_dim;
    out->dim = rep.dim;
    out->grothendieck_regime = rep.grothendieck_regime ? 1 : 0;
    out->summability_warning = rep.summability_warning ? 1 : 0;
    if (eig_count) *eig_count = rep.eigenvalues.size();
    if (eig_re || eig_im) {
      require(eig_capacity >= rep.eigenvalues.size(), "eigenvalue buffer too small");
      write_complex_array(rep.eigenvalues, eig_re, eig_im);
    }
  });
}

/* -------------------------------------------------------------- transforms */

lux_status lux_dft_forward(const lux_function* f, int dim, int points_per_dim, int radius,
                           double* re, double* im) {
  return guard([&] {
    const auto& fn = deref(f, "null function handle").impl;
    lux::TorusGrid grid = make_grid_checked(dim, points_per_dim);
    lux::FrequencyBox box(dim, radius);
    const auto coeffs = lux::dft_forward(grid, box, fn);
    write_complex_array(coeffs, re, im);
  });
}

lux_status lux_dft_inverse(int dim, int points_per_dim, int radius, const double* re,
                           const double* im, lux_function** out) {
  return guard([&] {
    require(out != nullptr, "null output handle");
    lux::TorusGrid grid = make_grid_checked(dim, points_per_dim);
    lux::FrequencyBox box(dim, radius);
    const auto coeffs = to_complex(box.size(), re, im);
    *out = new lux_function{lux::dft_inverse(grid, box, coeffs)};
  });
}

}  // extern "C"
