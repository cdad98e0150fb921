#include "minlen/minlen.h"

#include <cmath>
#include <exception>
#include <limits>
#include <new>
#include <string>

#include "minlen/deformation.hpp"
#include "minlen/errors.hpp"
#include "minlen/flux.hpp"
#include "minlen/hydrogen.hpp"
#include "minlen/moment.hpp"
#include "minlen/perturbation.hpp"
#include "minlen/units.hpp"

struct minlen_params {
  minlen::DeformationParameters value;
};

struct minlen_expansion {
  minlen::perturbation::CorrectionExpansion value;
};

namespace {

thread_local std::string last_error;

minlen_status fail(minlen_status status, const char* message) {
  last_error = message;
  return status;
}

template <typename Body>
minlen_status guarded(Body&& body) {
  try {
    body();
    last_error.clear();
    return MINLEN_OK;
  } catch (const minlen::DivergenceError& e) {
    return fail(MINLEN_ERR_DIVERGENCE, e.what());
  } catch (const minlen::SingularityError& e) {
    return fail(MINLEN_ERR_SINGULARITY, e.what());
  } catch (const minlen::UndefinedParameterError& e) {
    return fail(MINLEN_ERR_UNDEFINED_PARAMETER, e.what());
  } catch (const minlen::DomainError& e) {
    return fail(MINLEN_ERR_DOMAIN, e.what());
  } catch (const minlen::EvaluationError& e) {
    return fail(MINLEN_ERR_EVALUATION, e.what());
  } catch (const minlen::ConvergenceError& e) {
    return fail(MINLEN_ERR_CONVERGENCE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(MINLEN_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(MINLEN_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(MINLEN_ERR_INTERNAL, "unknown error");
  }
}

#define MINLEN_REQUIRE(ptr)                                              \
  do {                                                                   \
    if ((ptr) == nullptr) return fail(MINLEN_ERR_NULL_ARGUMENT, #ptr " is null"); \
  } while (0)

int nodes_or_default(int nodes) { return nodes > 0 ? nodes : minlen::default_radial_nodes(); }

minlen::flux::TubeQuadratureSpec to_spec(const minlen_tube_spec* spec) {
  auto result = minlen::flux::default_tube_spec();
  if (spec) {
    if (spec->radial_nodes > 0) result.radial_nodes = spec->radial_nodes;
    if (spec->angular_nodes > 0) result.angular_nodes = spec->angular_nodes;
    if (spec->refinement_levels > 0) result.refinement_levels = spec->refinement_levels;
    if (spec->relative_tolerance > 0.0) result.relative_tolerance = spec->relative_tolerance;
  }
  return result;
}

const minlen::perturbation::CorrectionExpansion* unwrap(const minlen_expansion* e) {
  return e ? &e->value : nullptr;
}

}  // namespace

extern "C" {

const char* minlen_last_error(void) { return last_error.c_str(); }

const char* minlen_status_string(minlen_status status) {
  switch (status) {
    case MINLEN_OK: return "ok";
    case MINLEN_ERR_DOMAIN: return "domain error";
    case MINLEN_ERR_DIVERGENCE: return "divergence";
    case MINLEN_ERR_SINGULARITY: return "coordinate singularity";
    case MINLEN_ERR_UNDEFINED_PARAMETER: return "undefined parameter";
    case MINLEN_ERR_EVALUATION: return "evaluation error";
    case MINLEN_ERR_CONVERGENCE: return "convergence failure";
    case MINLEN_ERR_NULL_ARGUMENT: return "null argument";
    case MINLEN_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void minlen_get_constants(minlen_constants* out) {
  if (!out) return;
  const auto& c = minlen::units::kConstants;
  *out = {c.electron_charge_cgs,
          minlen::units::kQuotedElectronChargeCgs,
          c.electron_mass_cgs,
          c.hbar_cgs,
          c.speed_of_light_cgs,
          c.bohr_radius_cm,
          c.fine_structure,
          c.bohr_magneton_cgs,
          minlen::units::kBohrMagnetonAu,
          minlen::units::kSpeedOfLightAu};
}

minlen_status minlen_length_to_atomic(double meters, double* out_bohr) {
  MINLEN_REQUIRE(out_bohr);
  return guarded([&] { *out_bohr = minlen::units::length_to_atomic(meters); });
}

minlen_status minlen_length_from_atomic(double bohr, double* out_meters) {
  MINLEN_REQUIRE(out_meters);
  return guarded([&] { *out_meters = minlen::units::length_from_atomic(bohr); });
}

double minlen_moment_au_to_bohr_magnetons(double moment_au) {
  return minlen::units::moment_au_to_bohr_magnetons(moment_au);
}

double minlen_moment_to_bohr_magnetons(double erg_per_gauss) {
  return minlen::units::moment_to_bohr_magnetons(erg_per_gauss);
}

minlen_status minlen_params_from_minimal_length(double delta_x_min_bohr, double eta, minlen_params** out) {
  MINLEN_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new minlen_params{minlen::DeformationParameters::from_minimal_length(delta_x_min_bohr, eta)};
  });
}

minlen_status minlen_params_from_minimal_length_m(double delta_x_min_m, double eta, minlen_params** out) {
  MINLEN_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    const double bohr = minlen::units::length_to_atomic(delta_x_min_m);
    *out = new minlen_params{minlen::DeformationParameters::from_minimal_length(bohr, eta)};
  });
}

minlen_status minlen_params_from_betas(double beta, double beta_prime, minlen_params** out) {
  MINLEN_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new minlen_params{minlen::DeformationParameters::from_betas(beta, beta_prime)}; });
}

void minlen_params_destroy(minlen_params* params) { delete params; }

minlen_status minlen_params_get(const minlen_params* params, minlen_params_info* out) {
  MINLEN_REQUIRE(params);
  MINLEN_REQUIRE(out);
  return guarded([&] {
    const auto& p = params->value;
    const double eta = p.undeformed() ? std::numeric_limits<double>::quiet_NaN() : minlen::eta_of(p);
    *out = {p.beta(), p.beta_prime(), minlen::minimal_length(p), eta, minlen::b_parameter(p)};
  });
}

minlen_status minlen_energy_level(int n, double* out) {
  MINLEN_REQUIRE(out);
  return guarded([&] { *out = minlen::hydrogen::energy_level(n); });
}

minlen_status minlen_radial_wavefunction(int n, int l, double r, double* out) {
  MINLEN_REQUIRE(out);
  return guarded([&] { *out = minlen::hydrogen::radial_wavefunction(n, l, r); });
}

minlen_status minlen_expectation_inv_r_power(int n, int l, int k, double* out) {
  MINLEN_REQUIRE(out);
  return guarded([&] { *out = minlen::hydrogen::expectation_inv_r_power(n, l, k); });
}

minlen_status minlen_matrix_element(int n, int n_prime, int l, const minlen_params* params, int grid_nodes,
                                    double* out) {
  MINLEN_REQUIRE(params);
  MINLEN_REQUIRE(out);
  return guarded([&] {
    *out = minlen::perturbation::matrix_element_V({n, n_prime, l, params->value, nodes_or_default(grid_nodes)});
  });
}

minlen_status minlen_first_order_energy_shift(int n, int l, const minlen_params* params, double* out) {
  MINLEN_REQUIRE(params);
  MINLEN_REQUIRE(out);
  return guarded([&] { *out = minlen::perturbation::first_order_energy_shift(n, l, params->value); });
}

minlen_status minlen_expansion_create(int n, int l, int m, const minlen_params* params, int n_max, int grid_nodes,
                                      minlen_expansion** out) {
  MINLEN_REQUIRE(params);
  MINLEN_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new minlen_expansion{
        minlen::perturbation::correction_expansion({n, l, m}, params->value, n_max, nodes_or_default(grid_nodes))};
  });
}

void minlen_expansion_destroy(minlen_expansion* expansion) { delete expansion; }

minlen_status minlen_expansion_size(const minlen_expansion* expansion, int* out_count) {
  MINLEN_REQUIRE(expansion);
  MINLEN_REQUIRE(out_count);
  *out_count = static_cast<int>(expansion->value.coefficients.size());
  return MINLEN_OK;
}

minlen_status minlen_expansion_term(const minlen_expansion* expansion, int index, int* out_n_prime,
                                    double* out_coefficient) {
  MINLEN_REQUIRE(expansion);
  MINLEN_REQUIRE(out_n_prime);
  MINLEN_REQUIRE(out_coefficient);
  const auto& coefficients = expansion->value.coefficients;
  if (index < 0 || index >= static_cast<int>(coefficients.size())) {
    return fail(MINLEN_ERR_DOMAIN, "expansion term index out of range");
  }
  auto it = coefficients.begin();
  std::advance(it, index);
  *out_n_prime = it->first;
  *out_coefficient = it->second;
  return MINLEN_OK;
}

void minlen_tube_spec_default(minlen_tube_spec* out) {
  if (!out) return;
  const auto spec = minlen::flux::default_tube_spec();
  *out = {spec.radial_nodes, spec.angular_nodes, spec.refinement_levels, spec.relative_tolerance};
}

minlen_status minlen_probability_flux(int n, int l, int m, const minlen_params* params,
                                      const minlen_expansion* expansion, double r, double theta, double phi,
                                      double out[3]) {
  MINLEN_REQUIRE(params);
  MINLEN_REQUIRE(out);
  return guarded([&] {
    const auto j = minlen::flux::probability_flux({n, l, m}, params->value, unwrap(expansion), {r, theta, phi});
    out[0] = j.j_r;
    out[1] = j.j_theta;
    out[2] = j.j_phi;
  });
}

minlen_status minlen_divergence_check(int n, int l, int m, const minlen_params* params, double r, double theta,
                                      double phi, double step, double* out) {
  MINLEN_REQUIRE(params);
  MINLEN_REQUIRE(out);
  return guarded([&] { *out = minlen::flux::divergence_check({n, l, m}, params->value, {r, theta, phi}, step); });
}

minlen_status minlen_magnetic_moment_numeric(int n, int l, int m, const minlen_params* params,
                                             const minlen_expansion* expansion, const minlen_tube_spec* spec,
                                             double* out) {
  MINLEN_REQUIRE(params);
  MINLEN_REQUIRE(out);
  return guarded([&] {
    *out = minlen::flux::magnetic_moment_numeric({n, l, m}, params->value, unwrap(expansion), to_spec(spec));
  });
}

minlen_status minlen_cross_term_moment(int n, int l, int m, const minlen_params* params,
                                       const minlen_expansion* expansion, const minlen_tube_spec* spec,
                                       double* out) {
  MINLEN_REQUIRE(params);
  MINLEN_REQUIRE(expansion);
  MINLEN_REQUIRE(out);
  return guarded([&] {
    *out = minlen::flux::cross_term_moment({n, l, m}, params->value, expansion->value, to_spec(spec));
  });
}

minlen_status minlen_magnetic_moment_closed(int n, int m, const minlen_params* params, double* out) {
  MINLEN_REQUIRE(params);
  MINLEN_REQUIRE(out);
  return guarded([&] { *out = minlen::moment::magnetic_moment_closed(n, m, params->value); });
}

minlen_status minlen_magnetic_moment_general(int n, int l, int m, const minlen_params* params, double* out) {
  MINLEN_REQUIRE(params);
  MINLEN_REQUIRE(out);
  return guarded([&] { *out = minlen::moment::magnetic_moment_general(n, l, m, params->value); });
}

minlen_status minlen_varsigma(double delta_x_min_bohr, double eta, int n, double* out) {
  MINLEN_REQUIRE(out);
  return guarded([&] { *out = minlen::moment::varsigma(delta_x_min_bohr, eta, n); });
}

minlen_status minlen_relativistic_moment(int n, int m, double* out) {
  MINLEN_REQUIRE(out);
  return guarded([&] { *out = minlen::moment::relativistic_moment(n, m); });
}

minlen_status minlen_comparison_report(int n, int m, const minlen_params* params, double epsilon_bohr,
                                       minlen_moment_result* out) {
  MINLEN_REQUIRE(params);
  MINLEN_REQUIRE(out);
  return guarded([&] {
    const auto r = minlen::moment::comparison_report(n, m, params->value, epsilon_bohr);
    *out = {r.n,
            r.m,
            r.mu_z,
            r.mu_z_bohr,
            r.undeformed,
            r.varsigma,
            r.relativistic_fraction,
            r.relativistic_moment,
            r.epsilon_bohr,
            r.precision_ratio,
            r.below_precision ? 1 : 0,
            r.deformation_sign,
            r.relativistic_sign};
  });
}

}  // extern "C"
