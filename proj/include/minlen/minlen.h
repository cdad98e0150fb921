/* C interface to the minimal-length hydrogen magnetic-moment library.
 *
 * All quantities are in atomic units (hbar = M = e = 1, lengths in Bohr
 * radii, energies in Hartree, moments in e hbar / M) unless a function name
 * says otherwise. Every fallible call returns a minlen_status; on failure
 * minlen_last_error() describes the problem for the calling thread. */
#ifndef MINLEN_MINLEN_H
#define MINLEN_MINLEN_H

#if defined(MINLEN_BUILDING_LIBRARY)
#define MINLEN_API __attribute__((visibility("default")))
#else
#define MINLEN_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum minlen_status {
  MINLEN_OK = 0,
  MINLEN_ERR_DOMAIN = 1,
  MINLEN_ERR_DIVERGENCE = 2,
  MINLEN_ERR_SINGULARITY = 3,
  MINLEN_ERR_UNDEFINED_PARAMETER = 4,
  MINLEN_ERR_EVALUATION = 5,
  MINLEN_ERR_CONVERGENCE = 6,
  MINLEN_ERR_NULL_ARGUMENT = 7,
  MINLEN_ERR_INTERNAL = 8
} minlen_status;

typedef struct minlen_params minlen_params;
typedef struct minlen_expansion minlen_expansion;

MINLEN_API const char* minlen_last_error(void);
MINLEN_API const char* minlen_status_string(minlen_status status);

/* ---- constants and units ---- */

typedef struct minlen_constants {
  double electron_charge_cgs;
  double quoted_electron_charge_cgs;
  double electron_mass_cgs;
  double hbar_cgs;
  double speed_of_light_cgs;
  double bohr_radius_cm;
  double fine_structure;
  double bohr_magneton_cgs;
  double bohr_magneton_au;
  double speed_of_light_au;
} minlen_constants;

MINLEN_API void minlen_get_constants(minlen_constants* out);
MINLEN_API minlen_status minlen_length_to_atomic(double meters, double* out_bohr);
MINLEN_API minlen_status minlen_length_from_atomic(double bohr, double* out_meters);
MINLEN_API double minlen_moment_au_to_bohr_magnetons(double moment_au);
MINLEN_API double minlen_moment_to_bohr_magnetons(double erg_per_gauss);

/* ---- deformation parameters ---- */

typedef struct minlen_params_info {
  double beta;
  double beta_prime;
  double minimal_length; /* Bohr radii */
  double eta;            /* NaN when beta + beta' = 0 */
  double b;              /* Bohr radii */
} minlen_params_info;

MINLEN_API minlen_status minlen_params_from_minimal_length(double delta_x_min_bohr, double eta, minlen_params** out);
MINLEN_API minlen_status minlen_params_from_minimal_length_m(double delta_x_min_m, double eta, minlen_params** out);
MINLEN_API minlen_status minlen_params_from_betas(double beta, double beta_prime, minlen_params** out);
MINLEN_API void minlen_params_destroy(minlen_params* params);
MINLEN_API minlen_status minlen_params_get(const minlen_params* params, minlen_params_info* out);

/* ---- hydrogen ---- */

MINLEN_API minlen_status minlen_energy_level(int n, double* out);
MINLEN_API minlen_status minlen_radial_wavefunction(int n, int l, double r, double* out);
MINLEN_API minlen_status minlen_expectation_inv_r_power(int n, int l, int k, double* out);

/* ---- perturbation ---- */

/* V_{nn'} (off-diagonal part of <n'lm|V|nlm>). grid_nodes <= 0 selects the default. */
MINLEN_API minlen_status minlen_matrix_element(int n, int n_prime, int l, const minlen_params* params,
                                               int grid_nodes, double* out);
MINLEN_API minlen_status minlen_first_order_energy_shift(int n, int l, const minlen_params* params, double* out);

MINLEN_API minlen_status minlen_expansion_create(int n, int l, int m, const minlen_params* params, int n_max,
                                                 int grid_nodes, minlen_expansion** out);
MINLEN_API void minlen_expansion_destroy(minlen_expansion* expansion);
MINLEN_API minlen_status minlen_expansion_size(const minlen_expansion* expansion, int* out_count);
MINLEN_API minlen_status minlen_expansion_term(const minlen_expansion* expansion, int index, int* out_n_prime,
                                               double* out_coefficient);

/* ---- flux and moment quadrature ---- */

typedef struct minlen_tube_spec {
  int radial_nodes;  /* <= 0: default */
  int angular_nodes; /* <= 0: default */
  int refinement_levels;
  double relative_tolerance;
} minlen_tube_spec;

MINLEN_API void minlen_tube_spec_default(minlen_tube_spec* out);

/* out[0..2] = j_r, j_theta, j_phi. expansion may be NULL. */
MINLEN_API minlen_status minlen_probability_flux(int n, int l, int m, const minlen_params* params,
                                                 const minlen_expansion* expansion, double r, double theta,
                                                 double phi, double out[3]);
MINLEN_API minlen_status minlen_divergence_check(int n, int l, int m, const minlen_params* params, double r,
                                                 double theta, double phi, double step, double* out);
MINLEN_API minlen_status minlen_magnetic_moment_numeric(int n, int l, int m, const minlen_params* params,
                                                        const minlen_expansion* expansion,
                                                        const minlen_tube_spec* spec, double* out);
MINLEN_API minlen_status minlen_cross_term_moment(int n, int l, int m, const minlen_params* params,
                                                  const minlen_expansion* expansion, const minlen_tube_spec* spec,
                                                  double* out);

/* ---- closed-form moment ---- */

typedef struct minlen_moment_result {
  int n;
  int m;
  double mu_z;
  double mu_z_bohr;
  double undeformed;
  double varsigma;
  double relativistic_fraction;
  double relativistic_moment;
  double epsilon_bohr;
  double precision_ratio;
  int below_precision;
  int deformation_sign;
  int relativistic_sign;
} minlen_moment_result;

MINLEN_API minlen_status minlen_magnetic_moment_closed(int n, int m, const minlen_params* params, double* out);
MINLEN_API minlen_status minlen_magnetic_moment_general(int n, int l, int m, const minlen_params* params,
                                                        double* out);
MINLEN_API minlen_status minlen_varsigma(double delta_x_min_bohr, double eta, int n, double* out);
MINLEN_API minlen_status minlen_relativistic_moment(int n, int m, double* out);
MINLEN_API minlen_status minlen_comparison_report(int n, int m, const minlen_params* params, double epsilon_bohr,
                                                  minlen_moment_result* out);

#ifdef __cplusplus
}
#endif

#endif /* MINLEN_MINLEN_H */
