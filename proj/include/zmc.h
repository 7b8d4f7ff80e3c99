/*
 * (C) Copyright 2026 zmc authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef ZMC_H
#define ZMC_H

/*
 * C API of the zmc toolkit: minimal surfaces in E^3, maximal surfaces in L^3,
 * and the duality between them. Opaque handles, status codes, and strings
 * allocated by the library (release with zmc_string_free).
 *
 * All functions return ZMC_OK on success. On failure the out-parameters are
 * untouched and zmc_last_error() describes the problem (thread-local).
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct zmc_expr zmc_expr;       /* holomorphic expression */
typedef struct zmc_surface zmc_surface; /* surface description */
typedef struct zmc_patch zmc_patch;     /* sampled rectangular patch */

typedef enum zmc_status {
  ZMC_OK = 0,
  ZMC_ERR_PARSE,
  ZMC_ERR_UNBOUND_PARAMETER,
  ZMC_ERR_DIVISION_BY_ZERO,
  ZMC_ERR_DEGENERATE,
  ZMC_ERR_ISOTROPY_BROKEN,
  ZMC_ERR_SIGNATURE_MISMATCH,
  ZMC_ERR_INVALID_ARGUMENT,
  ZMC_ERR_PATH_THROUGH_PUNCTURE,
  ZMC_ERR_TOLERANCE_NOT_MET,
  ZMC_ERR_UNKNOWN_NAME,
  ZMC_ERR_PARAMETER_OUT_OF_RANGE,
  ZMC_ERR_IO,
  ZMC_ERR_INTERNAL
} zmc_status;

typedef struct zmc_grid {
  double umin, umax;
  int nu;
  double vmin, vmax;
  int nv;
} zmc_grid;

const char* zmc_status_name(zmc_status s);
const char* zmc_last_error(void);
const char* zmc_version(void);

void zmc_string_free(char* s);

/* --- expressions --------------------------------------------------------- */

zmc_status zmc_expr_parse(const char* text, zmc_expr** out);
zmc_status zmc_expr_print(const zmc_expr* e, char** out);
zmc_status zmc_expr_differentiate(const zmc_expr* e, zmc_expr** out);
/* params: nparams parallel arrays of names and (real) values */
zmc_status zmc_expr_eval(const zmc_expr* e, double z_re, double z_im,
                         const char* const* names, const double* values, size_t nparams,
                         double* out_re, double* out_im);
void zmc_expr_free(zmc_expr* e);

/* --- surfaces ------------------------------------------------------------ */

/* JSON array describing every catalog entry. */
zmc_status zmc_catalog_json(char** out);

zmc_status zmc_surface_build(const char* name, const char* const* param_names,
                             const double* param_values, size_t nparams, zmc_surface** out);
zmc_status zmc_surface_from_json(const char* json, zmc_surface** out);
zmc_status zmc_surface_to_json(const zmc_surface* s, char** out);
/* Bjorling descriptor -> surface whose core curve sits on v = 0. */
zmc_status zmc_surface_bjorling(const char* json, zmc_surface** out);

zmc_status zmc_surface_dual(const zmc_surface* s, zmc_surface** out);
zmc_status zmc_surface_associate(const zmc_surface* s, double theta, zmc_surface** out);
/* kind: elliptic-rotation | hyperbolic-rotation | parabolic-rotation |
 *       rotation-about-y | dilation  (translations act trivially on curves) */
zmc_status zmc_surface_isometry(const zmc_surface* s, const char* kind, double param,
                                zmc_surface** out);
zmc_status zmc_surface_goursat(const zmc_surface* s, double a_re, double a_im, double b_re,
                               double b_im, double c_re, double c_im, double d_re,
                               double d_im, zmc_surface** out);
/* h given as an expression in z */
zmc_status zmc_surface_reparametrize(const zmc_surface* s, const char* h_expr,
                                     zmc_surface** out);

zmc_status zmc_surface_default_grid(const zmc_surface* s, zmc_grid* out);
zmc_status zmc_surface_sample(const zmc_surface* s, const zmc_grid* grid_or_null,
                              zmc_patch** out);
/* Real period of the loop |z - c| = r on the surface's period chart when it
 * has one, otherwise on its primary chart. */
zmc_status zmc_surface_periods(const zmc_surface* s, double center_re, double center_im,
                               double radius, double out_period[3]);
void zmc_surface_free(zmc_surface* s);

/* --- patches ------------------------------------------------------------- */

zmc_status zmc_patch_dims(const zmc_patch* p, int* nu, int* nv);
zmc_status zmc_patch_point(const zmc_patch* p, int i, int j, double out_xyz[3]);
zmc_status zmc_patch_obj(const zmc_patch* p, const char* object_name, char** out);
zmc_status zmc_patch_mean_curvature(const zmc_patch* p, double* out_max_abs_h);
void zmc_patch_free(zmc_patch* p);

/* --- verification -------------------------------------------------------- */

/* suite: isotropy | bjorling | equivariance | involution | pr1 | t1 |
 *        bonnet-family | periods | goursat | thm53 | curvature | all.
 * Writes the certificate report JSON and whether every check passed. */
zmc_status zmc_verify(const char* suite, char** report_json, int* all_pass);
/* As zmc_verify, but first re-judges certificates whose id starts with one of
 * the given prefixes against the matching tolerance override. */
zmc_status zmc_verify_with_tolerances(const char* suite, const char* const* id_prefixes,
                                      const double* tolerances, size_t n,
                                      char** report_json, int* all_pass);
/* Newline-separated list of suite names. */
zmc_status zmc_verify_suites(char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ZMC_H */
