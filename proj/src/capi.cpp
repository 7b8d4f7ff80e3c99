/*
 * (C) Copyright 2026 zmc authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "zmc.h"

#include <cstring>
#include <string>

#include "zmc/catalog.hpp"
#include "zmc/descriptor.hpp"
#include "zmc/error.hpp"
#include "zmc/isometry.hpp"
#include "zmc/mesh.hpp"
#include "zmc/verify.hpp"

using namespace zmc;

struct zmc_expr {
  Expr e;
};
struct zmc_surface {
  Surface s;
};
struct zmc_patch {
  SurfacePatch p;
};

namespace {

thread_local std::string g_last_error;

zmc_status map_errc(Errc c) {
  switch (c) {
    case Errc::ParseError: return ZMC_ERR_PARSE;
    case Errc::UnboundParameter: return ZMC_ERR_UNBOUND_PARAMETER;
    case Errc::DivisionByZero: return ZMC_ERR_DIVISION_BY_ZERO;
    case Errc::DegenerateGaussMap:
    case Errc::DegenerateMoebius:
    case Errc::SingularChange:
    case Errc::DegenerateMetric:
    case Errc::DegenerateFirstForm:
    case Errc::GridMismatch: return ZMC_ERR_DEGENERATE;
    case Errc::IsotropyBroken: return ZMC_ERR_ISOTROPY_BROKEN;
    case Errc::SignatureMismatch: return ZMC_ERR_SIGNATURE_MISMATCH;
    case Errc::InvalidParameter: return ZMC_ERR_INVALID_ARGUMENT;
    case Errc::PathThroughPuncture: return ZMC_ERR_PATH_THROUGH_PUNCTURE;
    case Errc::ToleranceNotMet: return ZMC_ERR_TOLERANCE_NOT_MET;
    case Errc::NotIsolatedPole: return ZMC_ERR_TOLERANCE_NOT_MET;
    case Errc::UnknownName: return ZMC_ERR_UNKNOWN_NAME;
    case Errc::ParameterOutOfRange: return ZMC_ERR_PARAMETER_OUT_OF_RANGE;
    case Errc::IoError: return ZMC_ERR_IO;
    case Errc::Internal: return ZMC_ERR_INTERNAL;
  }
  return ZMC_ERR_INTERNAL;
}

template <typename F>
zmc_status guarded(F&& fn) {
  try {
    fn();
    return ZMC_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return map_errc(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ZMC_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ParamMap collect_params(const char* const* names, const double* values, size_t n) {
  ParamMap p;
  for (size_t k = 0; k < n; ++k) p[names[k]] = values[k];
  return p;
}

GridSpec to_grid(const zmc_grid& g) {
  return {g.umin, g.umax, g.nu, g.vmin, g.vmax, g.nv};
}

} // namespace

extern "C" {

const char* zmc_status_name(zmc_status s) {
  switch (s) {
    case ZMC_OK: return "ok";
    case ZMC_ERR_PARSE: return "parse-error";
    case ZMC_ERR_UNBOUND_PARAMETER: return "unbound-parameter";
    case ZMC_ERR_DIVISION_BY_ZERO: return "division-by-zero";
    case ZMC_ERR_DEGENERATE: return "degenerate";
    case ZMC_ERR_ISOTROPY_BROKEN: return "isotropy-broken";
    case ZMC_ERR_SIGNATURE_MISMATCH: return "signature-mismatch";
    case ZMC_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case ZMC_ERR_PATH_THROUGH_PUNCTURE: return "path-through-puncture";
    case ZMC_ERR_TOLERANCE_NOT_MET: return "tolerance-not-met";
    case ZMC_ERR_UNKNOWN_NAME: return "unknown-name";
    case ZMC_ERR_PARAMETER_OUT_OF_RANGE: return "parameter-out-of-range";
    case ZMC_ERR_IO: return "io-error";
    case ZMC_ERR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

const char* zmc_last_error(void) { return g_last_error.c_str(); }

const char* zmc_version(void) { return "1.0.0"; }

void zmc_string_free(char* s) { std::free(s); }

/* --- expressions --------------------------------------------------------- */

zmc_status zmc_expr_parse(const char* text, zmc_expr** out) {
  if (!text || !out) return ZMC_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = new zmc_expr{parse_expr(text)}; });
}

zmc_status zmc_expr_print(const zmc_expr* e, char** out) {
  if (!e || !out) return ZMC_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = dup_string(e->e.str()); });
}

zmc_status zmc_expr_differentiate(const zmc_expr* e, zmc_expr** out) {
  if (!e || !out) return ZMC_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = new zmc_expr{e->e.differentiate()}; });
}

zmc_status zmc_expr_eval(const zmc_expr* e, double z_re, double z_im,
                         const char* const* names, const double* values, size_t nparams,
                         double* out_re, double* out_im) {
  if (!e || !out_re || !out_im) return ZMC_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    cplx v = e->e.eval(cplx(z_re, z_im), collect_params(names, values, nparams));
    *out_re = v.real();
    *out_im = v.imag();
  });
}

void zmc_expr_free(zmc_expr* e) { delete e; }

/* --- surfaces ------------------------------------------------------------ */

zmc_status zmc_catalog_json(char** out) {
  if (!out) return ZMC_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = dup_string(catalog_to_json()); });
}

zmc_status zmc_surface_build(const char* name, const char* const* param_names,
                             const double* param_values, size_t nparams, zmc_surface** out) {
  if (!name || !out) return ZMC_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = new zmc_surface{
        build_surface(name, collect_params(param_names, param_values, nparams))};
  });
}

zmc_status zmc_surface_from_json(const char* json, zmc_surface** out) {
  if (!json || !out) return ZMC_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = new zmc_surface{surface_from_json(json)}; });
}

zmc_status zmc_surface_to_json(const zmc_surface* s, char** out) {
  if (!s || !out) return ZMC_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = dup_string(surface_to_json(s->s)); });
}

zmc_status zmc_surface_bjorling(const char* json, zmc_surface** out) {
  if (!json || !out) return ZMC_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    BjorlingData d = bjorling_from_json(json);
    Surface s;
    s.name = "bjorling";
    s.description = "Bjorling surface from core curve and normal field";
    s.params = d.params;
    s.curve = bjorling_isotropic(d);
    s.data = weierstrass_from_isotropic(s.curve);
    s.z0 = d.z0;
    s.X0 = bjorling_base_point(d);
    s.bjorling = d;
    *out = new zmc_surface{std::move(s)};
  });
}

zmc_status zmc_surface_dual(const zmc_surface* s, zmc_surface** out) {
  if (!s || !out) return ZMC_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = new zmc_surface{dual_surface(s->s)}; });
}

zmc_status zmc_surface_associate(const zmc_surface* s, double theta, zmc_surface** out) {
  if (!s || !out) return ZMC_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    Surface r = s->s;
    r.name = "associate(" + s->s.name + ")";
    r.curve = associate(s->s.curve, theta);
    r.data = weierstrass_from_isotropic(r.curve);
    r.closed.reset();
    r.period.reset();
    r.bjorling.reset();
    r.X0 = {0, 0, 0};
    *out = new zmc_surface{std::move(r)};
  });
}

zmc_status zmc_surface_isometry(const zmc_surface* s, const char* kind, double param,
                                zmc_surface** out) {
  if (!s || !kind || !out) return ZMC_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    AmbientIsometry iso = make_isometry(isometry_kind_from_name(kind), param);
    Surface r = s->s;
    r.name = std::string(kind) + "(" + s->s.name + ")";
    r.curve = act_on_curve(iso, s->s.curve);
    r.data = weierstrass_from_isotropic(r.curve);
    r.closed.reset();
    r.period.reset();
    r.bjorling.reset();
    r.X0 = iso.linear.apply(s->s.X0);
    *out = new zmc_surface{std::move(r)};
  });
}

zmc_status zmc_surface_goursat(const zmc_surface* s, double a_re, double a_im, double b_re,
                               double b_im, double c_re, double c_im, double d_re,
                               double d_im, zmc_surface** out) {
  if (!s || !out) return ZMC_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    MoebiusMap t{{a_re, a_im}, {b_re, b_im}, {c_re, c_im}, {d_re, d_im}};
    Surface r = s->s;
    r.name = "goursat(" + s->s.name + ")";
    r.data = goursat(s->s.data, t);
    r.curve = isotropic_from_weierstrass(r.data);
    r.closed.reset();
    r.period.reset();
    r.bjorling.reset();
    r.X0 = {0, 0, 0};
    *out = new zmc_surface{std::move(r)};
  });
}

zmc_status zmc_surface_reparametrize(const zmc_surface* s, const char* h_expr,
                                     zmc_surface** out) {
  if (!s || !h_expr || !out) return ZMC_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    Expr h = parse_expr(h_expr);
    Surface r = s->s;
    r.name = "reparametrize(" + s->s.name + ")";
    r.data = reparametrize(s->s.data, h);
    r.curve = reparametrize(s->s.curve, h);
    r.closed.reset();
    r.period.reset();
    r.bjorling.reset();
    *out = new zmc_surface{std::move(r)};
  });
}

zmc_status zmc_surface_default_grid(const zmc_surface* s, zmc_grid* out) {
  if (!s || !out) return ZMC_ERR_INVALID_ARGUMENT;
  const GridSpec& g = s->s.default_grid;
  *out = {g.umin, g.umax, g.nu, g.vmin, g.vmax, g.nv};
  return ZMC_OK;
}

zmc_status zmc_surface_sample(const zmc_surface* s, const zmc_grid* grid_or_null,
                              zmc_patch** out) {
  if (!s || !out) return ZMC_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    GridSpec grid = grid_or_null ? to_grid(*grid_or_null) : s->s.default_grid;
    *out = new zmc_patch{sample(s->s, grid)};
  });
}

zmc_status zmc_surface_periods(const zmc_surface* s, double center_re, double center_im,
                               double radius, double out_period[3]) {
  if (!s || !out_period) return ZMC_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const IsotropicCurve& c = s->s.period ? s->s.period->curve : s->s.curve;
    Vec3R p = real_period(c, Path::circle(cplx(center_re, center_im), radius));
    out_period[0] = p.x;
    out_period[1] = p.y;
    out_period[2] = p.z;
  });
}

void zmc_surface_free(zmc_surface* s) { delete s; }

/* --- patches ------------------------------------------------------------- */

zmc_status zmc_patch_dims(const zmc_patch* p, int* nu, int* nv) {
  if (!p || !nu || !nv) return ZMC_ERR_INVALID_ARGUMENT;
  *nu = p->p.nu();
  *nv = p->p.nv();
  return ZMC_OK;
}

zmc_status zmc_patch_point(const zmc_patch* p, int i, int j, double out_xyz[3]) {
  if (!p || !out_xyz) return ZMC_ERR_INVALID_ARGUMENT;
  if (i < 0 || i >= p->p.nu() || j < 0 || j >= p->p.nv()) return ZMC_ERR_INVALID_ARGUMENT;
  const Vec3R& v = p->p.at(i, j);
  out_xyz[0] = v.x;
  out_xyz[1] = v.y;
  out_xyz[2] = v.z;
  return ZMC_OK;
}

zmc_status zmc_patch_obj(const zmc_patch* p, const char* object_name, char** out) {
  if (!p || !out) return ZMC_ERR_INVALID_ARGUMENT;
  return guarded(
      [&] { *out = dup_string(obj_string(p->p, object_name ? object_name : "surface")); });
}

zmc_status zmc_patch_mean_curvature(const zmc_patch* p, double* out_max_abs_h) {
  if (!p || !out_max_abs_h) return ZMC_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out_max_abs_h = mean_curvature_fd(p->p); });
}

void zmc_patch_free(zmc_patch* p) { delete p; }

/* --- verification -------------------------------------------------------- */

zmc_status zmc_verify(const char* suite, char** report_json_out, int* all_pass_out) {
  if (!suite || !report_json_out || !all_pass_out) return ZMC_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    auto certs = run_suite(suite);
    *report_json_out = dup_string(report_json(suite, certs));
    *all_pass_out = all_pass(certs) ? 1 : 0;
  });
}

zmc_status zmc_verify_with_tolerances(const char* suite, const char* const* id_prefixes,
                                      const double* tolerances, size_t n,
                                      char** report_json_out, int* all_pass_out) {
  if (!suite || !report_json_out || !all_pass_out) return ZMC_ERR_INVALID_ARGUMENT;
  if (n > 0 && (!id_prefixes || !tolerances)) return ZMC_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    auto certs = run_suite(suite);
    std::map<std::string, double> overrides;
    for (size_t k = 0; k < n; ++k) overrides[id_prefixes[k]] = tolerances[k];
    apply_tolerance_overrides(certs, overrides);
    *report_json_out = dup_string(report_json(suite, certs));
    *all_pass_out = all_pass(certs) ? 1 : 0;
  });
}

zmc_status zmc_verify_suites(char** out) {
  if (!out) return ZMC_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    std::string s;
    for (const auto& name : suite_names()) {
      s += name;
      s += '\n';
    }
    *out = dup_string(s);
  });
}

} /* extern "C" */
