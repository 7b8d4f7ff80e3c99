/*
 * (C) Copyright 2026 zmc authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <doctest.h>

#include <cmath>

#include "zmc/catalog.hpp"
#include "zmc/descriptor.hpp"
#include "zmc/error.hpp"
#include "zmc/isometry.hpp"
#include "zmc/quadrature.hpp"

using namespace zmc;

namespace {
const cplx I(0, 1);
Expr Z() { return Expr::var(); }
Expr K(cplx v) { return Expr::constant(v); }

double patch_gap(const SurfacePatch& a, const SurfacePatch& b) {
  double worst = 0;
  for (int j = 0; j < a.nv(); ++j)
    for (int i = 0; i < a.nu(); ++i)
      worst = std::max(worst, norm_inf((a.at(i, j) - a.at(0, 0)) - (b.at(i, j) - b.at(0, 0))));
  return worst;
}
} // namespace

TEST_CASE("every entry's Weierstrass data matches its curve") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    Surface s = build_surface(name);
    auto pts = annulus_samples(20, 71, s.curve.punctures, 0.35, 1.45);
    // f = c1 - i c2 and g f = c3 under evaluation
    Expr f_from_curve = s.curve.c[0] - K(I) * s.curve.c[1];
    CHECK(exprs_equal(s.data.f, f_from_curve, s.params, pts, 1e-9));
    Expr gf = s.data.g * s.data.f;
    CHECK(exprs_equal(gf, s.curve.c[2], s.params, pts, 1e-9));
  }
}

TEST_CASE("closed forms agree with integration on a coarse grid") {
  for (const auto& name : catalog_names()) {
    Surface s = build_surface(name);
    if (!s.closed) continue;
    CAPTURE(name);
    GridSpec g{-1.2, 1.2, 13, -1.2, 1.2, 13};
    const IsotropicCurve& chart = s.closed->curve ? *s.closed->curve : s.curve;
    SurfacePatch integ = sample_patch(chart, s.closed->z0, s.closed->X0, g);
    SurfacePatch cf = closed_form_patch(s.closed->X, s.sig(), g);
    CHECK(patch_gap(integ, cf) < 1e-8);
  }
}

TEST_CASE("stated Weierstrass data at a = 0") {
  SUBCASE("hyperbolic catenoid") {
    Surface s = build_surface("hyperbolic_catenoid", {{"a", 0.0}});
    Expr g0 = K(I) * (exp(Z()) - K(1)) / (exp(Z()) + K(1));
    Expr f0 = K(-I) * pow(exp(Z()) + K(1), 2) / (K(2) * exp(Z()));
    auto pts = annulus_samples(20, 72, {});
    CHECK(exprs_equal(s.data.g, g0, s.params, pts));
    CHECK(exprs_equal(s.data.f, f0, s.params, pts));
  }
  SUBCASE("parabolic catenoid") {
    Surface s = build_surface("parabolic_catenoid", {{"a", 0.0}});
    Expr g0 = Z() / (Z() - K(cplx(0, 2)));
    Expr f0 = K(I) * pow(Z() - K(cplx(0, 2)), 2) * K(0.5);
    auto pts = annulus_samples(20, 73, {});
    CHECK(exprs_equal(s.data.g, g0, s.params, pts));
    CHECK(exprs_equal(s.data.f, f0, s.params, pts));
  }
}

TEST_CASE("helicoid is the adjoint of the catenoid's exponential chart") {
  Surface hel = build_surface("helicoid_E3");
  IsotropicCurve cat_exp;
  cat_exp.c = {-sinh(Z()), K(I) * cosh(Z()), K(1)};
  cat_exp.sig = Signature::Euclidean;
  IsotropicCurve adjoint = associate(cat_exp, M_PI / 2);
  CHECK(curves_equal(hel.curve, adjoint, default_samples({}), 1e-12));
}

TEST_CASE("rotated catenoid at t = 0 is the catenoid's exponential chart") {
  Surface c0 = build_surface("rotated_catenoid_Ct", {{"t", 0.0}});
  IsotropicCurve expected;
  expected.c = {-sin(Z()), cos(Z()), K(-I)};
  expected.sig = Signature::Euclidean;
  CHECK(curves_equal(c0.curve, expected, default_samples({})));
}

TEST_CASE("dual of C_0 integrates to the t = 0 Bonnet closed form") {
  Surface c0 = build_surface("rotated_catenoid_Ct", {{"t", 0.0}});
  Surface b0 = build_surface("bonnet_maximal", {{"t", 0.0}});
  GridSpec g{-1.0, 1.0, 13, -1.0, 1.0, 13};
  SurfacePatch dual_patch = sample_patch(dual(c0.curve), cplx(0, 0), {0, 0, 0}, g);
  SurfacePatch cf = closed_form_patch(b0.closed->X, Signature::Lorentzian, g);
  CHECK(patch_gap(dual_patch, cf) < 1e-8);
}

TEST_CASE("dual of the hyperbolic catenoid integrates to the explicit catenoid") {
  Surface hyp = build_surface("hyperbolic_catenoid", {{"a", 0.0}});
  GridSpec g{-1.2, 1.2, 13, -1.2, 1.2, 13};
  SurfacePatch dual_patch = sample_patch(dual(hyp.curve), cplx(0, 0), {0, 0, 0}, g);
  SurfacePatch cf = closed_form_patch(
      [](double u, double v) {
        return Vec3R{u, -std::cosh(u) * std::sin(v), std::cos(v) * std::cosh(u) - 1.0};
      },
      Signature::Euclidean, g);
  CHECK(patch_gap(dual_patch, cf) < 1e-8);
}

TEST_CASE("deformed-dual entries match the rotation + duality pipeline") {
  auto pts = annulus_samples(20, 75, {}, 0.3, 1.4);
  SUBCASE("bonnet_maximal is the dual of C_t") {
    double t = M_PI / 8;
    Surface ct = build_surface("rotated_catenoid_Ct", {{"t", t}});
    Surface bm = build_surface("bonnet_maximal", {{"t", t}});
    CHECK(curves_equal(bm.curve, dual(ct.curve), pts));
  }
  SUBCASE("Yt is the dual of the boosted elliptic catenoid") {
    IsotropicCurve psi; // exponential chart of the elliptic catenoid
    psi.c = {cosh(Z()), K(-I) * sinh(Z()), K(1)};
    psi.sig = Signature::Lorentzian;
    double t = 1.0;
    Surface yt = build_surface("bonnet_minimal_Yt", {{"t", t}});
    IsotropicCurve piped =
        dual(act_on_curve(make_isometry(IsometryKind::HyperbolicRotation, t), psi));
    CHECK(curves_equal(yt.curve, piped, pts, 1e-9));
  }
  SUBCASE("Zt is the dual of the parabolically rotated elliptic catenoid") {
    IsotropicCurve psi;
    psi.c = {cosh(Z()), K(-I) * sinh(Z()), K(1)};
    psi.sig = Signature::Lorentzian;
    double t = 1.0;
    Surface zt = build_surface("goursat_bonnet_Zt", {{"t", t}});
    IsotropicCurve piped =
        dual(act_on_curve(make_isometry(IsometryKind::ParabolicRotation, t), psi));
    CHECK(curves_equal(zt.curve, piped, pts, 1e-9));
  }
  SUBCASE("Wt is the dual of the parabolically rotated hyperbolic catenoid") {
    double t = 1.0;
    Surface hyp = build_surface("hyperbolic_catenoid", {{"a", 0.0}});
    Surface wt = build_surface("goursat_bonnet_Wt", {{"t", t}});
    IsotropicCurve piped =
        dual(act_on_curve(make_isometry(IsometryKind::ParabolicRotation, t), hyp.curve));
    CHECK(curves_equal(wt.curve, piped, pts, 1e-9));
  }
  SUBCASE("Xt is the dual of the boosted parabolic catenoid") {
    double t = 1.0;
    Surface par = build_surface("parabolic_catenoid", {{"a", 0.0}});
    Surface xt = build_surface("enneper_family_Xt", {{"t", t}});
    IsotropicCurve piped =
        dual(act_on_curve(make_isometry(IsometryKind::HyperbolicRotation, t), par.curve));
    CHECK(curves_equal(xt.curve, piped, pts, 1e-9));
  }
}

TEST_CASE("normalized Bonnet data links to the primary chart") {
  // The normalized family arises from the primary curve by the change
  // z -> -i z followed by the motion (x, y, z) -> (-y, x, -z).
  double t = 0.7;
  Surface b = build_surface("bonnet_maximal", {{"t", t}});
  IsotropicCurve lhs = isotropic_from_weierstrass(bonnet_maximal_normalized_data(t));
  IsotropicCurve pulled = reparametrize(b.curve, K(-I) * Z());
  Mat3C motion;
  motion.m = {cplx(0), cplx(-1), cplx(0), cplx(1), cplx(0),
              cplx(0), cplx(0), cplx(0),  cplx(-1)};
  IsotropicCurve rhs = apply_linear(motion, pulled);
  CHECK(curves_equal(lhs, rhs, default_samples({}), 1e-9));
}

TEST_CASE("Bonnet minimal degenerates to the catenoid as lambda -> 0") {
  Surface b = build_surface("bonnet_minimal", {{"lambda", 1e-6}});
  Surface cat = build_surface("euclidean_catenoid");
  WeierstrassData cat_exp = reparametrize(cat.data, exp(Z()));
  IsotropicCurve cat_curve = isotropic_from_weierstrass(cat_exp);
  GridSpec g{-1.0, 1.0, 13, -1.0, 1.0, 13};
  SurfacePatch pb = sample_patch(b.curve, cplx(0, 0), {0, 0, 0}, g);
  SurfacePatch pc = sample_patch(cat_curve, cplx(0, 0), {0, 0, 0}, g);
  CHECK(patch_gap(pb, pc) < 1e-4);
}

TEST_CASE("builder errors") {
  CHECK_THROWS_AS(build_surface("scherk"), Error);
  try {
    build_surface("scherk");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnknownName);
  }
  CHECK_THROWS_AS(build_surface("bonnet_minimal", {{"lambda", -1.0}}), Error);
  CHECK_THROWS_AS(build_surface("rotated_catenoid_Ct", {{"t", 9.0}}), Error);
  try {
    build_surface("elliptic_catenoid", {{"b", 2.0}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParameterOutOfRange);
  }
}

TEST_CASE("descriptor JSON round trip") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    Surface s = build_surface(name);
    Surface back = surface_from_json(surface_to_json(s));
    auto pts = annulus_samples(20, 74, s.curve.punctures, 0.35, 1.45);
    CHECK(curves_equal(back.curve, s.curve, pts, 1e-9));
    CHECK(back.sig() == s.sig());
    CHECK(std::abs(back.z0 - s.z0) < 1e-15);
  }
  CHECK_THROWS_AS(surface_from_json("{ not json"), Error);
  CHECK_THROWS_AS(surface_from_json("{\"g\": \"z\"}"), Error);
}

TEST_CASE("catalog metadata") {
  auto infos = catalog_infos();
  CHECK(infos.size() == 14);
  int closed = 0, period = 0;
  for (const auto& info : infos) {
    closed += info.has_closed_form ? 1 : 0;
    period += info.has_period_chart ? 1 : 0;
  }
  CHECK(closed == 9);
  CHECK(period == 8);
  CHECK(catalog_to_json().find("bonnet_maximal") != std::string::npos);
}
