/*
 * (C) Copyright 2026 zmc authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <doctest.h>

#include <cmath>

#include "zmc/bjorling.hpp"
#include "zmc/catalog.hpp"
#include "zmc/error.hpp"
#include "zmc/quadrature.hpp"

using namespace zmc;

TEST_CASE("catalog Bjorling data satisfies the normal-field invariants") {
  for (const char* name : {"elliptic_catenoid", "hyperbolic_catenoid", "parabolic_catenoid"}) {
    for (double a : {0.0, 1.0, -1.0}) {
      Surface s = build_surface(name, {{"a", a}});
      CHECK_NOTHROW(validate_bjorling(*s.bjorling));
    }
  }
}

TEST_CASE("non-unit or non-orthogonal normal fields are rejected") {
  Surface s = build_surface("elliptic_catenoid");
  SUBCASE("scaled field") {
    BjorlingData d = *s.bjorling;
    for (auto& comp : d.V) comp = Expr::constant(1.1) * comp;
    CHECK_THROWS_AS(bjorling_isotropic(d), Error);
  }
  SUBCASE("tilted field") {
    BjorlingData d = *s.bjorling;
    d.V[0] = d.V[0] + Expr::constant(0.2);
    try {
      bjorling_isotropic(d);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::IsotropyBroken);
    }
  }
}

TEST_CASE("constructed curves match the rotational closed-chart curves") {
  Surface s = build_surface("elliptic_catenoid", {{"a", 1.0}});
  IsotropicCurve c = bjorling_isotropic(*s.bjorling);
  CHECK(curves_equal(c, *s.closed->curve, default_samples({})));
}

TEST_CASE("core curve is the parameter line v = 0") {
  for (const char* name : {"elliptic_catenoid", "hyperbolic_catenoid", "parabolic_catenoid"}) {
    Surface s = build_surface(name, {{"a", 1.0}});
    const BjorlingData& d = *s.bjorling;
    IsotropicCurve c = bjorling_isotropic(d);
    GridSpec g{-1.0, 1.0, 21, -0.02, 0.02, 5};
    SurfacePatch p = sample_patch(c, d.z0, bjorling_base_point(d), g);
    for (int i = 0; i < g.nu; ++i) {
      double u = p.us[i];
      Vec3C alpha{d.alpha[0].eval(cplx(u, 0), d.params), d.alpha[1].eval(cplx(u, 0), d.params),
                  d.alpha[2].eval(cplx(u, 0), d.params)};
      CHECK(norm_inf(p.at(i, 2) - alpha.real()) < 1e-8);
    }
  }
}

TEST_CASE("surface normal along the core curve is parallel to V") {
  for (const char* name : {"elliptic_catenoid", "hyperbolic_catenoid", "parabolic_catenoid"}) {
    Surface s = build_surface(name, {{"a", 1.0}});
    const BjorlingData& d = *s.bjorling;
    IsotropicCurve c = bjorling_isotropic(d);
    // Fine strip around v = 0: central differences at h = 2.5e-4 keep the
    // discretization angle error well below 1e-6 rad.
    const double h = 2.5e-4;
    GridSpec g{-0.5, 0.5, 11, -3 * h, 3 * h, 7};
    SurfacePatch p = sample_patch(c, d.z0, bjorling_base_point(d), g);
    int mid = 3; // v = 0 row
    double hv = p.vs[1] - p.vs[0];
    double hu = p.us[1] - p.us[0];
    for (int i = 1; i + 1 < g.nu; ++i) {
      Vec3R Xu = (p.at(i + 1, mid) - p.at(i - 1, mid)) * (0.5 / hu);
      Vec3R Xv = (p.at(i, mid + 1) - p.at(i, mid - 1)) * (0.5 / hv);
      Vec3R n = cross(Xu, Xv, d.sig);
      cplx u(p.us[i], 0);
      Vec3R V{d.V[0].eval(u, d.params).real(), d.V[1].eval(u, d.params).real(),
              d.V[2].eval(u, d.params).real()};
      Vec3R axb = cross(n, V, Signature::Euclidean);
      double sin_angle = norm2(axb) / (norm2(n) * norm2(V));
      CHECK(sin_angle < 1e-6);
    }
  }
}

TEST_CASE("a = 0 with timelike axis gives the plane, not an error") {
  Surface s = build_surface("elliptic_catenoid", {{"a", 0.0}});
  IsotropicCurve c = bjorling_isotropic(*s.bjorling);
  GridSpec g{-1.0, 1.0, 13, -0.5, 0.5, 13};
  SurfacePatch p = sample_patch(c, s.bjorling->z0, bjorling_base_point(*s.bjorling), g);
  for (int j = 0; j < g.nv; ++j)
    for (int i = 0; i < g.nu; ++i) CHECK(std::abs(p.at(i, j).z) < 1e-10);
}
