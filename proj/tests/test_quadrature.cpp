/*
 * (C) Copyright 2026 zmc authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <doctest.h>

#include <cmath>

#include "zmc/catalog.hpp"
#include "zmc/error.hpp"
#include "zmc/quadrature.hpp"

using namespace zmc;

namespace {
const cplx I(0, 1);
Expr Z() { return Expr::var(); }
Expr K(cplx v) { return Expr::constant(v); }
} // namespace

TEST_CASE("integration basics") {
  SUBCASE("constant curve over a unit segment") {
    IsotropicCurve c;
    c.c = {K(1), K(0), K(0)};
    c.sig = Signature::Euclidean;
    Vec3C v = integrate(c, Path::line(cplx(0, 0), cplx(1, 0)));
    CHECK(std::abs(v.x - cplx(1, 0)) < 1e-14);
    CHECK(std::abs(v.y) < 1e-14);
  }
  SUBCASE("residue integral of 1/z around the unit circle") {
    cplx v = integrate_expr(K(1) / Z(), {}, Path::circle(cplx(0, 0), 1.0), {cplx(0, 0)});
    CHECK(std::abs(v - cplx(0, 2 * M_PI)) < 1e-12);
  }
  SUBCASE("second component of the rational Bonnet curve") {
    Expr phi2 = K(I) * (K(1) + pow(Z() + K(1), 2)) / (K(2) * pow(Z(), 2));
    cplx v = integrate_expr(phi2, {}, Path::circle(cplx(0, 0), 1.0), {cplx(0, 0)});
    CHECK(std::abs(v - cplx(-2 * M_PI, 0)) < 1e-12);
  }
}

TEST_CASE("paths keep clear of punctures") {
  SUBCASE("straight line through a pole is rejected") {
    Expr e = K(1) / Z();
    CHECK_THROWS_AS(
        integrate_expr(e, {}, Path::line(cplx(-1, 0), cplx(1, 0)), {cplx(0, 0)}), Error);
  }
  SUBCASE("canonical path deflects counterclockwise") {
    Path p = canonical_path(cplx(1, 0), cplx(-1, 0), {cplx(0, 0)});
    CHECK(p.segments.size() == 3);
    cplx v = integrate_expr(K(1) / Z(), {}, p, {cplx(0, 0)});
    // Upper-half detour: integral of dz/z from 1 to -1 is i pi.
    CHECK(std::abs(v - cplx(0, M_PI)) < 1e-12);
  }
  SUBCASE("canonical path is straight when nothing is in the way") {
    Path p = canonical_path(cplx(1, 0), cplx(2, 2), {cplx(0, 0)});
    CHECK(p.segments.size() == 1);
  }
  SUBCASE("subdivision limit on an essential singularity nearby") {
    // The path clears the declared point by more than 1e-3, but exp(1/(z-p))
    // oscillates too violently there for any subdivision depth.
    cplx p(0.5, 0.0015);
    Expr e = exp(K(1) / (Z() - K(p)));
    try {
      integrate_expr(e, {}, Path::line(cplx(0, 0), cplx(1, 0)), {p});
      CHECK(false);
    } catch (const Error& err) {
      CHECK(err.code() == Errc::ToleranceNotMet);
    }
  }
}

TEST_CASE("surface sampling") {
  SUBCASE("plane data gives a flat patch") {
    Surface s = build_surface("plane");
    SurfacePatch p = sample(s, GridSpec{-1, 1, 9, -1, 1, 9});
    for (int j = 0; j < 9; ++j)
      for (int i = 0; i < 9; ++i) CHECK(std::abs(p.at(i, j).z) < 1e-14);
  }
  SUBCASE("grid node on a puncture is rejected") {
    Surface s = build_surface("euclidean_catenoid");
    CHECK_THROWS_AS(sample(s, GridSpec{-1, 1, 5, -1, 1, 5}), Error);
  }
  SUBCASE("elliptic catenoid closed chart matches its integral") {
    Surface s = build_surface("elliptic_catenoid", {{"a", 1.0}});
    GridSpec g{-1.2, 1.2, 13, -1.2, 1.2, 13};
    SurfacePatch integ = sample_patch(s.closed->curve ? *s.closed->curve : s.curve,
                                      s.closed->z0, s.closed->X0, g);
    SurfacePatch cf = closed_patch(s, g);
    double worst = 0;
    for (int j = 0; j < g.nv; ++j)
      for (int i = 0; i < g.nu; ++i)
        worst = std::max(worst, norm_inf(integ.at(i, j) - cf.at(i, j)));
    CHECK(worst < 1e-8);
  }
}

TEST_CASE("real periods") {
  SUBCASE("Euclidean catenoid has none") {
    Surface s = build_surface("euclidean_catenoid");
    Vec3R p = real_period(s.curve, Path::circle(cplx(0, 0), 1.0));
    CHECK(norm_inf(p) < 1e-8);
  }
  SUBCASE("Bonnet minimal has (0, -2 pi lambda, 0)") {
    Surface s = build_surface("bonnet_minimal", {{"lambda", 1.0}});
    Vec3R p = real_period(s.period->curve, Path::circle(cplx(0, 0), 1.0));
    CHECK(std::abs(p.x) < 1e-10);
    CHECK(p.y == doctest::Approx(-2 * M_PI).epsilon(1e-12));
    CHECK(std::abs(p.z) < 1e-10);
  }
  SUBCASE("degenerate loop integrates to zero") {
    Surface s = build_surface("bonnet_minimal");
    Path loop = Path::line(cplx(1, 0), cplx(1, 0));
    Vec3R p = real_period(s.period->curve, loop);
    CHECK(norm_inf(p) == 0.0);
  }
  SUBCASE("open paths are rejected") {
    Surface s = build_surface("bonnet_minimal");
    CHECK_THROWS_AS(real_period(s.period->curve, Path::line(cplx(1, 0), cplx(2, 0))), Error);
  }
}

TEST_CASE("residue oracle") {
  CHECK(std::abs(residue_oracle(K(1) / Z(), cplx(0, 0)) - cplx(1, 0)) < 1e-12);
  CHECK(std::abs(residue_oracle(pow(Z(), -2), cplx(0, 0))) < 1e-12);
  Expr phi2 = K(I) * (K(1) + pow(Z() + K(1), 2)) / (K(2) * pow(Z(), 2));
  CHECK(std::abs(residue_oracle(phi2, cplx(0, 0)) - I) < 1e-12);
  SUBCASE("shifted pole") {
    Expr e = K(1) / (Z() - K(cplx(0, 2)));
    CHECK(std::abs(residue_oracle(e, cplx(0, 2)) - cplx(1, 0)) < 1e-12);
  }
  SUBCASE("branch points are flagged") {
    CHECK_THROWS_AS(residue_oracle(log(Z()), cplx(0, 0)), Error);
    try {
      residue_oracle(log(Z()), cplx(0, 0));
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotIsolatedPole);
    }
  }
}

TEST_CASE("finite-difference mean curvature") {
  SUBCASE("plane is exactly flat") {
    SurfacePatch p = closed_form_patch([](double u, double v) { return Vec3R{u, v, 0}; },
                                       Signature::Euclidean, GridSpec{-1, 1, 21, -1, 1, 21});
    CHECK(mean_curvature_fd(p) < 1e-14);
  }
  SUBCASE("catenoid closed form") {
    SurfacePatch p = closed_form_patch(
        [](double u, double v) {
          return Vec3R{std::cosh(v) * std::cos(u), std::cosh(v) * std::sin(u), v};
        },
        Signature::Euclidean, GridSpec{-0.5, 0.5, 101, -0.5, 0.5, 101});
    CHECK(mean_curvature_fd(p) < 1e-5);
  }
  SUBCASE("sphere has mean curvature 1") {
    SurfacePatch p = closed_form_patch(
        [](double u, double v) {
          return Vec3R{std::cos(u) * std::cos(v), std::sin(u) * std::cos(v), std::sin(v)};
        },
        Signature::Euclidean, GridSpec{-0.4, 0.4, 81, -0.4, 0.4, 81});
    double h = mean_curvature_fd(p);
    CHECK(h == doctest::Approx(1.0).epsilon(1e-6));
  }
  SUBCASE("non-spacelike Lorentzian patches are rejected") {
    SurfacePatch p = closed_form_patch([](double u, double v) { return Vec3R{u, 0.0, v}; },
                                       Signature::Lorentzian, GridSpec{-1, 1, 9, -1, 1, 9});
    try {
      mean_curvature_fd(p);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::DegenerateFirstForm);
    }
  }
}

TEST_CASE("curvature integrals") {
  SUBCASE("Enneper pointwise curvature at the origin") {
    Surface s = build_surface("enneper");
    CHECK(gauss_curvature(s.data, cplx(0, 0)) == doctest::Approx(-16.0).epsilon(1e-12));
  }
  SUBCASE("plane has zero total curvature") {
    Surface s = build_surface("plane");
    CHECK(total_curvature(s.data, 5.0) == 0.0);
  }
  SUBCASE("Enneper total curvature approaches -4 pi") {
    Surface s = build_surface("enneper");
    double tc = total_curvature(s.data, 10.0);
    CHECK(std::abs(tc + 4 * M_PI) < 0.05 * 4 * M_PI);
    // and it grows monotonically with the radius
    CHECK(std::abs(total_curvature(s.data, 2.0)) < std::abs(total_curvature(s.data, 5.0)));
  }
  SUBCASE("Lorentzian data is rejected") {
    Surface s = build_surface("elliptic_catenoid");
    CHECK_THROWS_AS(total_curvature(s.data, 5.0), Error);
  }
}
