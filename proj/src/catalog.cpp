/*
 * (C) Copyright 2026 zmc authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "zmc/catalog.hpp"

#include <cmath>

#include "zmc/error.hpp"

namespace zmc {

namespace {

const cplx I(0, 1);

Expr Z() { return Expr::var(); }
Expr K(cplx v) { return Expr::constant(v); }
Expr Kr(double v) { return Expr::constant(cplx(v, 0)); }

const GridSpec kEntireGrid{-1.2, 1.2, 49, -1.2, 1.2, 49};
// Punctured charts keep clear of the pole at the origin.
const GridSpec kPuncturedGrid{0.125, 2.525, 49, -1.2, 1.2, 49};

double getp(const ParamMap& p, const std::string& k) { return p.at(k); }

ParamMap merge_params(const ParamMap& defaults, const ParamMap& overrides,
                      const std::string& name) {
  ParamMap out = defaults;
  for (const auto& [k, v] : overrides) {
    if (!out.count(k))
      fail(Errc::ParameterOutOfRange, "surface '" + name + "' has no parameter '" + k + "'");
    out[k] = v;
  }
  return out;
}

// --- individual builders ----------------------------------------------------

Surface build_plane(const ParamMap&) {
  Surface s;
  s.name = "plane";
  s.description = "flat plane, g = 0, omega = dz";
  s.data = {K(0), K(1), Signature::Euclidean, {}, {}};
  s.curve = isotropic_from_weierstrass(s.data);
  s.default_grid = kEntireGrid;
  ClosedFormChart cf;
  cf.X = [](double u, double v) { return Vec3R{u / 2, -v / 2, 0}; };
  cf.grid = kEntireGrid;
  s.closed = cf;
  return s;
}

Surface build_euclidean_catenoid(const ParamMap&) {
  Surface s;
  s.name = "euclidean_catenoid";
  s.description = "minimal catenoid in E^3, g = z, omega = dz/z^2";
  s.axis = "(0,0,1)";
  s.data = {Z(), pow(Z(), -2), Signature::Euclidean, {cplx(0, 0)}, {}};
  s.curve = isotropic_from_weierstrass(s.data);
  s.z0 = cplx(1, 0);
  s.X0 = {-1, 0, 0};
  s.default_grid = kPuncturedGrid;
  s.period = PeriodChart{s.curve, cplx(0, 0), 1.0};
  return s;
}

Surface build_helicoid(const ParamMap&) {
  Surface s;
  s.name = "helicoid_E3";
  s.description = "helicoid in E^3, adjoint of the catenoid (exponential chart)";
  s.axis = "(0,0,1)";
  s.data = {exp(Z()), K(I) * exp(-Z()), Signature::Euclidean, {}, {}};
  IsotropicCurve c;
  c.c = {K(-I) * sinh(Z()), -cosh(Z()), K(I)};
  c.sig = Signature::Euclidean;
  s.curve = c;
  s.default_grid = kEntireGrid;
  IsotropicCurve rat;
  rat.c = {K(I) * (K(1) - pow(Z(), 2)) / (Kr(2) * pow(Z(), 2)),
           -((K(1) + pow(Z(), 2)) / (Kr(2) * pow(Z(), 2))), K(I) / Z()};
  rat.sig = Signature::Euclidean;
  rat.punctures = {cplx(0, 0)};
  s.period = PeriodChart{rat, cplx(0, 0), 1.0};
  return s;
}

Surface build_enneper(const ParamMap&) {
  Surface s;
  s.name = "enneper";
  s.description = "Enneper surface, g = z, omega = dz";
  s.data = {Z(), K(1), Signature::Euclidean, {}, {}};
  s.curve = isotropic_from_weierstrass(s.data);
  s.default_grid = kEntireGrid;
  return s;
}

Surface build_elliptic_catenoid(const ParamMap& p) {
  double a = getp(p, "a");
  Surface s;
  s.name = "elliptic_catenoid";
  s.description = "rotational maximal surface with timelike axis; normalized g = z, omega = dz/z^2";
  s.axis = "(0,0,1)";
  s.params = p;
  s.data = {Z(), pow(Z(), -2), Signature::Lorentzian, {cplx(0, 0)}, {}};
  s.curve = isotropic_from_weierstrass(s.data);
  s.z0 = cplx(1, 0);
  s.default_grid = kPuncturedGrid;
  s.period = PeriodChart{s.curve, cplx(0, 0), 1.0};

  Expr A = Expr::param("a");
  BjorlingData bd;
  bd.alpha = {cos(Z()), sin(Z()), K(0)};
  bd.V = {-(sinh(A) * cos(Z())), -(sinh(A) * sin(Z())), cosh(A)};
  bd.sig = Signature::Lorentzian;
  bd.z0 = cplx(0, 0);
  bd.params = p;
  s.bjorling = bd;

  ClosedFormChart cf;
  cf.X = [a](double u, double v) {
    double radial = std::cosh(a) * std::sinh(v) + std::cosh(v);
    return Vec3R{std::cos(u) * radial, std::sin(u) * radial, -v * std::sinh(a)};
  };
  IsotropicCurve psi;
  psi.c = {-sin(Z()) - K(I) * cosh(A) * cos(Z()), cos(Z()) - K(I) * cosh(A) * sin(Z()),
           K(I) * sinh(A)};
  psi.sig = Signature::Lorentzian;
  psi.params = p;
  cf.curve = psi;
  cf.z0 = cplx(0, 0);
  cf.X0 = {1, 0, 0};
  cf.grid = kEntireGrid;
  cf.curvature = {-0.85, 0.85, -0.35, 0.85, 0.01}; // spacelike for a = 1
  s.closed = cf;
  return s;
}

Surface build_hyperbolic_catenoid(const ParamMap& p) {
  double a = getp(p, "a");
  Surface s;
  s.name = "hyperbolic_catenoid";
  s.description = "rotational maximal surface with spacelike axis";
  s.axis = "(1,0,0)";
  s.params = p;
  Expr A = Expr::param("a");
  Expr N = exp(A + Z()) + K(I) * exp(A) + K(I) * exp(Z()) + K(1);
  WeierstrassData w;
  w.g = (K(I) * exp(A + Z()) + exp(A) - exp(Z()) - K(I)) / N;
  w.f = -(pow(N, 2) / (Kr(4) * exp(A + Z())));
  w.sig = Signature::Lorentzian;
  w.params = p;
  s.data = w;
  IsotropicCurve psi;
  psi.c = {K(-I) * cosh(A), cosh(Z()) - K(I) * sinh(A) * sinh(Z()),
           sinh(Z()) - K(I) * sinh(A) * cosh(Z())};
  psi.sig = Signature::Lorentzian;
  psi.params = p;
  s.curve = psi;
  s.z0 = cplx(0, 0);
  s.X0 = {0, 0, 1};
  s.default_grid = kEntireGrid;

  BjorlingData bd;
  bd.alpha = {K(0), sinh(Z()), cosh(Z())};
  bd.V = {sinh(A), cosh(A) * sinh(Z()), cosh(A) * cosh(Z())};
  bd.sig = Signature::Lorentzian;
  bd.z0 = cplx(0, 0);
  bd.params = p;
  s.bjorling = bd;

  ClosedFormChart cf;
  cf.X = [a](double u, double v) {
    double h = std::sinh(a) * std::sin(v) + std::cos(v);
    return Vec3R{v * std::cosh(a), std::sinh(u) * h, std::cosh(u) * h};
  };
  cf.z0 = cplx(0, 0);
  cf.X0 = {0, 0, 1};
  cf.grid = kEntireGrid;
  cf.curvature = {-0.85, 0.85, -0.3, 0.8, 0.01}; // spacelike for a = 1
  s.closed = cf;

  IsotropicCurve rat;
  Expr W2 = pow(Z(), 2);
  rat.c = {K(-I) * cosh(A) / Z(),
           ((W2 + K(1)) - K(I) * sinh(A) * (W2 - K(1))) / (Kr(2) * W2),
           ((W2 - K(1)) - K(I) * sinh(A) * (W2 + K(1))) / (Kr(2) * W2)};
  rat.sig = Signature::Lorentzian;
  rat.punctures = {cplx(0, 0)};
  rat.params = p;
  s.period = PeriodChart{rat, cplx(0, 0), 1.0};
  return s;
}

Surface build_parabolic_catenoid(const ParamMap& p) {
  double a = getp(p, "a");
  Surface s;
  s.name = "parabolic_catenoid";
  s.description = "rotational maximal surface with lightlike axis";
  s.axis = "(1,0,1)";
  s.params = p;
  Expr A = Expr::param("a");
  Expr D = exp(A) + K(I) * Z() + K(1);
  WeierstrassData w;
  w.g = (exp(A) + K(I) * Z() - K(1)) / D;
  w.f = -(K(I) * pow(D, 2) / (Kr(2) * exp(A)));
  w.sig = Signature::Lorentzian;
  w.params = p;
  s.data = w;
  IsotropicCurve psi;
  Expr quad = exp(-A) * pow(Z(), 2) * Kr(0.5);
  psi.c = {Z() + K(I) * (quad - cosh(A)), K(1) + K(I) * exp(-A) * Z(),
           Z() + K(I) * (quad - sinh(A))};
  psi.sig = Signature::Lorentzian;
  psi.params = p;
  s.curve = psi;
  s.z0 = cplx(0, 0);
  s.X0 = {-1, 0, 0};
  s.default_grid = kEntireGrid;

  Expr T2 = pow(Z(), 2);
  BjorlingData bd;
  bd.alpha = {K(-1) + T2 * Kr(0.5), Z(), T2 * Kr(0.5)};
  // V = sinh(a) e2 + cosh(a) e3 with e2 = n - b, e3 = n + b,
  // n = (1,0,1)/2, b = (t^2-1, 2t, t^2+1)/2.
  Expr n1 = Kr(0.5), n2 = K(0), n3 = Kr(0.5);
  Expr b1 = (T2 - K(1)) * Kr(0.5), b2 = Z(), b3 = (T2 + K(1)) * Kr(0.5);
  bd.V = {sinh(A) * (n1 - b1) + cosh(A) * (n1 + b1),
          sinh(A) * (n2 - b2) + cosh(A) * (n2 + b2),
          sinh(A) * (n3 - b3) + cosh(A) * (n3 + b3)};
  bd.sig = Signature::Lorentzian;
  bd.z0 = cplx(0, 0);
  bd.params = p;
  s.bjorling = bd;

  ClosedFormChart cf;
  cf.X = [a](double u, double v) {
    double ea = std::exp(-a);
    double cubic = ea * (v * v * v / 6.0 - u * u * v / 2.0);
    double para = u * u / 2.0 - v * v / 2.0;
    return Vec3R{cubic + std::cosh(a) * v + para - 1.0, u - ea * u * v,
                 cubic + std::sinh(a) * v + para};
  };
  cf.z0 = cplx(0, 0);
  cf.X0 = {-1, 0, 0};
  cf.grid = kEntireGrid;
  cf.curvature = {-0.85, 0.85, -0.85, 0.85, 0.01}; // spacelike for a = 1
  s.closed = cf;
  s.period = PeriodChart{psi, cplx(0, 0), 1.0};
  return s;
}

Surface build_rotated_catenoid(const ParamMap& p) {
  double t = getp(p, "t");
  if (t < 0 || t > M_PI / 2 + 1e-12)
    fail(Errc::ParameterOutOfRange, "rotated_catenoid_Ct needs t in [0, pi/2]");
  Surface s;
  s.name = "rotated_catenoid_Ct";
  s.description = "Euclidean catenoid rotated about (0,1,0) by angle t";
  s.axis = "(sin(t),0,cos(t))";
  s.params = p;
  Expr T = Expr::param("t");
  IsotropicCurve phi;
  phi.c = {-(cos(T) * sin(Z())) - K(I) * sin(T), cos(Z()), sin(T) * sin(Z()) - K(I) * cos(T)};
  phi.sig = Signature::Euclidean;
  phi.params = p;
  s.curve = phi;
  s.data = weierstrass_from_isotropic(phi);
  s.z0 = cplx(0, 0);
  s.X0 = {std::cos(t), 0, -std::sin(t)};
  s.default_grid = kEntireGrid;
  return s;
}

Surface build_bonnet_maximal(const ParamMap& p) {
  double t = getp(p, "t");
  if (t < 0 || t > M_PI / 2 + 1e-12)
    fail(Errc::ParameterOutOfRange, "bonnet_maximal needs t in [0, pi/2]");
  Surface s;
  s.name = "bonnet_maximal";
  s.description = "dual of the rotated catenoid C_t: Bonnet maximal family";
  s.params = p;
  Expr T = Expr::param("t");
  IsotropicCurve psi;
  psi.c = {-sin(T) + K(I) * cos(T) * sin(Z()), K(-I) * cos(Z()),
           sin(T) * sin(Z()) - K(I) * cos(T)};
  psi.sig = Signature::Lorentzian;
  psi.params = p;
  s.curve = psi;
  s.data = weierstrass_from_isotropic(psi);
  s.z0 = cplx(0, 0);
  s.default_grid = kEntireGrid;

  ClosedFormChart cf;
  cf.X = [t](double u, double v) {
    return Vec3R{-u * std::sin(t) - std::cos(t) * std::sin(u) * std::sinh(v),
                 std::cos(u) * std::sinh(v),
                 -std::sin(t) * std::cos(u) * std::cosh(v) + v * std::cos(t) + std::sin(t)};
  };
  cf.z0 = cplx(0, 0);
  cf.X0 = {0, 0, 0};
  cf.grid = kEntireGrid;
  cf.curvature = {-0.85, 0.85, 0.1, 0.95, 0.01}; // spacelike for t = pi/4
  s.closed = cf;

  IsotropicCurve rat;
  Expr W2 = pow(Z(), 2);
  rat.c = {(W2 + K(1)) / (Kr(2) * W2),
           (K(I) * cos(T) * (K(1) - W2) - K(2.0 * I) * Z() * sin(T)) / (Kr(2) * W2),
           (Kr(2) * Z() * cos(T) + sin(T) * (K(1) - W2)) / (Kr(2) * W2)};
  rat.sig = Signature::Lorentzian;
  rat.punctures = {cplx(0, 0)};
  rat.params = p;
  s.period = PeriodChart{rat, cplx(0, 0), 1.0};
  return s;
}

Surface build_bonnet_minimal(const ParamMap& p) {
  double lambda = getp(p, "lambda");
  if (lambda <= 0) fail(Errc::ParameterOutOfRange, "bonnet_minimal needs lambda > 0");
  Surface s;
  s.name = "bonnet_minimal";
  s.description = "Bonnet minimal surface, g = e^z + lambda, omega = e^{-z} dz";
  s.params = p;
  Expr L = Expr::param("lambda");
  s.data = {exp(Z()) + L, exp(-Z()), Signature::Euclidean, {}, p};
  s.curve = isotropic_from_weierstrass(s.data);
  s.z0 = cplx(0, 0);
  s.default_grid = kEntireGrid;

  IsotropicCurve rat;
  Expr G = Z() + L;
  Expr W2 = pow(Z(), 2);
  rat.c = {(K(1) - pow(G, 2)) / (Kr(2) * W2), K(I) * (K(1) + pow(G, 2)) / (Kr(2) * W2),
           G / W2};
  rat.sig = Signature::Euclidean;
  rat.punctures = {cplx(0, 0)};
  rat.params = p;
  s.period = PeriodChart{rat, cplx(0, 0), 1.0};
  return s;
}

Surface build_bonnet_minimal_Yt(const ParamMap& p) {
  Surface s;
  s.name = "bonnet_minimal_Yt";
  s.description = "dual of the hyperbolically rotated elliptic catenoid: Bonnet minimal family";
  s.params = p;
  double t = getp(p, "t");
  Expr T = Expr::param("t");
  IsotropicCurve phi;
  phi.c = {K(I) * cosh(Z()), sinh(Z()) * cosh(T) + K(I) * sinh(T),
           cosh(T) - K(I) * sinh(Z()) * sinh(T)};
  phi.sig = Signature::Euclidean;
  phi.params = p;
  s.curve = phi;
  Expr Th = T * Kr(0.5);
  Expr den = cosh(Th) - K(I) * exp(Z()) * sinh(Th);
  WeierstrassData w;
  w.g = K(-I) * (exp(Z()) * cosh(Th) + K(I) * sinh(Th)) / den;
  w.f = K(I) * exp(-Z()) * pow(den, 2);
  w.sig = Signature::Euclidean;
  w.params = p;
  s.data = w;
  s.z0 = cplx(0, 0);
  s.default_grid = kEntireGrid;

  ClosedFormChart cf;
  cf.X = [t](double u, double v) {
    return Vec3R{-std::cosh(u) * std::sin(v),
                 std::cosh(t) * std::cosh(u) * std::cos(v) - v * std::sinh(t) - std::cosh(t),
                 std::sin(v) * std::sinh(u) * std::sinh(t) + u * std::cosh(t)};
  };
  cf.z0 = cplx(0, 0);
  cf.X0 = {0, 0, 0};
  cf.grid = kEntireGrid;
  cf.curvature = {-0.85, 0.85, -0.85, 0.85, 0.01};
  s.closed = cf;

  IsotropicCurve rat;
  Expr W2 = pow(Z(), 2);
  rat.c = {K(I) * (W2 + K(1)) / (Kr(2) * W2),
           (W2 - K(1)) * cosh(T) / (Kr(2) * W2) + K(I) * sinh(T) / Z(),
           cosh(T) / Z() - K(I) * (W2 - K(1)) * sinh(T) / (Kr(2) * W2)};
  rat.sig = Signature::Euclidean;
  rat.punctures = {cplx(0, 0)};
  rat.params = p;
  s.period = PeriodChart{rat, cplx(0, 0), 1.0};
  return s;
}

Surface build_goursat_bonnet_Zt(const ParamMap& p) {
  Surface s;
  s.name = "goursat_bonnet_Zt";
  s.description = "dual of the parabolically rotated elliptic catenoid: Goursat-Bonnet family";
  s.params = p;
  double t = getp(p, "t");
  Expr T = Expr::param("t");
  Expr T2 = pow(T, 2);
  IsotropicCurve phi;
  phi.c = {K(I) * (K(1) - T2 * Kr(0.5)) * cosh(Z()) + T * sinh(Z()) + K(I) * T2 * Kr(0.5),
           K(-I) * T * cosh(Z()) + sinh(Z()) + K(I) * T,
           K(1) + T2 * Kr(0.5) - T2 * Kr(0.5) * cosh(Z()) - K(I) * T * sinh(Z())};
  phi.sig = Signature::Euclidean;
  phi.params = p;
  s.curve = phi;
  Expr den = T * exp(Z()) + K(2.0 * I) - T;
  WeierstrassData w;
  w.g = K(-I) * ((T + K(2.0 * I)) * exp(Z()) - T) / den;
  w.f = K(-I) * pow(den, 2) / (Kr(4) * exp(Z()));
  w.sig = Signature::Euclidean;
  w.params = p;
  s.data = w;
  s.z0 = cplx(0, 0);
  s.default_grid = kEntireGrid;

  ClosedFormChart cf;
  cf.X = [t](double u, double v) {
    double cu = std::cosh(u), su = std::sinh(u);
    double cv = std::cos(v), sv = std::sin(v);
    return Vec3R{t * t * cu * sv / 2 - t * t * v / 2 + t * cu * cv - t - cu * sv,
                 cu * (t * sv + cv) - t * v - 1,
                 -t * t * su * cv / 2 + t * t * u / 2 + t * su * sv + u};
  };
  cf.z0 = cplx(0, 0);
  cf.X0 = {0, 0, 0};
  cf.grid = kEntireGrid;
  cf.curvature = {-0.85, 0.85, -0.1, 0.85, 0.01}; // clear of the t=1 branch point
  s.closed = cf;
  return s;
}

Surface build_goursat_bonnet_Wt(const ParamMap& p) {
  Surface s;
  s.name = "goursat_bonnet_Wt";
  s.description = "dual of the parabolically rotated hyperbolic catenoid: Goursat-Bonnet family";
  s.params = p;
  double t = getp(p, "t");
  Expr T = Expr::param("t");
  Expr T2 = pow(T, 2);
  IsotropicCurve phi;
  phi.c = {(K(2) - T2 + K(I) * T * (T * sinh(Z()) + Kr(2) * cosh(Z()))) * Kr(0.5),
           K(I) * (cosh(Z()) + T * (sinh(Z()) + K(I))),
           ((T2 + K(2)) * sinh(Z()) + K(I) * T2 + Kr(2) * T * cosh(Z())) * Kr(0.5)};
  phi.sig = Signature::Euclidean;
  phi.params = p;
  s.curve = phi;
  s.data = weierstrass_from_isotropic(phi);
  s.z0 = cplx(0, 0);
  s.default_grid = kEntireGrid;

  ClosedFormChart cf;
  cf.X = [t](double u, double v) {
    double cu = std::cosh(u), su = std::sinh(u);
    double cv = std::cos(v), sv = std::sin(v);
    return Vec3R{-t * t * u / 2 - t * sv * (t * su + 2 * cu) / 2 + u,
                 -sv * (t * su + cu) - t * u,
                 ((t * t + 2) * cu * cv - (v + 1) * t * t + 2 * t * su * cv - 2) / 2};
  };
  cf.z0 = cplx(0, 0);
  cf.X0 = {0, 0, 0};
  cf.grid = kEntireGrid;
  cf.curvature = {-0.85, 0.85, -0.85, 0.85, 0.01};
  s.closed = cf;
  return s;
}

Surface build_enneper_family_Xt(const ParamMap& p) {
  Surface s;
  s.name = "enneper_family_Xt";
  s.description = "dual of the hyperbolically rotated parabolic catenoid (Enneper surface)";
  s.params = p;
  double t = getp(p, "t");
  Expr T = Expr::param("t");
  IsotropicCurve phi;
  Expr Z2 = pow(Z(), 2);
  phi.c = {K(1) + K(I) * Z() - Z2 * Kr(0.5),
           K(I) * cosh(T) + (-cosh(T) + K(I) * sinh(T)) * Z() - sinh(T) * Z2 * Kr(0.5),
           sinh(T) + (cosh(T) + K(I) * sinh(T)) * Z() + K(I) * cosh(T) * Z2 * Kr(0.5)};
  phi.sig = Signature::Euclidean;
  phi.params = p;
  s.curve = phi;
  Expr Th = T * Kr(0.5);
  Expr den = (cosh(Th) - K(I) * sinh(Th)) * Z() - K(2.0 * I) * cosh(Th);
  WeierstrassData w;
  w.g = ((sinh(Th) - K(I) * cosh(Th)) * Z() - K(2.0 * I) * sinh(Th)) / den;
  w.f = -(pow(den, 2) * Kr(0.5));
  w.sig = Signature::Euclidean;
  w.params = p;
  s.data = w;
  s.z0 = cplx(0, 0);
  s.default_grid = kEntireGrid;

  ClosedFormChart cf;
  cf.X = [t](double u, double v) {
    double ct = std::cosh(t), st = std::sinh(t);
    return Vec3R{-u * (u * u - 3 * v * v + 6 * v - 6) / 6,
                 (-u * st * (u * u - 3 * v * v + 6 * v) - 3 * ct * (u * u - v * v + 2 * v)) / 6,
                 (ct * (-3 * u * u * v + 3 * u * u + v * v * v - 3 * v * v) -
                  (6 * u * v - 6 * u) * st) /
                     6};
  };
  cf.z0 = cplx(0, 0);
  cf.X0 = {0, 0, 0};
  cf.grid = kEntireGrid;
  cf.curvature = {-0.85, 0.85, -0.85, 0.85, 0.01};
  s.closed = cf;
  return s;
}

struct Registry {
  std::string name;
  std::string description;
  ParamMap defaults;
  Signature sig;
  std::string axis;
  bool has_closed;
  bool has_period;
  Surface (*build)(const ParamMap&);
};

const std::vector<Registry>& registry() {
  static const std::vector<Registry> reg = {
      {"euclidean_catenoid", "minimal catenoid in E^3", {}, Signature::Euclidean, "(0,0,1)",
       false, true, build_euclidean_catenoid},
      {"helicoid_E3", "helicoid in E^3 (adjoint of the catenoid)", {}, Signature::Euclidean,
       "(0,0,1)", false, true, build_helicoid},
      {"enneper", "Enneper surface", {}, Signature::Euclidean, "", false, false, build_enneper},
      {"elliptic_catenoid", "maximal catenoid, timelike axis", {{"a", 1.0}},
       Signature::Lorentzian, "(0,0,1)", true, true, build_elliptic_catenoid},
      {"hyperbolic_catenoid", "maximal catenoid, spacelike axis", {{"a", 1.0}},
       Signature::Lorentzian, "(1,0,0)", true, true, build_hyperbolic_catenoid},
      {"parabolic_catenoid", "maximal catenoid, lightlike axis", {{"a", 1.0}},
       Signature::Lorentzian, "(1,0,1)", true, true, build_parabolic_catenoid},
      {"rotated_catenoid_Ct", "catenoid rotated about (0,1,0) by t", {{"t", M_PI / 4}},
       Signature::Euclidean, "(sin(t),0,cos(t))", false, false, build_rotated_catenoid},
      {"bonnet_maximal", "Bonnet maximal family (dual of C_t)", {{"t", M_PI / 4}},
       Signature::Lorentzian, "", true, true, build_bonnet_maximal},
      {"bonnet_minimal", "Bonnet minimal surface B(lambda)", {{"lambda", 1.0}},
       Signature::Euclidean, "", false, true, build_bonnet_minimal},
      {"bonnet_minimal_Yt", "Bonnet minimal family from hyperbolic rotations", {{"t", 1.0}},
       Signature::Euclidean, "", true, true, build_bonnet_minimal_Yt},
      {"goursat_bonnet_Zt", "Goursat-Bonnet family from parabolic rotations", {{"t", 1.0}},
       Signature::Euclidean, "", true, false, build_goursat_bonnet_Zt},
      {"goursat_bonnet_Wt", "Goursat-Bonnet family from the hyperbolic catenoid", {{"t", 1.0}},
       Signature::Euclidean, "", true, false, build_goursat_bonnet_Wt},
      {"enneper_family_Xt", "Enneper family from the parabolic catenoid", {{"t", 1.0}},
       Signature::Euclidean, "", true, false, build_enneper_family_Xt},
      {"plane", "flat plane", {}, Signature::Euclidean, "", true, false, build_plane},
  };
  return reg;
}

} // namespace

std::vector<CatalogInfo> catalog_infos() {
  std::vector<CatalogInfo> out;
  for (const auto& r : registry())
    out.push_back({r.name, r.description, r.defaults, r.sig, r.axis, r.has_closed, r.has_period});
  return out;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& r : registry()) out.push_back(r.name);
  return out;
}

Surface build_surface(const std::string& name, const ParamMap& overrides) {
  for (const auto& r : registry()) {
    if (r.name == name) {
      ParamMap params = merge_params(r.defaults, overrides, name);
      Surface s = r.build(params);
      s.params = params;
      s.data.params = params;
      s.curve.params = params;
      validate(s.data);
      return s;
    }
  }
  fail(Errc::UnknownName, "no catalog surface named '" + name + "'");
}

Surface dual_surface(const Surface& s) {
  Surface d;
  d.name = "dual(" + s.name + ")";
  d.description = "dual surface of " + s.name;
  d.params = s.params;
  d.data = dual(s.data);
  d.curve = dual(s.curve);
  d.z0 = s.z0;
  d.X0 = {0, 0, 0};
  d.default_grid = s.default_grid;
  return d;
}

SurfacePatch sample(const Surface& s) { return sample(s, s.default_grid); }

SurfacePatch sample(const Surface& s, const GridSpec& grid) {
  return sample_patch(s.curve, s.z0, s.X0, grid);
}

SurfacePatch closed_patch(const Surface& s) {
  if (!s.closed) fail(Errc::InvalidParameter, s.name + " has no closed-form chart");
  return closed_patch(s, s.closed->grid);
}

SurfacePatch closed_patch(const Surface& s, const GridSpec& grid) {
  if (!s.closed) fail(Errc::InvalidParameter, s.name + " has no closed-form chart");
  return closed_form_patch(s.closed->X, s.sig(), grid);
}

WeierstrassData bonnet_maximal_normalized_data(double t) {
  double c = std::cos(t / 2), sn = std::sin(t / 2);
  WeierstrassData w;
  w.g = (Kr(c) * exp(Z()) - Kr(sn)) / (Kr(sn) * exp(Z()) + Kr(c));
  w.f = pow(Kr(sn) * exp(Z()) + Kr(c), 2) * exp(-Z());
  w.sig = Signature::Lorentzian;
  return w;
}

} // namespace zmc
