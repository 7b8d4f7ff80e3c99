/*
 * (C) Copyright 2026 zmc authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "zmc/weierstrass.hpp"

#include <cmath>

#include "zmc/error.hpp"

namespace zmc {

namespace {
const cplx I(0, 1);

Expr half() { return Expr::constant(cplx(0.5, 0)); }
} // namespace

IsotropicCurve isotropic_from_weierstrass(const WeierstrassData& w) {
  double e = eps(w.sig);
  Expr g2 = pow(w.g, 2);
  IsotropicCurve c;
  c.c[0] = half() * (Expr::constant(1) - Expr::constant(e) * g2) * w.f;
  c.c[1] = Expr::constant(cplx(0, 0.5)) * (Expr::constant(1) + Expr::constant(e) * g2) * w.f;
  c.c[2] = w.g * w.f;
  c.sig = w.sig;
  c.punctures = w.punctures;
  c.params = w.params;
  return c;
}

WeierstrassData weierstrass_from_isotropic(const IsotropicCurve& c) {
  Expr denom = c.c[0] - Expr::constant(I) * c.c[1];
  // Vertical-plane degeneracy: c1 - i c2 identically zero.
  auto pts = default_samples(c.punctures);
  bool all_zero = true;
  double scale = 0;
  for (cplx z : pts) {
    double d = std::abs(denom.eval(z, c.params));
    double s = std::abs(c.c[0].eval(z, c.params)) + std::abs(c.c[1].eval(z, c.params)) +
               std::abs(c.c[2].eval(z, c.params));
    scale = std::max(scale, s);
    if (d > 1e-12 * std::max(1.0, s)) all_zero = false;
  }
  if (all_zero)
    fail(Errc::DegenerateGaussMap, "c1 - i*c2 vanishes identically (vertical plane)");
  WeierstrassData w;
  w.g = c.c[2] / denom;
  w.f = denom;
  w.sig = c.sig;
  w.punctures = c.punctures;
  w.params = c.params;
  return w;
}

WeierstrassData dual(const WeierstrassData& w) {
  WeierstrassData d;
  if (w.sig == Signature::Euclidean) {
    d.g = Expr::constant(I) * w.g;
    d.f = Expr::constant(-I) * w.f;
  } else {
    d.g = Expr::constant(-I) * w.g;
    d.f = Expr::constant(I) * w.f;
  }
  d.sig = flip(w.sig);
  d.punctures = w.punctures;
  d.params = w.params;
  return d;
}

IsotropicCurve dual(const IsotropicCurve& c) {
  IsotropicCurve d;
  cplx s = (c.sig == Signature::Euclidean) ? -I : I;
  d.c[0] = Expr::constant(s) * c.c[0];
  d.c[1] = Expr::constant(s) * c.c[1];
  d.c[2] = c.c[2];
  d.sig = flip(c.sig);
  d.punctures = c.punctures;
  d.params = c.params;
  return d;
}

IsotropicCurve associate(const IsotropicCurve& c, double theta) {
  cplx r = std::polar(1.0, theta);
  IsotropicCurve out = c;
  for (auto& comp : out.c) comp = Expr::constant(r) * comp;
  return out;
}

IsotropicCurve associate(const WeierstrassData& w, double theta) {
  return associate(isotropic_from_weierstrass(w), theta);
}

IsotropicCurve apply_linear(const Mat3C& a, const IsotropicCurve& c) {
  IsotropicCurve out;
  for (int r = 0; r < 3; ++r) {
    Expr acc;
    for (int k = 0; k < 3; ++k) {
      if (a(r, k) == cplx(0)) continue; // keep descriptors free of 0*(...) terms
      Expr term = Expr::constant(a(r, k)) * c.c[k];
      acc = acc.valid() ? acc + term : term;
    }
    out.c[r] = acc.valid() ? acc : Expr::constant(0);
  }
  out.sig = c.sig;
  out.punctures = c.punctures;
  out.params = c.params;
  auto pts = default_samples(out.punctures);
  double res = isotropy_residual(out, pts);
  if (res > 1e-9) {
    // Maps like diag(-i,-i,1) carry one null cone onto the other; when the
    // result is isotropic for the flipped form, retag instead of failing.
    out.sig = flip(out.sig);
    double res_flip = isotropy_residual(out, pts);
    if (res_flip > 1e-9)
      fail(Errc::IsotropyBroken,
           "linear action breaks isotropy (residual " + std::to_string(res) + ")");
  }
  return out;
}

WeierstrassData goursat(const WeierstrassData& w, const MoebiusMap& t) {
  if (t.det() == cplx(0)) fail(Errc::DegenerateMoebius, "ad - bc = 0");
  Expr g = w.g;
  Expr num = Expr::constant(t.a) * g + Expr::constant(t.b);
  Expr den = Expr::constant(t.c) * g + Expr::constant(t.d);
  // T'(g) = (ad - bc) / (c g + d)^2
  Expr tprime = Expr::constant(t.det()) / pow(den, 2);
  WeierstrassData out;
  out.g = num / den;
  out.f = w.f / tprime;
  out.sig = w.sig;
  out.punctures = w.punctures;
  out.params = w.params;
  return out;
}

WeierstrassData reparametrize(const WeierstrassData& w, const Expr& h) {
  Expr hp = h.differentiate();
  auto pts = default_samples(w.punctures);
  for (cplx z : pts) {
    if (std::abs(hp.eval(z, w.params)) < 1e-12)
      fail(Errc::SingularChange, "h' vanishes at sample point");
  }
  WeierstrassData out;
  out.g = w.g.compose(h);
  out.f = w.f.compose(h) * hp;
  out.sig = w.sig;
  out.params = w.params;
  // Punctures move to the preimages of the old ones; callers that keep
  // sampling must declare them explicitly, so we leave the list empty here.
  return out;
}

IsotropicCurve reparametrize(const IsotropicCurve& c, const Expr& h) {
  Expr hp = h.differentiate();
  auto pts = default_samples(c.punctures);
  for (cplx z : pts) {
    if (std::abs(hp.eval(z, c.params)) < 1e-12)
      fail(Errc::SingularChange, "h' vanishes at sample point");
  }
  IsotropicCurve out;
  for (int k = 0; k < 3; ++k) out.c[k] = c.c[k].compose(h) * hp;
  out.sig = c.sig;
  out.params = c.params;
  return out;
}

double conformal_factor(const WeierstrassData& w, cplx z) {
  auto curve = isotropic_from_weierstrass(w);
  Vec3C v{curve.c[0].eval(z, w.params), curve.c[1].eval(z, w.params),
          curve.c[2].eval(z, w.params)};
  double n2 = sig_norm2(v, w.sig);
  double lambda2 = 0.5 * n2;
  double scale = std::norm(v.x) + std::norm(v.y) + std::norm(v.z);
  if (lambda2 <= 1e-18 * std::max(1.0, scale))
    fail(Errc::DegenerateMetric, "conformal factor vanishes");
  return std::sqrt(lambda2);
}

double isotropy_residual(const IsotropicCurve& c, const std::vector<cplx>& points) {
  double worst = 0;
  for (cplx z : points) {
    Vec3C v{c.c[0].eval(z, c.params), c.c[1].eval(z, c.params), c.c[2].eval(z, c.params)};
    cplx iso = inner(v, v, c.sig);
    double scale = std::max(1.0, std::norm(v.x) + std::norm(v.y) + std::norm(v.z));
    worst = std::max(worst, std::abs(iso) / scale);
  }
  return worst;
}

bool curves_equal(const IsotropicCurve& a, const IsotropicCurve& b,
                  const std::vector<cplx>& points, double rel_tol) {
  if (a.sig != b.sig) return false;
  for (int k = 0; k < 3; ++k) {
    for (cplx z : points) {
      cplx va = a.c[k].eval(z, a.params);
      cplx vb = b.c[k].eval(z, b.params);
      double scale = std::max(1.0, std::max(std::abs(va), std::abs(vb)));
      if (std::abs(va - vb) > rel_tol * scale) return false;
    }
  }
  return true;
}

std::vector<cplx> default_samples(const std::vector<cplx>& punctures, int count,
                                  unsigned long long seed) {
  return annulus_samples(count, seed, punctures);
}

void validate(const WeierstrassData& w) {
  auto pts = default_samples(w.punctures);
  for (cplx z : pts) {
    if (std::abs(w.f.eval(z, w.params)) > 1e-14) return;
  }
  fail(Errc::InvalidParameter, "f is identically zero");
}

} // namespace zmc
