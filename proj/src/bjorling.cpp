/*
 * (C) Copyright 2026 zmc authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "zmc/bjorling.hpp"

#include <cmath>

#include "zmc/error.hpp"

namespace zmc {

void validate_bjorling(const BjorlingData& d) {
  double e = eps(d.sig);
  // Sample on the real interval carrying the core curve.
  for (int k = 0; k < 9; ++k) {
    cplx t(-1.0 + 0.25 * k, 0.0);
    Vec3C V{d.V[0].eval(t, d.params), d.V[1].eval(t, d.params), d.V[2].eval(t, d.params)};
    Vec3C ap{d.alpha[0].differentiate().eval(t, d.params),
             d.alpha[1].differentiate().eval(t, d.params),
             d.alpha[2].differentiate().eval(t, d.params)};
    cplx vv = inner(V, V, d.sig);
    if (std::abs(vv - cplx(e, 0)) > 1e-9)
      fail(Errc::IsotropyBroken, "normal field is not unit (<V,V> != eps) at t=" +
                                     std::to_string(t.real()));
    cplx va = inner(V, ap, d.sig);
    double scale = std::max(1.0, std::abs(ap.x) + std::abs(ap.y) + std::abs(ap.z));
    if (std::abs(va) > 1e-9 * scale)
      fail(Errc::IsotropyBroken,
           "normal field is not orthogonal to the core curve at t=" + std::to_string(t.real()));
  }
}

IsotropicCurve bjorling_isotropic(const BjorlingData& d) {
  validate_bjorling(d);
  std::array<Expr, 3> ap = {d.alpha[0].differentiate(), d.alpha[1].differentiate(),
                            d.alpha[2].differentiate()};
  double e = eps(d.sig);
  // cross product in the ambient metric, as expression trees
  Expr w1 = d.V[1] * ap[2] - d.V[2] * ap[1];
  Expr w2 = d.V[2] * ap[0] - d.V[0] * ap[2];
  Expr w3 = Expr::constant(e) * (d.V[0] * ap[1] - d.V[1] * ap[0]);
  cplx factor = cplx(0, -1) * e; // -i eps
  IsotropicCurve c;
  c.c[0] = ap[0] + Expr::constant(factor) * w1;
  c.c[1] = ap[1] + Expr::constant(factor) * w2;
  c.c[2] = ap[2] + Expr::constant(factor) * w3;
  c.sig = d.sig;
  c.params = d.params;
  double res = isotropy_residual(c, default_samples({}));
  if (res > 1e-9)
    fail(Errc::IsotropyBroken,
         "constructed curve is not isotropic (residual " + std::to_string(res) + ")");
  return c;
}

Vec3R bjorling_base_point(const BjorlingData& d) {
  Vec3C a{d.alpha[0].eval(d.z0, d.params), d.alpha[1].eval(d.z0, d.params),
          d.alpha[2].eval(d.z0, d.params)};
  return a.real();
}

} // namespace zmc
