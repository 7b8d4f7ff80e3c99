/*
 * (C) Copyright 2026 zmc authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "zmc/expr.hpp"
#include "zmc/vec.hpp"

namespace zmc {

// Weierstrass data (g, omega = f dz) and isotropic curves, with the duality
// flat/sharp between minimal surfaces in E^3 and maximal surfaces in L^3,
// the associate family, Goursat transformations and reparametrizations.

struct WeierstrassData {
  Expr g, f;
  Signature sig = Signature::Euclidean;
  std::vector<cplx> punctures;
  ParamMap params;
};

struct IsotropicCurve {
  std::array<Expr, 3> c;
  Signature sig = Signature::Euclidean;
  std::vector<cplx> punctures;
  ParamMap params;
};

/// Moebius map z -> (a z + b) / (c z + d).
struct MoebiusMap {
  cplx a{1}, b{0}, c{0}, d{1};
  cplx det() const { return a * d - b * c; }
};

/// phi = ( (1 - eps g^2) f / 2, i (1 + eps g^2) f / 2, g f ).
IsotropicCurve isotropic_from_weierstrass(const WeierstrassData& w);

/// g = c3 / (c1 - i c2), f = c1 - i c2. Throws DegenerateGaussMap when the
/// denominator vanishes identically (vertical-plane case).
WeierstrassData weierstrass_from_isotropic(const IsotropicCurve& c);

/// flat for minimal data: (i g, -i f), retagged Lorentzian.
/// sharp for maximal data: (-i g, i f), retagged Euclidean.
/// dual(dual(w)) folds back to w node-for-node.
WeierstrassData dual(const WeierstrassData& w);

/// Curve-level duality: flat maps (c1,c2,c3) -> (-i c1, -i c2, c3), sharp the
/// inverse; the third component is preserved.
IsotropicCurve dual(const IsotropicCurve& c);

/// Associate family: componentwise e^{i theta} times the isotropic curve.
IsotropicCurve associate(const WeierstrassData& w, double theta);
IsotropicCurve associate(const IsotropicCurve& c, double theta);

/// Componentwise matrix action on the curve. The output's isotropy is checked
/// at sample points (residual <= 1e-9), not assumed; throws IsotropyBroken.
IsotropicCurve apply_linear(const Mat3C& a, const IsotropicCurve& c);

/// Goursat transformation (T(g), f / T'(g)); preserves the Hopf differential
/// f g'. Throws DegenerateMoebius when ad - bc = 0.
WeierstrassData goursat(const WeierstrassData& w, const MoebiusMap& t);

/// Pullback by a biholomorphic change of variable h: (g o h, (f o h) h').
/// Throws SingularChange when h' vanishes at a sample point.
WeierstrassData reparametrize(const WeierstrassData& w, const Expr& h);
IsotropicCurve reparametrize(const IsotropicCurve& c, const Expr& h);

/// Conformal factor lambda with ds = lambda |dz|, computed through the curve
/// norm lambda^2 = (|c1|^2 + |c2|^2 + eps |c3|^2) / 2. Throws DegenerateMetric
/// when lambda vanishes within tolerance (|g| = 1 locus for eps = -1).
double conformal_factor(const WeierstrassData& w, cplx z);

/// max over points of |c1^2 + c2^2 + eps c3^2| / max(1, |c|^2).
double isotropy_residual(const IsotropicCurve& c, const std::vector<cplx>& points);

/// Standard 20-point evaluation equality for curves (componentwise).
bool curves_equal(const IsotropicCurve& a, const IsotropicCurve& b,
                  const std::vector<cplx>& points, double rel_tol = 1e-10);

/// Sample points for a curve/data: annulus around 0 avoiding its punctures.
std::vector<cplx> default_samples(const std::vector<cplx>& punctures, int count = 20,
                                  unsigned long long seed = 20260811ull);

/// Throws InvalidParameter if f is identically zero at sample points.
void validate(const WeierstrassData& w);

} // namespace zmc
