/*
 * (C) Copyright 2026 zmc authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "zmc/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "zmc/error.hpp"

namespace zmc {

namespace {

// ---------------------------------------------------------------------------
// Gauss-Legendre rule of order 16, nodes computed once by Newton iteration on
// the Legendre recurrence (deterministic).

struct GaussRule {
  std::vector<double> x, w; // on [-1, 1]
};

GaussRule make_gauss_legendre(int n) {
  GaussRule rule;
  rule.x.resize(n);
  rule.w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.x[i] = -x;
    rule.x[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.w[i] = w;
    rule.w[n - 1 - i] = w;
  }
  return rule;
}

const GaussRule& gl16() {
  static const GaussRule rule = make_gauss_legendre(16);
  return rule;
}

// Complex-parametrized segment: z(s), z'(s) for s in [0, 1].
struct Param {
  std::function<cplx(double)> z;
  std::function<cplx(double)> dz;
};

Param parametrize(const LineSegment& seg) {
  cplx a = seg.a, d = seg.b - seg.a;
  return {[a, d](double s) { return a + s * d; }, [d](double) { return d; }};
}

Param parametrize(const ArcSegment& seg) {
  cplx c = seg.center;
  double r = seg.radius, a0 = seg.angle0, da = seg.angle1 - seg.angle0;
  return {[c, r, a0, da](double s) { return c + std::polar(r, a0 + s * da); },
          [r, a0, da](double s) {
            return cplx(0, 1) * da * std::polar(r, a0 + s * da);
          }};
}

template <typename F>
Vec3C gl_apply(const F& f, double s0, double s1) {
  const GaussRule& rule = gl16();
  Vec3C acc;
  double mid = 0.5 * (s0 + s1), half = 0.5 * (s1 - s0);
  for (size_t k = 0; k < rule.x.size(); ++k) {
    Vec3C v = f(mid + half * rule.x[k]);
    acc = acc + v * cplx(rule.w[k] * half, 0);
  }
  return acc;
}

double vdiff(const Vec3C& a, const Vec3C& b) {
  return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

template <typename F>
Vec3C adaptive(const F& f, double s0, double s1, double tol, int depth) {
  Vec3C whole = gl_apply(f, s0, s1);
  double mid = 0.5 * (s0 + s1);
  Vec3C left = gl_apply(f, s0, mid);
  Vec3C right = gl_apply(f, mid, s1);
  Vec3C refined = left + right;
  if (vdiff(whole, refined) <= tol) return refined;
  if (depth >= 20) fail(Errc::ToleranceNotMet, "quadrature subdivision limit reached");
  return adaptive(f, s0, mid, tol * 0.5, depth + 1) +
         adaptive(f, mid, s1, tol * 0.5, depth + 1);
}

double dist_to_line(cplx p, cplx a, cplx b) {
  cplx d = b - a;
  double len2 = std::norm(d);
  if (len2 == 0) return std::abs(p - a);
  double t = std::clamp(((p - a) * std::conj(d)).real() / len2, 0.0, 1.0);
  return std::abs(p - (a + t * d));
}

double dist_to_arc(cplx p, const ArcSegment& arc) {
  // Conservative: distance to the full circle, floored by |p - center| when
  // the point is the center itself.
  double dc = std::abs(p - arc.center);
  return std::abs(dc - arc.radius);
}

} // namespace

Path Path::line(cplx a, cplx b) {
  Path p;
  p.segments.push_back(LineSegment{a, b});
  return p;
}

Path Path::circle(cplx center, double radius) {
  Path p;
  p.segments.push_back(ArcSegment{center, radius, 0.0, 2.0 * M_PI});
  return p;
}

cplx Path::start() const {
  if (segments.empty()) fail(Errc::InvalidParameter, "empty path");
  return std::visit(
      [](const auto& s) -> cplx {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, LineSegment>)
          return s.a;
        else
          return s.center + std::polar(s.radius, s.angle0);
      },
      segments.front());
}

cplx Path::end() const {
  if (segments.empty()) fail(Errc::InvalidParameter, "empty path");
  return std::visit(
      [](const auto& s) -> cplx {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, LineSegment>)
          return s.b;
        else
          return s.center + std::polar(s.radius, s.angle1);
      },
      segments.back());
}

bool Path::closed(double tol) const { return std::abs(start() - end()) <= tol; }

void check_clearance(const Path& p, const std::vector<cplx>& punctures, double clearance) {
  for (const auto& seg : p.segments) {
    for (cplx q : punctures) {
      double d = std::visit(
          [&](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, LineSegment>)
              return dist_to_line(q, s.a, s.b);
            else
              return dist_to_arc(q, s);
          },
          seg);
      if (d < clearance)
        fail(Errc::PathThroughPuncture,
             "path passes within " + std::to_string(d) + " of a puncture");
    }
  }
}

namespace {

struct CompiledCurve {
  CompiledExpr c1, c2, c3;

  CompiledCurve(const IsotropicCurve& c)
      : c1(c.c[0], c.params), c2(c.c[1], c.params), c3(c.c[2], c.params) {}

  Vec3C operator()(cplx z) const { return {c1(z), c2(z), c3(z)}; }
};

Vec3C integrate_compiled(const CompiledCurve& cc, const Path& p, double seg_tol = 1e-12) {
  Vec3C total;
  for (const auto& seg : p.segments) {
    Param par = std::visit([](const auto& s) { return parametrize(s); }, seg);
    auto f = [&](double s) -> Vec3C {
      cplx z = par.z(s);
      return cc(z) * par.dz(s);
    };
    total = total + adaptive(f, 0.0, 1.0, seg_tol, 0);
  }
  return total;
}

} // namespace

Vec3C integrate(const IsotropicCurve& c, const Path& p) {
  check_clearance(p, c.punctures);
  CompiledCurve cc(c);
  return integrate_compiled(cc, p);
}

cplx integrate_expr(const Expr& e, const ParamMap& params, const Path& p,
                    const std::vector<cplx>& punctures) {
  check_clearance(p, punctures);
  CompiledExpr ce(e, params);
  Vec3C r;
  for (const auto& seg : p.segments) {
    Param par = std::visit([](const auto& s) { return parametrize(s); }, seg);
    auto f = [&](double s) -> Vec3C {
      cplx v = ce(par.z(s)) * par.dz(s);
      return Vec3C{v, cplx(0), cplx(0)};
    };
    r = r + adaptive(f, 0.0, 1.0, 1e-12, 0);
  }
  return r.x;
}

Path canonical_path(cplx from, cplx to, const std::vector<cplx>& punctures) {
  const double clearance = 1e-3;
  const double detour = 1e-2;
  Path p;
  cplx cur = from;
  // At most one deflection per puncture; punctures in the data sets used here
  // are far apart relative to the detour radius.
  std::vector<cplx> offenders;
  for (cplx q : punctures)
    if (dist_to_line(q, from, to) < clearance && std::abs(from - q) > detour &&
        std::abs(to - q) > detour)
      offenders.push_back(q);
  std::sort(offenders.begin(), offenders.end(), [&](cplx a, cplx b) {
    return std::abs(a - from) < std::abs(b - from);
  });
  for (cplx q : offenders) {
    cplx e1 = q + detour * (cur - q) / std::abs(cur - q);
    cplx e2 = q + detour * (to - q) / std::abs(to - q);
    double a0 = std::arg(e1 - q);
    double a1 = std::arg(e2 - q);
    while (a1 <= a0) a1 += 2.0 * M_PI; // deterministic CCW deflection
    p.segments.push_back(LineSegment{cur, e1});
    p.segments.push_back(ArcSegment{q, detour, a0, a1});
    cur = e2;
  }
  p.segments.push_back(LineSegment{cur, to});
  return p;
}

SurfacePatch sample_patch(const IsotropicCurve& c, cplx z0, const Vec3R& X0,
                          const GridSpec& grid) {
  if (grid.nu < 2 || grid.nv < 2 || grid.umax <= grid.umin || grid.vmax <= grid.vmin)
    fail(Errc::InvalidParameter, "grid must be strictly monotone with >= 2 nodes per axis");
  SurfacePatch patch;
  patch.sig = c.sig;
  patch.z0 = z0;
  patch.X0 = X0;
  patch.provenance = Provenance::Integrated;
  patch.us.resize(grid.nu);
  patch.vs.resize(grid.nv);
  for (int i = 0; i < grid.nu; ++i) patch.us[i] = grid.umin + i * grid.du();
  for (int j = 0; j < grid.nv; ++j) patch.vs[j] = grid.vmin + j * grid.dv();
  patch.points.resize(static_cast<size_t>(grid.nu) * grid.nv);

  for (cplx q : c.punctures) {
    for (int j = 0; j < grid.nv; ++j)
      for (int i = 0; i < grid.nu; ++i)
        if (std::abs(cplx(patch.us[i], patch.vs[j]) - q) < 1e-3)
          fail(Errc::PathThroughPuncture, "grid node too close to a puncture");
  }

  CompiledCurve cc(c);
  std::vector<Vec3C> F(patch.points.size());

  auto node_z = [&](int i, int j) { return cplx(patch.us[i], patch.vs[j]); };
  auto march = [&](cplx a, cplx b) {
    Path p = canonical_path(a, b, c.punctures);
    check_clearance(p, c.punctures);
    return integrate_compiled(cc, p);
  };

  // March along the first column, then along rows; puncture clearance is
  // enforced segment by segment through canonical_path.
  F[0] = march(z0, node_z(0, 0));
  for (int j = 1; j < grid.nv; ++j)
    F[static_cast<size_t>(j) * grid.nu] =
        F[static_cast<size_t>(j - 1) * grid.nu] + march(node_z(0, j - 1), node_z(0, j));
  for (int j = 0; j < grid.nv; ++j)
    for (int i = 1; i < grid.nu; ++i)
      F[static_cast<size_t>(j) * grid.nu + i] =
          F[static_cast<size_t>(j) * grid.nu + i - 1] + march(node_z(i - 1, j), node_z(i, j));

  for (size_t k = 0; k < F.size(); ++k) patch.points[k] = X0 + F[k].real();

  // Path-independence spot check: re-derive five deterministic nodes through a
  // single canonical path from z0.
  const std::pair<int, int> probes[5] = {{grid.nu - 1, grid.nv - 1},
                                         {grid.nu / 2, grid.nv / 3},
                                         {grid.nu / 3, grid.nv - 1},
                                         {grid.nu - 1, grid.nv / 2},
                                         {grid.nu / 4, grid.nv / 4}};
  for (const auto& [i, j] : probes) {
    Vec3C direct = march(z0, node_z(i, j));
    Vec3R xd = X0 + direct.real();
    if (norm_inf(xd - patch.at(i, j)) > 1e-9)
      fail(Errc::ToleranceNotMet,
           "path-independence spot check failed (real period on this chart?)");
  }
  return patch;
}

SurfacePatch closed_form_patch(const std::function<Vec3R(double, double)>& X, Signature sig,
                               const GridSpec& grid) {
  SurfacePatch patch;
  patch.sig = sig;
  patch.provenance = Provenance::ClosedForm;
  patch.us.resize(grid.nu);
  patch.vs.resize(grid.nv);
  for (int i = 0; i < grid.nu; ++i) patch.us[i] = grid.umin + i * grid.du();
  for (int j = 0; j < grid.nv; ++j) patch.vs[j] = grid.vmin + j * grid.dv();
  patch.points.resize(static_cast<size_t>(grid.nu) * grid.nv);
  for (int j = 0; j < grid.nv; ++j)
    for (int i = 0; i < grid.nu; ++i) patch.at(i, j) = X(patch.us[i], patch.vs[j]);
  patch.X0 = X(grid.umin, grid.vmin);
  return patch;
}

Vec3R real_period(const IsotropicCurve& c, const Path& loop) {
  if (loop.segments.empty()) return {0, 0, 0};
  // Degenerate (point) loops integrate to zero.
  if (!loop.closed(1e-9)) fail(Errc::InvalidParameter, "period loop must be closed");
  Vec3C v = integrate(c, loop);
  return v.real();
}

cplx residue_oracle(const Expr& e, cplx pole, const ParamMap& params,
                    const std::vector<cplx>& other_punctures) {
  double r1 = 0.5;
  for (cplx q : other_punctures) {
    double d = std::abs(q - pole);
    if (d > 0) r1 = std::min(r1, 0.4 * d);
  }
  double r2 = 0.5 * r1;
  CompiledExpr ce(e, params);
  auto circle_residue = [&](double r) {
    const int n = 256;
    cplx acc(0);
    for (int k = 0; k < n; ++k) {
      double t = 2.0 * M_PI * k / n;
      cplx z = pole + std::polar(r, t);
      // (1/2 pi i) * integral f dz = (1/n) * sum f(z_k) (z_k - pole)
      acc += ce(z) * (z - pole);
    }
    return acc / static_cast<double>(n);
  };
  cplx res1 = circle_residue(r1);
  cplx res2 = circle_residue(r2);
  if (std::abs(res1 - res2) > 1e-9 * std::max(1.0, std::abs(res2)))
    fail(Errc::NotIsolatedPole, "residues at two radii disagree");
  return res2;
}

double mean_curvature_fd(const SurfacePatch& patch) {
  int nu = patch.nu(), nv = patch.nv();
  if (nu < 5 || nv < 5) fail(Errc::InvalidParameter, "patch too small for interior stencils");
  double hu = patch.us[1] - patch.us[0];
  double hv = patch.vs[1] - patch.vs[0];
  Signature sig = patch.sig;
  double worst = 0;
  // 5-point 4th-order central stencils throughout. The plain 3-point stencils
  // leave an h^2/6-scale residual that sits right at the certification
  // threshold on cosh/sinh-type patches; the 5-point forms keep orders of
  // magnitude of margin while refinement behaviour stays at least O(h^2).
  // Signed first-derivative weights over offsets {-2,-1,+1,+2} and the
  // matching second-derivative weights over {-2,...,+2}.
  const int off[4] = {-2, -1, 1, 2};
  const double dw[4] = {1.0 / 12.0, -8.0 / 12.0, 8.0 / 12.0, -1.0 / 12.0};
  const double s0 = -30.0 / 12.0, s1 = 16.0 / 12.0, s2 = -1.0 / 12.0;
  for (int j = 2; j < nv - 2; ++j) {
    for (int i = 2; i < nu - 2; ++i) {
      Vec3R Xu{0, 0, 0}, Xv{0, 0, 0}, Xuv{0, 0, 0};
      for (int a = 0; a < 4; ++a) {
        Xu = Xu + patch.at(i + off[a], j) * (dw[a] / hu);
        Xv = Xv + patch.at(i, j + off[a]) * (dw[a] / hv);
        for (int b = 0; b < 4; ++b)
          Xuv = Xuv + patch.at(i + off[a], j + off[b]) * (dw[a] * dw[b] / (hu * hv));
      }
      Vec3R Xuu = (patch.at(i, j) * s0 + (patch.at(i + 1, j) + patch.at(i - 1, j)) * s1 +
                   (patch.at(i + 2, j) + patch.at(i - 2, j)) * s2) *
                  (1.0 / (hu * hu));
      Vec3R Xvv = (patch.at(i, j) * s0 + (patch.at(i, j + 1) + patch.at(i, j - 1)) * s1 +
                   (patch.at(i, j + 2) + patch.at(i, j - 2)) * s2) *
                  (1.0 / (hv * hv));
      double E = inner(Xu, Xu, sig), F = inner(Xu, Xv, sig), G = inner(Xv, Xv, sig);
      double W = E * G - F * F;
      Vec3R nraw = cross(Xu, Xv, sig);
      double q = inner(nraw, nraw, sig);
      if (sig == Signature::Euclidean) {
        if (W <= 0 || q <= 0) fail(Errc::DegenerateFirstForm, "EG - F^2 <= 0");
      } else {
        // Spacelike iff the metric is positive and the normal timelike.
        if (W <= 0 || q >= 0)
          fail(Errc::DegenerateFirstForm, "node not spacelike (EG - F^2 <= 0)");
      }
      double nn = std::sqrt(std::abs(q));
      Vec3R n = nraw * (1.0 / nn);
      double L = inner(Xuu, n, sig), M = inner(Xuv, n, sig), N = inner(Xvv, n, sig);
      double H = (E * N - 2.0 * F * M + G * L) / (2.0 * W);
      worst = std::max(worst, std::abs(H));
    }
  }
  return worst;
}

double gauss_curvature(const WeierstrassData& w, cplx z) {
  if (w.sig != Signature::Euclidean)
    fail(Errc::SignatureMismatch, "gauss_curvature expects Euclidean data");
  Expr gp = w.g.differentiate();
  double ag = std::abs(w.g.eval(z, w.params));
  double agp = std::abs(gp.eval(z, w.params));
  double af = std::abs(w.f.eval(z, w.params));
  double denom = af * (1.0 + ag * ag) * (1.0 + ag * ag);
  if (denom == 0) fail(Errc::DegenerateMetric, "metric vanishes at evaluation point");
  double k = 4.0 * agp / denom;
  return -k * k;
}

double total_curvature(const WeierstrassData& w, double R) {
  if (w.sig != Signature::Euclidean)
    fail(Errc::SignatureMismatch, "total_curvature expects Euclidean data");
  if (R <= 0) fail(Errc::InvalidParameter, "R must be positive");
  Expr gp = w.g.differentiate();
  CompiledExpr cg(w.g, w.params), cgp(gp, w.params);
  // K * lambda^2 = -4 |g'|^2 / (1 + |g|^2)^2 : the pullback of the spherical
  // area density; finite across poles of g, f-independent.
  auto density = [&](cplx z) {
    double ag2 = std::norm(cg(z));
    double agp = std::abs(cgp(z));
    double t = agp / (1.0 + ag2);
    return -4.0 * t * t;
  };
  auto scalar_adaptive = [&](const std::function<double(double)>& f, double a, double b,
                             double tol) {
    auto vf = [&](double s) { return Vec3C{cplx(f(s), 0), cplx(0), cplx(0)}; };
    return adaptive(vf, a, b, tol, 0).x.real();
  };
  auto ring = [&](double r) {
    auto f = [&](double t) { return density(std::polar(r, t)); };
    return r * scalar_adaptive(f, 0.0, 2.0 * M_PI, 1e-10);
  };
  return scalar_adaptive(ring, 0.0, R, 1e-8);
}

} // namespace zmc
