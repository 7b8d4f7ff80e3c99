/*
 * (C) Copyright 2026 zmc authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <doctest.h>

#include <array>
#include <cmath>
#include <random>
#include <thread>

#include "zmc/error.hpp"
#include "zmc/expr.hpp"
#include "zmc/vec.hpp"

using namespace zmc;

namespace {

const cplx I(0, 1);

bool close(cplx a, cplx b, double tol = 1e-12) {
  return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

// Random expression trees for property tests. Depth-bounded, with values kept
// in a sane range by resampling the evaluation point.
Expr random_expr(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 11);
  switch (pick(rng)) {
    case 0: {
      std::uniform_real_distribution<double> ur(-2.0, 2.0);
      return Expr::constant(cplx(ur(rng), ur(rng)));
    }
    case 1:
    case 2: return Expr::var();
    case 3: return random_expr(rng, depth - 1) + random_expr(rng, depth - 1);
    case 4: return random_expr(rng, depth - 1) - random_expr(rng, depth - 1);
    case 5: return random_expr(rng, depth - 1) * random_expr(rng, depth - 1);
    case 6: return random_expr(rng, depth - 1) / random_expr(rng, depth - 1);
    case 7: return exp(random_expr(rng, depth - 1));
    case 8: return sin(random_expr(rng, depth - 1));
    case 9: return cosh(random_expr(rng, depth - 1));
    case 10: {
      std::uniform_int_distribution<int> ue(1, 3);
      int n = ue(rng) * (pick(rng) % 2 ? 1 : -1);
      if (n == 0) n = 2;
      return pow(random_expr(rng, depth - 1), n);
    }
    default: return -random_expr(rng, depth - 1);
  }
}

// Evaluation point where the expression and its neighbourhood stay bounded.
bool usable_at(const Expr& e, cplx z) {
  try {
    for (cplx dz : {cplx(0, 0), cplx(1e-5, 0), cplx(-1e-5, 0)}) {
      if (std::abs(e.eval(z + dz)) > 1e3) return false;
    }
    return true;
  } catch (const Error&) {
    return false;
  }
}

} // namespace

TEST_CASE("eval basics") {
  Expr z = Expr::var();
  CHECK(close(pow(z, 2).eval(cplx(1, 1)), cplx(0, 2)));
  CHECK(close(exp(z).eval(cplx(0, 0)), cplx(1, 0)));
  Expr rational = (Expr::constant(1) + pow(z, 2)) / (Expr::constant(2) * pow(z, 2));
  CHECK(close(rational.eval(cplx(0.5, 0)), cplx(2.5, 0)));
}

TEST_CASE("eval reports unbound parameters and poles") {
  Expr z = Expr::var();
  Expr e = Expr::param("a") * z;
  CHECK_THROWS_AS(e.eval(cplx(1, 0)), Error);
  try {
    e.eval(cplx(1, 0));
  } catch (const Error& err) {
    CHECK(err.code() == Errc::UnboundParameter);
  }
  CHECK(close(e.eval(cplx(1, 0), {{"a", 3.0}}), cplx(3, 0)));

  Expr pole = Expr::constant(1) / z;
  try {
    pole.eval(cplx(0, 0));
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.code() == Errc::DivisionByZero);
    CHECK(std::string(err.what()).find("1/z") != std::string::npos);
  }
}

TEST_CASE("eval is deterministic bit for bit") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 20; ++k) {
    Expr e = random_expr(rng, 4);
    cplx z(0.3 + 0.01 * k, -0.7);
    if (!usable_at(e, z)) continue;
    cplx a = e.eval(z);
    cplx b = e.eval(z);
    CHECK(a.real() == b.real());
    CHECK(a.imag() == b.imag());
  }
}

TEST_CASE("differentiate: exact rules") {
  Expr z = Expr::var();
  SUBCASE("exp is its own derivative") {
    Expr d = exp(z).differentiate();
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ur(-1.0, 1.0);
    for (int k = 0; k < 5; ++k) {
      cplx p(ur(rng), ur(rng));
      CHECK(close(d.eval(p), exp(z).eval(p)));
    }
  }
  SUBCASE("cubic") { CHECK(close(pow(z, 3).differentiate().eval(cplx(2, 0)), cplx(12, 0))); }
  SUBCASE("inverse square") {
    CHECK(close(pow(z, -2).differentiate().eval(cplx(0.5, 0)), cplx(-16, 0)));
  }
  SUBCASE("log") {
    Expr d = log(z).differentiate();
    CHECK(close(d.eval(cplx(2, 1)), cplx(1, 0) / cplx(2, 1)));
  }
}

TEST_CASE("differentiate agrees with central finite differences") {
  std::mt19937_64 rng(20260811);
  std::uniform_real_distribution<double> ur(-1.2, 1.2);
  const double h = 1e-5;
  int tested = 0;
  while (tested < 120) {
    Expr e = random_expr(rng, 4);
    cplx z(ur(rng), ur(rng));
    if (!usable_at(e, z)) continue;
    Expr d = e.differentiate();
    cplx exact;
    try {
      exact = d.eval(z);
    } catch (const Error&) {
      continue;
    }
    if (std::abs(exact) > 1e3) continue;
    cplx fd = (e.eval(z + cplx(h, 0)) - e.eval(z - cplx(h, 0))) / cplx(2 * h, 0);
    CHECK(std::abs(exact - fd) <= 1e-6 * (1.0 + std::abs(exact)));
    ++tested;
  }
  CHECK(tested >= 100);
}

TEST_CASE("compose") {
  Expr z = Expr::var();
  SUBCASE("square of exp") {
    Expr c = pow(z, 2).compose(exp(z));
    CHECK(close(c.eval(cplx(std::log(2.0), 0)), cplx(4, 0)));
  }
  SUBCASE("identity substitution") {
    Expr f = sin(z) * exp(z) + Expr::constant(2);
    Expr c = f.compose(z);
    CHECK(c.same_structure(f));
  }
  SUBCASE("inverse square of exp at origin") {
    Expr c = pow(z, -2).compose(exp(z));
    CHECK(close(c.eval(cplx(0, 0)), cplx(1, 0)));
  }
  SUBCASE("associativity under evaluation") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> ur(-0.8, 0.8);
    int tested = 0;
    while (tested < 25) {
      Expr f = random_expr(rng, 3), g = random_expr(rng, 2), h = random_expr(rng, 2);
      cplx p(ur(rng), ur(rng));
      Expr lhs = f.compose(g).compose(h);
      Expr rhs = f.compose(g.compose(h));
      if (!usable_at(lhs, p) || !usable_at(rhs, p)) continue;
      CHECK(close(lhs.eval(p), rhs.eval(p), 1e-9));
      ++tested;
    }
  }
}

TEST_CASE("parser round trips") {
  SUBCASE("examples") {
    for (const char* text :
         {"z^2", "(1+z^2)/(2*z^2)", "exp(-z)", "-tanhhalf*exp(i*z)", "1e-3*z + i",
          "sinh(a)*cos(z) - cosh(a)*sin(z)", "z^(-2)", "log(z)", "2.5*i - z/3"}) {
      Expr e = parse_expr(text);
      Expr round = parse_expr(e.str());
      for (cplx p : {cplx(0.4, 0.3), cplx(-0.9, 1.1), cplx(1.3, -0.2)}) {
        ParamMap params{{"tanhhalf", 0.46}, {"a", 1.0}};
        CHECK(close(e.eval(p, params), round.eval(p, params)));
      }
    }
  }
  SUBCASE("random expressions") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ur(-1.0, 1.0);
    int tested = 0;
    while (tested < 40) {
      Expr e = random_expr(rng, 4);
      cplx p(ur(rng), ur(rng));
      if (!usable_at(e, p)) continue;
      Expr round = parse_expr(e.str());
      CHECK(close(e.eval(p), round.eval(p)));
      ++tested;
    }
  }
  SUBCASE("rejects bad input") {
    for (const char* text : {"z +", "(z", "z^z", "z^0", "2..5", "foo(z)", ""}) {
      CHECK_THROWS_AS(parse_expr(text), Error);
    }
  }
}

TEST_CASE("pow exponent must be nonzero") {
  CHECK_THROWS_AS(pow(Expr::var(), 0), Error);
}

TEST_CASE("constant folding collapses involutions") {
  Expr g = sin(Expr::var());
  Expr twice = Expr::constant(-I) * (Expr::constant(I) * g);
  CHECK(twice.same_structure(g));
}

TEST_CASE("signature inner product and cross product") {
  Vec3C e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
  SUBCASE("cross examples") {
    Vec3C c = cross(e1, e2, Signature::Euclidean);
    CHECK(close(c.z, cplx(1, 0)));
    Vec3C cl = cross(e1, e2, Signature::Lorentzian);
    CHECK(close(cl.z, cplx(-1, 0)));
    Vec3C u{cplx(0.3, 1), cplx(-2, 0.5), cplx(0, -1)};
    Vec3C zero = cross(u, u, Signature::Lorentzian);
    CHECK(std::abs(zero.x) + std::abs(zero.y) + std::abs(zero.z) == 0.0);
  }
  SUBCASE("inner examples") {
    Vec3C iso{1, I, 0};
    CHECK(close(inner(iso, iso, Signature::Euclidean), cplx(0, 0)));
    CHECK(close(inner(e3, e3, Signature::Lorentzian), cplx(-1, 0)));
    Vec3C light{1, 0, 1};
    CHECK(close(inner(light, light, Signature::Lorentzian), cplx(0, 0)));
  }
  SUBCASE("cross is orthogonal to both factors in either metric") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ur(-2.0, 2.0);
    for (int k = 0; k < 50; ++k) {
      Vec3C u{cplx(ur(rng), ur(rng)), cplx(ur(rng), ur(rng)), cplx(ur(rng), ur(rng))};
      Vec3C v{cplx(ur(rng), ur(rng)), cplx(ur(rng), ur(rng)), cplx(ur(rng), ur(rng))};
      for (Signature s : {Signature::Euclidean, Signature::Lorentzian}) {
        Vec3C w = cross(u, v, s);
        CHECK(std::abs(inner(w, u, s)) < 1e-12 * 100);
        CHECK(std::abs(inner(w, v, s)) < 1e-12 * 100);
        // determinant identity <w, e_3> = det(u, v, e_3)
        cplx det3 = u.x * v.y - u.y * v.x;
        CHECK(close(inner(w, Vec3C{0, 0, 1}, s), det3, 1e-12 * 100));
      }
    }
  }
}

TEST_CASE("evaluation is reentrant across threads") {
  Expr z = Expr::var();
  Expr e = exp(sin(z)) / (Expr::constant(2) + cosh(z * Expr::param("a")));
  ParamMap params{{"a", 0.5}};
  cplx expected = e.eval(cplx(0.3, 0.7), params);
  std::vector<std::thread> workers;
  std::array<bool, 4> ok{};
  for (int t = 0; t < 4; ++t) {
    workers.emplace_back([&, t] {
      bool good = true;
      for (int k = 0; k < 2000; ++k) {
        cplx v = e.eval(cplx(0.3, 0.7), params);
        good = good && v == expected;
      }
      ok[t] = good;
    });
  }
  for (auto& w : workers) w.join();
  for (bool good : ok) CHECK(good);
}

TEST_CASE("annulus samples avoid punctures") {
  auto pts = annulus_samples(50, 1, {cplx(0.5, 0.5)}, 0.3, 1.5);
  CHECK(pts.size() == 50);
  for (cplx p : pts) {
    CHECK(std::abs(p) >= 0.3 - 1e-12);
    CHECK(std::abs(p) <= 1.5 + 1e-12);
    CHECK(std::abs(p - cplx(0.5, 0.5)) >= 0.05 - 1e-12);
  }
  // deterministic
  auto again = annulus_samples(50, 1, {cplx(0.5, 0.5)}, 0.3, 1.5);
  CHECK(pts[17] == again[17]);
}
