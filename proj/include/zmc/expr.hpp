/*
 * (C) Copyright 2026 zmc authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "zmc/vec.hpp"

namespace zmc {

// Holomorphic expression trees. Nodes are immutable and shared, so copies are
// cheap and evaluation is reentrant. Construction folds constants just enough
// that algebraic involutions like (-i)*(i*g) collapse back to g.

enum class Op {
  Constant,
  Var, // the complex variable z
  Param,
  Add,
  Sub,
  Mul,
  Div,
  Neg,
  Exp,
  Log,
  Sin,
  Cos,
  Sinh,
  Cosh,
  Pow // integer exponent, nonzero
};

class Expr;
using ParamMap = std::map<std::string, double>;

class Expr {
public:
  struct Node {
    Op op;
    cplx value{};              // Constant
    std::string name;          // Param
    int exponent = 0;          // Pow
    std::shared_ptr<const Node> a, b;
  };
  using NodePtr = std::shared_ptr<const Node>;

  Expr() = default; // empty; only assignment makes it usable
  explicit Expr(NodePtr n) : node_(std::move(n)) {}

  static Expr constant(cplx v);
  static Expr var();
  static Expr param(const std::string& name);

  bool valid() const { return node_ != nullptr; }
  const NodePtr& node() const { return node_; }

  /// Evaluate at z with the given parameter bindings. Each shared subtree is
  /// evaluated once. Throws UnboundParameter / DivisionByZero.
  cplx eval(cplx z, const ParamMap& params = {}) const;

  /// Exact symbolic derivative with respect to z.
  Expr differentiate() const;

  /// Substitute `inner` for the variable z.
  Expr compose(const Expr& inner) const;

  /// Round-trippable infix form.
  std::string str() const;

  /// Names of all parameters appearing in the tree.
  std::vector<std::string> parameters() const;

  bool same_structure(const Expr& other) const;

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);

private:
  NodePtr node_;
};

Expr exp(const Expr& e);
Expr log(const Expr& e);
Expr sin(const Expr& e);
Expr cos(const Expr& e);
Expr sinh(const Expr& e);
Expr cosh(const Expr& e);
Expr pow(const Expr& e, int n);

inline Expr operator+(const Expr& a, cplx b) { return a + Expr::constant(b); }
inline Expr operator+(cplx a, const Expr& b) { return Expr::constant(a) + b; }
inline Expr operator-(const Expr& a, cplx b) { return a - Expr::constant(b); }
inline Expr operator-(cplx a, const Expr& b) { return Expr::constant(a) - b; }
inline Expr operator*(const Expr& a, cplx b) { return a * Expr::constant(b); }
inline Expr operator*(cplx a, const Expr& b) { return Expr::constant(a) * b; }
inline Expr operator/(const Expr& a, cplx b) { return a / Expr::constant(b); }
inline Expr operator/(cplx a, const Expr& b) { return Expr::constant(a) / b; }

/// Parse the infix grammar used by the JSON descriptors. `z` is the variable,
/// `i` the imaginary unit, identifiers are parameters, `^` takes an integer
/// exponent. Throws ParseError.
Expr parse_expr(const std::string& text);

/// Flattened evaluation program for repeated evaluation of one expression with
/// fixed parameter bindings (parameters are inlined as constants). A compiled
/// instance carries its own slot buffer: create one per thread; Expr::eval
/// itself is reentrant.
class CompiledExpr {
public:
  CompiledExpr() = default;
  CompiledExpr(const Expr& e, const ParamMap& params);

  cplx operator()(cplx z) const;

private:
  struct Instr {
    Op op;
    int a = -1, b = -1;
    cplx value{};
    int exponent = 0;
    const Expr::Node* origin = nullptr; // for error reporting only
  };
  std::vector<Instr> code_;
  mutable std::vector<cplx> slots_;
};

/// Deterministic pseudo-random sample points in an annulus around `center`,
/// rejecting anything within `clearance` of a puncture.
std::vector<cplx> annulus_samples(int count, unsigned long long seed,
                                  const std::vector<cplx>& punctures, double rmin = 0.3,
                                  double rmax = 1.5, cplx center = cplx(0, 0),
                                  double clearance = 0.05);

/// Evaluation equality at sample points with relative tolerance.
bool exprs_equal(const Expr& a, const Expr& b, const ParamMap& params,
                 const std::vector<cplx>& points, double rel_tol = 1e-10);

} // namespace zmc
