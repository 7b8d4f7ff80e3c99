/*
 * (C) Copyright 2026 zmc authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "zmc/expr.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <unordered_map>

#include "zmc/error.hpp"

namespace zmc {

namespace {

using Node = Expr::Node;
using NodePtr = Expr::NodePtr;

NodePtr make_node(Op op, NodePtr a = nullptr, NodePtr b = nullptr) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

NodePtr make_const(cplx v) {
  auto n = std::make_shared<Node>();
  n->op = Op::Constant;
  n->value = v;
  return n;
}

bool is_const(const NodePtr& n, cplx v) { return n->op == Op::Constant && n->value == v; }

} // namespace

Expr Expr::constant(cplx v) { return Expr(make_const(v)); }

Expr Expr::var() { return Expr(make_node(Op::Var)); }

Expr Expr::param(const std::string& name) {
  auto n = std::make_shared<Node>();
  n->op = Op::Param;
  n->name = name;
  return Expr(n);
}

Expr operator+(const Expr& a, const Expr& b) {
  const auto &na = a.node_, &nb = b.node_;
  if (na->op == Op::Constant && nb->op == Op::Constant)
    return Expr::constant(na->value + nb->value);
  if (is_const(na, cplx(0))) return b;
  if (is_const(nb, cplx(0))) return a;
  return Expr(make_node(Op::Add, na, nb));
}

Expr operator-(const Expr& a, const Expr& b) {
  const auto &na = a.node_, &nb = b.node_;
  if (na->op == Op::Constant && nb->op == Op::Constant)
    return Expr::constant(na->value - nb->value);
  if (is_const(nb, cplx(0))) return a;
  return Expr(make_node(Op::Sub, na, nb));
}

Expr operator*(const Expr& a, const Expr& b) {
  const auto &na = a.node_, &nb = b.node_;
  if (na->op == Op::Constant && nb->op == Op::Constant)
    return Expr::constant(na->value * nb->value);
  if (is_const(na, cplx(1))) return b;
  if (is_const(nb, cplx(1))) return a;
  // Collapse nested constant factors so involutions like (-i)*(i*g) fold to g.
  if (na->op == Op::Constant && nb->op == Op::Mul && nb->a->op == Op::Constant)
    return Expr::constant(na->value * nb->a->value) * Expr(nb->b);
  if (nb->op == Op::Constant && na->op == Op::Mul && na->a->op == Op::Constant)
    return Expr::constant(nb->value * na->a->value) * Expr(na->b);
  if (nb->op == Op::Constant) return b * a; // keep constant factor on the left
  return Expr(make_node(Op::Mul, na, nb));
}

Expr operator/(const Expr& a, const Expr& b) {
  const auto &na = a.node_, &nb = b.node_;
  if (nb->op == Op::Constant && nb->value == cplx(0))
    fail(Errc::DivisionByZero, "constant zero denominator");
  if (na->op == Op::Constant && nb->op == Op::Constant)
    return Expr::constant(na->value / nb->value);
  if (is_const(nb, cplx(1))) return a;
  return Expr(make_node(Op::Div, na, nb));
}

Expr operator-(const Expr& a) {
  const auto& na = a.node_;
  if (na->op == Op::Constant) return Expr::constant(-na->value);
  if (na->op == Op::Neg) return Expr(na->a);
  return Expr(make_node(Op::Neg, na));
}

Expr exp(const Expr& e) { return Expr(make_node(Op::Exp, e.node())); }
Expr log(const Expr& e) { return Expr(make_node(Op::Log, e.node())); }
Expr sin(const Expr& e) { return Expr(make_node(Op::Sin, e.node())); }
Expr cos(const Expr& e) { return Expr(make_node(Op::Cos, e.node())); }
Expr sinh(const Expr& e) { return Expr(make_node(Op::Sinh, e.node())); }
Expr cosh(const Expr& e) { return Expr(make_node(Op::Cosh, e.node())); }

Expr pow(const Expr& e, int n) {
  if (n == 0) fail(Errc::InvalidParameter, "pow exponent must be a nonzero integer");
  if (n == 1) return e;
  if (e.node()->op == Op::Constant) return Expr::constant(std::pow(e.node()->value, n));
  auto node = std::make_shared<Node>();
  node->op = Op::Pow;
  node->exponent = n;
  node->a = e.node();
  return Expr(node);
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

cplx int_pow(cplx base, int n, const Node* where) {
  if (n < 0) {
    if (base == cplx(0)) {
      std::ostringstream os;
      os << "pole hit at pow with negative exponent";
      fail(Errc::DivisionByZero, os.str());
    }
    return cplx(1) / int_pow(base, -n, where);
  }
  cplx r(1);
  cplx p = base;
  while (n > 0) {
    if (n & 1) r *= p;
    p *= p;
    n >>= 1;
  }
  return r;
}

std::string brief(const Node* n);

cplx eval_node(const Node* n, cplx z, const ParamMap& params,
               std::unordered_map<const Node*, cplx>& memo) {
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  cplx r;
  switch (n->op) {
    case Op::Constant: r = n->value; break;
    case Op::Var: r = z; break;
    case Op::Param: {
      auto p = params.find(n->name);
      if (p == params.end()) fail(Errc::UnboundParameter, "parameter '" + n->name + "' is not bound");
      r = cplx(p->second, 0.0);
      break;
    }
    case Op::Add: r = eval_node(n->a.get(), z, params, memo) + eval_node(n->b.get(), z, params, memo); break;
    case Op::Sub: r = eval_node(n->a.get(), z, params, memo) - eval_node(n->b.get(), z, params, memo); break;
    case Op::Mul: r = eval_node(n->a.get(), z, params, memo) * eval_node(n->b.get(), z, params, memo); break;
    case Op::Div: {
      cplx num = eval_node(n->a.get(), z, params, memo);
      cplx den = eval_node(n->b.get(), z, params, memo);
      if (den == cplx(0)) fail(Errc::DivisionByZero, "pole hit in " + brief(n));
      r = num / den;
      break;
    }
    case Op::Neg: r = -eval_node(n->a.get(), z, params, memo); break;
    case Op::Exp: r = std::exp(eval_node(n->a.get(), z, params, memo)); break;
    case Op::Log: {
      cplx u = eval_node(n->a.get(), z, params, memo);
      if (u == cplx(0)) fail(Errc::DivisionByZero, "log of zero in " + brief(n));
      r = std::log(u);
      break;
    }
    case Op::Sin: r = std::sin(eval_node(n->a.get(), z, params, memo)); break;
    case Op::Cos: r = std::cos(eval_node(n->a.get(), z, params, memo)); break;
    case Op::Sinh: r = std::sinh(eval_node(n->a.get(), z, params, memo)); break;
    case Op::Cosh: r = std::cosh(eval_node(n->a.get(), z, params, memo)); break;
    case Op::Pow: r = int_pow(eval_node(n->a.get(), z, params, memo), n->exponent, n); break;
  }
  memo.emplace(n, r);
  return r;
}

} // namespace

cplx Expr::eval(cplx z, const ParamMap& params) const {
  if (!node_) fail(Errc::Internal, "evaluating empty expression");
  std::unordered_map<const Node*, cplx> memo;
  return eval_node(node_.get(), z, params, memo);
}

// ---------------------------------------------------------------------------
// Differentiation

namespace {

Expr diff_node(const NodePtr& n, std::unordered_map<const Node*, Expr>& memo) {
  auto it = memo.find(n.get());
  if (it != memo.end()) return it->second;
  Expr e(n);
  Expr r;
  switch (n->op) {
    case Op::Constant:
    case Op::Param: r = Expr::constant(0); break;
    case Op::Var: r = Expr::constant(1); break;
    case Op::Add: r = diff_node(n->a, memo) + diff_node(n->b, memo); break;
    case Op::Sub: r = diff_node(n->a, memo) - diff_node(n->b, memo); break;
    case Op::Mul:
      r = diff_node(n->a, memo) * Expr(n->b) + Expr(n->a) * diff_node(n->b, memo);
      break;
    case Op::Div:
      r = (diff_node(n->a, memo) * Expr(n->b) - Expr(n->a) * diff_node(n->b, memo)) /
          pow(Expr(n->b), 2);
      break;
    case Op::Neg: r = -diff_node(n->a, memo); break;
    case Op::Exp: r = e * diff_node(n->a, memo); break; // reuse exp node itself
    case Op::Log: r = diff_node(n->a, memo) / Expr(n->a); break;
    case Op::Sin: r = cos(Expr(n->a)) * diff_node(n->a, memo); break;
    case Op::Cos: r = -(sin(Expr(n->a)) * diff_node(n->a, memo)); break;
    case Op::Sinh: r = cosh(Expr(n->a)) * diff_node(n->a, memo); break;
    case Op::Cosh: r = sinh(Expr(n->a)) * diff_node(n->a, memo); break;
    case Op::Pow: {
      int m = n->exponent;
      Expr base(n->a);
      Expr inner = diff_node(n->a, memo);
      if (m == 2)
        r = Expr::constant(2) * base * inner;
      else
        r = Expr::constant(m) * pow(base, m - 1) * inner;
      break;
    }
  }
  memo.emplace(n.get(), r);
  return r;
}

} // namespace

Expr Expr::differentiate() const {
  std::unordered_map<const Node*, Expr> memo;
  return diff_node(node_, memo);
}

// ---------------------------------------------------------------------------
// Composition

namespace {

NodePtr compose_node(const NodePtr& n, const NodePtr& inner,
                     std::unordered_map<const Node*, NodePtr>& memo) {
  auto it = memo.find(n.get());
  if (it != memo.end()) return it->second;
  NodePtr r;
  if (n->op == Op::Var) {
    r = inner;
  } else if (!n->a) {
    r = n; // constants and params unchanged
  } else {
    auto copy = std::make_shared<Node>(*n);
    copy->a = compose_node(n->a, inner, memo);
    if (n->b) copy->b = compose_node(n->b, inner, memo);
    r = copy;
  }
  memo.emplace(n.get(), r);
  return r;
}

} // namespace

Expr Expr::compose(const Expr& inner) const {
  std::unordered_map<const Node*, NodePtr> memo;
  return Expr(compose_node(node_, inner.node(), memo));
}

// ---------------------------------------------------------------------------
// Printing

namespace {

// Precedence: add=1, mul=2, unary=3, pow=4, atom=5.
void print_number(std::ostringstream& os, double v) {
  char buf[64];
  snprintf(buf, sizeof buf, "%.17g", v);
  os << buf;
}

void print_const(std::ostringstream& os, cplx v) {
  double re = v.real(), im = v.imag();
  if (im == 0.0) {
    if (re < 0) {
      os << '(';
      print_number(os, re);
      os << ')';
    } else {
      print_number(os, re);
    }
    return;
  }
  os << '(';
  if (re != 0.0) {
    print_number(os, re);
    os << (im < 0 ? "-" : "+");
    double a = std::abs(im);
    if (a != 1.0) {
      print_number(os, a);
      os << '*';
    }
    os << 'i';
  } else {
    if (im < 0) os << '-';
    double a = std::abs(im);
    if (a != 1.0) {
      print_number(os, a);
      os << '*';
    }
    os << 'i';
  }
  os << ')';
}

int precedence(const Node* n) {
  switch (n->op) {
    case Op::Add:
    case Op::Sub: return 1;
    case Op::Mul:
    case Op::Div: return 2;
    case Op::Neg: return 3;
    case Op::Pow: return 4;
    default: return 5;
  }
}

void print_node(std::ostringstream& os, const Node* n, int parent_prec) {
  int prec = precedence(n);
  bool need = prec < parent_prec;
  if (need) os << '(';
  switch (n->op) {
    case Op::Constant: print_const(os, n->value); break;
    case Op::Var: os << 'z'; break;
    case Op::Param: os << n->name; break;
    case Op::Add:
      print_node(os, n->a.get(), prec);
      os << '+';
      print_node(os, n->b.get(), prec + 1);
      break;
    case Op::Sub:
      print_node(os, n->a.get(), prec);
      os << '-';
      print_node(os, n->b.get(), prec + 1);
      break;
    case Op::Mul:
      print_node(os, n->a.get(), prec);
      os << '*';
      print_node(os, n->b.get(), prec + 1);
      break;
    case Op::Div:
      print_node(os, n->a.get(), prec);
      os << '/';
      print_node(os, n->b.get(), prec + 1);
      break;
    case Op::Neg:
      os << '-';
      print_node(os, n->a.get(), prec + 1);
      break;
    case Op::Exp: os << "exp("; print_node(os, n->a.get(), 0); os << ')'; break;
    case Op::Log: os << "log("; print_node(os, n->a.get(), 0); os << ')'; break;
    case Op::Sin: os << "sin("; print_node(os, n->a.get(), 0); os << ')'; break;
    case Op::Cos: os << "cos("; print_node(os, n->a.get(), 0); os << ')'; break;
    case Op::Sinh: os << "sinh("; print_node(os, n->a.get(), 0); os << ')'; break;
    case Op::Cosh: os << "cosh("; print_node(os, n->a.get(), 0); os << ')'; break;
    case Op::Pow:
      print_node(os, n->a.get(), prec + 1);
      os << '^';
      if (n->exponent < 0)
        os << '(' << n->exponent << ')';
      else
        os << n->exponent;
      break;
  }
  if (need) os << ')';
}

std::string brief(const Node* n) {
  std::ostringstream os;
  print_node(os, n, 0);
  std::string s = os.str();
  if (s.size() > 120) s = s.substr(0, 117) + "...";
  return s;
}

} // namespace

std::string Expr::str() const {
  std::ostringstream os;
  print_node(os, node_.get(), 0);
  return os.str();
}

std::vector<std::string> Expr::parameters() const {
  std::vector<std::string> out;
  std::vector<const Node*> stack{node_.get()};
  std::unordered_map<const Node*, bool> seen;
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    if (seen[n]) continue;
    seen[n] = true;
    if (n->op == Op::Param) {
      if (std::find(out.begin(), out.end(), n->name) == out.end()) out.push_back(n->name);
    }
    if (n->a) stack.push_back(n->a.get());
    if (n->b) stack.push_back(n->b.get());
  }
  return out;
}

bool Expr::same_structure(const Expr& other) const {
  struct Cmp {
    static bool eq(const Node* a, const Node* b) {
      if (a == b) return true;
      if (a->op != b->op) return false;
      switch (a->op) {
        case Op::Constant: return a->value == b->value;
        case Op::Var: return true;
        case Op::Param: return a->name == b->name;
        case Op::Pow:
          return a->exponent == b->exponent && eq(a->a.get(), b->a.get());
        default: break;
      }
      if (!!a->a != !!b->a || !!a->b != !!b->b) return false;
      if (a->a && !eq(a->a.get(), b->a.get())) return false;
      if (a->b && !eq(a->b.get(), b->b.get())) return false;
      return true;
    }
  };
  return Cmp::eq(node_.get(), other.node_.get());
}

// ---------------------------------------------------------------------------
// Compiled form

CompiledExpr::CompiledExpr(const Expr& e, const ParamMap& params) {
  std::unordered_map<const Expr::Node*, int> index;
  struct Builder {
    std::vector<Instr>& code;
    std::unordered_map<const Expr::Node*, int>& index;
    const ParamMap& params;

    int visit(const Expr::Node* n) {
      auto it = index.find(n);
      if (it != index.end()) return it->second;
      Instr ins;
      ins.op = n->op;
      ins.origin = n;
      switch (n->op) {
        case Op::Constant: ins.value = n->value; break;
        case Op::Param: {
          auto p = params.find(n->name);
          if (p == params.end())
            fail(Errc::UnboundParameter, "parameter '" + n->name + "' is not bound");
          ins.op = Op::Constant;
          ins.value = cplx(p->second, 0.0);
          break;
        }
        case Op::Var: break;
        case Op::Pow:
          ins.exponent = n->exponent;
          ins.a = visit(n->a.get());
          break;
        default:
          ins.a = visit(n->a.get());
          if (n->b) ins.b = visit(n->b.get());
          break;
      }
      code.push_back(ins);
      int idx = static_cast<int>(code.size()) - 1;
      index.emplace(n, idx);
      return idx;
    }
  } builder{code_, index, params};
  builder.visit(e.node().get());
  slots_.resize(code_.size());
}

cplx CompiledExpr::operator()(cplx z) const {
  auto& s = slots_;
  for (size_t i = 0; i < code_.size(); ++i) {
    const Instr& ins = code_[i];
    switch (ins.op) {
      case Op::Constant: s[i] = ins.value; break;
      case Op::Var: s[i] = z; break;
      case Op::Add: s[i] = s[ins.a] + s[ins.b]; break;
      case Op::Sub: s[i] = s[ins.a] - s[ins.b]; break;
      case Op::Mul: s[i] = s[ins.a] * s[ins.b]; break;
      case Op::Div:
        if (s[ins.b] == cplx(0)) fail(Errc::DivisionByZero, "pole hit in " + brief(ins.origin));
        s[i] = s[ins.a] / s[ins.b];
        break;
      case Op::Neg: s[i] = -s[ins.a]; break;
      case Op::Exp: s[i] = std::exp(s[ins.a]); break;
      case Op::Log:
        if (s[ins.a] == cplx(0)) fail(Errc::DivisionByZero, "log of zero");
        s[i] = std::log(s[ins.a]);
        break;
      case Op::Sin: s[i] = std::sin(s[ins.a]); break;
      case Op::Cos: s[i] = std::cos(s[ins.a]); break;
      case Op::Sinh: s[i] = std::sinh(s[ins.a]); break;
      case Op::Cosh: s[i] = std::cosh(s[ins.a]); break;
      case Op::Pow: s[i] = int_pow(s[ins.a], ins.exponent, ins.origin); break;
      case Op::Param: break; // inlined at build time
    }
  }
  return s.back();
}

// ---------------------------------------------------------------------------
// Sampling helpers

std::vector<cplx> annulus_samples(int count, unsigned long long seed,
                                  const std::vector<cplx>& punctures, double rmin, double rmax,
                                  cplx center, double clearance) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ur(rmin * rmin, rmax * rmax);
  std::uniform_real_distribution<double> ut(0.0, 2.0 * M_PI);
  std::vector<cplx> out;
  out.reserve(count);
  int guard = 0;
  while (static_cast<int>(out.size()) < count && guard < 100000) {
    ++guard;
    double r = std::sqrt(ur(rng));
    double t = ut(rng);
    cplx z = center + std::polar(r, t);
    bool ok = true;
    for (const auto& p : punctures)
      if (std::abs(z - p) < clearance) ok = false;
    if (ok) out.push_back(z);
  }
  if (static_cast<int>(out.size()) < count)
    fail(Errc::Internal, "could not draw sample points clear of punctures");
  return out;
}

bool exprs_equal(const Expr& a, const Expr& b, const ParamMap& params,
                 const std::vector<cplx>& points, double rel_tol) {
  for (cplx z : points) {
    cplx va = a.eval(z, params);
    cplx vb = b.eval(z, params);
    double scale = std::max(1.0, std::max(std::abs(va), std::abs(vb)));
    if (std::abs(va - vb) > rel_tol * scale) return false;
  }
  return true;
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ParseError: return "ParseError";
    case Errc::UnboundParameter: return "UnboundParameter";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::DegenerateGaussMap: return "DegenerateGaussMap";
    case Errc::IsotropyBroken: return "IsotropyBroken";
    case Errc::DegenerateMoebius: return "DegenerateMoebius";
    case Errc::SingularChange: return "SingularChange";
    case Errc::DegenerateMetric: return "DegenerateMetric";
    case Errc::SignatureMismatch: return "SignatureMismatch";
    case Errc::InvalidParameter: return "InvalidParameter";
    case Errc::PathThroughPuncture: return "PathThroughPuncture";
    case Errc::ToleranceNotMet: return "ToleranceNotMet";
    case Errc::NotIsolatedPole: return "NotIsolatedPole";
    case Errc::DegenerateFirstForm: return "DegenerateFirstForm";
    case Errc::GridMismatch: return "GridMismatch";
    case Errc::UnknownName: return "UnknownName";
    case Errc::ParameterOutOfRange: return "ParameterOutOfRange";
    case Errc::IoError: return "IoError";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

} // namespace zmc
