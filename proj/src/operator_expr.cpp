#include "weylkit/operator_expr.hpp"

namespace weylkit {

namespace {

std::string scalar_str(const PolyCoeff& v) {
  // emit a scalar PolyCoeff in the surface grammar (sums parenthesized)
  if (v.is_zero()) return "0";
  std::string out;
  bool multi = v.terms().size() > 1;
  bool first = true;
  for (const auto& [exp, g] : v.terms()) {
    const Rational& re = g.re();
    const Rational& im = g.im();
    std::string num;
    if (im.is_zero()) {
      num = re.str();
    } else if (re.is_zero()) {
      num = im.is_one() ? "i" : (im == Rational(-1) ? "-1*i" : im.str() + "*i");
    } else {
      std::string mag = im.is_one() || im == Rational(-1)
                            ? "i"
                            : (im < Rational(0) ? (-im).str() : im.str()) + "*i";
      num = "(" + re.str() + (im < Rational(0) ? " - " : " + ") + mag + ")";
    }
    std::string piece = num;
    for (int k = 0; k < 3; ++k) {
      if (exp.e[k] == 0) continue;
      std::string f = symbol_name(static_cast<Symbol>(k));
      if (exp.e[k] > 1) f += "^" + std::to_string(exp.e[k]);
      if (piece == "1") piece = f;
      else if (piece == "-1") piece = "-1*" + f;
      else piece += "*" + f;
    }
    if (first)
      out = piece;
    else
      out += piece.front() == '-' ? " - " + piece.substr(1) : " + " + piece;
    first = false;
  }
  return multi ? "(" + out + ")" : out;
}

}  // namespace

struct OperatorExpr::Node {
  Kind kind;
  PolyCoeff value;        // scalar nodes
  unsigned exponent = 0;  // power nodes
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;

  static NormalForm eval(const Node* n) {
    switch (n->kind) {
      case Kind::generator_x: return NormalForm::generator_x();
      case Kind::generator_y: return NormalForm::generator_y();
      case Kind::scalar: return NormalForm::scalar(n->value);
      case Kind::sum: return eval(n->lhs.get()) + eval(n->rhs.get());
      case Kind::product: return eval(n->lhs.get()) * eval(n->rhs.get());
      case Kind::power: return eval(n->lhs.get()).pow(n->exponent);
      case Kind::commutator: return weylkit::commutator(eval(n->lhs.get()), eval(n->rhs.get()));
      case Kind::anticommutator:
        return weylkit::anticommutator(eval(n->lhs.get()), eval(n->rhs.get()));
    }
    throw std::logic_error("OperatorExpr: bad node");
  }

  static std::string str(const Node* n) {
    switch (n->kind) {
      case Kind::generator_x: return "X";
      case Kind::generator_y: return "Y";
      case Kind::scalar: return scalar_str(n->value);
      case Kind::sum: return "(" + str(n->lhs.get()) + " + " + str(n->rhs.get()) + ")";
      case Kind::product: return "(" + str(n->lhs.get()) + " * " + str(n->rhs.get()) + ")";
      case Kind::power: return "(" + str(n->lhs.get()) + ")^" + std::to_string(n->exponent);
      case Kind::commutator: return "[" + str(n->lhs.get()) + ", " + str(n->rhs.get()) + "]";
      case Kind::anticommutator: return "{" + str(n->lhs.get()) + ", " + str(n->rhs.get()) + "}";
    }
    throw std::logic_error("OperatorExpr: bad node");
  }
};

OperatorExpr OperatorExpr::generator_x() {
  return OperatorExpr(std::make_shared<const Node>(Node{Kind::generator_x, {}, 0, nullptr, nullptr}));
}

OperatorExpr OperatorExpr::generator_y() {
  return OperatorExpr(std::make_shared<const Node>(Node{Kind::generator_y, {}, 0, nullptr, nullptr}));
}

OperatorExpr OperatorExpr::scalar(PolyCoeff value) {
  return OperatorExpr(std::make_shared<const Node>(Node{Kind::scalar, std::move(value), 0, nullptr, nullptr}));
}

OperatorExpr OperatorExpr::sum(OperatorExpr lhs, OperatorExpr rhs) {
  return OperatorExpr(std::make_shared<const Node>(Node{Kind::sum, {}, 0, lhs.node_, rhs.node_}));
}

OperatorExpr OperatorExpr::product(OperatorExpr lhs, OperatorExpr rhs) {
  return OperatorExpr(std::make_shared<const Node>(Node{Kind::product, {}, 0, lhs.node_, rhs.node_}));
}

OperatorExpr OperatorExpr::power(OperatorExpr base, unsigned exponent) {
  return OperatorExpr(std::make_shared<const Node>(Node{Kind::power, {}, exponent, base.node_, nullptr}));
}

OperatorExpr OperatorExpr::commutator(OperatorExpr lhs, OperatorExpr rhs) {
  return OperatorExpr(std::make_shared<const Node>(Node{Kind::commutator, {}, 0, lhs.node_, rhs.node_}));
}

OperatorExpr OperatorExpr::anticommutator(OperatorExpr lhs, OperatorExpr rhs) {
  return OperatorExpr(std::make_shared<const Node>(Node{Kind::anticommutator, {}, 0, lhs.node_, rhs.node_}));
}

OperatorExpr::Kind OperatorExpr::kind() const { return node_->kind; }

NormalForm OperatorExpr::to_normal_form() const { return Node::eval(node_.get()); }

std::string OperatorExpr::str() const { return Node::str(node_.get()); }

}  // namespace weylkit
