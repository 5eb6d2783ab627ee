#pragma once

#include <memory>
#include <string>

#include "weylkit/normal_form.hpp"

namespace weylkit {

/// Immutable operator expression tree: generators, scalars, sums,
/// products, nonnegative integer powers, commutator and anti-commutator
/// brackets. Shareable; evaluation is pure.
class OperatorExpr {
 public:
  enum class Kind { generator_x, generator_y, scalar, sum, product, power, commutator, anticommutator };

  static OperatorExpr generator_x();
  static OperatorExpr generator_y();
  static OperatorExpr scalar(PolyCoeff value);
  static OperatorExpr sum(OperatorExpr lhs, OperatorExpr rhs);
  static OperatorExpr product(OperatorExpr lhs, OperatorExpr rhs);
  static OperatorExpr power(OperatorExpr base, unsigned exponent);
  static OperatorExpr commutator(OperatorExpr lhs, OperatorExpr rhs);
  static OperatorExpr anticommutator(OperatorExpr lhs, OperatorExpr rhs);

  Kind kind() const;

  /// Recursive evaluation into the canonical Y^a X^b basis.
  NormalForm to_normal_form() const;

  /// Fully parenthesized form in the surface grammar; parses back to an
  /// equivalent expression.
  std::string str() const;

 private:
  struct Node;
  explicit OperatorExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

}  // namespace weylkit
