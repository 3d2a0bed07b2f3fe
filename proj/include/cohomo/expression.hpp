#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "cohomo/jet.hpp"

namespace cohomo {

enum class BinaryOp { add, subtract, multiply, divide, power };
enum class Builtin { exp, log, sqrt, sin, cos, tan, sinh, cosh, tanh };
enum class NamedConstant { pi, e };

/// Immutable syntax tree of the expression language (see docs/grammar.md).
///
/// Copies share structure. Equality is structural; literals compare by value.
class Expression {
public:
    enum class Kind { literal, variable, constant, negate, binary, call };

    static Expression literal(double value);
    static Expression variable();
    static Expression constant(NamedConstant which);
    static Expression negate(Expression operand);
    static Expression binary(BinaryOp op, Expression lhs, Expression rhs);
    static Expression call(Builtin fn, Expression argument);

    Kind kind() const noexcept;
    double literal_value() const;
    NamedConstant named_constant() const;
    BinaryOp binary_op() const;
    Builtin builtin() const;
    /// Operand of negate/call, left operand of binary.
    const Expression& lhs() const;
    const Expression& rhs() const;

    bool operator==(const Expression& other) const;

    /// Point evaluation. Throws DomainError outside the real domain or on a non-finite value.
    double evaluate(double s) const;
    /// Jet evaluation with `s` bound to the given jet (use Jet::variable for plain Taylor data).
    Jet evaluate(const Jet& s) const;

    /// Canonical source text; parse(format()) reproduces this tree.
    std::string format() const;

private:
    struct Node;
    explicit Expression(std::shared_ptr<const Node> node);
    std::shared_ptr<const Node> node_;
};

/// Parses source text. Throws ParseError (with a 1-based position and expected
/// tokens) or UnknownIdentifierError.
Expression parse(std::string_view source);

std::string_view builtin_name(Builtin fn) noexcept;

} // namespace cohomo
