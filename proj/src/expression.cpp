#include "cohomo/expression.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <system_error>
#include <vector>

#include "cohomo/errors.hpp"

namespace cohomo {

struct Expression::Node {
    Kind kind = Kind::literal;
    double value = 0.0;
    NamedConstant constant = NamedConstant::pi;
    BinaryOp op = BinaryOp::add;
    Builtin fn = Builtin::exp;
    std::vector<Expression> children;
};

namespace {

constexpr std::array<std::pair<std::string_view, Builtin>, 9> kBuiltins{{
    {"exp", Builtin::exp},
    {"log", Builtin::log},
    {"sqrt", Builtin::sqrt},
    {"sin", Builtin::sin},
    {"cos", Builtin::cos},
    {"tan", Builtin::tan},
    {"sinh", Builtin::sinh},
    {"cosh", Builtin::cosh},
    {"tanh", Builtin::tanh},
}};

// Binding strength used by the formatter; atoms bind tightest.
constexpr int kPrecAdd = 1;
constexpr int kPrecMul = 2;
constexpr int kPrecNeg = 3;
constexpr int kPrecPow = 4;
constexpr int kPrecAtom = 5;

double checked(double v, const char* what)
{
    if (!std::isfinite(v)) {
        throw DomainError(std::string("non-finite result in ") + what);
    }
    return v;
}

bool is_integral(double v) { return std::isfinite(v) && std::trunc(v) == v && std::fabs(v) < 9.0e15; }

double apply(Builtin fn, double x)
{
    switch (fn) {
    case Builtin::exp: return checked(std::exp(x), "exp");
    case Builtin::log:
        if (!(x > 0.0)) {
            throw DomainError("log of non-positive value " + std::to_string(x));
        }
        return std::log(x);
    case Builtin::sqrt:
        if (x < 0.0) {
            throw DomainError("sqrt of negative value " + std::to_string(x));
        }
        return std::sqrt(x);
    case Builtin::sin: return std::sin(x);
    case Builtin::cos: return std::cos(x);
    case Builtin::tan: return checked(std::tan(x), "tan");
    case Builtin::sinh: return checked(std::sinh(x), "sinh");
    case Builtin::cosh: return checked(std::cosh(x), "cosh");
    case Builtin::tanh: return std::tanh(x);
    }
    return 0.0;
}

Jet apply(Builtin fn, const Jet& x)
{
    switch (fn) {
    case Builtin::exp: return exp(x);
    case Builtin::log: return log(x);
    case Builtin::sqrt: return sqrt(x);
    case Builtin::sin: return sin(x);
    case Builtin::cos: return cos(x);
    case Builtin::tan: {
        Jet t = tan(x);
        std::vector<double> c(t.coeffs().begin(), t.coeffs().end());
        c[0] = std::tan(x.value());
        return Jet(x.basepoint(), std::move(c));
    }
    case Builtin::sinh: return sinh(x);
    case Builtin::cosh: return cosh(x);
    case Builtin::tanh: return tanh(x);
    }
    return x;
}

double power(double base, double exponent)
{
    if (!is_integral(exponent) && !(base > 0.0)) {
        throw DomainError("non-integer power requires a positive base");
    }
    return checked(std::pow(base, exponent), "power");
}

Jet power(const Jet& base, const Jet& exponent)
{
    bool constant_exponent = true;
    for (int i = 1; i <= exponent.order(); ++i) {
        constant_exponent = constant_exponent && exponent[static_cast<std::size_t>(i)] == 0.0;
    }
    const double scalar = power(base.value(), exponent.value());
    Jet r = !constant_exponent                 ? pow(base, exponent)
            : is_integral(exponent.value()) ? pow(base, static_cast<long long>(exponent.value()))
                                            : pow(base, exponent.value());
    std::vector<double> c(r.coeffs().begin(), r.coeffs().end());
    c[0] = scalar;
    return Jet(base.basepoint(), std::move(c));
}

double constant_value(NamedConstant c) { return c == NamedConstant::pi ? std::numbers::pi : std::numbers::e; }

// --- lexer -----------------------------------------------------------------

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
    Tok type;
    std::string_view text;
    std::size_t position; // 1-based
    double number = 0.0;
};

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }

std::vector<Token> lex(std::string_view src)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        const char c = src[i];
        const std::size_t pos = i + 1;
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        if (is_digit(c) || (c == '.' && i + 1 < src.size() && is_digit(src[i + 1]))) {
            std::size_t j = i;
            while (j < src.size() && is_digit(src[j])) {
                ++j;
            }
            if (j < src.size() && src[j] == '.') {
                ++j;
                while (j < src.size() && is_digit(src[j])) {
                    ++j;
                }
            }
            if (j < src.size() && (src[j] == 'e' || src[j] == 'E')) {
                std::size_t k = j + 1;
                if (k < src.size() && (src[k] == '+' || src[k] == '-')) {
                    ++k;
                }
                if (k < src.size() && is_digit(src[k])) {
                    while (k < src.size() && is_digit(src[k])) {
                        ++k;
                    }
                    j = k;
                }
            }
            Token t{Tok::number, src.substr(i, j - i), pos};
            const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.number);
            if (ec != std::errc() || ptr != t.text.data() + t.text.size() || !std::isfinite(t.number)) {
                throw ParseError("numeric literal '" + std::string(t.text) + "' out of range", pos);
            }
            out.push_back(t);
            i = j;
            continue;
        }
        if (is_alpha(c)) {
            std::size_t j = i;
            while (j < src.size() && (is_alpha(src[j]) || is_digit(src[j]))) {
                ++j;
            }
            out.push_back({Tok::ident, src.substr(i, j - i), pos});
            i = j;
            continue;
        }
        Tok type{};
        switch (c) {
        case '+': type = Tok::plus; break;
        case '-': type = Tok::minus; break;
        case '*': type = Tok::star; break;
        case '/': type = Tok::slash; break;
        case '^': type = Tok::caret; break;
        case '(': type = Tok::lparen; break;
        case ')': type = Tok::rparen; break;
        default:
            throw ParseError("unexpected character '" + std::string(1, c) + "'", pos);
        }
        out.push_back({type, src.substr(i, 1), pos});
        ++i;
    }
    out.push_back({Tok::end, {}, src.size() + 1});
    return out;
}

// --- parser ------------------------------------------------------------------
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?
//   primary := number | 's' | 'pi' | 'e' | builtin '(' expr ')' | '(' expr ')'

class Parser {
public:
    explicit Parser(std::string_view src) : tokens_(lex(src)) {}

    Expression parse_all()
    {
        Expression e = expr();
        if (peek().type != Tok::end) {
            fail({"operator", "end of input"});
        }
        return e;
    }

private:
    const Token& peek() const { return tokens_[index_]; }
    const Token& advance() { return tokens_[index_++]; }

    [[noreturn]] void fail(std::vector<std::string> expected) const
    {
        const Token& t = peek();
        std::string found = t.type == Tok::end ? "end of input" : "'" + std::string(t.text) + "'";
        throw ParseError("syntax error at " + found, t.position, std::move(expected));
    }

    Expression expr()
    {
        Expression lhs = term();
        while (peek().type == Tok::plus || peek().type == Tok::minus) {
            const BinaryOp op = advance().type == Tok::plus ? BinaryOp::add : BinaryOp::subtract;
            lhs = Expression::binary(op, lhs, term());
        }
        return lhs;
    }

    Expression term()
    {
        Expression lhs = unary();
        while (peek().type == Tok::star || peek().type == Tok::slash) {
            const BinaryOp op = advance().type == Tok::star ? BinaryOp::multiply : BinaryOp::divide;
            lhs = Expression::binary(op, lhs, unary());
        }
        return lhs;
    }

    Expression unary()
    {
        if (peek().type == Tok::minus) {
            advance();
            return Expression::negate(unary());
        }
        return power();
    }

    Expression power()
    {
        Expression base = primary();
        if (peek().type == Tok::caret) {
            advance();
            return Expression::binary(BinaryOp::power, base, unary());
        }
        return base;
    }

    Expression primary()
    {
        const Token& t = peek();
        switch (t.type) {
        case Tok::number:
            advance();
            return Expression::literal(t.number);
        case Tok::lparen: {
            advance();
            Expression inner = expr();
            expect(Tok::rparen, "')'");
            return inner;
        }
        case Tok::ident: {
            advance();
            if (t.text == "s") {
                return Expression::variable();
            }
            if (t.text == "pi") {
                return Expression::constant(NamedConstant::pi);
            }
            if (t.text == "e") {
                return Expression::constant(NamedConstant::e);
            }
            for (const auto& [name, fn] : kBuiltins) {
                if (t.text == name) {
                    expect(Tok::lparen, "'('");
                    Expression arg = expr();
                    expect(Tok::rparen, "')'");
                    return Expression::call(fn, arg);
                }
            }
            throw UnknownIdentifierError(std::string(t.text), t.position);
        }
        default:
            fail({"number", "identifier", "'('", "'-'"});
        }
    }

    void expect(Tok type, const char* spelled)
    {
        if (peek().type != type) {
            fail({spelled});
        }
        advance();
    }

    std::vector<Token> tokens_;
    std::size_t index_ = 0;
};

// --- formatter ---------------------------------------------------------------

int precedence(const Expression& e)
{
    switch (e.kind()) {
    case Expression::Kind::negate: return kPrecNeg;
    case Expression::Kind::binary:
        switch (e.binary_op()) {
        case BinaryOp::add:
        case BinaryOp::subtract: return kPrecAdd;
        case BinaryOp::multiply:
        case BinaryOp::divide: return kPrecMul;
        case BinaryOp::power: return kPrecPow;
        }
        break;
    default: break;
    }
    return kPrecAtom;
}

void format_into(const Expression& e, std::string& out);

void format_child(const Expression& e, bool parenthesize, std::string& out)
{
    if (parenthesize) {
        out += '(';
    }
    format_into(e, out);
    if (parenthesize) {
        out += ')';
    }
}

void format_into(const Expression& e, std::string& out)
{
    switch (e.kind()) {
    case Expression::Kind::literal: {
        std::array<char, 64> buf{};
        const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), e.literal_value());
        out.append(buf.data(), ptr);
        return;
    }
    case Expression::Kind::variable: out += 's'; return;
    case Expression::Kind::constant: out += e.named_constant() == NamedConstant::pi ? "pi" : "e"; return;
    case Expression::Kind::negate:
        out += '-';
        format_child(e.lhs(), precedence(e.lhs()) < kPrecNeg, out);
        return;
    case Expression::Kind::call:
        out += builtin_name(e.builtin());
        format_child(e.lhs(), true, out);
        return;
    case Expression::Kind::binary: break;
    }
    const int p = precedence(e);
    switch (e.binary_op()) {
    case BinaryOp::add:
    case BinaryOp::subtract:
        format_child(e.lhs(), precedence(e.lhs()) < p, out);
        out += e.binary_op() == BinaryOp::add ? " + " : " - ";
        format_child(e.rhs(), precedence(e.rhs()) <= p, out);
        return;
    case BinaryOp::multiply:
    case BinaryOp::divide:
        format_child(e.lhs(), precedence(e.lhs()) < p, out);
        out += e.binary_op() == BinaryOp::multiply ? '*' : '/';
        format_child(e.rhs(), precedence(e.rhs()) <= p, out);
        return;
    case BinaryOp::power:
        format_child(e.lhs(), precedence(e.lhs()) <= p, out);
        out += '^';
        // exponent is parsed as a unary, so negation and nested powers need no parentheses
        format_child(e.rhs(), precedence(e.rhs()) < kPrecNeg, out);
        return;
    }
}

template <typename T>
T evaluate_node(const Expression& e, const T& s)
{
    auto lift = [&s](double v) -> T {
        if constexpr (std::is_same_v<T, double>) {
            return v;
        } else {
            return Jet::constant(s.basepoint(), s.order(), v);
        }
    };
    switch (e.kind()) {
    case Expression::Kind::literal: return lift(e.literal_value());
    case Expression::Kind::variable: return s;
    case Expression::Kind::constant: return lift(constant_value(e.named_constant()));
    case Expression::Kind::negate: return -evaluate_node(e.lhs(), s);
    case Expression::Kind::call: return apply(e.builtin(), evaluate_node(e.lhs(), s));
    case Expression::Kind::binary: break;
    }
    const T lhs = evaluate_node(e.lhs(), s);
    const T rhs = evaluate_node(e.rhs(), s);
    switch (e.binary_op()) {
    case BinaryOp::add: return lhs + rhs;
    case BinaryOp::subtract: return lhs - rhs;
    case BinaryOp::multiply:
        if constexpr (std::is_same_v<T, double>) {
            return checked(lhs * rhs, "multiplication");
        } else {
            return lhs * rhs;
        }
    case BinaryOp::divide:
        if constexpr (std::is_same_v<T, double>) {
            if (rhs == 0.0) {
                throw DomainError("division by zero");
            }
            return checked(lhs / rhs, "division");
        } else {
            return lhs / rhs;
        }
    case BinaryOp::power: return power(lhs, rhs);
    }
    return lhs;
}

} // namespace

Expression::Expression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Expression Expression::literal(double value)
{
    auto n = std::make_shared<Node>();
    n->kind = Kind::literal;
    n->value = value;
    return Expression(std::move(n));
}

Expression Expression::variable()
{
    auto n = std::make_shared<Node>();
    n->kind = Kind::variable;
    return Expression(std::move(n));
}

Expression Expression::constant(NamedConstant which)
{
    auto n = std::make_shared<Node>();
    n->kind = Kind::constant;
    n->constant = which;
    return Expression(std::move(n));
}

Expression Expression::negate(Expression operand)
{
    auto n = std::make_shared<Node>();
    n->kind = Kind::negate;
    n->children.push_back(std::move(operand));
    return Expression(std::move(n));
}

Expression Expression::binary(BinaryOp op, Expression lhs, Expression rhs)
{
    auto n = std::make_shared<Node>();
    n->kind = Kind::binary;
    n->op = op;
    n->children.push_back(std::move(lhs));
    n->children.push_back(std::move(rhs));
    return Expression(std::move(n));
}

Expression Expression::call(Builtin fn, Expression argument)
{
    auto n = std::make_shared<Node>();
    n->kind = Kind::call;
    n->fn = fn;
    n->children.push_back(std::move(argument));
    return Expression(std::move(n));
}

Expression::Kind Expression::kind() const noexcept { return node_->kind; }

double Expression::literal_value() const
{
    if (kind() != Kind::literal) {
        throw InvalidArgument("expression is not a literal");
    }
    return node_->value;
}

NamedConstant Expression::named_constant() const
{
    if (kind() != Kind::constant) {
        throw InvalidArgument("expression is not a named constant");
    }
    return node_->constant;
}

BinaryOp Expression::binary_op() const
{
    if (kind() != Kind::binary) {
        throw InvalidArgument("expression is not a binary operation");
    }
    return node_->op;
}

Builtin Expression::builtin() const
{
    if (kind() != Kind::call) {
        throw InvalidArgument("expression is not a function call");
    }
    return node_->fn;
}

const Expression& Expression::lhs() const
{
    if (node_->children.empty()) {
        throw InvalidArgument("expression has no operands");
    }
    return node_->children.front();
}

const Expression& Expression::rhs() const
{
    if (node_->children.size() < 2) {
        throw InvalidArgument("expression has no right operand");
    }
    return node_->children[1];
}

bool Expression::operator==(const Expression& other) const
{
    if (node_ == other.node_) {
        return true;
    }
    const Node& a = *node_;
    const Node& b = *other.node_;
    if (a.kind != b.kind || a.children.size() != b.children.size()) {
        return false;
    }
    switch (a.kind) {
    case Kind::literal: return a.value == b.value && std::signbit(a.value) == std::signbit(b.value);
    case Kind::variable: return true;
    case Kind::constant: return a.constant == b.constant;
    case Kind::binary:
        if (a.op != b.op) {
            return false;
        }
        break;
    case Kind::call:
        if (a.fn != b.fn) {
            return false;
        }
        break;
    case Kind::negate: break;
    }
    for (std::size_t i = 0; i < a.children.size(); ++i) {
        if (!(a.children[i] == b.children[i])) {
            return false;
        }
    }
    return true;
}

double Expression::evaluate(double s) const { return checked(evaluate_node<double>(*this, s), "evaluation"); }

Jet Expression::evaluate(const Jet& s) const { return evaluate_node<Jet>(*this, s); }

std::string Expression::format() const
{
    std::string out;
    format_into(*this, out);
    return out;
}

Expression parse(std::string_view source)
{
    if (source.find_first_not_of(" \t\r\n") == std::string_view::npos) {
        throw ParseError("empty expression", 1, {"number", "identifier", "'('", "'-'"});
    }
    return Parser(source).parse_all();
}

std::string_view builtin_name(Builtin fn) noexcept
{
    for (const auto& [name, f] : kBuiltins) {
        if (f == fn) {
            return name;
        }
    }
    return "?";
}

} // namespace cohomo
