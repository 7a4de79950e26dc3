#include "sfpl/expr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "sfpl/errors.hpp"

namespace sfpl {

namespace {
enum class Kind { constant, variable, add, sub, mul, div, pow, neg, sin, cos, exp, log };
}

struct Expr::Node {
    Kind kind;
    double value = 0.0;     // constant
    std::size_t index = 0;  // variable
    std::shared_ptr<const Node> a, b;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

NodePtr make_const(double v) {
    auto n = std::make_shared<Expr::Node>();
    n->kind = Kind::constant;
    n->value = v;
    return n;
}

NodePtr make_var(std::size_t i) {
    auto n = std::make_shared<Expr::Node>();
    n->kind = Kind::variable;
    n->index = i;
    return n;
}

NodePtr make_unary(Kind k, NodePtr a) {
    if (a->kind == Kind::constant) {
        switch (k) {
            case Kind::neg: return make_const(-a->value);
            case Kind::sin: return make_const(std::sin(a->value));
            case Kind::cos: return make_const(std::cos(a->value));
            case Kind::exp: return make_const(std::exp(a->value));
            case Kind::log: return make_const(std::log(a->value));
            default: break;
        }
    }
    auto n = std::make_shared<Expr::Node>();
    n->kind = k;
    n->a = std::move(a);
    return n;
}

bool is_const(const NodePtr& n, double v) {
    return n->kind == Kind::constant && n->value == v;
}

NodePtr make_binary(Kind k, NodePtr a, NodePtr b) {
    if (a->kind == Kind::constant && b->kind == Kind::constant) {
        switch (k) {
            case Kind::add: return make_const(a->value + b->value);
            case Kind::sub: return make_const(a->value - b->value);
            case Kind::mul: return make_const(a->value * b->value);
            case Kind::div: return make_const(a->value / b->value);
            case Kind::pow: return make_const(std::pow(a->value, b->value));
            default: break;
        }
    }
    if (k == Kind::add) {
        if (is_const(a, 0.0)) return b;
        if (is_const(b, 0.0)) return a;
    }
    if (k == Kind::sub && is_const(b, 0.0)) return a;
    if (k == Kind::mul) {
        if (is_const(a, 0.0) || is_const(b, 0.0)) return make_const(0.0);
        if (is_const(a, 1.0)) return b;
        if (is_const(b, 1.0)) return a;
    }
    if (k == Kind::div && is_const(b, 1.0)) return a;
    if (k == Kind::pow) {
        if (is_const(b, 1.0)) return a;
        if (is_const(b, 0.0)) return make_const(1.0);
    }
    auto n = std::make_shared<Expr::Node>();
    n->kind = k;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

double eval_node(const Expr::Node& n, const std::vector<double>& x) {
    switch (n.kind) {
        case Kind::constant: return n.value;
        case Kind::variable:
            if (n.index >= x.size())
                throw DomainError("expression references x" + std::to_string(n.index + 1) +
                                  " beyond the point dimension");
            return x[n.index];
        case Kind::add: return eval_node(*n.a, x) + eval_node(*n.b, x);
        case Kind::sub: return eval_node(*n.a, x) - eval_node(*n.b, x);
        case Kind::mul: return eval_node(*n.a, x) * eval_node(*n.b, x);
        case Kind::div: return eval_node(*n.a, x) / eval_node(*n.b, x);
        case Kind::pow: return std::pow(eval_node(*n.a, x), eval_node(*n.b, x));
        case Kind::neg: return -eval_node(*n.a, x);
        case Kind::sin: return std::sin(eval_node(*n.a, x));
        case Kind::cos: return std::cos(eval_node(*n.a, x));
        case Kind::exp: return std::exp(eval_node(*n.a, x));
        case Kind::log: return std::log(eval_node(*n.a, x));
    }
    return 0.0;
}

NodePtr diff_node(const NodePtr& n, std::size_t v) {
    switch (n->kind) {
        case Kind::constant: return make_const(0.0);
        case Kind::variable: return make_const(n->index == v ? 1.0 : 0.0);
        case Kind::add: return make_binary(Kind::add, diff_node(n->a, v), diff_node(n->b, v));
        case Kind::sub: return make_binary(Kind::sub, diff_node(n->a, v), diff_node(n->b, v));
        case Kind::mul:
            return make_binary(Kind::add,
                               make_binary(Kind::mul, diff_node(n->a, v), n->b),
                               make_binary(Kind::mul, n->a, diff_node(n->b, v)));
        case Kind::div:
            return make_binary(
                Kind::div,
                make_binary(Kind::sub,
                            make_binary(Kind::mul, diff_node(n->a, v), n->b),
                            make_binary(Kind::mul, n->a, diff_node(n->b, v))),
                make_binary(Kind::mul, n->b, n->b));
        case Kind::pow: {
            if (n->b->kind == Kind::constant) {
                // c a^(c-1) a'
                return make_binary(
                    Kind::mul, make_const(n->b->value),
                    make_binary(Kind::mul,
                                make_binary(Kind::pow, n->a, make_const(n->b->value - 1.0)),
                                diff_node(n->a, v)));
            }
            // a^b (b' log a + b a' / a)
            return make_binary(
                Kind::mul, n,
                make_binary(Kind::add,
                            make_binary(Kind::mul, diff_node(n->b, v), make_unary(Kind::log, n->a)),
                            make_binary(Kind::div, make_binary(Kind::mul, n->b, diff_node(n->a, v)),
                                        n->a)));
        }
        case Kind::neg: return make_unary(Kind::neg, diff_node(n->a, v));
        case Kind::sin: return make_binary(Kind::mul, make_unary(Kind::cos, n->a), diff_node(n->a, v));
        case Kind::cos:
            return make_unary(Kind::neg,
                              make_binary(Kind::mul, make_unary(Kind::sin, n->a), diff_node(n->a, v)));
        case Kind::exp: return make_binary(Kind::mul, make_unary(Kind::exp, n->a), diff_node(n->a, v));
        case Kind::log: return make_binary(Kind::div, diff_node(n->a, v), n->a);
    }
    return make_const(0.0);
}

void max_var(const Expr::Node& n, std::size_t& best) {
    if (n.kind == Kind::variable) best = std::max(best, n.index + 1);
    if (n.a) max_var(*n.a, best);
    if (n.b) max_var(*n.b, best);
}

std::string print_node(const Expr::Node& n) {
    switch (n.kind) {
        case Kind::constant: {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%g", n.value);
            return buf;
        }
        case Kind::variable: return "x" + std::to_string(n.index + 1);
        case Kind::add: return "(" + print_node(*n.a) + " + " + print_node(*n.b) + ")";
        case Kind::sub: return "(" + print_node(*n.a) + " - " + print_node(*n.b) + ")";
        case Kind::mul: return "(" + print_node(*n.a) + " * " + print_node(*n.b) + ")";
        case Kind::div: return "(" + print_node(*n.a) + " / " + print_node(*n.b) + ")";
        case Kind::pow: return "(" + print_node(*n.a) + " ^ " + print_node(*n.b) + ")";
        case Kind::neg: return "(-" + print_node(*n.a) + ")";
        case Kind::sin: return "sin(" + print_node(*n.a) + ")";
        case Kind::cos: return "cos(" + print_node(*n.a) + ")";
        case Kind::exp: return "exp(" + print_node(*n.a) + ")";
        case Kind::log: return "log(" + print_node(*n.a) + ")";
    }
    return "?";
}

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    NodePtr run() {
        NodePtr e = parse_expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) {
        throw ConfigError("expression parse error at position " + std::to_string(pos_) + ": " +
                          what);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool consume(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    NodePtr parse_expr() {
        NodePtr e = parse_term();
        for (;;) {
            if (consume('+')) e = make_binary(Kind::add, e, parse_term());
            else if (consume('-')) e = make_binary(Kind::sub, e, parse_term());
            else return e;
        }
    }

    NodePtr parse_term() {
        NodePtr e = parse_unary();
        for (;;) {
            if (consume('*')) e = make_binary(Kind::mul, e, parse_unary());
            else if (consume('/')) e = make_binary(Kind::div, e, parse_unary());
            else return e;
        }
    }

    NodePtr parse_unary() {
        if (consume('-')) return make_unary(Kind::neg, parse_unary());
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_primary();
        if (consume('^')) {
            // right associative; exponent may carry its own unary minus
            return make_binary(Kind::pow, base, parse_unary());
        }
        return base;
    }

    NodePtr parse_primary() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_name();
        if (consume('(')) {
            NodePtr e = parse_expr();
            if (!consume(')')) fail("expected ')'");
            return e;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    NodePtr parse_number() {
        const char* start = text_.c_str() + pos_;
        char* end = nullptr;
        const double v = std::strtod(start, &end);
        if (end == start) fail("malformed number");
        pos_ += static_cast<std::size_t>(end - start);
        return make_const(v);
    }

    NodePtr parse_name() {
        const std::size_t begin = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        const std::string name = text_.substr(begin, pos_ - begin);
        if (name == "sin" || name == "cos" || name == "exp" || name == "log") {
            if (!consume('(')) fail("expected '(' after " + name);
            NodePtr arg = parse_expr();
            if (!consume(')')) fail("expected ')'");
            if (name == "sin") return make_unary(Kind::sin, arg);
            if (name == "cos") return make_unary(Kind::cos, arg);
            if (name == "exp") return make_unary(Kind::exp, arg);
            return make_unary(Kind::log, arg);
        }
        if (name.size() >= 2 && name[0] == 'x') {
            std::size_t idx = 0;
            for (std::size_t i = 1; i < name.size(); ++i) {
                if (!std::isdigit(static_cast<unsigned char>(name[i])))
                    fail("unknown identifier '" + name + "'");
                idx = idx * 10 + static_cast<std::size_t>(name[i] - '0');
            }
            if (idx == 0) fail("variables are numbered from x1");
            return make_var(idx - 1);
        }
        fail("unknown identifier '" + name + "'");
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

} // namespace

Expr Expr::parse(const std::string& text) {
    return Expr(Parser(text).run());
}

double Expr::eval(const std::vector<double>& x) const {
    return eval_node(*root_, x);
}

Expr Expr::derivative(std::size_t n) const {
    return Expr(diff_node(root_, n));
}

std::size_t Expr::variable_count() const {
    std::size_t best = 0;
    max_var(*root_, best);
    return best;
}

std::string Expr::to_string() const {
    return print_node(*root_);
}

ExprCost::ExprCost(const std::string& text, std::size_t dims)
    : expr_(Expr::parse(text)), dims_(dims == 0 ? expr_.variable_count() : dims) {
    if (dims_ == 0) throw ConfigError("ExprCost: expression references no variables");
    if (dims_ < expr_.variable_count())
        throw ConfigError("ExprCost: expression references more variables than dims");
    partials_.reserve(dims_);
    for (std::size_t n = 0; n < dims_; ++n) partials_.push_back(expr_.derivative(n));
}

double ExprCost::value(const std::vector<double>& x) const {
    return expr_.eval(x);
}

double ExprCost::partial(const std::vector<double>& x, std::size_t n) const {
    if (n >= dims_) throw ConfigError("ExprCost: coordinate index out of range");
    return partials_[n].eval(x);
}

} // namespace sfpl
