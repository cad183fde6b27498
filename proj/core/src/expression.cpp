#include "rdsis/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <vector>

#include "rdsis/errors.hpp"

namespace rdsis {

struct Expression::Node {
    enum class Op { kConst, kVar, kAdd, kSub, kMul, kDiv, kPow, kNeg, kCos, kSin, kExp, kSqrt };
    Op op = Op::kConst;
    double value = 0.0;
    std::shared_ptr<const Node> lhs, rhs;

    double eval(double x) const {
        switch (op) {
            case Op::kConst: return value;
            case Op::kVar: return x;
            case Op::kAdd: return lhs->eval(x) + rhs->eval(x);
            case Op::kSub: return lhs->eval(x) - rhs->eval(x);
            case Op::kMul: return lhs->eval(x) * rhs->eval(x);
            case Op::kDiv: return lhs->eval(x) / rhs->eval(x);
            case Op::kPow: return std::pow(lhs->eval(x), rhs->eval(x));
            case Op::kNeg: return -lhs->eval(x);
            case Op::kCos: return std::cos(lhs->eval(x));
            case Op::kSin: return std::sin(lhs->eval(x));
            case Op::kExp: return std::exp(lhs->eval(x));
            case Op::kSqrt: return std::sqrt(lhs->eval(x));
        }
        return NAN;
    }
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make(Node::Op op, NodePtr a = nullptr, NodePtr b = nullptr, double value = 0.0) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    n->value = value;
    return n;
}

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    NodePtr parse() {
        NodePtr e = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ConfigError({"expression '" + s_ + "': " + msg + " at column " + std::to_string(pos_ + 1)});
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodePtr expr() {
        NodePtr a = term();
        for (;;) {
            if (accept('+')) a = make(Node::Op::kAdd, a, term());
            else if (accept('-')) a = make(Node::Op::kSub, a, term());
            else return a;
        }
    }

    NodePtr term() {
        NodePtr a = unary();
        for (;;) {
            if (accept('*')) a = make(Node::Op::kMul, a, unary());
            else if (accept('/')) a = make(Node::Op::kDiv, a, unary());
            else return a;
        }
    }

    NodePtr unary() {
        if (accept('-')) return make(Node::Op::kNeg, unary());
        if (accept('+')) return unary();
        NodePtr base = primary();
        if (accept('^')) return make(Node::Op::kPow, base, unary());
        return base;
    }

    NodePtr primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const char* begin = s_.c_str() + pos_;
            char* end = nullptr;
            const double v = std::strtod(begin, &end);
            if (end == begin) fail("bad number");
            pos_ += static_cast<std::size_t>(end - begin);
            return make(Node::Op::kConst, nullptr, nullptr, v);
        }
        if (accept('(')) {
            NodePtr e = expr();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            const std::string name = s_.substr(start, pos_ - start);
            if (name == "x") return make(Node::Op::kVar);
            if (name == "pi") return make(Node::Op::kConst, nullptr, nullptr, std::numbers::pi);
            Node::Op op;
            if (name == "cos") op = Node::Op::kCos;
            else if (name == "sin") op = Node::Op::kSin;
            else if (name == "exp") op = Node::Op::kExp;
            else if (name == "sqrt") op = Node::Op::kSqrt;
            else {
                pos_ = start;
                fail("unknown identifier '" + name + "'");
            }
            if (!accept('(')) fail("expected '(' after " + name);
            NodePtr arg = expr();
            if (!accept(')')) fail("expected ')'");
            return make(op, arg);
        }
        fail("unexpected character");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

Expression Expression::parse(const std::string& text) {
    Parser parser(text);
    return Expression(text, parser.parse());
}

double Expression::operator()(double x) const { return root_->eval(x); }

}  // namespace rdsis
