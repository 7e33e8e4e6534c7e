#include "pht/expr.hpp"
#include "pht/errors.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace pht {

struct Expression::Node {
    enum Op { kNum, kVar, kAdd, kSub, kMul, kDiv, kPow, kNeg, kAbs, kSign, kLog };
    Op op;
    double num = 0.0;
    std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Node = Expression::Node;

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip() {
        while (pos < s.size() && std::isspace(std::uint8_t(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw PreconditionError("expression parse error at position " +
                                std::to_string(pos) + ": " + what);
    }

    NodePtr make(Node::Op op, NodePtr l = nullptr, NodePtr r = nullptr,
                 double num = 0.0) {
        auto n = std::make_shared<Node>();
        n->op = op;
        n->lhs = std::move(l);
        n->rhs = std::move(r);
        n->num = num;
        return n;
    }

    NodePtr expr() {
        NodePtr n = term();
        for (;;) {
            if (eat('+'))
                n = make(Node::kAdd, n, term());
            else if (eat('-'))
                n = make(Node::kSub, n, term());
            else
                return n;
        }
    }
    NodePtr term() {
        NodePtr n = factor();
        for (;;) {
            if (eat('*'))
                n = make(Node::kMul, n, factor());
            else if (eat('/'))
                n = make(Node::kDiv, n, factor());
            else
                return n;
        }
    }
    NodePtr factor() {
        NodePtr base = unary();
        if (eat('^')) return make(Node::kPow, base, factor()); // right-assoc
        return base;
    }
    NodePtr unary() {
        if (eat('-')) return make(Node::kNeg, unary());
        if (eat('+')) return unary();
        return primary();
    }
    NodePtr primary() {
        skip();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (std::isdigit(std::uint8_t(c)) || c == '.') {
            char* end = nullptr;
            double v = std::strtod(s.c_str() + pos, &end);
            if (end == s.c_str() + pos) fail("bad number");
            pos = size_t(end - s.c_str());
            return make(Node::kNum, nullptr, nullptr, v);
        }
        if (std::isalpha(std::uint8_t(c))) {
            size_t start = pos;
            while (pos < s.size() && std::isalpha(std::uint8_t(s[pos]))) ++pos;
            std::string name = s.substr(start, pos - start);
            if (name == "x") return make(Node::kVar);
            Node::Op op;
            if (name == "abs")
                op = Node::kAbs;
            else if (name == "sign")
                op = Node::kSign;
            else if (name == "log")
                op = Node::kLog;
            else
                fail("unknown identifier '" + name + "'");
            if (!eat('(')) fail("expected '(' after " + name);
            NodePtr arg = expr();
            if (!eat(')')) fail("expected ')'");
            return make(op, arg);
        }
        if (eat('(')) {
            NodePtr n = expr();
            if (!eat(')')) fail("expected ')'");
            return n;
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

double eval_node(const Node* n, double x) {
    switch (n->op) {
        case Node::kNum: return n->num;
        case Node::kVar: return x;
        case Node::kAdd: return eval_node(n->lhs.get(), x) + eval_node(n->rhs.get(), x);
        case Node::kSub: return eval_node(n->lhs.get(), x) - eval_node(n->rhs.get(), x);
        case Node::kMul: return eval_node(n->lhs.get(), x) * eval_node(n->rhs.get(), x);
        case Node::kDiv: return eval_node(n->lhs.get(), x) / eval_node(n->rhs.get(), x);
        case Node::kPow: return std::pow(eval_node(n->lhs.get(), x), eval_node(n->rhs.get(), x));
        case Node::kNeg: return -eval_node(n->lhs.get(), x);
        case Node::kAbs: return std::abs(eval_node(n->lhs.get(), x));
        case Node::kSign: {
            double v = eval_node(n->lhs.get(), x);
            return v > 0 ? 1.0 : v < 0 ? -1.0 : 0.0;
        }
        case Node::kLog: return std::log(eval_node(n->lhs.get(), x));
    }
    return 0.0;
}

} // namespace

Expression::Expression(const std::string& text) : text_(text) {
    Parser p(text);
    root_ = p.expr();
    p.skip();
    if (p.pos != text.size())
        throw PreconditionError("expression parse error: trailing input at " +
                                std::to_string(p.pos));
}

double Expression::eval(double x) const { return eval_node(root_.get(), x); }

} // namespace pht
