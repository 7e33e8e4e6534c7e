#pragma once
#include <memory>
#include <string>

namespace pht {

// Minimal arithmetic-expression evaluator for custom kernels.
// Grammar: + - * / ^ (right-assoc), abs(), sign(), log(), parentheses,
// numeric literals, variable x.
class Expression {
  public:
    explicit Expression(const std::string& text); // throws PreconditionError
    double eval(double x) const;
    const std::string& text() const { return text_; }

  private:
    struct Node;
    std::shared_ptr<const Node> root_;
    std::string text_;
};

} // namespace pht
