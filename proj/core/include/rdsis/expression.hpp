#pragma once

#include <memory>
#include <string>

namespace rdsis {

/// Initial-data expression in the spatial variable x, e.g. "4 + cos(x)/10".
///
/// Grammar: numbers, x, pi, + - * / ^, parentheses, and cos/sin/exp/sqrt.
/// Parse failures throw ConfigError with the offending column.
class Expression {
public:
    static Expression parse(const std::string& text);

    double operator()(double x) const;
    const std::string& text() const noexcept { return text_; }

    struct Node;

private:
    Expression(std::string text, std::shared_ptr<const Node> root)
        : text_(std::move(text)), root_(std::move(root)) {}
    std::string text_;
    std::shared_ptr<const Node> root_;
};

}  // namespace rdsis
