#ifndef GALMANN_EXPRESSION_HPP
#define GALMANN_EXPRESSION_HPP

#include <memory>
#include <string>
#include <string_view>

#include "galmann/jet.hpp"

namespace galmann {

namespace detail {
struct Node;
using NodePtr = std::shared_ptr<const Node>;
} // namespace detail

/// A parsed function of the single variable `s`.
///
/// Grammar (whitespace-insensitive, no implicit multiplication):
///
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := ('-')? power
///   power  := atom ('^' factor)?
///   atom   := number | 's' | 'pi' | 'e' | ident '(' expr ')' | '(' expr ')'
///
/// Functions: sin cos tan sinh cosh tanh exp log sqrt abs.
/// '^' binds tightest, is right-associative, and requires an exponent
/// that does not contain `s`.
class Expression {
public:
    /// Parses `text`; throws ParseError with a byte offset on failure.
    static Expression parse(std::string_view text);

    /// Canonical text form: parsing it reproduces this AST exactly.
    std::string text() const;

    /// Evaluates at a point; throws EvalDomainError outside the domain.
    double eval(double s) const;

    /// Derivative tower at s0 up to `order`; throws EvalDomainError when a
    /// subexpression leaves its domain or the result is non-finite.
    Jet eval_jet(double s0, int order) const;

    bool depends_on_s() const;

    bool structurally_equal(const Expression& other) const;

private:
    explicit Expression(detail::NodePtr root) : root_(std::move(root)) {}

    detail::NodePtr root_;
};

} // namespace galmann

#endif
