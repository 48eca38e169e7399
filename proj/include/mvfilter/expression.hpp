#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "mvfilter/calculus.hpp"
#include "mvfilter/densechain.hpp"
#include "mvfilter/filter.hpp"

namespace mvfilter {

using ExprValue = std::variant<Filter, ImplicationFilter, CutFilter>;

/// Where expressions are evaluated: a finite algebra or the dense chain.
class ExpressionContext {
public:
  static ExpressionContext finite(const MvAlgebra& a) { return ExpressionContext(Calculus(a)); }
  static ExpressionContext dense() { return ExpressionContext(std::nullopt); }
  bool is_dense() const { return !calc_.has_value(); }
  const Calculus& calculus() const { return *calc_; }

private:
  explicit ExpressionContext(std::optional<Calculus> c) : calc_(std::move(c)) {}
  std::optional<Calculus> calc_;
};

/// Evaluates one filter expression.
///
///   expr  := up(ELEM) | cut(RAT, open|closed) | P(ELEM)
///          | sqto(expr, expr) | plus(expr) | kernel(expr)
///          | phi(expr, expr) | T(expr, expr)
///          | Ju(expr, expr) | Jd(expr, expr) | subord(expr, ELEM)
///
/// ELEM is an element label of the finite algebra (a rational on the dense
/// chain), P(a) is the implication filter generated by a, and the second
/// argument of Ju and Jd must be an implication filter. Syntax and type
/// errors raise ParseError with the 1-based column.
ExprValue evaluate_expression(const ExpressionContext& ctx, std::string_view text);

/// Canonical notation: "{1/2,1}" for finite filters, "[7/10,1]" for cuts.
std::string format_value(const ExprValue& v);

}  // namespace mvfilter
