#include "mvfilter/expression.hpp"

#include <cctype>

#include "mvfilter/errors.hpp"

namespace mvfilter {

namespace {

class Parser {
public:
  Parser(const ExpressionContext& ctx, std::string_view text) : ctx_(ctx), s_(text) {}

  ExprValue parse() {
    auto v = expr();
    skip_ws();
    if (pos_ != s_.size()) error(pos_, "unexpected trailing input");
    return v;
  }

private:
  [[noreturn]] void error(std::size_t at, const std::string& msg) const {
    throw ParseError("column " + std::to_string(at + 1) + ": " + msg, 1, at + 1);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c)
      error(pos_, std::string("expected '") + c + "'" +
                      (pos_ < s_.size() ? std::string(", found '") + s_[pos_] + "'" : ", found end of input"));
    ++pos_;
  }

  std::string ident() {
    skip_ws();
    std::size_t b = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    if (b == pos_) error(b, "expected an operation name");
    return std::string(s_.substr(b, pos_ - b));
  }

  // A raw element token; parenthesised labels such as "(0,1/2)" are kept
  // whole.
  std::string raw_token() {
    skip_ws();
    std::size_t b = pos_;
    int depth = 0;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '(') {
        ++depth;
      } else if (c == ')') {
        if (depth == 0) break;
        --depth;
      } else if (c == ',' && depth == 0) {
        break;
      }
      ++pos_;
    }
    std::size_t e = pos_;
    while (e > b && std::isspace(static_cast<unsigned char>(s_[e - 1]))) --e;
    if (e == b) error(b, "expected an element");
    return std::string(s_.substr(b, e - b));
  }

  Element element(std::size_t at, const std::string& tok) const {
    auto e = ctx_.calculus().algebra().find_label(tok);
    if (!e) error(at, "no element labelled '" + tok + "' in " + ctx_.calculus().algebra().name());
    return *e;
  }

  Rat rational(std::size_t at, const std::string& tok) const {
    try {
      return Rat::parse(tok);
    } catch (const InvalidArgument& e) {
      error(at, e.what());
    }
  }

  Filter as_filter(std::size_t at, const ExprValue& v) const {
    if (auto f = std::get_if<Filter>(&v)) return *f;
    if (auto p = std::get_if<ImplicationFilter>(&v)) return p->as_filter();
    error(at, "expected a filter of the finite algebra");
  }

  ImplicationFilter as_implication(std::size_t at, const ExprValue& v) const {
    if (auto p = std::get_if<ImplicationFilter>(&v)) return *p;
    if (auto f = std::get_if<Filter>(&v))
      if (is_implication_filter_set(f->algebra(), f->members()))
        return ImplicationFilter(f->algebra(), f->members());
    error(at, "expected an implication filter");
  }

  CutFilter as_cut(std::size_t at, const ExprValue& v) const {
    if (auto c = std::get_if<CutFilter>(&v)) return *c;
    error(at, "expected a cut filter");
  }

  ExprValue expr() {
    skip_ws();
    std::size_t at = pos_;
    auto name = ident();
    expect('(');
    try {
      auto v = call(at, name);
      expect(')');
      return v;
    } catch (const InvalidArgument& e) {
      error(at, name + ": " + e.what());
    } catch (const InvariantViolation& e) {
      error(at, name + ": " + e.what());
    }
  }

  ExprValue call(std::size_t at, const std::string& name) {
    const bool dense = ctx_.is_dense();
    if (name == "up") {
      std::size_t t = (skip_ws(), pos_);
      auto tok = raw_token();
      if (dense) return CutFilter::closed(rational(t, tok));
      return Filter::principal(ctx_.calculus().algebra(), element(t, tok));
    }
    if (name == "cut") {
      if (!dense) error(at, "cut filters exist only on the dense chain");
      std::size_t t = (skip_ws(), pos_);
      auto p = rational(t, raw_token());
      expect(',');
      std::size_t k = (skip_ws(), pos_);
      auto kind = ident();
      if (kind == "open") return CutFilter::open(p);
      if (kind == "closed") return CutFilter::closed(p);
      error(k, "expected 'open' or 'closed'");
    }
    if (name == "P") {
      if (dense) error(at, "implication filters of the dense chain are not represented");
      std::size_t t = (skip_ws(), pos_);
      const auto& a = ctx_.calculus().algebra();
      Subset s = a.empty_set();
      s.insert(element(t, raw_token()));
      return generated_implication_filter(a, s);
    }
    if (name == "plus" || name == "kernel") {
      std::size_t t = (skip_ws(), pos_);
      auto v = expr();
      if (dense) {
        auto c = as_cut(t, v);
        if (name == "plus") return cut_plus(c);
        if (!c.is_proper()) error(t, "kernel needs a proper cut");
        return oracle_kernel(c);
      }
      auto f = as_filter(t, v);
      if (name == "plus") return ctx_.calculus().plus(f);
      if (f.is_bottom()) error(t, "kernel of the empty filter is undefined");
      return ctx_.calculus().kernel(f);
    }
    if (name == "sqto" || name == "phi" || name == "T" || name == "Ju" || name == "Jd") {
      std::size_t t1 = (skip_ws(), pos_);
      auto a = expr();
      expect(',');
      std::size_t t2 = (skip_ws(), pos_);
      auto b = expr();
      if (dense) {
        if (name != "sqto") error(at, name + " is not available on the dense chain");
        auto f = as_cut(t1, a), g = as_cut(t2, b);
        auto closed = cut_sqto(f, g);
        if (!(closed == oracle_sqto(f, g)))
          throw InvariantViolation("closed form and oracle disagree on " + f.to_string() + " ⊸ " +
                                   g.to_string());
        return closed;
      }
      const auto& c = ctx_.calculus();
      auto f = as_filter(t1, a);
      if (name == "Ju") return c.j_up(f, as_implication(t2, b));
      if (name == "Jd") return c.j_down(f, as_implication(t2, b));
      auto g = as_filter(t2, b);
      if (name == "sqto") return c.sqto(f, g);
      if (name == "phi") return c.phi(f, g);
      return c.tensor_up(f, g);
    }
    if (name == "subord") {
      if (dense) error(at, "subord is not available on the dense chain");
      std::size_t t1 = (skip_ws(), pos_);
      auto f = as_filter(t1, expr());
      expect(',');
      std::size_t t2 = (skip_ws(), pos_);
      return ctx_.calculus().subordinate(f, element(t2, raw_token()));
    }
    error(at, "unknown operation '" + name + "'");
  }

  const ExpressionContext& ctx_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprValue evaluate_expression(const ExpressionContext& ctx, std::string_view text) {
  return Parser(ctx, text).parse();
}

std::string format_value(const ExprValue& v) {
  return std::visit([](const auto& x) { return x.to_string(); }, v);
}

}  // namespace mvfilter
