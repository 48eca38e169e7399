#include "mvfilter/rational.hpp"

#include <cctype>

#include "mvfilter/errors.hpp"

namespace mvfilter {

namespace {

using boost::multiprecision::cpp_int;

void require_unit_interval(const BigRational& v) {
  if (v < 0 || v > 1) throw InvalidArgument("rational outside [0,1]");
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat::Rat(long long num, long long den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  v_ = BigRational(num, den);
  require_unit_interval(v_);
}

Rat::Rat(const BigRational& v) : v_(v) { require_unit_interval(v_); }

Rat Rat::parse(std::string_view text) {
  const std::string original(text);
  auto bad = [&]() { return InvalidArgument("malformed rational '" + original + "'"); };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto n = text.substr(0, slash), d = text.substr(slash + 1);
    if (!all_digits(n) || !all_digits(d)) throw bad();
    cpp_int den{std::string(d)};
    if (den == 0) throw InvalidArgument("zero denominator in '" + original + "'");
    return Rat(BigRational(cpp_int(std::string(n)), den));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot), frac = text.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) throw bad();
    cpp_int scale = cpp_int(1);
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    cpp_int num = whole.empty() ? cpp_int(0) : cpp_int(std::string(whole));
    num = num * scale + cpp_int(std::string(frac));
    return Rat(BigRational(num, scale));
  }
  if (!all_digits(text)) throw bad();
  return Rat(BigRational(cpp_int(std::string(text))));
}

std::string Rat::to_string() const {
  auto n = boost::multiprecision::numerator(v_);
  auto d = boost::multiprecision::denominator(v_);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

Rat mv_neg(const Rat& x) { return Rat(BigRational(1) - x.value()); }

Rat mv_oplus(const Rat& x, const Rat& y) {
  BigRational s = x.value() + y.value();
  return Rat(s > 1 ? BigRational(1) : s);
}

Rat mv_otimes(const Rat& x, const Rat& y) {
  BigRational s = x.value() + y.value() - 1;
  return Rat(s < 0 ? BigRational(0) : s);
}

Rat mv_implies(const Rat& x, const Rat& y) {
  BigRational s = BigRational(1) - x.value() + y.value();
  return Rat(s > 1 ? BigRational(1) : s);
}

}  // namespace mvfilter
