#pragma once

#include <string>
#include <vector>

#include "doctest.h"
#include "mvfilter/filter.hpp"
#include "mvfilter/mv_algebra.hpp"

namespace mvtest {

using namespace mvfilter;

/// Element of a chain (or product factor) by label, failing loudly.
inline Element el(const MvAlgebra& a, const std::string& label) {
  auto e = a.find_label(label);
  if (!e) throw std::runtime_error("no element labelled " + label + " in " + a.name());
  return *e;
}

inline Subset set_of(const MvAlgebra& a, const std::vector<std::string>& labels) {
  Subset s(a.size());
  for (const auto& l : labels) s.insert(el(a, l));
  return s;
}

inline Filter filt(const MvAlgebra& a, const std::vector<std::string>& labels) {
  return Filter(a, set_of(a, labels));
}

/// The algebras every exhaustive suite runs over.
inline std::vector<MvAlgebra> test_algebras() {
  std::vector<MvAlgebra> out;
  for (std::size_t n = 2; n <= 8; ++n) out.push_back(make_lukasiewicz_chain(n));
  auto l2 = make_lukasiewicz_chain(2), l3 = make_lukasiewicz_chain(3);
  out.push_back(make_product(l2, l3));
  out.push_back(make_product(l3, l3));
  std::vector<MvAlgebra> cube{l2, l2, l2};
  out.push_back(make_product(cube));
  return out;
}

}  // namespace mvtest

namespace doctest {
template <>
struct StringMaker<mvfilter::Filter> {
  static String convert(const mvfilter::Filter& f) { return f.to_string().c_str(); }
};
}  // namespace doctest
