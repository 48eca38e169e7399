#include "mvfilter/mv_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mvfilter/errors.hpp"

namespace mvfilter {

namespace {

DerivedTables compute_derived(std::size_t n, const std::vector<Element>& oplus,
                              const std::vector<Element>& neg, Element zero) {
  DerivedTables d;
  d.size = n;
  d.one = neg[zero];
  auto op = [&](Element x, Element y) { return oplus[x * n + y]; };
  d.implies.resize(n * n);
  d.otimes.resize(n * n);
  d.ominus.resize(n * n);
  d.join.resize(n * n);
  d.meet.resize(n * n);
  d.leq.resize(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      d.implies[x * n + y] = op(neg[x], y);
      d.otimes[x * n + y] = neg[op(neg[x], neg[y])];
    }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      d.ominus[x * n + y] = d.otimes[x * n + neg[y]];
      d.join[x * n + y] = d.implies[d.implies[x * n + y] * n + y];
      d.leq[x * n + y] = d.implies[x * n + y] == d.one;
    }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      d.meet[x * n + y] = neg[d.join[neg[x] * n + neg[y]]];
  return d;
}

std::string fraction_label(std::size_t k, std::size_t den) {
  if (k == 0) return "0";
  if (k == den) return "1";
  auto g = std::gcd(k, den);
  return std::to_string(k / g) + "/" + std::to_string(den / g);
}

}  // namespace

MvAlgebra MvAlgebra::from_tables(std::string name, std::size_t size,
                                 std::vector<Element> oplus,
                                 std::vector<Element> neg, Element zero,
                                 std::vector<std::string> labels) {
  if (size == 0) throw InvalidArgument("carrier must be nonempty");
  if (oplus.size() != size * size)
    throw InvalidArgument("oplus table must have size*size entries");
  if (neg.size() != size) throw InvalidArgument("neg table must have size entries");
  if (zero >= size) throw InvalidArgument("zero is not an element");
  for (auto v : oplus)
    if (v >= size) throw InvalidArgument("oplus table entry out of range");
  for (auto v : neg)
    if (v >= size) throw InvalidArgument("neg table entry out of range");
  if (labels.empty()) {
    for (std::size_t i = 0; i < size; ++i) labels.push_back(std::to_string(i));
  } else if (labels.size() != size) {
    throw InvalidArgument("label count differs from carrier size");
  }
  auto t = std::make_shared<Tables>();
  t->name = std::move(name);
  t->size = size;
  t->derived = compute_derived(size, oplus, neg, zero);
  t->oplus = std::move(oplus);
  t->neg = std::move(neg);
  t->zero = zero;
  t->labels = std::move(labels);
  return MvAlgebra(std::move(t));
}

std::optional<Element> MvAlgebra::find_label(std::string_view label) const {
  for (Element i = 0; i < size(); ++i)
    if (t_->labels[i] == label) return i;
  return std::nullopt;
}

bool MvAlgebra::is_linearly_ordered() const {
  for (Element x = 0; x < size(); ++x)
    for (Element y = x + 1; y < size(); ++y)
      if (!leq(x, y) && !leq(y, x)) return false;
  return true;
}

std::vector<Element> MvAlgebra::chain_order() const {
  if (!is_linearly_ordered())
    throw InvalidArgument("algebra " + name() + " is not linearly ordered");
  std::vector<Element> order(size());
  std::iota(order.begin(), order.end(), Element{0});
  std::sort(order.begin(), order.end(),
            [&](Element x, Element y) { return less(x, y); });
  return order;
}

MvAlgebra make_lukasiewicz_chain(std::size_t n) {
  if (n < 2) throw InvalidArgument("Lukasiewicz chain needs n >= 2");
  std::vector<Element> oplus(n * n), neg(n);
  std::vector<std::string> labels(n);
  for (Element x = 0; x < n; ++x) {
    neg[x] = n - 1 - x;
    labels[x] = fraction_label(x, n - 1);
    for (Element y = 0; y < n; ++y) oplus[x * n + y] = std::min(n - 1, x + y);
  }
  return MvAlgebra::from_tables("L" + std::to_string(n), n, std::move(oplus),
                                std::move(neg), 0, std::move(labels));
}

MvAlgebra make_product(std::span<const MvAlgebra> factors) {
  if (factors.empty()) throw InvalidArgument("product needs at least one factor");
  std::size_t n = 1;
  for (const auto& f : factors) n *= f.size();

  // decode[i][k] = component k of tuple i
  std::vector<std::vector<Element>> decode(n, std::vector<Element>(factors.size()));
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t rest = i;
    for (std::size_t k = factors.size(); k-- > 0;) {
      decode[i][k] = rest % factors[k].size();
      rest /= factors[k].size();
    }
  }
  auto encode = [&](const std::vector<Element>& comps) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < factors.size(); ++k)
      idx = idx * factors[k].size() + comps[k];
    return idx;
  };

  std::vector<Element> oplus(n * n), neg(n);
  std::vector<std::string> labels(n);
  std::vector<Element> comps(factors.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < factors.size(); ++k)
      comps[k] = factors[k].neg(decode[i][k]);
    neg[i] = encode(comps);
    std::string label = "(";
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k) label += ",";
      label += factors[k].label(decode[i][k]);
    }
    labels[i] = label + ")";
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < factors.size(); ++k)
        comps[k] = factors[k].oplus(decode[i][k], decode[j][k]);
      oplus[i * n + j] = encode(comps);
    }
  }
  for (std::size_t k = 0; k < factors.size(); ++k) comps[k] = factors[k].zero();
  Element zero = encode(comps);

  std::string name;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k) name += "x";
    name += factors[k].name();
  }
  return MvAlgebra::from_tables(name, n, std::move(oplus), std::move(neg), zero,
                                std::move(labels));
}

MvAlgebra make_product(const MvAlgebra& a, const MvAlgebra& b) {
  std::vector<MvAlgebra> f{a, b};
  return make_product(std::span<const MvAlgebra>(f));
}

DerivedTables derived_ops(const MvAlgebra& a) { return a.derived(); }

AxiomReport check_mv_axioms(const MvAlgebra& a) {
  AxiomReport report;
  const std::size_t n = a.size();
  auto fail = [&](const char* axiom, std::vector<Element> w) {
    for (auto& v : report.violations)
      if (v.axiom == axiom) {
        ++v.occurrences;
        return;
      }
    report.violations.push_back({axiom, std::move(w), 1});
  };
  const Element top = a.neg(a.zero());
  for (Element x = 0; x < n; ++x) {
    ++report.instances_checked;
    if (a.oplus(x, a.zero()) != x) fail("identity", {x});
    if (a.neg(a.neg(x)) != x) fail("involution", {x});
    if (a.oplus(x, top) != top) fail("absorption", {x});
    for (Element y = 0; y < n; ++y) {
      ++report.instances_checked;
      if (a.oplus(x, y) != a.oplus(y, x)) fail("commutativity", {x, y});
      if (a.oplus(a.neg(a.oplus(a.neg(x), y)), y) !=
          a.oplus(a.neg(a.oplus(a.neg(y), x)), x))
        fail("lukasiewicz", {x, y});
      for (Element z = 0; z < n; ++z) {
        ++report.instances_checked;
        if (a.oplus(a.oplus(x, y), z) != a.oplus(x, a.oplus(y, z)))
          fail("associativity", {x, y, z});
      }
    }
  }
  return report;
}

std::string AxiomReport::describe(const MvAlgebra& a) const {
  if (passed()) return "all MV axioms hold";
  std::ostringstream os;
  bool first = true;
  for (const auto& v : violations) {
    if (!first) os << "; ";
    first = false;
    os << v.axiom << " fails at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i)
      os << (i ? "," : "") << a.label(v.witness[i]);
    os << ")";
    if (v.occurrences > 1) os << " [" << v.occurrences << " instances]";
  }
  return os.str();
}

bool is_isomorphism(const MvAlgebra& a, const MvAlgebra& b,
                    std::span<const Element> map) {
  if (a.size() != b.size() || map.size() != a.size()) return false;
  std::vector<bool> hit(b.size(), false);
  for (auto v : map) {
    if (v >= b.size() || hit[v]) return false;
    hit[v] = true;
  }
  if (map[a.zero()] != b.zero()) return false;
  for (Element x = 0; x < a.size(); ++x) {
    if (map[a.neg(x)] != b.neg(map[x])) return false;
    for (Element y = 0; y < a.size(); ++y)
      if (map[a.oplus(x, y)] != b.oplus(map[x], map[y])) return false;
  }
  return true;
}

std::optional<std::vector<Element>> chain_isomorphism(const MvAlgebra& a,
                                                      const MvAlgebra& b) {
  if (a.size() != b.size()) return std::nullopt;
  if (!a.is_linearly_ordered() || !b.is_linearly_ordered()) return std::nullopt;
  auto oa = a.chain_order();
  auto ob = b.chain_order();
  std::vector<Element> map(a.size());
  for (std::size_t k = 0; k < oa.size(); ++k) map[oa[k]] = ob[k];
  if (!is_isomorphism(a, b, map)) return std::nullopt;
  return map;
}

}  // namespace mvfilter
