#include "mvfilter/filter.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

#include "mvfilter/errors.hpp"

namespace mvfilter {

namespace {

void require_universe(const MvAlgebra& a, const Subset& s) {
  if (s.universe() != a.size())
    throw InvalidArgument("subset universe " + std::to_string(s.universe()) +
                          " does not match carrier of " + a.name());
}

}  // namespace

Filter::Filter(MvAlgebra algebra, Subset members)
    : alg_(std::move(algebra)), members_(std::move(members)) {
  require_universe(alg_, members_);
  if (!is_up_set(alg_, members_))
    throw InvalidArgument("subset is not up-closed in " + alg_.name());
}

Filter Filter::principal(const MvAlgebra& a, Element g) {
  if (g >= a.size()) throw InvalidArgument("generator out of range");
  Subset s(a.size());
  for (Element y = 0; y < a.size(); ++y)
    if (a.leq(g, y)) s.insert(y);
  return Filter(a, std::move(s));
}

bool Filter::is_lattice_filter() const {
  return !is_bottom() && is_meet_closed(alg_, members_);
}

bool Filter::is_subset_of(const Filter& other) const {
  if (!same_algebra(other)) throw InvalidArgument("filters over different algebras");
  return members_.is_subset_of(other.members_);
}

std::string Filter::to_string() const { return describe_set(alg_, members_); }

std::string describe_set(const MvAlgebra& a, const Subset& s) {
  std::string out = "{";
  bool first = true;
  for (auto x : s.elements()) {
    if (!first) out += ",";
    first = false;
    out += a.label(x);
  }
  return out + "}";
}

ImplicationFilter::ImplicationFilter(MvAlgebra algebra, Subset members)
    : alg_(std::move(algebra)), members_(std::move(members)) {
  require_universe(alg_, members_);
  if (!is_implication_filter_set(alg_, members_))
    throw InvalidArgument("subset is not an implication filter of " + alg_.name());
}

ImplicationFilter ImplicationFilter::trivial(const MvAlgebra& a) {
  return ImplicationFilter(a, Subset(a.size(), {a.one()}));
}

ImplicationFilter ImplicationFilter::whole(const MvAlgebra& a) {
  return ImplicationFilter(a, a.carrier());
}

Subset up_closure(const MvAlgebra& a, const Subset& s) {
  require_universe(a, s);
  Subset out(a.size());
  for (auto x : s.elements())
    for (Element y = 0; y < a.size(); ++y)
      if (a.leq(x, y)) out.insert(y);
  return out;
}

Subset down_closure_joins(const MvAlgebra& a, const Subset& x_set) {
  require_universe(a, x_set);
  Subset joins = x_set;
  for (bool grew = true; grew;) {
    grew = false;
    auto current = joins.elements();
    for (auto x : current)
      for (auto y : current) {
        auto j = a.join(x, y);
        if (!joins.contains(j)) {
          joins.insert(j);
          grew = true;
        }
      }
  }
  Subset out(a.size());
  for (auto j : joins.elements())
    for (Element z = 0; z < a.size(); ++z)
      if (a.leq(z, j)) out.insert(z);
  return out;
}

bool is_up_set(const MvAlgebra& a, const Subset& s) {
  for (auto x : s.elements())
    for (Element y = 0; y < a.size(); ++y)
      if (a.leq(x, y) && !s.contains(y)) return false;
  return true;
}

bool is_meet_closed(const MvAlgebra& a, const Subset& s) {
  auto el = s.elements();
  for (auto x : el)
    for (auto y : el)
      if (!s.contains(a.meet(x, y))) return false;
  return true;
}

bool is_otimes_closed(const MvAlgebra& a, const Subset& s) {
  auto el = s.elements();
  for (auto x : el)
    for (auto y : el)
      if (!s.contains(a.otimes(x, y))) return false;
  return true;
}

bool is_lattice_filter_set(const MvAlgebra& a, const Subset& s) {
  return !s.empty() && is_up_set(a, s) && is_meet_closed(a, s);
}

bool is_implication_filter_set(const MvAlgebra& a, const Subset& s) {
  if (!s.contains(a.one())) return false;
  for (auto x : s.elements())
    for (Element y = 0; y < a.size(); ++y)
      if (s.contains(a.implies(x, y)) && !s.contains(y)) return false;
  return true;
}

std::optional<std::pair<Element, Element>> join_primality_witness(const Filter& f) {
  const auto& a = f.algebra();
  for (Element x = 0; x < a.size(); ++x) {
    if (f.contains(x)) continue;
    for (Element y = x; y < a.size(); ++y)
      if (!f.contains(y) && f.contains(a.join(x, y))) return std::pair{x, y};
  }
  return std::nullopt;
}

bool is_prime_lattice_filter(const Filter& f) {
  return f.is_proper() && f.is_lattice_filter() && !join_primality_witness(f);
}

bool is_prime_implication_filter(const ImplicationFilter& p) {
  if (!p.is_proper()) return false;
  const auto& a = p.algebra();
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = x + 1; y < a.size(); ++y)
      if (!p.contains(a.implies(x, y)) && !p.contains(a.implies(y, x))) return false;
  return true;
}

bool is_join_prime_implication_filter(const ImplicationFilter& p) {
  return p.is_proper() && !join_primality_witness(p.as_filter());
}

ImplicationFilter generated_implication_filter(const MvAlgebra& a, const Subset& s) {
  Subset cur = up_closure(a, s | Subset(a.size(), {a.one()}));
  for (;;) {
    Subset next = cur;
    auto el = cur.elements();
    for (auto x : el)
      for (auto y : el) next.insert(a.otimes(x, y));
    next = up_closure(a, next);
    if (next == cur) break;
    cur = std::move(next);
  }
  return ImplicationFilter(a, std::move(cur));
}

ImplicationFilter implication_join(const ImplicationFilter& p, const ImplicationFilter& q) {
  if (p.algebra().id() != q.algebra().id())
    throw InvalidArgument("implication filters over different algebras");
  return generated_implication_filter(p.algebra(), p.members() | q.members());
}

std::size_t default_carrier_cap() {
  if (const char* env = std::getenv("MVFILTER_MAX_CARRIER")) {
    try {
      auto v = std::stoul(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return 64;
}

std::vector<Filter> enumerate_lattice_filters(const MvAlgebra& a, bool prime_only,
                                              std::size_t cap) {
  if (a.size() > cap)
    throw ResourceLimit("carrier of " + a.name() + " has " + std::to_string(a.size()) +
                            " elements, above the enumeration cap",
                        cap);
  // A nonempty lattice filter of a finite lattice contains the meet of its
  // members, so it is the up-set of that meet. One candidate per element.
  std::set<Subset> seen;
  std::vector<Filter> out;
  for (Element g = 0; g < a.size(); ++g) {
    auto f = Filter::principal(a, g);
    if (!seen.insert(f.members()).second) continue;
    if (prime_only && !is_prime_lattice_filter(f)) continue;
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ImplicationFilter> enumerate_implication_filters(const MvAlgebra& a,
                                                             bool prime_only,
                                                             std::size_t cap) {
  std::vector<ImplicationFilter> out;
  for (const auto& f : enumerate_lattice_filters(a, false, cap)) {
    if (!is_implication_filter_set(a, f.members())) continue;
    ImplicationFilter p(a, f.members());
    if (prime_only && !is_prime_implication_filter(p)) continue;
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Filter> enumerate_lattice_filters_naive(const MvAlgebra& a) {
  if (a.size() > 20)
    throw ResourceLimit("naive filter scan limited to 20 elements", 20);
  std::vector<Filter> out;
  const std::uint64_t total = std::uint64_t{1} << a.size();
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    Subset s(a.size());
    for (Element i = 0; i < a.size(); ++i)
      if ((mask >> i) & 1U) s.insert(i);
    if (is_lattice_filter_set(a, s)) out.emplace_back(a, std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<SuccessorStructure> successor_structure(const MvAlgebra& a) {
  if (!a.is_linearly_ordered())
    throw InvalidArgument(a.name() + " is not linearly ordered");
  auto order = a.chain_order();
  if (order.size() < 2) return std::nullopt;
  SuccessorStructure s;
  s.c = order[1];
  s.succ.assign(a.size(), std::nullopt);
  s.pred.assign(a.size(), std::nullopt);
  for (std::size_t k = 0; k < order.size(); ++k) {
    Element x = order[k];
    if (x != a.one()) {
      Element nx = a.oplus(x, s.c);
      if (nx != order[k + 1])
        throw InvariantViolation("x+c is not the immediate successor of " + a.label(x));
      s.succ[x] = nx;
    }
    if (x != a.zero()) {
      Element px = a.ominus(x, s.c);
      if (px != order[k - 1])
        throw InvariantViolation("x-c is not the immediate predecessor of " + a.label(x));
      s.pred[x] = px;
    }
  }
  return s;
}

FilterClassification principality(const Filter& f) {
  const auto& a = f.algebra();
  FilterClassification c;
  c.is_lattice_filter = f.is_lattice_filter();
  c.is_prime = is_prime_lattice_filter(f);
  c.is_implication_filter = is_implication_filter_set(a, f.members());
  for (auto g : f.members().elements()) {
    bool least = true;
    for (auto y : f.members().elements())
      if (!a.leq(g, y)) {
        least = false;
        break;
      }
    if (least) {
      c.is_principal = true;
      c.generator = g;
      break;
    }
  }
  if (a.is_linearly_ordered()) {
    auto rest = f.members().complement();
    for (auto m : rest.elements()) {
      bool greatest = true;
      for (auto y : rest.elements())
        if (!a.leq(y, m)) {
          greatest = false;
          break;
        }
      if (greatest) {
        c.is_coprincipal = true;
        c.cogenerator = m;
        break;
      }
    }
  }
  return c;
}

}  // namespace mvfilter
