#include "mvfilter/calculus.hpp"

#include <algorithm>

#include "mvfilter/errors.hpp"

namespace mvfilter {

namespace {

Subset subordinate_set(const MvAlgebra& a, const Subset& f, Element x) {
  Subset out(a.size());
  for (Element z = 0; z < a.size(); ++z)
    if (!f.contains(a.implies(z, x))) out.insert(z);
  return out;
}

Subset kernel_set(const MvAlgebra& a, const Subset& f) {
  Subset out(a.size());
  auto outside = f.complement().elements();
  for (Element z = 0; z < a.size(); ++z) {
    bool keep = true;
    for (auto x : outside)
      if (f.contains(a.implies(z, x))) {
        keep = false;
        break;
      }
    if (keep) out.insert(z);
  }
  return out;
}

}  // namespace

Calculus::Calculus(MvAlgebra a) : alg_(std::move(a)) {
  auto report = check_mv_axioms(alg_);
  if (!report.passed())
    throw InvalidArgument(alg_.name() + " is not an MV-algebra: " + report.describe(alg_));
}

void Calculus::require_own(const Filter& f) const {
  if (f.algebra().id() != alg_.id())
    throw InvalidArgument("filter belongs to a different algebra than " + alg_.name());
}

void Calculus::require_own(const Subset& s) const {
  if (s.universe() != alg_.size())
    throw InvalidArgument("subset is not over the carrier of " + alg_.name());
}

Filter Calculus::subordinate(const Filter& f, Element a) const {
  require_own(f);
  if (a >= alg_.size()) throw InvalidArgument("element out of range");
  if (f.is_bottom()) return f;
  Filter out(alg_, subordinate_set(alg_, f.members(), a));
  if (!f.contains(a) && !out.is_bottom() && is_prime_lattice_filter(f) &&
      !is_prime_lattice_filter(out))
    throw InvariantViolation("subordinate of prime " + f.to_string() + " at " +
                             alg_.label(a) + " is not prime");
  return out;
}

FlaggedFilter Calculus::subordinate_checked(const Filter& f, Element a) const {
  FlaggedFilter r{subordinate(f, a), false, {}};
  if (f.is_bottom()) {
    r.flagged = true;
    r.note = "bottom input";
  } else if (f.contains(a)) {
    r.flagged = true;
    r.note = "element " + alg_.label(a) + " lies in the filter";
  } else if (r.value.is_bottom()) {
    r.flagged = true;
    r.note = "empty subordinate";
  }
  return r;
}

Filter Calculus::plus(const Filter& f) const { return subordinate(f, alg_.zero()); }

ImplicationFilter Calculus::kernel(const Filter& f) const {
  require_own(f);
  if (f.is_bottom()) throw InvalidArgument("kernel of the empty filter is undefined");
  Subset k = kernel_set(alg_, f.members());
  if (!k.is_subset_of(f.members()))
    throw InvariantViolation("kernel of " + f.to_string() + " is not inside it");
  ImplicationFilter p(alg_, std::move(k));
  if (is_prime_lattice_filter(f) && !is_prime_implication_filter(p))
    throw InvariantViolation("kernel of prime " + f.to_string() + " is not prime");
  return p;
}

Filter Calculus::kernel_rel(const Filter& f, const Subset& x) const {
  require_own(f);
  require_own(x);
  if (x.intersects(f.members()))
    throw InvalidArgument("K(F;X) needs X disjoint from F");
  if (f.is_bottom()) return f;
  Subset out = alg_.carrier();
  for (auto a : x.elements()) out &= subordinate_set(alg_, f.members(), a);
  return Filter(alg_, std::move(out));
}

Filter Calculus::sqto_definitional(const Filter& f, const Filter& g) const {
  require_own(f);
  require_own(g);
  if (f.is_bottom() || g.is_bottom()) return Filter::bottom(alg_);
  Subset h = f.members() & g.members();
  Subset out = alg_.carrier();
  for (auto a : g.members().complement().elements()) out &= subordinate_set(alg_, h, a);
  return Filter(alg_, std::move(out));
}

Filter Calculus::sqto_fast(const Filter& f, const Filter& g) const {
  require_own(f);
  require_own(g);
  if (f.is_bottom() || g.is_bottom()) return Filter::bottom(alg_);
  auto h = (f.members() & g.members()).elements();
  Subset out(alg_.size());
  for (Element z = 0; z < alg_.size(); ++z) {
    bool keep = std::all_of(h.begin(), h.end(),
                            [&](Element x) { return g.contains(alg_.otimes(x, z)); });
    if (keep) out.insert(z);
  }
  return Filter(alg_, std::move(out));
}

Filter Calculus::sqto(const Filter& f, const Filter& g) const {
  Filter d = sqto_definitional(f, g);
  if (d != sqto_fast(f, g))
    throw InvariantViolation("definitional and fast forms of " + f.to_string() + " -o " +
                             g.to_string() + " differ");
  return d;
}

Filter Calculus::phi(const Filter& f, const Filter& g) const {
  require_own(f);
  require_own(g);
  if (f.is_bottom() || g.is_bottom()) return Filter::bottom(alg_);
  Subset out(alg_.size());
  for (auto x : f.members().elements())
    for (Element y = 0; y < alg_.size(); ++y)
      if (g.contains(alg_.implies(x, y))) out.insert(y);
  return Filter(alg_, std::move(out));
}

Filter Calculus::tensor_up(const Filter& f, const Filter& g) const {
  require_own(f);
  require_own(g);
  if (f.is_bottom() || g.is_bottom()) return Filter::bottom(alg_);
  Subset prods(alg_.size());
  for (auto x : f.members().elements())
    for (auto y : g.members().elements()) prods.insert(alg_.otimes(x, y));
  return Filter(alg_, up_closure(alg_, prods));
}

Filter Calculus::j_up(const Filter& f, const QuotientAlgebra& q) const {
  require_own(f);
  if (q.parent().id() != alg_.id()) throw InvalidArgument("quotient of another algebra");
  if (f.is_bottom()) return f;
  Filter out(alg_, q.preimage(q.image(f.members())));
  const auto& p = q.congruence_filter();
  if (out.is_proper() && is_prime_lattice_filter(f) && is_prime_implication_filter(p)) {
    auto expect = implication_join(kernel(f), p);
    if (!(kernel(out) == expect))
      throw InvariantViolation("K(J_u(" + f.to_string() + ", " + p.to_string() +
                               ")) differs from K(F) v P");
  }
  return out;
}

Filter Calculus::j_up(const Filter& f, const ImplicationFilter& p) const {
  return j_up(f, quotient_by(alg_, p));
}

Filter Calculus::j_down(const Filter& f, const QuotientAlgebra& q) const {
  require_own(f);
  if (f.is_bottom()) return f;
  return plus(j_up(plus(f), q));
}

Filter Calculus::j_down(const Filter& f, const ImplicationFilter& p) const {
  return j_down(f, quotient_by(alg_, p));
}

ReductionResult Calculus::reduce_to_common_kernel(const Filter& f, const Filter& g) const {
  require_own(f);
  require_own(g);
  if (!f.is_subset_of(g)) throw InvalidArgument("reduction needs F contained in G");
  if (!is_prime_lattice_filter(f) || !is_prime_lattice_filter(g))
    throw InvalidArgument("reduction needs prime lattice filters");
  Filter fu = j_up(f, kernel(g));
  Filter gd = j_down(g, kernel(f));
  Filter direct = sqto(f, g);
  ReductionResult r{fu, gd, direct};
  r.theorem_holds = sqto(fu, gd) == direct;
  r.up_step_holds = sqto(fu, g) == direct;
  r.down_step_holds = sqto(f, gd) == direct;
  return r;
}

QuotientCommuteReport Calculus::sqto_quotient_commutes(const Filter& f, const Filter& g,
                                                       const ImplicationFilter& q) const {
  require_own(f);
  require_own(g);
  if (!f.is_subset_of(g)) throw InvalidArgument("quotient identities need F contained in G");
  if (g.is_bottom()) throw InvalidArgument("quotient identities need nonempty filters");
  auto kg = kernel(g);
  if (!q.is_subset_of(kg)) throw InvalidArgument("quotient identities need Q inside K(G)");

  auto quo = quotient_by(alg_, q);
  Calculus qc(quo.quotient());
  const auto& qa = quo.quotient();
  Filter fq(qa, quo.image(f.members()));
  Filter gq(qa, quo.image(g.members()));
  Filter lhs_q = qc.sqto(fq, gq);
  Filter direct = sqto(f, g);

  QuotientCommuteReport r;
  Subset direct_image = quo.image(direct.members());
  r.image_identity = direct_image == lhs_q.members();
  if (!r.image_identity)
    r.witness = "(F-o G)/Q = " + Filter(qa, direct_image).to_string() +
                " but F/Q -o G/Q = " + lhs_q.to_string();
  if (!f.is_bottom() && q.is_subset_of(kernel(f)) && kernel(f) == kg) {
    r.preimage_identity = quo.preimage(lhs_q.members()) == direct.members();
    if (!*r.preimage_identity && r.witness.empty())
      r.witness = "preimage of F/Q -o G/Q differs from F -o G = " + direct.to_string();
  }
  return r;
}

ImplicationFilter Calculus::kernel_of_sqto(const Filter& f, const Filter& g) const {
  require_own(f);
  require_own(g);
  if (!f.is_subset_of(g) || !is_prime_lattice_filter(f) || !is_prime_lattice_filter(g))
    throw InvalidArgument("kernel theorem needs prime F contained in prime G");
  auto kf = kernel(f);
  if (!(kf == kernel(g))) throw InvalidArgument("kernel theorem needs K(F) = K(G)");
  auto k = kernel(sqto(f, g));
  if (!(k == kf))
    throw InvariantViolation("K(F -o G) = " + k.to_string() + " differs from K(F) = " +
                             kf.to_string());
  return k;
}

std::size_t Calculus::boundary_coset(const Filter& f, const QuotientAlgebra& q) const {
  require_own(f);
  if (q.parent().id() != alg_.id()) throw InvalidArgument("quotient of another algebra");
  auto kf = kernel(f);
  const auto& p = q.congruence_filter();
  if (!kf.members().is_proper_subset_of(p.members()))
    throw InvalidArgument("boundary coset needs K(F) properly inside P");
  std::optional<std::size_t> found;
  for (std::size_t c = 0; c < q.coset_count(); ++c) {
    Subset cs = q.coset_set(c);
    if (cs.intersects(f.members()) && !cs.is_subset_of(f.members())) {
      if (found)
        throw InvariantViolation("several cosets straddle the boundary of " + f.to_string());
      found = c;
    }
  }
  if (!found) throw InvariantViolation("no coset straddles the boundary of " + f.to_string());
  return *found;
}

bool Calculus::equiv(const Filter& f, const Filter& g) const {
  require_own(f);
  require_own(g);
  if (f.is_bottom() || g.is_bottom()) return false;
  auto k = kernel(f);
  if (!(k == kernel(g))) return false;
  return sqto(f, g).members() == k.members() && sqto(g, f).members() == k.members();
}

bool Calculus::is_convex(const Subset& c) const {
  require_own(c);
  auto order = alg_.chain_order();
  std::size_t first = order.size(), last = 0;
  for (std::size_t k = 0; k < order.size(); ++k)
    if (c.contains(order[k])) {
      first = std::min(first, k);
      last = k;
    }
  if (first == order.size()) return true;
  for (std::size_t k = first; k <= last; ++k)
    if (!c.contains(order[k])) return false;
  return true;
}

ConvexityReport Calculus::convex_image_checks(const Subset& c, Element a) const {
  require_own(c);
  if (!alg_.is_linearly_ordered())
    throw InvalidArgument("convexity checks need a linearly ordered algebra");
  if (!is_convex(c)) throw InvalidArgument("set is not convex");
  Subset imp(alg_.size()), ng(alg_.size()), ot(alg_.size());
  for (auto z : c.elements()) {
    imp.insert(alg_.implies(z, a));
    ng.insert(alg_.neg(z));
    ot.insert(alg_.otimes(z, a));
  }
  ConvexityReport r;
  r.implies_image_convex = is_convex(imp);
  r.neg_image_convex = is_convex(ng);
  r.otimes_image_convex = is_convex(ot);
  if (!r.passed())
    r.witness = "C = " + describe_set(alg_, c) + ", a = " +
                alg_.label(a);
  return r;
}

}  // namespace mvfilter
