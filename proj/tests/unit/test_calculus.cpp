#include "doctest.h"
#include "mvfilter/calculus.hpp"
#include "mvfilter/errors.hpp"
#include "test_support.hpp"

using namespace mvfilter;
using mvtest::el;
using mvtest::filt;
using mvtest::set_of;

namespace {

// Brute-force oracles written directly from the set-builder definitions,
// without going through the Calculus class.
Subset oracle_subordinate(const MvAlgebra& a, const Subset& f, Element x) {
  Subset out(a.size());
  for (Element z = 0; z < a.size(); ++z)
    if (!f.contains(a.implies(z, x))) out.insert(z);
  return out;
}

Subset oracle_fast_sqto(const MvAlgebra& a, const Subset& f, const Subset& g) {
  Subset out(a.size());
  for (Element z = 0; z < a.size(); ++z) {
    bool ok = true;
    for (auto x : (f & g).elements()) ok = ok && g.contains(a.otimes(x, z));
    if (ok) out.insert(z);
  }
  return out;
}

}  // namespace

TEST_CASE("subordinate examples") {
  auto l3 = make_lukasiewicz_chain(3);
  Calculus c3(l3);
  CHECK(c3.subordinate(filt(l3, {"1/2", "1"}), l3.zero()) == filt(l3, {"1"}));
  auto l4 = make_lukasiewicz_chain(4);
  Calculus c4(l4);
  CHECK(c4.subordinate(filt(l4, {"2/3", "1"}), el(l4, "1/3")) == filt(l4, {"1"}));
  for (std::size_t n = 2; n <= 8; ++n) {
    auto a = make_lukasiewicz_chain(n);
    Calculus c(a);
    for (const auto& f : enumerate_lattice_filters(a, true))
      for (Element x = 0; x < n; ++x)
        if (!f.contains(x)) CHECK(c.subordinate(f, x).contains(a.one()));
  }
  auto flagged = c3.subordinate_checked(filt(l3, {"1/2", "1"}), el(l3, "1/2"));
  CHECK(flagged.flagged);
  CHECK(flagged.value.is_bottom());
}

TEST_CASE("plus examples") {
  auto l3 = make_lukasiewicz_chain(3);
  Calculus c(l3);
  CHECK(c.plus(filt(l3, {"1/2", "1"})) == filt(l3, {"1"}));
  CHECK(c.plus(filt(l3, {"1"})) == filt(l3, {"1/2", "1"}));
  CHECK(c.plus(c.plus(filt(l3, {"1/2", "1"}))) == filt(l3, {"1/2", "1"}));
}

TEST_CASE("kernel examples") {
  auto l3 = make_lukasiewicz_chain(3);
  Calculus c(l3);
  CHECK(c.kernel(filt(l3, {"1/2", "1"})).members() == set_of(l3, {"1"}));
  for (std::size_t n = 2; n <= 8; ++n) {
    auto a = make_lukasiewicz_chain(n);
    Calculus cn(a);
    CHECK(cn.kernel(Filter::principal(a, a.one())).members() == Subset(n, {a.one()}));
  }
  CHECK_THROWS_AS(c.kernel(Filter::bottom(l3)), InvalidArgument);
}

TEST_CASE("kernel_rel conventions") {
  auto l4 = make_lukasiewicz_chain(4);
  Calculus c(l4);
  auto f = filt(l4, {"2/3", "1"});
  CHECK(c.kernel_rel(f, l4.empty_set()).is_improper());
  CHECK_THROWS_AS(c.kernel_rel(f, set_of(l4, {"1"})), InvalidArgument);
}

TEST_CASE("sqto examples") {
  auto l3 = make_lukasiewicz_chain(3);
  Calculus c(l3);
  CHECK(c.sqto(filt(l3, {"1"}), filt(l3, {"1/2", "1"})) == filt(l3, {"1/2", "1"}));
  auto a = make_lukasiewicz_chain(6);
  Calculus c6(a);
  auto f = Filter::principal(a, 2), g = Filter::principal(a, 4);
  CHECK(c6.sqto(f, g) == Filter(a, c6.kernel(g).members()));  // G ⊆ F
  CHECK(c6.sqto(Filter(a, c6.kernel(f).members()), f) == f);
  CHECK_THROWS_AS(c6.sqto(f, filt(l3, {"1"})), InvalidArgument);
  CHECK(c6.sqto(Filter::bottom(a), f).is_bottom());
}

TEST_CASE("phi and T examples") {
  auto l3 = make_lukasiewicz_chain(3);
  Calculus c(l3);
  auto half = filt(l3, {"1/2", "1"}), one = filt(l3, {"1"});
  CHECK(c.phi(half, one) == half);
  CHECK(c.phi(one, half) == half);
  CHECK(c.tensor_up(half, one) == half);
  CHECK(c.tensor_up(one, one) == one);
}

TEST_CASE("phi equals (F -o G+)+ exactly when F is inside G+") {
  // On prime pairs the identity holds iff F ⊆ G⁺; otherwise Φ is the whole
  // carrier. In L4 with F = G = [1/3,1] the identity fails.
  for (const auto& a : mvtest::test_algebras()) {
    Calculus c(a);
    auto primes = enumerate_lattice_filters(a, true);
    for (const auto& f : primes)
      for (const auto& g : primes) {
        auto lhs = c.phi(f, g);
        auto rhs = c.plus(c.sqto(f, c.plus(g)));
        bool inside = f.is_subset_of(c.plus(g));
        CHECK((lhs == rhs) == inside);
        if (!inside) CHECK(lhs.is_improper());
        CHECK(lhs == c.tensor_up(f, g));
      }
  }
  auto l4 = make_lukasiewicz_chain(4);
  Calculus c4(l4);
  auto f = filt(l4, {"1/3", "2/3", "1"});
  CHECK(c4.phi(f, f).is_improper());
  CHECK(c4.plus(c4.sqto(f, c4.plus(f))) == filt(l4, {"1/3", "2/3", "1"}));
}

TEST_CASE("J_u and J_d examples") {
  for (const auto& a : mvtest::test_algebras()) {
    Calculus c(a);
    auto one = ImplicationFilter::trivial(a);
    for (const auto& f : enumerate_lattice_filters(a, false)) {
      CHECK(c.j_up(f, one) == f);
      if (is_prime_lattice_filter(f)) CHECK(c.j_down(f, one) == f);
      for (const auto& p : enumerate_implication_filters(a, false)) {
        auto ju = c.j_up(f, p);
        CHECK(f.is_subset_of(ju));
        if (f.is_proper() && p.is_subset_of(c.kernel(f))) CHECK(ju == f);
      }
    }
  }
  auto sq = make_product(make_lukasiewicz_chain(2), make_lukasiewicz_chain(2));
  Calculus c(sq);
  ImplicationFilter p(sq, set_of(sq, {"(1,0)", "(1,1)"}));
  auto other = filt(sq, {"(0,1)", "(1,1)"});
  CHECK(c.j_down(other, p).is_bottom());
}

TEST_CASE("definitional and fast sqto agree with the brute-force oracles") {
  for (const auto& a : mvtest::test_algebras()) {
    Calculus c(a);
    auto all = enumerate_lattice_filters(a, false);
    for (const auto& f : all)
      for (const auto& g : all) {
        auto d = c.sqto_definitional(f, g);
        CHECK(d.members() == oracle_fast_sqto(a, f.members(), g.members()));
        CHECK(d == c.sqto_fast(f, g));
      }
    for (const auto& f : all)
      for (Element x = 0; x < a.size(); ++x)
        CHECK(c.subordinate(f, x).members() == oracle_subordinate(a, f.members(), x));
  }
}

TEST_CASE("reduction and quotient preconditions") {
  auto l5 = make_lukasiewicz_chain(5);
  Calculus c(l5);
  auto f = Filter::principal(l5, 3), g = Filter::principal(l5, 1);
  CHECK_THROWS_AS(c.reduce_to_common_kernel(g, f), InvalidArgument);
  auto r = c.reduce_to_common_kernel(f, g);
  CHECK(r.all_hold());
  CHECK_THROWS_AS(c.sqto_quotient_commutes(f, g, ImplicationFilter::whole(l5)), InvalidArgument);
  CHECK(c.sqto_quotient_commutes(f, g, ImplicationFilter::trivial(l5)).passed());
  CHECK(c.kernel_of_sqto(f, g) == ImplicationFilter::trivial(l5));
  CHECK(c.kernel_of_sqto(f, f) == c.kernel(f));
}

TEST_CASE("boundary coset") {
  auto l4 = make_lukasiewicz_chain(4);
  Calculus c(l4);
  auto q = quotient_by(l4, ImplicationFilter::whole(l4));
  CHECK(c.boundary_coset(filt(l4, {"2/3", "1"}), q) == 0);
  CHECK_THROWS_AS(c.boundary_coset(filt(l4, {"2/3", "1"}), quotient_by(l4, ImplicationFilter::trivial(l4))),
                  InvalidArgument);

  auto l2 = make_lukasiewicz_chain(2), l3 = make_lukasiewicz_chain(3);
  auto p = make_product(l2, l3);
  Calculus cp(p);
  for (const auto& f : enumerate_lattice_filters(p, true)) {
    auto kf = cp.kernel(f);
    for (const auto& big : enumerate_implication_filters(p, false)) {
      if (!kf.members().is_proper_subset_of(big.members())) continue;
      auto qb = quotient_by(p, big);
      auto cs = cp.boundary_coset(f, qb);
      auto cs_plus = cp.boundary_coset(cp.plus(f), qb);
      CHECK(cs_plus == qb.coset_of(p.neg(qb.representatives()[cs])));
    }
  }
}

TEST_CASE("equivalence on finite chains is equality") {
  auto l5 = make_lukasiewicz_chain(5);
  Calculus c(l5);
  auto primes = enumerate_lattice_filters(l5, true);
  for (const auto& f : primes)
    for (const auto& g : primes) CHECK(c.equiv(f, g) == (f == g));
}

TEST_CASE("convexity images") {
  auto l6 = make_lukasiewicz_chain(6);
  Calculus c(l6);
  auto order = l6.chain_order();
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i; j < order.size(); ++j) {
      Subset cset(l6.size());
      for (std::size_t k = i; k <= j; ++k) cset.insert(order[k]);
      for (Element a = 0; a < l6.size(); ++a) CHECK(c.convex_image_checks(cset, a).passed());
    }
  Subset gap = set_of(l6, {"0", "2/5"});
  CHECK_THROWS_AS(c.convex_image_checks(gap, 0), InvalidArgument);
  auto sq = make_product(make_lukasiewicz_chain(2), make_lukasiewicz_chain(2));
  Calculus cs(sq);
  CHECK_THROWS_AS(cs.convex_image_checks(Subset(4, {0}), 0), InvalidArgument);
}
