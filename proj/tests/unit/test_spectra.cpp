#include "doctest.h"
#include "mvfilter/errors.hpp"
#include "mvfilter/spectra.hpp"
#include "test_support.hpp"

using namespace mvfilter;
using mvtest::el;
using mvtest::filt;
using mvtest::set_of;

TEST_CASE("prime spectra of chains") {
  auto l3 = make_lukasiewicz_chain(3);
  Calculus c3(l3);
  auto s = prime_spectrum(c3, ImplicationFilter::trivial(l3));
  REQUIRE(s.size() == 2);
  CHECK(s.members()[0] == filt(l3, {"1"}));
  CHECK(s.members()[1] == filt(l3, {"1/2", "1"}));
  for (std::size_t n = 2; n <= 8; ++n) {
    auto a = make_lukasiewicz_chain(n);
    Calculus c(a);
    auto sp = prime_spectrum(c, ImplicationFilter::trivial(a));
    CHECK(sp.size() == n - 1);
    for (const auto& f : sp.members()) CHECK(principality(f).is_principal);
    CHECK(prime_spectrum(c, ImplicationFilter::whole(a)).empty());
  }
  auto sq = make_product(make_lukasiewicz_chain(2), make_lukasiewicz_chain(2));
  Calculus cs(sq);
  CHECK_THROWS_AS(prime_spectrum(cs, ImplicationFilter::trivial(sq)), InvalidArgument);
}

TEST_CASE("hat of a finite chain at the trivial kernel has one class fewer") {
  // PSpec({1}) of L_n holds the n-1 proper principal filters, all pairwise
  // inequivalent, so the hat algebra is L_{n-1}.
  for (std::size_t n = 3; n <= 8; ++n) {
    auto a = make_lukasiewicz_chain(n);
    Calculus c(a);
    auto h = build_hat(c, prime_spectrum(c, ImplicationFilter::trivial(a)));
    CHECK(h.size() == n - 1);
    CHECK_FALSE(chain_isomorphism(h.as_mv(), a).has_value());
    CHECK(chain_isomorphism(h.as_mv(), make_lukasiewicz_chain(n - 1)).has_value());
    // zero is the largest filter, one is {1}
    CHECK(h.classes()[h.zero_class()].representative == Filter::principal(a, 1));
    CHECK(h.classes()[h.one_class()].representative == Filter::principal(a, a.one()));
    for (std::size_t x = 0; x < h.size(); ++x) {
      CHECK(h.as_mv().leq(h.zero_class(), x));
      CHECK(h.as_mv().leq(x, h.one_class()));
    }
  }
}

TEST_CASE("hat algebras of every prime kernel are MV-chains") {
  for (const auto& a : mvtest::test_algebras()) {
    Calculus c(a);
    for (const auto& p : enumerate_implication_filters(a, true)) {
      auto sp = prime_spectrum(c, p);
      REQUIRE_FALSE(sp.empty());
      auto h = build_hat(c, sp);
      CHECK(check_mv_axioms(h.as_mv()).passed());
      CHECK(h.as_mv().is_linearly_ordered());
      // the one class is P itself, since F -o F = K(F) = P
      CHECK(h.classes()[h.one_class()].representative.members() == p.members());
      // size law: L/P has m cosets and the hat has m - 1 classes
      auto q = quotient_by(a, p);
      CHECK(h.size() + 1 == q.coset_count());
      for (std::size_t x = 0; x < h.size(); ++x) {
        CHECK(hat_otimes(h, x, h.one_class()) == x);
        CHECK(hat_otimes(h, x, h.zero_class()) == h.zero_class());
      }
    }
  }
}

TEST_CASE("projection kernels of L2xL3") {
  auto l2 = make_lukasiewicz_chain(2), l3 = make_lukasiewicz_chain(3);
  auto p = make_product(l2, l3);
  Calculus c(p);
  ImplicationFilter first(p, set_of(p, {"(1,0)", "(1,1/2)", "(1,1)"}));
  ImplicationFilter second(p, set_of(p, {"(0,1)", "(1,1)"}));
  auto h1 = build_hat(c, prime_spectrum(c, first));
  auto h2 = build_hat(c, prime_spectrum(c, second));
  // L/first is L2 and L/second is L3
  CHECK(h1.size() == 1);
  CHECK(chain_isomorphism(h2.as_mv(), l2).has_value());
}

TEST_CASE("hat product against T and phi") {
  auto l5 = make_lukasiewicz_chain(5);
  Calculus c(l5);
  auto h = build_hat(c, prime_spectrum(c, ImplicationFilter::trivial(l5)));
  for (std::size_t x = 0; x < h.size(); ++x)
    for (std::size_t y = 0; y < h.size(); ++y) {
      auto r = hat_otimes_agreement(c, h, x, y);
      CHECK(r.tensor_matches_phi());
      // T = (F -o G+)+ exactly when F ⊆ G+, i.e. when the product of the
      // generators stays above 0
      const auto& f = h.classes()[x].representative;
      const auto& g = h.classes()[y].representative;
      CHECK(r.tensor_matches_formula() == f.is_subset_of(c.plus(g)));
      if (r.tensor_matches_formula()) CHECK(r.tensor_class == r.hat_value);
    }
}

TEST_CASE("iota on finite chains") {
  for (std::size_t n = 3; n <= 7; ++n) {
    auto a = make_lukasiewicz_chain(n);
    Calculus c(a);
    auto p = ImplicationFilter::trivial(a);
    auto h = build_hat(c, prime_spectrum(c, p));
    auto q = quotient_by(a, p);
    auto r = iota(c, h, q);
    // the coset of 1 has an empty subordinate; the rest map bijectively
    CHECK_FALSE(r.class_of_coset[q.coset_of(a.one())].has_value());
    for (Element x = 0; x + 1 < n; ++x) CHECK(r.class_of_coset[q.coset_of(x)].has_value());
    CHECK(r.injective);
    CHECK(r.onto);
    // P_a -o P_b = [a→b, 1] for a, b < 1
    for (Element x = 0; x + 1 < n; ++x)
      for (Element y = 0; y + 1 < n; ++y)
        CHECK(c.sqto(c.subordinate(p.as_filter(), x), c.subordinate(p.as_filter(), y)) ==
              Filter::principal(a, a.implies(x, y)));
  }
  auto l4 = make_lukasiewicz_chain(4);
  Calculus c(l4);
  auto h = build_hat(c, prime_spectrum(c, ImplicationFilter::trivial(l4)));
  auto r = iota(c, h, quotient_by(l4, ImplicationFilter::trivial(l4)));
  CHECK_FALSE(r.preserves_implies());
}

TEST_CASE("no nested prime kernels in the test algebras") {
  for (const auto& a : mvtest::test_algebras()) {
    auto primes = enumerate_implication_filters(a, true);
    for (const auto& p : primes)
      for (const auto& q : primes)
        CHECK_FALSE(p.members().is_proper_subset_of(q.members()));
  }
}

TEST_CASE("hat_eta into the improper quotient") {
  for (const auto& a : mvtest::test_algebras()) {
    Calculus c(a);
    auto top = quotient_by(a, ImplicationFilter::whole(a));
    for (const auto& p : enumerate_implication_filters(a, true)) {
      auto h = build_hat(c, prime_spectrum(c, p));
      auto r = hat_eta(c, h, top);
      CHECK(r.passed());
      CHECK_THROWS_AS(hat_eta(c, h, quotient_by(a, p)), InvalidArgument);
    }
  }
}
