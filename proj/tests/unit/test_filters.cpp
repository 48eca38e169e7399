#include <cstdlib>

#include "doctest.h"
#include "mvfilter/errors.hpp"
#include "test_support.hpp"

using namespace mvfilter;
using mvtest::el;
using mvtest::filt;
using mvtest::set_of;

TEST_CASE("up closure") {
  auto l3 = make_lukasiewicz_chain(3);
  CHECK(up_closure(l3, set_of(l3, {"1"})) == set_of(l3, {"1"}));
  CHECK(up_closure(l3, set_of(l3, {"0"})) == l3.carrier());
  auto sq = make_product(make_lukasiewicz_chain(2), make_lukasiewicz_chain(2));
  CHECK(up_closure(sq, set_of(sq, {"(1,0)"})) == set_of(sq, {"(1,0)", "(1,1)"}));
}

TEST_CASE("down closure under joins") {
  auto l5 = make_lukasiewicz_chain(5);
  CHECK(down_closure_joins(l5, set_of(l5, {"1/2"})) == set_of(l5, {"0", "1/4", "1/2"}));
  CHECK(down_closure_joins(l5, l5.empty_set()).empty());
  auto sq = make_product(make_lukasiewicz_chain(2), make_lukasiewicz_chain(2));
  CHECK(down_closure_joins(sq, set_of(sq, {"(1,0)", "(0,1)"})).is_full());
}

TEST_CASE("lattice primality") {
  for (std::size_t n = 2; n <= 8; ++n) {
    auto a = make_lukasiewicz_chain(n);
    for (Element g = 1; g < n; ++g) CHECK(is_prime_lattice_filter(Filter::principal(a, g)));
    CHECK_FALSE(is_prime_lattice_filter(Filter::improper(a)));
  }
  auto sq = make_product(make_lukasiewicz_chain(2), make_lukasiewicz_chain(2));
  auto top = filt(sq, {"(1,1)"});
  CHECK_FALSE(is_prime_lattice_filter(top));
  auto w = join_primality_witness(top);
  REQUIRE(w.has_value());
  CHECK(sq.join(w->first, w->second) == sq.one());
  CHECK_FALSE(top.contains(w->first));
  CHECK_FALSE(top.contains(w->second));
}

TEST_CASE("implication filter primality") {
  for (std::size_t n = 2; n <= 8; ++n) {
    auto a = make_lukasiewicz_chain(n);
    CHECK(is_prime_implication_filter(ImplicationFilter::trivial(a)));
    CHECK_FALSE(is_prime_implication_filter(ImplicationFilter::whole(a)));
  }
  auto sq = make_product(make_lukasiewicz_chain(2), make_lukasiewicz_chain(2));
  CHECK_FALSE(is_prime_implication_filter(ImplicationFilter::trivial(sq)));
  // the two predicates agree on every implication filter of every test algebra
  for (const auto& a : mvtest::test_algebras())
    for (const auto& p : enumerate_implication_filters(a, false))
      CHECK(is_prime_implication_filter(p) == is_join_prime_implication_filter(p));
}

TEST_CASE("enumeration on L3") {
  auto l3 = make_lukasiewicz_chain(3);
  auto all = enumerate_lattice_filters(l3, false);
  REQUIRE(all.size() == 3);
  CHECK(all[0] == filt(l3, {"1"}));
  CHECK(all[1] == filt(l3, {"1/2", "1"}));
  CHECK(all[2] == filt(l3, {"0", "1/2", "1"}));
  auto primes = enumerate_lattice_filters(l3, true);
  REQUIRE(primes.size() == 2);
  CHECK(primes[0] == filt(l3, {"1"}));
  CHECK(primes[1] == filt(l3, {"1/2", "1"}));

  auto imp = enumerate_implication_filters(l3, false);
  REQUIRE(imp.size() == 2);
  CHECK(imp[0].members() == set_of(l3, {"1"}));
  CHECK(imp[1].members().is_full());
  auto pimp = enumerate_implication_filters(l3, true);
  REQUIRE(pimp.size() == 1);
  CHECK(pimp[0].members() == set_of(l3, {"1"}));
}

TEST_CASE("enumeration sizes and cross-check") {
  for (std::size_t n = 2; n <= 8; ++n)
    CHECK(enumerate_lattice_filters(make_lukasiewicz_chain(n), false).size() == n);
  CHECK(enumerate_implication_filters(make_lukasiewicz_chain(2), false).size() == 2);

  for (const auto& a : mvtest::test_algebras()) {
    if (a.size() > 12) continue;
    auto fast = enumerate_lattice_filters(a, false);
    auto naive = enumerate_lattice_filters_naive(a);
    CHECK(fast == naive);
    for (std::size_t i = 1; i < fast.size(); ++i) CHECK(fast[i - 1] < fast[i]);
    for (const auto& f : fast) {
      CHECK(is_up_set(a, f.members()));
      CHECK(is_meet_closed(a, f.members()));
      bool imp = is_implication_filter_set(a, f.members());
      CHECK(imp == (f.contains(a.one()) && is_otimes_closed(a, f.members())));
    }
  }
}

TEST_CASE("implication filters of a product") {
  auto l2 = make_lukasiewicz_chain(2), l3 = make_lukasiewicz_chain(3);
  auto p = make_product(l2, l3);
  auto imp = enumerate_implication_filters(p, false);
  auto has = [&](const Subset& s) {
    for (const auto& q : imp)
      if (q.members() == s) return true;
    return false;
  };
  CHECK(has(set_of(p, {"(1,0)", "(1,1/2)", "(1,1)"})));
  CHECK(has(set_of(p, {"(0,1)", "(1,1)"})));
  // prime ones are exactly the two projection kernels
  auto prime = enumerate_implication_filters(p, true);
  CHECK(prime.size() == 2);
}

TEST_CASE("prime filters of the square") {
  auto sq = make_product(make_lukasiewicz_chain(2), make_lukasiewicz_chain(2));
  auto primes = enumerate_lattice_filters(sq, true);
  REQUIRE(primes.size() == 2);
  CHECK(primes[0] == filt(sq, {"(0,1)", "(1,1)"}));
  CHECK(primes[1] == filt(sq, {"(1,0)", "(1,1)"}));
}

TEST_CASE("enumeration cap") {
  auto a = make_lukasiewicz_chain(10);
  CHECK_THROWS_AS(enumerate_lattice_filters(a, false, 8), ResourceLimit);
  try {
    enumerate_lattice_filters(a, false, 8);
  } catch (const ResourceLimit& e) {
    CHECK(e.cap() == 8);
  }
}

TEST_CASE("successor structure") {
  auto l4 = make_lukasiewicz_chain(4);
  auto s = successor_structure(l4);
  REQUIRE(s.has_value());
  CHECK(s->c == el(l4, "1/3"));
  CHECK(s->succ[el(l4, "1/3")] == el(l4, "2/3"));
  auto l2 = make_lukasiewicz_chain(2);
  auto s2 = successor_structure(l2);
  REQUIRE(s2.has_value());
  CHECK(s2->c == l2.one());
  CHECK(s2->succ[l2.zero()] == l2.one());
  auto l5 = make_lukasiewicz_chain(5);
  CHECK(successor_structure(l5)->pred[el(l5, "1/2")] == el(l5, "1/4"));
  CHECK_THROWS_AS(successor_structure(make_product(l2, l2)), InvalidArgument);
}

TEST_CASE("principality") {
  auto l5 = make_lukasiewicz_chain(5);
  auto c = principality(filt(l5, {"3/4", "1"}));
  CHECK(c.is_principal);
  CHECK(c.generator == el(l5, "3/4"));
  CHECK(c.is_coprincipal);
  CHECK(c.cogenerator == el(l5, "1/2"));
  CHECK(c.is_prime);
  CHECK(c.is_lattice_filter);
  auto l3 = make_lukasiewicz_chain(3);
  auto t = principality(filt(l3, {"1"}));
  CHECK(t.is_principal);
  CHECK(t.generator == l3.one());
  CHECK(t.is_implication_filter);
  for (const auto& a : mvtest::test_algebras())
    for (const auto& f : enumerate_lattice_filters(a, false)) {
      auto k = principality(f);
      CHECK(k.is_principal);
      if (k.is_prime) CHECK(k.is_lattice_filter);
    }
}

TEST_CASE("filter constructor validates up-sets") {
  auto l3 = make_lukasiewicz_chain(3);
  CHECK_THROWS_AS(Filter(l3, set_of(l3, {"1/2"})), InvalidArgument);
  CHECK(Filter::bottom(l3).is_bottom());
  CHECK(Filter::bottom(l3).to_string() == "{}");
  CHECK(filt(l3, {"1/2", "1"}).to_string() == "{1/2,1}");
}
