#include "mvfilter/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <unordered_set>

#include "mvfilter/calculus.hpp"
#include "mvfilter/densechain.hpp"
#include "mvfilter/errors.hpp"
#include "mvfilter/quotient.hpp"
#include "mvfilter/spectra.hpp"

namespace mvfilter {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
  }
  return "?";
}

std::string_view to_string(Scope s) { return s == Scope::Finite ? "finite" : "dense"; }

std::size_t VerificationReport::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [s](const auto& r) { return r.status == s; }));
}

const StatementResult* VerificationReport::find(std::string_view id) const {
  for (const auto& r : results)
    if (r.id == id) return &r;
  return nullptr;
}

std::vector<MvAlgebra> reference_algebras() {
  std::vector<MvAlgebra> out;
  for (std::size_t n = 2; n <= 8; ++n) out.push_back(make_lukasiewicz_chain(n));
  auto l2 = make_lukasiewicz_chain(2), l3 = make_lukasiewicz_chain(3);
  out.push_back(make_product(l2, l3));
  out.push_back(make_product(l3, l3));
  std::vector<MvAlgebra> cube{l2, l2, l2};
  out.push_back(make_product(cube));
  return out;
}

namespace {

/// Accumulates instance checks for one statement, keeping the first witness.
class Tally {
public:
  template <class Witness>
  void check(bool ok, Witness&& witness) {
    ++checked_;
    if (!ok && failures_++ == 0) witness_ = witness();
  }
  void skip(std::string why) { skip_ = std::move(why); }
  void note(std::string n) { note_ = std::move(n); }
  void set_counts(std::size_t checked, std::size_t failures, std::string witness) {
    checked_ += checked;
    if (failures > 0 && failures_ == 0) witness_ = std::move(witness);
    failures_ += failures;
  }

  void fill(StatementResult& r) const {
    r.checked = checked_;
    r.failures = failures_;
    r.witness = witness_;
    r.note = note_;
    if (failures_ > 0) {
      r.status = Status::Fail;
    } else if (skip_) {
      r.status = Status::Skip;
      r.note = *skip_;
    } else if (checked_ == 0) {
      r.status = Status::Skip;
      if (r.note.empty()) r.note = "no admissible instances";
    } else {
      r.status = Status::Pass;
    }
  }

private:
  std::size_t checked_ = 0, failures_ = 0;
  std::string witness_, note_;
  std::optional<std::string> skip_;
};

template <class... Parts>
std::string cat(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

std::string show(const Filter& f) { return f.to_string(); }
std::string show(const ImplicationFilter& f) { return f.to_string(); }

// ---------------------------------------------------------------------------
// Finite context

struct HatEntry {
  ImplicationFilter p;
  std::optional<HatAlgebra> hat;
  std::string error;
};

struct FiniteCtx {
  MvAlgebra a;
  std::optional<Calculus> calc;
  std::string calc_error;
  std::vector<Filter> primes;   // prime lattice filters
  std::vector<Filter> lattice;  // proper lattice filters
  std::vector<ImplicationFilter> impl;
  std::vector<ImplicationFilter> prime_impl;
  std::map<Subset, QuotientAlgebra> quotients;
  std::optional<std::vector<HatEntry>> hats_;

  explicit FiniteCtx(MvAlgebra alg, std::size_t cap) : a(std::move(alg)) {
    try {
      calc.emplace(a);
    } catch (const InvalidArgument& e) {
      calc_error = e.what();
      return;
    }
    primes = enumerate_lattice_filters(a, true, cap);
    for (auto& f : enumerate_lattice_filters(a, false, cap))
      if (f.is_proper()) lattice.push_back(f);
    impl = enumerate_implication_filters(a, false, cap);
    prime_impl = enumerate_implication_filters(a, true, cap);
  }

  const Calculus& c() const { return *calc; }

  const QuotientAlgebra& quotient(const ImplicationFilter& p) {
    auto it = quotients.find(p.members());
    if (it == quotients.end()) it = quotients.emplace(p.members(), quotient_by(a, p)).first;
    return it->second;
  }

  const std::vector<HatEntry>& hats() {
    if (!hats_) {
      hats_.emplace();
      for (const auto& p : prime_impl) {
        HatEntry e{p, std::nullopt, {}};
        try {
          e.hat.emplace(build_hat(c(), prime_spectrum(c(), p)));
        } catch (const InvariantViolation& ex) {
          e.error = ex.what();
        }
        hats_->push_back(std::move(e));
      }
    }
    return *hats_;
  }

  Filter meet_set(const Filter& f, const Filter& g) const {
    return Filter(a, f.members() & g.members());
  }
  Filter join_set(const Filter& f, const Filter& g) const {
    return Filter(a, f.members() | g.members());
  }
};

// Every subset of `pool`, by bitmask over its elements.
template <class Fn>
void for_each_subset(const MvAlgebra& a, const Subset& pool, Fn&& fn) {
  auto els = pool.elements();
  const std::size_t n = els.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Subset s = a.empty_set();
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1U) s.insert(els[i]);
    fn(s);
  }
}

// Nonempty intervals of a chain, as subsets.
std::vector<Subset> chain_intervals(const MvAlgebra& a) {
  auto order = a.chain_order();
  std::vector<Subset> out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    Subset s = a.empty_set();
    for (std::size_t j = i; j < order.size(); ++j) {
      s.insert(order[j]);
      out.push_back(s);
    }
  }
  return out;
}

using FiniteFn = std::function<void(FiniteCtx&, Tally&)>;

// ---------------------------------------------------------------------------
// Dense context

struct DenseCtx {
  const VerifyOptions& opt;
  std::uint64_t stream_seed(std::size_t k) const { return opt.seed + 0x9E3779B97F4A7C15ULL * (k + 1); }
};

using DenseFn = std::function<void(const DenseCtx&, CutSampler&, Tally&)>;

std::string show(const CutFilter& f) { return f.to_string(); }

CutFilter top() { return CutFilter::top(); }

/// Fixed cut pairs covering equal endpoints, the ends of the chain and
/// both kinds at each endpoint.
std::vector<CutFilter> template_cuts() {
  std::vector<CutFilter> out{CutFilter::zero_cut(), CutFilter::top()};
  for (auto p : {Rat(1, 1000), Rat(1, 3), Rat(1, 2), Rat(2, 3), Rat(999, 1000)}) {
    out.push_back(CutFilter::open(p));
    out.push_back(CutFilter::closed(p));
  }
  return out;
}

// A cut with the given endpoint and a random kind, kept proper.
CutFilter random_kind(CutSampler& s, const Rat& p) {
  if (p.is_zero()) return CutFilter::zero_cut();
  if (p.is_one()) return CutFilter::top();
  return s.rational() < Rat(1, 2) ? CutFilter::open(p) : CutFilter::closed(p);
}

// Three proper cuts nested by inclusion: first ⊆ second ⊆ third.
std::array<CutFilter, 3> nested_triple(CutSampler& s) {
  std::array<CutFilter, 3> t{s.proper_cut(), s.proper_cut(), s.proper_cut()};
  // inclusion is total on cuts
  for (int pass = 0; pass < 3; ++pass)
    for (int i = 0; i + 1 < 3; ++i)
      if (!t[i].is_subset_of(t[i + 1])) std::swap(t[i], t[i + 1]);
  return t;
}

struct Entry {
  StatementInfo info;
  FiniteFn finite;
  DenseFn dense;
};

std::vector<Entry> build_registry();

const std::vector<Entry>& registry() {
  static const std::vector<Entry> r = build_registry();
  return r;
}

std::vector<Entry> build_registry() {
  std::vector<Entry> r;
  auto fin = [&r](std::string id, std::string formula, FiniteFn fn) {
    r.push_back({{std::move(id), Scope::Finite, std::move(formula)}, std::move(fn), {}});
  };
  auto den = [&r](std::string id, std::string formula, DenseFn fn) {
    r.push_back({{std::move(id), Scope::Dense, std::move(formula)}, {}, std::move(fn)});
  };

  // ---- core and filters -------------------------------------------------
  fin("core:mv-axioms", "the tables satisfy the MV-algebra axioms", [](FiniteCtx& x, Tally& t) {
    auto rep = check_mv_axioms(x.a);
    t.set_counts(rep.instances_checked, rep.violations.size(), rep.passed() ? "" : rep.describe(x.a));
  });
  fin("filt:plus-involution", "F++ = F for prime F", [](FiniteCtx& x, Tally& t) {
    for (const auto& f : x.primes) {
      auto pp = x.c().plus(x.c().plus(f));
      t.check(pp == f, [&] { return cat("F=", show(f), " F++=", show(pp)); });
    }
  });
  fin("filt:plus-prime", "F+ is prime for prime F", [](FiniteCtx& x, Tally& t) {
    for (const auto& f : x.primes) {
      auto p = x.c().plus(f);
      t.check(is_prime_lattice_filter(p), [&] { return cat("F=", show(f), " F+=", show(p)); });
    }
  });
  fin("filt:kernel-inside", "K(F) is an implication filter with K(F) ⊆ F",
      [](FiniteCtx& x, Tally& t) {
        for (const auto& f : x.lattice) {
          auto k = x.c().kernel(f);
          t.check(k.members().is_subset_of(f.members()) &&
                      is_implication_filter_set(x.a, k.members()),
                  [&] { return cat("F=", show(f), " K=", show(k)); });
        }
      });
  fin("filt:kernel-prime", "K(F) prime iff F prime, over proper lattice filters",
      [](FiniteCtx& x, Tally& t) {
        for (const auto& f : x.lattice) {
          auto k = x.c().kernel(f);
          bool kp = is_prime_implication_filter(k), fp = is_prime_lattice_filter(f);
          t.check(kp == fp, [&] {
            return cat("F=", show(f), " prime=", fp, " K=", show(k), " prime=", kp);
          });
        }
      });

  // ---- subordinates and relative kernels -------------------------------
  fin("fact:a", "K(F;X) is a lattice filter for X ∩ F = ∅", [](FiniteCtx& x, Tally& t) {
    for (const auto& f : x.primes)
      for_each_subset(x.a, f.members().complement(), [&](const Subset& s) {
        auto k = x.c().kernel_rel(f, s);
        t.check(is_lattice_filter_set(x.a, k.members()),
                [&] { return cat("F=", show(f), " X=", describe_set(x.a, s), " K=", show(k)); });
      });
  });
  fin("fact:b", "F_a = K(F;{a}) for a ∉ F", [](FiniteCtx& x, Tally& t) {
    for (const auto& f : x.primes)
      for (Element e : f.members().complement().elements()) {
        Subset s = x.a.empty_set();
        s.insert(e);
        t.check(x.c().subordinate(f, e) == x.c().kernel_rel(f, s),
                [&] { return cat("F=", show(f), " a=", x.a.label(e)); });
      }
  });
  fin("fact:c", "K(F) = K(F; L∖F)", [](FiniteCtx& x, Tally& t) {
    for (const auto& f : x.primes) {
      auto lhs = x.c().kernel(f).as_filter();
      auto rhs = x.c().kernel_rel(f, f.members().complement());
      t.check(lhs == rhs, [&] { return cat("F=", show(f), " K=", show(lhs), " rel=", show(rhs)); });
    }
  });
  fin("fact:d", "F_a = F_b iff a, b share a K(F)-coset, for a, b ∉ F", [](FiniteCtx& x, Tally& t) {
    for (const auto& f : x.primes) {
      const auto& q = x.quotient(x.c().kernel(f));
      auto out = f.members().complement().elements();
      for (Element a : out)
        for (Element b : out) {
          bool same = x.c().subordinate(f, a) == x.c().subordinate(f, b);
          t.check(same == q.equivalent(a, b), [&] {
            return cat("F=", show(f), " a=", x.a.label(a), " b=", x.a.label(b));
          });
        }
    }
  });
  fin("fact:e", "K(F;X) = K(F;X↓) with X↓ the down-set of finite joins",
      [](FiniteCtx& x, Tally& t) {
        for (const auto& f : x.primes)
          for_each_subset(x.a, f.members().complement(), [&](const Subset& s) {
            auto down = down_closure_joins(x.a, s);
            t.check(x.c().kernel_rel(f, s) == x.c().kernel_rel(f, down),
                    [&] { return cat("F=", show(f), " X=", describe_set(x.a, s)); });
          });
      });
  fin("sub:antitone", "z ≤ x ∉ F implies F_x ⊆ F_z", [](FiniteCtx& x, Tally& t) {
    for (const auto& f : x.primes)
      for (Element e : f.members().complement().elements())
        for (Element z = 0; z < x.a.size(); ++z) {
          if (!x.a.leq(z, e)) continue;
          t.check(x.c().subordinate(f, e).is_subset_of(x.c().subordinate(f, z)), [&] {
            return cat("F=", show(f), " x=", x.a.label(e), " z=", x.a.label(z));
          });
        }
  });
  fin("sub:join", "F_(a∨b) is F_a or F_b for a, b ∉ F", [](FiniteCtx& x, Tally& t) {
    for (const auto& f : x.primes) {
      auto out = f.members().complement().elements();
      for (Element a : out)
        for (Element b : out) {
          auto j = x.c().subordinate(f, x.a.join(a, b));
          t.check(j == x.c().subordinate(f, a) || j == x.c().subordinate(f, b), [&] {
            return cat("F=", show(f), " a=", x.a.label(a), " b=", x.a.label(b));
          });
        }
    }
  });
  fin("sub:prime", "F_a is prime for prime F and a ∉ F", [](FiniteCtx& x, Tally& t) {
    for (const auto& f : x.primes)
      for (Element e : f.members().complement().elements()) {
        auto s = x.c().subordinate(f, e);
        t.check(is_prime_lattice_filter(s),
                [&] { return cat("F=", show(f), " a=", x.a.label(e), " F_a=", show(s)); });
      }
  });
  fin("prop:SubAEq", "K(F) = K(F_a) for a ∉ F", [](FiniteCtx& x, Tally& t) {
    for (const auto& f : x.primes)
      for (Element e : f.members().complement().elements()) {
        auto s = x.c().subordinate(f, e);
        t.check(x.c().kernel(f) == x.c().kernel(s),
                [&] { return cat("F=", show(f), " a=", x.a.label(e)); });
      }
  });

  // ---- the operation F ⊸ G ---------------------------------------------
  fin("prop:sqto-fast", "K(F∩G; L∖G) = {z | ∀f ∈ F∩G: f⊗z ∈ G}", [](FiniteCtx& x, Tally& t) {
    for (const auto& f : x.primes)
      for (const auto& g : x.primes) {
        auto d = x.c().sqto_definitional(f, g), q = x.c().sqto_fast(f, g);
        t.check(d == q, [&] {
          return cat("F=", show(f), " G=", show(g), " def=", show(d), " fast=", show(q));
        });
      }
  });
  fin("prop:incl", "F⊸G ⊆ G", [](FiniteCtx& x, Tally& t) {
    for (const auto& f : x.primes)
      for (const auto& g : x.primes)
        t.check(x.c().sqto(f, g).is_subset_of(g),
                [&] { return cat("F=", show(f), " G=", show(g)); });
  });
  fin("prop:inclOne", "G ⊆ F implies F⊸G = K(G)", [](FiniteCtx& x, Tally& t) {
    for (const auto& f : x.primes)
      for (const auto& g : x.primes) {
        if (!g.is_subset_of(f)) continue;
        t.check(x.c().sqto(f, g) == x.c().kernel(g).as_filter(),
                [&] { return cat("F=", show(f), " G=", show(g)); });
      }
  });
  fin("prop:self", "F⊸F = K(F)", [](FiniteCtx& x, Tally& t) {
    for (const auto& f : x.primes)
      t.check(x.c().sqto(f, f) == x.c().kernel(f).as_filter(), [&] { return show(f); });
  });
  fin("prop:monotone", "F ⊆ G1 ⊆ G2 implies F⊸G1 ⊆ F⊸G2", [](FiniteCtx& x, Tally& t) {
    for (const auto& f : x.primes)
      for (const auto& g1 : x.primes)
        for (const auto& g2 : x.primes) {
          if (!f.is_subset_of(g1) || !g1.is_subset_of(g2)) continue;
          t.check(x.c().sqto(f, g1).is_subset_of(x.c().sqto(f, g2)), [&] {
            return cat("F=", show(f), " G1=", show(g1), " G2=", show(g2));
          });
        }
  });
  fin("prop:revIncl", "F1 ⊆ F2 ⊆ G implies F2⊸G ⊆ F1⊸G", [](FiniteCtx& x, Tally& t) {
    for (const auto& f1 : x.primes)
      for (const auto& f2 : x.primes)
        for (const auto& g : x.primes) {
          if (!f1.is_subset_of(f2) || !f2.is_subset_of(g)) continue;
          t.check(x.c().sqto(f2, g).is_subset_of(x.c().sqto(f1, g)), [&] {
            return cat("F1=", show(f1), " F2=", show(f2), " G=", show(g));
          });
        }
  });
  fin("prop:plus", "F ⊆ G implies F⊸G = G+⊸F+", [](FiniteCtx& x, Tally& t) {
    for (const auto& f : x.primes)
      for (const auto& g : x.primes) {
        if (!f.is_subset_of(g)) continue;
        auto l = x.c().sqto(f, g), r = x.c().sqto(x.c().plus(g), x.c().plus(f));
        t.check(l == r, [&] {
          return cat("F=", show(f), " G=", show(g), " lhs=", show(l), " rhs=", show(r));
        });
      }
  });
  fin("prop:adjunction", "F, H ⊆ G: F ⊆ H⊸G iff H ⊆ F⊸G", [](FiniteCtx& x, Tally& t) {
    for (const auto& f : x.primes)
      for (const auto& h : x.primes)
        for (const auto& g : x.primes) {
          if (!f.is_subset_of(g) || !h.is_subset_of(g)) continue;
          bool l = f.is_subset_of(x.c().sqto(h, g)), r = h.is_subset_of(x.c().sqto(f, g));
          t.check(l == r, [&] { return cat("F=", show(f), " H=", show(h), " G=", show(g)); });
        }
  });
  fin("prop:axiomC", "F⊸(H⊸G) = H⊸(F⊸G)", [](FiniteCtx& x, Tally& t) {
    for (const auto& f : x.primes)
      for (const auto& h : x.primes)
        for (const auto& g : x.primes) {
          auto l = x.c().sqto(f, x.c().sqto(h, g)), r = x.c().sqto(h, x.c().sqto(f, g));
          t.check(l == r, [&] {
            return cat("F=", show(f), " H=", show(h), " G=", show(g), " lhs=", show(l),
                       " rhs=", show(r));
          });
        }
  });
  fin("prop:OneOne", "K(F)⊸F = F", [](FiniteCtx& x, Tally& t) {
    for (const auto& f : x.primes)
      t.check(x.c().sqto(x.c().kernel(f).as_filter(), f) == f, [&] { return show(f); });
  });
  fin("lem:FFg", "F ⊆ G implies F ⊆ (F⊸G)⊸G", [](FiniteCtx& x, Tally& t) {
    for (const auto& f : x.primes)
      for (const auto& g : x.primes) {
        if (!f.is_subset_of(g)) continue;
        t.check(f.is_subset_of(x.c().sqto(x.c().sqto(f, g), g)),
                [&] { return cat("F=", show(f), " G=", show(g)); });
      }
  });
  fin("cor:FFgG", "F ⊆ G implies F⊸G = ((F⊸G)⊸G)⊸G", [](FiniteCtx& x, Tally& t) {
    for (const auto& f : x.primes)
      for (const auto& g : x.primes) {
        if (!f.is_subset_of(g)) continue;
        auto fg = x.c().sqto(f, g);
        t.check(fg == x.c().sqto(x.c().sqto(fg, g), g),
                [&] { return cat("F=", show(f), " G=", show(g)); });
      }
  });

  // ---- Φ and T -----------------------------------------------------------
  fin("phi:unit", "Φ({1}, G) = G", [](FiniteCtx& x, Tally& t) {
    auto one = Filter::principal(x.a, x.a.one());
    for (const auto& g : x.primes)
      t.check(x.c().phi(one, g) == g, [&] { return show(g); });
  });
  fin("phi:sqto-plus", "Φ(F,G) = (F⊸G+)+ for all prime F, G", [](FiniteCtx& x, Tally& t) {
    for (const auto& f : x.primes)
      for (const auto& g : x.primes) {
        auto l = x.c().phi(f, g), r = x.c().plus(x.c().sqto(f, x.c().plus(g)));
        t.check(l == r, [&] {
          return cat("F=", show(f), " G=", show(g), " phi=", show(l), " (F⊸G+)+=", show(r));
        });
      }
  });
  fin("phi:sqto-plus-inside", "Φ(F,G) = (F⊸G+)+ when F ⊆ G+, and Φ(F,G) = L otherwise",
      [](FiniteCtx& x, Tally& t) {
        for (const auto& f : x.primes)
          for (const auto& g : x.primes) {
            auto gp = x.c().plus(g);
            auto l = x.c().phi(f, g);
            auto r = f.is_subset_of(gp) ? x.c().plus(x.c().sqto(f, gp)) : Filter::improper(x.a);
            t.check(l == r, [&] {
              return cat("F=", show(f), " G=", show(g), " phi=", show(l), " expected=", show(r));
            });
          }
      });
  fin("tensor:phi", "T(F,G) = Φ(F,G)", [](FiniteCtx& x, Tally& t) {
    for (const auto& f : x.primes)
      for (const auto& g : x.primes) {
        auto l = x.c().tensor_up(f, g), r = x.c().phi(f, g);
        t.check(l == r, [&] {
          return cat("F=", show(f), " G=", show(g), " T=", show(l), " phi=", show(r));
        });
      }
  });

  // ---- J_u and J_d -------------------------------------------------------
  fin("j:trivial-kernel", "J_u(F,{1}) = J_d(F,{1}) = F", [](FiniteCtx& x, Tally& t) {
    auto one = ImplicationFilter::trivial(x.a);
    for (const auto& f : x.primes)
      t.check(x.c().j_up(f, one) == f && x.c().j_down(f, one) == f, [&] { return show(f); });
  });
  fin("j:up-smallest", "J_u(F,P) is the least lattice filter H ⊇ F with P ⊆ K(H)",
      [](FiniteCtx& x, Tally& t) {
        std::vector<Filter> cands = x.lattice;
        cands.push_back(Filter::improper(x.a));
        for (const auto& f : x.primes)
          for (const auto& p : x.impl) {
            const auto& q = x.quotient(p);
            auto j = x.c().j_up(f, q);
            t.check(f.is_subset_of(j) && is_lattice_filter_set(x.a, j.members()) &&
                        p.is_subset_of(x.c().kernel(j)),
                    [&] { return cat("F=", show(f), " P=", show(p), " J_u=", show(j)); });
            for (const auto& h : cands) {
              if (!f.is_subset_of(h) || !p.is_subset_of(x.c().kernel(h))) continue;
              t.check(j.is_subset_of(h), [&] {
                return cat("F=", show(f), " P=", show(p), " J_u=", show(j), " H=", show(h));
              });
            }
          }
      });
  fin("j:up-kernel-join", "K(J_u(F,P)) = K(F) ∨ P for prime F, P with J_u proper",
      [](FiniteCtx& x, Tally& t) {
        for (const auto& f : x.primes)
          for (const auto& p : x.prime_impl) {
            auto j = x.c().j_up(f, x.quotient(p));
            if (!j.is_proper()) continue;
            auto l = x.c().kernel(j), r = implication_join(x.c().kernel(f), p);
            t.check(l == r, [&] {
              return cat("F=", show(f), " P=", show(p), " K(J_u)=", show(l), " join=", show(r));
            });
          }
      });
  fin("j:down-largest",
      "J_d(F,P) is the greatest lattice filter H ⊆ F with P ⊆ K(H), empty when none exists",
      [](FiniteCtx& x, Tally& t) {
        for (const auto& f : x.primes)
          for (const auto& p : x.impl) {
            auto j = x.c().j_down(f, x.quotient(p));
            if (!j.is_bottom())
              t.check(j.is_subset_of(f) && is_lattice_filter_set(x.a, j.members()) &&
                          p.is_subset_of(x.c().kernel(j)),
                      [&] { return cat("F=", show(f), " P=", show(p), " J_d=", show(j)); });
            for (const auto& h : x.lattice) {
              if (!h.is_subset_of(f) || !p.is_subset_of(x.c().kernel(h))) continue;
              t.check(h.is_subset_of(j), [&] {
                return cat("F=", show(f), " P=", show(p), " J_d=", show(j), " H=", show(h));
              });
            }
          }
      });
  fin("lem:Jd-kernel", "F ⊆ G prime implies F ⊆ J_d(G, K(F))", [](FiniteCtx& x, Tally& t) {
    for (const auto& f : x.primes)
      for (const auto& g : x.primes) {
        if (!f.is_subset_of(g)) continue;
        t.check(f.is_subset_of(x.c().j_down(g, x.c().kernel(f))),
                [&] { return cat("F=", show(f), " G=", show(g)); });
      }
  });
  fin("thm:reduction", "F ⊆ G: F⊸G = J_u(F,K(G)) ⊸ J_d(G,K(F))", [](FiniteCtx& x, Tally& t) {
    for (const auto& f : x.primes)
      for (const auto& g : x.primes) {
        if (!f.is_subset_of(g)) continue;
        auto r = x.c().reduce_to_common_kernel(f, g);
        t.check(r.theorem_holds, [&] { return cat("F=", show(f), " G=", show(g)); });
      }
  });
  fin("prop:reduction-up", "F ⊆ G: F⊸G = J_u(F,K(G)) ⊸ G", [](FiniteCtx& x, Tally& t) {
    for (const auto& f : x.primes)
      for (const auto& g : x.primes) {
        if (!f.is_subset_of(g)) continue;
        auto r = x.c().reduce_to_common_kernel(f, g);
        t.check(r.up_step_holds, [&] { return cat("F=", show(f), " G=", show(g)); });
      }
  });
  fin("cor:reduction-down", "F ⊆ G: F⊸G = F ⊸ J_d(G,K(F))", [](FiniteCtx& x, Tally& t) {
    for (const auto& f : x.primes)
      for (const auto& g : x.primes) {
        if (!f.is_subset_of(g)) continue;
        auto r = x.c().reduce_to_common_kernel(f, g);
        t.check(r.down_step_holds, [&] { return cat("F=", show(f), " G=", show(g)); });
      }
  });

  // ---- quotients and kernels ---------------------------------------------
  fin("quot:image", "F ⊆ G, Q ⊆ K(G): (F⊸G)/Q = (F/Q)⊸(G/Q)", [](FiniteCtx& x, Tally& t) {
    for (const auto& f : x.primes)
      for (const auto& g : x.primes) {
        if (!f.is_subset_of(g)) continue;
        auto kg = x.c().kernel(g);
        for (const auto& q : x.impl) {
          if (!q.is_subset_of(kg)) continue;
          auto r = x.c().sqto_quotient_commutes(f, g, q);
          t.check(r.image_identity, [&] {
            return cat("F=", show(f), " G=", show(g), " Q=", show(q), " ", r.witness);
          });
        }
      }
  });
  fin("quot:preimage", "F ⊆ G, Q ⊆ K(F) = K(G): η⁻¹[F/Q ⊸ G/Q] = F⊸G",
      [](FiniteCtx& x, Tally& t) {
        for (const auto& f : x.primes)
          for (const auto& g : x.primes) {
            if (!f.is_subset_of(g)) continue;
            auto kf = x.c().kernel(f), kg = x.c().kernel(g);
            if (!(kf == kg)) continue;
            for (const auto& q : x.impl) {
              if (!q.is_subset_of(kg)) continue;
              auto r = x.c().sqto_quotient_commutes(f, g, q);
              t.check(r.preimage_identity.value_or(false), [&] {
                return cat("F=", show(f), " G=", show(g), " Q=", show(q), " ", r.witness);
              });
            }
          }
      });
  fin("thm:kernel-sqto", "F ⊆ G, K(F) = K(G) implies K(F⊸G) = K(F)", [](FiniteCtx& x, Tally& t) {
    for (const auto& f : x.primes)
      for (const auto& g : x.primes) {
        if (!f.is_subset_of(g) || !(x.c().kernel(f) == x.c().kernel(g))) continue;
        bool ok = true;
        try {
          ok = x.c().kernel_of_sqto(f, g) == x.c().kernel(f);
        } catch (const InvariantViolation&) {
          ok = false;
        }
        t.check(ok, [&] { return cat("F=", show(f), " G=", show(g)); });
      }
  });
  fin("cor:kernel-sqto", "F ⊆ G, K(F) = K(G) implies K(F) ⊆ K(F⊸G)", [](FiniteCtx& x, Tally& t) {
    for (const auto& f : x.primes)
      for (const auto& g : x.primes) {
        if (!f.is_subset_of(g) || !(x.c().kernel(f) == x.c().kernel(g))) continue;
        t.check(x.c().kernel(f).is_subset_of(x.c().kernel(x.c().sqto(f, g))),
                [&] { return cat("F=", show(f), " G=", show(g)); });
      }
  });

  // ---- convexity and the discrete case ----------------------------------
  auto convex = [](int which) {
    return [which](FiniteCtx& x, Tally& t) {
      if (!x.a.is_linearly_ordered()) return t.skip("algebra is not linearly ordered");
      for (const auto& c : chain_intervals(x.a))
        for (Element e = 0; e < x.a.size(); ++e) {
          auto r = x.c().convex_image_checks(c, e);
          bool ok = which == 0 ? r.implies_image_convex
                               : which == 1 ? r.neg_image_convex : r.otimes_image_convex;
          t.check(ok, [&] {
            return cat("C=", describe_set(x.a, c), " a=", x.a.label(e), " ", r.witness);
          });
        }
    };
  };
  fin("conv:implies", "{z→a | z ∈ C} is convex for convex C", convex(0));
  fin("conv:neg", "{¬z | z ∈ C} is convex for convex C", convex(1));
  fin("conv:otimes", "{z⊗a | z ∈ C} is convex for convex C", convex(2));
  fin("disc:successor", "a finite chain has a successor c of 0; x⊕c and x⊖c are neighbours",
      [](FiniteCtx& x, Tally& t) {
        if (!x.a.is_linearly_ordered()) return t.skip("algebra is not linearly ordered");
        std::optional<SuccessorStructure> s;
        try {
          s = successor_structure(x.a);
        } catch (const InvariantViolation& e) {
          return t.check(false, [&] { return std::string(e.what()); });
        }
        t.check(s.has_value() || x.a.size() < 2, [] { return std::string("no successor of 0"); });
        if (!s) return;
        auto order = x.a.chain_order();
        for (std::size_t i = 0; i < order.size(); ++i) {
          if (i + 1 < order.size())
            t.check(s->succ[order[i]] == order[i + 1],
                    [&] { return cat("succ of ", x.a.label(order[i])); });
          if (i > 0)
            t.check(s->pred[order[i]] == order[i - 1],
                    [&] { return cat("pred of ", x.a.label(order[i])); });
        }
      });
  fin("disc:principal", "in a finite chain every filter with kernel {1} is principal",
      [](FiniteCtx& x, Tally& t) {
        if (!x.a.is_linearly_ordered()) return t.skip("algebra is not linearly ordered");
        auto one = ImplicationFilter::trivial(x.a);
        for (const auto& f : x.lattice) {
          if (!(x.c().kernel(f) == one)) continue;
          t.check(principality(f).is_principal, [&] { return show(f); });
        }
      });
  fin("equiv:discrete", "in a finite chain F ≡ G iff F = G", [](FiniteCtx& x, Tally& t) {
    if (!x.a.is_linearly_ordered()) return t.skip("algebra is not linearly ordered");
    for (const auto& f : x.primes)
      for (const auto& g : x.primes)
        t.check(x.c().equiv(f, g) == (f == g), [&] { return cat("F=", show(f), " G=", show(g)); });
  });

  // ---- boundary cosets -----------------------------------------------------
  auto boundary_targets = [](FiniteCtx& x) {
    auto out = x.prime_impl;
    out.push_back(ImplicationFilter::whole(x.a));
    return out;
  };
  fin("bnd:unique", "K(F) ⊊ P: exactly one P-coset meets both F and L∖F",
      [boundary_targets](FiniteCtx& x, Tally& t) {
        for (const auto& p : boundary_targets(x))
          for (const auto& f : x.primes) {
            auto k = x.c().kernel(f);
            if (!k.members().is_proper_subset_of(p.members())) continue;
            bool ok = true;
            std::string why;
            try {
              (void)x.c().boundary_coset(f, x.quotient(p));
            } catch (const InvariantViolation& e) {
              ok = false;
              why = e.what();
            }
            t.check(ok, [&] { return cat("F=", show(f), " P=", show(p), " ", why); });
          }
      });
  fin("bnd:plus-neg", "q(F+) = ¬q(F)", [boundary_targets](FiniteCtx& x, Tally& t) {
    for (const auto& p : boundary_targets(x))
      for (const auto& f : x.primes) {
        auto fp = x.c().plus(f);
        if (!x.c().kernel(f).members().is_proper_subset_of(p.members()) ||
            !x.c().kernel(fp).members().is_proper_subset_of(p.members()))
          continue;
        const auto& q = x.quotient(p);
        auto cf = x.c().boundary_coset(f, q), cp = x.c().boundary_coset(fp, q);
        t.check(q.quotient().neg(cf) == cp, [&] { return cat("F=", show(f), " P=", show(p)); });
      }
  });

  // ---- hat algebras --------------------------------------------------------
  // Runs `body` for every prime P whose hat was built.
  auto each_hat = [](auto body) {
    return [body](FiniteCtx& x, Tally& t) {
      bool any = false;
      for (const auto& e : x.hats()) {
        if (!e.hat) continue;
        any = true;
        body(x, e.p, *e.hat, t);
      }
      if (!any && x.hats().empty()) t.skip("no prime implication filters");
    };
  };
  fin("hat:build",
      "≡ is an equivalence and a congruence for + and ⊸ on PSpec(P), which is closed under both",
      [](FiniteCtx& x, Tally& t) {
        for (const auto& e : x.hats())
          t.check(e.hat.has_value(), [&] { return cat("P=", show(e.p), " ", e.error); });
      });
  fin("hat:mv-axioms", "PSpec(P)/≡ with + and ⊸ is an MV-algebra",
      each_hat([](FiniteCtx&, const ImplicationFilter& p, const HatAlgebra& h, Tally& t) {
        auto rep = check_mv_axioms(h.as_mv());
        t.check(rep.passed(), [&] { return cat("P=", show(p), " ", rep.describe(h.as_mv())); });
      }));
  fin("hat:total-order", "the order of PSpec(P)/≡ is total",
      each_hat([](FiniteCtx&, const ImplicationFilter& p, const HatAlgebra& h, Tally& t) {
        t.check(h.as_mv().is_linearly_ordered(), [&] { return cat("P=", show(p)); });
      }));
  fin("hat:bounds", "0 ≤ F ≤ 1, with 0 the largest member of PSpec(P) and 1 the class of P",
      each_hat([](FiniteCtx&, const ImplicationFilter& p, const HatAlgebra& h, Tally& t) {
        const auto& members = h.spectrum().members();
        const auto& zero = h.classes()[h.zero_class()].representative;
        bool largest = std::all_of(members.begin(), members.end(),
                                   [&](const Filter& f) { return f.is_subset_of(zero); });
        t.check(largest && h.classes()[h.one_class()].representative == p.as_filter(),
                [&] { return cat("P=", show(p)); });
        for (std::size_t k = 0; k < h.size(); ++k)
          t.check(h.as_mv().leq(h.zero_class(), k) && h.as_mv().leq(k, h.one_class()),
                  [&] { return cat("P=", show(p), " class ", k); });
      }));
  fin("hat:order", "F ≤ G iff F⊸G = 1, which in a finite algebra means G ⊆ F",
      each_hat([](FiniteCtx& x, const ImplicationFilter& p, const HatAlgebra& h, Tally& t) {
        for (const auto& f : h.spectrum().members())
          for (const auto& g : h.spectrum().members()) {
            bool le = x.c().sqto(f, g) == p.as_filter();
            bool cls = h.as_mv().leq(*h.class_of(f), *h.class_of(g));
            t.check(le == g.is_subset_of(f) && le == cls,
                    [&] { return cat("P=", show(p), " F=", show(f), " G=", show(g)); });
          }
      }));
  fin("hat:item-b", "F ≤ G iff G+ ≤ F+",
      each_hat([](FiniteCtx&, const ImplicationFilter& p, const HatAlgebra& h, Tally& t) {
        const auto& m = h.as_mv();
        for (std::size_t a = 0; a < h.size(); ++a)
          for (std::size_t b = 0; b < h.size(); ++b)
            t.check(m.leq(a, b) == m.leq(h.plus(b), h.plus(a)),
                    [&] { return cat("P=", show(p), " classes ", a, ",", b); });
      }));
  fin("hat:item-c", "F⊸(H⊸G) = H⊸(F⊸G) on PSpec(P)",
      each_hat([](FiniteCtx& x, const ImplicationFilter& p, const HatAlgebra& h, Tally& t) {
        const auto& ms = h.spectrum().members();
        for (const auto& f : ms)
          for (const auto& hh : ms)
            for (const auto& g : ms)
              t.check(x.c().sqto(f, x.c().sqto(hh, g)) == x.c().sqto(hh, x.c().sqto(f, g)), [&] {
                return cat("P=", show(p), " F=", show(f), " H=", show(hh), " G=", show(g));
              });
      }));
  fin("hat:item-d", "F⊸F = K(F) = 1 on PSpec(P)",
      each_hat([](FiniteCtx& x, const ImplicationFilter& p, const HatAlgebra& h, Tally& t) {
        for (const auto& f : h.spectrum().members())
          t.check(x.c().sqto(f, f) == p.as_filter() &&
                      h.sqto(*h.class_of(f), *h.class_of(f)) == h.one_class(),
                  [&] { return cat("P=", show(p), " F=", show(f)); });
      }));
  fin("hat:item-e", "F⊸G = G+⊸F+ on PSpec(P)",
      each_hat([](FiniteCtx& x, const ImplicationFilter& p, const HatAlgebra& h, Tally& t) {
        const auto& ms = h.spectrum().members();
        for (const auto& f : ms)
          for (const auto& g : ms)
            t.check(x.c().sqto(f, g) == x.c().sqto(x.c().plus(g), x.c().plus(f)),
                    [&] { return cat("P=", show(p), " F=", show(f), " G=", show(g)); });
      }));
  fin("hat:item-g", "(F⊸G)⊸G = (G⊸F)⊸F on PSpec(P)",
      each_hat([](FiniteCtx& x, const ImplicationFilter& p, const HatAlgebra& h, Tally& t) {
        const auto& ms = h.spectrum().members();
        for (const auto& f : ms)
          for (const auto& g : ms) {
            auto l = x.c().sqto(x.c().sqto(f, g), g), r = x.c().sqto(x.c().sqto(g, f), f);
            t.check(l == r, [&] {
              return cat("P=", show(p), " F=", show(f), " G=", show(g), " lhs=", show(l),
                         " rhs=", show(r));
            });
          }
      }));
  fin("hat:item-h", "(F∨G)⊸H = (F⊸H)∧(G⊸H) on PSpec(P)",
      each_hat([](FiniteCtx& x, const ImplicationFilter& p, const HatAlgebra& h, Tally& t) {
        const auto& ms = h.spectrum().members();
        for (const auto& f : ms)
          for (const auto& g : ms)
            for (const auto& hh : ms) {
              // the join in the class order is the smaller filter
              auto l = x.c().sqto(x.meet_set(f, g), hh);
              auto r = x.join_set(x.c().sqto(f, hh), x.c().sqto(g, hh));
              t.check(l == r, [&] {
                return cat("P=", show(p), " F=", show(f), " G=", show(g), " H=", show(hh));
              });
            }
      }));
  fin("hat:item-i", "(F∧G)⊸H = (F⊸H)∨(G⊸H) on PSpec(P)",
      each_hat([](FiniteCtx& x, const ImplicationFilter& p, const HatAlgebra& h, Tally& t) {
        const auto& ms = h.spectrum().members();
        for (const auto& f : ms)
          for (const auto& g : ms)
            for (const auto& hh : ms) {
              auto l = x.c().sqto(x.join_set(f, g), hh);
              auto r = x.meet_set(x.c().sqto(f, hh), x.c().sqto(g, hh));
              t.check(l == r, [&] {
                return cat("P=", show(p), " F=", show(f), " G=", show(g), " H=", show(hh));
              });
            }
      }));
  fin("hat:axiomG", "F ⊆ G in PSpec(P) implies (F⊸G)⊸G ≡ F",
      each_hat([](FiniteCtx& x, const ImplicationFilter& p, const HatAlgebra& h, Tally& t) {
        const auto& ms = h.spectrum().members();
        for (const auto& f : ms)
          for (const auto& g : ms) {
            if (!f.is_subset_of(g)) continue;
            auto fg = x.c().sqto(x.c().sqto(f, g), g);
            t.check(x.c().equiv(f, fg),
                    [&] { return cat("P=", show(p), " F=", show(f), " G=", show(g)); });
          }
      }));
  fin("hat:T-phi", "T(F,G) = Φ(F,G) on PSpec(P)",
      each_hat([](FiniteCtx& x, const ImplicationFilter& p, const HatAlgebra& h, Tally& t) {
        for (std::size_t a = 0; a < h.size(); ++a)
          for (std::size_t b = 0; b < h.size(); ++b) {
            auto r = hat_otimes_agreement(x.c(), h, a, b);
            t.check(r.tensor_matches_phi(), [&] {
              return cat("P=", show(p), " T=", show(r.tensor), " phi=", show(r.phi));
            });
          }
      }));
  fin("hat:otimes-formula", "T(F,G) = Φ(F,G) = (F⊸G+)+ on PSpec(P)",
      each_hat([](FiniteCtx& x, const ImplicationFilter& p, const HatAlgebra& h, Tally& t) {
        for (std::size_t a = 0; a < h.size(); ++a)
          for (std::size_t b = 0; b < h.size(); ++b) {
            auto r = hat_otimes_agreement(x.c(), h, a, b);
            t.check(r.tensor_matches_formula() && r.phi_matches_formula(), [&] {
              return cat("P=", show(p), " F=", show(h.classes()[a].representative),
                         " G=", show(h.classes()[b].representative), " T=", show(r.tensor),
                         " phi=", show(r.phi), " (F⊸G+)+=", show(r.formula));
            });
          }
      }));
  fin("hat:discrete-collapse", "L linearly ordered, P = {1}: PSpec(P)/≡ is isomorphic to L",
      [](FiniteCtx& x, Tally& t) {
        if (!x.a.is_linearly_ordered()) return t.skip("algebra is not linearly ordered");
        auto one = ImplicationFilter::trivial(x.a);
        for (const auto& e : x.hats()) {
          if (!(e.p == one) || !e.hat) continue;
          t.check(chain_isomorphism(e.hat->as_mv(), x.a).has_value(), [&] {
            return cat("hat has ", e.hat->size(), " classes, L has ", x.a.size(), " elements");
          });
        }
      });
  fin("hat:discrete-size", "PSpec(P)/≡ is the chain with one element fewer than L/P",
      each_hat([](FiniteCtx& x, const ImplicationFilter& p, const HatAlgebra& h, Tally& t) {
        std::size_t m = x.quotient(p).coset_count();
        bool ok = m == 2 ? h.size() == 1
                         : m > 2 && chain_isomorphism(h.as_mv(), make_lukasiewicz_chain(m - 1))
                                        .has_value();
        t.check(ok, [&] { return cat("P=", show(p), " |L/P|=", m, " |hat|=", h.size()); });
      }));

  // ---- iota and eta-hat --------------------------------------------------
  fin("iota:domain", "P_a is empty exactly on the coset of 1",
      each_hat([](FiniteCtx& x, const ImplicationFilter& p, const HatAlgebra& h, Tally& t) {
        const auto& q = x.quotient(p);
        auto r = iota(x.c(), h, q);
        for (std::size_t c = 0; c < q.coset_count(); ++c)
          t.check(r.class_of_coset[c].has_value() == (c != q.coset_of(x.a.one())),
                  [&] { return cat("P=", show(p), " coset ", c); });
      }));
  fin("iota:injective", "[a] ↦ P_a is injective where defined",
      each_hat([](FiniteCtx& x, const ImplicationFilter& p, const HatAlgebra& h, Tally& t) {
        auto r = iota(x.c(), h, x.quotient(p));
        t.check(r.injective, [&] { return cat("P=", show(p)); });
      }));
  fin("iota:onto", "every class of PSpec(P)/≡ is some P_a",
      each_hat([](FiniteCtx& x, const ImplicationFilter& p, const HatAlgebra& h, Tally& t) {
        auto r = iota(x.c(), h, x.quotient(p));
        t.check(r.onto, [&] { return cat("P=", show(p)); });
      }));
  fin("iota:sqto-form", "P_a⊸P_b = η⁻¹[up-set of [a→b]] for a, b outside the coset of 1",
      each_hat([](FiniteCtx& x, const ImplicationFilter& p, const HatAlgebra&, Tally& t) {
        const auto& q = x.quotient(p);
        Filter pf = p.as_filter();
        auto top = q.coset_of(x.a.one());
        for (Element a : q.representatives())
          for (Element b : q.representatives()) {
            if (q.coset_of(a) == top || q.coset_of(b) == top) continue;
            Subset s = q.quotient().empty_set();
            s.insert(q.coset_of(x.a.implies(a, b)));
            Filter expect(x.a, q.preimage(up_closure(q.quotient(), s)));
            auto got = x.c().sqto(x.c().subordinate(pf, a), x.c().subordinate(pf, b));
            t.check(got == expect, [&] {
              return cat("P=", show(p), " a=", x.a.label(a), " b=", x.a.label(b),
                         " got=", show(got), " expected=", show(expect));
            });
          }
      }));
  fin("iota:morphism", "for non-discrete L/P, [a] ↦ P_a is an injective MV-morphism",
      [](FiniteCtx&, Tally& t) { t.skip("hypothesis fails: L/P is finite, hence discrete"); });
  auto nested = [](auto body) {
    return [body](FiniteCtx& x, Tally& t) {
      for (const auto& e : x.hats()) {
        if (!e.hat) continue;
        for (const auto& q : x.prime_impl)
          if (e.p.members().is_proper_subset_of(q.members())) body(x, e, q, t);
      }
      t.note("nested prime pairs P ⊊ Q");
    };
  };
  fin("eta:morphism", "P ⊊ Q prime: F ↦ q_Q(F) is a well-defined MV-morphism",
      nested([](FiniteCtx& x, const HatEntry& e, const ImplicationFilter& q, Tally& t) {
        auto r = hat_eta(x.c(), *e.hat, x.quotient(q));
        t.check(r.well_defined && r.preserves_plus && r.preserves_sqto && r.preserves_one,
                [&] { return cat("P=", show(e.p), " Q=", show(q), " ", r.witness); });
      }));
  fin("eta:composite", "P ⊊ Q prime: the composite with ι_P is [a]_P ↦ [a]_Q",
      nested([](FiniteCtx& x, const HatEntry& e, const ImplicationFilter& q, Tally& t) {
        auto r = hat_eta(x.c(), *e.hat, x.quotient(q));
        t.check(r.composite_ok(),
                [&] { return cat("P=", show(e.p), " Q=", show(q), " ", r.witness); });
      }));

  // ---- dense chain ---------------------------------------------------------
  auto pairs = [](auto body) {
    return [body](const DenseCtx& d, CutSampler& s, Tally& t) {
      auto tmpl = template_cuts();
      for (const auto& f : tmpl)
        for (const auto& g : tmpl) body(f, g, t);
      for (std::size_t i = 0; i < d.opt.dense_pairs; ++i) {
        auto f = s.proper_cut();
        // every fourth pair shares the endpoint
        auto g = i % 4 == 0 ? random_kind(s, f.endpoint) : s.proper_cut();
        body(f, g, t);
      }
    };
  };
  den("dense:plus-closed", "]p,1]+ = [¬p,1] and [p,1]+ = ]¬p,1], against the oracle",
      [](const DenseCtx& d, CutSampler& s, Tally& t) {
        auto check = [&](const CutFilter& f) {
          auto l = cut_plus(f), r = oracle_plus(f);
          t.check(l == r, [&] { return cat("F=", show(f), " closed=", show(l), " oracle=", show(r)); });
        };
        for (const auto& f : template_cuts()) check(f);
        for (std::size_t i = 0; i < d.opt.dense_pairs; ++i) check(s.proper_cut());
      });
  den("dense:plus-involution", "F++ = F", [](const DenseCtx& d, CutSampler& s, Tally& t) {
    for (std::size_t i = 0; i < d.opt.dense_triples; ++i) {
      auto f = s.proper_cut();
      t.check(cut_plus(cut_plus(f)) == f, [&] { return show(f); });
    }
  });
  den("dense:sqto-closed", "closed forms of F⊸G for cuts agree with the oracle",
      pairs([](const CutFilter& f, const CutFilter& g, Tally& t) {
        auto l = cut_sqto(f, g), r = oracle_sqto(f, g);
        t.check(l == r, [&] {
          return cat("F=", show(f), " G=", show(g), " closed=", show(l), " oracle=", show(r));
        });
      }));
  den("dense:kernel-trivial", "K(F) = {1} for every proper cut",
      [](const DenseCtx& d, CutSampler& s, Tally& t) {
        for (const auto& f : template_cuts())
          t.check(oracle_kernel(f) == top(), [&] { return show(f); });
        for (std::size_t i = 0; i < d.opt.dense_triples; ++i) {
          auto f = s.proper_cut();
          t.check(oracle_kernel(f) == top(), [&] { return show(f); });
        }
      });
  den("dense:equiv-thm", "F⊸G = {1} iff G ⊆ F or G = [g,1] and F = ]g,1]",
      pairs([](const CutFilter& f, const CutFilter& g, Tally& t) {
        bool one = oracle_sqto(f, g) == top();
        bool rhs = g.is_subset_of(f) || (g.kind == CutKind::Closed && f.kind == CutKind::Open &&
                                         f.endpoint == g.endpoint);
        t.check(one == rhs, [&] { return cat("F=", show(f), " G=", show(g)); });
      }));
  den("dense:equiv-endpoints", "F ≡ G iff F and G have the same endpoint",
      pairs([](const CutFilter& f, const CutFilter& g, Tally& t) {
        t.check(cut_equiv(f, g) == cut_equiv_definitional(f, g) &&
                    cut_equiv(f, g) == (f.endpoint == g.endpoint),
                [&] { return cat("F=", show(f), " G=", show(g)); });
      }));
  den("dense:two-point", "F1 ⊆ F2 ⊆ G with points strictly between the F endpoints: F1⊸G ≠ F2⊸G",
      [](const DenseCtx& d, CutSampler& s, Tally& t) {
        for (std::size_t i = 0; i < d.opt.dense_triples; ++i) {
          auto [f1, f2, g] = nested_triple(s);
          if (!(f2.endpoint < f1.endpoint)) continue;
          t.check(!(oracle_sqto(f1, g) == oracle_sqto(f2, g)),
                  [&] { return cat("F1=", show(f1), " F2=", show(f2), " G=", show(g)); });
        }
      });
  den("dense:two-point-one", "F1 ⊊ F2 with points strictly between the endpoints: F1⊸F2 ≠ {1}",
      [](const DenseCtx& d, CutSampler& s, Tally& t) {
        for (std::size_t i = 0; i < d.opt.dense_triples; ++i) {
          auto f1 = s.proper_cut(), f2 = s.proper_cut();
          if (f1.endpoint < f2.endpoint) std::swap(f1, f2);
          if (!(f2.endpoint < f1.endpoint)) continue;
          t.check(!(oracle_sqto(f1, f2) == top()),
                  [&] { return cat("F1=", show(f1), " F2=", show(f2)); });
        }
      });
  den("dense:negate", "F⊸]0,1] = F+", [](const DenseCtx& d, CutSampler& s, Tally& t) {
    for (std::size_t i = 0; i < d.opt.dense_triples; ++i) {
      auto f = s.proper_cut();
      t.check(oracle_sqto(f, CutFilter::zero_cut()) == oracle_plus(f), [&] { return show(f); });
    }
  });
  // triples biased towards satisfying the hypotheses
  auto triples = [](auto body) {
    return [body](const DenseCtx& d, CutSampler& s, Tally& t) {
      for (std::size_t i = 0; i < d.opt.dense_triples; ++i) {
        CutFilter f, g, h;
        switch (i % 3) {
          case 0: {
            auto n = nested_triple(s);
            f = n[2], g = n[1], h = n[0];
            break;
          }
          case 1: {
            auto p = s.rational();
            f = random_kind(s, p), g = random_kind(s, p), h = random_kind(s, p);
            break;
          }
          default:
            f = s.proper_cut(), g = s.proper_cut(), h = s.proper_cut();
        }
        body(f, g, h, t);
      }
    };
  };
  den("dense:equiv-transitive", "F⊸G = G⊸H = {1} implies F⊸H = {1}; ≡ is transitive",
      triples([](const CutFilter& f, const CutFilter& g, const CutFilter& h, Tally& t) {
        if (oracle_sqto(f, g) == top() && oracle_sqto(g, h) == top())
          t.check(oracle_sqto(f, h) == top(),
                  [&] { return cat("F=", show(f), " G=", show(g), " H=", show(h)); });
        if (cut_equiv_definitional(f, g) && cut_equiv_definitional(g, h))
          t.check(cut_equiv_definitional(f, h),
                  [&] { return cat("F=", show(f), " G=", show(g), " H=", show(h)); });
      }));
  den("dense:congruence", "F⊸G = {1} implies (G⊸H)⊸(F⊸H) = {1}",
      triples([](const CutFilter& f, const CutFilter& g, const CutFilter& h, Tally& t) {
        if (!(oracle_sqto(f, g) == top())) return;
        t.check(oracle_sqto(oracle_sqto(g, h), oracle_sqto(f, h)) == top(),
                [&] { return cat("F=", show(f), " G=", show(g), " H=", show(h)); });
      }));
  den("dense:incl", "F⊸G ⊆ G for cuts", pairs([](const CutFilter& f, const CutFilter& g, Tally& t) {
        t.check(oracle_sqto(f, g).is_subset_of(g), [&] { return cat("F=", show(f), " G=", show(g)); });
      }));
  den("dense:inclOne", "G ⊆ F implies F⊸G = {1} for cuts",
      pairs([](const CutFilter& f, const CutFilter& g, Tally& t) {
        if (!g.is_subset_of(f)) return;
        t.check(oracle_sqto(f, g) == top(), [&] { return cat("F=", show(f), " G=", show(g)); });
      }));
  den("dense:OneOne", "{1}⊸F = F for cuts", [](const DenseCtx& d, CutSampler& s, Tally& t) {
    for (std::size_t i = 0; i < d.opt.dense_triples; ++i) {
      auto f = s.proper_cut();
      t.check(oracle_sqto(top(), f) == f, [&] { return show(f); });
    }
  });
  den("dense:revIncl", "F1 ⊆ F2 ⊆ G implies F2⊸G ⊆ F1⊸G for cuts",
      [](const DenseCtx& d, CutSampler& s, Tally& t) {
        for (std::size_t i = 0; i < d.opt.dense_triples; ++i) {
          auto [f1, f2, g] = nested_triple(s);
          t.check(oracle_sqto(f2, g).is_subset_of(oracle_sqto(f1, g)),
                  [&] { return cat("F1=", show(f1), " F2=", show(f2), " G=", show(g)); });
        }
      });
  den("dense:plus", "F ⊆ G implies F⊸G = G+⊸F+ for cuts",
      pairs([](const CutFilter& f, const CutFilter& g, Tally& t) {
        if (!f.is_subset_of(g)) return;
        t.check(oracle_sqto(f, g) == oracle_sqto(cut_plus(g), cut_plus(f)),
                [&] { return cat("F=", show(f), " G=", show(g)); });
      }));
  den("dense:axiomC", "F⊸(H⊸G) = H⊸(F⊸G) for cuts",
      triples([](const CutFilter& f, const CutFilter& h, const CutFilter& g, Tally& t) {
        t.check(oracle_sqto(f, oracle_sqto(h, g)) == oracle_sqto(h, oracle_sqto(f, g)),
                [&] { return cat("F=", show(f), " H=", show(h), " G=", show(g)); });
      }));
  den("dense:FFg", "F ⊆ G implies F ⊆ (F⊸G)⊸G for cuts",
      pairs([](const CutFilter& f, const CutFilter& g, Tally& t) {
        if (!f.is_subset_of(g)) return;
        t.check(f.is_subset_of(oracle_sqto(oracle_sqto(f, g), g)),
                [&] { return cat("F=", show(f), " G=", show(g)); });
      }));
  den("dense:FFgG", "F ⊆ G implies F⊸G = ((F⊸G)⊸G)⊸G for cuts",
      pairs([](const CutFilter& f, const CutFilter& g, Tally& t) {
        if (!f.is_subset_of(g)) return;
        auto fg = oracle_sqto(f, g);
        t.check(fg == oracle_sqto(oracle_sqto(fg, g), g),
                [&] { return cat("F=", show(f), " G=", show(g)); });
      }));
  den("dense:hat-ops", "on classes: [q]⊸[p] = [q→p] and [p]+ = [¬p]",
      [](const DenseCtx& d, CutSampler& s, Tally& t) {
        for (std::size_t i = 0; i < d.opt.dense_triples; ++i) {
          auto q = s.proper_cut(), p = s.proper_cut();
          auto lhs = HatPoint::of(oracle_sqto(q, p));
          t.check(lhs == hat_sqto(HatPoint::of(q), HatPoint::of(p)) &&
                      HatPoint::of(oracle_plus(q)) == hat_plus(HatPoint::of(q)),
                  [&] { return cat("F=", show(q), " G=", show(p)); });
        }
      });
  den("dense:iota-morphism", "a ↦ class of ]a,1] is an injective MV-morphism on {k/d}, d ≤ 12",
      [](const DenseCtx&, CutSampler&, Tally& t) {
        for (int dd = 1; dd <= 12; ++dd) {
          auto r = check_dense_embedding(dd);
          t.check(r.passed(), [&] { return cat("d=", dd, " ", r.witness); });
        }
      });
  return r;
}

std::vector<std::size_t> selected(const VerifyOptions& opt) {
  const auto& reg = registry();
  std::vector<std::size_t> out;
  if (opt.only.empty()) {
    for (std::size_t i = 0; i < reg.size(); ++i) out.push_back(i);
    return out;
  }
  std::unordered_set<std::string> want;
  for (const auto& id : opt.only) {
    if (!find_statement(id)) throw InvalidArgument("unknown statement id '" + id + "'");
    want.insert(id);
  }
  for (std::size_t i = 0; i < reg.size(); ++i)
    if (want.count(reg[i].info.id)) out.push_back(i);
  return out;
}

template <class Run>
VerificationReport run_all(const VerifyOptions& opt, std::string target, std::size_t size,
                           Run&& run) {
  using clock = std::chrono::steady_clock;
  auto start = clock::now();
  VerificationReport rep;
  rep.target = std::move(target);
  rep.carrier_size = size;
  rep.seed = opt.seed;
  for (std::size_t idx : selected(opt)) {
    const auto& e = registry()[idx];
    StatementResult res;
    res.id = e.info.id;
    res.formula = e.info.formula;
    auto t0 = clock::now();
    Tally t;
    try {
      run(idx, e, t);
    } catch (const ResourceLimit&) {
      throw;
    } catch (const std::exception& ex) {
      t.check(false, [&] { return std::string("exception: ") + ex.what(); });
    }
    t.fill(res);
    res.seconds = std::chrono::duration<double>(clock::now() - t0).count();
    rep.results.push_back(std::move(res));
  }
  rep.seconds = std::chrono::duration<double>(clock::now() - start).count();
  return rep;
}

}  // namespace

const std::vector<StatementInfo>& statement_catalog() {
  static const std::vector<StatementInfo> cat = [] {
    std::vector<StatementInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return cat;
}

const StatementInfo* find_statement(std::string_view id) {
  for (const auto& s : statement_catalog())
    if (s.id == id) return &s;
  return nullptr;
}

VerificationReport verify_algebra(const MvAlgebra& a, const VerifyOptions& options) {
  if (a.size() > options.max_carrier)
    throw ResourceLimit("carrier of " + a.name() + " has " + std::to_string(a.size()) +
                            " elements",
                        options.max_carrier);
  (void)selected(options);  // reject unknown ids before any work
  FiniteCtx ctx(a, options.max_carrier);
  return run_all(options, a.name(), a.size(), [&](std::size_t, const Entry& e, Tally& t) {
    if (!e.finite) return t.skip("dense-chain statement");
    if (!ctx.calc && e.info.id != "core:mv-axioms")
      return t.skip("algebra fails the MV axioms");
    e.finite(ctx, t);
  });
}

VerificationReport verify_dense(const VerifyOptions& options) {
  DenseCtx ctx{options};
  return run_all(options, "dense", 0, [&](std::size_t idx, const Entry& e, Tally& t) {
    if (!e.dense) return t.skip("finite-algebra statement");
    CutSampler s(ctx.stream_seed(idx), options.max_denominator);
    e.dense(ctx, s, t);
  });
}

}  // namespace mvfilter
