#include "mvfilter/densechain.hpp"

#include <algorithm>
#include <vector>

#include "mvfilter/errors.hpp"

namespace mvfilter {

namespace {

// a·f + b·z + c > 0 (strict) or >= 0. The variable f is eliminated.
struct Constraint {
  BigRational a, b, c;
  bool strict = false;
};

struct Interval {
  BigRational lo, hi;
  bool lo_open = false, hi_open = false;
  bool empty() const { return lo > hi || (lo == hi && (lo_open || hi_open)); }
};

Constraint member(const BigRational& coeff_f, const BigRational& coeff_z,
                  const BigRational& offset, const CutFilter& cut) {
  // coeff_f·f + coeff_z·z + offset ∈ cut
  return {coeff_f, coeff_z, offset - cut.endpoint.value(), cut.kind == CutKind::Open};
}

Constraint non_member(const BigRational& coeff_f, const BigRational& coeff_z,
                      const BigRational& offset, const CutFilter& cut) {
  // value <= p for an open cut, value < p for a closed one
  return {-coeff_f, -coeff_z, cut.endpoint.value() - offset, cut.kind == CutKind::Closed};
}

// Fourier-Motzkin step on f, then intersection of the resulting bounds on z.
Interval project_to_z(const std::vector<Constraint>& cs) {
  std::vector<Constraint> lower, upper, rest;
  for (const auto& k : cs) {
    if (k.a > 0) {
      lower.push_back({1, k.b / k.a, k.c / k.a, k.strict});
    } else if (k.a < 0) {
      BigRational s = -k.a;
      upper.push_back({-1, k.b / s, k.c / s, k.strict});
    } else {
      rest.push_back(k);
    }
  }
  for (const auto& l : lower)
    for (const auto& u : upper) rest.push_back({0, l.b + u.b, l.c + u.c, l.strict || u.strict});

  Interval iv{0, 1, false, false};
  for (const auto& k : rest) {
    if (k.b == 0) {
      if (k.c < 0 || (k.c == 0 && k.strict)) return {1, 0, false, false};
      continue;
    }
    BigRational bound = -k.c / k.b;
    if (k.b > 0) {
      if (bound > iv.lo || (bound == iv.lo && k.strict)) {
        iv.lo = bound;
        iv.lo_open = k.strict;
      }
    } else {
      if (bound < iv.hi || (bound == iv.hi && k.strict)) {
        iv.hi = bound;
        iv.hi_open = k.strict;
      }
    }
  }
  return iv;
}

// [0,1] minus the union of `bad`, which must come out as an up-set.
CutFilter complement_to_cut(std::vector<Interval> bad) {
  bad.erase(std::remove_if(bad.begin(), bad.end(), [](const Interval& i) { return i.empty(); }),
            bad.end());
  std::sort(bad.begin(), bad.end(), [](const Interval& x, const Interval& y) {
    if (x.lo != y.lo) return x.lo < y.lo;
    return !x.lo_open && y.lo_open;
  });
  std::vector<Interval> merged;
  for (const auto& i : bad) {
    if (!merged.empty()) {
      auto& m = merged.back();
      bool touches = i.lo < m.hi || (i.lo == m.hi && !(i.lo_open && m.hi_open));
      if (touches) {
        if (i.hi > m.hi || (i.hi == m.hi && !i.hi_open)) {
          m.hi = i.hi;
          m.hi_open = i.hi_open;
        }
        continue;
      }
    }
    merged.push_back(i);
  }
  std::vector<Interval> gaps;
  BigRational prev = 0;
  bool prev_covered = false;  // whether `prev` itself is covered
  for (const auto& m : merged) {
    Interval g{prev, m.lo, prev_covered, !m.lo_open};
    if (!g.empty()) gaps.push_back(g);
    prev = m.hi;
    prev_covered = !m.hi_open;
  }
  Interval tail{prev, 1, prev_covered, false};
  if (!tail.empty()) gaps.push_back(tail);

  if (gaps.empty()) return CutFilter::open(Rat::one());
  if (gaps.size() != 1 || gaps[0].hi != 1 || gaps[0].hi_open)
    throw InvariantViolation("oracle result is not an up-set of the chain");
  return {Rat(gaps[0].lo), gaps[0].lo_open ? CutKind::Open : CutKind::Closed};
}

std::vector<Constraint> chain_bounds() {
  // 0 <= z <= 1 and 0 <= f <= 1
  return {{0, 1, 0, false}, {0, -1, 1, false}, {1, 0, 0, false}, {-1, 0, 1, false}};
}

void require_proper(const CutFilter& f, const char* what) {
  if (!f.is_proper()) throw InvalidArgument(std::string(what) + " needs a proper cut filter");
}

}  // namespace

bool CutFilter::is_subset_of(const CutFilter& o) const {
  if (endpoint != o.endpoint) return endpoint > o.endpoint;
  return kind == CutKind::Open || o.kind == CutKind::Closed;
}

std::string CutFilter::to_string() const {
  return (kind == CutKind::Open ? "(" : "[") + endpoint.to_string() + ",1]";
}

CutFilter CutFilter::parse(std::string_view text) {
  const std::string original(text);
  if (text.size() < 5 || text.substr(text.size() - 3) != ",1]")
    throw InvalidArgument("malformed cut '" + original + "'");
  CutKind kind;
  if (text[0] == '[') {
    kind = CutKind::Closed;
  } else if (text[0] == '(' || text[0] == ']') {
    kind = CutKind::Open;
  } else {
    throw InvalidArgument("malformed cut '" + original + "'");
  }
  return {Rat::parse(text.substr(1, text.size() - 4)), kind};
}

CutFilter cut_plus(const CutFilter& f) {
  require_proper(f, "cut_plus");
  return {mv_neg(f.endpoint), f.kind == CutKind::Open ? CutKind::Closed : CutKind::Open};
}

CutFilter cut_sqto(const CutFilter& f, const CutFilter& g) {
  require_proper(f, "cut_sqto");
  require_proper(g, "cut_sqto");
  if (g.is_subset_of(f)) return CutFilter::top();
  // Now F ⊊ G, so F∩G = F and the endpoint of F is at least that of G.
  Rat e = mv_implies(f.endpoint, g.endpoint);
  if (f.kind == CutKind::Closed) return {e, g.kind};
  return CutFilter::closed(e);
}

CutFilter oracle_sqto(const CutFilter& f, const CutFilter& g) {
  require_proper(f, "oracle_sqto");
  require_proper(g, "oracle_sqto");
  auto base = chain_bounds();
  base.push_back(member(1, 0, 0, f));
  base.push_back(member(1, 0, 0, g));

  std::vector<Interval> bad;
  if (!g.contains(Rat::zero())) {
    // product clamps to 0: f + z <= 1
    auto a = base;
    a.push_back({-1, -1, 1, false});
    bad.push_back(project_to_z(a));
  }
  auto b = base;
  b.push_back({1, 1, -1, true});        // f + z - 1 > 0
  b.push_back(non_member(1, 1, -1, g));  // f + z - 1 ∉ G
  bad.push_back(project_to_z(b));
  return complement_to_cut(std::move(bad));
}

CutFilter oracle_plus(const CutFilter& f) {
  require_proper(f, "oracle_plus");
  auto cs = chain_bounds();
  cs.push_back(member(0, -1, 1, f));  // 1 - z ∈ F
  return complement_to_cut({project_to_z(cs)});
}

CutFilter oracle_kernel(const CutFilter& f) {
  require_proper(f, "oracle_kernel");
  // Here the eliminated variable is the witness a ∉ F.
  auto base = chain_bounds();
  base.push_back(non_member(1, 0, 0, f));
  std::vector<Interval> bad;
  if (f.contains(Rat::one())) {
    auto p = base;
    p.push_back({1, -1, 0, false});  // a >= z, so z→a = 1
    bad.push_back(project_to_z(p));
  }
  auto q = base;
  q.push_back({-1, 1, 0, true});      // z > a
  q.push_back(member(1, -1, 1, f));  // 1 - z + a ∈ F
  bad.push_back(project_to_z(q));
  return complement_to_cut(std::move(bad));
}

bool cut_equiv(const CutFilter& f, const CutFilter& g) {
  require_proper(f, "cut_equiv");
  require_proper(g, "cut_equiv");
  return f.endpoint == g.endpoint;
}

bool cut_equiv_definitional(const CutFilter& f, const CutFilter& g) {
  return oracle_sqto(f, g) == CutFilter::top() && oracle_sqto(g, f) == CutFilter::top();
}

CutFilter HatPoint::canonical() const {
  if (value.is_zero()) return CutFilter::zero_cut();
  return CutFilter::closed(value);
}

HatPoint HatPoint::of(const CutFilter& f) {
  require_proper(f, "HatPoint");
  return {f.endpoint};
}

HatPoint hat_plus(const HatPoint& x) { return HatPoint::of(cut_plus(x.canonical())); }

HatPoint hat_sqto(const HatPoint& x, const HatPoint& y) {
  return HatPoint::of(cut_sqto(x.canonical(), y.canonical()));
}

HatPoint hat_oplus(const HatPoint& x, const HatPoint& y) { return hat_sqto(hat_plus(x), y); }

HatPoint dense_embed(const Rat& a) {
  if (a.is_one()) return HatPoint::of(CutFilter::top());
  return HatPoint::of(CutFilter::open(a));
}

EmbeddingReport check_dense_embedding(int d) {
  if (d < 1) throw InvalidArgument("denominator must be positive");
  EmbeddingReport r;
  r.denominator = d;
  std::vector<Rat> pts;
  for (int k = 0; k <= d; ++k) pts.emplace_back(k, d);
  std::vector<HatPoint> img;
  for (const auto& p : pts) img.push_back(dense_embed(p));
  auto note = [&](const std::string& w) {
    if (r.witness.empty()) r.witness = w;
  };
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (img[i] == img[j]) {
        r.injective = false;
        note("collision at " + pts[i].to_string());
      }
    if (!(dense_embed(mv_neg(pts[i])) == hat_plus(img[i]))) {
      r.preserves_neg = false;
      note("negation at " + pts[i].to_string());
    }
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (!(dense_embed(mv_implies(pts[i], pts[j])) == hat_sqto(img[i], img[j]))) {
        r.preserves_implies = false;
        note("implication at " + pts[i].to_string() + ", " + pts[j].to_string());
      }
      if (!(dense_embed(mv_oplus(pts[i], pts[j])) == hat_oplus(img[i], img[j]))) {
        r.preserves_oplus = false;
        note("sum at " + pts[i].to_string() + ", " + pts[j].to_string());
      }
    }
  }
  r.preserves_constants = img.front() == HatPoint::of(CutFilter::zero_cut()) &&
                          img.back() == HatPoint::of(CutFilter::top());
  return r;
}

Rat CutSampler::rational() {
  std::uniform_int_distribution<long long> den_dist(1, max_den_);
  long long den = den_dist(rng_);
  std::uniform_int_distribution<long long> num_dist(0, den);
  return Rat(num_dist(rng_), den);
}

CutFilter CutSampler::proper_cut() {
  std::bernoulli_distribution open_kind(0.5);
  for (;;) {
    CutFilter c{rational(), open_kind(rng_) ? CutKind::Open : CutKind::Closed};
    if (c.is_proper()) return c;
  }
}

}  // namespace mvfilter
