#include "mvfilter/spectra.hpp"

#include <algorithm>
#include <numeric>

#include "mvfilter/errors.hpp"

namespace mvfilter {

std::optional<std::size_t> PrimeSpectrum::index_of(const Filter& f) const {
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i] == f) return i;
  return std::nullopt;
}

PrimeSpectrum prime_spectrum(const Calculus& calc, const ImplicationFilter& p) {
  const auto& a = calc.algebra();
  if (p.algebra().id() != a.id())
    throw InvalidArgument("implication filter belongs to another algebra");
  std::vector<Filter> members;
  if (p.is_proper()) {
    if (!is_prime_implication_filter(p))
      throw InvalidArgument(p.to_string() + " is not a prime implication filter");
    for (auto& f : enumerate_lattice_filters(a, true))
      if (calc.kernel(f) == p) members.push_back(std::move(f));
  }
  return PrimeSpectrum(a, p, std::move(members));
}

std::optional<std::size_t> HatAlgebra::class_of(const Filter& f) const {
  auto i = spec_.index_of(f);
  if (!i) return std::nullopt;
  return member_class_[*i];
}

HatAlgebra build_hat(const Calculus& calc, const PrimeSpectrum& spec) {
  if (spec.empty()) throw InvalidArgument("cannot build a hat algebra on an empty spectrum");
  const auto& ms = spec.members();
  const std::size_t n = ms.size();
  const Subset& unit = spec.kernel().members();

  std::vector<Filter> sq_members;  // F_i ⊸ F_j, row-major
  sq_members.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sq_members.push_back(calc.sqto(ms[i], ms[j]));
  auto below = [&](std::size_t i, std::size_t j) {
    return sq_members[i * n + j].members() == unit;
  };
  auto eq = [&](std::size_t i, std::size_t j) { return below(i, j) && below(j, i); };

  for (std::size_t i = 0; i < n; ++i) {
    if (!eq(i, i)) throw InvariantViolation("equivalence is not reflexive at " + ms[i].to_string());
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (eq(i, j) && eq(j, k) && !eq(i, k))
          throw InvariantViolation("equivalence is not transitive at " + ms[i].to_string() +
                                   ", " + ms[j].to_string() + ", " + ms[k].to_string());
  }

  // Provisional classes in spectrum order.
  std::vector<std::size_t> provisional(n, n);
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) {
    if (provisional[i] != n) continue;
    groups.emplace_back();
    for (std::size_t j = i; j < n; ++j)
      if (eq(i, j)) {
        provisional[j] = groups.size() - 1;
        groups.back().push_back(j);
      }
  }
  const std::size_t m = groups.size();

  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      bool le = below(groups[x][0], groups[y][0]);
      bool ge = below(groups[y][0], groups[x][0]);
      if (!le && !ge)
        throw InvariantViolation("classes of " + ms[groups[x][0]].to_string() + " and " +
                                 ms[groups[y][0]].to_string() + " are incomparable");
    }
  // Rank = number of classes strictly below; total order makes it a permutation.
  std::vector<std::size_t> rank(m, 0);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      if (x != y && below(groups[y][0], groups[x][0])) ++rank[x];
  std::vector<std::size_t> order(m);
  for (std::size_t x = 0; x < m; ++x) order[rank[x]] = x;

  std::vector<std::size_t> member_class(n);
  std::vector<HatClass> classes;
  for (std::size_t k = 0; k < m; ++k) {
    const auto& g = groups[order[k]];
    std::vector<Filter> members;
    for (auto i : g) {
      member_class[i] = k;
      members.push_back(ms[i]);
    }
    Filter rep = *std::max_element(members.begin(), members.end(),
                                   [](const Filter& a, const Filter& b) {
                                     return a.size() < b.size();
                                   });
    classes.push_back({std::move(members), std::move(rep)});
  }

  auto class_of_result = [&](const Filter& f, const std::string& what) {
    auto i = spec.index_of(f);
    if (!i) throw InvariantViolation(what + " = " + f.to_string() + " leaves the spectrum");
    return member_class[*i];
  };

  std::vector<std::size_t> sq(m * m), pl(m);
  for (std::size_t i = 0; i < n; ++i) {
    auto c = class_of_result(calc.plus(ms[i]), "plus of " + ms[i].to_string());
    auto& slot = pl[member_class[i]];
    if (i == groups[order[member_class[i]]][0]) {
      slot = c;
    } else if (slot != c) {
      throw InvariantViolation("plus is not well defined on the class of " + ms[i].to_string());
    }
  }
  std::vector<bool> seen(m * m, false);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto c = class_of_result(sq_members[i * n + j],
                               ms[i].to_string() + " -o " + ms[j].to_string());
      auto cell = member_class[i] * m + member_class[j];
      if (!seen[cell]) {
        seen[cell] = true;
        sq[cell] = c;
      } else if (sq[cell] != c) {
        throw InvariantViolation("-o is not well defined at " + ms[i].to_string() + ", " +
                                 ms[j].to_string());
      }
    }

  std::vector<Element> oplus(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) oplus[x * m + y] = sq[pl[x] * m + y];
  std::vector<std::string> labels;
  for (const auto& c : classes) labels.push_back(c.representative.to_string());
  auto mv = MvAlgebra::from_tables("hat(" + spec.algebra().name() + "," +
                                       spec.kernel().to_string() + ")",
                                   m, std::move(oplus), pl, 0, std::move(labels));
  auto report = check_mv_axioms(mv);
  if (!report.passed()) throw InvariantViolation("hat algebra: " + report.describe(mv));
  if (!mv.is_linearly_ordered()) throw InvariantViolation("hat algebra is not linearly ordered");
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y)
      if (mv.implies(x, y) != sq[x * m + y])
        throw InvariantViolation("hat implication differs from -o");
    if (x > 0 && !mv.less(x - 1, x))
      throw InvariantViolation("hat class order is not ascending");
  }
  return HatAlgebra(spec, std::move(classes), std::move(member_class), std::move(sq),
                    std::move(pl), std::move(mv));
}

std::size_t hat_otimes(const HatAlgebra& h, std::size_t x, std::size_t y) {
  return h.plus(h.sqto(x, h.plus(y)));
}

OtimesAgreement hat_otimes_agreement(const Calculus& calc, const HatAlgebra& h,
                                     std::size_t x, std::size_t y) {
  const auto& f = h.classes().at(x).representative;
  const auto& g = h.classes().at(y).representative;
  OtimesAgreement r{hat_otimes(h, x, y), calc.plus(calc.sqto(f, calc.plus(g))),
                    calc.tensor_up(f, g), calc.phi(f, g), {}, {}};
  r.tensor_class = h.class_of(r.tensor);
  r.phi_class = h.class_of(r.phi);
  return r;
}

IotaReport iota(const Calculus& calc, const HatAlgebra& h, const QuotientAlgebra& q) {
  const auto& p = h.spectrum().kernel();
  if (!(q.congruence_filter() == p))
    throw InvalidArgument("iota needs the quotient by the spectrum kernel");
  const auto& a = calc.algebra();
  const Filter pf = p.as_filter();
  IotaReport r;
  r.class_of_coset.resize(q.coset_count());
  for (std::size_t c = 0; c < q.coset_count(); ++c) {
    Filter pa = calc.subordinate(pf, q.representatives()[c]);
    if (!pa.is_bottom()) r.class_of_coset[c] = h.class_of(pa);
  }
  std::vector<bool> hit(h.size(), false);
  for (const auto& v : r.class_of_coset) {
    if (!v) continue;
    if (hit[*v]) r.injective = false;
    hit[*v] = true;
  }
  r.onto = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });

  const auto& reps = q.representatives();
  for (std::size_t c = 0; c < q.coset_count(); ++c) {
    const auto& ic = r.class_of_coset[c];
    auto nc = q.coset_of(a.neg(reps[c]));
    if (ic && r.class_of_coset[nc]) {
      ++r.neg_checked;
      if (h.plus(*ic) == *r.class_of_coset[nc]) ++r.neg_agreed;
    }
    for (std::size_t d = 0; d < q.coset_count(); ++d) {
      const auto& id = r.class_of_coset[d];
      auto ic_d = q.coset_of(a.implies(reps[c], reps[d]));
      if (ic && id && r.class_of_coset[ic_d]) {
        ++r.implies_checked;
        if (h.sqto(*ic, *id) == *r.class_of_coset[ic_d]) ++r.implies_agreed;
      }
    }
  }
  return r;
}

HatEtaReport hat_eta(const Calculus& calc, const HatAlgebra& h, const QuotientAlgebra& q) {
  const auto& a = calc.algebra();
  const auto& p = h.spectrum().kernel();
  const auto& qf = q.congruence_filter();
  if (!p.members().is_proper_subset_of(qf.members()))
    throw InvalidArgument("hat_eta needs P properly inside Q");

  HatEtaReport r;
  std::vector<std::size_t> member_coset;
  for (const auto& f : h.spectrum().members())
    member_coset.push_back(calc.boundary_coset(f, q));
  r.coset_of_class.resize(h.size());
  for (std::size_t k = 0; k < h.size(); ++k) {
    const auto& cls = h.classes()[k];
    r.coset_of_class[k] = calc.boundary_coset(cls.representative, q);
    for (const auto& f : cls.members)
      if (calc.boundary_coset(f, q) != r.coset_of_class[k]) {
        r.well_defined = false;
        r.witness = "class of " + cls.representative.to_string() + " meets two cosets";
      }
  }
  const auto& qa = q.quotient();
  for (std::size_t x = 0; x < h.size(); ++x) {
    if (r.coset_of_class[h.plus(x)] != qa.neg(r.coset_of_class[x])) {
      r.preserves_plus = false;
      if (r.witness.empty()) r.witness = "plus fails at " + h.classes()[x].representative.to_string();
    }
    for (std::size_t y = 0; y < h.size(); ++y)
      if (r.coset_of_class[h.sqto(x, y)] !=
          qa.implies(r.coset_of_class[x], r.coset_of_class[y])) {
        r.preserves_sqto = false;
        if (r.witness.empty())
          r.witness = "-o fails at " + h.classes()[x].representative.to_string() + ", " +
                      h.classes()[y].representative.to_string();
      }
  }
  r.preserves_one = r.coset_of_class[h.one_class()] == q.coset_of(a.one());

  auto qp = quotient_by(a, p);
  auto io = iota(calc, h, qp);
  for (std::size_t c = 0; c < qp.coset_count(); ++c) {
    if (!io.class_of_coset[c]) continue;
    ++r.composite_checked;
    if (r.coset_of_class[*io.class_of_coset[c]] == q.coset_of(qp.representatives()[c]))
      ++r.composite_agreed;
  }
  return r;
}

}  // namespace mvfilter
