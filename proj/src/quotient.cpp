#include "mvfilter/quotient.hpp"

#include "mvfilter/errors.hpp"

namespace mvfilter {

std::vector<Element> QuotientAlgebra::coset_members(std::size_t c) const {
  std::vector<Element> out;
  for (Element x = 0; x < parent_.size(); ++x)
    if (coset_of_[x] == c) out.push_back(x);
  return out;
}

Subset QuotientAlgebra::coset_set(std::size_t c) const {
  Subset s(parent_.size());
  for (auto x : coset_members(c)) s.insert(x);
  return s;
}

Subset QuotientAlgebra::image(const Subset& s) const {
  if (s.universe() != parent_.size()) throw InvalidArgument("subset of another carrier");
  Subset out(coset_count());
  for (auto x : s.elements()) out.insert(coset_of_[x]);
  return out;
}

Subset QuotientAlgebra::preimage(const Subset& cosets) const {
  if (cosets.universe() != coset_count()) throw InvalidArgument("not a set of cosets");
  Subset out(parent_.size());
  for (Element x = 0; x < parent_.size(); ++x)
    if (cosets.contains(coset_of_[x])) out.insert(x);
  return out;
}

QuotientAlgebra quotient_by(const MvAlgebra& a, const ImplicationFilter& p) {
  if (p.algebra().id() != a.id())
    throw InvalidArgument("implication filter belongs to another algebra");
  const std::size_t n = a.size();
  std::vector<std::size_t> coset(n);
  std::vector<Element> reps;
  for (Element x = 0; x < n; ++x) {
    bool placed = false;
    for (std::size_t k = 0; k < reps.size(); ++k) {
      Element r = reps[k];
      if (p.contains(a.implies(x, r)) && p.contains(a.implies(r, x))) {
        coset[x] = k;
        placed = true;
        break;
      }
    }
    if (!placed) {
      coset[x] = reps.size();
      reps.push_back(x);
    }
  }
  const std::size_t m = reps.size();
  std::vector<Element> oplus(m * m), neg(m);
  std::vector<std::string> labels(m);
  for (std::size_t i = 0; i < m; ++i) {
    neg[i] = coset[a.neg(reps[i])];
    labels[i] = "[" + a.label(reps[i]) + "]";
    for (std::size_t j = 0; j < m; ++j) oplus[i * m + j] = coset[a.oplus(reps[i], reps[j])];
  }
  for (Element x = 0; x < n; ++x) {
    if (coset[a.neg(x)] != neg[coset[x]])
      throw InvariantViolation("negation not well defined on cosets at " + a.label(x));
    for (Element y = 0; y < n; ++y)
      if (coset[a.oplus(x, y)] != oplus[coset[x] * m + coset[y]])
        throw InvariantViolation("oplus not well defined on cosets at (" + a.label(x) +
                                 "," + a.label(y) + ")");
  }
  auto q = MvAlgebra::from_tables(a.name() + "/" + p.to_string(), m, std::move(oplus),
                                  std::move(neg), coset[a.zero()], std::move(labels));
  return QuotientAlgebra(a, p, std::move(coset), std::move(reps), std::move(q));
}

}  // namespace mvfilter
