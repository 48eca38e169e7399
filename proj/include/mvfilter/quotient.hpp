#pragma once

#include <cstddef>
#include <vector>

#include "mvfilter/filter.hpp"
#include "mvfilter/mv_algebra.hpp"

namespace mvfilter {

/// L/P for an implication filter P: cosets of a ∼ b iff a→b, b→a ∈ P.
///
/// Cosets are numbered by their smallest element index; coset k's
/// representative is that element, and coset k is element k of quotient().
class QuotientAlgebra {
public:
  const MvAlgebra& parent() const noexcept { return parent_; }
  const ImplicationFilter& congruence_filter() const noexcept { return p_; }
  const MvAlgebra& quotient() const noexcept { return quotient_; }

  std::size_t coset_count() const noexcept { return reps_.size(); }
  std::size_t coset_of(Element x) const { return coset_of_.at(x); }
  const std::vector<Element>& representatives() const noexcept { return reps_; }
  std::vector<Element> coset_members(std::size_t c) const;
  Subset coset_set(std::size_t c) const;

  /// η on elements and on subsets.
  Element image(Element x) const { return coset_of(x); }
  Subset image(const Subset& s) const;
  /// η⁻¹ of a set of cosets.
  Subset preimage(const Subset& cosets) const;

  bool equivalent(Element a, Element b) const { return coset_of(a) == coset_of(b); }

private:
  friend QuotientAlgebra quotient_by(const MvAlgebra& a, const ImplicationFilter& p);
  QuotientAlgebra(MvAlgebra parent, ImplicationFilter p, std::vector<std::size_t> coset_of,
                  std::vector<Element> reps, MvAlgebra quotient)
      : parent_(std::move(parent)),
        p_(std::move(p)),
        coset_of_(std::move(coset_of)),
        reps_(std::move(reps)),
        quotient_(std::move(quotient)) {}

  MvAlgebra parent_;
  ImplicationFilter p_;
  std::vector<std::size_t> coset_of_;
  std::vector<Element> reps_;
  MvAlgebra quotient_;
};

/// Throws InvalidArgument if `p` belongs to another algebra, and
/// InvariantViolation if the operations are not well defined on cosets.
QuotientAlgebra quotient_by(const MvAlgebra& a, const ImplicationFilter& p);

}  // namespace mvfilter
