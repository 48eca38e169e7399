#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mvfilter/mv_algebra.hpp"
#include "mvfilter/subset.hpp"

namespace mvfilter {

/// An order filter (up-closed subset) of a finite MV-algebra.
///
/// The empty set (bottom) and the whole carrier (improper) are both
/// representable. Whether the set is also closed under ∧, i.e. a lattice
/// filter, is a property queried with is_lattice_filter(): every filter built
/// from prime inputs is one, but subordinates of non-prime filters need not be.
class Filter {
public:
  /// Throws InvalidArgument unless `members` is an up-set of `algebra`.
  Filter(MvAlgebra algebra, Subset members);

  static Filter bottom(const MvAlgebra& a) { return Filter(a, a.empty_set()); }
  static Filter improper(const MvAlgebra& a) { return Filter(a, a.carrier()); }
  /// The up-set [g, 1].
  static Filter principal(const MvAlgebra& a, Element g);

  const MvAlgebra& algebra() const noexcept { return alg_; }
  const Subset& members() const noexcept { return members_; }
  bool contains(Element x) const { return members_.contains(x); }
  std::size_t size() const { return members_.count(); }

  bool is_bottom() const { return members_.empty(); }
  bool is_improper() const { return members_.is_full(); }
  /// Nonempty and not the whole carrier.
  bool is_proper() const { return !is_bottom() && !is_improper(); }
  bool is_lattice_filter() const;

  bool is_subset_of(const Filter& other) const;
  bool same_algebra(const Filter& other) const { return alg_.id() == other.alg_.id(); }

  /// Members in index order, e.g. "{1/2,1}"; "{}" for bottom.
  std::string to_string() const;

  friend bool operator==(const Filter& a, const Filter& b) {
    return a.alg_.id() == b.alg_.id() && a.members_ == b.members_;
  }
  friend auto operator<=>(const Filter& a, const Filter& b) {
    return a.members_ <=> b.members_;
  }

private:
  MvAlgebra alg_;
  Subset members_;
};

/// A subset containing 1 and closed under modus ponens.
class ImplicationFilter {
public:
  /// Throws InvalidArgument unless `members` is an implication filter.
  ImplicationFilter(MvAlgebra algebra, Subset members);

  static ImplicationFilter trivial(const MvAlgebra& a);
  static ImplicationFilter whole(const MvAlgebra& a);

  const MvAlgebra& algebra() const noexcept { return alg_; }
  const Subset& members() const noexcept { return members_; }
  bool contains(Element x) const { return members_.contains(x); }
  bool is_proper() const { return !members_.is_full(); }
  bool is_subset_of(const ImplicationFilter& o) const {
    return members_.is_subset_of(o.members_);
  }
  Filter as_filter() const { return Filter(alg_, members_); }
  std::string to_string() const { return as_filter().to_string(); }

  friend bool operator==(const ImplicationFilter& a, const ImplicationFilter& b) {
    return a.alg_.id() == b.alg_.id() && a.members_ == b.members_;
  }

private:
  MvAlgebra alg_;
  Subset members_;
};

/// Members by label in index order, e.g. "{1/2,1}".
std::string describe_set(const MvAlgebra& a, const Subset& s);

Subset up_closure(const MvAlgebra& a, const Subset& s);
/// All z lying below some finite join of members of `x_set`.
Subset down_closure_joins(const MvAlgebra& a, const Subset& x_set);

bool is_up_set(const MvAlgebra& a, const Subset& s);
bool is_meet_closed(const MvAlgebra& a, const Subset& s);
bool is_otimes_closed(const MvAlgebra& a, const Subset& s);
bool is_lattice_filter_set(const MvAlgebra& a, const Subset& s);
bool is_implication_filter_set(const MvAlgebra& a, const Subset& s);

/// A pair (x, y) with x∨y ∈ F but x, y ∉ F, if one exists.
std::optional<std::pair<Element, Element>> join_primality_witness(const Filter& f);
/// Proper, nonempty, ∧-closed and ∨-prime.
bool is_prime_lattice_filter(const Filter& f);

/// Proper and L/P linearly ordered: for all x, y, x→y ∈ P or y→x ∈ P.
bool is_prime_implication_filter(const ImplicationFilter& p);
/// The alternative reading: P proper with a∨b ∈ P ⇒ a ∈ P or b ∈ P.
bool is_join_prime_implication_filter(const ImplicationFilter& p);

/// Smallest implication filter containing both: close the union under ⊗
/// and take the up-set, repeating until stable.
ImplicationFilter implication_join(const ImplicationFilter& p, const ImplicationFilter& q);
ImplicationFilter generated_implication_filter(const MvAlgebra& a, const Subset& s);

/// Default cap on carrier size for enumeration; MVFILTER_MAX_CARRIER overrides.
std::size_t default_carrier_cap();

/// All nonempty lattice filters in ascending mask order. Throws ResourceLimit
/// when the carrier exceeds `cap`.
std::vector<Filter> enumerate_lattice_filters(const MvAlgebra& a, bool prime_only,
                                              std::size_t cap = default_carrier_cap());
std::vector<ImplicationFilter> enumerate_implication_filters(
    const MvAlgebra& a, bool prime_only, std::size_t cap = default_carrier_cap());

/// Reference enumeration by scanning every subset; only for carriers <= 20.
std::vector<Filter> enumerate_lattice_filters_naive(const MvAlgebra& a);

struct SuccessorStructure {
  Element c;  // successor of 0
  std::vector<std::optional<Element>> succ;  // x ⊕ c for x < 1
  std::vector<std::optional<Element>> pred;  // x ⊖ c for x > 0
};

/// For a linearly ordered algebra, the successor data generated by the
/// successor c of 0. The returned maps are verified to be immediate
/// neighbours (InvariantViolation otherwise). Throws InvalidArgument for a
/// non-linear algebra.
std::optional<SuccessorStructure> successor_structure(const MvAlgebra& a);

struct FilterClassification {
  bool is_lattice_filter = false;
  bool is_prime = false;
  bool is_implication_filter = false;
  bool is_principal = false;
  bool is_coprincipal = false;
  std::optional<Element> generator;
  std::optional<Element> cogenerator;  // maximum of the complement
};

/// Principal means F = [g, 1] for some g. Coprincipal is only tested in
/// linearly ordered algebras and means L∖F has a greatest element.
FilterClassification principality(const Filter& f);

}  // namespace mvfilter
