#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mvfilter/subset.hpp"

namespace mvfilter {

/// Index of an element; meaningful only relative to one MvAlgebra.
using Element = std::size_t;

/// Operation tables derived from (⊕, ¬, 0) by the standard MV identities:
///   x⊗y = ¬(¬x⊕¬y), x→y = ¬x⊕y, x∨y = (x→y)→y, x∧y = ¬(¬x∨¬y),
///   x⊖y = x⊗¬y, x≤y iff x→y = 1, 1 = ¬0.
/// Binary tables are row-major: table[x * size + y].
struct DerivedTables {
  std::size_t size = 0;
  Element one = 0;
  std::vector<Element> otimes;
  std::vector<Element> implies;
  std::vector<Element> join;
  std::vector<Element> meet;
  std::vector<Element> ominus;
  std::vector<bool> leq;
};

/// A finite algebra (L, ⊕, ¬, 0) given by tables over dense indices.
///
/// Construction only checks table shapes; whether the tables satisfy the
/// MV axioms is decided by check_mv_axioms. Copies share their tables, so an
/// MvAlgebra is cheap to pass by value and id() identifies the table set.
class MvAlgebra {
public:
  /// `oplus` is row-major, size*size entries. Labels default to indices.
  static MvAlgebra from_tables(std::string name, std::size_t size,
                               std::vector<Element> oplus,
                               std::vector<Element> neg, Element zero,
                               std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return t_->size; }
  const std::string& name() const noexcept { return t_->name; }
  std::uintptr_t id() const noexcept {
    return reinterpret_cast<std::uintptr_t>(t_.get());
  }

  Element zero() const noexcept { return t_->zero; }
  Element one() const noexcept { return t_->derived.one; }

  Element oplus(Element x, Element y) const { return t_->oplus[x * size() + y]; }
  Element neg(Element x) const { return t_->neg[x]; }
  Element otimes(Element x, Element y) const {
    return t_->derived.otimes[x * size() + y];
  }
  Element implies(Element x, Element y) const {
    return t_->derived.implies[x * size() + y];
  }
  Element join(Element x, Element y) const {
    return t_->derived.join[x * size() + y];
  }
  Element meet(Element x, Element y) const {
    return t_->derived.meet[x * size() + y];
  }
  Element ominus(Element x, Element y) const {
    return t_->derived.ominus[x * size() + y];
  }
  bool leq(Element x, Element y) const { return t_->derived.leq[x * size() + y]; }
  bool less(Element x, Element y) const { return x != y && leq(x, y); }

  const std::vector<Element>& oplus_table() const noexcept { return t_->oplus; }
  const std::vector<Element>& neg_table() const noexcept { return t_->neg; }
  const DerivedTables& derived() const noexcept { return t_->derived; }

  const std::string& label(Element x) const { return t_->labels.at(x); }
  const std::vector<std::string>& labels() const noexcept { return t_->labels; }
  std::optional<Element> find_label(std::string_view label) const;

  Subset empty_set() const { return Subset(size()); }
  Subset carrier() const { return Subset::full(size()); }

  bool is_linearly_ordered() const;
  /// Elements sorted ascending. Requires a linear order.
  std::vector<Element> chain_order() const;

private:
  struct Tables {
    std::string name;
    std::size_t size = 0;
    std::vector<Element> oplus;
    std::vector<Element> neg;
    Element zero = 0;
    std::vector<std::string> labels;
    DerivedTables derived;
  };
  explicit MvAlgebra(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}

  std::shared_ptr<const Tables> t_;
};

/// The chain Ł_n on {0, 1/(n-1), ..., 1}; element k has value k/(n-1).
MvAlgebra make_lukasiewicz_chain(std::size_t n);

/// Componentwise product. Elements enumerate tuples in row-major order
/// (last factor varies fastest) and are labelled "(x,y,...)".
MvAlgebra make_product(std::span<const MvAlgebra> factors);
MvAlgebra make_product(const MvAlgebra& a, const MvAlgebra& b);

DerivedTables derived_ops(const MvAlgebra& a);

struct AxiomViolation {
  std::string axiom;
  std::vector<Element> witness;
  std::size_t occurrences = 0;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  std::size_t instances_checked = 0;
  bool passed() const noexcept { return violations.empty(); }
  std::string describe(const MvAlgebra& a) const;
};

/// Exhaustive scan of the MV axioms: ⊕ commutative and associative with
/// identity 0, ¬¬x = x, x⊕¬0 = ¬0, and ¬(¬x⊕y)⊕y = ¬(¬y⊕x)⊕x.
/// Each violated axiom is reported once with its first witness.
AxiomReport check_mv_axioms(const MvAlgebra& a);

/// True iff `map` is a bijection carrying ⊕, ¬ and 0 of `a` onto `b`.
bool is_isomorphism(const MvAlgebra& a, const MvAlgebra& b,
                    std::span<const Element> map);

/// For two linearly ordered algebras, the only candidate isomorphism is the
/// order-matching bijection; returns it when it preserves the operations.
std::optional<std::vector<Element>> chain_isomorphism(const MvAlgebra& a,
                                                      const MvAlgebra& b);

}  // namespace mvfilter
