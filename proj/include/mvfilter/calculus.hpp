#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mvfilter/filter.hpp"
#include "mvfilter/mv_algebra.hpp"
#include "mvfilter/quotient.hpp"

namespace mvfilter {

/// A filter value together with a note when the inputs were outside the
/// usual hypotheses of the construction (bottom input, a ∈ F, ...).
struct FlaggedFilter {
  Filter value;
  bool flagged = false;
  std::string note;
};

struct ReductionResult {
  Filter f_up;    // J_u(F, K(G))
  Filter g_down;  // J_d(G, K(F))
  Filter direct;  // F ⊸ G
  bool theorem_holds = false;    // F⊸G = f_up ⊸ g_down
  bool up_step_holds = false;    // F⊸G = f_up ⊸ G
  bool down_step_holds = false;  // F⊸G = F ⊸ g_down
  bool all_hold() const { return theorem_holds && up_step_holds && down_step_holds; }
};

struct QuotientCommuteReport {
  /// (F⊸G)/Q = (F/Q)⊸(G/Q) in L/Q.
  bool image_identity = false;
  /// η⁻¹[F/Q ⊸ G/Q] = F⊸G; evaluated only when Q ⊆ K(F) = K(G).
  std::optional<bool> preimage_identity;
  std::string witness;
  bool passed() const { return image_identity && preimage_identity.value_or(true); }
};

struct ConvexityReport {
  bool implies_image_convex = true;  // {z→a | z∈C}
  bool neg_image_convex = true;      // {¬z | z∈C}
  bool otimes_image_convex = true;   // {z⊗a | z∈C}
  std::string witness;
  bool passed() const {
    return implies_image_convex && neg_image_convex && otimes_image_convex;
  }
};

/// Filter operations over one finite MV-algebra.
///
/// Filters passed in must belong to algebra() (InvalidArgument otherwise).
/// Filter-valued operations return bottom whenever an argument is bottom.
class Calculus {
public:
  /// Throws InvalidArgument if the algebra fails the MV axioms.
  explicit Calculus(MvAlgebra a);

  const MvAlgebra& algebra() const noexcept { return alg_; }

  /// F_a = {z | z→a ∉ F}. When F is a prime lattice filter, a ∉ F and the
  /// result is nonempty, the result is checked to be prime.
  Filter subordinate(const Filter& f, Element a) const;
  /// As subordinate, flagging a ∈ F and empty results.
  FlaggedFilter subordinate_checked(const Filter& f, Element a) const;

  /// F⁺ = F_0.
  Filter plus(const Filter& f) const;

  /// K(F) = {z | ∀a ∉ F: z→a ∉ F}. Checked to lie inside F and to be prime
  /// exactly when F is. Throws InvalidArgument for bottom.
  ImplicationFilter kernel(const Filter& f) const;

  /// K(F; X) = ∩_{a∈X} F_a, the whole carrier for empty X.
  /// Throws InvalidArgument if X meets F.
  Filter kernel_rel(const Filter& f, const Subset& x) const;

  /// F⊸G = K(F∩G; L∖G), cross-checked against the fast form
  /// {z | ∀f ∈ F∩G: f⊗z ∈ G}; a disagreement throws InvariantViolation.
  Filter sqto(const Filter& f, const Filter& g) const;
  Filter sqto_definitional(const Filter& f, const Filter& g) const;
  Filter sqto_fast(const Filter& f, const Filter& g) const;

  /// Φ(F, G) = ∪_{f∈F} {y | f→y ∈ G}.
  Filter phi(const Filter& f, const Filter& g) const;
  /// T(F, G) = up-closure of {f⊗g}.
  Filter tensor_up(const Filter& f, const Filter& g) const;

  /// J_u(F, P) = η_P⁻¹[F/P].
  Filter j_up(const Filter& f, const ImplicationFilter& p) const;
  Filter j_up(const Filter& f, const QuotientAlgebra& q) const;
  /// J_d(F, P) = J_u(F⁺, P)⁺; may be bottom.
  Filter j_down(const Filter& f, const ImplicationFilter& p) const;
  Filter j_down(const Filter& f, const QuotientAlgebra& q) const;

  /// Requires F ⊆ G, both prime (InvalidArgument otherwise).
  ReductionResult reduce_to_common_kernel(const Filter& f, const Filter& g) const;

  /// Requires F ⊆ G and Q ⊆ K(G) (InvalidArgument otherwise).
  QuotientCommuteReport sqto_quotient_commutes(const Filter& f, const Filter& g,
                                               const ImplicationFilter& q) const;

  /// Requires F ⊆ G prime with K(F) = K(G); returns K(F⊸G) after checking
  /// it equals K(F).
  ImplicationFilter kernel_of_sqto(const Filter& f, const Filter& g) const;

  /// The coset of L/P meeting both F and its complement. Requires
  /// K(F) ⊊ P; zero or several such cosets throw InvariantViolation.
  std::size_t boundary_coset(const Filter& f, const QuotientAlgebra& q) const;

  /// F ≡ G iff K(F) = K(G) and F⊸G = G⊸F = K(F). With kernel {1} this is
  /// the comparison of both directions against {1}.
  bool equiv(const Filter& f, const Filter& g) const;

  /// Checks the three image sets for a convex C of a linearly ordered
  /// algebra. Throws InvalidArgument for a non-linear algebra or a C that is
  /// not convex.
  ConvexityReport convex_image_checks(const Subset& c, Element a) const;

  bool is_convex(const Subset& c) const;

private:
  void require_own(const Filter& f) const;
  void require_own(const Subset& s) const;

  MvAlgebra alg_;
};

}  // namespace mvfilter
