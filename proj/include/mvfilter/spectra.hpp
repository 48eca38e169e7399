#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mvfilter/calculus.hpp"
#include "mvfilter/filter.hpp"
#include "mvfilter/quotient.hpp"

namespace mvfilter {

/// The prime lattice filters whose kernel is exactly P, in mask order.
class PrimeSpectrum {
public:
  const MvAlgebra& algebra() const noexcept { return alg_; }
  const ImplicationFilter& kernel() const noexcept { return p_; }
  const std::vector<Filter>& members() const noexcept { return members_; }
  bool empty() const noexcept { return members_.empty(); }
  std::size_t size() const noexcept { return members_.size(); }
  std::optional<std::size_t> index_of(const Filter& f) const;

private:
  friend PrimeSpectrum prime_spectrum(const Calculus&, const ImplicationFilter&);
  PrimeSpectrum(MvAlgebra a, ImplicationFilter p, std::vector<Filter> m)
      : alg_(std::move(a)), p_(std::move(p)), members_(std::move(m)) {}

  MvAlgebra alg_;
  ImplicationFilter p_;
  std::vector<Filter> members_;
};

/// Throws InvalidArgument when P is proper but not prime. For the improper
/// P = L the spectrum is empty, since no proper filter has kernel L.
PrimeSpectrum prime_spectrum(const Calculus& calc, const ImplicationFilter& p);

struct HatClass {
  std::vector<Filter> members;  // mask order
  Filter representative;        // the largest member under inclusion
};

/// PSpec(P)/≡ packaged as an explicit finite MV-algebra.
///
/// Classes are indexed in ascending algebra order, so class 0 is the zero
/// and the last class is the one. The element k of as_mv() is class k, with
/// ¬x = x⁺ and x⊕y = x⁺⊸y.
class HatAlgebra {
public:
  const PrimeSpectrum& spectrum() const noexcept { return spec_; }
  const std::vector<HatClass>& classes() const noexcept { return classes_; }
  std::size_t size() const noexcept { return classes_.size(); }
  const MvAlgebra& as_mv() const noexcept { return mv_; }

  std::size_t zero_class() const noexcept { return 0; }
  std::size_t one_class() const noexcept { return classes_.size() - 1; }

  std::size_t sqto(std::size_t x, std::size_t y) const { return sqto_[x * size() + y]; }
  std::size_t plus(std::size_t x) const { return plus_[x]; }
  std::size_t oplus(std::size_t x, std::size_t y) const { return sqto(plus(x), y); }
  const std::vector<std::size_t>& sqto_table() const noexcept { return sqto_; }
  const std::vector<std::size_t>& plus_table() const noexcept { return plus_; }

  /// Class containing a spectrum member; nullopt for other filters.
  std::optional<std::size_t> class_of(const Filter& f) const;

private:
  friend HatAlgebra build_hat(const Calculus&, const PrimeSpectrum&);
  HatAlgebra(PrimeSpectrum s, std::vector<HatClass> c, std::vector<std::size_t> member_class,
             std::vector<std::size_t> sq, std::vector<std::size_t> pl, MvAlgebra mv)
      : spec_(std::move(s)),
        classes_(std::move(c)),
        member_class_(std::move(member_class)),
        sqto_(std::move(sq)),
        plus_(std::move(pl)),
        mv_(std::move(mv)) {}

  PrimeSpectrum spec_;
  std::vector<HatClass> classes_;
  std::vector<std::size_t> member_class_;  // spectrum index -> class
  std::vector<std::size_t> sqto_;
  std::vector<std::size_t> plus_;
  MvAlgebra mv_;
};

/// Groups the spectrum under ≡, checks that ≡ is an equivalence and a
/// congruence for ⁺ and ⊸, that the spectrum is closed under both, and that
/// the encoded algebra passes the MV axioms with a total order whose
/// implication is ⊸. Any failure throws InvariantViolation; an empty
/// spectrum throws InvalidArgument.
HatAlgebra build_hat(const Calculus& calc, const PrimeSpectrum& spec);

/// x ⊗ y = (x ⊸ y⁺)⁺ on classes.
std::size_t hat_otimes(const HatAlgebra& h, std::size_t x, std::size_t y);

/// Comparison of the class product with T and Φ evaluated on the
/// representatives.
struct OtimesAgreement {
  std::size_t hat_value = 0;
  Filter formula;  // (F ⊸ G⁺)⁺ on representatives
  Filter tensor;   // T(F, G)
  Filter phi;      // Φ(F, G)
  std::optional<std::size_t> tensor_class;
  std::optional<std::size_t> phi_class;
  bool tensor_matches_formula() const { return tensor == formula; }
  bool phi_matches_formula() const { return phi == formula; }
  bool tensor_matches_phi() const { return tensor == phi; }
};
OtimesAgreement hat_otimes_agreement(const Calculus& calc, const HatAlgebra& h,
                                     std::size_t x, std::size_t y);

/// ι_P([a]) = class of P_a. P_a is empty on the coset of 1, so the map is
/// partial; the remaining flags are evaluated where both sides are defined.
struct IotaReport {
  std::vector<std::optional<std::size_t>> class_of_coset;
  bool injective = true;
  bool onto = true;
  std::size_t neg_checked = 0, neg_agreed = 0;
  std::size_t implies_checked = 0, implies_agreed = 0;
  bool preserves_neg() const { return neg_agreed == neg_checked; }
  bool preserves_implies() const { return implies_agreed == implies_checked; }
};
/// `q` must be the quotient by the kernel of `h`.
IotaReport iota(const Calculus& calc, const HatAlgebra& h, const QuotientAlgebra& q);

/// η̂_PQ(F) = q_Q(F) for P ⊊ Q (InvalidArgument otherwise).
struct HatEtaReport {
  std::vector<std::size_t> coset_of_class;
  bool well_defined = true;
  bool preserves_plus = true;
  bool preserves_sqto = true;
  bool preserves_one = true;
  std::size_t composite_checked = 0, composite_agreed = 0;
  bool composite_ok() const { return composite_agreed == composite_checked; }
  bool passed() const {
    return well_defined && preserves_plus && preserves_sqto && preserves_one && composite_ok();
  }
  std::string witness;
};
HatEtaReport hat_eta(const Calculus& calc, const HatAlgebra& h, const QuotientAlgebra& q);

}  // namespace mvfilter
