#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "mvfilter/rational.hpp"

namespace mvfilter {

enum class CutKind { Open, Closed };

/// The up-set ]p,1] (Open) or [p,1] (Closed) of the rational chain [0,1].
///
/// Closed 0 is the whole chain and Open 1 is empty; both are representable
/// but rejected by operations that need a proper filter.
struct CutFilter {
  Rat endpoint;
  CutKind kind = CutKind::Closed;

  static CutFilter open(Rat p) { return {std::move(p), CutKind::Open}; }
  static CutFilter closed(Rat p) { return {std::move(p), CutKind::Closed}; }
  static CutFilter top() { return closed(Rat::one()); }        // {1}
  static CutFilter zero_cut() { return open(Rat::zero()); }    // ]0,1]

  bool contains(const Rat& x) const {
    return kind == CutKind::Open ? x > endpoint : x >= endpoint;
  }
  bool is_improper() const { return kind == CutKind::Closed && endpoint.is_zero(); }
  bool is_empty() const { return kind == CutKind::Open && endpoint.is_one(); }
  bool is_proper() const { return !is_improper() && !is_empty(); }
  bool is_subset_of(const CutFilter& o) const;

  /// "[7/10,1]" or "(7/10,1]".
  std::string to_string() const;
  /// Inverse of to_string; also accepts "]p,1]" for the open cut.
  static CutFilter parse(std::string_view text);

  friend bool operator==(const CutFilter&, const CutFilter&) = default;
};

/// ]p,1]⁺ = [1−p,1] and [p,1]⁺ = ]1−p,1].
CutFilter cut_plus(const CutFilter& f);

/// Closed form of F⊸G for proper cuts, by cases on containment and kinds.
CutFilter cut_sqto(const CutFilter& f, const CutFilter& g);

/// {z | ∀f ∈ F∩G: max(0, f+z−1) ∈ G}, computed by eliminating f from the
/// linear constraints describing the violating (f, z) pairs.
CutFilter oracle_sqto(const CutFilter& f, const CutFilter& g);
/// {z | ¬z ∉ F} by the same elimination.
CutFilter oracle_plus(const CutFilter& f);
/// {z | ∀a ∉ F: z→a ∉ F} by the same elimination.
CutFilter oracle_kernel(const CutFilter& f);

/// Endpoints equal, or the cuts equal.
bool cut_equiv(const CutFilter& f, const CutFilter& g);
/// F⊸G = G⊸F = {1}, both evaluated by the oracle.
bool cut_equiv_definitional(const CutFilter& f, const CutFilter& g);

/// A ≡-class of proper cuts, identified by the common endpoint.
/// The canonical member is the closed cut, except ]0,1] at 0.
struct HatPoint {
  Rat value;
  CutFilter canonical() const;
  static HatPoint of(const CutFilter& f);
  friend bool operator==(const HatPoint&, const HatPoint&) = default;
};

HatPoint hat_plus(const HatPoint& x);
HatPoint hat_sqto(const HatPoint& x, const HatPoint& y);
HatPoint hat_oplus(const HatPoint& x, const HatPoint& y);  // x⁺ ⊸ y

/// The class of ]a,1], which for 0 < a < 1 is also that of [a,1]; the top
/// is sent to the class of {1}.
HatPoint dense_embed(const Rat& a);

struct EmbeddingReport {
  int denominator = 0;
  bool injective = true;
  bool preserves_neg = true;
  bool preserves_implies = true;
  bool preserves_oplus = true;
  bool preserves_constants = true;
  std::string witness;
  bool passed() const {
    return injective && preserves_neg && preserves_implies && preserves_oplus &&
           preserves_constants;
  }
};
/// Checks the embedding on the sub-chain {0, 1/d, ..., 1}.
EmbeddingReport check_dense_embedding(int denominator);

/// Reproducible random rationals and proper cuts.
class CutSampler {
public:
  explicit CutSampler(std::uint64_t seed, int max_denominator = 1000)
      : rng_(seed), max_den_(max_denominator) {}
  Rat rational();
  CutFilter proper_cut();

private:
  std::mt19937_64 rng_;
  int max_den_;
};

}  // namespace mvfilter
