#pragma once

// Z_𝒜-filters and congruences on M⁺(X,𝒜).
//
// On a finite space every Z_𝒜-filter is principal, so a filter is its core
// member. A z-congruence is E⁻¹ of a filter: (f, g) ∈ ρ exactly when the
// core lies inside the agreement set E(f, g). The congruence universe also
// holds the non-cancellative collapse relation {f = g} ∪ {f, g ≠ 𝟎}.

#include "mspace/func.hpp"
#include "mspace/ideal.hpp"
#include "mspace/space.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mspace {

using FnPair = std::pair<Fn, Fn>;

class ZFilter {
 public:
  /// {B ∈ 𝒜 : core ⊆ B}. Throws Error(not_measurable) if core ∉ 𝒜.
  ZFilter(SpacePtr space, Subset core);

  const SpacePtr& space() const { return space_; }
  Subset core() const { return core_; }
  /// Excludes ∅.
  bool proper() const { return !core_.empty(); }
  bool contains(Subset b) const { return core_.is_subset_of(b) && space_->is_member(b); }

  friend bool operator==(const ZFilter& a, const ZFilter& b) {
    return a.core_ == b.core_ && same_space(a.space_, b.space_);
  }

 private:
  SpacePtr space_;
  Subset core_;
};

/// Members of the filter in canonical order.
std::vector<Subset> filter_members(const ZFilter& filter);
/// Every filter on the space, improper one included, in canonical core order.
std::vector<ZFilter> enumerate_filters(const SpacePtr& space);

/// A ∪ B ∈ 𝔉 ⟹ A ∈ 𝔉 or B ∈ 𝔉, scanned over 𝒜 × 𝒜.
/// Throws Error(improper_filter) for the improper filter.
bool is_prime_filter(const ZFilter& filter);
/// No proper filter strictly contains it. Throws Error(improper_filter).
bool is_ultrafilter(const ZFilter& filter);

enum class CongruenceKind { diagonal, universal, from_filter, collapse_nonzero };

std::string_view kind_name(CongruenceKind kind);

class Congruence {
 public:
  static Congruence diagonal(SpacePtr space);
  static Congruence universal(SpacePtr space);
  /// The improper filter yields the universal relation.
  static Congruence from_filter(const ZFilter& filter);
  static Congruence collapse_nonzero(SpacePtr space);

  CongruenceKind kind() const { return kind_; }
  const SpacePtr& space() const { return space_; }

  /// Diagonal, universal and filter-induced relations.
  bool is_z_kind() const { return kind_ != CongruenceKind::collapse_nonzero; }
  /// Not the universal relation.
  bool proper() const;

  /// Core of the inducing filter (X for the diagonal, ∅ for the universal
  /// relation). Throws Error(not_cancellative) for the collapse relation.
  Subset filter_core() const;

  template <class Scalar>
  bool contains(const MeasurableFn<Scalar>& f, const MeasurableFn<Scalar>& g) const {
    require_same_space(space_, f.space());
    require_same_space(space_, g.space());
    if (kind_ == CongruenceKind::collapse_nonzero) {
      return f == g || (!f.is_zero() && !g.is_zero());
    }
    return core_.is_subset_of(agreement_set(f, g));
  }
  bool contains(const FnPair& p) const { return contains(p.first, p.second); }

  /// Same relation: z-kinds compare by core.
  friend bool operator==(const Congruence& a, const Congruence& b);

 private:
  Congruence(SpacePtr space, CongruenceKind kind, Subset core)
      : space_(std::move(space)), kind_(kind), core_(core) {}

  SpacePtr space_;
  CongruenceKind kind_;
  Subset core_;
};

/// Every z-congruence, one per member core, in canonical core order.
std::vector<Congruence> enumerate_z_congruences(const SpacePtr& space);

/// ρ ⊆ σ for z-kind relations. Throws Error(not_z_congruence) otherwise.
bool is_subcongruence(const Congruence& rho, const Congruence& sigma);

/// E(ρ). Throws Error(not_cancellative) for the collapse relation, whose
/// agreement sets include E(f + 𝟏, f) = ∅.
ZFilter E_of(const Congruence& rho);
/// E⁻¹(𝔉) = {(f, g) : E(f, g) ∈ 𝔉}.
Congruence E_inverse(const ZFilter& filter);

/// {E(f, g) : (f, g) ∈ ρ} over all pairs of `fns`, canonical order.
std::vector<Subset> observed_agreement_sets(const Congruence& rho, const std::vector<Fn>& fns);

struct CompatibilityReport {
  bool reflexive = true;
  bool symmetric = true;
  bool transitive = true;
  bool additive = true;
  bool multiplicative = true;
  std::size_t checked = 0;
  /// First failing instance: description and functions involved.
  std::optional<std::string> counterexample;
  bool holds() const { return reflexive && symmetric && transitive && additive && multiplicative; }
};

/// Equivalence and compatibility with + and · over `fns`.
CompatibilityReport compatibility_on(const Congruence& rho, const std::vector<Fn>& fns);

struct CancellativeReport {
  bool holds = true;
  /// (a + c, b + c) ∈ ρ but (a, b) ∉ ρ, reported as (a + c, b + c) and (a, b).
  std::optional<std::pair<FnPair, FnPair>> witness;
};
CancellativeReport is_cancellative_on(const Congruence& rho, const std::vector<Fn>& fns);

struct ZCongruenceReport {
  bool holds = true;
  /// A member pair and a non-member pair with the same agreement set.
  std::optional<std::pair<FnPair, FnPair>> witness;
};

/// E(f, g) ∈ E(ρ) ⟹ (f, g) ∈ ρ, with E(ρ) collected from `fns`.
ZCongruenceReport is_z_congruence(const Congruence& rho, const std::vector<Fn>& fns);

/// (f₁, g₁) ·ₜ (f₂, g₂) = (f₁f₂ + g₁g₂, f₁g₂ + g₁f₂).
FnPair twisted_product(const FnPair& p1, const FnPair& p2);

struct PrimeReport {
  /// Twisted-product membership forces a factor, over the indicator sample.
  bool definitional = true;
  /// E(ρ) is a prime filter (the universal relation counts as prime).
  bool via_filter = true;
  std::optional<std::pair<FnPair, FnPair>> witness;
  bool agree() const { return definitional == via_filter; }
};

/// Throws Error(not_z_congruence) for a non-z relation.
PrimeReport is_prime_congruence(const Congruence& rho, const FunctionGrid& grid);

/// The four equivalent primality conditions for a z-congruence.
struct PrimeConditions {
  bool prime = false;              // twisted-product definition
  bool contains_prime = false;     // some prime z-congruence σ ⊆ ρ
  bool product_condition = false;  // f₁f₂ + g₁g₂ = f₁g₂ + f₂g₁ forces a factor
  bool comparable = false;         // every f, g comparable on a member of E(ρ)
  bool agree() const {
    return prime == contains_prime && prime == product_condition && prime == comparable;
  }
};

/// Conditions for every z-congruence of the space, in enumerate_z_congruences
/// order. Pairs-of-pairs conditions use grid.indicators(); the comparability
/// condition uses grid.functions().
std::vector<PrimeConditions> prime_conditions(const SpacePtr& space, const FunctionGrid& grid);

/// Proper z-congruence not strictly contained in another proper z-congruence.
/// The collapse relation is outside the z-universe and reports false.
bool is_maximal_congruence(const Congruence& rho);
std::vector<Congruence> maximal_congruences(const SpacePtr& space);

/// ρ_x = {(f, g) : f(x) = g(x)}.
Congruence fixed_congruence(const SpacePtr& space, std::string_view point);

/// Intersection of z-congruences. Throws Error(not_z_congruence).
Congruence z_meet(const std::vector<Congruence>& rhos);
/// Smallest z-congruence containing both.
Congruence z_join(const Congruence& r1, const Congruence& r2);

struct ChainJoinReport {
  bool dominated = true;
  std::size_t checked = 0;
  std::optional<FnPair> counterexample;
};
/// Pairs of `fns` linked by a chain of ρ₁ ∪ ρ₂ steps inside `fns` lie in
/// z_join(ρ₁, ρ₂).
ChainJoinReport chain_join_dominated(const Congruence& r1, const Congruence& r2,
                                     const std::vector<Fn>& fns);

/// Congruence on the ring M(X,𝒜) induced by an ideal: (f, g) ∈ k ⟺ f − g ∈ I.
class RingCongruence {
 public:
  /// Throws Error(side_mismatch) unless the ideal is a ring ideal.
  explicit RingCongruence(IdealCore ideal);

  const IdealCore& ideal() const { return ideal_; }
  bool contains(const Fn& f, const Fn& g) const { return ideal_.contains(f - g); }

  friend bool operator==(const RingCongruence&, const RingCongruence&) = default;

 private:
  IdealCore ideal_;
};

/// k^∇ = k ∩ (M⁺ × M⁺).
Congruence nabla(const RingCongruence& k);
/// ρ^Δ, the ring congruence with the same filter. Throws Error(not_z_congruence).
RingCongruence delta(const Congruence& rho);

/// For ring functions f, g: h = f − (f ∧ g), k = g − (g ∧ f) are non-negative
/// with f − g = h − k and E(f, g) = E(h, k).
struct DeltaCertificate {
  Fn h;
  Fn k;
  bool consistent = false;  // f − g = h − k and E(f, g) = E(h, k)
};
DeltaCertificate delta_certificate(const Fn& f, const Fn& g);

/// 𝓚₊(J) = {(f, g) : f + s = g + t for some s, t ∈ J}.
Congruence ideal_to_congruence(const IdealCore& semiring_ideal);
/// 𝓘₊(ρ) = {f : (f, 𝟎) ∈ ρ}. Throws Error(not_z_congruence).
IdealCore congruence_to_ideal(const Congruence& rho);

/// 𝔐(f, g), the intersection of all maximal congruences containing (f, g);
/// the universal relation when none does.
Congruence m_frak(const NonNegFn<Rational>& f, const NonNegFn<Rational>& g);
/// The maximal congruences containing (f, g), found by scanning.
std::vector<Congruence> maximal_congruences_containing(const Fn& f, const Fn& g);

}  // namespace mspace
