#pragma once

// Ideals of the ring M(X,𝒜) and of the semiring M⁺(X,𝒜).
//
// Every ideal of either structure is determined by a member `core` of 𝒜:
// the ring ideal {f : core ⊆ Z(f)} and its positive part. Ideals are stored
// by core; element-level claims are checked against sampled functions.

#include "mspace/func.hpp"
#include "mspace/space.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mspace {

enum class Side { ring, semiring };

std::string_view side_name(Side side);

class IdealCore {
 public:
  /// Throws Error(not_measurable) when `core` is not a member.
  IdealCore(SpacePtr space, Subset core, Side side);

  const SpacePtr& space() const { return space_; }
  Subset core() const { return core_; }
  Side side() const { return side_; }

  bool is_zero() const { return core_ == space_->full(); }
  bool is_improper() const { return core_.empty(); }

  /// core ⊆ Z(f). For a semiring ideal a function with a negative value
  /// raises Error(not_in_positive_cone).
  template <class Scalar>
  bool contains(const MeasurableFn<Scalar>& f) const {
    require_same_space(space_, f.space());
    if (side_ == Side::semiring && !f.is_nonneg()) {
      throw Error(Errc::not_in_positive_cone, "semiring ideals hold non-negative functions only");
    }
    return core_.is_subset_of(zero_set(f));
  }

  /// Inclusion of ideals of the same side (reverse inclusion of cores).
  bool is_subideal_of(const IdealCore& other) const;

  friend bool operator==(const IdealCore& a, const IdealCore& b) {
    return a.side_ == b.side_ && a.core_ == b.core_ && same_space(a.space_, b.space_);
  }

 private:
  SpacePtr space_;
  Subset core_;
  Side side_;
};

/// α(I) = I ∩ M⁺. Throws Error(side_mismatch) unless I is a ring ideal.
IdealCore alpha(const IdealCore& ring_ideal);
/// β(J) = {f − g : f, g ∈ J}. Throws Error(side_mismatch) unless J is a
/// semiring ideal.
IdealCore beta(const IdealCore& semiring_ideal);

/// Element-level witness that f ∈ β(J): f = f⁺ − (−f⁻) with both parts in J.
struct BetaCertificate {
  Fn positive;
  Fn negated_negative;
  bool holds = false;
};
BetaCertificate beta_certificate(const IdealCore& semiring_ideal, const Fn& f);

/// I + J. Same side and space required.
IdealCore ideal_sum(const IdealCore& i, const IdealCore& j);
/// I ∩ J. Same side and space required.
IdealCore ideal_meet(const IdealCore& i, const IdealCore& j);

/// One ideal per member of 𝒜, in canonical member order (so the improper
/// ideal comes first and the zero ideal last).
std::vector<IdealCore> enumerate_ideals(const SpacePtr& space, Side side);

/// M⁺_f = {g : Z(f) ⊆ Z(g)}.
IdealCore principal_z_ideal(const Fn& f, Side side = Side::semiring);

/// M⁺_f as the intersection of all maximal ideals containing f, found by
/// scanning every ideal for maximality. Independent of principal_z_ideal.
IdealCore intersection_of_maximal_containing(const Fn& f, Side side = Side::semiring);

struct ZIdealReport {
  bool holds = true;
  std::size_t checked = 0;
  /// f ∈ I and g ∈ M⁺_f with g ∉ I.
  std::optional<std::pair<Fn, Fn>> counterexample;
};

/// For every grid f in I, checks M⁺_f ⊆ I elementwise over the grid.
ZIdealReport is_z_ideal(const IdealCore& semiring_ideal, const FunctionGrid& grid);

struct StrongIdealReport {
  bool holds = true;
  std::size_t checked = 0;
  /// Divisibility factors for the first sum found inside I: f = (f+g)·h and
  /// g = (f+g)·k.
  std::optional<std::pair<Fn, Fn>> factors;
  std::optional<std::pair<Fn, Fn>> counterexample;
};

/// For every grid pair with f + g ∈ I, checks f, g ∈ I, certified by the
/// divisibility factors f = (f+g)·h, g = (f+g)·k.
StrongIdealReport is_strong_ideal(const IdealCore& semiring_ideal, const FunctionGrid& grid);

/// Definitional primality over the grid: fg ∈ I implies f ∈ I or g ∈ I.
/// Grid functions for semiring ideals, signed grid functions for ring ideals.
bool is_prime_ideal(const IdealCore& ideal, const FunctionGrid& grid);

/// Proper and not strictly contained in another proper ideal (inclusion scan
/// over all ideals of the same side).
bool is_maximal_ideal(const IdealCore& ideal);

/// M_x = {h : h(x) = 0}; its core is the atom containing x.
IdealCore fixed_maximal_ideal(const SpacePtr& space, std::string_view point,
                              Side side = Side::ring);

}  // namespace mspace
