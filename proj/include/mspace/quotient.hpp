#pragma once

// Quotients M⁺(X,𝒜)/ρ by z-congruences: class arithmetic, the order
// ρ(f) ≤ ρ(g) ⟺ f ≤ g on some member of E(ρ), realness and the restricted
// structure space of real maximal congruences.
//
// Scalars are rational, so "real" means every class is the class of a
// rational constant.

#include "mspace/filtcong.hpp"
#include "mspace/func.hpp"
#include "mspace/ideal.hpp"
#include "mspace/structure.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mspace {

/// ρ(f), stored by the representative that is zero off the filter core.
class QuotClass {
 public:
  /// Throws Error(not_z_congruence) for a non-z relation.
  QuotClass(Congruence rho, const Fn& f);

  const Congruence& rho() const { return rho_; }
  const Fn& rep() const { return rep_; }

  friend QuotClass operator+(const QuotClass& a, const QuotClass& b);
  friend QuotClass operator*(const QuotClass& a, const QuotClass& b);
  friend bool operator==(const QuotClass& a, const QuotClass& b);

 private:
  Congruence rho_;
  Fn rep_;
};

struct OrderResult {
  bool holds = false;
  /// Member of E(ρ) on which f ≤ g; the core whenever one exists.
  std::optional<Subset> witness;
  /// When !holds: for each member of E(ρ), a point where f > g.
  std::vector<std::pair<Subset, std::size_t>> refutation;
};

/// ρ(f) ≤ ρ(g). Throws Error(not_z_congruence).
OrderResult quot_leq(const Congruence& rho, const Fn& f, const Fn& g);

/// A member of E(ρ) with f < g pointwise, if any. Throws Error(not_maximal).
std::optional<Subset> quot_lt(const Congruence& rho, const Fn& f, const Fn& g);

struct TotalOrderReport {
  bool holds = true;
  bool dichotomy = true;  // {f ≤ g} ∪ {g ≤ f} = X and one side lies in E(ρ)
  std::size_t checked = 0;
  std::optional<FnPair> counterexample;
};
/// Every grid pair comparable. Throws Error(not_maximal).
TotalOrderReport is_totally_ordered(const Congruence& rho, const FunctionGrid& grid);

/// φ(r) = ρ(𝐫). Throws Error(not_maximal).
QuotClass scalar_embed(const Congruence& rho, const Rational& r);

/// n ranges over 1..(⌈max grid value⌉ + 2).
std::vector<CheckedInt> sampled_naturals(const FunctionGrid& grid);

struct RealnessReport {
  bool filter_closed = false;  // E(ρ) closed under finite intersection
  bool phi_onto = false;       // every grid class is a constant class
  bool cofinal = false;        // every grid class lies below some ρ(𝐧)
  CheckedInt sample_bound = 0;
  bool real() const { return filter_closed && phi_onto && cofinal; }
  bool agree() const { return filter_closed == phi_onto && phi_onto == cofinal; }
};
/// Throws Error(not_maximal).
RealnessReport is_real(const Congruence& rho, const FunctionGrid& grid);

/// M(X,𝒜)/M is the scalar field: every signed grid function differs from a
/// constant by an element of M. Throws Error(side_mismatch) for a semiring ideal.
bool is_real_ideal(const IdealCore& maximal_ring_ideal, const FunctionGrid& grid);

struct InfinitelyLargeReport {
  bool geq_every_n = false;        // (1) ρ(f) ≥ ρ(𝐧)
  bool level_sets_in_filter = false;  // (2) {f ≥ n} ∈ E(ρ)
  bool truncation_collapses = false;  // (3) (f ∧ 𝐧, 𝐧) ∈ ρ
  bool unbounded_on_members = false;  // (4)
  /// First sampled n at which each condition fails.
  std::optional<CheckedInt> first_failure[4];
  /// ⌈max f⌉ + 1, at which all four conditions fail.
  CheckedInt witness_n = 0;
  bool witness_fails_all = false;
  /// (2) and (3) agree at every sampled n.
  bool levels_match_truncations = true;
  CheckedInt sample_bound = 0;
  bool value() const { return geq_every_n; }
  bool agree() const {
    return geq_every_n == level_sets_in_filter && geq_every_n == truncation_collapses &&
           geq_every_n == unbounded_on_members;
  }
};
/// Throws Error(not_maximal).
InfinitelyLargeReport is_infinitely_large(const Congruence& rho, const Fn& f,
                                          const FunctionGrid& grid);

/// Class of 1/f off Z(f). Throws Error(not_maximal) or Error(not_invertible).
QuotClass quot_inverse(const Congruence& rho, const Fn& f);

struct ConvexReport {
  bool holds = true;
  std::size_t checked = 0;
  /// (f, g) ∈ ρ and f ≤ f₁ ≤ g₁ ≤ g with (f₁, g₁) ∉ ρ.
  std::optional<std::pair<FnPair, FnPair>> counterexample;
};
/// Throws Error(not_z_congruence).
ConvexReport is_convex(const Congruence& rho, const FunctionGrid& grid);

struct RMCongReport {
  /// Real maximal congruences with the restricted closed base 𝔪ᴿ(f, g).
  StructureSpace space;
  std::size_t real_points = 0;
  std::size_t fixed_points = 0;
  /// 𝔪ᴿ(f,g)ᶜ = 𝔪ᴿ(χ_{E(f,g)}, 𝟎) on every base set.
  bool complement_formula = true;
  /// The variant with χ_{Z(f)∪Z(g)} in place of χ_{E(f,g)}, and its first failure.
  bool zero_union_formula = true;
  std::optional<FnPair> zero_union_counterexample;
  /// η̃ bijects real maximal congruences with real maximal ideals.
  bool eta_tilde_bijective = false;
  /// Every real maximal congruence is fixed.
  bool realcompact = false;
  bool measurable = false;  // the restricted base is a separating σ-algebra
};
RMCongReport build_rmcong(const SpacePtr& space, const FunctionGrid& grid);

}  // namespace mspace
