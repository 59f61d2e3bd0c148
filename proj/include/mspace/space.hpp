#pragma once

// Finite measurable spaces: ground sets, subsets as bitmasks, and the
// σ-algebra generated by a family of subsets together with its atoms.

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mspace {

/// A subset of an index range [0, n) with n <= 64. Used for subsets of the
/// ground set, for sets of atoms and for sets of structure-space points.
class Subset {
 public:
  using Mask = std::uint64_t;
  static constexpr std::size_t max_size = 64;

  constexpr Subset() = default;
  constexpr explicit Subset(Mask mask) : mask_(mask) {}

  static constexpr Subset full(std::size_t n) {
    return Subset(n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1);
  }
  static constexpr Subset singleton(std::size_t i) {
    return Subset(Mask{1} << i);
  }

  constexpr Mask mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(mask_));
  }
  constexpr bool contains(std::size_t i) const { return (mask_ >> i) & 1U; }
  constexpr bool is_subset_of(Subset other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  constexpr bool intersects(Subset other) const {
    return (mask_ & other.mask_) != 0;
  }
  /// Complement relative to [0, n).
  constexpr Subset complement(std::size_t n) const {
    return Subset(~mask_ & full(n).mask_);
  }
  /// Indices in increasing order.
  std::vector<std::size_t> indices() const;

  friend constexpr Subset operator|(Subset a, Subset b) {
    return Subset(a.mask_ | b.mask_);
  }
  friend constexpr Subset operator&(Subset a, Subset b) {
    return Subset(a.mask_ & b.mask_);
  }
  friend constexpr Subset operator-(Subset a, Subset b) {
    return Subset(a.mask_ & ~b.mask_);
  }
  friend constexpr bool operator==(Subset, Subset) = default;

 private:
  Mask mask_ = 0;
};

/// Canonical order: by cardinality, then by numeric mask.
struct CanonicalLess {
  constexpr bool operator()(Subset a, Subset b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.mask() < b.mask();
  }
};

class GroundSet {
 public:
  /// Throws Error(invalid_ground_set) on an empty list, duplicate labels or
  /// more than Subset::max_size points.
  explicit GroundSet(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  /// Throws Error(unknown_point).
  std::size_t index_of(std::string_view label) const;
  std::optional<std::size_t> find(std::string_view label) const;

  /// Throws Error(unknown_point) for any label not in the ground set.
  Subset subset_of(std::span<const std::string> labels) const;
  /// Labels of the members of `s`, in point order.
  std::vector<std::string> labels_of(Subset s) const;

  Subset full() const { return Subset::full(size()); }

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<std::string> labels_;
};

class SigmaAlgebra;
using SpacePtr = std::shared_ptr<const SigmaAlgebra>;

/// A σ-algebra on a finite ground set. On a finite set countable unions are
/// finite unions, so the family is the Boolean algebra generated by the
/// generators; it is determined by its atoms, and every member is a union
/// of atoms.
class SigmaAlgebra {
 public:
  /// Smallest σ-algebra containing `generators`. Throws
  /// Error(unknown_point) if a generator is not a subset of the ground set.
  static SpacePtr generate(GroundSet ground, std::span<const Subset> generators);
  static SpacePtr generate(std::vector<std::string> points,
                           const std::vector<std::vector<std::string>>& generators);
  /// The σ-algebra whose atoms are exactly the given blocks. Blocks must
  /// partition the ground set.
  static SpacePtr from_partition(GroundSet ground, std::span<const Subset> blocks);

  const GroundSet& ground() const { return ground_; }
  std::size_t point_count() const { return ground_.size(); }
  Subset full() const { return ground_.full(); }

  /// Members in canonical order (cardinality, then mask).
  std::span<const Subset> members() const { return members_; }
  /// Atoms ordered by their smallest point.
  std::span<const Subset> atoms() const { return atoms_; }
  std::size_t atom_count() const { return atoms_.size(); }
  const Subset& atom(std::size_t i) const { return atoms_.at(i); }

  bool separating() const { return separating_; }
  bool is_member(Subset s) const;

  /// Index of the atom containing point `p`.
  std::size_t atom_index(std::size_t p) const { return atom_of_point_.at(p); }
  /// Throws Error(unknown_point).
  std::size_t atom_index(std::string_view label) const;

  /// Union of the atoms selected by `atom_set` (a subset of [0, atom_count)).
  Subset union_of_atoms(Subset atom_set) const;
  /// Atoms contained in `s`. For a member, union_of_atoms of the result is `s`.
  Subset atoms_within(Subset s) const;

  /// Generators as supplied (deduplicated, canonical order).
  std::span<const Subset> generators() const { return generators_; }

  friend bool operator==(const SigmaAlgebra& a, const SigmaAlgebra& b) {
    return a.ground_ == b.ground_ && a.atoms_ == b.atoms_;
  }

 private:
  SigmaAlgebra(GroundSet ground, std::vector<Subset> generators,
               std::vector<Subset> atoms);

  GroundSet ground_;
  std::vector<Subset> generators_;
  std::vector<Subset> atoms_;
  std::vector<Subset> members_;
  std::vector<std::size_t> atom_of_point_;
  bool separating_ = false;
};

/// Same object or structurally equal.
bool same_space(const SpacePtr& a, const SpacePtr& b);
/// Throws Error(space_mismatch) unless same_space(a, b).
void require_same_space(const SpacePtr& a, const SpacePtr& b);

/// The atom containing `label`; equals the intersection of all members
/// containing it.
Subset atom_of(const SigmaAlgebra& space, std::string_view label);

/// Pairwise scan: for every x != y some member contains x but not y.
bool separates_points(const SigmaAlgebra& space);

struct CompactnessReport {
  bool finite = true;
  bool lattice_compact = false;
  /// Finite subcover of the cover of X by atoms.
  std::vector<Subset> subcover;
  /// Number of member covers of X that were checked for a finite subcover.
  std::size_t covers_checked = 0;
  /// Filled in by structure::compactness_equivalences.
  std::optional<bool> all_maximal_fixed;
};

/// Compactness of the σ-algebra as a lattice. Every cover of X by members is
/// enumerated (when there are at most 16 members) and shown to contain a
/// finite subcover; the atom cover is returned as certificate.
CompactnessReport is_compact(const SigmaAlgebra& space);

/// Every σ-algebra on an n-point ground set labelled by default_labels, one per set
/// partition (Bell(n) spaces), in restricted-growth-string order.
std::vector<SpacePtr> all_sigma_algebras(std::size_t n);
/// Labels "a", "b", ... for small n and "p<i>" beyond 26 points.
std::vector<std::string> default_labels(std::size_t n);

}  // namespace mspace
