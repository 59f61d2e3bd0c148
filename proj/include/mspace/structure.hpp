#pragma once

// The structure space MCong(M⁺(X,𝒜)): maximal congruences with the closed
// base 𝔪(f, g) = {ρ : (f, g) ∈ ρ}, its comparison with the maximal ideal
// space of M(X,𝒜), and the isomorphism problem for finite spaces.

#include "mspace/filtcong.hpp"
#include "mspace/func.hpp"
#include "mspace/ideal.hpp"
#include "mspace/space.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mspace {

struct BaseClosedSet {
  Subset points;  // indices into StructureSpace::points()
  FnPair representative;
};

class StructureSpace {
 public:
  StructureSpace(SpacePtr space, std::vector<Congruence> points,
                 std::vector<BaseClosedSet> base, bool union_identity, std::size_t union_checked);

  const SpacePtr& space() const { return space_; }
  const std::vector<Congruence>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  /// "rho_a" for a singleton atom, "rho_{b,c}" otherwise.
  std::string point_label(std::size_t i) const;

  /// Distinct base closed sets found, canonical order, each with the first
  /// pair that produced it.
  const std::vector<BaseClosedSet>& base() const { return base_; }

  /// 𝔪(f, g), evaluated by membership in each point.
  Subset m(const Fn& f, const Fn& g) const;

  /// 𝔪(a,b) ∪ 𝔪(c,d) = 𝔪(ac+bd, ad+bc) over the indicator sample.
  bool union_identity_holds() const { return union_identity_; }
  std::size_t union_identity_checked() const { return union_checked_; }

 private:
  SpacePtr space_;
  std::vector<Congruence> points_;
  std::vector<BaseClosedSet> base_;
  bool union_identity_;
  std::size_t union_checked_;
};

/// Points are the maximal congruences ordered by atom. Base sets come from
/// every grid pair and every pair (χ_{Aᶜ}, 𝟎), A ∈ 𝒜.
StructureSpace build_structure_space(const SpacePtr& space, const FunctionGrid& grid);
/// Same construction over a chosen subset of maximal congruences.
StructureSpace build_structure_space(const SpacePtr& space, const FunctionGrid& grid,
                                     std::vector<Congruence> points);

/// η(ρ) = Z⁻¹[E(ρ)], a maximal ideal of M(X,𝒜). Throws Error(not_maximal).
IdealCore eta(const Congruence& rho);

struct EtaReport {
  bool bijective = false;
  bool closed_sets_forward = true;   // η(𝔪(f,g)) = 𝓜_{f−g}
  bool closed_sets_backward = true;  // η⁻¹(𝓜_h) = 𝔪(|h|, 𝟎)
  std::size_t checked = 0;
  std::optional<std::string> counterexample;
  bool holds() const { return bijective && closed_sets_forward && closed_sets_backward; }
};

/// 𝓜_h = {M maximal : h ∈ M} as indices into the maximal ring ideals listed
/// by enumerate_ideals in canonical order.
EtaReport verify_eta(const StructureSpace& s, const FunctionGrid& grid);

/// The base family as a σ-algebra on the points (labels from point_label).
SpacePtr sigma_algebra_on_mcong(const StructureSpace& s);

struct MCongSigmaReport {
  bool complement_formula = true;  // 𝔪(f,g)ᶜ = 𝔪(χ_{E(f,g)}, 𝟎)
  bool union_formula = true;       // ⋃𝔪(fᵢ,gᵢ) = 𝔪(χ_{⋂E(fᵢ,gᵢ)ᶜ}, 𝟎)
  bool is_sigma_algebra = true;    // family equals the σ-algebra it generates
  bool separating = false;
  std::size_t checked = 0;
  std::optional<std::string> counterexample;
  bool holds() const { return complement_formula && union_formula && is_sigma_algebra && separating; }
};
MCongSigmaReport verify_mcong_sigma(const StructureSpace& s);

/// φ(x) = ρ_x as a map from ground points to structure-space points.
/// Throws Error(not_t_measurable) unless the space separates points.
std::vector<std::size_t> phi(const StructureSpace& s);

struct PhiReport {
  bool bijective = false;
  bool image_formula = true;     // φ(E(f,g)) = 𝔪(f,g)
  bool preimage_formula = true;  // φ⁻¹(𝔪(f,g)) = E(f,g)
  std::size_t checked = 0;
  bool holds() const { return bijective && image_formula && preimage_formula; }
};
PhiReport verify_phi(const StructureSpace& s, const FunctionGrid& grid);

struct EquivalenceReport {
  bool maximal_ideals_fixed = false;       // (1)
  bool maximal_congruences_fixed = false;  // (2)
  bool finite = false;                     // (3)
  bool lattice_compact = false;            // (4)
  bool bounded = false;                    // (5) M = M*
  CompactnessReport compactness;
  bool agree() const {
    return maximal_ideals_fixed == maximal_congruences_fixed && maximal_ideals_fixed == finite &&
           maximal_ideals_fixed == lattice_compact && maximal_ideals_fixed == bounded;
  }
};

/// Each condition by its own procedure; compactness.all_maximal_fixed is
/// filled from (2).
EquivalenceReport compactness_equivalences(const SpacePtr& space, const FunctionGrid& grid);

/// A bijection between ground sets, as point index images.
struct PointBijection {
  SpacePtr from;
  SpacePtr to;
  std::vector<std::size_t> image;

  friend bool operator==(const PointBijection& a, const PointBijection& b) {
    return same_space(a.from, b.from) && same_space(a.to, b.to) && a.image == b.image;
  }
};

/// Semiring isomorphism M⁺(X,𝒜) → M⁺(Y,ℬ) induced by an atom bijection:
/// Φ(f) takes f's value on atom i at atom atom_image[i].
class SemiringIso {
 public:
  SemiringIso(SpacePtr source, SpacePtr target, std::vector<std::size_t> atom_image);

  /// Descriptor given by the images of the atom characteristic functions.
  /// Throws Error(not_representable) unless those images are the atom
  /// characteristic functions of the target in some bijective order.
  static SemiringIso from_atom_images(const SpacePtr& source, const SpacePtr& target,
                                      const std::vector<Fn>& images);

  const SpacePtr& source() const { return source_; }
  const SpacePtr& target() const { return target_; }
  const std::vector<std::size_t>& atom_image() const { return atom_image_; }

  Fn apply(const Fn& f) const;

  friend bool operator==(const SemiringIso& a, const SemiringIso& b) {
    return same_space(a.source_, b.source_) && same_space(a.target_, b.target_) &&
           a.atom_image_ == b.atom_image_;
  }

 private:
  SpacePtr source_;
  SpacePtr target_;
  std::vector<std::size_t> atom_image_;
};

/// Φ(f) = f ∘ h⁻¹. Throws Error(not_homeomorphism) unless h is a bijection
/// with A ∈ 𝒜 ⟺ h(A) ∈ ℬ.
SemiringIso transfer_isomorphism(const PointBijection& h);
/// Reads the atom permutation back as a point bijection. Throws
/// Error(not_t_measurable) unless both spaces separate points.
PointBijection recover_homeomorphism(const SemiringIso& iso);

struct IsoCertificate {
  bool additive = true;
  bool multiplicative = true;
  bool lattice = true;
  bool fixes_scalars = true;
  bool bijective_on_grid = true;
  std::size_t checked = 0;
  bool holds() const {
    return additive && multiplicative && lattice && fixes_scalars && bijective_on_grid;
  }
};
/// Checks Φ is a semiring and lattice isomorphism over the grid of the source
/// (and that it maps that grid onto the target's grid of the same values).
IsoCertificate certify_isomorphism(const SemiringIso& iso, const std::vector<Rational>& values);

}  // namespace mspace
