#include "mspace/space.hpp"

#include "mspace/error.hpp"

#include <algorithm>
#include <unordered_set>

namespace mspace {

namespace {

// Exhaustive enumeration of unions of atoms; beyond this the member list is
// not materialized.
constexpr std::size_t max_atoms = 20;

std::size_t lowest(Subset s) {
  return static_cast<std::size_t>(std::countr_zero(s.mask()));
}

}  // namespace

std::vector<std::size_t> Subset::indices() const {
  std::vector<std::size_t> out;
  for (Mask m = mask_; m != 0; m &= m - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  }
  return out;
}

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw Error(Errc::invalid_ground_set, "ground set must be nonempty");
  }
  if (labels_.size() > Subset::max_size) {
    throw Error(Errc::invalid_ground_set,
                "at most " + std::to_string(Subset::max_size) + " points supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : labels_) {
    if (!seen.insert(label).second) {
      throw Error(Errc::invalid_ground_set, "duplicate label \"" + label + "\"");
    }
  }
}

std::optional<std::size_t> GroundSet::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t GroundSet::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw Error(Errc::unknown_point, "no point labelled \"" + std::string(label) + "\"");
}

Subset GroundSet::subset_of(std::span<const std::string> labels) const {
  Subset s;
  for (const auto& label : labels) s = s | Subset::singleton(index_of(label));
  return s;
}

std::vector<std::string> GroundSet::labels_of(Subset s) const {
  std::vector<std::string> out;
  for (auto i : s.indices()) out.push_back(labels_.at(i));
  return out;
}

SigmaAlgebra::SigmaAlgebra(GroundSet ground, std::vector<Subset> generators,
                           std::vector<Subset> atoms)
    : ground_(std::move(ground)),
      generators_(std::move(generators)),
      atoms_(std::move(atoms)) {
  std::sort(atoms_.begin(), atoms_.end(),
            [](Subset a, Subset b) { return lowest(a) < lowest(b); });
  if (atoms_.size() > max_atoms) {
    throw Error(Errc::invalid_ground_set,
                "σ-algebra has " + std::to_string(atoms_.size()) +
                    " atoms; at most " + std::to_string(max_atoms) + " supported");
  }
  atom_of_point_.assign(ground_.size(), 0);
  for (std::size_t a = 0; a < atoms_.size(); ++a) {
    for (auto p : atoms_[a].indices()) atom_of_point_[p] = a;
  }
  const std::size_t count = std::size_t{1} << atoms_.size();
  members_.reserve(count);
  for (Subset::Mask m = 0; m < count; ++m) {
    members_.push_back(union_of_atoms(Subset(m)));
  }
  std::sort(members_.begin(), members_.end(), CanonicalLess{});
  separating_ = std::all_of(atoms_.begin(), atoms_.end(),
                            [](Subset a) { return a.size() == 1; });
}

SpacePtr SigmaAlgebra::generate(GroundSet ground, std::span<const Subset> generators) {
  const Subset x = ground.full();
  std::vector<Subset> gens;
  for (auto g : generators) {
    if (!g.is_subset_of(x)) {
      throw Error(Errc::unknown_point, "generator refers to a point outside the ground set");
    }
    if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  }
  std::sort(gens.begin(), gens.end(), CanonicalLess{});

  // Refine {X} by every generator; the blocks left are the atoms.
  std::vector<Subset> blocks{x};
  for (auto g : gens) {
    std::vector<Subset> next;
    for (auto b : blocks) {
      if (auto in = b & g; !in.empty()) next.push_back(in);
      if (auto out = b - g; !out.empty()) next.push_back(out);
    }
    blocks = std::move(next);
  }
  return SpacePtr(new SigmaAlgebra(std::move(ground), std::move(gens), std::move(blocks)));
}

SpacePtr SigmaAlgebra::generate(std::vector<std::string> points,
                                const std::vector<std::vector<std::string>>& generators) {
  GroundSet ground(std::move(points));
  std::vector<Subset> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) gens.push_back(ground.subset_of(g));
  return generate(std::move(ground), gens);
}

SpacePtr SigmaAlgebra::from_partition(GroundSet ground, std::span<const Subset> blocks) {
  Subset seen;
  for (auto b : blocks) {
    if (b.empty() || b.intersects(seen)) {
      throw Error(Errc::invalid_ground_set, "blocks must be nonempty and disjoint");
    }
    seen = seen | b;
  }
  if (seen != ground.full()) {
    throw Error(Errc::invalid_ground_set, "blocks must cover the ground set");
  }
  return generate(std::move(ground), blocks);
}

bool SigmaAlgebra::is_member(Subset s) const {
  return s.is_subset_of(full()) && union_of_atoms(atoms_within(s)) == s;
}

std::size_t SigmaAlgebra::atom_index(std::string_view label) const {
  return atom_of_point_.at(ground_.index_of(label));
}

Subset SigmaAlgebra::union_of_atoms(Subset atom_set) const {
  Subset out;
  for (Subset::Mask m = atom_set.mask(); m != 0; m &= m - 1) {
    out = out | atoms_[static_cast<std::size_t>(std::countr_zero(m))];
  }
  return out;
}

Subset SigmaAlgebra::atoms_within(Subset s) const {
  Subset out;
  for (std::size_t a = 0; a < atoms_.size(); ++a) {
    if (atoms_[a].is_subset_of(s)) out = out | Subset::singleton(a);
  }
  return out;
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_space(const SpacePtr& a, const SpacePtr& b) {
  if (!same_space(a, b)) {
    throw Error(Errc::space_mismatch, "operands live on different measurable spaces");
  }
}

Subset atom_of(const SigmaAlgebra& space, std::string_view label) {
  return space.atom(space.atom_index(label));
}

bool separates_points(const SigmaAlgebra& space) {
  const std::size_t n = space.point_count();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      bool split = std::any_of(space.members().begin(), space.members().end(),
                               [&](Subset m) { return m.contains(x) && !m.contains(y); });
      if (!split) return false;
    }
  }
  return true;
}

CompactnessReport is_compact(const SigmaAlgebra& space) {
  CompactnessReport report;
  const Subset x = space.full();
  const auto members = space.members();

  auto subcover_of = [&](const std::vector<Subset>& cover) {
    std::vector<Subset> picked;
    Subset covered;
    for (auto atom : space.atoms()) {
      if (atom.is_subset_of(covered)) continue;
      auto it = std::find_if(cover.begin(), cover.end(),
                             [&](Subset m) { return atom.is_subset_of(m); });
      if (it == cover.end()) return std::optional<std::vector<Subset>>{};
      picked.push_back(*it);
      covered = covered | *it;
    }
    if (covered != x) return std::optional<std::vector<Subset>>{};
    return std::optional<std::vector<Subset>>{std::move(picked)};
  };

  bool all_ok = true;
  if (members.size() <= 16) {
    const std::size_t families = std::size_t{1} << members.size();
    for (std::size_t fam = 1; fam < families; ++fam) {
      std::vector<Subset> cover;
      Subset covered;
      for (std::size_t i = 0; i < members.size(); ++i) {
        if ((fam >> i) & 1U) {
          cover.push_back(members[i]);
          covered = covered | members[i];
        }
      }
      if (covered != x) continue;
      ++report.covers_checked;
      if (!subcover_of(cover)) all_ok = false;
    }
  }

  std::vector<Subset> atom_cover(space.atoms().begin(), space.atoms().end());
  auto certificate = subcover_of(atom_cover);
  report.lattice_compact = all_ok && certificate.has_value();
  if (certificate) report.subcover = std::move(*certificate);
  report.finite = true;
  return report;
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i))
                          : "p" + std::to_string(i));
  }
  return out;
}

std::vector<SpacePtr> all_sigma_algebras(std::size_t n) {
  std::vector<SpacePtr> out;
  if (n == 0) return out;
  // Restricted growth strings: block[i] <= 1 + max(block[0..i)).
  std::vector<std::size_t> block(n, 0);
  while (true) {
    std::size_t blocks = *std::max_element(block.begin(), block.end()) + 1;
    std::vector<Subset> parts(blocks);
    for (std::size_t i = 0; i < n; ++i) parts[block[i]] = parts[block[i]] | Subset::singleton(i);
    out.push_back(SigmaAlgebra::from_partition(GroundSet(default_labels(n)), parts));

    std::size_t i = n;
    while (i-- > 1) {
      std::size_t prefix_max = *std::max_element(block.begin(), block.begin() + i);
      if (block[i] <= prefix_max) {
        ++block[i];
        std::fill(block.begin() + i + 1, block.end(), 0);
        break;
      }
    }
    if (i == 0) break;
  }
  return out;
}

}  // namespace mspace
