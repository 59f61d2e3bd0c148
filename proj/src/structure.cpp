#include "mspace/structure.hpp"

#include <algorithm>
#include <map>

namespace mspace {

namespace {

Fn chi(const SpacePtr& space, Subset a) { return characteristic_fn(space, a).fn(); }

std::vector<IdealCore> maximal_ring_ideals(const SpacePtr& space) {
  std::vector<IdealCore> out;
  for (auto& ideal : enumerate_ideals(space, Side::ring)) {
    if (is_maximal_ideal(ideal)) out.push_back(ideal);
  }
  return out;
}

}  // namespace

StructureSpace::StructureSpace(SpacePtr space, std::vector<Congruence> points,
                               std::vector<BaseClosedSet> base, bool union_identity,
                               std::size_t union_checked)
    : space_(std::move(space)),
      points_(std::move(points)),
      base_(std::move(base)),
      union_identity_(union_identity),
      union_checked_(union_checked) {}

std::string StructureSpace::point_label(std::size_t i) const {
  const auto labels = space_->ground().labels_of(points_.at(i).filter_core());
  if (labels.size() == 1) return "rho_" + labels.front();
  std::string out = "rho_{";
  for (std::size_t k = 0; k < labels.size(); ++k) out += (k ? "," : "") + labels[k];
  return out + "}";
}

Subset StructureSpace::m(const Fn& f, const Fn& g) const {
  Subset out;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].contains(f, g)) out = out | Subset::singleton(i);
  }
  return out;
}

StructureSpace build_structure_space(const SpacePtr& space, const FunctionGrid& grid) {
  return build_structure_space(space, grid, maximal_congruences(space));
}

StructureSpace build_structure_space(const SpacePtr& space, const FunctionGrid& grid,
                                     std::vector<Congruence> points) {
  std::sort(points.begin(), points.end(), [&](const Congruence& a, const Congruence& b) {
    return space->atoms_within(a.filter_core()).mask() < space->atoms_within(b.filter_core()).mask();
  });

  std::map<Subset::Mask, FnPair> found;
  auto eval = [&](const Fn& f, const Fn& g) {
    Subset s;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (points[i].contains(f, g)) s = s | Subset::singleton(i);
    }
    return s;
  };
  for (const auto& f : grid.functions()) {
    for (const auto& g : grid.functions()) found.try_emplace(eval(f, g).mask(), FnPair{f, g});
  }
  const Fn zero = Fn::zero(space);
  for (auto a : space->members()) {
    Fn f = chi(space, a.complement(space->point_count()));
    found.try_emplace(eval(f, zero).mask(), FnPair{f, zero});
  }
  std::vector<BaseClosedSet> base;
  for (auto& [mask, pair] : found) base.push_back({Subset(mask), pair});
  std::sort(base.begin(), base.end(), [](const BaseClosedSet& a, const BaseClosedSet& b) {
    return CanonicalLess{}(a.points, b.points);
  });

  // 𝔪(a,b) ∪ 𝔪(c,d) = 𝔪(ac+bd, ad+bc).
  bool identity = true;
  std::size_t checked = 0;
  const auto& sample = grid.indicators();
  std::vector<FnPair> pairs;
  for (const auto& f : sample) {
    for (const auto& g : sample) pairs.emplace_back(f, g);
  }
  std::vector<Subset> m_of(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) m_of[i] = eval(pairs[i].first, pairs[i].second);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      auto t = twisted_product(pairs[i], pairs[j]);
      ++checked;
      if ((m_of[i] | m_of[j]) != eval(t.first, t.second)) identity = false;
    }
  }
  return StructureSpace(space, std::move(points), std::move(base), identity, checked);
}

IdealCore eta(const Congruence& rho) {
  if (!is_maximal_congruence(rho)) {
    throw Error(Errc::not_maximal, "eta is defined on maximal congruences");
  }
  // Z⁻¹[E(ρ)] = {h : Z(h) ∈ E(ρ)} = {h : core ⊆ Z(h)}.
  return IdealCore(rho.space(), E_of(rho).core(), Side::ring);
}

EtaReport verify_eta(const StructureSpace& s, const FunctionGrid& grid) {
  EtaReport r;
  const auto maxima = maximal_ring_ideals(s.space());
  // η as indices into maxima.
  std::vector<std::size_t> image;
  for (const auto& rho : s.points()) {
    const IdealCore m = eta(rho);
    auto it = std::find(maxima.begin(), maxima.end(), m);
    if (it == maxima.end()) {
      r.counterexample = "eta image is not a maximal ideal";
      return r;
    }
    image.push_back(static_cast<std::size_t>(it - maxima.begin()));
  }
  auto sorted = image;
  std::sort(sorted.begin(), sorted.end());
  r.bijective = sorted.size() == maxima.size() &&
                std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();

  auto calM = [&](const Fn& h) {
    Subset out;
    for (std::size_t i = 0; i < maxima.size(); ++i) {
      if (maxima[i].contains(h)) out = out | Subset::singleton(i);
    }
    return out;
  };
  auto eta_image = [&](Subset pts) {
    Subset out;
    for (auto i : pts.indices()) out = out | Subset::singleton(image[i]);
    return out;
  };
  auto eta_preimage = [&](Subset ideals) {
    Subset out;
    for (std::size_t i = 0; i < image.size(); ++i) {
      if (ideals.contains(image[i])) out = out | Subset::singleton(i);
    }
    return out;
  };

  for (const auto& f : grid.functions()) {
    for (const auto& g : grid.functions()) {
      ++r.checked;
      if (eta_image(s.m(f, g)) != calM(f - g)) {
        r.closed_sets_forward = false;
        if (!r.counterexample) r.counterexample = "eta(m(f,g)) != M_{f-g}";
      }
    }
  }
  const Fn zero = Fn::zero(s.space());
  for (const auto& h : grid.signed_functions()) {
    ++r.checked;
    if (eta_preimage(calM(h)) != s.m(abs(h), zero)) {
      r.closed_sets_backward = false;
      if (!r.counterexample) r.counterexample = "eta^-1(M_h) != m(|h|, 0)";
    }
  }
  return r;
}

SpacePtr sigma_algebra_on_mcong(const StructureSpace& s) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < s.size(); ++i) labels.push_back(s.point_label(i));
  std::vector<Subset> gens;
  for (const auto& b : s.base()) gens.push_back(b.points);
  return SigmaAlgebra::generate(GroundSet(std::move(labels)), gens);
}

MCongSigmaReport verify_mcong_sigma(const StructureSpace& s) {
  MCongSigmaReport r;
  const auto& space = s.space();
  const std::size_t n = s.size();
  const Fn zero = Fn::zero(space);
  auto in_family = [&](Subset p) {
    return std::any_of(s.base().begin(), s.base().end(),
                       [&](const BaseClosedSet& b) { return b.points == p; });
  };
  auto note = [&](bool& flag, const char* text) {
    flag = false;
    if (!r.counterexample) r.counterexample = text;
  };

  if (s.m(Fn::one(space), zero) != Subset()) note(r.is_sigma_algebra, "m(1,0) is not empty");

  for (const auto& b : s.base()) {
    const auto& [f, g] = b.representative;
    ++r.checked;
    const Subset complement = s.m(chi(space, agreement_set(f, g)), zero);
    if (complement != b.points.complement(n) || !in_family(complement)) {
      note(r.complement_formula, "m(f,g)^c != m(chi_E(f,g), 0)");
    }
  }
  for (const auto& b1 : s.base()) {
    for (const auto& b2 : s.base()) {
      ++r.checked;
      const Subset e1c = agreement_set(b1.representative.first, b1.representative.second)
                             .complement(space->point_count());
      const Subset e2c = agreement_set(b2.representative.first, b2.representative.second)
                             .complement(space->point_count());
      const Subset joined = s.m(chi(space, e1c & e2c), zero);
      if (joined != (b1.points | b2.points) || !in_family(joined)) {
        note(r.union_formula, "union of base sets != m(chi of intersected complements, 0)");
      }
    }
  }

  const SpacePtr generated = sigma_algebra_on_mcong(s);
  if (generated->members().size() != s.base().size()) {
    note(r.is_sigma_algebra, "base family differs from the σ-algebra it generates");
  }
  for (auto m : generated->members()) {
    if (!in_family(m)) note(r.is_sigma_algebra, "generated member missing from base family");
  }
  r.separating = separates_points(*generated);
  return r;
}

std::vector<std::size_t> phi(const StructureSpace& s) {
  const auto& space = s.space();
  if (!space->separating()) {
    throw Error(Errc::not_t_measurable, "phi requires a space that separates points");
  }
  std::vector<std::size_t> out;
  for (const auto& label : space->ground().labels()) {
    const Congruence rho_x = fixed_congruence(space, label);
    auto it = std::find(s.points().begin(), s.points().end(), rho_x);
    out.push_back(static_cast<std::size_t>(it - s.points().begin()));
  }
  return out;
}

PhiReport verify_phi(const StructureSpace& s, const FunctionGrid& grid) {
  PhiReport r;
  const auto map = phi(s);
  auto sorted = map;
  std::sort(sorted.begin(), sorted.end());
  r.bijective = sorted.size() == s.size() &&
                std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() &&
                std::all_of(sorted.begin(), sorted.end(), [&](std::size_t i) { return i < s.size(); });
  if (!r.bijective) return r;

  auto check = [&](const Fn& f, const Fn& g) {
    ++r.checked;
    const Subset e = agreement_set(f, g);
    const Subset m = s.m(f, g);
    Subset image;
    for (auto x : e.indices()) image = image | Subset::singleton(map[x]);
    Subset preimage;
    for (std::size_t x = 0; x < map.size(); ++x) {
      if (m.contains(map[x])) preimage = preimage | Subset::singleton(x);
    }
    if (image != m) r.image_formula = false;
    if (preimage != e) r.preimage_formula = false;
  };
  for (const auto& f : grid.functions()) {
    for (const auto& g : grid.functions()) check(f, g);
  }
  const Fn zero = Fn::zero(s.space());
  for (auto a : s.space()->members()) check(chi(s.space(), a.complement(s.space()->point_count())), zero);
  return r;
}

EquivalenceReport compactness_equivalences(const SpacePtr& space, const FunctionGrid& grid) {
  EquivalenceReport r;

  // (1) every maximal ideal of M has a common zero.
  r.maximal_ideals_fixed = true;
  for (const auto& m : maximal_ring_ideals(space)) {
    Subset common = space->full();
    for (const auto& h : grid.signed_functions()) {
      if (m.contains(h)) common = common & zero_set(h);
    }
    if (common.empty()) r.maximal_ideals_fixed = false;
  }

  // (2) every maximal congruence has a common agreement point.
  r.maximal_congruences_fixed = true;
  for (const auto& rho : maximal_congruences(space)) {
    Subset common = space->full();
    for (const auto& f : grid.functions()) {
      for (const auto& g : grid.functions()) {
        if (rho.contains(f, g)) common = common & agreement_set(f, g);
      }
    }
    if (common.empty() || !rho.filter_core().is_subset_of(common)) r.maximal_congruences_fixed = false;
  }

  // (3) 𝒜 is finite: it has exactly 2^#atoms members.
  r.finite = space->members().size() == (std::size_t{1} << space->atom_count());

  // (4) compact lattice.
  r.compactness = is_compact(*space);
  r.lattice_compact = r.compactness.lattice_compact;
  r.compactness.all_maximal_fixed = r.maximal_congruences_fixed;

  // (5) every function is bounded by its largest absolute atom value.
  r.bounded = true;
  for (const auto& h : grid.signed_functions()) {
    const Fn a = abs(h);
    const Rational bound = a.max_value();
    for (std::size_t p = 0; p < space->point_count(); ++p) {
      if (a.at_point(p) > bound) r.bounded = false;
    }
  }
  return r;
}

SemiringIso::SemiringIso(SpacePtr source, SpacePtr target, std::vector<std::size_t> atom_image)
    : source_(std::move(source)), target_(std::move(target)), atom_image_(std::move(atom_image)) {
  if (atom_image_.size() != source_->atom_count() ||
      source_->atom_count() != target_->atom_count()) {
    throw Error(Errc::not_representable, "atom counts differ");
  }
  auto sorted = atom_image_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw Error(Errc::not_representable, "atom map is not a bijection");
  }
}

SemiringIso SemiringIso::from_atom_images(const SpacePtr& source, const SpacePtr& target,
                                          const std::vector<Fn>& images) {
  if (images.size() != source->atom_count() || source->atom_count() != target->atom_count()) {
    throw Error(Errc::not_representable, "need one image per source atom and equal atom counts");
  }
  std::vector<std::size_t> atom_image;
  for (const auto& img : images) {
    require_same_space(target, img.space());
    std::optional<std::size_t> hit;
    for (std::size_t b = 0; b < target->atom_count(); ++b) {
      if (img == chi(target, target->atom(b))) hit = b;
    }
    if (!hit) {
      throw Error(Errc::not_representable,
                  "image is not the characteristic function of an atom");
    }
    atom_image.push_back(*hit);
  }
  return SemiringIso(source, target, std::move(atom_image));
}

Fn SemiringIso::apply(const Fn& f) const {
  require_same_space(source_, f.space());
  Fn::Values v(static_cast<Eigen::Index>(target_->atom_count()));
  for (std::size_t a = 0; a < atom_image_.size(); ++a) {
    v[static_cast<Eigen::Index>(atom_image_[a])] = f[a];
  }
  return Fn(target_, std::move(v));
}

SemiringIso transfer_isomorphism(const PointBijection& h) {
  const auto& x = *h.from;
  const auto& y = *h.to;
  if (x.point_count() != y.point_count() || h.image.size() != x.point_count() ||
      x.atom_count() != y.atom_count()) {
    throw Error(Errc::not_homeomorphism, "ground sets or atom counts differ");
  }
  std::vector<char> hit(y.point_count(), 0);
  for (auto p : h.image) {
    if (p >= y.point_count() || hit[p]) throw Error(Errc::not_homeomorphism, "map is not a bijection");
    hit[p] = 1;
  }
  auto image_of = [&](Subset s) {
    Subset out;
    for (auto p : s.indices()) out = out | Subset::singleton(h.image[p]);
    return out;
  };
  for (auto a : x.members()) {
    if (!y.is_member(image_of(a))) {
      throw Error(Errc::not_homeomorphism, "image of a member is not measurable");
    }
  }
  for (auto b : y.members()) {
    Subset pre;
    for (std::size_t p = 0; p < x.point_count(); ++p) {
      if (b.contains(h.image[p])) pre = pre | Subset::singleton(p);
    }
    if (!x.is_member(pre)) throw Error(Errc::not_homeomorphism, "preimage of a member is not measurable");
  }
  std::vector<std::size_t> atom_image;
  for (auto atom : x.atoms()) atom_image.push_back(y.atom_index(h.image[atom.indices().front()]));
  return SemiringIso(h.from, h.to, std::move(atom_image));
}

PointBijection recover_homeomorphism(const SemiringIso& iso) {
  if (!iso.source()->separating() || !iso.target()->separating()) {
    throw Error(Errc::not_t_measurable, "points are recoverable only on separating spaces");
  }
  PointBijection h{iso.source(), iso.target(), {}};
  for (std::size_t p = 0; p < iso.source()->point_count(); ++p) {
    const std::size_t a = iso.source()->atom_index(p);
    h.image.push_back(iso.target()->atom(iso.atom_image()[a]).indices().front());
  }
  return h;
}

IsoCertificate certify_isomorphism(const SemiringIso& iso, const std::vector<Rational>& values) {
  IsoCertificate c;
  const auto src = enumerate_functions(iso.source(), values);
  const auto dst = enumerate_functions(iso.target(), values);
  for (const auto& r : values) {
    ++c.checked;
    if (!(iso.apply(Fn::constant(iso.source(), r)) == Fn::constant(iso.target(), r))) {
      c.fixes_scalars = false;
    }
  }
  std::vector<Fn> images;
  images.reserve(src.size());
  for (const auto& f : src) images.push_back(iso.apply(f));
  for (std::size_t i = 0; i < src.size(); ++i) {
    for (std::size_t j = 0; j < src.size(); ++j) {
      c.checked += 4;
      if (!(iso.apply(src[i] + src[j]) == images[i] + images[j])) c.additive = false;
      if (!(iso.apply(src[i] * src[j]) == images[i] * images[j])) c.multiplicative = false;
      if (!(iso.apply(join(src[i], src[j])) == join(images[i], images[j])) ||
          !(iso.apply(meet(src[i], src[j])) == meet(images[i], images[j]))) {
        c.lattice = false;
      }
    }
  }
  // Injective on the grid and onto the target grid.
  for (const auto& g : dst) {
    ++c.checked;
    if (std::count(images.begin(), images.end(), g) != 1) c.bijective_on_grid = false;
  }
  return c;
}

}  // namespace mspace
