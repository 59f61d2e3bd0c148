#include "mspace/quotient.hpp"

#include <algorithm>
#include <array>

namespace mspace {

namespace {

void require_z_kind(const Congruence& rho) {
  if (!rho.is_z_kind()) {
    throw Error(Errc::not_z_congruence, "operation needs a z-congruence");
  }
}

void require_maximal(const Congruence& rho) {
  if (!is_maximal_congruence(rho)) {
    throw Error(Errc::not_maximal, "operation needs a maximal congruence");
  }
}

Fn canonical_rep(const Congruence& rho, const Fn& f) {
  const Subset core_atoms = rho.space()->atoms_within(rho.filter_core());
  Fn::Values v = f.values();
  for (Eigen::Index a = 0; a < v.size(); ++a) {
    if (!core_atoms.contains(static_cast<std::size_t>(a))) v[a] = Rational(0);
  }
  return Fn(rho.space(), std::move(v));
}

Fn constant(const SpacePtr& space, const CheckedInt& n) { return Fn::constant(space, Rational(n)); }

Subset points_where(const Fn& f, auto pred) {
  Subset out;
  for (std::size_t p = 0; p < f.space()->point_count(); ++p) {
    if (pred(p)) out = out | Subset::singleton(p);
  }
  return out;
}

}  // namespace

QuotClass::QuotClass(Congruence rho, const Fn& f) : rho_(std::move(rho)), rep_(f) {
  require_z_kind(rho_);
  require_same_space(rho_.space(), f.space());
  rep_ = canonical_rep(rho_, f);
}

QuotClass operator+(const QuotClass& a, const QuotClass& b) {
  if (!(a.rho_ == b.rho_)) throw Error(Errc::space_mismatch, "classes of different congruences");
  return QuotClass(a.rho_, a.rep_ + b.rep_);
}

QuotClass operator*(const QuotClass& a, const QuotClass& b) {
  if (!(a.rho_ == b.rho_)) throw Error(Errc::space_mismatch, "classes of different congruences");
  return QuotClass(a.rho_, a.rep_ * b.rep_);
}

bool operator==(const QuotClass& a, const QuotClass& b) {
  return a.rho_ == b.rho_ && a.rep_ == b.rep_;
}

OrderResult quot_leq(const Congruence& rho, const Fn& f, const Fn& g) {
  require_z_kind(rho);
  OrderResult r;
  const ZFilter filter = E_of(rho);
  if (leq_on(f, g, filter.core())) {
    r.holds = true;
    r.witness = filter.core();
    return r;
  }
  for (auto member : filter_members(filter)) {
    if (leq_on(f, g, member)) {
      r.holds = true;
      r.witness = member;
      r.refutation.clear();
      return r;
    }
    for (auto p : member.indices()) {
      if (f.at_point(p) > g.at_point(p)) {
        r.refutation.emplace_back(member, p);
        break;
      }
    }
  }
  return r;
}

std::optional<Subset> quot_lt(const Congruence& rho, const Fn& f, const Fn& g) {
  require_maximal(rho);
  for (auto member : filter_members(E_of(rho))) {
    const auto idx = member.indices();
    if (std::all_of(idx.begin(), idx.end(),
                    [&](std::size_t p) { return f.at_point(p) < g.at_point(p); })) {
      return member;
    }
  }
  return std::nullopt;
}

TotalOrderReport is_totally_ordered(const Congruence& rho, const FunctionGrid& grid) {
  require_maximal(rho);
  TotalOrderReport r;
  const auto& space = rho.space();
  const Subset core = rho.filter_core();
  for (const auto& f : grid.functions()) {
    for (const auto& g : grid.functions()) {
      ++r.checked;
      if (!quot_leq(rho, f, g).holds && !quot_leq(rho, g, f).holds) {
        r.holds = false;
        if (!r.counterexample) r.counterexample = FnPair{f, g};
      }
      const Subset a1 = points_where(f, [&](std::size_t p) { return f.at_point(p) <= g.at_point(p); });
      const Subset a2 = points_where(f, [&](std::size_t p) { return g.at_point(p) <= f.at_point(p); });
      const bool one_side = (space->is_member(a1) && core.is_subset_of(a1)) ||
                            (space->is_member(a2) && core.is_subset_of(a2));
      if ((a1 | a2) != space->full() || !one_side) r.dichotomy = false;
    }
  }
  return r;
}

QuotClass scalar_embed(const Congruence& rho, const Rational& r) {
  require_maximal(rho);
  return QuotClass(rho, Fn::constant(rho.space(), r));
}

std::vector<CheckedInt> sampled_naturals(const FunctionGrid& grid) {
  Rational top(0);
  for (const auto& v : grid.values()) top = std::max(top, v);
  std::vector<CheckedInt> out;
  const CheckedInt bound = ceil(top) + 2;
  for (CheckedInt n = 1; n <= bound; ++n) out.push_back(n);
  return out;
}

RealnessReport is_real(const Congruence& rho, const FunctionGrid& grid) {
  require_maximal(rho);
  RealnessReport r;
  const auto& space = rho.space();
  const ZFilter filter = E_of(rho);
  const auto members = filter_members(filter);

  // (a) pairwise and total intersections stay in the filter.
  r.filter_closed = true;
  Subset all = space->full();
  for (auto a : members) {
    all = all & a;
    for (auto b : members) {
      if (!filter.contains(a & b)) r.filter_closed = false;
    }
  }
  if (!filter.contains(all)) r.filter_closed = false;

  // (b) ρ(f) = φ(f on the core).
  const std::size_t core_atom = space->atom_index(filter.core().indices().front());
  r.phi_onto = true;
  for (const auto& f : grid.functions()) {
    if (!(QuotClass(rho, f) == scalar_embed(rho, f[core_atom]))) r.phi_onto = false;
  }

  // (c) every class below some ρ(𝐧).
  const auto naturals = sampled_naturals(grid);
  r.sample_bound = naturals.back();
  r.cofinal = true;
  for (const auto& f : grid.functions()) {
    const bool below = std::any_of(naturals.begin(), naturals.end(), [&](const CheckedInt& n) {
      return quot_leq(rho, f, constant(space, n)).holds;
    });
    if (!below) r.cofinal = false;
  }
  return r;
}

bool is_real_ideal(const IdealCore& maximal_ring_ideal, const FunctionGrid& grid) {
  if (maximal_ring_ideal.side() != Side::ring) {
    throw Error(Errc::side_mismatch, "realness is defined for ring ideals");
  }
  const auto& space = maximal_ring_ideal.space();
  for (const auto& h : grid.signed_functions()) {
    bool hit = false;
    for (std::size_t a = 0; a < h.size() && !hit; ++a) {
      hit = maximal_ring_ideal.contains(h - Fn::constant(space, h[a]));
    }
    if (!hit) return false;
  }
  return true;
}

InfinitelyLargeReport is_infinitely_large(const Congruence& rho, const Fn& f,
                                          const FunctionGrid& grid) {
  require_maximal(rho);
  InfinitelyLargeReport r;
  const auto& space = rho.space();
  const ZFilter filter = E_of(rho);
  const auto members = filter_members(filter);

  auto evaluate = [&](const CheckedInt& n) {
    const Fn nn = constant(space, n);
    const Rational q(n);
    std::array<bool, 4> c{};
    c[0] = quot_leq(rho, nn, f).holds;
    const Subset level = points_where(f, [&](std::size_t p) { return f.at_point(p) >= q; });
    c[1] = space->is_member(level) && filter.contains(level);
    c[2] = rho.contains(meet(f, nn), nn);
    c[3] = std::all_of(members.begin(), members.end(), [&](Subset m) {
      const auto idx = m.indices();
      return std::any_of(idx.begin(), idx.end(), [&](std::size_t p) { return f.at_point(p) >= q; });
    });
    return c;
  };

  const auto naturals = sampled_naturals(grid);
  r.sample_bound = naturals.back();
  std::array<bool, 4> all{true, true, true, true};
  for (const auto& n : naturals) {
    const auto c = evaluate(n);
    for (int i = 0; i < 4; ++i) {
      if (!c[i] && all[i]) {
        all[i] = false;
        r.first_failure[i] = n;
      }
    }
    if (c[1] != c[2]) r.levels_match_truncations = false;
  }
  r.geq_every_n = all[0];
  r.level_sets_in_filter = all[1];
  r.truncation_collapses = all[2];
  r.unbounded_on_members = all[3];

  r.witness_n = ceil(f.max_value()) + 1;
  const auto w = evaluate(r.witness_n);
  r.witness_fails_all = !w[0] && !w[1] && !w[2] && !w[3];
  return r;
}

QuotClass quot_inverse(const Congruence& rho, const Fn& f) {
  require_maximal(rho);
  if (rho.contains(f, Fn::zero(rho.space()))) {
    throw Error(Errc::not_invertible, "the zero class has no inverse");
  }
  return QuotClass(rho, reciprocal_off_zero(f));
}

ConvexReport is_convex(const Congruence& rho, const FunctionGrid& grid) {
  require_z_kind(rho);
  ConvexReport r;
  const auto& fns = grid.functions();
  std::vector<const Fn*> between;
  for (const auto& f : fns) {
    for (const auto& g : fns) {
      if (!leq(f, g) || !rho.contains(f, g)) continue;
      between.clear();
      for (const auto& h : fns) {
        if (leq(f, h) && leq(h, g)) between.push_back(&h);
      }
      for (const Fn* f1 : between) {
        for (const Fn* g1 : between) {
          if (!leq(*f1, *g1)) continue;
          ++r.checked;
          if (!rho.contains(*f1, *g1)) {
            r.holds = false;
            if (!r.counterexample) r.counterexample = std::make_pair(FnPair{f, g}, FnPair{*f1, *g1});
          }
        }
      }
    }
  }
  return r;
}

RMCongReport build_rmcong(const SpacePtr& space, const FunctionGrid& grid) {
  std::vector<Congruence> real_points;
  for (const auto& rho : maximal_congruences(space)) {
    if (is_real(rho, grid).real()) real_points.push_back(rho);
  }
  RMCongReport r{build_structure_space(space, grid, real_points), 0, 0, true, true, {}, false, false, false};
  const StructureSpace& s = r.space;
  r.real_points = s.size();

  const std::size_t n = s.size();
  const Fn zero = Fn::zero(space);
  for (const auto& f : grid.functions()) {
    for (const auto& g : grid.functions()) {
      const Subset complement = s.m(f, g).complement(n);
      const Fn chi_e = characteristic_fn(space, agreement_set(f, g)).fn();
      if (s.m(chi_e, zero) != complement) r.complement_formula = false;
      const Fn chi_z = characteristic_fn(space, zero_set(f) | zero_set(g)).fn();
      if (s.m(chi_z, zero) != complement) {
        r.zero_union_formula = false;
        if (!r.zero_union_counterexample) r.zero_union_counterexample = FnPair{f, g};
      }
    }
  }

  // Fixed: the agreement sets of grid pairs inside ρ share a point.
  for (const auto& rho : s.points()) {
    Subset common = space->full();
    for (const auto& f : grid.functions()) {
      for (const auto& g : grid.functions()) {
        if (rho.contains(f, g)) common = common & agreement_set(f, g);
      }
    }
    if (!common.empty()) ++r.fixed_points;
  }
  r.realcompact = r.fixed_points == r.real_points;

  std::vector<IdealCore> real_ideals;
  for (const auto& m : enumerate_ideals(space, Side::ring)) {
    if (is_maximal_ideal(m) && is_real_ideal(m, grid)) real_ideals.push_back(m);
  }
  std::vector<IdealCore> images;
  for (const auto& rho : s.points()) images.push_back(eta(rho));
  r.eta_tilde_bijective =
      images.size() == real_ideals.size() &&
      std::all_of(real_ideals.begin(), real_ideals.end(), [&](const IdealCore& m) {
        return std::count(images.begin(), images.end(), m) == 1;
      });

  r.measurable = n > 0 && verify_mcong_sigma(s).holds();
  return r;
}

}  // namespace mspace
