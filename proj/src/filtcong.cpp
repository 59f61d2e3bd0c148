#include "mspace/filtcong.hpp"

#include <algorithm>
#include <numeric>

namespace mspace {

namespace {

std::string describe(const Fn& f) {
  std::string out = "(";
  for (std::size_t a = 0; a < f.size(); ++a) {
    if (a) out += ",";
    out += to_string(f[a]);
  }
  return out + ")";
}

std::string describe(const FnPair& p) {
  return "(" + describe(p.first) + ", " + describe(p.second) + ")";
}

void require_z(const Congruence& rho) {
  if (!rho.is_z_kind()) {
    throw Error(Errc::not_z_congruence, "the collapse relation is not a z-congruence");
  }
}

Congruence from_core(const SpacePtr& space, Subset core) {
  return Congruence::from_filter(ZFilter(space, core));
}

}  // namespace

ZFilter::ZFilter(SpacePtr space, Subset core) : space_(std::move(space)), core_(core) {
  if (!space_->is_member(core_)) {
    throw Error(Errc::not_measurable, "filter core must be a member of the σ-algebra");
  }
}

std::vector<Subset> filter_members(const ZFilter& filter) {
  std::vector<Subset> out;
  for (auto m : filter.space()->members()) {
    if (filter.contains(m)) out.push_back(m);
  }
  return out;
}

std::vector<ZFilter> enumerate_filters(const SpacePtr& space) {
  std::vector<ZFilter> out;
  for (auto m : space->members()) out.emplace_back(space, m);
  return out;
}

bool is_prime_filter(const ZFilter& filter) {
  if (!filter.proper()) throw Error(Errc::improper_filter, "primality needs a proper filter");
  const auto members = filter.space()->members();
  for (auto a : members) {
    for (auto b : members) {
      if (filter.contains(a | b) && !filter.contains(a) && !filter.contains(b)) return false;
    }
  }
  return true;
}

bool is_ultrafilter(const ZFilter& filter) {
  if (!filter.proper()) throw Error(Errc::improper_filter, "ultrafilters are proper");
  for (const auto& other : enumerate_filters(filter.space())) {
    if (!other.proper() || other == filter) continue;
    // other ⊇ filter as families of sets.
    bool contains_all = true;
    for (auto m : filter_members(filter)) {
      if (!other.contains(m)) {
        contains_all = false;
        break;
      }
    }
    if (contains_all) return false;
  }
  return true;
}

std::string_view kind_name(CongruenceKind kind) {
  switch (kind) {
    case CongruenceKind::diagonal: return "diagonal";
    case CongruenceKind::universal: return "universal";
    case CongruenceKind::from_filter: return "fromFilter";
    case CongruenceKind::collapse_nonzero: return "collapseNonzero";
  }
  return "unknown";
}

Congruence Congruence::diagonal(SpacePtr space) {
  Subset x = space->full();
  return Congruence(std::move(space), CongruenceKind::diagonal, x);
}

Congruence Congruence::universal(SpacePtr space) {
  return Congruence(std::move(space), CongruenceKind::universal, Subset());
}

Congruence Congruence::from_filter(const ZFilter& filter) {
  if (!filter.proper()) return universal(filter.space());
  return Congruence(filter.space(), CongruenceKind::from_filter, filter.core());
}

Congruence Congruence::collapse_nonzero(SpacePtr space) {
  return Congruence(std::move(space), CongruenceKind::collapse_nonzero, Subset());
}

bool Congruence::proper() const {
  return kind_ == CongruenceKind::collapse_nonzero || !core_.empty();
}

Subset Congruence::filter_core() const {
  if (kind_ == CongruenceKind::collapse_nonzero) {
    throw Error(Errc::not_cancellative,
                "collapse relation is not cancellative: (f+1, f) belongs to it for f != 0 "
                "while (1, 0) does not, so E(f+1, f) = ∅ would enter E(k)");
  }
  return core_;
}

bool operator==(const Congruence& a, const Congruence& b) {
  if (!same_space(a.space_, b.space_)) return false;
  if (a.is_z_kind() != b.is_z_kind()) return false;
  return !a.is_z_kind() || a.core_ == b.core_;
}

std::vector<Congruence> enumerate_z_congruences(const SpacePtr& space) {
  std::vector<Congruence> out;
  for (auto m : space->members()) {
    if (m.empty()) {
      out.push_back(Congruence::universal(space));
    } else if (m == space->full()) {
      out.push_back(Congruence::diagonal(space));
    } else {
      out.push_back(from_core(space, m));
    }
  }
  return out;
}

bool is_subcongruence(const Congruence& rho, const Congruence& sigma) {
  require_z(rho);
  require_z(sigma);
  require_same_space(rho.space(), sigma.space());
  return sigma.filter_core().is_subset_of(rho.filter_core());
}

ZFilter E_of(const Congruence& rho) {
  return ZFilter(rho.space(), rho.filter_core());
}

Congruence E_inverse(const ZFilter& filter) { return Congruence::from_filter(filter); }

std::vector<Subset> observed_agreement_sets(const Congruence& rho, const std::vector<Fn>& fns) {
  std::vector<Subset> out;
  for (const auto& f : fns) {
    for (const auto& g : fns) {
      if (!rho.contains(f, g)) continue;
      auto e = agreement_set(f, g);
      if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
    }
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

CompatibilityReport compatibility_on(const Congruence& rho, const std::vector<Fn>& fns) {
  CompatibilityReport r;
  const std::size_t n = fns.size();
  std::vector<char> in(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) in[i * n + j] = rho.contains(fns[i], fns[j]);
  }
  auto fail = [&](bool& flag, std::string text) {
    if (flag && !r.counterexample) r.counterexample = std::move(text);
    flag = false;
  };
  for (std::size_t i = 0; i < n; ++i) {
    ++r.checked;
    if (!in[i * n + i]) fail(r.reflexive, "not reflexive at " + describe(fns[i]));
    for (std::size_t j = 0; j < n; ++j) {
      if (!in[i * n + j]) continue;
      ++r.checked;
      if (!in[j * n + i]) fail(r.symmetric, "not symmetric at " + describe({fns[i], fns[j]}));
      for (std::size_t k = 0; k < n; ++k) {
        if (in[j * n + k] && !in[i * n + k]) {
          fail(r.transitive, "not transitive through " + describe(fns[j]));
        }
        const Fn& h = fns[k];
        if (!rho.contains(fns[i] + h, fns[j] + h)) {
          fail(r.additive, "adding " + describe(h) + " to " + describe({fns[i], fns[j]}));
        }
        if (!rho.contains(fns[i] * h, fns[j] * h)) {
          fail(r.multiplicative,
               "multiplying " + describe({fns[i], fns[j]}) + " by " + describe(h));
        }
        r.checked += 3;
      }
    }
  }
  return r;
}

CancellativeReport is_cancellative_on(const Congruence& rho, const std::vector<Fn>& fns) {
  CancellativeReport r;
  for (const auto& a : fns) {
    for (const auto& b : fns) {
      if (rho.contains(a, b)) continue;
      for (const auto& c : fns) {
        if (rho.contains(a + c, b + c)) {
          r.holds = false;
          r.witness = std::make_pair(FnPair{a + c, b + c}, FnPair{a, b});
          return r;
        }
      }
    }
  }
  return r;
}

ZCongruenceReport is_z_congruence(const Congruence& rho, const std::vector<Fn>& fns) {
  ZCongruenceReport r;
  // Representative member pair for each agreement set in E(ρ).
  std::vector<std::pair<Subset, FnPair>> e_rho;
  for (const auto& f : fns) {
    for (const auto& g : fns) {
      if (!rho.contains(f, g)) continue;
      auto e = agreement_set(f, g);
      auto it = std::find_if(e_rho.begin(), e_rho.end(), [&](const auto& x) { return x.first == e; });
      if (it == e_rho.end()) e_rho.emplace_back(e, FnPair{f, g});
    }
  }
  for (const auto& f : fns) {
    for (const auto& g : fns) {
      auto e = agreement_set(f, g);
      auto it = std::find_if(e_rho.begin(), e_rho.end(), [&](const auto& x) { return x.first == e; });
      if (it != e_rho.end() && !rho.contains(f, g)) {
        r.holds = false;
        r.witness = std::make_pair(it->second, FnPair{f, g});
        return r;
      }
    }
  }
  return r;
}

FnPair twisted_product(const FnPair& p1, const FnPair& p2) {
  const auto& [f1, g1] = p1;
  const auto& [f2, g2] = p2;
  return {f1 * f2 + g1 * g2, f1 * g2 + g1 * f2};
}

namespace {

struct Tuple {
  std::size_t p1;
  std::size_t p2;
  Subset twisted_agreement;
  bool twisted_equal;  // f₁f₂ + g₁g₂ = f₁g₂ + g₁f₂
};

// All pairs of the sample and all pairs of those pairs with their twisted
// product's agreement set.
struct PairSweep {
  std::vector<FnPair> pairs;
  std::vector<Tuple> tuples;

  explicit PairSweep(const std::vector<Fn>& sample) {
    for (const auto& f : sample) {
      for (const auto& g : sample) pairs.emplace_back(f, g);
    }
    tuples.reserve(pairs.size() * pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      for (std::size_t j = 0; j < pairs.size(); ++j) {
        auto t = twisted_product(pairs[i], pairs[j]);
        tuples.push_back({i, j, agreement_set(t.first, t.second), t.first == t.second});
      }
    }
  }
};

}  // namespace

PrimeReport is_prime_congruence(const Congruence& rho, const FunctionGrid& grid) {
  require_z(rho);
  PrimeReport r;
  const Subset core = rho.filter_core();
  PairSweep sweep(grid.indicators());
  for (const auto& t : sweep.tuples) {
    if (!core.is_subset_of(t.twisted_agreement)) continue;
    const auto& p1 = sweep.pairs[t.p1];
    const auto& p2 = sweep.pairs[t.p2];
    if (!rho.contains(p1) && !rho.contains(p2)) {
      r.definitional = false;
      r.witness = std::make_pair(p1, p2);
      break;
    }
  }
  const ZFilter filter = E_of(rho);
  r.via_filter = filter.proper() ? is_prime_filter(filter) : true;
  return r;
}

std::vector<PrimeConditions> prime_conditions(const SpacePtr& space, const FunctionGrid& grid) {
  const auto zs = enumerate_z_congruences(space);
  const std::size_t nz = zs.size();
  std::vector<PrimeConditions> out(nz);
  for (auto& c : out) c.prime = c.product_condition = true;

  PairSweep sweep(grid.indicators());
  // Membership of every sample pair in every congruence.
  std::vector<std::vector<char>> member(nz, std::vector<char>(sweep.pairs.size()));
  for (std::size_t z = 0; z < nz; ++z) {
    for (std::size_t p = 0; p < sweep.pairs.size(); ++p) member[z][p] = zs[z].contains(sweep.pairs[p]);
  }
  for (const auto& t : sweep.tuples) {
    for (std::size_t z = 0; z < nz; ++z) {
      const bool factor = member[z][t.p1] || member[z][t.p2];
      if (factor) continue;
      if (zs[z].filter_core().is_subset_of(t.twisted_agreement)) out[z].prime = false;
      if (t.twisted_equal) out[z].product_condition = false;
    }
  }

  for (std::size_t z = 0; z < nz; ++z) {
    for (std::size_t s = 0; s < nz; ++s) {
      if (out[s].prime && is_subcongruence(zs[s], zs[z])) {
        out[z].contains_prime = true;
        break;
      }
    }
  }

  const auto& fns = grid.functions();
  for (std::size_t z = 0; z < nz; ++z) {
    const auto members = filter_members(E_of(zs[z]));
    bool all = true;
    for (std::size_t i = 0; i < fns.size() && all; ++i) {
      for (std::size_t j = i + 1; j < fns.size() && all; ++j) {
        all = std::any_of(members.begin(), members.end(), [&](Subset a) {
          return leq_on(fns[i], fns[j], a) || leq_on(fns[j], fns[i], a);
        });
      }
    }
    out[z].comparable = all;
  }
  return out;
}

bool is_maximal_congruence(const Congruence& rho) {
  if (!rho.is_z_kind() || !rho.proper()) return false;
  for (const auto& sigma : enumerate_z_congruences(rho.space())) {
    if (sigma.proper() && !(sigma == rho) && is_subcongruence(rho, sigma)) return false;
  }
  return true;
}

std::vector<Congruence> maximal_congruences(const SpacePtr& space) {
  std::vector<Congruence> out;
  for (const auto& rho : enumerate_z_congruences(space)) {
    if (is_maximal_congruence(rho)) out.push_back(rho);
  }
  return out;
}

Congruence fixed_congruence(const SpacePtr& space, std::string_view point) {
  return from_core(space, atom_of(*space, point));
}

Congruence z_meet(const std::vector<Congruence>& rhos) {
  if (rhos.empty()) throw Error(Errc::not_z_congruence, "z_meet needs a nonempty family");
  Subset core;
  for (const auto& rho : rhos) {
    require_z(rho);
    require_same_space(rhos.front().space(), rho.space());
    core = core | rho.filter_core();
  }
  return from_core(rhos.front().space(), core);
}

Congruence z_join(const Congruence& r1, const Congruence& r2) {
  require_z(r1);
  require_z(r2);
  require_same_space(r1.space(), r2.space());
  return from_core(r1.space(), r1.filter_core() & r2.filter_core());
}

ChainJoinReport chain_join_dominated(const Congruence& r1, const Congruence& r2,
                                     const std::vector<Fn>& fns) {
  ChainJoinReport r;
  const Congruence joined = z_join(r1, r2);
  std::vector<std::size_t> parent(fns.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < fns.size(); ++i) {
    for (std::size_t j = i + 1; j < fns.size(); ++j) {
      if (r1.contains(fns[i], fns[j]) || r2.contains(fns[i], fns[j])) parent[find(i)] = find(j);
    }
  }
  for (std::size_t i = 0; i < fns.size(); ++i) {
    for (std::size_t j = 0; j < fns.size(); ++j) {
      if (find(i) != find(j)) continue;
      ++r.checked;
      if (!joined.contains(fns[i], fns[j])) {
        r.dominated = false;
        r.counterexample = FnPair{fns[i], fns[j]};
        return r;
      }
    }
  }
  return r;
}

RingCongruence::RingCongruence(IdealCore ideal) : ideal_(std::move(ideal)) {
  if (ideal_.side() != Side::ring) {
    throw Error(Errc::side_mismatch, "ring congruences come from ring ideals");
  }
}

Congruence nabla(const RingCongruence& k) {
  return from_core(k.ideal().space(), k.ideal().core());
}

RingCongruence delta(const Congruence& rho) {
  require_z(rho);
  return RingCongruence(IdealCore(rho.space(), rho.filter_core(), Side::ring));
}

DeltaCertificate delta_certificate(const Fn& f, const Fn& g) {
  DeltaCertificate c{f - meet(f, g), g - meet(g, f), false};
  c.consistent = c.h.is_nonneg() && c.k.is_nonneg() && f - g == c.h - c.k &&
                 agreement_set(f, g) == agreement_set(c.h, c.k);
  return c;
}

Congruence ideal_to_congruence(const IdealCore& semiring_ideal) {
  if (semiring_ideal.side() != Side::semiring) {
    throw Error(Errc::side_mismatch, "ideal_to_congruence expects a semiring ideal");
  }
  return from_core(semiring_ideal.space(), semiring_ideal.core());
}

IdealCore congruence_to_ideal(const Congruence& rho) {
  require_z(rho);
  return IdealCore(rho.space(), rho.filter_core(), Side::semiring);
}

Congruence m_frak(const NonNegFn<Rational>& f, const NonNegFn<Rational>& g) {
  require_same_space(f.fn().space(), g.fn().space());
  return from_core(f.fn().space(), agreement_set(f.fn(), g.fn()));
}

std::vector<Congruence> maximal_congruences_containing(const Fn& f, const Fn& g) {
  std::vector<Congruence> out;
  for (const auto& rho : maximal_congruences(f.space())) {
    if (rho.contains(f, g)) out.push_back(rho);
  }
  return out;
}

}  // namespace mspace
