// Acceptance run: one PASS/FAIL line per criterion, exhaustive over every
// σ-algebra on at most four points unless a line says otherwise. Exits 1 when
// any criterion fails.

#include "mspace/filtcong.hpp"
#include "mspace/ideal.hpp"
#include "mspace/io.hpp"
#include "mspace/quotient.hpp"
#include "mspace/structure.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

#include "support.hpp"

namespace mspace {
namespace {

using Clock = std::chrono::steady_clock;
using Seconds = std::chrono::duration<double>;
namespace oracle = fixtures::oracle;

constexpr std::size_t max_points = 4;
constexpr double ideal_lattice_budget_s = 10.0;
constexpr double twisted_sweep_budget_s = 60.0;
constexpr std::uint32_t twisted_sample_seed = 20240611;
constexpr std::size_t twisted_sample_pairs = 64;

class Criterion {
 public:
  Criterion(int id, std::string title) : id_(id), title_(std::move(title)), start_(Clock::now()) {}

  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failures_;
      if (first_.empty()) first_ = what;
    }
  }
  template <class F>
  void check_lazy(bool ok, F&& what) {
    check(ok, ok ? std::string() : what());
  }
  void note(std::string text) { notes_.push_back(std::move(text)); }
  void require_within(double budget_s) { budget_s_ = budget_s; }
  double elapsed() const { return Seconds(Clock::now() - start_).count(); }

  bool report(std::ostream& out) const {
    const double t = elapsed();
    const bool in_time = !budget_s_ || t < *budget_s_;
    const bool pass = failures_ == 0 && checks_ > 0 && in_time;
    out << "C" << id_ << " " << (pass ? "PASS" : "FAIL") << " " << title_ << ": " << checks_
        << " checks, " << failures_ << " failures, " << std::fixed;
    out.precision(2);
    out << t << "s";
    if (budget_s_) out << " (limit " << *budget_s_ << "s)";
    for (const auto& n : notes_) out << "; " << n;
    if (!first_.empty()) out << "; first failure: " << first_;
    out << "\n";
    return pass;
  }

 private:
  int id_;
  std::string title_;
  Clock::time_point start_;
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
  std::vector<std::string> notes_;
  std::optional<double> budget_s_;
};

std::vector<SpacePtr> small_spaces() {
  std::vector<SpacePtr> out;
  for (std::size_t n = 1; n <= max_points; ++n) {
    for (auto& s : all_sigma_algebras(n)) out.push_back(std::move(s));
  }
  return out;
}

std::string describe(const SigmaAlgebra& space) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < space.atom_count(); ++i) {
    if (i) out << " ";
    for (const auto& l : space.ground().labels_of(space.atom(i))) out << l;
  }
  out << "}";
  return out.str();
}

bool is_atom(const SigmaAlgebra& space, Subset s) {
  const auto atoms = space.atoms();
  return std::find(atoms.begin(), atoms.end(), s) != atoms.end();
}

void ideal_lattice(const std::vector<SpacePtr>& spaces, Criterion& c) {
  c.require_within(ideal_lattice_budget_s);
  for (const auto& s : spaces) {
    const auto semi = enumerate_ideals(s, Side::semiring);
    const auto ring = enumerate_ideals(s, Side::ring);
    c.check(semi.size() == (std::size_t{1} << s->atom_count()), "ideal count " + describe(*s));
    for (const auto& K : ring) c.check(beta(alpha(K)) == K, "beta(alpha(K)) " + describe(*s));
    for (const auto& I : semi) c.check(alpha(beta(I)) == I, "alpha(beta(I)) " + describe(*s));
    for (const auto& I : ring) {
      for (const auto& J : ring) {
        const auto where = [&] {
          return describe(*s) + " cores " + subset_json(*s, I.core()).dump() + " " +
                 subset_json(*s, J.core()).dump();
        };
        const IdealCore sum = ideal_sum(I, J);
        const IdealCore meet = ideal_meet(I, J);
        c.check_lazy(sum.core() == (I.core() & J.core()) && meet.core() == (I.core() | J.core()),
                     where);
        c.check_lazy(alpha(sum) == ideal_sum(alpha(I), alpha(J)), where);
        c.check_lazy(alpha(meet) == ideal_meet(alpha(I), alpha(J)), where);
        c.check_lazy(I.is_subideal_of(J) == alpha(I).is_subideal_of(alpha(J)), where);
        c.check_lazy(I.is_subideal_of(J) == J.core().is_subset_of(I.core()), where);
      }
    }
    for (const auto& I : semi) {
      for (const auto& J : semi) {
        c.check(beta(ideal_sum(I, J)) == ideal_sum(beta(I), beta(J)) &&
                    beta(ideal_meet(I, J)) == ideal_meet(beta(I), beta(J)),
                "beta lattice map " + describe(*s));
      }
    }
  }
}

void z_ideals(const std::vector<SpacePtr>& spaces, Criterion& c) {
  const std::vector<Rational> values = FunctionGrid::default_values();
  for (const auto& s : spaces) {
    const FunctionGrid grid(s, values);
    for (const auto& K : enumerate_ideals(s, Side::semiring)) {
      const auto r = is_z_ideal(K, grid);
      c.check_lazy(r.holds && r.checked > 0, [&] {
        return describe(*s) + " core " + subset_json(*s, K.core()).dump() +
               (r.counterexample ? " " + format_pair(*r.counterexample) : "");
      });
    }
  }
}

void duality(const std::vector<SpacePtr>& spaces, Criterion& c) {
  for (const auto& s : spaces) {
    std::vector<ZFilter> proper;
    for (const auto& F : enumerate_filters(s)) {
      if (F.proper()) proper.push_back(F);
    }
    for (const auto& F : proper) {
      c.check(E_of(E_inverse(F)) == F, "E_of(E_inverse(F)) " + describe(*s));
      const auto members = filter_members(F);
      for (const auto& G : proper) {
        const auto other = filter_members(G);
        const bool family_inclusion = std::all_of(members.begin(), members.end(), [&](Subset m) {
          return std::find(other.begin(), other.end(), m) != other.end();
        });
        c.check(family_inclusion == is_subcongruence(E_inverse(F), E_inverse(G)),
                "order " + describe(*s));
      }
    }
    for (const auto& rho : enumerate_z_congruences(s)) {
      if (rho.proper()) c.check(E_inverse(E_of(rho)) == rho, "E_inverse(E_of(rho)) " + describe(*s));
    }
  }
}

void prime_equivalences(const std::vector<SpacePtr>& spaces, Criterion& c) {
  for (const auto& s : spaces) {
    const FunctionGrid grid(s, FunctionGrid::default_values());
    const auto rhos = enumerate_z_congruences(s);
    const auto conds = prime_conditions(s, grid);
    c.check(conds.size() == rhos.size(), "condition count " + describe(*s));
    for (std::size_t i = 0; i < rhos.size(); ++i) {
      const auto where = [&] { return describe(*s) + " " + congruence_json(rhos[i]).dump(); };
      c.check_lazy(conds[i].agree(), where);
      if (!rhos[i].proper()) continue;
      const bool maximal = std::none_of(rhos.begin(), rhos.end(), [&](const Congruence& other) {
        return other.proper() && !(other == rhos[i]) && is_subcongruence(rhos[i], other);
      });
      c.check_lazy(conds[i].prime == maximal, where);
      c.check_lazy(is_maximal_congruence(rhos[i]) == maximal, where);
    }
    for (const auto& F : enumerate_filters(s)) {
      if (!F.proper()) continue;
      const bool atom = is_atom(*s, F.core());
      c.check(is_prime_filter(F) == atom && is_ultrafilter(F) == atom,
              "filter " + describe(*s) + " " + subset_json(*s, F.core()).dump());
    }
  }
}

/// Pointwise, with no library arithmetic: x1y1 + x2y2 = x1y2 + x2y1 at each point.
oracle::Mask twisted_agreement_oracle(const std::vector<Rational>& f1, const std::vector<Rational>& g1,
                                      const std::vector<Rational>& f2, const std::vector<Rational>& g2) {
  oracle::Mask out = 0;
  for (std::size_t p = 0; p < f1.size(); ++p) {
    if (f1[p] * f2[p] + g1[p] * g2[p] == f1[p] * g2[p] + f2[p] * g1[p]) out |= oracle::Mask{1} << p;
  }
  return out;
}

void twisted_union(Criterion& c) {
  const auto s = fixtures::power_set(3);
  const FunctionGrid grid(s, FunctionGrid::default_values());
  const auto& fns = grid.functions();
  std::vector<std::vector<Rational>> point_values;
  for (const auto& f : fns) {
    std::vector<Rational> v;
    for (std::size_t p = 0; p < s->point_count(); ++p) v.push_back(f.at_point(p));
    point_values.push_back(std::move(v));
  }
  struct PairIdx {
    std::size_t f, g;
  };
  std::vector<PairIdx> all_pairs;
  for (std::size_t i = 0; i < fns.size(); ++i) {
    for (std::size_t j = 0; j < fns.size(); ++j) all_pairs.push_back({i, j});
  }

  const auto sweep = [&](const std::vector<PairIdx>& pairs, std::optional<Clock::time_point> deadline) {
    std::vector<Subset> agreement;
    for (const auto& p : pairs) agreement.push_back(agreement_set(fns[p.f], fns[p.g]));
    for (std::size_t a = 0; a < pairs.size(); ++a) {
      if (deadline && Clock::now() > *deadline) return false;
      const FnPair p1{fns[pairs[a].f], fns[pairs[a].g]};
      for (std::size_t b = 0; b < pairs.size(); ++b) {
        const FnPair p2{fns[pairs[b].f], fns[pairs[b].g]};
        const auto t = twisted_product(p1, p2);
        const Subset lhs = agreement[a] | agreement[b];
        const oracle::Mask expected =
            twisted_agreement_oracle(point_values[pairs[a].f], point_values[pairs[a].g],
                                     point_values[pairs[b].f], point_values[pairs[b].g]);
        c.check_lazy(lhs == agreement_set(t.first, t.second) && lhs.mask() == expected,
                     [&] { return format_pair(p1) + " " + format_pair(p2); });
      }
    }
    return true;
  };

  const auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                            Seconds(twisted_sweep_budget_s));
  if (sweep(all_pairs, deadline)) {
    c.note("full sweep of " + std::to_string(all_pairs.size() * all_pairs.size()) + " grid 4-tuples");
    return;
  }
  std::mt19937 rng(twisted_sample_seed);
  std::vector<PairIdx> sample;
  std::sample(all_pairs.begin(), all_pairs.end(), std::back_inserter(sample), twisted_sample_pairs, rng);
  sweep(sample, std::nullopt);
  c.note("full sweep exceeded budget; sampled " + std::to_string(twisted_sample_pairs) +
         " pairs with seed " + std::to_string(twisted_sample_seed));
}

void structure_space(const std::vector<SpacePtr>& spaces, Criterion& c) {
  std::size_t separating = 0;
  for (const auto& s : spaces) {
    const FunctionGrid grid(s, FunctionGrid::default_values());
    const StructureSpace st = build_structure_space(s, grid);
    c.check(st.size() == s->atom_count(), "point count " + describe(*s));
    const auto eta_report = verify_eta(st, grid);
    c.check_lazy(eta_report.holds(), [&] { return describe(*s) + " " + eta_report.counterexample.value_or("eta"); });

    // m(f,g) is the set of maximal congruences whose atom lies in E(f,g).
    const auto& fns = grid.functions();
    for (const auto& f : fns) {
      for (const auto& g : fns) {
        oracle::Mask expected = 0;
        const oracle::Mask agree = oracle::agreement(f, g);
        for (std::size_t i = 0; i < st.size(); ++i) {
          const oracle::Mask core = st.points()[i].filter_core().mask();
          if ((core & agree) == core) expected |= oracle::Mask{1} << i;
        }
        c.check_lazy(st.m(f, g).mask() == expected, [&] { return describe(*s) + " " + format_pair({f, g}); });
      }
    }

    if (!s->separating()) continue;
    ++separating;
    const auto sigma = verify_mcong_sigma(st);
    c.check_lazy(sigma.holds(), [&] { return describe(*s) + " " + sigma.counterexample.value_or("sigma"); });
    c.check(sigma_algebra_on_mcong(st)->members().size() == s->members().size(),
            "base size " + describe(*s));
    c.check(verify_phi(st, grid).holds(), "phi " + describe(*s));
    const auto image = phi(st);
    std::vector<std::size_t> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> identity(st.size());
    std::iota(identity.begin(), identity.end(), 0);
    c.check(sorted == identity, "phi bijective " + describe(*s));
  }
  c.note(std::to_string(separating) + " separating spaces");
}

void compactness(const std::vector<SpacePtr>& spaces, Criterion& c) {
  for (const auto& s : spaces) {
    const auto eq = compactness_equivalences(s, FunctionGrid(s, FunctionGrid::default_values()));
    c.check(eq.agree(), "disagreement on " + describe(*s));
    c.check(eq.maximal_ideals_fixed && eq.finite && eq.lattice_compact && eq.bounded,
            "finite space not compact " + describe(*s));
  }
}

void quotient_order(const std::vector<SpacePtr>& spaces, Criterion& c) {
  for (const auto& s : spaces) {
    const FunctionGrid grid(s, FunctionGrid::default_values());
    const auto& fns = grid.functions();
    for (const auto& rho : maximal_congruences(s)) {
      const auto where = [&] { return describe(*s) + " " + congruence_json(rho).dump(); };
      c.check_lazy(is_convex(rho, grid).holds, where);
      const auto total = is_totally_ordered(rho, grid);
      c.check_lazy(total.holds && total.dichotomy, where);
      for (const auto& f : fns) {
        for (const auto& f2 : fns) {
          if (!rho.contains(f, f2)) continue;
          for (const auto& g : grid.indicators()) {
            c.check_lazy(quot_leq(rho, f, g).holds == quot_leq(rho, f2, g).holds &&
                             quot_leq(rho, g, f).holds == quot_leq(rho, g, f2).holds,
                         where);
          }
        }
      }
      for (const auto& f : fns) {
        for (const auto& g : fns) {
          const int lt = quot_lt(rho, f, g).has_value();
          const int gt = quot_lt(rho, g, f).has_value();
          const int eq = rho.contains(f, g);
          c.check_lazy(lt + gt + eq == 1, [&] { return where() + " " + format_pair({f, g}); });
        }
      }
    }
  }
}

void realness(const std::vector<SpacePtr>& spaces, Criterion& c) {
  for (const auto& s : spaces) {
    const FunctionGrid grid(s, FunctionGrid::default_values());
    for (const auto& rho : maximal_congruences(s)) {
      const auto where = [&] { return describe(*s) + " " + congruence_json(rho).dump(); };
      const auto real = is_real(rho, grid);
      c.check_lazy(real.filter_closed && real.phi_onto && real.cofinal, where);
      c.check_lazy(is_real_ideal(eta(rho), grid), where);
      for (const auto& f : grid.functions()) {
        const auto inf = is_infinitely_large(rho, f, grid);
        c.check_lazy(!inf.geq_every_n && !inf.level_sets_in_filter && !inf.truncation_collapses &&
                         !inf.unbounded_on_members && inf.agree() && inf.witness_fails_all,
                     [&] { return where() + " " + format_fn(f); });
      }
    }
  }
}

SpacePtr relabelled_power_set(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<Subset> gens;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("y" + std::to_string(i));
    gens.push_back(Subset::singleton(i));
  }
  return SigmaAlgebra::generate(GroundSet(labels), gens);
}

void isomorphism_round_trip(const std::vector<SpacePtr>& spaces, Criterion& c) {
  std::size_t homeomorphic = 0;
  std::size_t rejected = 0;
  for (std::size_t n = 1; n <= max_points; ++n) {
    const auto source = fixtures::power_set(n);
    const auto target = relabelled_power_set(n);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      ++homeomorphic;
      const PointBijection h{source, target, perm};
      try {
        const SemiringIso iso = transfer_isomorphism(h);
        c.check(certify_isomorphism(iso, FunctionGrid::default_values()).holds(), "certificate");
        c.check(recover_homeomorphism(iso) == h, "recover(transfer(h)) != h");
      } catch (const Error& e) {
        c.check(false, e.what());
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  for (const auto& a : spaces) {
    for (const auto& b : spaces) {
      if (a->atom_count() == b->atom_count()) continue;
      ++rejected;
      if (a->point_count() == b->point_count()) {
        std::vector<std::size_t> perm(a->point_count());
        std::iota(perm.begin(), perm.end(), 0);
        do {
          const auto code = fixtures::thrown([&] { transfer_isomorphism({a, b, perm}); });
          c.check(code == Errc::not_homeomorphism, "accepted " + describe(*a) + " -> " + describe(*b));
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
      std::vector<Fn> images;
      for (std::size_t i = 0; i < a->atom_count(); ++i) {
        images.push_back(characteristic_fn(b, b->atom(i % b->atom_count())).fn());
      }
      const auto code = fixtures::thrown([&] { SemiringIso::from_atom_images(a, b, images); });
      c.check(code == Errc::not_representable, "atom images " + describe(*a) + " -> " + describe(*b));
    }
  }
  c.note(std::to_string(homeomorphic) + " bijections, " + std::to_string(rejected) +
         " non-homeomorphic pairs");
}

void collapse_counterexample(Criterion& c) {
  for (std::size_t n = 1; n <= max_points; ++n) {
    const auto s = all_sigma_algebras(n).front();
    if (s->atom_count() != 1) {
      c.check(false, "first enumerated σ-algebra on " + std::to_string(n) + " points is not trivial");
      continue;
    }
    const FunctionGrid grid(s, FunctionGrid::default_values());
    const auto k = Congruence::collapse_nonzero(s);
    c.check(compatibility_on(k, grid.functions()).holds(), "not compatible");
    const auto cancel = is_cancellative_on(k, grid.functions());
    c.check(!cancel.holds && cancel.witness.has_value(), "reported cancellative");
    const Fn one = Fn::one(s);
    const Fn zero = Fn::zero(s);
    if (cancel.witness) {
      const auto& [shifted, base] = *cancel.witness;
      c.check(k.contains(shifted.first, shifted.second) && !k.contains(base.first, base.second),
              "reported witness does not witness");
      c.check(shifted.first - shifted.second == base.first - base.second, "reported witness is not a shift");
    }
    c.check(!k.contains(one, zero), "(1, 0) related");
    for (const auto& f : grid.functions()) {
      if (!f.is_zero()) c.check(k.contains(f + one, f), "(f+1, f) unrelated for f = " + format_fn(f));
    }
    const auto code = fixtures::thrown([&] { E_of(k); });
    c.check(code == Errc::not_cancellative, "E_of did not reject with not_cancellative");
  }
}

}  // namespace
}  // namespace mspace

int main() {
  using namespace mspace;
  const auto spaces = small_spaces();
  std::cout << "spaces: " << spaces.size() << " σ-algebras on 1.." << max_points << " points\n";

  struct Entry {
    int id;
    const char* title;
    std::function<void(Criterion&)> run;
  };
  const std::vector<Entry> entries = {
      {1, "ideal lattice isomorphism", [&](Criterion& c) { ideal_lattice(spaces, c); }},
      {2, "every semiring ideal is a z-ideal", [&](Criterion& c) { z_ideals(spaces, c); }},
      {3, "filter/congruence duality", [&](Criterion& c) { duality(spaces, c); }},
      {4, "prime equivalences", [&](Criterion& c) { prime_equivalences(spaces, c); }},
      {5, "twisted product union identity", [&](Criterion& c) { twisted_union(c); }},
      {6, "structure space", [&](Criterion& c) { structure_space(spaces, c); }},
      {7, "compactness conditions agree", [&](Criterion& c) { compactness(spaces, c); }},
      {8, "quotient order", [&](Criterion& c) { quotient_order(spaces, c); }},
      {9, "realness degeneracy", [&](Criterion& c) { realness(spaces, c); }},
      {10, "isomorphism round trip", [&](Criterion& c) { isomorphism_round_trip(spaces, c); }},
      {11, "collapse relation counterexample", [&](Criterion& c) { collapse_counterexample(c); }},
  };

  int failed = 0;
  for (const auto& e : entries) {
    Criterion c(e.id, e.title);
    try {
      e.run(c);
    } catch (const std::exception& ex) {
      c.check(false, std::string("uncaught: ") + ex.what());
    }
    if (!c.report(std::cout)) ++failed;
    std::cout.flush();
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
