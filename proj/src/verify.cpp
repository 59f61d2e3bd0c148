#include "mspace/verify.hpp"

#include "mspace/filtcong.hpp"
#include "mspace/ideal.hpp"
#include "mspace/io.hpp"
#include "mspace/quotient.hpp"
#include "mspace/structure.hpp"

#include <algorithm>
#include <numeric>

namespace mspace {

namespace {

class Checker {
 public:
  Checker(SuiteResult& result, std::string prefix) : result_(result), prefix_(std::move(prefix)) {}

  template <class Describe>
  void operator()(bool ok, std::string_view tag, Describe&& describe) {
    ++result_.checks;
    if (!ok) result_.failures.push_back({prefix_ + "/" + std::string(tag), describe()});
  }
  void operator()(bool ok, std::string_view tag) {
    (*this)(ok, tag, [] { return std::string(); });
  }

 private:
  SuiteResult& result_;
  std::string prefix_;
};

std::string core_text(const SigmaAlgebra& space, Subset s) { return subset_json(space, s).dump(); }

bool is_atom(const SigmaAlgebra& space, Subset s) {
  const auto& atoms = space.atoms();
  return std::find(atoms.begin(), atoms.end(), s) != atoms.end();
}

void ideal_lattice_suite(const SpacePtr& space, const FunctionGrid& grid, Mutation mutation,
                         Checker& check) {
  auto sum_op = mutation == Mutation::swap_join_meet ? ideal_meet : ideal_sum;
  auto meet_op = mutation == Mutation::swap_join_meet ? ideal_sum : ideal_meet;
  const auto ring = enumerate_ideals(space, Side::ring);
  const auto semi = enumerate_ideals(space, Side::semiring);

  for (std::size_t i = 0; i < ring.size(); ++i) {
    const auto& I = ring[i];
    check(beta(alpha(I)) == I, "beta-alpha-identity", [&] { return core_text(*space, I.core()); });
    check(alpha(beta(semi[i])) == semi[i], "alpha-beta-identity",
          [&] { return core_text(*space, semi[i].core()); });
    for (const auto& J : ring) {
      auto pair_text = [&] {
        return core_text(*space, I.core()) + " " + core_text(*space, J.core());
      };
      check(alpha(sum_op(I, J)) == sum_op(alpha(I), alpha(J)), "alpha-preserves-sum", pair_text);
      check(alpha(meet_op(I, J)) == meet_op(alpha(I), alpha(J)), "alpha-preserves-meet", pair_text);
      check(I.is_subideal_of(J) == alpha(I).is_subideal_of(alpha(J)), "alpha-preserves-order",
            pair_text);
    }
  }

  // Element-level lattice operations on the semiring side.
  const auto& fns = grid.functions();
  for (const auto& K : semi) {
    for (const auto& L : semi) {
      const IdealCore s = sum_op(K, L);
      const IdealCore m = meet_op(K, L);
      for (const auto& h : grid.indicators()) {
        auto text = [&] {
          return core_text(*space, K.core()) + " " + core_text(*space, L.core()) + " h=" +
                 format_fn(h);
        };
        check(m.contains(h) == (K.contains(h) && L.contains(h)), "meet-is-intersection", text);
        const bool decomposes = std::any_of(fns.begin(), fns.end(), [&](const Fn& f) {
          return leq(f, h) && K.contains(f) && L.contains(h - f);
        });
        check(s.contains(h) == decomposes, "sum-is-elementwise-sum", text);
      }
    }
  }

  for (const auto& K : semi) {
    const auto text = [&] { return core_text(*space, K.core()); };
    const auto z = is_z_ideal(K, grid);
    check(z.holds, "z-ideal", [&] {
      return text() + " " + format_pair(z.counterexample.value_or(FnPair{Fn::zero(space), Fn::zero(space)}));
    });
    check(is_strong_ideal(K, grid).holds, "strong-ideal", text);
    check(is_maximal_ideal(K) == is_atom(*space, K.core()), "maximal-iff-atom-core", text);
    for (const auto& f : fns) {
      if (!K.contains(f)) continue;
      check(intersection_of_maximal_containing(f).is_subideal_of(K), "contains-maximal-hull",
            [&] { return text() + " f=" + format_fn(f); });
    }
    const IdealCore B = beta(K);
    for (const auto& h : grid.signed_functions()) {
      if (!B.contains(h)) continue;
      check(beta_certificate(K, h).holds, "beta-certificate", [&] { return text() + " h=" + format_fn(h); });
    }
  }
}

std::vector<Fn> signed_sample(const FunctionGrid& grid) {
  std::vector<Fn> out = grid.indicators();
  for (const auto& f : grid.indicators()) out.push_back(-f);
  return out;
}

void duality_suite(const SpacePtr& space, const FunctionGrid& grid, Mutation mutation,
                   Checker& check) {
  auto meet_op = [&](const Congruence& a, const Congruence& b) {
    return mutation == Mutation::swap_join_meet ? z_join(a, b) : z_meet({a, b});
  };
  auto join_op = [&](const Congruence& a, const Congruence& b) {
    return mutation == Mutation::swap_join_meet ? z_meet({a, b}) : z_join(a, b);
  };
  const auto filters = enumerate_filters(space);
  const auto rhos = enumerate_z_congruences(space);
  const auto& sample = grid.indicators();

  for (const auto& F : filters) {
    if (!F.proper()) continue;
    check(E_of(E_inverse(F)) == F, "E-of-E-inverse", [&] { return core_text(*space, F.core()); });
    for (const auto& G : filters) {
      if (!G.proper()) continue;
      const bool sub = F.core().is_subset_of(G.core());  // G ⊆ F as filters
      check(sub == is_subcongruence(E_inverse(G), E_inverse(F)), "order-preserved",
            [&] { return core_text(*space, F.core()) + " " + core_text(*space, G.core()); });
    }
  }

  for (const auto& rho : rhos) {
    const auto text = [&] { return congruence_json(rho).dump(); };
    if (rho.proper()) {
      check(E_inverse(E_of(rho)) == rho, "E-inverse-of-E", text);
      const ZFilter F = E_of(rho);
      for (auto a : observed_agreement_sets(rho, sample)) {
        check(F.contains(a), "agreement-sets-in-filter", text);
      }
    }
    const auto compat = compatibility_on(rho, sample);
    check(compat.holds(), "congruence-axioms", [&] { return text() + " " + compat.counterexample.value_or(""); });
    check(is_cancellative_on(rho, sample).holds, "cancellative", text);
    check(is_z_congruence(rho, sample).holds, "z-congruence", text);
    check(nabla(delta(rho)) == rho, "nabla-delta-identity", text);
    check(ideal_to_congruence(congruence_to_ideal(rho)) == rho, "ideal-congruence-identity", text);

    for (const auto& sigma : rhos) {
      const Congruence m = meet_op(rho, sigma);
      for (const auto& f : sample) {
        for (const auto& g : sample) {
          check(m.contains(f, g) == (rho.contains(f, g) && sigma.contains(f, g)),
                "meet-is-intersection",
                [&] { return text() + " " + congruence_json(sigma).dump() + " " + format_pair({f, g}); });
        }
      }
      const Congruence j = join_op(rho, sigma);
      check(is_subcongruence(rho, j) && is_subcongruence(sigma, j), "join-is-upper-bound",
            [&] { return text() + " " + congruence_json(sigma).dump(); });
      for (const auto& f : sample) {
        for (const auto& g : sample) {
          check(!(rho.contains(f, g) || sigma.contains(f, g)) || j.contains(f, g),
                "join-contains-union",
                [&] { return text() + " " + congruence_json(sigma).dump() + " " + format_pair({f, g}); });
        }
      }
      check(chain_join_dominated(rho, sigma, sample).dominated, "join-dominates-chains",
            [&] { return text() + " " + congruence_json(sigma).dump(); });
    }
  }

  for (const auto& J : enumerate_ideals(space, Side::semiring)) {
    check(congruence_to_ideal(ideal_to_congruence(J)) == J, "congruence-ideal-identity",
          [&] { return core_text(*space, J.core()); });
  }
  for (const auto& M : enumerate_ideals(space, Side::ring)) {
    const RingCongruence k(M);
    check(delta(nabla(k)) == k, "delta-nabla-identity", [&] { return core_text(*space, M.core()); });
  }
  const auto signed_fns = signed_sample(grid);
  for (const auto& f : signed_fns) {
    for (const auto& g : signed_fns) {
      check(delta_certificate(f, g).consistent, "delta-certificate", [&] { return format_pair({f, g}); });
    }
  }
}

void prime_suite(const SpacePtr& space, const FunctionGrid& grid, Checker& check) {
  const auto rhos = enumerate_z_congruences(space);
  const auto conds = prime_conditions(space, grid);
  for (std::size_t i = 0; i < rhos.size(); ++i) {
    const auto text = [&] { return congruence_json(rhos[i]).dump(); };
    check(conds[i].agree(), "four-conditions-agree", text);
    const auto report = is_prime_congruence(rhos[i], grid);
    check(report.agree(), "prime-definition-matches-filter", text);
    if (rhos[i].proper()) {
      check(conds[i].prime == is_maximal_congruence(rhos[i]), "prime-iff-maximal", text);
    }
  }
  for (const auto& F : enumerate_filters(space)) {
    if (!F.proper()) continue;
    const bool prime = is_prime_filter(F);
    const bool ultra = is_ultrafilter(F);
    check(prime == ultra && ultra == is_atom(*space, F.core()), "prime-ultra-atom",
          [&] { return core_text(*space, F.core()); });
  }
  const auto& sample = grid.indicators();
  std::vector<FnPair> pairs;
  for (const auto& f : sample) {
    for (const auto& g : sample) pairs.emplace_back(f, g);
  }
  for (const auto& p1 : pairs) {
    const Subset e1 = agreement_set(p1.first, p1.second);
    for (const auto& p2 : pairs) {
      const auto t = twisted_product(p1, p2);
      check((e1 | agreement_set(p2.first, p2.second)) == agreement_set(t.first, t.second),
            "twisted-union-identity", [&] { return format_pair(p1) + " " + format_pair(p2); });
    }
  }
}

/// Member-respecting permutations of the ground set onto itself.
std::vector<PointBijection> automorphisms(const SpacePtr& space) {
  std::vector<std::size_t> perm(space->point_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<PointBijection> out;
  do {
    PointBijection h{space, space, perm};
    try {
      transfer_isomorphism(h);
      out.push_back(h);
    } catch (const Error&) {
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

void structure_suite(const SpacePtr& space, const FunctionGrid& grid, Checker& check) {
  const StructureSpace s = build_structure_space(space, grid);
  const Fn zero = Fn::zero(space);
  const Fn one = Fn::one(space);
  check(s.size() == space->atom_count(), "points-biject-atoms");
  check(s.union_identity_holds(), "base-union-identity");
  check(s.m(one, zero).empty(), "m-one-zero-empty");
  check(s.m(one, one) == Subset::full(s.size()), "m-f-f-full");

  const auto eta_report = verify_eta(s, grid);
  check(eta_report.holds(), "eta-homeomorphism", [&] { return eta_report.counterexample.value_or(""); });
  const auto sigma = verify_mcong_sigma(s);
  check(sigma.holds(), "base-is-separating-sigma-algebra",
        [&] { return sigma.counterexample.value_or(""); });

  const auto eq = compactness_equivalences(space, grid);
  check(eq.agree(), "compactness-conditions-agree");
  check(eq.maximal_ideals_fixed && eq.finite && eq.lattice_compact && eq.bounded,
        "finite-space-is-compact");

  if (space->separating()) {
    check(verify_phi(s, grid).holds(), "phi-isomorphism");
    for (const auto& h : automorphisms(space)) {
      const auto text = [&] {
        std::string out;
        for (auto p : h.image) out += std::to_string(p) + " ";
        return out;
      };
      const SemiringIso iso = transfer_isomorphism(h);
      check(certify_isomorphism(iso, grid.values()).holds(), "transfer-is-isomorphism", text);
      check(recover_homeomorphism(iso) == h, "recover-after-transfer", text);
      check(transfer_isomorphism(recover_homeomorphism(iso)) == iso, "transfer-after-recover", text);
    }
  }
}

void quotient_suite(const SpacePtr& space, const FunctionGrid& grid, Checker& check) {
  const auto& fns = grid.functions();
  const auto& sample = grid.indicators();
  for (const auto& rho : enumerate_z_congruences(space)) {
    check(is_convex(rho, grid).holds, "convex", [&] { return congruence_json(rho).dump(); });
  }

  for (const auto& rho : maximal_congruences(space)) {
    const auto text = [&] { return congruence_json(rho).dump(); };
    const auto total = is_totally_ordered(rho, grid);
    check(total.holds && total.dichotomy, "totally-ordered", text);

    for (const auto& f : fns) {
      for (const auto& f2 : fns) {
        if (!rho.contains(f, f2)) continue;
        for (const auto& g : sample) {
          auto t = [&] { return text() + " " + format_fn(f) + " ~ " + format_fn(f2) + " vs " + format_fn(g); };
          check(quot_leq(rho, f, g).holds == quot_leq(rho, f2, g).holds &&
                    quot_leq(rho, g, f).holds == quot_leq(rho, g, f2).holds,
                "order-representative-independent", t);
          check(QuotClass(rho, f) + QuotClass(rho, g) == QuotClass(rho, f2 + g) &&
                    QuotClass(rho, f) * QuotClass(rho, g) == QuotClass(rho, f2 * g),
                "class-arithmetic-well-defined", t);
        }
      }
    }

    for (const auto& f : fns) {
      for (const auto& g : fns) {
        const bool lt = quot_lt(rho, f, g).has_value();
        const bool gt = quot_lt(rho, g, f).has_value();
        const bool eq = rho.contains(f, g);
        check(int(lt) + int(gt) + int(eq) == 1, "trichotomy",
              [&] { return text() + " " + format_pair({f, g}); });
        check(!lt || quot_leq(rho, f, g).holds, "strict-implies-leq",
              [&] { return text() + " " + format_pair({f, g}); });
      }
      const auto inf = is_infinitely_large(rho, f, grid);
      check(inf.agree() && !inf.value() && inf.witness_fails_all && inf.levels_match_truncations,
            "never-infinitely-large", [&] { return text() + " " + format_fn(f); });
      if (!rho.contains(f, Fn::zero(space))) {
        const QuotClass inv = quot_inverse(rho, f);
        check(rho.contains(f * inv.rep(), Fn::one(space)), "inverse",
              [&] { return text() + " " + format_fn(f); });
      }
    }

    const auto& values = grid.values();
    for (const auto& r : values) {
      for (const auto& q : values) {
        const auto cr = Fn::constant(space, r);
        const auto cq = Fn::constant(space, q);
        check((scalar_embed(rho, r) == scalar_embed(rho, q)) == (r == q), "scalar-embedding-injective");
        check(quot_lt(rho, cr, cq).has_value() == (r < q), "scalar-embedding-order");
        check(scalar_embed(rho, r) + scalar_embed(rho, q) == scalar_embed(rho, r + q),
              "scalar-embedding-additive");
      }
    }

    const auto real = is_real(rho, grid);
    check(real.agree() && real.real(), "real", text);
    check(is_real_ideal(eta(rho), grid), "real-ideal", text);
  }

  const auto rm = build_rmcong(space, grid);
  check(rm.real_points == space->atom_count(), "all-maximal-real");
  check(rm.complement_formula, "rmcong-complement-formula");
  check(rm.realcompact, "realcompact");
  check(rm.eta_tilde_bijective, "eta-tilde-bijective");
  check(rm.measurable, "rmcong-measurable");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"ideal-lattice", "duality", "prime", "structure",
                                              "quotient"};
  return names;
}

SuiteResult run_suite(std::string_view name, const SpacePtr& space, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SuiteResult result;
  result.name = std::string(name);
  const FunctionGrid grid(space, options.grid);

  auto run_one = [&](std::string_view suite) {
    Checker check(result, std::string(suite));
    if (suite == "ideal-lattice") {
      ideal_lattice_suite(space, grid, options.mutation, check);
    } else if (suite == "duality") {
      duality_suite(space, grid, options.mutation, check);
    } else if (suite == "prime") {
      prime_suite(space, grid, check);
    } else if (suite == "structure") {
      structure_suite(space, grid, check);
    } else if (suite == "quotient") {
      quotient_suite(space, grid, check);
    } else {
      throw Error(Errc::parse_error, "unknown suite \"" + std::string(suite) + "\"");
    }
  };

  if (name == "all") {
    for (const auto& s : suite_names()) run_one(s);
  } else {
    run_one(name);
  }
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace mspace
