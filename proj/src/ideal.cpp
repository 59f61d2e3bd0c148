#include "mspace/ideal.hpp"

#include <algorithm>

namespace mspace {

std::string_view side_name(Side side) {
  return side == Side::ring ? "ring" : "semiring";
}

IdealCore::IdealCore(SpacePtr space, Subset core, Side side)
    : space_(std::move(space)), core_(core), side_(side) {
  if (!space_->is_member(core_)) {
    throw Error(Errc::not_measurable, "ideal core must be a member of the σ-algebra");
  }
}

bool IdealCore::is_subideal_of(const IdealCore& other) const {
  require_same_space(space_, other.space_);
  if (side_ != other.side_) throw Error(Errc::side_mismatch, "ideals on different sides");
  return other.core_.is_subset_of(core_);
}

IdealCore alpha(const IdealCore& ring_ideal) {
  if (ring_ideal.side() != Side::ring) {
    throw Error(Errc::side_mismatch, "alpha expects a ring ideal");
  }
  return IdealCore(ring_ideal.space(), ring_ideal.core(), Side::semiring);
}

IdealCore beta(const IdealCore& semiring_ideal) {
  if (semiring_ideal.side() != Side::semiring) {
    throw Error(Errc::side_mismatch, "beta expects a semiring ideal");
  }
  return IdealCore(semiring_ideal.space(), semiring_ideal.core(), Side::ring);
}

BetaCertificate beta_certificate(const IdealCore& semiring_ideal, const Fn& f) {
  if (semiring_ideal.side() != Side::semiring) {
    throw Error(Errc::side_mismatch, "beta certificate expects a semiring ideal");
  }
  BetaCertificate cert{pos_part(f), -neg_part(f), false};
  cert.holds = semiring_ideal.contains(cert.positive) &&
               semiring_ideal.contains(cert.negated_negative) &&
               cert.positive - cert.negated_negative == f;
  return cert;
}

namespace {

void require_compatible(const IdealCore& i, const IdealCore& j) {
  require_same_space(i.space(), j.space());
  if (i.side() != j.side()) throw Error(Errc::side_mismatch, "ideals on different sides");
}

}  // namespace

IdealCore ideal_sum(const IdealCore& i, const IdealCore& j) {
  require_compatible(i, j);
  return IdealCore(i.space(), i.core() & j.core(), i.side());
}

IdealCore ideal_meet(const IdealCore& i, const IdealCore& j) {
  require_compatible(i, j);
  return IdealCore(i.space(), i.core() | j.core(), i.side());
}

std::vector<IdealCore> enumerate_ideals(const SpacePtr& space, Side side) {
  std::vector<IdealCore> out;
  out.reserve(space->members().size());
  for (auto m : space->members()) out.emplace_back(space, m, side);
  return out;
}

IdealCore principal_z_ideal(const Fn& f, Side side) {
  return IdealCore(f.space(), zero_set(f), side);
}

bool is_maximal_ideal(const IdealCore& ideal) {
  if (ideal.is_improper()) return false;
  for (auto m : ideal.space()->members()) {
    // A proper ideal strictly above has a nonempty core strictly inside.
    if (!m.empty() && m != ideal.core() && m.is_subset_of(ideal.core())) return false;
  }
  return true;
}

IdealCore intersection_of_maximal_containing(const Fn& f, Side side) {
  const auto& space = f.space();
  // The empty intersection is the improper ideal; each maximal ideal
  // containing f shrinks the intersection's element set, i.e. grows the core.
  Subset core;
  for (const auto& ideal : enumerate_ideals(space, side)) {
    if (is_maximal_ideal(ideal) && ideal.contains(f)) core = core | ideal.core();
  }
  return IdealCore(space, core, side);
}

ZIdealReport is_z_ideal(const IdealCore& semiring_ideal, const FunctionGrid& grid) {
  ZIdealReport report;
  const auto& fns = grid.functions();
  for (const auto& f : fns) {
    if (!semiring_ideal.contains(f)) continue;
    const IdealCore m_f = principal_z_ideal(f);
    for (const auto& g : fns) {
      if (!m_f.contains(g)) continue;
      ++report.checked;
      if (!semiring_ideal.contains(g)) {
        report.holds = false;
        report.counterexample = std::make_pair(f, g);
        return report;
      }
    }
  }
  return report;
}

StrongIdealReport is_strong_ideal(const IdealCore& semiring_ideal, const FunctionGrid& grid) {
  StrongIdealReport report;
  const auto& fns = grid.functions();
  for (const auto& f : fns) {
    for (const auto& g : fns) {
      const Fn sum = f + g;
      if (!semiring_ideal.contains(sum)) continue;
      ++report.checked;
      const NonNegFn<Rational> s(sum);
      auto h = divide_witness(NonNegFn<Rational>(f), s, 1);
      auto k = divide_witness(NonNegFn<Rational>(g), s, 1);
      // f = (f+g)·h lies in I because I absorbs multiplication.
      bool ok = h && k && semiring_ideal.contains(sum * *h) && semiring_ideal.contains(sum * *k) &&
                semiring_ideal.contains(f) && semiring_ideal.contains(g);
      if (!ok) {
        report.holds = false;
        report.counterexample = std::make_pair(f, g);
        return report;
      }
      if (!report.factors) report.factors = std::make_pair(*h, *k);
    }
  }
  return report;
}

bool is_prime_ideal(const IdealCore& ideal, const FunctionGrid& grid) {
  if (ideal.is_improper()) return false;
  const auto& fns = ideal.side() == Side::ring ? grid.signed_functions() : grid.functions();
  for (const auto& f : fns) {
    if (ideal.contains(f)) continue;
    for (const auto& g : fns) {
      if (!ideal.contains(g) && ideal.contains(f * g)) return false;
    }
  }
  return true;
}

IdealCore fixed_maximal_ideal(const SpacePtr& space, std::string_view point, Side side) {
  return IdealCore(space, atom_of(*space, point), side);
}

}  // namespace mspace
