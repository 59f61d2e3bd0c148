#pragma once

// Measurable functions on a finite measurable space.
//
// A function is measurable exactly when it is constant on atoms, so a
// MeasurableFn stores one value per atom in an Eigen array. All operations
// are pointwise free functions templated on the scalar type.

#include "mspace/error.hpp"
#include "mspace/rational.hpp"
#include "mspace/space.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace mspace {

template <class Scalar = Rational>
class MeasurableFn {
 public:
  using scalar_type = Scalar;
  using Values = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

  MeasurableFn(SpacePtr space, Values values)
      : space_(std::move(space)), values_(std::move(values)) {
    if (!space_ || static_cast<std::size_t>(values_.size()) != space_->atom_count()) {
      throw Error(Errc::space_mismatch, "value vector length must equal the atom count");
    }
  }

  static MeasurableFn constant(SpacePtr space, const Scalar& r) {
    auto n = static_cast<Eigen::Index>(space->atom_count());
    return MeasurableFn(std::move(space), Values::Constant(n, r));
  }
  static MeasurableFn zero(SpacePtr space) { return constant(std::move(space), Scalar(0)); }
  static MeasurableFn one(SpacePtr space) { return constant(std::move(space), Scalar(1)); }

  const SpacePtr& space() const { return space_; }
  const Values& values() const { return values_; }
  std::size_t size() const { return static_cast<std::size_t>(values_.size()); }

  /// Value on atom `a`.
  const Scalar& operator[](std::size_t a) const {
    return values_[static_cast<Eigen::Index>(a)];
  }
  /// Value at ground point `p`.
  const Scalar& at_point(std::size_t p) const { return (*this)[space_->atom_index(p)]; }

  bool is_nonneg() const {
    return std::all_of(values_.begin(), values_.end(),
                       [](const Scalar& v) { return v >= Scalar(0); });
  }
  bool is_zero() const {
    return std::all_of(values_.begin(), values_.end(),
                       [](const Scalar& v) { return v == Scalar(0); });
  }
  Scalar max_value() const { return *std::max_element(values_.begin(), values_.end()); }

  friend bool operator==(const MeasurableFn& f, const MeasurableFn& g) {
    return same_space(f.space_, g.space_) && (f.values_ == g.values_).all();
  }

 private:
  SpacePtr space_;
  Values values_;
};

using Fn = MeasurableFn<Rational>;

/// Marks membership in the positive cone M⁺.
template <class Scalar = Rational>
class NonNegFn {
 public:
  /// Throws Error(not_in_positive_cone) when some value is negative.
  explicit NonNegFn(MeasurableFn<Scalar> fn) : fn_(std::move(fn)) {
    if (!fn_.is_nonneg()) {
      throw Error(Errc::not_in_positive_cone, "function takes a negative value");
    }
  }

  const MeasurableFn<Scalar>& fn() const { return fn_; }
  operator const MeasurableFn<Scalar>&() const { return fn_; }  // NOLINT

 private:
  MeasurableFn<Scalar> fn_;
};

namespace detail {

template <class Scalar, class Op>
MeasurableFn<Scalar> combine(const MeasurableFn<Scalar>& f, const MeasurableFn<Scalar>& g,
                             Op op) {
  require_same_space(f.space(), g.space());
  return MeasurableFn<Scalar>(f.space(), op(f.values(), g.values()));
}

template <class Scalar>
Subset atoms_where(const MeasurableFn<Scalar>& f, auto pred) {
  Subset out;
  for (std::size_t a = 0; a < f.size(); ++a) {
    if (pred(a)) out = out | Subset::singleton(a);
  }
  return out;
}

}  // namespace detail

template <class Scalar>
MeasurableFn<Scalar> operator+(const MeasurableFn<Scalar>& f, const MeasurableFn<Scalar>& g) {
  return detail::combine(f, g, [](const auto& a, const auto& b) {
    return typename MeasurableFn<Scalar>::Values(a + b);
  });
}

template <class Scalar>
MeasurableFn<Scalar> operator-(const MeasurableFn<Scalar>& f, const MeasurableFn<Scalar>& g) {
  return detail::combine(f, g, [](const auto& a, const auto& b) {
    return typename MeasurableFn<Scalar>::Values(a - b);
  });
}

template <class Scalar>
MeasurableFn<Scalar> operator-(const MeasurableFn<Scalar>& f) {
  return MeasurableFn<Scalar>(f.space(), -f.values());
}

template <class Scalar>
MeasurableFn<Scalar> operator*(const MeasurableFn<Scalar>& f, const MeasurableFn<Scalar>& g) {
  return detail::combine(f, g, [](const auto& a, const auto& b) {
    return typename MeasurableFn<Scalar>::Values(a * b);
  });
}

template <class Scalar>
MeasurableFn<Scalar> operator*(const Scalar& r, const MeasurableFn<Scalar>& f) {
  return MeasurableFn<Scalar>(f.space(), f.values() * r);
}

/// f ∨ g, the pointwise maximum.
template <class Scalar>
MeasurableFn<Scalar> join(const MeasurableFn<Scalar>& f, const MeasurableFn<Scalar>& g) {
  return detail::combine(f, g, [](const auto& a, const auto& b) {
    return typename MeasurableFn<Scalar>::Values(a.max(b));
  });
}

/// f ∧ g, the pointwise minimum.
template <class Scalar>
MeasurableFn<Scalar> meet(const MeasurableFn<Scalar>& f, const MeasurableFn<Scalar>& g) {
  return detail::combine(f, g, [](const auto& a, const auto& b) {
    return typename MeasurableFn<Scalar>::Values(a.min(b));
  });
}

/// Pointwise f <= g.
template <class Scalar>
bool leq(const MeasurableFn<Scalar>& f, const MeasurableFn<Scalar>& g) {
  require_same_space(f.space(), g.space());
  return (f.values() <= g.values()).all();
}

/// Pointwise f <= g on every point of `where` (a union of atoms).
template <class Scalar>
bool leq_on(const MeasurableFn<Scalar>& f, const MeasurableFn<Scalar>& g, Subset where) {
  require_same_space(f.space(), g.space());
  const auto& space = *f.space();
  for (std::size_t a = 0; a < f.size(); ++a) {
    if (space.atom(a).intersects(where) && g[a] < f[a]) return false;
  }
  return true;
}

/// f⁺ = f ∨ 𝟎.
template <class Scalar>
MeasurableFn<Scalar> pos_part(const MeasurableFn<Scalar>& f) {
  return MeasurableFn<Scalar>(f.space(), f.values().max(Scalar(0)));
}

/// f⁻ = f ∧ 𝟎, so f⁻ <= 𝟎, f = f⁺ + f⁻ and |f| = f⁺ − f⁻.
template <class Scalar>
MeasurableFn<Scalar> neg_part(const MeasurableFn<Scalar>& f) {
  return MeasurableFn<Scalar>(f.space(), f.values().min(Scalar(0)));
}

template <class Scalar>
MeasurableFn<Scalar> abs(const MeasurableFn<Scalar>& f) {
  return MeasurableFn<Scalar>(
      f.space(), f.values().unaryExpr([](const Scalar& v) { return v < Scalar(0) ? -v : v; }));
}

/// Atoms on which f vanishes.
template <class Scalar>
Subset zero_atoms(const MeasurableFn<Scalar>& f) {
  return detail::atoms_where(f, [&](std::size_t a) { return f[a] == Scalar(0); });
}

/// Atoms on which f and g agree.
template <class Scalar>
Subset agreement_atoms(const MeasurableFn<Scalar>& f, const MeasurableFn<Scalar>& g) {
  require_same_space(f.space(), g.space());
  return detail::atoms_where(f, [&](std::size_t a) { return f[a] == g[a]; });
}

/// Z(f), as a subset of the ground set.
template <class Scalar>
Subset zero_set(const MeasurableFn<Scalar>& f) {
  return f.space()->union_of_atoms(zero_atoms(f));
}

/// E(f, g) = {x : f(x) = g(x)}.
template <class Scalar>
Subset agreement_set(const MeasurableFn<Scalar>& f, const MeasurableFn<Scalar>& g) {
  return f.space()->union_of_atoms(agreement_atoms(f, g));
}

/// χ_A. Throws Error(not_measurable) when A is not a member.
template <class Scalar = Rational>
NonNegFn<Scalar> characteristic_fn(const SpacePtr& space, Subset a) {
  if (!space->is_member(a)) {
    throw Error(Errc::not_measurable, "set is not a member of the σ-algebra");
  }
  typename MeasurableFn<Scalar>::Values v(static_cast<Eigen::Index>(space->atom_count()));
  for (std::size_t i = 0; i < space->atom_count(); ++i) {
    v[static_cast<Eigen::Index>(i)] = space->atom(i).is_subset_of(a) ? Scalar(1) : Scalar(0);
  }
  return NonNegFn<Scalar>(MeasurableFn<Scalar>(space, std::move(v)));
}

/// Pointwise reciprocal off Z(f), zero on Z(f).
template <class Scalar>
MeasurableFn<Scalar> reciprocal_off_zero(const MeasurableFn<Scalar>& f) {
  return MeasurableFn<Scalar>(f.space(), f.values().unaryExpr([](const Scalar& v) {
    return v == Scalar(0) ? Scalar(0) : Scalar(1) / v;
  }));
}

/// g^r for a positive integer r.
template <class Scalar>
MeasurableFn<Scalar> power(const MeasurableFn<Scalar>& g, unsigned r) {
  auto out = MeasurableFn<Scalar>::one(g.space());
  for (unsigned i = 0; i < r; ++i) out = out * g;
  return out;
}

/// When f <= g^r, the quotient h with h = f/g off Z(g) and 0 on Z(g); g·h = f
/// is checked before returning. Otherwise nullopt.
template <class Scalar>
std::optional<MeasurableFn<Scalar>> divide_witness(const NonNegFn<Scalar>& f,
                                                   const NonNegFn<Scalar>& g, unsigned r) {
  require_same_space(f.fn().space(), g.fn().space());
  if (r == 0 || !leq(f.fn(), power(g.fn(), r))) return std::nullopt;
  auto h = f.fn() * reciprocal_off_zero(g.fn());
  if (!(g.fn() * h == f.fn())) return std::nullopt;
  return h;
}

/// Riesz decomposition f = s + t with 0 <= s <= |g| and 0 <= t <= |h|, using
/// s = f ∧ |g|. Throws Error(decomposition_impossible) unless f <= |g| + |h|.
template <class Scalar>
std::pair<NonNegFn<Scalar>, NonNegFn<Scalar>> riesz_decompose(const NonNegFn<Scalar>& f,
                                                              const MeasurableFn<Scalar>& g,
                                                              const MeasurableFn<Scalar>& h) {
  const auto abs_g = abs(g);
  const auto abs_h = abs(h);
  if (!leq(f.fn(), abs_g + abs_h)) {
    throw Error(Errc::decomposition_impossible, "f is not bounded by |g| + |h|");
  }
  auto s = meet(f.fn(), abs_g);
  auto t = f.fn() - s;
  return {NonNegFn<Scalar>(std::move(s)), NonNegFn<Scalar>(std::move(t))};
}

/// Every function with values drawn from a finite value set, plus a smaller
/// indicator sample (characteristic functions of all members and the
/// constant functions) used for sweeps over pairs of pairs.
class FunctionGrid {
 public:
  /// The default grid {0, 1/2, 1, 2}.
  static std::vector<Rational> default_values();

  FunctionGrid(SpacePtr space, std::vector<Rational> values);

  const SpacePtr& space() const { return space_; }
  const std::vector<Rational>& values() const { return values_; }
  const std::vector<Fn>& functions() const { return functions_; }
  const std::vector<Fn>& indicators() const { return indicators_; }
  /// Differences f − g over the values ∪ −values grid, for ring-side sweeps.
  const std::vector<Fn>& signed_functions() const { return signed_functions_; }

 private:
  SpacePtr space_;
  std::vector<Rational> values_;
  std::vector<Fn> functions_;
  std::vector<Fn> indicators_;
  std::vector<Fn> signed_functions_;
};

/// All functions with values in `values` (|values|^atoms of them), in
/// lexicographic order with atom 0 varying slowest.
std::vector<Fn> enumerate_functions(const SpacePtr& space, const std::vector<Rational>& values);

}  // namespace mspace
