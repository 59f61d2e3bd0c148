#pragma once

// Shared fixtures and brute-force oracles. The oracles work on raw masks and
// pointwise values so they share no code paths with the library.

#include "mspace/func.hpp"
#include "mspace/space.hpp"

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace mspace::fixtures {

inline SpacePtr make_space(std::vector<std::string> points,
                           std::vector<std::vector<std::string>> gens) {
  return SigmaAlgebra::generate(std::move(points), gens);
}

/// Power set on the first n letters.
inline SpacePtr power_set(std::size_t n) {
  std::vector<std::vector<std::string>> gens;
  auto labels = default_labels(n);
  for (const auto& l : labels) gens.push_back({l});
  return make_space(labels, gens);
}

/// {a,b,c} with atoms {a}, {b,c}.
inline SpacePtr split_space() { return make_space({"a", "b", "c"}, {{"a"}}); }

inline Fn fn(const SpacePtr& space, std::initializer_list<const char*> values) {
  Fn::Values v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (const char* s : values) v[i++] = parse_rational(s);
  return Fn(space, std::move(v));
}

inline Subset pts(const SigmaAlgebra& space, std::vector<std::string> labels) {
  return space.ground().subset_of(labels);
}

/// Error code thrown by `f`, if any.
template <class F>
std::optional<Errc> thrown(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

namespace oracle {

using Mask = std::uint64_t;

/// Closes {∅, X} ∪ gens under complement and pairwise union until nothing new appears.
inline std::set<Mask> closure(std::size_t n, const std::vector<Mask>& gens) {
  const Mask full = (Mask{1} << n) - 1;
  std::set<Mask> fam{0, full};
  fam.insert(gens.begin(), gens.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Mask> cur(fam.begin(), fam.end());
    for (Mask a : cur) {
      if (fam.insert(full & ~a).second) grew = true;
      for (Mask b : cur) {
        if (fam.insert(a | b).second) grew = true;
      }
    }
  }
  return fam;
}

/// Minimal nonempty members.
inline std::set<Mask> atoms(const std::set<Mask>& fam) {
  std::set<Mask> out;
  for (Mask a : fam) {
    if (a == 0) continue;
    bool minimal = std::none_of(fam.begin(), fam.end(), [&](Mask b) {
      return b != 0 && b != a && (b & a) == b;
    });
    if (minimal) out.insert(a);
  }
  return out;
}

/// Some member holds x but not y, for every ordered pair x ≠ y.
inline bool separates(std::size_t n, const std::set<Mask>& fam) {
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      bool found = std::any_of(fam.begin(), fam.end(), [&](Mask m) {
        return (m >> x & 1) && !(m >> y & 1);
      });
      if (!found) return false;
    }
  }
  return true;
}

/// Number of set partitions of an n-element set, n = 0..5.
inline constexpr std::size_t bell[] = {1, 1, 2, 5, 15, 52};

/// Points x with f(x) = g(x), by point evaluation.
inline Mask agreement(const Fn& f, const Fn& g) {
  Mask out = 0;
  for (std::size_t p = 0; p < f.space()->point_count(); ++p) {
    if (f.at_point(p) == g.at_point(p)) out |= Mask{1} << p;
  }
  return out;
}

inline Mask zeros(const Fn& f) { return agreement(f, Fn::zero(f.space())); }

}  // namespace oracle
}  // namespace mspace::fixtures
