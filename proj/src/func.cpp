#include "mspace/func.hpp"

#include <algorithm>

namespace mspace {

std::vector<Rational> FunctionGrid::default_values() {
  return {Rational(0), Rational(1, 2), Rational(1), Rational(2)};
}

std::vector<Fn> enumerate_functions(const SpacePtr& space, const std::vector<Rational>& values) {
  const std::size_t atoms = space->atom_count();
  std::vector<Fn> out;
  if (values.empty()) return out;
  std::vector<std::size_t> digit(atoms, 0);
  Fn::Values v(static_cast<Eigen::Index>(atoms));
  while (true) {
    for (std::size_t a = 0; a < atoms; ++a) v[static_cast<Eigen::Index>(a)] = values[digit[a]];
    out.emplace_back(space, v);
    std::size_t a = atoms;
    while (a-- > 0) {
      if (++digit[a] < values.size()) break;
      digit[a] = 0;
    }
    if (a == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

FunctionGrid::FunctionGrid(SpacePtr space, std::vector<Rational> values)
    : space_(std::move(space)), values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
  if (std::any_of(values_.begin(), values_.end(), [](const Rational& r) { return r < 0; })) {
    throw Error(Errc::not_in_positive_cone, "grid values must be non-negative");
  }
  functions_ = enumerate_functions(space_, values_);

  auto add_indicator = [&](Fn f) {
    if (std::find(indicators_.begin(), indicators_.end(), f) == indicators_.end()) {
      indicators_.push_back(std::move(f));
    }
  };
  for (auto m : space_->members()) add_indicator(characteristic_fn(space_, m).fn());
  for (const auto& r : values_) add_indicator(Fn::constant(space_, r));

  std::vector<Rational> signed_values = values_;
  for (const auto& r : values_) signed_values.push_back(-r);
  std::sort(signed_values.begin(), signed_values.end());
  signed_values.erase(std::unique(signed_values.begin(), signed_values.end()),
                      signed_values.end());
  signed_functions_ = enumerate_functions(space_, signed_values);
}

}  // namespace mspace
