#pragma once

// Exhaustive invariant suites behind `mspace verify`.

#include "mspace/func.hpp"
#include "mspace/space.hpp"

#include <chrono>
#include <string>
#include <string_view>
#include <vector>

namespace mspace {

struct Failure {
  std::string tag;
  std::string counterexample;
};

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::vector<Failure> failures;
  std::chrono::duration<double> elapsed{0};

  bool ok() const { return failures.empty(); }
};

/// Deliberate faults for testing the harness itself.
enum class Mutation { none, swap_join_meet };

struct VerifyOptions {
  std::vector<Rational> grid = FunctionGrid::default_values();
  Mutation mutation = Mutation::none;
};

/// ideal-lattice, duality, prime, structure, quotient.
const std::vector<std::string>& suite_names();

/// Runs one named suite, or every suite for "all". Throws
/// Error(parse_error) for an unknown name.
SuiteResult run_suite(std::string_view name, const SpacePtr& space, const VerifyOptions& options);

}  // namespace mspace
