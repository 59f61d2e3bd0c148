#pragma once

// Exact scalar type used throughout the library.
//
// Values are boost::rational over a 64-bit integer that throws
// std::overflow_error instead of wrapping, so every result is either exact
// or an exception. Eigen traits are provided for any boost::rational<I> so
// function values can live in Eigen arrays.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <Eigen/Core>

#include <string>
#include <string_view>
#include <vector>

namespace mspace {

using CheckedInt = boost::multiprecision::number<
    boost::multiprecision::cpp_int_backend<
        64, 64, boost::multiprecision::signed_magnitude,
        boost::multiprecision::checked, void>,
    boost::multiprecision::et_off>;

using Rational = boost::rational<CheckedInt>;

/// Parses "p/q", "p" or "-p/q". Throws Error(parse_error) on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q" in lowest terms.
std::string to_string(const Rational& value);

/// Parses a comma separated list such as "0,1/2,1,2".
std::vector<Rational> parse_rational_list(std::string_view text);

/// Smallest integer n with n >= value.
CheckedInt ceil(const Rational& value);

}  // namespace mspace

namespace Eigen {

template <class I>
struct NumTraits<boost::rational<I>>
    : GenericNumTraits<boost::rational<I>> {
  using Real = boost::rational<I>;
  using NonInteger = boost::rational<I>;
  using Literal = boost::rational<I>;
  using Nested = boost::rational<I>;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 4,
  };

  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
