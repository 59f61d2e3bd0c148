#include "mspace/error.hpp"

namespace mspace {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_ground_set: return "InvalidGroundSet";
    case Errc::unknown_point: return "UnknownPoint";
    case Errc::space_mismatch: return "SpaceMismatch";
    case Errc::not_measurable: return "NotMeasurable";
    case Errc::not_in_positive_cone: return "NotInPositiveCone";
    case Errc::decomposition_impossible: return "DecompositionImpossible";
    case Errc::side_mismatch: return "SideMismatch";
    case Errc::improper_filter: return "ImproperFilter";
    case Errc::not_cancellative: return "NotCancellative";
    case Errc::not_z_congruence: return "NotZCongruence";
    case Errc::not_maximal: return "NotMaximal";
    case Errc::not_t_measurable: return "NotTMeasurable";
    case Errc::not_homeomorphism: return "NotHomeomorphism";
    case Errc::not_representable: return "NotRepresentable";
    case Errc::not_invertible: return "NotInvertible";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

}  // namespace mspace
