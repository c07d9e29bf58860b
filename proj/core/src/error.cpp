#include "polybisim/error.hpp"

namespace polybisim {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformed: return "MALFORMED";
    case ErrorCode::kDimension: return "DIMENSION";
    case ErrorCode::kRankDeficient: return "RANK_DEFICIENT";
    case ErrorCode::kRhoRange: return "RHO_RANGE";
    case ErrorCode::kGammaOrder: return "GAMMA_ORDER";
    case ErrorCode::kRegionOverlap: return "REGION_OVERLAP";
    case ErrorCode::kRegionDomain: return "REGION_DOMAIN";
    case ErrorCode::kParse: return "PARSE";
    case ErrorCode::kUnknownAtom: return "UNKNOWN_ATOM";
    case ErrorCode::kOutsideDomain: return "OUTSIDE_DOMAIN";
    case ErrorCode::kPrecondition: return "PRECONDITION";
    case ErrorCode::kContraction: return "CONTRACTION";
    case ErrorCode::kInvariant: return "INVARIANT";
  }
  return "UNKNOWN";
}

}  // namespace polybisim
