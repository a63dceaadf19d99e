#include "rotsurf/error.hpp"

namespace rotsurf {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::DomainMargin: return "DomainMargin";
        case ErrorCode::DegeneratePoint: return "DegeneratePoint";
        case ErrorCode::NotOrthogonal: return "NotOrthogonal";
        case ErrorCode::OutOfDomain: return "OutOfDomain";
        case ErrorCode::EmptyDomain: return "EmptyDomain";
        case ErrorCode::InfeasibleDomain: return "InfeasibleDomain";
        case ErrorCode::NegativeDiscriminant: return "NegativeDiscriminant";
        case ErrorCode::NegativeRadicand: return "NegativeRadicand";
        case ErrorCode::AllDegenerate: return "AllDegenerate";
    }
    return "Unknown";
}

}  // namespace rotsurf
