#include "sfb/errors.hpp"

namespace sfb {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::ZeroVector: return "ZeroVector";
        case Errc::DegenerateProjection: return "DegenerateProjection";
        case Errc::NotOrthogonal: return "NotOrthogonal";
        case Errc::AngleOutOfRange: return "AngleOutOfRange";
        case Errc::NotProperlyContained: return "NotProperlyContained";
        case Errc::BodyNotInOpenHemisphere: return "BodyNotInOpenHemisphere";
        case Errc::PoleNotInterior: return "PoleNotInterior";
        case Errc::NoValidPole: return "NoValidPole";
        case Errc::OutsideOpenHemisphere: return "OutsideOpenHemisphere";
        case Errc::PoleMismatch: return "PoleMismatch";
        case Errc::DegenerateRadial: return "DegenerateRadial";
        case Errc::PoleInvalid: return "PoleInvalid";
        case Errc::BadSubsphere: return "BadSubsphere";
        case Errc::NotNested: return "NotNested";
        case Errc::DeltaOutOfRange: return "DeltaOutOfRange";
        case Errc::FloatingBodyEmpty: return "FloatingBodyEmpty";
        case Errc::PoleNotInteriorOfFloat: return "PoleNotInteriorOfFloat";
        case Errc::BadEnclosure: return "BadEnclosure";
        case Errc::ZeroCurvaturePoint: return "ZeroCurvaturePoint";
        case Errc::BoundaryPointMismatch: return "BoundaryPointMismatch";
        case Errc::UnionNotConvex: return "UnionNotConvex";
        case Errc::BadBodySpec: return "BadBodySpec";
        case Errc::DimensionMismatch: return "DimensionMismatch";
    }
    return "UnknownError";
}

}  // namespace sfb
