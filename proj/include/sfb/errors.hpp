#pragma once

#include <stdexcept>
#include <string>

namespace sfb {

// Every precondition failure in the library throws GeomError with one of
// these codes. Tests match on the code, messages are for humans.
enum class Errc {
    ZeroVector,
    DegenerateProjection,
    NotOrthogonal,
    AngleOutOfRange,
    NotProperlyContained,
    BodyNotInOpenHemisphere,
    PoleNotInterior,
    NoValidPole,
    OutsideOpenHemisphere,
    PoleMismatch,
    DegenerateRadial,
    PoleInvalid,
    BadSubsphere,
    NotNested,
    DeltaOutOfRange,
    FloatingBodyEmpty,
    PoleNotInteriorOfFloat,
    BadEnclosure,
    ZeroCurvaturePoint,
    BoundaryPointMismatch,
    UnionNotConvex,
    BadBodySpec,
    DimensionMismatch,
};

const char* errc_name(Errc c);

class GeomError : public std::runtime_error {
  public:
    GeomError(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
    throw GeomError(code, what);
}

inline void require(bool ok, Errc code, const std::string& what) {
    if (!ok) fail(code, what);
}

}  // namespace sfb
