#ifndef CHRONON_ERRORS_HPP
#define CHRONON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chronon {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define CHRONON_DEFINE_ERROR(NAME)                     \
    class NAME : public Error {                        \
    public:                                            \
        using Error::Error;                            \
    }

CHRONON_DEFINE_ERROR(NonHermitianInput);
CHRONON_DEFINE_ERROR(NotPSD);
CHRONON_DEFINE_ERROR(ShapeMismatch);
CHRONON_DEFINE_ERROR(InvalidEffects);
CHRONON_DEFINE_ERROR(NotStochastic);
CHRONON_DEFINE_ERROR(NonHermitianSot);
CHRONON_DEFINE_ERROR(NotOrthogonal);
CHRONON_DEFINE_ERROR(NotStateLinear);
CHRONON_DEFINE_ERROR(NotPure);
CHRONON_DEFINE_ERROR(NotDaggerPreserving);
CHRONON_DEFINE_ERROR(NotTP);
CHRONON_DEFINE_ERROR(SolveFailed);
CHRONON_DEFINE_ERROR(PreconditionViolated);
CHRONON_DEFINE_ERROR(UnknownExample);
CHRONON_DEFINE_ERROR(ParseError);

#undef CHRONON_DEFINE_ERROR

} // namespace chronon

#endif
