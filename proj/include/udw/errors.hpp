#pragma once

#include <stdexcept>
#include <string>

namespace udw {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : Error {
    using Error::Error;
};

struct NonConvergence : Error {
    using Error::Error;
};

struct NonFinite : Error {
    using Error::Error;
};

struct NoSignChange : Error {
    using Error::Error;
};

struct AsymmetricInput : Error {
    using Error::Error;
};

struct InterpolationRange : Error {
    using Error::Error;
};

struct InfiniteMeasurement : Error {
    using Error::Error;
};

struct ZeroDerivative : Error {
    using Error::Error;
};

struct UnsupportedProfile : Error {
    using Error::Error;
};

struct GridTooCoarse : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace udw
