#pragma once

#include <stdexcept>
#include <string>

namespace ncld {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TruncationOverflow : Error {
    using Error::Error;
};
struct DepthExceeded : Error {
    using Error::Error;
};
struct NotRowContraction : Error {
    using Error::Error;
};
struct NotStrictContraction : Error {
    using Error::Error;
};
struct NotPositive : Error {
    using Error::Error;
};
struct NegativeDensity : Error {
    using Error::Error;
};
struct IllConditioned : Error {
    using Error::Error;
};
struct SingularResolvent : Error {
    using Error::Error;
};
struct SpecParseError : Error {
    using Error::Error;
};

}  // namespace ncld
