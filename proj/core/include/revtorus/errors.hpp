#pragma once

#include <stdexcept>
#include <string>

namespace revtorus {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonUnimodular : Error { using Error::Error; };
struct NotInvolution : Error { using Error::Error; };
struct TrivialInvolution : Error { using Error::Error; };
struct NotHyperbolic : Error { using Error::Error; };
struct WrongOrientation : Error { using Error::Error; };
struct NotReversor : Error { using Error::Error; };
struct SquareOrNonpositive : Error { using Error::Error; };
struct NotAReversiblePair : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };
struct LimitZero : Error { using Error::Error; };
struct NonRationalInput : Error { using Error::Error; };

}  // namespace revtorus
