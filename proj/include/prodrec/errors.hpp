#ifndef PRODREC_ERRORS_HPP
#define PRODREC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace prodrec {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};
struct NotSquare : Error {
    using Error::Error;
};
struct NotSymmetric : Error {
    using Error::Error;
};
struct NotUnimodular : Error {
    using Error::Error;
};
struct NotPrimitive : Error {
    using Error::Error;
};
struct EvenSignatureViolation : Error {
    using Error::Error;
};
struct GenusZero : Error {
    using Error::Error;
};
struct TorsionPresent : Error {
    using Error::Error;
};
struct IllDefined : Error {
    using Error::Error;
};
struct NotAnIsometry : Error {
    using Error::Error;
};
struct UnknownMutation : Error {
    using Error::Error;
};

// Parse failures carry the 1-based line number of the offending input line.
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& what_)
        : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

} // namespace prodrec

#endif
