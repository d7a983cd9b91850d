#ifndef RELCIRC_ERRORS_HPP
#define RELCIRC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace relcirc {

enum class Errc {
    ZeroDenominator,
    DivisionByZero,
    PoleAtPoint,
    DimensionMismatch,
    WidthMismatch,
    SortMismatch,
    IllFormedBox,
    SyntaxError,
    NotInfoWire,
    BadPayloadSort,
    InvariantViolation,
    ForbiddenElement,
    PatternMismatch,
    IndependentSourcePresent,
    UnknownGadget,
    UnknownNode,
    UnknownControl,
    BadValue,
    SortError,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string msg, int line = 0, int col = 0)
        : std::runtime_error(std::move(msg)), code_(code), line_(line), col_(col) {}

    Errc code() const { return code_; }
    int line() const { return line_; }
    int col() const { return col_; }

private:
    Errc code_;
    int line_;
    int col_;
};

const char* errc_name(Errc code);

} // namespace relcirc

#endif
