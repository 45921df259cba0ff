// errors.hpp — Exception types shared across the library

#pragma once

#include <stdexcept>
#include <string>

namespace dicke {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A physical parameter violates its domain (negative coupling, non-finite rate).
struct InvalidParameter : Error {
    using Error::Error;
};

// The requested quantity has no value for these inputs (omega = 0, zero couplings).
struct DegenerateInput : Error {
    using Error::Error;
};

// Closed form evaluated at a removable singularity.
struct SingularInput : Error {
    using Error::Error;
};

// Solver non-convergence or a failed runtime integrity check.
struct NumericalError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(int line_number, const std::string& what)
        : Error("line " + std::to_string(line_number) + ": " + what), line(line_number) {}
    int line;
};

struct ValidationError : Error {
    ValidationError(std::string field_name, const std::string& what)
        : Error(field_name + ": " + what), field(std::move(field_name)) {}
    std::string field;
};

} // namespace dicke
