#pragma once

#include <stdexcept>
#include <string>

namespace qqdyn {

/// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotSquareError : Error { using Error::Error; };
struct NotHermitianError : Error { using Error::Error; };
struct NotDensityMatrixError : Error { using Error::Error; };
struct ZeroStateError : Error { using Error::Error; };
struct NotNormalizedError : Error { using Error::Error; };
struct WrongDimensionError : Error { using Error::Error; };
struct UnknownScenarioError : Error { using Error::Error; };
struct UnknownPresetError : Error { using Error::Error; };

/// Config syntax error with a 1-based source location.
struct ParseError : Error {
    ParseError(const std::string& what, int line_, int column_)
        : Error(what + " (line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}

    int line;
    int column;
};

}  // namespace qqdyn
