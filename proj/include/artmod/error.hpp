#pragma once

#include <stdexcept>
#include <string>

namespace artmod {

/// Base class for every error raised by the toolkit. The CLI maps these to
/// exit code 1; anything else escaping a command is a bug.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two vectors (or a vector and a model) disagree on dimension.
class DimensionError : public Error {
public:
    DimensionError(std::size_t expected, std::size_t found, const std::string& context = {})
        : Error(context + (context.empty() ? "" : ": ") + "dimension mismatch (expected " +
                std::to_string(expected) + ", found " + std::to_string(found) + ")"),
          expected_(expected),
          found_(found) {}

    std::size_t expected() const noexcept { return expected_; }
    std::size_t found() const noexcept { return found_; }

private:
    std::size_t expected_;
    std::size_t found_;
};

/// A vector with zero norm was passed where a direction is required.
class ZeroNormError : public Error {
public:
    using Error::Error;
};

/// Invalid argument to a numerical or statistical routine.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

}  // namespace artmod
