#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reqlens {

// Expected failure (bad input, bad config, violated contract). The CLI maps
// these to exit code 1 and a machine-readable error JSON; anything else that
// escapes is an internal error (exit 2).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message, std::string location = {})
        : std::runtime_error(message), code_(std::move(code)), location_(std::move(location)) {}

    const std::string& code() const { return code_; }
    const std::string& location() const { return location_; }

private:
    std::string code_;
    std::string location_;
};

// Markup grammar violation. `position` is the offset of the offending
// character in the marked text, counted in Unicode scalar values.
class MarkupError : public Error {
public:
    MarkupError(const std::string& message, std::size_t position)
        : Error("markup", message + " at offset " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

} // namespace reqlens
