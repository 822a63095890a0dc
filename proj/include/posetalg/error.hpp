#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace posetalg {

/// Bad user input: malformed posets, unknown elements, inconsistent modules.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what,
                             std::vector<std::pair<std::string, std::string>> offending = {})
        : std::runtime_error(what), offending_(std::move(offending)) {}

    /// Pairs of element ids that triggered the error (may be empty).
    const std::vector<std::pair<std::string, std::string>>& offending() const noexcept {
        return offending_;
    }

private:
    std::vector<std::pair<std::string, std::string>> offending_;
};

/// A mathematical invariant failed to hold. Always a bug, never bad input.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace posetalg
