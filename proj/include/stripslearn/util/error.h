#ifndef STRIPSLEARN_UTIL_ERROR_H
#define STRIPSLEARN_UTIL_ERROR_H

#include <stdexcept>
#include <string>
#include <utility>

namespace util {

// Domain error with a machine-checkable kind ("SyntaxError",
// "UnsupportedFeature", ...) plus a human-readable message. The CLI maps any
// Error to exit code 1 and prints "kind: message".
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

} // namespace util

#endif
