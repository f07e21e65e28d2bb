#ifndef FRACX_ERRORS_HPP
#define FRACX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fracx {

// Malformed input or a violated call precondition.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A configurable resource cap was exceeded (set enumeration cap, palette
// bound, ...).  The message names the cap that was hit.
class ResourceLimitError : public std::runtime_error {
public:
    ResourceLimitError(const std::string& msg, long long cap)
        : std::runtime_error(msg), cap_(cap) {}
    long long cap() const noexcept { return cap_; }

private:
    long long cap_;
};

} // namespace fracx

#endif
