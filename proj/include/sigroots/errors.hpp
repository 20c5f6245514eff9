#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sigroots {

/// Input exceeds a documented size limit (vertex capacity, brute-force scope).
class capacity_error : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Precondition on the mathematical input violated.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed text input; carries the byte offset of the first bad byte.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// An iterative numeric method failed to meet its contract.
class numeric_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace sigroots
