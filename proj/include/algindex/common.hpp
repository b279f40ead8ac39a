// Shared error types and small helpers.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace algindex {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: bad files, bad flags, violated preconditions caused by
// user-supplied data. The CLI maps this to exit code 2.
struct input_error : error {
    using error::error;
};

// FNV-1a, used to fingerprint input files in reports.
inline std::uint64_t fnv1a(const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

inline std::uint64_t fnv1a(const std::string& s) { return fnv1a(s.data(), s.size()); }

}  // namespace algindex
