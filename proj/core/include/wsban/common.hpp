#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace wsban {

// Dimension list, row-major layout, channels last: [batch][H][W][C].
using Shape = std::vector<int>;

inline int64_t shape_numel(const Shape& s) {
    int64_t n = 1;
    for (int d : s) n *= d;
    return n;
}

inline std::string shape_str(const Shape& s) {
    std::string out = "[";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "]";
}

// Invalid dimensions, mismatched operand shapes.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Bad scalar arguments: division by zero, out-of-range labels or probabilities.
struct ValueError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Misuse of stateful objects (double backward, foreign-tape loss).
struct StateError : std::logic_error {
    using std::logic_error::logic_error;
};

// An op produced NaN/Inf. Never propagated silently.
struct NonFiniteError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed serialized file; offset is the byte position of the defect.
struct FormatError : std::runtime_error {
    FormatError(const std::string& what, uint64_t offset_)
        : std::runtime_error(what + " (offset " + std::to_string(offset_) + ")"),
          offset(offset_) {}
    uint64_t offset;
};

}  // namespace wsban
