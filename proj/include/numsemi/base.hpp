#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>

namespace numsemi {

// Every quantity in this library is a natural number carried in an unsigned
// 64-bit word. Arithmetic that would leave the representable range throws
// instead of wrapping, since a silent wraparound would corrupt closure and
// membership checks downstream.
using nat = std::uint64_t;

class arithmetic_overflow : public std::overflow_error {
public:
    arithmetic_overflow() : std::overflow_error("natural-number arithmetic exceeds 64 bits") {}
};

constexpr nat checked_add(nat a, nat b) {
    if (a > std::numeric_limits<nat>::max() - b) throw arithmetic_overflow{};
    return a + b;
}

constexpr nat checked_mul(nat a, nat b) {
    if (a != 0 && b > std::numeric_limits<nat>::max() / a) throw arithmetic_overflow{};
    return a * b;
}

// Renders a list in the bracket-semicolon style "[1;2;3]" ("[]" when empty).
inline std::string format_semicolon_list(std::span<const nat> xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i != 0) out += ';';
        out += std::to_string(xs[i]);
    }
    out += ']';
    return out;
}

}  // namespace numsemi
