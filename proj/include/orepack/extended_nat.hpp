#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace orepack {

// A nonnegative integer or an explicit infinity.
class ExtendedNat {
public:
    static constexpr ExtendedNat infinite() { return ExtendedNat{}; }
    static constexpr ExtendedNat finite(std::uint64_t v) { return ExtendedNat{v}; }

    constexpr bool is_finite() const { return value_.has_value(); }
    constexpr bool is_infinite() const { return !value_.has_value(); }

    std::uint64_t value() const {
        if (!value_) throw std::logic_error("value() of an infinite ExtendedNat");
        return *value_;
    }

    friend constexpr bool operator==(const ExtendedNat&, const ExtendedNat&) = default;

    // Infinity compares above every finite value.
    friend constexpr std::strong_ordering operator<=>(const ExtendedNat& a, const ExtendedNat& b) {
        if (a.is_finite() && b.is_finite()) return *a.value_ <=> *b.value_;
        return b.is_finite() <=> a.is_finite();
    }

    std::string to_string() const { return value_ ? std::to_string(*value_) : std::string("inf"); }

private:
    constexpr ExtendedNat() = default;
    constexpr explicit ExtendedNat(std::uint64_t v) : value_(v) {}

    std::optional<std::uint64_t> value_;
};

inline std::ostream& operator<<(std::ostream& os, const ExtendedNat& e) { return os << e.to_string(); }

}  // namespace orepack
