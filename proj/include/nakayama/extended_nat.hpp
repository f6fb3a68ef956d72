#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace nakayama {

/// A natural number or infinity. Every homological dimension lives here.
class ExtendedNat {
public:
    constexpr ExtendedNat() = default;
    constexpr ExtendedNat(std::uint64_t value) : value_(value) {}

    static constexpr ExtendedNat infinity() {
        ExtendedNat e;
        e.infinite_ = true;
        return e;
    }

    constexpr bool is_finite() const { return !infinite_; }
    constexpr bool is_infinite() const { return infinite_; }

    /// Only meaningful for finite values.
    constexpr std::uint64_t value() const { return value_; }

    constexpr bool operator==(const ExtendedNat& other) const {
        return infinite_ == other.infinite_ && (infinite_ || value_ == other.value_);
    }
    constexpr std::strong_ordering operator<=>(const ExtendedNat& other) const {
        if (infinite_ || other.infinite_) return infinite_ <=> other.infinite_;
        return value_ <=> other.value_;
    }

    /// ∞ + k = ∞.
    constexpr ExtendedNat operator+(std::uint64_t k) const {
        return infinite_ ? *this : ExtendedNat(value_ + k);
    }

    std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

    /// Accepts decimal digits or "inf".
    static std::optional<ExtendedNat> parse(std::string_view text);

private:
    std::uint64_t value_ = 0;
    bool infinite_ = false;
};

inline std::ostream& operator<<(std::ostream& os, const ExtendedNat& e) { return os << e.to_string(); }

}  // namespace nakayama
