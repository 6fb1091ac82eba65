#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

namespace arcdiag {

// Exact credit amount stored as an integer count of eighths.  The pocket
// credit is one eighth and the per-vertex budget is fifteen eighths, so all
// ledger arithmetic stays in integers.
class Credit {
public:
    constexpr Credit() = default;
    static constexpr Credit eighths(std::int64_t e) { return Credit(e); }
    static constexpr Credit whole(std::int64_t w) { return Credit(8 * w); }

    constexpr std::int64_t in_eighths() const { return e_; }

    constexpr Credit operator+(Credit o) const { return Credit(e_ + o.e_); }
    constexpr Credit operator-(Credit o) const { return Credit(e_ - o.e_); }
    constexpr Credit operator-() const { return Credit(-e_); }
    constexpr Credit operator*(std::int64_t k) const { return Credit(e_ * k); }
    constexpr Credit& operator+=(Credit o) { e_ += o.e_; return *this; }
    constexpr Credit& operator-=(Credit o) { e_ -= o.e_; return *this; }
    constexpr auto operator<=>(const Credit&) const = default;

    // Reduced fraction, e.g. "41/8", "-3/4", "2".
    std::string str() const {
        std::int64_t g = std::gcd(e_ < 0 ? -e_ : e_, std::int64_t{8});
        if (g == 0) g = 8;
        std::int64_t num = e_ / g, den = 8 / g;
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }

private:
    constexpr explicit Credit(std::int64_t e) : e_(e) {}
    std::int64_t e_ = 0;
};

inline constexpr Credit kPi = Credit::eighths(1);      // credit of a contour pocket
inline constexpr Credit kAlpha = Credit::eighths(15);  // budget per inserted vertex
inline constexpr Credit kOne = Credit::whole(1);

}  // namespace arcdiag
