#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace dvbp {

// Exact rational number over 128-bit integers. Always stored normalized:
// gcd(|num|, den) == 1 and den > 0. Any operation whose exact result does
// not fit throws Error{ErrorCode::Overflow}.
class Scalar {
public:
    using Int = __int128;

    constexpr Scalar() = default;
    constexpr Scalar(int v) : num_(v) {}        // NOLINT(google-explicit-constructor)
    constexpr Scalar(long v) : num_(v) {}       // NOLINT(google-explicit-constructor)
    constexpr Scalar(long long v) : num_(v) {}  // NOLINT(google-explicit-constructor)
    Scalar(Int num, Int den);

    static Scalar from_int(Int v) { return Scalar(v, 1); }

    // Accepts "7", "-3", "0.25" (read exactly as 25/100) and "p/q".
    static Scalar parse(std::string_view text);

    // Canonical form: "p/q", or "p" when the denominator is 1.
    std::string str() const;

    Int num() const noexcept { return num_; }
    Int den() const noexcept { return den_; }

    bool is_integer() const noexcept { return den_ == 1; }
    bool is_zero() const noexcept { return num_ == 0; }
    int sign() const noexcept { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    Int floor() const;
    Int ceil() const;
    double to_double() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) noexcept;

private:
    Int num_ = 0;
    Int den_ = 1;
};

std::string to_string(Scalar::Int v);

inline Scalar min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
inline Scalar max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

}  // namespace dvbp

template <>
struct std::hash<dvbp::Scalar> {
    size_t operator()(const dvbp::Scalar& s) const noexcept {
        auto mix = [](unsigned __int128 v) {
            return static_cast<size_t>(v) ^ static_cast<size_t>(v >> 64) * 0x9E3779B97F4A7C15ULL;
        };
        return mix(static_cast<unsigned __int128>(s.num())) * 31 + mix(static_cast<unsigned __int128>(s.den()));
    }
};
