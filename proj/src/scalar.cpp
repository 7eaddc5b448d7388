#include "dvbp/scalar.hpp"

#include <algorithm>
#include <limits>

#include "dvbp/error.hpp"

namespace dvbp {

namespace {

using Int = Scalar::Int;
using UInt = unsigned __int128;

constexpr Int kMax = static_cast<Int>(~UInt{0} >> 1);
constexpr Int kMin = -kMax - 1;

[[noreturn]] void overflow(const char* op) {
    fail(ErrorCode::Overflow, std::string("rational overflow in ") + op);
}

Int add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r) || r == kMin) overflow("addition");
    return r;
}

Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r) || r == kMin) overflow("multiplication");
    return r;
}

UInt uabs(Int v) { return v < 0 ? UInt(0) - UInt(v) : UInt(v); }

Int gcd(Int a, Int b) {
    UInt x = uabs(a), y = uabs(b);
    while (y != 0) {
        UInt t = x % y;
        x = y;
        y = t;
    }
    return static_cast<Int>(x);
}

Int floor_div(Int a, Int b) {
    // b > 0
    Int q = a / b;
    if ((a % b != 0) && (a < 0)) --q;
    return q;
}

// Compares a/b with c/d for b, d > 0 without overflow, by expanding both
// sides as continued fractions.
int compare_fractions(Int a, Int b, Int c, Int d) {
    for (;;) {
        Int lhs, rhs;
        if (!__builtin_mul_overflow(a, d, &lhs) && !__builtin_mul_overflow(c, b, &rhs)) {
            return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
        }
        Int qa = floor_div(a, b), qc = floor_div(c, d);
        if (qa != qc) return qa < qc ? -1 : 1;
        Int ra = a - qa * b, rc = c - qc * d;  // 0 <= r < den
        if (ra == 0 || rc == 0) {
            if (ra == rc) return 0;
            return ra == 0 ? -1 : 1;
        }
        // ra/b vs rc/d  <=>  d/rc vs b/ra
        Int na = d, nb = rc, nc = b, nd = ra;
        a = na;
        b = nb;
        c = nc;
        d = nd;
    }
}

}  // namespace

Scalar::Scalar(Int num, Int den) {
    if (den == 0) fail(ErrorCode::Usage, "rational with zero denominator");
    if (num == kMin || den == kMin) overflow("construction");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    Int g = gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    num_ = num;
    den_ = den;
}

Scalar Scalar::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
        return s;
    };
    const std::string_view original = text;
    auto bad = [&]() -> Scalar { fail(ErrorCode::Parse, "invalid number '" + std::string(original) + "'"); };

    text = trim(text);
    if (text.empty()) return bad();

    auto parse_int = [&](std::string_view s, bool allow_sign) -> Int {
        bool neg = false;
        if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) {
            neg = s.front() == '-';
            s.remove_prefix(1);
        }
        if (s.empty()) bad();
        Int v = 0;
        for (char ch : s) {
            if (ch < '0' || ch > '9') bad();
            v = add(mul(v, 10), ch - '0');
        }
        return neg ? -v : v;
    };

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Int p = parse_int(trim(text.substr(0, slash)), true);
        Int q = parse_int(trim(text.substr(slash + 1)), false);
        if (q == 0) fail(ErrorCode::Parse, "zero denominator in '" + std::string(original) + "'");
        return Scalar(p, q);
    }

    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        bool neg = !whole.empty() && whole.front() == '-';
        if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
        if (whole.empty() && frac.empty()) return bad();
        Int w = whole.empty() ? 0 : parse_int(whole, false);
        Int f = frac.empty() ? 0 : parse_int(frac, false);
        Int scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale = mul(scale, 10);
        Int n = add(mul(w, scale), f);
        return Scalar(neg ? -n : n, scale);
    }

    return Scalar(parse_int(text, true), 1);
}

std::string to_string(Int v) {
    if (v == 0) return "0";
    UInt u = uabs(v);
    std::string out;
    while (u != 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (v < 0) out.push_back('-');
    std::reverse(out.begin(), out.end());
    return out;
}

std::string Scalar::str() const {
    if (den_ == 1) return to_string(num_);
    return to_string(num_) + "/" + to_string(den_);
}

Int Scalar::floor() const { return floor_div(num_, den_); }

Int Scalar::ceil() const { return -floor_div(-num_, den_); }

double Scalar::to_double() const {
    // Split off the integer part so large-but-close fractions keep precision.
    Int q = floor();
    Int r = num_ - q * den_;
    return static_cast<double>(q) + static_cast<double>(r) / static_cast<double>(den_);
}

Scalar Scalar::operator-() const {
    Scalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (den_ == o.den_) {
        *this = Scalar(add(num_, o.num_), den_);
        return *this;
    }
    Int g = gcd(den_, o.den_);
    Int lhs = mul(num_, o.den_ / g);
    Int rhs = mul(o.num_, den_ / g);
    *this = Scalar(add(lhs, rhs), mul(den_, o.den_ / g));
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    if (num_ == 0 || o.num_ == 0) {
        *this = Scalar();
        return *this;
    }
    Int g1 = gcd(num_, o.den_);
    Int g2 = gcd(o.num_, den_);
    Int n = mul(num_ / g1, o.num_ / g2);
    Int d = mul(den_ / g2, o.den_ / g1);
    *this = Scalar(n, d);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.num_ == 0) fail(ErrorCode::Usage, "division by zero");
    Scalar inv;
    inv.num_ = o.num_ < 0 ? -o.den_ : o.den_;
    inv.den_ = o.num_ < 0 ? -o.num_ : o.num_;
    return *this *= inv;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) noexcept {
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    int c = compare_fractions(a.num_, a.den_, b.num_, b.den_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace dvbp
