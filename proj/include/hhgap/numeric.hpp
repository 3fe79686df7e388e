#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hhgap {

struct OverflowError : std::runtime_error {
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {
inline int64_t narrow(__int128 v, const char* ctx) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw OverflowError(std::string("integer overflow in ") + ctx);
    return static_cast<int64_t>(v);
}
}  // namespace detail

inline int64_t checked_add(int64_t a, int64_t b) {
    return detail::narrow(static_cast<__int128>(a) + b, "add");
}
inline int64_t checked_mul(int64_t a, int64_t b) {
    return detail::narrow(static_cast<__int128>(a) * b, "mul");
}

inline int64_t gcd_i64(int64_t a, int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline int64_t lcm_i64(int64_t a, int64_t b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / gcd_i64(a, b), b);
}

// binomial(n, k) with the usual conventions: 0 for k < 0 or k > n >= 0.
inline int64_t binomial(int64_t n, int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    __int128 r = 1;
    for (int64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > INT64_MAX) throw OverflowError("binomial");
    }
    return static_cast<int64_t>(r);
}

// Exact rational with int64 numerator/denominator, reduced, denominator > 0.
class Rat {
  public:
    Rat() : num_(0), den_(1) {}
    Rat(int64_t n) : num_(n), den_(1) {}
    Rat(int64_t n, int64_t d) : num_(n), den_(d) { reduce(); }

    int64_t num() const { return num_; }
    int64_t den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }

    Rat operator-() const { return Rat(-num_, den_, unreduced_tag{}); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        __int128 n = static_cast<__int128>(a.num_) * b.den_ +
                     static_cast<__int128>(b.num_) * a.den_;
        __int128 d = static_cast<__int128>(a.den_) * b.den_;
        return from128(n, d);
    }
    friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
    friend Rat operator*(const Rat& a, const Rat& b) {
        __int128 n = static_cast<__int128>(a.num_) * b.num_;
        __int128 d = static_cast<__int128>(a.den_) * b.den_;
        return from128(n, d);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::domain_error("division by zero");
        __int128 n = static_cast<__int128>(a.num_) * b.den_;
        __int128 d = static_cast<__int128>(a.den_) * b.num_;
        return from128(n, d);
    }
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return static_cast<__int128>(a.num_) * b.den_ <
               static_cast<__int128>(b.num_) * a.den_;
    }

    std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

  private:
    struct unreduced_tag {};
    Rat(int64_t n, int64_t d, unreduced_tag) : num_(n), den_(d) {}

    static Rat from128(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("division by zero");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        return Rat(detail::narrow(n, "rational numerator"),
                   detail::narrow(d, "rational denominator"), unreduced_tag{});
    }
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }
    void reduce() {
        if (den_ == 0) throw std::domain_error("zero denominator");
        if (den_ < 0) {
            num_ = detail::narrow(-static_cast<__int128>(num_), "negate");
            den_ = detail::narrow(-static_cast<__int128>(den_), "negate");
        }
        int64_t g = gcd_i64(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    int64_t num_;
    int64_t den_;  // > 0
};

}  // namespace hhgap
