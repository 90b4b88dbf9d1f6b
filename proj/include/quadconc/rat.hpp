#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace quadconc {

/// Exact rational number, always held in canonical form (reduced, positive
/// denominator). Division by zero throws instead of aborting.
class Rat {
public:
    Rat() = default;
    Rat(long value) : value_(value) {}
    Rat(int value) : value_(value) {}
    Rat(long numerator, long denominator);
    explicit Rat(mpq_class value);

    /// Parses "p", "-p", "p/q" or "-p/q" with decimal digits only. Anything else
    /// (decimal points, exponents, whitespace, zero denominators) throws
    /// InvalidRational.
    static Rat parse(std::string_view text);

    /// "p" for integers, "p/q" otherwise.
    std::string str() const;
    double to_double() const { return value_.get_d(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const;
    Rat abs() const;
    Rat inverse() const;

    std::string numerator_str() const;
    std::string denominator_str() const;

    const mpq_class& raw() const { return value_; }

    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    Rat operator-() const;

    friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

private:
    mpq_class value_;
};

} // namespace quadconc
