#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace orthofix {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number in canonical form (denominator > 0, reduced).
///
/// Every distance and contraction constant in the library is a Rat; there is
/// no floating point anywhere on the verification path.
class Rat {
public:
    Rat() = default;
    Rat(std::int64_t value) : value_(value) {} // NOLINT(google-explicit-constructor)
    Rat(const BigInt& numerator, const BigInt& denominator);
    Rat(std::int64_t numerator, std::int64_t denominator)
        : Rat(BigInt(numerator), BigInt(denominator))
    {
    }

    /// Parses "p", "-p" or "p/q" (decimal integers, optional sign on p only).
    /// Throws InputError on anything else, including "1/0" ("zero denominator").
    static Rat parse(std::string_view text);

    [[nodiscard]] BigInt numerator() const;
    [[nodiscard]] BigInt denominator() const;

    [[nodiscard]] int sign() const;
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] bool is_integer() const;

    /// "p" for integers, "p/q" otherwise. Round-trips through parse().
    [[nodiscard]] std::string to_string() const;

    Rat& operator+=(const Rat& rhs);
    Rat& operator-=(const Rat& rhs);
    Rat& operator*=(const Rat& rhs);
    /// Throws DomainError on division by zero.
    Rat& operator/=(const Rat& rhs);

    friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
    friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
    friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
    friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }
    friend Rat operator-(const Rat& x);

    friend bool operator==(const Rat& lhs, const Rat& rhs) { return lhs.value_ == rhs.value_; }
    friend std::strong_ordering operator<=>(const Rat& lhs, const Rat& rhs);

    friend std::ostream& operator<<(std::ostream& os, const Rat& x);

private:
    explicit Rat(boost::multiprecision::cpp_rational value) : value_(std::move(value)) {}

    boost::multiprecision::cpp_rational value_;

    friend Rat abs(const Rat& x);
    friend Rat pow(const Rat& base, std::uint64_t exponent);
};

Rat abs(const Rat& x);

/// A rational as a value of the same scalar type as `like`.
inline Rat lift(const Rat& /*like*/, const Rat& r) { return r; }

/// base^exponent by repeated squaring; pow(0, 0) == 1.
Rat pow(const Rat& base, std::uint64_t exponent);

} // namespace orthofix
