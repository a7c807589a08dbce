#pragma once

#include "orthofix/rat.hpp"

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace orthofix {

/// Exact element a + b*sqrt(d) of the quadratic field Q(sqrt(d)).
///
/// The radicand d is a square-free integer >= 2 carried by every value;
/// mixing values with different radicands is an InputError. Ordering is
/// decided exactly by comparing a^2 against b^2*d, never by approximation.
class QuadExt {
public:
    /// Throws InputError unless radicand is square-free and >= 2.
    QuadExt(Rat a, Rat b, std::int64_t radicand);

    static QuadExt rational(Rat a, std::int64_t radicand) { return {std::move(a), Rat(0), radicand}; }

    [[nodiscard]] const Rat& rational_part() const { return a_; }
    [[nodiscard]] const Rat& radical_part() const { return b_; }
    [[nodiscard]] std::int64_t radicand() const { return d_; }

    [[nodiscard]] bool is_rational() const { return b_.is_zero(); }
    [[nodiscard]] int sign() const;

    /// Conjugate a - b*sqrt(d).
    [[nodiscard]] QuadExt conjugate() const { return {a_, -b_, d_}; }
    /// Field norm a^2 - b^2*d (zero only for zero).
    [[nodiscard]] Rat norm() const { return a_ * a_ - b_ * b_ * Rat(d_); }

    [[nodiscard]] std::string to_string() const;

    QuadExt& operator+=(const QuadExt& rhs);
    QuadExt& operator-=(const QuadExt& rhs);
    QuadExt& operator*=(const QuadExt& rhs);
    QuadExt& operator/=(const QuadExt& rhs);
    QuadExt& operator*=(const Rat& rhs);
    QuadExt& operator/=(const Rat& rhs);

    friend QuadExt operator+(QuadExt lhs, const QuadExt& rhs) { return lhs += rhs; }
    friend QuadExt operator-(QuadExt lhs, const QuadExt& rhs) { return lhs -= rhs; }
    friend QuadExt operator*(QuadExt lhs, const QuadExt& rhs) { return lhs *= rhs; }
    friend QuadExt operator/(QuadExt lhs, const QuadExt& rhs) { return lhs /= rhs; }
    friend QuadExt operator*(QuadExt lhs, const Rat& rhs) { return lhs *= rhs; }
    friend QuadExt operator/(QuadExt lhs, const Rat& rhs) { return lhs /= rhs; }
    friend QuadExt operator-(const QuadExt& x) { return {-x.a_, -x.b_, x.d_}; }

    /// Exact equality; throws InputError on mismatched radicands.
    friend bool operator==(const QuadExt& lhs, const QuadExt& rhs);
    friend std::strong_ordering operator<=>(const QuadExt& lhs, const QuadExt& rhs);

    friend std::ostream& operator<<(std::ostream& os, const QuadExt& x);

private:
    void require_same_field(const QuadExt& other) const;

    Rat a_;
    Rat b_;
    std::int64_t d_;
};

QuadExt abs(const QuadExt& x);

inline QuadExt lift(const QuadExt& like, const Rat& r) { return QuadExt::rational(r, like.radicand()); }

std::strong_ordering qext_compare(const QuadExt& x, const QuadExt& y);

inline bool qext_is_rational(const QuadExt& x) { return x.is_rational(); }

bool is_square_free(std::int64_t n);

} // namespace orthofix
