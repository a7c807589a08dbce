#include "orthofix/rat.hpp"

#include "orthofix/errors.hpp"

#include <cctype>
#include <ostream>

namespace orthofix {

namespace {

using boost::multiprecision::cpp_rational;

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) {
            return false;
        }
    }
    return true;
}

} // namespace

Rat::Rat(const BigInt& numerator, const BigInt& denominator)
{
    if (denominator == 0) {
        throw DomainError("zero denominator");
    }
    // cpp_rational rejects a negative denominator
    value_ = denominator < 0 ? cpp_rational(-numerator, -denominator) : cpp_rational(numerator, denominator);
}

Rat Rat::parse(std::string_view text)
{
    const std::string shown(text);
    std::string_view num = text;
    std::string_view den;
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!all_digits(den)) {
            throw InputError("malformed rational '" + shown + "'");
        }
    }
    std::string_view magnitude = num;
    if (!magnitude.empty() && (magnitude.front() == '-' || magnitude.front() == '+')) {
        magnitude.remove_prefix(1);
    }
    if (!all_digits(magnitude)) {
        throw InputError("malformed rational '" + shown + "'");
    }
    BigInt n{std::string(magnitude)};
    if (num.front() == '-') {
        n = -n;
    }
    BigInt d = 1;
    if (!den.empty()) {
        d = BigInt{std::string(den)};
        if (d == 0) {
            throw InputError("zero denominator in '" + shown + "'");
        }
    }
    return Rat(n, d);
}

BigInt Rat::numerator() const { return boost::multiprecision::numerator(value_); }
BigInt Rat::denominator() const { return boost::multiprecision::denominator(value_); }

int Rat::sign() const { return value_.sign(); }

bool Rat::is_integer() const { return denominator() == 1; }

std::string Rat::to_string() const
{
    if (is_integer()) {
        return numerator().str();
    }
    return numerator().str() + "/" + denominator().str();
}

Rat& Rat::operator+=(const Rat& rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rat& Rat::operator-=(const Rat& rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rat& Rat::operator*=(const Rat& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rat& Rat::operator/=(const Rat& rhs)
{
    if (rhs.is_zero()) {
        throw DomainError("division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rat operator-(const Rat& x) { return Rat(cpp_rational(-x.value_)); }

std::strong_ordering operator<=>(const Rat& lhs, const Rat& rhs)
{
    const int c = lhs.value_.compare(rhs.value_);
    if (c < 0) {
        return std::strong_ordering::less;
    }
    return c == 0 ? std::strong_ordering::equal : std::strong_ordering::greater;
}

std::ostream& operator<<(std::ostream& os, const Rat& x) { return os << x.to_string(); }

Rat abs(const Rat& x) { return Rat(cpp_rational(boost::multiprecision::abs(x.value_))); }

Rat pow(const Rat& base, std::uint64_t exponent)
{
    BigInt num = 1;
    BigInt den = 1;
    BigInt bn = base.numerator();
    BigInt bd = base.denominator();
    while (exponent != 0) {
        if ((exponent & 1U) != 0) {
            num *= bn;
            den *= bd;
        }
        exponent >>= 1U;
        if (exponent != 0) {
            bn *= bn;
            bd *= bd;
        }
    }
    return Rat(num, den);
}

} // namespace orthofix
