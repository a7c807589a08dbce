#include "orthofix/quad_ext.hpp"

#include "orthofix/errors.hpp"

#include <ostream>

namespace orthofix {

bool is_square_free(std::int64_t n)
{
    if (n < 1) {
        return false;
    }
    for (std::int64_t p = 2; p <= n / p; ++p) {
        if (n % (p * p) == 0) {
            return false;
        }
    }
    return true;
}

QuadExt::QuadExt(Rat a, Rat b, std::int64_t radicand)
    : a_(std::move(a)), b_(std::move(b)), d_(radicand)
{
    if (radicand < 2 || !is_square_free(radicand)) {
        throw InputError("radicand " + std::to_string(radicand) + " is not a square-free integer >= 2");
    }
}

void QuadExt::require_same_field(const QuadExt& other) const
{
    if (d_ != other.d_) {
        throw InputError("mismatched radicands " + std::to_string(d_) + " and " + std::to_string(other.d_));
    }
}

int QuadExt::sign() const
{
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sb == 0) {
        return sa;
    }
    if (sa == 0 || sa == sb) {
        return sb;
    }
    // Opposite signs: the larger of a^2 and b^2*d wins. They cannot be equal
    // because d is not a perfect square.
    const auto cmp = a_ * a_ <=> b_ * b_ * Rat(d_);
    return cmp == std::strong_ordering::greater ? sa : sb;
}

std::string QuadExt::to_string() const
{
    const std::string radical = "sqrt(" + std::to_string(d_) + ")";
    if (b_.is_zero()) {
        return a_.to_string();
    }
    std::string out;
    if (!a_.is_zero()) {
        out = a_.to_string() + (b_.sign() > 0 ? " + " : " - ");
    } else if (b_.sign() < 0) {
        out = "-";
    }
    const Rat mag = abs(b_);
    if (mag != Rat(1)) {
        out += mag.to_string() + "*";
    }
    return out + radical;
}

QuadExt& QuadExt::operator+=(const QuadExt& rhs)
{
    require_same_field(rhs);
    a_ += rhs.a_;
    b_ += rhs.b_;
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& rhs)
{
    require_same_field(rhs);
    a_ -= rhs.a_;
    b_ -= rhs.b_;
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& rhs)
{
    require_same_field(rhs);
    Rat a = a_ * rhs.a_ + b_ * rhs.b_ * Rat(d_);
    Rat b = a_ * rhs.b_ + rhs.a_ * b_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& rhs)
{
    require_same_field(rhs);
    const Rat n = rhs.norm();
    if (n.is_zero()) {
        throw DomainError("division by zero");
    }
    *this *= rhs.conjugate();
    a_ /= n;
    b_ /= n;
    return *this;
}

QuadExt& QuadExt::operator*=(const Rat& rhs)
{
    a_ *= rhs;
    b_ *= rhs;
    return *this;
}

QuadExt& QuadExt::operator/=(const Rat& rhs)
{
    a_ /= rhs;
    b_ /= rhs;
    return *this;
}

bool operator==(const QuadExt& lhs, const QuadExt& rhs)
{
    lhs.require_same_field(rhs);
    return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_;
}

std::strong_ordering operator<=>(const QuadExt& lhs, const QuadExt& rhs)
{
    return qext_compare(lhs, rhs);
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.to_string(); }

QuadExt abs(const QuadExt& x) { return x.sign() < 0 ? -x : x; }

std::strong_ordering qext_compare(const QuadExt& x, const QuadExt& y)
{
    const int s = (x - y).sign();
    if (s < 0) {
        return std::strong_ordering::less;
    }
    return s == 0 ? std::strong_ordering::equal : std::strong_ordering::greater;
}

} // namespace orthofix
