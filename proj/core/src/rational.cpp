#include "oddref/rational.hpp"

#include "oddref/error.hpp"

#include <functional>
#include <limits>

namespace oddref {

Rational::Rational(long numerator, long denominator)
{
    if (denominator == 0)
        throw Error(ErrorKind::DivideByZero, "rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

namespace {

bool is_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text)
{
    std::string s(text);
    bool negative = false;
    constexpr std::string_view unicode_minus = "\xE2\x88\x92";
    if (s.starts_with(unicode_minus)) {
        negative = true;
        s.erase(0, unicode_minus.size());
    } else if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        s.erase(0, 1);
    }
    const auto slash = s.find('/');
    std::string_view num = s;
    std::string_view den = "1";
    if (slash != std::string::npos) {
        num = std::string_view(s).substr(0, slash);
        den = std::string_view(s).substr(slash + 1);
    }
    if (!is_digits(num) || !is_digits(den))
        throw Error(ErrorKind::InvalidRational, "cannot parse rational '" + std::string(text) + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0)
        throw Error(ErrorKind::DivideByZero, "rational '" + std::string(text) + "' has zero denominator");
    if (negative)
        n = -n;
    return Rational(mpq_class(n, d));
}

std::string Rational::to_string() const
{
    if (value_.get_den() == 1)
        return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::int64_t Rational::floor_int() const
{
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    if (!q.fits_slong_p())
        throw Error(ErrorKind::IndexOutOfRange, "integer part of " + to_string() + " out of range");
    return q.get_si();
}

Rational Rational::frac() const
{
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return Rational(mpq_class(value_ - q));
}

Rational& Rational::operator+=(const Rational& rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero())
        throw Error(ErrorKind::DivideByZero, "division of " + to_string() + " by zero");
    value_ /= rhs.value_;
    return *this;
}

std::size_t Rational::hash() const
{
    // Small values dominate; fold the low limbs of numerator and denominator.
    const auto limb = [](const mpz_class& z) -> std::size_t {
        if (mpz_size(z.get_mpz_t()) == 0)
            return 0;
        return static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), 0)) * (sgn(z) < 0 ? 31u : 17u);
    };
    std::size_t h = limb(value_.get_num());
    h ^= limb(value_.get_den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace oddref
