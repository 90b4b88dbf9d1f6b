#include <quadconc/rat.hpp>

#include <quadconc/errors.hpp>

#include <algorithm>
#include <cctype>

namespace quadconc {

namespace {

bool all_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

} // namespace

Rat::Rat(long numerator, long denominator)
{
    if (denominator == 0) throw GeometryError(ErrorCode::DivisionByZero, "zero denominator");
    value_ = mpq_class(numerator, 1) / mpq_class(denominator, 1);
    value_.canonicalize();
}

Rat::Rat(mpq_class value) : value_(std::move(value))
{
    if (sgn(value_.get_den()) == 0) throw GeometryError(ErrorCode::DivisionByZero, "zero denominator");
    value_.canonicalize();
}

Rat Rat::parse(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw GeometryError(ErrorCode::InvalidRational, "expected an integer or p/q, got \"" + std::string(text) + "\"");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
        throw GeometryError(ErrorCode::InvalidRational, "zero denominator in \"" + std::string(text) + "\"");
    }
    if (negative) n = -n;
    mpq_class q(n, d);
    q.canonicalize();
    return Rat(std::move(q));
}

std::string Rat::str() const
{
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

bool Rat::is_integer() const { return value_.get_den() == 1; }

Rat Rat::abs() const
{
    mpq_class out;
    mpq_abs(out.get_mpq_t(), value_.get_mpq_t());
    return Rat(std::move(out));
}

Rat Rat::inverse() const { return Rat(1) / *this; }

std::string Rat::numerator_str() const { return value_.get_num().get_str(); }
std::string Rat::denominator_str() const { return value_.get_den().get_str(); }

Rat& Rat::operator+=(const Rat& o)
{
    value_ += o.value_;
    return *this;
}

Rat& Rat::operator-=(const Rat& o)
{
    value_ -= o.value_;
    return *this;
}

Rat& Rat::operator*=(const Rat& o)
{
    value_ *= o.value_;
    return *this;
}

Rat& Rat::operator/=(const Rat& o)
{
    if (o.is_zero()) throw GeometryError(ErrorCode::DivisionByZero, "division of " + str() + " by zero");
    value_ /= o.value_;
    return *this;
}

Rat Rat::operator-() const { return Rat(mpq_class(-value_)); }

} // namespace quadconc
