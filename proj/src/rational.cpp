#include "simplicia/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace simplicia {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole)
{
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s))
        throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    mpz_class z(std::string(s), 10);
    return negative ? mpz_class(-z) : z;
}

Rational parse_decimal(std::string_view s, std::string_view whole)
{
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_part = s.substr(e + 1);
        s = s.substr(0, e);
        mpz_class ez = parse_integer(exp_part, whole);
        if (!ez.fits_slong_p() || ez > 4096 || ez < -4096)
            throw std::invalid_argument("exponent out of range: '" + std::string(whole) + "'");
        exponent = ez.get_si();
    }

    std::string_view int_part = s;
    std::string_view frac_part;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        int_part = s.substr(0, dot);
        frac_part = s.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty())
        throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)))
        throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");

    std::string digits = std::string(int_part) + std::string(frac_part);
    mpz_class numerator(digits.empty() ? std::string("0") : digits, 10);
    long scale = static_cast<long>(frac_part.size()) - exponent;

    mpz_class ten_power;
    mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
    Rational result;
    if (scale >= 0)
        result = Rational(numerator, ten_power);
    else
        result = Rational(numerator * ten_power);
    result.canonicalize();
    return negative ? Rational(-result) : result;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    if (s.empty())
        throw std::invalid_argument("empty rational");

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        mpz_class num = parse_integer(s.substr(0, slash), text);
        mpz_class den = parse_integer(s.substr(slash + 1), text);
        if (den == 0)
            throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    return parse_decimal(s, text);
}

std::string to_string(const Rational& value)
{
    return value.get_str(10);
}

std::string to_decimal(const Rational& value, int significant)
{
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*g", significant, value.get_d());
    return buffer;
}

Rational abs(const Rational& value)
{
    return value < 0 ? Rational(-value) : value;
}

Rational power(const Rational& base, unsigned exponent)
{
    Rational result = 1;
    Rational b = base;
    while (exponent > 0) {
        if (exponent & 1u)
            result *= b;
        b *= b;
        exponent >>= 1u;
    }
    return result;
}

}  // namespace simplicia
