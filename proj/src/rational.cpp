#include "hdel/rational.hpp"

#include <charconv>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace hdel {

namespace {

std::int64_t parse_integer(std::string_view text, std::string_view whole)
{
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    return value;
}

}

Rational parse_rational(std::string_view text)
{
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = parse_integer(text.substr(0, slash), text);
        auto den = parse_integer(text.substr(slash + 1), text);
        if (den == 0)
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }

    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        auto int_part = text.substr(0, dot);
        auto frac_part = text.substr(dot + 1);
        if (frac_part.empty() || frac_part.size() > 12)
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        bool negative = ! int_part.empty() && int_part.front() == '-';
        if (negative)
            int_part.remove_prefix(1);
        std::int64_t whole = int_part.empty() ? 0 : parse_integer(int_part, text);
        std::int64_t frac = parse_integer(frac_part, text);
        std::int64_t scale = 1;
        for (std::size_t i = 0 ; i < frac_part.size() ; ++i)
            scale *= 10;
        Rational r(whole * scale + frac, scale);
        return negative ? -r : r;
    }

    return Rational(parse_integer(text, text));
}

std::string format_rational(const Rational & r)
{
    if (r.denominator() == 1)
        return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string format_decimal(const Rational & r)
{
    std::ostringstream out;
    out << std::fixed << std::setprecision(6) << to_double(r);
    return out.str();
}

double to_double(const Rational & r)
{
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}
