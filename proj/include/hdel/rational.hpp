#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace hdel {

/// Exact rational used for the trust parameter, the case predicate and all
/// bound checks. Floating point only appears when rendering reports.
using Rational = boost::rational<std::int64_t>;

/// Parses "num/den", "num" or a short decimal such as "0.25".
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "num/den" (or "num" when the denominator is 1).
std::string format_rational(const Rational & r);

/// Fixed six-digit decimal rendering for CSV columns.
std::string format_decimal(const Rational & r);

double to_double(const Rational & r);

}
