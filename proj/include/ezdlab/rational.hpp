#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace ezdlab {

/// Exact rational scalar. GMP keeps mpq values canonical (lowest terms,
/// positive denominator, zero as 0/1) as long as every constructor that
/// takes a separate numerator and denominator goes through make_rational.
using Rational = mpq_class;
using Vector = std::vector<Rational>;

Rational make_rational(long numerator, long denominator = 1);

/// Parses "3", "-7", "1/2", "-4/6" (reduced on read). Throws
/// std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

bool is_zero(const Vector& v);

}  // namespace ezdlab
