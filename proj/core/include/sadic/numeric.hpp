#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace sadic {

/// Exact arbitrary-precision integer. Incidence entries grow geometrically
/// with telescope depth, so fixed-width integers are not an option.
using Int = mpz_class;

/// Exact rational, always kept in canonical form by GMP.
using Rat = mpq_class;

using RatVec = std::vector<Rat>;

/// Decimal rendering with the given number of significant digits
/// (10 is the human-report default).
std::string decimal_string(double x, int significant = 10);
std::string decimal_string(const Rat& x, int significant = 10);

/// Canonical "p/q" (or plain "p" for integers).
std::string rational_string(const Rat& x);

/// Parses "p/q", a plain integer, or a decimal literal ("0.5", "1e-3") into
/// an exact rational. Throws std::invalid_argument on malformed input.
Rat parse_rational(const std::string& text);

double to_double(const Rat& x);

Rat l1_norm(const RatVec& v);
Rat vec_sum(const RatVec& v);
RatVec vec_sub(const RatVec& a, const RatVec& b);

std::vector<double> to_double_vec(const RatVec& v);

double l1_distance(const std::vector<double>& a, const std::vector<double>& b);

} // namespace sadic
