#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace noncross {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline Rat rat(long long num, long long den = 1) { return Rat(Int(num), Int(den)); }

inline int sgn(const Rat& r) { return r.sign(); }

// Parses a plain decimal string ("-12", "0.1", "3.25e-2") to an exact rational.
// Returns nullopt on malformed input; never goes through binary floating point.
std::optional<Rat> parse_decimal(const std::string& s);

// Decimal rendering that round-trips through parse_decimal when the denominator
// is of the form 2^a 5^b, otherwise falls back to "num/den".
std::string format_exact(const Rat& r);

// Floor/round helpers used by perturbation and grids.
Int floor_div(const Int& num, const Int& den);
Int rat_floor(const Rat& r);
Int rat_round_nearest(const Rat& r);  // ties toward negative infinity

}  // namespace noncross
