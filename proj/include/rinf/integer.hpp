#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rinf {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses an optionally signed decimal integer; throws InputError.
Integer parse_integer(std::string_view text);

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }


}  // namespace rinf
