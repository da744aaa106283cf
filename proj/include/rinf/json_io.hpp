#pragma once

#include <string_view>

#include "json.hpp"
#include "rinf/infinite.hpp"
#include "rinf/int_matrix.hpp"
#include "rinf/int_polynomial.hpp"
#include "rinf/liering.hpp"
#include "rinf/oracle.hpp"
#include "rinf/pisot.hpp"
#include "rinf/reidemeister.hpp"
#include "rinf/words.hpp"

namespace rinf::json_io {

using Json = nlohmann::ordered_json;

// Integers travel as decimal strings; on input plain JSON integers are accepted too.
Json to_json(const Integer& z);
Integer integer_from_json(const Json& j);

// "num/den", or just "num" when the denominator is 1.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

// Row-major array of arrays of decimal strings.
Json to_json(const IntMatrix& a);
IntMatrix matrix_from_json(const Json& j);

// Coefficients as decimal strings, constant term first.
Json to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const Json& j);

// [[index, exponent], ...].
Json to_json(const Word& w);
/// Accepts the pair array or the human form as a JSON string.
Word word_from_json(const Json& j);
/// Human form, or the pair array when the text starts with '['.
Word parse_word_text(std::string_view text);

/// Parses JSON text; throws InputError with the parser message.
Json parse_text(std::string_view text);

/// Basis tuples are written 1-based.
Json basis_to_json(const BasisElement& e);
BasisElement basis_from_json(const Json& j);

Json to_json(const GroupVariant& v);
Json to_json(const LevelReport& l);
Json to_json(const SpectralReport& s);
Json to_json(const RInfinityVerdict& v);
Json to_json(const RootCount& c);
Json to_json(const WitnessReport& w);
Json to_json(const NielsenStep& s);
Json to_json(const LiftCertificate& c);
Json to_json(const InfiniteLieElement& x);
Json to_json(const AbelianCokerReport& r);
Json to_json(const Class2Report& r);

}  // namespace rinf::json_io
