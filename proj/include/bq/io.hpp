#pragma once

#include <string>
#include <string_view>

#include "bq/biquat.hpp"

namespace bq {

enum class Style { plain, json, unicode };

/**
 * Reads four comma-separated complex literals, or a JSON object
 * {"re":[r1,r2,r3,r4],"im":[i1,i2,i3,i4]}.
 *
 * A literal is `x`, `yi` or `x±yi` where x and y are decimals (exponent
 * allowed); `i` and `-i` are accepted as unit imaginaries. Whitespace is ignored.
 * Throws ParseError with the offending character offset.
 */
BiQuat parse_biquat(std::string_view text);

/// As parse_biquat, but every imaginary part must be zero.
Quat parse_quat(std::string_view text);

/// Shortest decimal that reads back to the same double.
std::string format_double(double x);

/// One complex literal in the parse_biquat grammar, e.g. "0.5-2i".
std::string format_complex(Complex z);

/// `plain` round-trips through parse_biquat bit-exactly for finite values.
std::string format_biquat(const BiQuat& q, Style style = Style::plain);
std::string format_quat(const Quat& q, Style style = Style::plain);

} // namespace bq
