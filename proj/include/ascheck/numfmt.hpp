#pragma once

#include <string>
#include <string_view>

namespace ascheck::numfmt {

/// Shortest decimal text that parses back to exactly the same double
/// (std::to_chars without a precision). Used for all CSV and protocol
/// serialization so rewritten files are byte-stable.
std::string shortest(double v);

/// 17 significant digits (%.17g), the fixed-width full-precision form used
/// for bounds files.
std::string digits17(double v);

/// Parse a whole token as a double. Accepts the forms std::from_chars
/// accepts (including inf/nan). Returns false on empty input, trailing
/// characters, or no parse.
bool try_parse(std::string_view token, double& out);

}  // namespace ascheck::numfmt
