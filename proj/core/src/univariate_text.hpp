#ifndef GNOE_SRC_UNIVARIATE_TEXT_HPP
#define GNOE_SRC_UNIVARIATE_TEXT_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace gnoe::detail {

// One term of a sum "c_1 v^e_1 + c_2 v^e_2 - ...". `coeff` is empty when the
// term is a bare power of the variable; parentheses around it are stripped.
struct UnivariateTerm {
  std::string coeff;
  bool negate = false;
  std::size_t exponent = 0;
  std::size_t position = 0;  // offset of the term in the original text
};

/// Splits `text` over variable `var`. Whitespace-insensitive. Throws SyntaxError
/// with the offending position.
std::vector<UnivariateTerm> split_univariate(std::string_view text, char var);

struct FormattedTerm {
  std::size_t exponent = 0;
  std::string coeff;  // literal of a nonzero coefficient
  bool is_one = false;
};

/// Compact descending form used for ring elements: "t^2+t+1", "Y^3-1/2Y".
std::string format_compact(std::vector<FormattedTerm> terms, char var);

/// Ascending form used for Ore polynomials: "1 + (Y)X + X^2".
std::string format_spaced(std::vector<FormattedTerm> terms, char var);

/// True when `literal` needs parentheses to be read back as one coefficient.
bool is_compound(std::string_view literal);

std::string strip_whitespace(std::string_view text);

/// Splits at top-level occurrences of `sep` (ignoring nested brackets).
std::vector<std::string> split_top_level(std::string_view text, char sep);

}  // namespace gnoe::detail

#endif  // GNOE_SRC_UNIVARIATE_TEXT_HPP
