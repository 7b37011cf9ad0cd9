#include "univariate_text.hpp"

#include <algorithm>
#include <cctype>

#include "gnoe/error.hpp"

namespace gnoe::detail {

namespace {

bool is_bare_char(char c, char var) {
  if (c == var) return false;
  return std::isalnum(static_cast<unsigned char>(c)) || c == '/' || c == '^' || c == '_' || c == '.';
}

[[noreturn]] void syntax_error(std::size_t pos, const std::string& expected, std::string_view text) {
  throw Error(ErrorCode::SyntaxError,
              "at position " + std::to_string(pos) + ": expected " + expected + " in \"" + std::string(text) + "\"");
}

}  // namespace

std::string strip_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

std::vector<UnivariateTerm> split_univariate(std::string_view text, char var) {
  // Work on a whitespace-free copy but remember original offsets.
  std::string s;
  std::vector<std::size_t> origin;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
    s.push_back(text[i]);
    origin.push_back(i);
  }
  auto where = [&](std::size_t i) { return i < origin.size() ? origin[i] : text.size(); };
  if (s.empty()) syntax_error(0, "a term", text);

  std::vector<UnivariateTerm> terms;
  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    UnivariateTerm term;
    if (s[i] == '+' || s[i] == '-') {
      term.negate = s[i] == '-';
      ++i;
    } else if (!first) {
      syntax_error(where(i), "'+' or '-'", text);
    }
    first = false;
    term.position = where(i);
    if (i >= s.size()) syntax_error(where(i), "a term", text);

    bool have_coeff = false;
    if (s[i] == '(' || s[i] == '[') {
      const char open = s[i];
      const char close = open == '(' ? ')' : ']';
      int depth = 0;
      std::size_t j = i;
      for (; j < s.size(); ++j) {
        if (s[j] == '(' || s[j] == '[') ++depth;
        if (s[j] == ')' || s[j] == ']') --depth;
        if (depth == 0) break;
      }
      if (j >= s.size() || s[j] != close) syntax_error(where(i), std::string("matching '") + close + "'", text);
      term.coeff = open == '(' ? s.substr(i + 1, j - i - 1) : s.substr(i, j - i + 1);
      if (term.coeff.empty()) syntax_error(where(i), "a coefficient inside parentheses", text);
      i = j + 1;
      have_coeff = true;
    } else if (s[i] != var) {
      std::size_t j = i;
      while (j < s.size() && is_bare_char(s[j], var)) ++j;
      if (j == i) syntax_error(where(i), "a coefficient or '" + std::string(1, var) + "'", text);
      term.coeff = s.substr(i, j - i);
      i = j;
      have_coeff = true;
    }

    if (i < s.size() && s[i] == var) {
      ++i;
      term.exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) syntax_error(where(i), "a natural exponent", text);
        term.exponent = std::stoull(s.substr(i, j - i));
        i = j;
      }
    } else if (!have_coeff) {
      syntax_error(where(i), "a term", text);
    }
    terms.push_back(std::move(term));
  }
  return terms;
}

bool is_compound(std::string_view literal) {
  if (literal.empty()) return false;
  if (literal.front() == '[') return false;
  if (literal.front() == '(' && literal.back() == ')') {
    int depth = 0;
    for (std::size_t i = 0; i < literal.size(); ++i) {
      if (literal[i] == '(' || literal[i] == '[') ++depth;
      if (literal[i] == ')' || literal[i] == ']') --depth;
      if (depth == 0 && i + 1 < literal.size()) return true;
    }
    return false;
  }
  for (std::size_t i = 1; i < literal.size(); ++i)
    if (literal[i] == '+' || literal[i] == '-' || literal[i] == ',' || literal[i] == '|') return true;
  return false;
}

namespace {

std::string power(char var, std::size_t e) {
  std::string out(1, var);
  if (e > 1) out += "^" + std::to_string(e);
  return out;
}

}  // namespace

std::string format_compact(std::vector<FormattedTerm> terms, char var) {
  if (terms.empty()) return "0";
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.exponent > b.exponent; });
  std::string out;
  for (const auto& t : terms) {
    std::string piece;
    if (t.exponent == 0) {
      piece = is_compound(t.coeff) ? "(" + t.coeff + ")" : t.coeff;
    } else if (t.is_one) {
      piece = power(var, t.exponent);
    } else if (t.coeff == "-1") {
      piece = "-" + power(var, t.exponent);
    } else {
      piece = (is_compound(t.coeff) ? "(" + t.coeff + ")" : t.coeff) + power(var, t.exponent);
    }
    if (!out.empty() && piece.front() != '-') out += "+";
    out += piece;
  }
  return out;
}

std::string format_spaced(std::vector<FormattedTerm> terms, char var) {
  if (terms.empty()) return "0";
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.exponent < b.exponent; });
  std::string out;
  for (const auto& t : terms) {
    std::string piece;
    if (t.exponent == 0) {
      piece = is_compound(t.coeff) ? "(" + t.coeff + ")" : t.coeff;
    } else if (t.is_one) {
      piece = power(var, t.exponent);
    } else if (!t.coeff.empty() && (t.coeff.front() == '[' || (t.coeff.front() == '(' && !is_compound(t.coeff)))) {
      piece = t.coeff + power(var, t.exponent);
    } else {
      piece = "(" + t.coeff + ")" + power(var, t.exponent);
    }
    if (!out.empty()) out += " + ";
    out += piece;
  }
  return out;
}

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string current;
  for (char c : text) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

}  // namespace gnoe::detail
