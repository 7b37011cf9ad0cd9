#include "gnoe/textio.hpp"

#include <cctype>

#include "univariate_text.hpp"

namespace gnoe {

using detail::split_top_level;
using detail::strip_whitespace;

OrePolynomial parse_poly(std::string_view text, const ExtensionHandle& ext) {
  const Ring& R = *ext->ring();
  std::vector<RingElement> coeffs;
  for (const auto& term : detail::split_univariate(text, 'X')) {
    RingElement c = term.coeff.empty() ? R.one() : R.parse(term.coeff);
    if (term.negate) c = R.neg(c);
    if (coeffs.size() <= term.exponent) coeffs.resize(term.exponent + 1, R.zero());
    coeffs[term.exponent] = R.add(coeffs[term.exponent], c);
  }
  return OrePolynomial(ext, std::move(coeffs));
}

std::string format_poly(const OrePolynomial& p) {
  const Ring& R = *p.extension().ring();
  std::vector<detail::FormattedTerm> terms;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const RingElement& c = p.coeffs()[i];
    if (c.is_zero()) continue;
    terms.push_back({i, R.format(c), c.is_one()});
  }
  return detail::format_spaced(std::move(terms), 'X');
}

namespace {

[[noreturn]] void bad(std::string_view text, const std::string& why) {
  throw Error(ErrorCode::InvalidDescriptor, "\"" + std::string(text) + "\": " + why);
}

struct Call {
  std::string name;
  std::vector<std::string> args;
  bool has_args = false;
};

Call split_call(std::string_view text) {
  const std::string s = strip_whitespace(text);
  Call call;
  const auto open = s.find('(');
  if (open == std::string::npos) {
    call.name = s;
    return call;
  }
  if (s.back() != ')') bad(text, "missing ')'");
  call.name = s.substr(0, open);
  call.has_args = true;
  call.args = split_top_level(std::string_view(s).substr(open + 1, s.size() - open - 2), ',');
  return call;
}

std::uint64_t parse_natural(std::string_view text, std::string_view context) {
  if (text.empty()) bad(context, "expected a natural number");
  for (char c : text)
    if (!std::isdigit(static_cast<unsigned char>(c))) bad(context, "expected a natural number, got " + std::string(text));
  if (text.size() > 18) bad(context, "number too large");
  return std::stoull(std::string(text));
}

long parse_signed(std::string_view text, std::string_view context) {
  if (!text.empty() && text.front() == '-') return -static_cast<long>(parse_natural(text.substr(1), context));
  return static_cast<long>(parse_natural(text, context));
}

void expect_args(const Call& call, std::size_t n, std::string_view text) {
  if (call.args.size() != n || (n > 0 && !call.has_args))
    bad(text, call.name + " takes " + std::to_string(n) + " argument(s)");
  if (n == 0 && call.has_args) bad(text, call.name + " takes no arguments");
}

}  // namespace

RingDescriptor parse_descriptor(std::string_view text) {
  const Call call = split_call(text);
  if (call.name == "integers" || call.name == "Z") {
    expect_args(call, 0, text);
    return RingDescriptor::integers();
  }
  if (call.name == "rationals" || call.name == "Q") {
    expect_args(call, 0, text);
    return RingDescriptor::rationals();
  }
  if (call.name == "zmod") {
    expect_args(call, 1, text);
    return RingDescriptor::integers_mod(parse_natural(call.args[0], text));
  }
  if (call.name == "gf") {
    expect_args(call, 2, text);
    return RingDescriptor::finite_field(parse_natural(call.args[0], text),
                                        static_cast<unsigned>(parse_natural(call.args[1], text)));
  }
  if (call.name == "poly") {
    expect_args(call, 1, text);
    return RingDescriptor::poly_over(parse_descriptor(call.args[0]));
  }
  if (call.name == "matrix2") {
    expect_args(call, 1, text);
    return RingDescriptor::matrix2(parse_descriptor(call.args[0]));
  }
  if (call.name == "mixed") {
    expect_args(call, 1, text);
    if (call.args[0] == "upper") return RingDescriptor::mixed_triangular(Orientation::Upper);
    if (call.args[0] == "lower") return RingDescriptor::mixed_triangular(Orientation::Lower);
    bad(text, "orientation must be upper or lower");
  }
  if (call.name == "cayley") {
    if (call.args.size() != 3 && call.args.size() != 4) bad(text, "cayley takes (level, field, [mu,...])");
    const auto level = static_cast<unsigned>(parse_natural(call.args[0], text));
    const std::string& list = call.args[2];
    if (list.size() < 2 || list.front() != '[' || list.back() != ']') bad(text, "parameters must be a [..] list");
    std::vector<mpq_class> mus;
    if (list.size() > 2) {
      for (const auto& item : split_top_level(std::string_view(list).substr(1, list.size() - 2), ',')) {
        mpq_class q;
        if (item.empty() || q.set_str(item, 10) != 0) bad(text, "bad parameter " + item);
        q.canonicalize();
        mus.push_back(q);
      }
    }
    RingDescriptor d = RingDescriptor::cayley(level, parse_descriptor(call.args[1]), std::move(mus));
    if (call.args.size() == 4) {
      if (call.args[3] != "quotient") bad(text, "unknown cayley route " + call.args[3]);
      d.route = CayleyRoute::OreQuotient;
    }
    return d;
  }
  bad(text, "unknown ring kind '" + call.name + "'");
}

AdditiveMap parse_map(std::string_view text, const RingHandle& ring) {
  const Call call = split_call(text);
  auto list = [&]() {
    if (call.args.empty() || !call.has_args) bad(text, call.name + " needs at least one map");
    std::vector<AdditiveMap> maps;
    for (const auto& a : call.args) maps.push_back(parse_map(a, ring));
    return maps;
  };
  if (call.name == "identity" || call.name == "id") {
    expect_args(call, 0, text);
    return AdditiveMap::identity(ring);
  }
  if (call.name == "zero") {
    expect_args(call, 0, text);
    return AdditiveMap::zero(ring);
  }
  if (call.name == "frobenius") {
    expect_args(call, 1, text);
    return AdditiveMap::frobenius(ring, static_cast<unsigned>(parse_natural(call.args[0], text)));
  }
  if (call.name == "substitution") {
    expect_args(call, 1, text);
    return AdditiveMap::substitution(ring, static_cast<unsigned>(parse_natural(call.args[0], text)));
  }
  if (call.name == "derivative") {
    expect_args(call, 0, text);
    return AdditiveMap::formal_derivative(ring);
  }
  if (call.name == "conjugation") {
    expect_args(call, 0, text);
    return AdditiveMap::conjugation(ring);
  }
  if (call.name == "inner") {
    const std::string s = strip_whitespace(text);
    if (s.size() < 7 || s.back() != ')') bad(text, "inner takes one ring literal");
    return AdditiveMap::inner_derivation(ring->parse(std::string_view(s).substr(6, s.size() - 7)));
  }
  if (call.name == "sum") return AdditiveMap::sum(list());
  if (call.name == "compose") return AdditiveMap::compose(list());
  if (call.name == "negate") {
    expect_args(call, 1, text);
    return AdditiveMap::negate(parse_map(call.args[0], ring));
  }
  if (call.name == "power") {
    expect_args(call, 2, text);
    const long n = parse_signed(call.args[1], text);
    AdditiveMap inner = parse_map(call.args[0], ring);
    if (n >= 0) return AdditiveMap::power(inner, n);
    return invert_map(AdditiveMap::power(inner, -n));
  }
  bad(text, "unknown map kind '" + call.name + "'");
}

}  // namespace gnoe
