#include <cctype>

#include "rings_impl.hpp"
#include "univariate_text.hpp"

namespace gnoe::detail {

namespace {

mpz_class parse_integer_literal(std::string_view text) {
  std::string s = strip_whitespace(text);
  if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.empty()) coefficient_error(text, "empty integer");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) coefficient_error(text, "sign without digits");
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) coefficient_error(text, "not an integer");
  if (s[0] == '+') s.erase(0, 1);
  return mpz_class(s, 10);
}

mpq_class parse_rational_literal(std::string_view text) {
  std::string s = strip_whitespace(text);
  if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  auto slash = s.find('/');
  if (slash == std::string::npos) return mpq_class(parse_integer_literal(s));
  mpz_class num = parse_integer_literal(s.substr(0, slash));
  mpz_class den = parse_integer_literal(s.substr(slash + 1));
  if (den == 0) coefficient_error(text, "zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

RingHandle integers_ring() {
  static const RingHandle ring = std::make_shared<IntegerRing>();
  return ring;
}

RingHandle rationals_ring() {
  static const RingHandle ring = std::make_shared<RationalRing>();
  return ring;
}

// --- Integers --------------------------------------------------------------

RingElement IntegerRing::zero() const { return make(mpz_class(0)); }
RingElement IntegerRing::one() const { return make(mpz_class(1)); }
RingElement IntegerRing::add(const RingElement& a, const RingElement& b) const {
  return make(mpz_class(as_integer(a) + as_integer(b)));
}
RingElement IntegerRing::neg(const RingElement& a) const { return make(mpz_class(-as_integer(a))); }
RingElement IntegerRing::mul(const RingElement& a, const RingElement& b) const {
  return make(mpz_class(as_integer(a) * as_integer(b)));
}
RingElement IntegerRing::from_integer(const mpz_class& n) const { return make(n); }
std::string IntegerRing::format(const RingElement& a) const { return as_integer(a).get_str(); }
RingElement IntegerRing::parse(std::string_view text) const { return make(parse_integer_literal(text)); }
RingElement IntegerRing::random(Rng& rng) const { return make(mpz_class(static_cast<long>(uniform_between(rng, -9, 9)))); }

// --- Rationals -------------------------------------------------------------

RingElement RationalRing::value(mpq_class q) const {
  q.canonicalize();
  return make(std::move(q));
}
RingElement RationalRing::zero() const { return make(mpq_class(0)); }
RingElement RationalRing::one() const { return make(mpq_class(1)); }
RingElement RationalRing::add(const RingElement& a, const RingElement& b) const {
  return make(mpq_class(as_rational(a) + as_rational(b)));
}
RingElement RationalRing::neg(const RingElement& a) const { return make(mpq_class(-as_rational(a))); }
RingElement RationalRing::mul(const RingElement& a, const RingElement& b) const {
  return make(mpq_class(as_rational(a) * as_rational(b)));
}
RingElement RationalRing::from_integer(const mpz_class& n) const { return make(mpq_class(n)); }
std::string RationalRing::format(const RingElement& a) const { return as_rational(a).get_str(); }
RingElement RationalRing::parse(std::string_view text) const { return value(parse_rational_literal(text)); }
RingElement RationalRing::random(Rng& rng) const {
  const long num = static_cast<long>(uniform_between(rng, -9, 9));
  const long den = static_cast<long>(uniform_between(rng, 1, 4));
  return value(mpq_class(num, den));
}
RingElement RationalRing::inverse(const RingElement& a) const {
  if (as_rational(a) == 0) throw Error(ErrorCode::NotInvertible, "zero has no inverse");
  return value(mpq_class(1) / as_rational(a));
}

// --- Integers mod n ----------------------------------------------------------

ModRing::ModRing(std::uint64_t n) : Ring(RingDescriptor::integers_mod(n)), n_(n), prime_(is_prime(n)) {}

RingElement ModRing::zero() const { return residue(0); }
RingElement ModRing::one() const { return residue(1); }
RingElement ModRing::add(const RingElement& a, const RingElement& b) const {
  return residue((as_residues(a)[0] + as_residues(b)[0]) % n_);
}
RingElement ModRing::neg(const RingElement& a) const { return residue((n_ - as_residues(a)[0]) % n_); }
RingElement ModRing::mul(const RingElement& a, const RingElement& b) const {
  return residue(as_residues(a)[0] * as_residues(b)[0] % n_);
}
RingElement ModRing::from_integer(const mpz_class& n) const {
  mpz_class r = n % mpz_class(static_cast<unsigned long>(n_));
  if (r < 0) r += static_cast<unsigned long>(n_);
  return residue(r.get_ui());
}
std::string ModRing::format(const RingElement& a) const { return std::to_string(as_residues(a)[0]); }
RingElement ModRing::parse(std::string_view text) const { return from_integer(parse_integer_literal(text)); }
RingElement ModRing::random(Rng& rng) const { return residue(uniform_below(rng, n_)); }
std::uint64_t ModRing::index_of(const RingElement& a) const {
  require_owned(a);
  return as_residues(a)[0];
}
std::optional<std::size_t> ModRing::dimension() const {
  if (prime_) return 1;
  return std::nullopt;
}
RingElement ModRing::inverse(const RingElement& a) const {
  mpz_class value(static_cast<unsigned long>(as_residues(a)[0]));
  mpz_class mod(static_cast<unsigned long>(n_));
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), value.get_mpz_t(), mod.get_mpz_t()) == 0)
    throw Error(ErrorCode::NotInvertible, format(a) + " is not a unit mod " + std::to_string(n_));
  return residue(inv.get_ui());
}

}  // namespace gnoe::detail
