#include <utility>

#include "rings_impl.hpp"
#include "univariate_text.hpp"

namespace gnoe::detail {

namespace {

void normalize(std::vector<RingElement>& coeffs) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

}  // namespace

PolyRing::PolyRing(RingHandle field) : Ring(RingDescriptor::poly_over(field->descriptor())), field_(std::move(field)) {}

RingElement PolyRing::from_coefficients(std::vector<RingElement> coeffs) const {
  for (const auto& c : coeffs) field_->require_owned(c);
  normalize(coeffs);
  return make(std::move(coeffs));
}

const std::vector<RingElement>& PolyRing::coefficients(const RingElement& a) const {
  require_owned(a);
  return as_parts(a);
}

RingElement PolyRing::monomial(const RingElement& c, std::size_t e) const {
  std::vector<RingElement> coeffs(e + 1, field_->zero());
  coeffs[e] = c;
  return from_coefficients(std::move(coeffs));
}

RingElement PolyRing::variable() const { return monomial(field_->one(), 1); }

long PolyRing::degree(const RingElement& a) const { return static_cast<long>(coefficients(a).size()) - 1; }

RingElement PolyRing::zero() const { return make(std::vector<RingElement>{}); }
RingElement PolyRing::one() const { return from_coefficients({field_->one()}); }

RingElement PolyRing::add(const RingElement& a, const RingElement& b) const {
  const auto& x = as_parts(a);
  const auto& y = as_parts(b);
  std::vector<RingElement> out(std::max(x.size(), y.size()), field_->zero());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i];
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = field_->add(out[i], y[i]);
  normalize(out);
  return make(std::move(out));
}

RingElement PolyRing::neg(const RingElement& a) const {
  std::vector<RingElement> out;
  for (const auto& c : as_parts(a)) out.push_back(field_->neg(c));
  return make(std::move(out));
}

RingElement PolyRing::mul(const RingElement& a, const RingElement& b) const {
  const auto& x = as_parts(a);
  const auto& y = as_parts(b);
  if (x.empty() || y.empty()) return zero();
  std::vector<RingElement> out(x.size() + y.size() - 1, field_->zero());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] = field_->add(out[i + j], field_->mul(x[i], y[j]));
  }
  normalize(out);
  return make(std::move(out));
}

RingElement PolyRing::from_integer(const mpz_class& n) const { return from_coefficients({field_->from_integer(n)}); }

RingElement PolyRing::scalar(const RingElement& lambda) const { return from_coefficients({lambda}); }

std::string PolyRing::format(const RingElement& a) const {
  const auto& x = as_parts(a);
  std::vector<FormattedTerm> terms;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) terms.push_back({i, field_->format(x[i]), x[i].is_one()});
  return format_compact(std::move(terms), 'Y');
}

RingElement PolyRing::parse(std::string_view text) const {
  RingElement acc = zero();
  for (const auto& term : split_univariate(text, 'Y')) {
    RingElement c = term.coeff.empty() ? field_->one() : field_->parse(term.coeff);
    if (term.negate) c = field_->neg(c);
    acc = add(acc, monomial(c, term.exponent));
  }
  return acc;
}

RingElement PolyRing::random(Rng& rng) const {
  const auto degree = uniform_below(rng, 4);
  std::vector<RingElement> coeffs;
  for (std::uint64_t i = 0; i <= degree; ++i) coeffs.push_back(field_->random(rng));
  return from_coefficients(std::move(coeffs));
}

PolyRing::DivMod PolyRing::divmod(const RingElement& a, const RingElement& b) const {
  const auto& d = coefficients(b);
  if (d.empty()) throw Error(ErrorCode::NotInvertible, "division by the zero polynomial");
  std::vector<RingElement> rem = coefficients(a);
  std::vector<RingElement> quot(rem.size() >= d.size() ? rem.size() - d.size() + 1 : 0, field_->zero());
  const RingElement lead_inv = field_->inverse(d.back());
  while (rem.size() >= d.size()) {
    const RingElement factor = field_->mul(rem.back(), lead_inv);
    const std::size_t shift = rem.size() - d.size();
    quot[shift] = factor;
    for (std::size_t i = 0; i < d.size(); ++i) rem[shift + i] = field_->add(rem[shift + i], field_->neg(field_->mul(factor, d[i])));
    normalize(rem);
  }
  return {from_coefficients(std::move(quot)), from_coefficients(std::move(rem))};
}

PolyRing::Bezout PolyRing::extended_gcd(const RingElement& a, const RingElement& b) const {
  RingElement r0 = a, r1 = b, s0 = one(), s1 = zero(), t0 = zero(), t1 = one();
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, add(s0, neg(mul(q, s1))));
    t0 = std::exchange(t1, add(t0, neg(mul(q, t1))));
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const RingElement lead_inv = scalar(field_->inverse(coefficients(r0).back()));
  return {mul(r0, lead_inv), mul(s0, lead_inv), mul(t0, lead_inv)};
}

}  // namespace gnoe::detail
