#include <cctype>
#include <map>

#include "rings_impl.hpp"
#include "univariate_text.hpp"

namespace gnoe {

namespace {

// Conway polynomials, coefficients t^0 .. t^k (monic).
const std::map<std::pair<std::uint64_t, unsigned>, std::vector<std::uint64_t>>& conway_table() {
  static const std::map<std::pair<std::uint64_t, unsigned>, std::vector<std::uint64_t>> table = {
      {{2, 1}, {1, 1}},
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{3, 1}, {1, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{3, 5}, {1, 2, 0, 0, 0, 1}},
      {{5, 1}, {3, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},
      {{5, 4}, {2, 4, 4, 0, 1}},
      {{7, 1}, {4, 1}},
      {{7, 2}, {3, 6, 1}},
      {{7, 3}, {4, 0, 6, 1}},
  };
  return table;
}

using Coeffs = std::vector<std::uint64_t>;

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo b over F_p (b nonzero).
Coeffs poly_mod(Coeffs a, const Coeffs& b, std::uint64_t p) {
  trim(a);
  Coeffs d = b;
  trim(d);
  mpz_class lead(static_cast<unsigned long>(d.back()));
  mpz_class inv;
  mpz_class mod(static_cast<unsigned long>(p));
  mpz_invert(inv.get_mpz_t(), lead.get_mpz_t(), mod.get_mpz_t());
  const std::uint64_t lead_inv = inv.get_ui();
  while (a.size() >= d.size()) {
    const std::uint64_t factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - d.size();
    for (std::size_t i = 0; i < d.size(); ++i) a[shift + i] = (a[shift + i] + p - factor * d[i] % p) % p;
    trim(a);
  }
  return a;
}

bool is_irreducible(const Coeffs& f, std::uint64_t p) {
  const std::size_t deg = f.size() - 1;
  // Trial division by every monic polynomial of degree 1 .. deg/2.
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Coeffs g(d + 1, 0);
      std::uint64_t v = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = v % p;
        v /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::uint64_t> field_modulus(std::uint64_t p, unsigned k) {
  if (auto it = conway_table().find({p, k}); it != conway_table().end()) return it->second;
  std::uint64_t count = 1;
  for (unsigned i = 0; i < k; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Coeffs f(k + 1, 0);
    std::uint64_t v = idx;
    for (unsigned i = 0; i < k; ++i) {
      f[i] = v % p;
      v /= p;
    }
    f[k] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw Error(ErrorCode::InvalidDescriptor, "no irreducible polynomial found");
}

namespace detail {

FiniteFieldRing::FiniteFieldRing(std::uint64_t p, unsigned k)
    : Ring(RingDescriptor::finite_field(p, k)), p_(p), k_(k), order_(1), modulus_(field_modulus(p, k)) {
  for (unsigned i = 0; i < k; ++i) order_ *= p;
}

RingElement FiniteFieldRing::from_coords(std::vector<std::uint64_t> coords) const {
  Coeffs reduced = poly_mod(std::move(coords), modulus_, p_);
  reduced.resize(k_, 0);
  return make(std::move(reduced));
}

RingElement FiniteFieldRing::generator() const {
  Coeffs t(2, 0);
  t[1] = 1;
  return from_coords(t);
}

RingElement FiniteFieldRing::zero() const { return make(Coeffs(k_, 0)); }

RingElement FiniteFieldRing::one() const {
  Coeffs c(k_, 0);
  c[0] = 1;
  return from_coords(c);
}

RingElement FiniteFieldRing::add(const RingElement& a, const RingElement& b) const {
  const auto& x = as_residues(a);
  const auto& y = as_residues(b);
  Coeffs out(k_);
  for (unsigned i = 0; i < k_; ++i) out[i] = (x[i] + y[i]) % p_;
  return make(std::move(out));
}

RingElement FiniteFieldRing::neg(const RingElement& a) const {
  const auto& x = as_residues(a);
  Coeffs out(k_);
  for (unsigned i = 0; i < k_; ++i) out[i] = (p_ - x[i]) % p_;
  return make(std::move(out));
}

RingElement FiniteFieldRing::mul(const RingElement& a, const RingElement& b) const {
  const auto& x = as_residues(a);
  const auto& y = as_residues(b);
  Coeffs prod(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i) {
    if (x[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
  }
  return from_coords(std::move(prod));
}

RingElement FiniteFieldRing::from_integer(const mpz_class& n) const {
  mpz_class r = n % mpz_class(static_cast<unsigned long>(p_));
  if (r < 0) r += static_cast<unsigned long>(p_);
  Coeffs c(k_, 0);
  c[0] = r.get_ui();
  return make(std::move(c));
}

RingElement FiniteFieldRing::power(const RingElement& a, std::uint64_t e) const {
  RingElement result = one();
  RingElement base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

RingElement FiniteFieldRing::frobenius(const RingElement& a, unsigned e) const {
  RingElement out = a;
  for (unsigned i = 0; i < e % k_; ++i) out = power(out, p_);
  return out;
}

std::string FiniteFieldRing::format(const RingElement& a) const {
  const auto& x = as_residues(a);
  std::vector<FormattedTerm> terms;
  for (unsigned i = 0; i < k_; ++i)
    if (x[i] != 0) terms.push_back({i, std::to_string(x[i]), x[i] == 1});
  return format_compact(std::move(terms), 't');
}

RingElement FiniteFieldRing::parse(std::string_view text) const {
  RingElement acc = zero();
  for (const auto& term : split_univariate(text, 't')) {
    RingElement c = one();
    if (!term.coeff.empty()) {
      std::string s = strip_whitespace(term.coeff);
      bool digits = !s.empty();
      for (std::size_t i = (s[0] == '-' ? 1 : 0); i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) digits = false;
      if (!digits && s == strip_whitespace(text)) coefficient_error(text, "not an element of " + descriptor().to_string());
      c = digits ? from_integer(mpz_class(s, 10)) : parse(s);
    }
    RingElement value = mul(c, power(generator(), term.exponent));
    acc = add(acc, term.negate ? neg(value) : value);
  }
  return acc;
}

RingElement FiniteFieldRing::random(Rng& rng) const { return element_at(uniform_below(rng, order_)); }

RingElement FiniteFieldRing::element_at(std::uint64_t index) const {
  Coeffs c(k_, 0);
  for (unsigned i = 0; i < k_; ++i) {
    c[i] = index % p_;
    index /= p_;
  }
  return make(std::move(c));
}

std::uint64_t FiniteFieldRing::index_of(const RingElement& a) const {
  require_owned(a);
  const auto& x = as_residues(a);
  std::uint64_t index = 0;
  for (unsigned i = k_; i-- > 0;) index = index * p_ + x[i];
  return index;
}

RingElement FiniteFieldRing::inverse(const RingElement& a) const {
  if (equal(a, zero())) throw Error(ErrorCode::NotInvertible, "zero has no inverse");
  return power(a, order_ - 2);
}

}  // namespace detail

}  // namespace gnoe
