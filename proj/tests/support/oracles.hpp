#ifndef GNOE_TESTS_ORACLES_HPP
#define GNOE_TESTS_ORACLES_HPP

// Independent reference computations. None of these call into the library's
// arithmetic; they read library values only through coordinates and text.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gnoe/gnoe.hpp"

namespace oracle {

// ---------------------------------------------------------------------------
// F_{p^k} on coordinate vectors modulo a monic polynomial.
// ---------------------------------------------------------------------------

struct GaloisField {
  std::uint64_t p;
  std::vector<std::uint64_t> modulus;  // monic, low to high, degree k

  std::size_t k() const { return modulus.size() - 1; }

  std::vector<std::uint64_t> add(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) const {
    std::vector<std::uint64_t> out(k());
    for (std::size_t i = 0; i < k(); ++i) out[i] = (a[i] + b[i]) % p;
    return out;
  }

  std::vector<std::uint64_t> sub(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) const {
    std::vector<std::uint64_t> out(k());
    for (std::size_t i = 0; i < k(); ++i) out[i] = (a[i] + p - b[i]) % p;
    return out;
  }

  std::vector<std::uint64_t> mul(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) const {
    std::vector<std::uint64_t> prod(2 * k(), 0);
    for (std::size_t i = 0; i < k(); ++i)
      for (std::size_t j = 0; j < k(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    // Reduce t^n for n >= k with t^k = -(m_0 + ... + m_{k-1} t^{k-1}).
    for (std::size_t n = prod.size(); n-- > k();) {
      const std::uint64_t c = prod[n];
      if (c == 0) continue;
      prod[n] = 0;
      for (std::size_t j = 0; j < k(); ++j) prod[n - k() + j] = (prod[n - k() + j] + (p - modulus[j]) * c) % p;
    }
    prod.resize(k());
    return prod;
  }

  std::vector<std::uint64_t> one() const {
    std::vector<std::uint64_t> out(k(), 0);
    out[0] = 1;
    return out;
  }

  std::vector<std::uint64_t> zero() const { return std::vector<std::uint64_t>(k(), 0); }

  std::vector<std::uint64_t> power(std::vector<std::uint64_t> a, std::uint64_t e) const {
    std::vector<std::uint64_t> out = one();
    for (; e; e >>= 1, a = mul(a, a))
      if (e & 1) out = mul(out, a);
    return out;
  }

  /// a^(p^e) by repeated p-th powers.
  std::vector<std::uint64_t> frobenius(std::vector<std::uint64_t> a, std::size_t e) const {
    for (std::size_t i = 0; i < e; ++i) a = power(a, p);
    return a;
  }

  bool is_zero(const std::vector<std::uint64_t>& a) const {
    for (auto c : a)
      if (c) return false;
    return true;
  }

  /// Literal text in the ring grammar, e.g. "2t^2+t+1".
  std::string text(const std::vector<std::uint64_t>& a) const {
    std::string out;
    for (std::size_t j = k(); j-- > 0;) {
      if (a[j] == 0) continue;
      std::string term;
      if (j == 0) term = std::to_string(a[j]);
      else {
        term = a[j] == 1 ? "" : std::to_string(a[j]);
        term += "t";
        if (j > 1) term += "^" + std::to_string(j);
      }
      out += (out.empty() ? "" : "+") + term;
    }
    return out.empty() ? "0" : out;
  }
};

// ---------------------------------------------------------------------------
// Skew polynomials over F_{p^k} with sigma = Frobenius^e, delta = 0:
// (a X^i)(b X^j) = a b^(p^(e i)) X^(i+j).
// ---------------------------------------------------------------------------

using Coeff = std::vector<std::uint64_t>;
using SkewPoly = std::vector<Coeff>;

struct SkewRing {
  GaloisField field;
  std::size_t e = 1;

  SkewPoly trim(SkewPoly p) const {
    while (!p.empty() && field.is_zero(p.back())) p.pop_back();
    return p;
  }

  SkewPoly mul(const SkewPoly& a, const SkewPoly& b) const {
    if (a.empty() || b.empty()) return {};
    SkewPoly out(a.size() + b.size() - 1, field.zero());
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        out[i + j] = field.add(out[i + j], field.mul(a[i], field.frobenius(b[j], e * i)));
    return trim(out);
  }

  SkewPoly add(const SkewPoly& a, const SkewPoly& b) const {
    SkewPoly out(std::max(a.size(), b.size()), field.zero());
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (i < a.size()) out[i] = field.add(out[i], a[i]);
      if (i < b.size()) out[i] = field.add(out[i], b[i]);
    }
    return trim(out);
  }

  /// sum X^n r_n, with X^n r = sigma^n(r) X^n.
  SkewPoly from_right(const std::vector<Coeff>& right) const {
    SkewPoly out;
    for (std::size_t n = 0; n < right.size(); ++n) out.push_back(field.frobenius(right[n], e * n));
    return trim(out);
  }
};

inline SkewPoly to_skew(const gnoe::OrePolynomial& p) {
  SkewPoly out;
  for (const auto& c : p.coeffs()) out.push_back(gnoe::as_residues(c));
  return out;
}

// ---------------------------------------------------------------------------
// Ordinary F_p[X] long division, coefficients low to high.
// ---------------------------------------------------------------------------

inline std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>> long_division(
    std::vector<std::uint64_t> a, const std::vector<std::uint64_t>& b, std::uint64_t p) {
  auto inv = [p](std::uint64_t x) {
    std::uint64_t r = 1;
    for (std::uint64_t e = p - 2, base = x % p; e; e >>= 1, base = base * base % p)
      if (e & 1) r = r * base % p;
    return r;
  };
  auto trim = [](std::vector<std::uint64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(a);
  std::vector<std::uint64_t> q;
  const std::uint64_t lead_inv = inv(b.back());
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const std::uint64_t c = a.back() * lead_inv % p;
    if (q.size() <= shift) q.resize(shift + 1, 0);
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = (a[i + shift] + p - c * b[i] % p) % p;
    trim(a);
  }
  return {q, a};
}

// ---------------------------------------------------------------------------
// 2x2 matrices over F_2 as 4-bit masks (bit 0 = e11, 1 = e12, 2 = e21, 3 = e22).
// ---------------------------------------------------------------------------

inline unsigned m2_mul(unsigned x, unsigned y) {
  auto at = [](unsigned m, int r, int c) { return (m >> (2 * r + c)) & 1u; };
  unsigned out = 0;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      unsigned v = 0;
      for (int k = 0; k < 2; ++k) v ^= at(x, r, k) & at(y, k, c);
      out |= v << (2 * r + c);
    }
  return out;
}

/// The right ideal generated by gens: close under addition and right multiplication.
inline std::set<unsigned> m2_right_closure(const std::vector<unsigned>& gens) {
  std::set<unsigned> span{0};
  bool grew = true;
  std::vector<unsigned> frontier(gens);
  while (grew) {
    grew = false;
    std::vector<unsigned> fresh;
    for (unsigned g : frontier)
      for (unsigned r = 0; r < 16; ++r) fresh.push_back(m2_mul(g, r));
    for (unsigned a : std::vector<unsigned>(span.begin(), span.end())) fresh.push_back(a);
    std::set<unsigned> next(span);
    for (unsigned f : fresh)
      for (unsigned s : span) next.insert(f ^ s);
    if (next.size() != span.size()) grew = true;
    span = std::move(next);
    frontier.assign(span.begin(), span.end());
  }
  return span;
}

// ---------------------------------------------------------------------------
// Cayley-Dickson doubling on coordinate arrays over Q.
//
// Derivation from the flipped quotient A[X; *, 0]^fl / (X^2 - mu), using
// (r X^m)(s X^n) = sum_i tau_n(r, pi_i^m(s)) X^(i+n) with delta = 0:
//   a * c         = ac
//   a * (dX)      = tau_1(a, d) X = (da) X
//   (bX) * c      = tau_0(b, c*) X = (b c*) X
//   (bX) * (dX)   = tau_1(b, d*) X^2 = (d* b) mu
// so (a, b)(c, d) = (ac + mu d* b, da + b c*).
// ---------------------------------------------------------------------------

using Coords = std::vector<mpq_class>;

inline Coords cd_conj(const Coords& x) {
  if (x.size() == 1) return x;
  const std::size_t h = x.size() / 2;
  Coords a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
  Coords out = cd_conj(a);
  for (auto& v : b) out.push_back(-v);
  return out;
}

inline Coords cd_add(const Coords& x, const Coords& y) {
  Coords out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
  return out;
}

/// mus[l] doubles level l into level l + 1; x.size() = 2^level.
inline Coords cd_mul(const Coords& x, const Coords& y, const std::vector<mpq_class>& mus) {
  if (x.size() == 1) return {x[0] * y[0]};
  const std::size_t h = x.size() / 2;
  std::size_t level = 0;
  while ((std::size_t{1} << level) < x.size()) ++level;
  const mpq_class mu = mus[level - 1];
  Coords a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
  Coords c(y.begin(), y.begin() + h), d(y.begin() + h, y.end());
  Coords first = cd_mul(a, c, mus);
  Coords dstar_b = cd_mul(cd_conj(d), b, mus);
  for (std::size_t i = 0; i < h; ++i) first[i] += mu * dstar_b[i];
  Coords second = cd_add(cd_mul(d, a, mus), cd_mul(b, cd_conj(c), mus));
  first.insert(first.end(), second.begin(), second.end());
  return first;
}

inline Coords cd_basis(std::size_t dim, std::size_t i) {
  Coords out(dim, 0);
  out[i] = 1;
  return out;
}

inline mpq_class cd_norm(const Coords& x) {
  mpq_class sum = 0;
  for (const auto& v : x) sum += v * v;
  return sum;
}

inline Coords coords_of(const gnoe::RingElement& a) {
  Coords out;
  for (const auto& c : a.ring().coordinates(a)) out.push_back(gnoe::as_rational(c));
  return out;
}

// ---------------------------------------------------------------------------
// pi_i^m by explicit word enumeration: every length-m word with i sigmas.
// ---------------------------------------------------------------------------

inline gnoe::RingElement pi_by_words(const std::function<gnoe::RingElement(const gnoe::RingElement&)>& sigma,
                                     const std::function<gnoe::RingElement(const gnoe::RingElement&)>& delta,
                                     long i, long m, const gnoe::RingElement& s) {
  gnoe::RingElement sum = s.ring().zero();
  if (i < 0 || i > m) return sum;
  for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
    if (__builtin_popcountl(mask) != i) continue;
    gnoe::RingElement v = s;
    // Bit 0 is the innermost letter.
    for (long b = 0; b < m; ++b) v = ((mask >> b) & 1ul) ? sigma(v) : delta(v);
    sum = sum + v;
  }
  return sum;
}

// ---------------------------------------------------------------------------
// K[Y][X; Y -> Y^2, 0] monomials: (Y^a X^m)(Y^c X^n) = Y^(a + 2^m c) X^(m+n).
// The left ideal S{Y X^j : j <= k} is spanned by the monomials Y^(a + 2^m) X^(m+j).
// ---------------------------------------------------------------------------

inline bool skew_monomial_in_left_ideal(std::size_t c, std::size_t n, std::size_t k) {
  for (std::size_t j = 1; j <= k; ++j) {
    if (j > n) break;
    const std::size_t m = n - j;
    if (m >= 63) continue;
    const std::size_t shift = std::size_t{1} << m;
    if (c >= shift) return true;  // a = c - 2^m >= 0
  }
  return false;
}

}  // namespace oracle

#endif  // GNOE_TESTS_ORACLES_HPP
