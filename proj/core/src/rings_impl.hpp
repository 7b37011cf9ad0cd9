#ifndef GNOE_SRC_RINGS_IMPL_HPP
#define GNOE_SRC_RINGS_IMPL_HPP

#include <array>
#include <vector>

#include "gnoe/ring.hpp"

namespace gnoe::detail {

class IntegerRing final : public Ring {
 public:
  IntegerRing() : Ring(RingDescriptor::integers()) {}
  RingElement zero() const override;
  RingElement one() const override;
  RingElement add(const RingElement& a, const RingElement& b) const override;
  RingElement neg(const RingElement& a) const override;
  RingElement mul(const RingElement& a, const RingElement& b) const override;
  RingElement from_integer(const mpz_class& n) const override;
  RingElement value(const mpz_class& n) const { return make(n); }
  std::string format(const RingElement& a) const override;
  RingElement parse(std::string_view text) const override;
  RingElement random(Rng& rng) const override;
  bool is_associative() const override { return true; }
  bool is_commutative() const override { return true; }
};

class RationalRing final : public Ring {
 public:
  RationalRing() : Ring(RingDescriptor::rationals()) {}
  RingElement zero() const override;
  RingElement one() const override;
  RingElement add(const RingElement& a, const RingElement& b) const override;
  RingElement neg(const RingElement& a) const override;
  RingElement mul(const RingElement& a, const RingElement& b) const override;
  RingElement from_integer(const mpz_class& n) const override;
  RingElement value(mpq_class q) const;
  std::string format(const RingElement& a) const override;
  RingElement parse(std::string_view text) const override;
  RingElement random(Rng& rng) const override;
  bool is_associative() const override { return true; }
  bool is_commutative() const override { return true; }
  bool is_field() const override { return true; }
  RingHandle base_field() const override { return handle(); }
  std::optional<std::size_t> dimension() const override { return 1; }
  RingElement inverse(const RingElement& a) const override;
};

/// Z/nZ. Residues are kept in [0, n) with n < 2^32.
class ModRing final : public Ring {
 public:
  explicit ModRing(std::uint64_t n);
  std::uint64_t modulus() const { return n_; }
  RingElement residue(std::uint64_t r) const { return make(std::vector<std::uint64_t>{r % n_}); }
  RingElement zero() const override;
  RingElement one() const override;
  RingElement add(const RingElement& a, const RingElement& b) const override;
  RingElement neg(const RingElement& a) const override;
  RingElement mul(const RingElement& a, const RingElement& b) const override;
  RingElement from_integer(const mpz_class& n) const override;
  std::string format(const RingElement& a) const override;
  RingElement parse(std::string_view text) const override;
  RingElement random(Rng& rng) const override;
  bool is_associative() const override { return true; }
  bool is_commutative() const override { return true; }
  bool is_field() const override { return prime_; }
  std::optional<std::uint64_t> cardinality() const override { return n_; }
  RingElement element_at(std::uint64_t index) const override { return residue(index); }
  std::uint64_t index_of(const RingElement& a) const override;
  RingHandle base_field() const override { return prime_ ? handle() : nullptr; }
  std::optional<std::size_t> dimension() const override;
  RingElement inverse(const RingElement& a) const override;

 private:
  std::uint64_t n_;
  bool prime_;
};

/// F_{p^k} as F_p[t]/(m(t)); payload holds k coordinates (t^0 first).
class FiniteFieldRing final : public Ring {
 public:
  FiniteFieldRing(std::uint64_t p, unsigned k);
  std::uint64_t characteristic() const { return p_; }
  unsigned extension_degree() const { return k_; }
  std::uint64_t order() const { return order_; }
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  RingElement from_coords(std::vector<std::uint64_t> coords) const;
  RingElement generator() const;  // the class of t
  RingElement power(const RingElement& a, std::uint64_t e) const;
  /// a^(p^e).
  RingElement frobenius(const RingElement& a, unsigned e) const;

  RingElement zero() const override;
  RingElement one() const override;
  RingElement add(const RingElement& a, const RingElement& b) const override;
  RingElement neg(const RingElement& a) const override;
  RingElement mul(const RingElement& a, const RingElement& b) const override;
  RingElement from_integer(const mpz_class& n) const override;
  std::string format(const RingElement& a) const override;
  RingElement parse(std::string_view text) const override;
  RingElement random(Rng& rng) const override;
  bool is_associative() const override { return true; }
  bool is_commutative() const override { return true; }
  bool is_field() const override { return true; }
  std::optional<std::uint64_t> cardinality() const override { return order_; }
  RingElement element_at(std::uint64_t index) const override;
  std::uint64_t index_of(const RingElement& a) const override;
  RingHandle base_field() const override { return handle(); }
  std::optional<std::size_t> dimension() const override { return 1; }
  RingElement inverse(const RingElement& a) const override;

 private:
  std::uint64_t p_;
  unsigned k_;
  std::uint64_t order_;
  std::vector<std::uint64_t> modulus_;
};

/// K[Y] over a field K; payload holds coefficients (Y^0 first), trailing zeros stripped.
class PolyRing final : public Ring {
 public:
  explicit PolyRing(RingHandle field);
  const RingHandle& field() const { return field_; }

  RingElement from_coefficients(std::vector<RingElement> coeffs) const;
  const std::vector<RingElement>& coefficients(const RingElement& a) const;
  RingElement monomial(const RingElement& c, std::size_t e) const;
  RingElement variable() const;  // Y
  long degree(const RingElement& a) const;  // -1 for zero

  struct DivMod {
    RingElement quotient;
    RingElement remainder;
  };
  DivMod divmod(const RingElement& a, const RingElement& b) const;
  /// Monic gcd with Bezout cofactors: g = u a + v b.
  struct Bezout {
    RingElement gcd, u, v;
  };
  Bezout extended_gcd(const RingElement& a, const RingElement& b) const;

  RingElement zero() const override;
  RingElement one() const override;
  RingElement add(const RingElement& a, const RingElement& b) const override;
  RingElement neg(const RingElement& a) const override;
  RingElement mul(const RingElement& a, const RingElement& b) const override;
  RingElement from_integer(const mpz_class& n) const override;
  std::string format(const RingElement& a) const override;
  RingElement parse(std::string_view text) const override;
  RingElement random(Rng& rng) const override;
  bool is_associative() const override { return true; }
  bool is_commutative() const override { return true; }
  RingHandle base_field() const override { return field_; }
  RingElement scalar(const RingElement& lambda) const override;

 private:
  RingHandle field_;
};

/// 2x2 matrices over an arbitrary ring; entries row-major.
class Matrix2Ring final : public Ring {
 public:
  explicit Matrix2Ring(RingHandle base);
  const RingHandle& base() const { return base_; }
  RingElement from_entries(std::vector<RingElement> entries) const;
  RingElement unit(int row, int col) const;  // E_{row+1, col+1}

  RingElement zero() const override;
  RingElement one() const override;
  RingElement add(const RingElement& a, const RingElement& b) const override;
  RingElement neg(const RingElement& a) const override;
  RingElement mul(const RingElement& a, const RingElement& b) const override;
  RingElement from_integer(const mpz_class& n) const override;
  std::string format(const RingElement& a) const override;
  RingElement parse(std::string_view text) const override;
  RingElement random(Rng& rng) const override;
  bool is_associative() const override { return base_->is_associative(); }
  bool is_commutative() const override { return false; }
  std::optional<std::uint64_t> cardinality() const override;
  RingElement element_at(std::uint64_t index) const override;
  std::uint64_t index_of(const RingElement& a) const override;
  RingHandle base_field() const override { return base_->is_field() ? base_->base_field() : nullptr; }
  std::optional<std::size_t> dimension() const override;
  std::vector<RingElement> basis() const override;
  std::vector<RingElement> coordinates(const RingElement& a) const override;
  RingElement from_coordinates(std::span<const RingElement> coords) const override;
  RingElement scalar(const RingElement& lambda) const override;
  std::vector<std::string> basis_labels() const override;

 private:
  RingHandle base_;
};

/// Upper: [[z, q], [0, w]]; Lower: [[z, 0], [q, w]] with z in Z and q, w in Q.
/// Payload parts are (z : Integers, q : Rationals, w : Rationals).
class MixedTriangularRing final : public Ring {
 public:
  explicit MixedTriangularRing(Orientation orientation);
  Orientation orientation() const { return orientation_; }
  RingElement from_parts(const mpz_class& z, const mpq_class& q, const mpq_class& w) const;
  struct Parts {
    mpz_class z;
    mpq_class q, w;
  };
  Parts parts(const RingElement& a) const;

  RingElement zero() const override;
  RingElement one() const override;
  RingElement add(const RingElement& a, const RingElement& b) const override;
  RingElement neg(const RingElement& a) const override;
  RingElement mul(const RingElement& a, const RingElement& b) const override;
  RingElement from_integer(const mpz_class& n) const override;
  std::string format(const RingElement& a) const override;
  RingElement parse(std::string_view text) const override;
  RingElement random(Rng& rng) const override;
  bool is_associative() const override { return true; }
  bool is_commutative() const override { return false; }

 private:
  Orientation orientation_;
  RingHandle integers_;
  RingHandle rationals_;
};

/// Cayley-Dickson level l over a field with the closed-form product
///   (a, b)(c, d) = (ac + mu d* b, da + b c*),   (a, b)* = (a*, -b).
/// Level 0 is a copy of the field with the identity involution.
class CayleyRing final : public Ring {
 public:
  CayleyRing(RingDescriptor descriptor, RingHandle field, RingHandle lower, RingElement mu);
  const RingHandle& field() const { return field_; }
  const RingHandle& lower() const { return lower_; }
  unsigned level() const { return descriptor().level; }
  RingElement pair(RingElement a, RingElement b) const;

  RingElement zero() const override;
  RingElement one() const override;
  RingElement add(const RingElement& a, const RingElement& b) const override;
  RingElement neg(const RingElement& a) const override;
  RingElement mul(const RingElement& a, const RingElement& b) const override;
  RingElement from_integer(const mpz_class& n) const override;
  std::string format(const RingElement& a) const override;
  RingElement parse(std::string_view text) const override;
  RingElement random(Rng& rng) const override;
  bool is_associative() const override { return associative_; }
  bool is_commutative() const override { return commutative_; }
  bool is_field() const override { return level() == 0; }
  std::optional<std::uint64_t> cardinality() const override;
  RingElement element_at(std::uint64_t index) const override;
  std::uint64_t index_of(const RingElement& a) const override;
  RingHandle base_field() const override { return field_; }
  std::optional<std::size_t> dimension() const override { return std::size_t{1} << level(); }
  std::vector<RingElement> coordinates(const RingElement& a) const override;
  RingElement from_coordinates(std::span<const RingElement> coords) const override;
  RingElement scalar(const RingElement& lambda) const override;
  RingElement inverse(const RingElement& a) const override;
  RingElement conjugate(const RingElement& a) const override;
  std::vector<std::string> basis_labels() const override;

  /// Computes the flags by probing basis triples; called once after construction.
  void probe_flags();

 private:
  RingHandle field_;
  RingHandle lower_;  // level - 1, null at level 0
  RingElement mu_;    // scalar of lower_, unset at level 0
  bool associative_ = true;
  bool commutative_ = true;
};

/// Shared helpers for Cayley-pair literals "(c0,c1|c2,c3)" and tables.
std::string format_cayley_coords(const std::vector<RingElement>& coords, const Ring& field);
std::vector<RingElement> parse_cayley_coords(std::string_view text, const Ring& field, std::size_t dimension);
std::vector<std::string> cayley_labels(unsigned level);

/// Probes basis triples for associativity / basis pairs for commutativity.
void probe_algebra_flags(const Ring& ring, bool& associative, bool& commutative);

RingHandle integers_ring();
RingHandle rationals_ring();

[[noreturn]] void coefficient_error(std::string_view text, const std::string& why);

}  // namespace gnoe::detail

#endif  // GNOE_SRC_RINGS_IMPL_HPP
