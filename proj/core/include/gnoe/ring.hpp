#ifndef GNOE_RING_HPP
#define GNOE_RING_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gnoe/error.hpp"
#include "gnoe/random.hpp"

namespace gnoe {

// ---------------------------------------------------------------------------
// Descriptors
// ---------------------------------------------------------------------------

enum class RingKind {
  Integers,
  Rationals,
  IntegersMod,
  FiniteField,
  PolyOverField,
  Matrix2,
  MixedTriangular2,
  CayleyLevel,
};

/// Entry pattern of the mixed triangular ring.
/// Upper: [[Z, Q], [0, Q]].  Lower (the transpose): [[Z, 0], [Q, Q]].
enum class Orientation { Upper, Lower };

/// How a Cayley level computes products: the closed Cayley-Dickson formula,
/// or through the flipped Ore extension quotient (built by constructions).
enum class CayleyRoute { ClosedForm, OreQuotient };

struct RingDescriptor {
  RingKind kind = RingKind::Integers;
  std::uint64_t modulus = 0;  // IntegersMod: n.  FiniteField: p.
  unsigned degree = 0;        // FiniteField: k.
  unsigned level = 0;         // CayleyLevel: tower level.
  Orientation orientation = Orientation::Upper;
  CayleyRoute route = CayleyRoute::ClosedForm;
  std::vector<mpq_class> params;     // CayleyLevel: mu_1 .. mu_level.
  std::vector<RingDescriptor> base;  // PolyOverField / Matrix2 / CayleyLevel: one entry.

  static RingDescriptor integers();
  static RingDescriptor rationals();
  static RingDescriptor integers_mod(std::uint64_t n);
  static RingDescriptor finite_field(std::uint64_t p, unsigned k);
  static RingDescriptor poly_over(RingDescriptor field);
  static RingDescriptor matrix2(RingDescriptor base_ring);
  static RingDescriptor mixed_triangular(Orientation orientation);
  static RingDescriptor cayley(unsigned level, RingDescriptor field, std::vector<mpq_class> mus);

  /// Canonical text, e.g. "poly(gf(2,1))"; equal descriptors give equal text.
  std::string to_string() const;

  friend bool operator==(const RingDescriptor& a, const RingDescriptor& b);
};

// ---------------------------------------------------------------------------
// Elements
// ---------------------------------------------------------------------------

class Ring;
using RingHandle = std::shared_ptr<const Ring>;

/// An exact value owned by one ring. Payload alternatives:
///   mpz_class                  Integers
///   mpq_class                  Rationals
///   vector<uint64_t>           IntegersMod (one residue), FiniteField (k coordinates in t)
///   vector<RingElement>        composite rings: polynomial coefficients,
///                              matrix entries, Cayley pairs
class RingElement {
 public:
  using Payload = std::variant<mpz_class, mpq_class, std::vector<std::uint64_t>, std::vector<RingElement>>;

  RingElement() = default;
  RingElement(RingHandle owner, Payload payload) : owner_(std::move(owner)), payload_(std::move(payload)) {}

  const RingHandle& owner() const { return owner_; }
  const Ring& ring() const;
  const Payload& payload() const { return payload_; }
  bool valid() const { return static_cast<bool>(owner_); }

  bool is_zero() const;
  bool is_one() const;
  std::string to_string() const;

  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a);
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend bool operator==(const RingElement& a, const RingElement& b);

  RingElement& operator+=(const RingElement& other) { return *this = *this + other; }
  RingElement& operator-=(const RingElement& other) { return *this = *this - other; }

 private:
  RingHandle owner_;
  Payload payload_;
};

/// Throws OwnerMismatch unless both elements belong to interchangeable rings.
void require_same_owner(const RingElement& a, const RingElement& b);
bool same_ring(const Ring& a, const Ring& b);

/// (r s) t - r (s t).
RingElement associator(const RingElement& r, const RingElement& s, const RingElement& t);
RingElement commutator(const RingElement& r, const RingElement& s);

// ---------------------------------------------------------------------------
// Rings
// ---------------------------------------------------------------------------

/// A coefficient ring with exact arithmetic. Possibly nonassociative and
/// noncommutative; always unital. Instances are immutable.
class Ring : public std::enable_shared_from_this<Ring> {
 public:
  explicit Ring(RingDescriptor descriptor) : descriptor_(std::move(descriptor)) {}
  virtual ~Ring() = default;
  Ring(const Ring&) = delete;
  Ring& operator=(const Ring&) = delete;

  const RingDescriptor& descriptor() const { return descriptor_; }
  RingHandle handle() const { return shared_from_this(); }

  virtual RingElement zero() const = 0;
  virtual RingElement one() const = 0;
  virtual RingElement add(const RingElement& a, const RingElement& b) const = 0;
  virtual RingElement neg(const RingElement& a) const = 0;
  virtual RingElement mul(const RingElement& a, const RingElement& b) const = 0;
  virtual bool equal(const RingElement& a, const RingElement& b) const;

  /// n * 1.
  virtual RingElement from_integer(const mpz_class& n) const;

  virtual std::string format(const RingElement& a) const = 0;
  /// Parses one element literal; throws CoefficientParseError.
  virtual RingElement parse(std::string_view text) const = 0;
  virtual RingElement random(Rng& rng) const = 0;

  virtual bool is_associative() const = 0;
  virtual bool is_commutative() const = 0;
  virtual bool is_field() const { return false; }
  bool is_finite() const { return cardinality().has_value(); }

  // Finite enumeration. element_at / index_of are a bijection with
  // [0, cardinality) whenever cardinality() has a value.
  virtual std::optional<std::uint64_t> cardinality() const { return std::nullopt; }
  virtual RingElement element_at(std::uint64_t index) const;
  virtual std::uint64_t index_of(const RingElement& a) const;

  // Algebra structure over a field. base_field() is null for rings that are
  // not presented as algebras; dimension() is empty for infinite dimension.
  virtual RingHandle base_field() const { return nullptr; }
  bool is_algebra_over_field() const { return base_field() != nullptr; }
  virtual std::optional<std::size_t> dimension() const { return std::nullopt; }
  virtual std::vector<RingElement> basis() const;
  virtual std::vector<RingElement> coordinates(const RingElement& a) const;
  virtual RingElement from_coordinates(std::span<const RingElement> coords) const;
  /// Embeds a base-field scalar as lambda * 1.
  virtual RingElement scalar(const RingElement& lambda) const;
  /// Embeds a rational scalar (through from_integer and field inversion).
  RingElement scalar_from_rational(const mpq_class& q) const;

  /// Multiplicative inverse in a field; throws NotInvertible for zero or non-fields.
  virtual RingElement inverse(const RingElement& a) const;

  /// The algebra involution (Cayley levels); throws UndefinedForKind elsewhere.
  virtual RingElement conjugate(const RingElement& a) const;

  /// Labels for the basis, used in multiplication tables ("1", "i", "e3", ...).
  virtual std::vector<std::string> basis_labels() const;

  /// Checks that `a` belongs to this ring; throws OwnerMismatch otherwise.
  void require_owned(const RingElement& a) const;

 protected:
  RingElement make(RingElement::Payload payload) const { return RingElement(shared_from_this(), std::move(payload)); }

 private:
  RingDescriptor descriptor_;
};

/// Validates the descriptor and returns the (interned) ring.
/// Throws InvalidDescriptor for non-prime p, modulus < 2, zero Cayley parameter,
/// and for kinds that cannot be built standalone.
RingHandle make_ring(const RingDescriptor& descriptor);

/// Convenience accessors for concrete payloads.
const mpz_class& as_integer(const RingElement& a);
const mpq_class& as_rational(const RingElement& a);
const std::vector<std::uint64_t>& as_residues(const RingElement& a);
const std::vector<RingElement>& as_parts(const RingElement& a);

/// The irreducible defining F_{p^k} = F_p[t]/(m(t)), coefficients low to high, monic.
/// Conway polynomials for tabulated (p, k); otherwise the lexicographically
/// least monic irreducible polynomial.
std::vector<std::uint64_t> field_modulus(std::uint64_t p, unsigned k);

bool is_prime(std::uint64_t n);

}  // namespace gnoe

#endif  // GNOE_RING_HPP
