#include <map>
#include <mutex>
#include <sstream>

#include "rings_impl.hpp"

namespace gnoe {

// ---------------------------------------------------------------------------
// RingDescriptor
// ---------------------------------------------------------------------------

RingDescriptor RingDescriptor::integers() { return RingDescriptor{}; }

RingDescriptor RingDescriptor::rationals() {
  RingDescriptor d;
  d.kind = RingKind::Rationals;
  return d;
}

RingDescriptor RingDescriptor::integers_mod(std::uint64_t n) {
  RingDescriptor d;
  d.kind = RingKind::IntegersMod;
  d.modulus = n;
  return d;
}

RingDescriptor RingDescriptor::finite_field(std::uint64_t p, unsigned k) {
  RingDescriptor d;
  d.kind = RingKind::FiniteField;
  d.modulus = p;
  d.degree = k;
  return d;
}

RingDescriptor RingDescriptor::poly_over(RingDescriptor field) {
  RingDescriptor d;
  d.kind = RingKind::PolyOverField;
  d.base.push_back(std::move(field));
  return d;
}

RingDescriptor RingDescriptor::matrix2(RingDescriptor base_ring) {
  RingDescriptor d;
  d.kind = RingKind::Matrix2;
  d.base.push_back(std::move(base_ring));
  return d;
}

RingDescriptor RingDescriptor::mixed_triangular(Orientation orientation) {
  RingDescriptor d;
  d.kind = RingKind::MixedTriangular2;
  d.orientation = orientation;
  return d;
}

RingDescriptor RingDescriptor::cayley(unsigned level, RingDescriptor field, std::vector<mpq_class> mus) {
  RingDescriptor d;
  d.kind = RingKind::CayleyLevel;
  d.level = level;
  d.params = std::move(mus);
  d.base.push_back(std::move(field));
  return d;
}

std::string RingDescriptor::to_string() const {
  std::ostringstream out;
  switch (kind) {
    case RingKind::Integers: out << "integers"; break;
    case RingKind::Rationals: out << "rationals"; break;
    case RingKind::IntegersMod: out << "zmod(" << modulus << ")"; break;
    case RingKind::FiniteField: out << "gf(" << modulus << "," << degree << ")"; break;
    case RingKind::PolyOverField: out << "poly(" << (base.empty() ? "?" : base[0].to_string()) << ")"; break;
    case RingKind::Matrix2: out << "matrix2(" << (base.empty() ? "?" : base[0].to_string()) << ")"; break;
    case RingKind::MixedTriangular2:
      out << "mixed(" << (orientation == Orientation::Upper ? "upper" : "lower") << ")";
      break;
    case RingKind::CayleyLevel: {
      out << "cayley(" << level << "," << (base.empty() ? "?" : base[0].to_string()) << ",[";
      for (std::size_t i = 0; i < params.size(); ++i) out << (i ? "," : "") << params[i].get_str();
      out << "]";
      if (route == CayleyRoute::OreQuotient) out << ",quotient";
      out << ")";
      break;
    }
  }
  return out.str();
}

bool operator==(const RingDescriptor& a, const RingDescriptor& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case RingKind::Integers:
    case RingKind::Rationals:
      return true;
    case RingKind::IntegersMod:
      return a.modulus == b.modulus;
    case RingKind::FiniteField:
      return a.modulus == b.modulus && a.degree == b.degree;
    case RingKind::PolyOverField:
    case RingKind::Matrix2:
      return a.base == b.base;
    case RingKind::MixedTriangular2:
      return a.orientation == b.orientation;
    case RingKind::CayleyLevel:
      return a.level == b.level && a.route == b.route && a.params == b.params && a.base == b.base;
  }
  return false;
}

// ---------------------------------------------------------------------------
// RingElement
// ---------------------------------------------------------------------------

bool same_ring(const Ring& a, const Ring& b) { return &a == &b || a.descriptor() == b.descriptor(); }

void require_same_owner(const RingElement& a, const RingElement& b) {
  if (!a.valid() || !b.valid()) throw Error(ErrorCode::OwnerMismatch, "uninitialised ring element");
  if (a.owner() == b.owner()) return;
  if (!same_ring(*a.owner(), *b.owner())) {
    throw Error(ErrorCode::OwnerMismatch,
                a.owner()->descriptor().to_string() + " vs " + b.owner()->descriptor().to_string());
  }
}

const Ring& RingElement::ring() const {
  if (!owner_) throw Error(ErrorCode::OwnerMismatch, "uninitialised ring element");
  return *owner_;
}

bool RingElement::is_zero() const { return ring().equal(*this, ring().zero()); }
bool RingElement::is_one() const { return ring().equal(*this, ring().one()); }
std::string RingElement::to_string() const { return valid() ? ring().format(*this) : "<unset>"; }

RingElement operator+(const RingElement& a, const RingElement& b) {
  require_same_owner(a, b);
  return a.ring().add(a, b);
}

RingElement operator-(const RingElement& a, const RingElement& b) {
  require_same_owner(a, b);
  return a.ring().add(a, a.ring().neg(b));
}

RingElement operator-(const RingElement& a) { return a.ring().neg(a); }

RingElement operator*(const RingElement& a, const RingElement& b) {
  require_same_owner(a, b);
  return a.ring().mul(a, b);
}

bool operator==(const RingElement& a, const RingElement& b) {
  require_same_owner(a, b);
  return a.ring().equal(a, b);
}

RingElement associator(const RingElement& r, const RingElement& s, const RingElement& t) {
  return (r * s) * t - r * (s * t);
}

RingElement commutator(const RingElement& r, const RingElement& s) { return r * s - s * r; }

// ---------------------------------------------------------------------------
// Ring defaults
// ---------------------------------------------------------------------------

bool Ring::equal(const RingElement& a, const RingElement& b) const { return a.payload() == b.payload(); }

RingElement Ring::from_integer(const mpz_class& n) const {
  mpz_class m = abs(n);
  RingElement acc = zero();
  RingElement base = one();
  while (m > 0) {
    if (mpz_odd_p(m.get_mpz_t())) acc = add(acc, base);
    base = add(base, base);
    m >>= 1;
  }
  return n < 0 ? neg(acc) : acc;
}

RingElement Ring::element_at(std::uint64_t) const {
  throw Error(ErrorCode::UndefinedForKind, "element enumeration on infinite ring " + descriptor().to_string());
}

std::uint64_t Ring::index_of(const RingElement&) const {
  throw Error(ErrorCode::UndefinedForKind, "element enumeration on infinite ring " + descriptor().to_string());
}

std::vector<RingElement> Ring::basis() const {
  auto dim = dimension();
  auto field = base_field();
  if (!dim || !field) throw Error(ErrorCode::NotAlgebraOverField, descriptor().to_string());
  std::vector<RingElement> out;
  for (std::size_t i = 0; i < *dim; ++i) {
    std::vector<RingElement> coords(*dim, field->zero());
    coords[i] = field->one();
    out.push_back(from_coordinates(coords));
  }
  return out;
}

std::vector<RingElement> Ring::coordinates(const RingElement& a) const {
  if (dimension() == std::optional<std::size_t>(1) && base_field().get() == this) return {a};
  throw Error(ErrorCode::NotAlgebraOverField, descriptor().to_string());
}

RingElement Ring::from_coordinates(std::span<const RingElement> coords) const {
  if (dimension() == std::optional<std::size_t>(1) && base_field().get() == this && coords.size() == 1)
    return coords[0];
  throw Error(ErrorCode::NotAlgebraOverField, descriptor().to_string());
}

RingElement Ring::scalar(const RingElement& lambda) const {
  if (base_field().get() == this) return lambda;
  throw Error(ErrorCode::NotAlgebraOverField, descriptor().to_string());
}

RingElement Ring::scalar_from_rational(const mpq_class& q) const {
  if (auto field = base_field()) {
    RingElement num = field->from_integer(q.get_num());
    RingElement den = field->from_integer(q.get_den());
    return scalar(field->mul(num, field->inverse(den)));
  }
  if (q.get_den() != 1) throw Error(ErrorCode::UndefinedForKind, "fractional scalar in " + descriptor().to_string());
  return from_integer(q.get_num());
}

RingElement Ring::inverse(const RingElement&) const {
  throw Error(ErrorCode::NotInvertible, "no inverses in " + descriptor().to_string());
}

RingElement Ring::conjugate(const RingElement&) const {
  throw Error(ErrorCode::UndefinedForKind, "no involution on " + descriptor().to_string());
}

std::vector<std::string> Ring::basis_labels() const {
  std::vector<std::string> out;
  if (auto dim = dimension())
    for (std::size_t i = 0; i < *dim; ++i) out.push_back("e" + std::to_string(i));
  return out;
}

void Ring::require_owned(const RingElement& a) const {
  if (!a.valid() || !same_ring(*a.owner(), *this)) {
    throw Error(ErrorCode::OwnerMismatch,
                (a.valid() ? a.owner()->descriptor().to_string() : std::string("<unset>")) + " is not " +
                    descriptor().to_string());
  }
}

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

[[noreturn]] void invalid(const std::string& why) { throw Error(ErrorCode::InvalidDescriptor, why); }

RingHandle build(const RingDescriptor& d) {
  switch (d.kind) {
    case RingKind::Integers:
      return detail::integers_ring();
    case RingKind::Rationals:
      return detail::rationals_ring();
    case RingKind::IntegersMod:
      if (d.modulus < 2) invalid("modulus must be at least 2, got " + std::to_string(d.modulus));
      if (d.modulus >= (std::uint64_t{1} << 32)) invalid("modulus must be below 2^32");
      return std::make_shared<detail::ModRing>(d.modulus);
    case RingKind::FiniteField: {
      if (!is_prime(d.modulus)) invalid("characteristic " + std::to_string(d.modulus) + " is not prime");
      if (d.degree < 1) invalid("extension degree must be at least 1");
      if (d.modulus >= (std::uint64_t{1} << 32)) invalid("characteristic must be below 2^32");
      long double order = 1;
      for (unsigned i = 0; i < d.degree; ++i) order *= static_cast<long double>(d.modulus);
      if (order > 4.0e18L) invalid("field order too large");
      return std::make_shared<detail::FiniteFieldRing>(d.modulus, d.degree);
    }
    case RingKind::PolyOverField: {
      if (d.base.size() != 1) invalid("poly needs one base field");
      auto field = make_ring(d.base[0]);
      if (!field->is_field()) invalid("poly base " + d.base[0].to_string() + " is not a field");
      return std::make_shared<detail::PolyRing>(field);
    }
    case RingKind::Matrix2: {
      if (d.base.size() != 1) invalid("matrix2 needs one base ring");
      return std::make_shared<detail::Matrix2Ring>(make_ring(d.base[0]));
    }
    case RingKind::MixedTriangular2:
      return std::make_shared<detail::MixedTriangularRing>(d.orientation);
    case RingKind::CayleyLevel: {
      if (d.route == CayleyRoute::OreQuotient)
        invalid("quotient-route Cayley levels are built by cayley_double, not make_ring");
      if (d.base.size() != 1) invalid("cayley needs one scalar field");
      if (d.params.size() != d.level)
        invalid("cayley level " + std::to_string(d.level) + " needs " + std::to_string(d.level) + " parameters");
      if (d.level > 4) invalid("cayley towers are limited to level 4");
      auto field = make_ring(d.base[0]);
      if (!field->is_field()) invalid("cayley scalars " + d.base[0].to_string() + " do not form a field");
      for (const auto& mu : d.params)
        if (mu == 0) invalid("cayley parameter must be nonzero");
      RingHandle lower;
      RingElement mu;
      if (d.level > 0) {
        std::vector<mpq_class> lower_mus(d.params.begin(), d.params.end() - 1);
        lower = make_ring(RingDescriptor::cayley(d.level - 1, d.base[0], lower_mus));
        mu = lower->scalar_from_rational(d.params.back());
        if (mu.is_zero()) invalid("cayley parameter vanishes in " + d.base[0].to_string());
      }
      auto ring = std::make_shared<detail::CayleyRing>(d, field, lower, mu);
      ring->probe_flags();
      return ring;
    }
  }
  invalid("unknown ring kind");
}

}  // namespace

RingHandle make_ring(const RingDescriptor& descriptor) {
  static std::mutex mutex;
  static std::map<std::string, RingHandle> interned;
  const std::string key = descriptor.to_string();
  {
    std::lock_guard lock(mutex);
    if (auto it = interned.find(key); it != interned.end()) return it->second;
  }
  RingHandle ring = build(descriptor);
  std::lock_guard lock(mutex);
  return interned.emplace(key, ring).first->second;
}

const mpz_class& as_integer(const RingElement& a) {
  if (auto* v = std::get_if<mpz_class>(&a.payload())) return *v;
  throw Error(ErrorCode::UndefinedForKind, "element is not an integer");
}

const mpq_class& as_rational(const RingElement& a) {
  if (auto* v = std::get_if<mpq_class>(&a.payload())) return *v;
  throw Error(ErrorCode::UndefinedForKind, "element is not a rational");
}

const std::vector<std::uint64_t>& as_residues(const RingElement& a) {
  if (auto* v = std::get_if<std::vector<std::uint64_t>>(&a.payload())) return *v;
  throw Error(ErrorCode::UndefinedForKind, "element has no residue payload");
}

const std::vector<RingElement>& as_parts(const RingElement& a) {
  if (auto* v = std::get_if<std::vector<RingElement>>(&a.payload())) return *v;
  throw Error(ErrorCode::UndefinedForKind, "element has no composite payload");
}

namespace detail {

void coefficient_error(std::string_view text, const std::string& why) {
  throw Error(ErrorCode::CoefficientParseError, "\"" + std::string(text) + "\": " + why);
}

void probe_algebra_flags(const Ring& ring, bool& associative, bool& commutative) {
  associative = true;
  commutative = true;
  const auto basis = ring.basis();
  for (const auto& a : basis) {
    for (const auto& b : basis) {
      if (commutative && !ring.equal(ring.mul(a, b), ring.mul(b, a))) commutative = false;
      if (!associative) continue;
      for (const auto& c : basis) {
        if (!ring.equal(ring.mul(ring.mul(a, b), c), ring.mul(a, ring.mul(b, c)))) {
          associative = false;
          break;
        }
      }
    }
  }
}

}  // namespace detail

}  // namespace gnoe
