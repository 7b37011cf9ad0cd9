#ifndef GNOE_ORE_POLY_HPP
#define GNOE_ORE_POLY_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gnoe/ring.hpp"
#include "gnoe/twist.hpp"

namespace gnoe {

enum class Mode { Standard, Flipped };

std::string mode_name(Mode mode);

class Extension;
using ExtensionHandle = std::shared_ptr<const Extension>;

/// S = R[X; sigma, delta] or R[X; sigma, delta]^fl, optionally modulo X^2 - mu.
class Extension : public std::enable_shared_from_this<Extension> {
 public:
  /// Validates sigma(1) = 1 and delta(1) = 0 (HypothesisViolated). With a
  /// quotient: flipped mode, delta = 0, sigma an involution fixing scalars,
  /// mu a nonzero scalar of the base field (RestrictionViolated, ZeroParameter).
  /// `mu` is an element of ring->base_field().
  static ExtensionHandle make(RingHandle ring, AdditiveMap sigma, AdditiveMap delta, Mode mode,
                              std::optional<RingElement> mu = std::nullopt);

  const RingHandle& ring() const { return ring_; }
  const AdditiveMap& sigma() const { return sigma_; }
  const AdditiveMap& delta() const { return delta_; }
  Mode mode() const { return mode_; }
  bool has_quotient() const { return mu_.has_value(); }
  /// mu as a field scalar, and mu * 1 in R.
  const std::optional<RingElement>& mu() const { return mu_; }
  const std::optional<RingElement>& mu_in_ring() const { return mu_ring_; }
  /// The inverse of sigma, when invert_map succeeds.
  const std::optional<AdditiveMap>& sigma_inverse() const { return sigma_inverse_; }

  std::string describe() const;

  Extension(RingHandle ring, AdditiveMap sigma, AdditiveMap delta, Mode mode);

 private:
  RingHandle ring_;
  AdditiveMap sigma_;
  AdditiveMap delta_;
  Mode mode_;
  std::optional<RingElement> mu_;
  std::optional<RingElement> mu_ring_;
  std::optional<AdditiveMap> sigma_inverse_;
};

bool same_extension(const Extension& a, const Extension& b);

/// Some r' with sigma^n(r') = r: through sigma_inverse when present, else
/// preimage_power. nullopt when none exists; PreimageUnavailable when the
/// question cannot be decided.
std::optional<RingElement> sigma_preimage(const Extension& ext, std::size_t n, const RingElement& r);

/// sigma^n(r).
RingElement sigma_power(const Extension& ext, std::size_t n, const RingElement& r);

/// r_0 + r_1 x + ... + r_n x^n. Trailing zeros are stripped; with a quotient
/// the sequence is kept reduced (n <= 1).
class OrePolynomial {
 public:
  OrePolynomial() = default;
  OrePolynomial(ExtensionHandle owner, std::vector<RingElement> coeffs);

  static OrePolynomial zero(ExtensionHandle owner);
  static OrePolynomial constant(ExtensionHandle owner, RingElement r);
  static OrePolynomial monomial(ExtensionHandle owner, RingElement r, std::size_t n);
  /// 1 x^n.
  static OrePolynomial x_power(ExtensionHandle owner, std::size_t n);

  const ExtensionHandle& owner() const { return owner_; }
  const Extension& extension() const;
  const std::vector<RingElement>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// nullopt is -infinity.
  std::optional<std::size_t> degree() const;
  /// r_i, zero beyond the degree.
  RingElement coeff(std::size_t i) const;
  std::string to_string() const;

  friend OrePolynomial operator+(const OrePolynomial& p, const OrePolynomial& q);
  friend OrePolynomial operator-(const OrePolynomial& p, const OrePolynomial& q);
  friend OrePolynomial operator-(const OrePolynomial& p);
  friend OrePolynomial operator*(const OrePolynomial& p, const OrePolynomial& q);
  friend bool operator==(const OrePolynomial& p, const OrePolynomial& q);

 private:
  ExtensionHandle owner_;
  std::vector<RingElement> coeffs_;
};

void require_same_owner(const OrePolynomial& p, const OrePolynomial& q);

/// Coefficients drawn independently by Ring::random for degrees 0..max_degree.
OrePolynomial random_poly(const ExtensionHandle& owner, std::size_t max_degree, Rng& rng);

/// tau_n(a, b): ab for even n, ba for odd n.
RingElement tau(std::size_t n, const RingElement& a, const RingElement& b);

/// The product by biadditive extension of the monomial rule, before any
/// quotient reduction. Entry k is the coefficient of x^k.
std::vector<RingElement> raw_product(const OrePolynomial& p, const OrePolynomial& q);

/// p q. On an owner with a quotient the result is reduced.
OrePolynomial poly_mul(const OrePolynomial& p, const OrePolynomial& q);

/// Rewrites r x^(2k+e) -> mu^k r x^e. QuotientNotConfigured without a quotient.
OrePolynomial quotient_reduce(const std::vector<RingElement>& raw, const ExtensionHandle& owner);

/// Associator (pq)s - p(qs).
OrePolynomial associator(const OrePolynomial& p, const OrePolynomial& q, const OrePolynomial& s);

/// r_0 + x r_1 + ... + x^n r_n.
struct RightForm {
  ExtensionHandle owner;
  std::vector<RingElement> coeffs;
  std::optional<std::size_t> degree() const;
};

/// Raised when some required sigma-preimage does not exist.
class NotRightRepresentable : public Error {
 public:
  NotRightRepresentable(RingElement witness, std::size_t degree, const std::string& message)
      : Error(ErrorCode::NotRightRepresentable, message), witness_(std::move(witness)), degree_(degree) {}
  /// The coefficient with no preimage under sigma^degree.
  const RingElement& witness() const { return witness_; }
  std::size_t degree() const { return degree_; }

 private:
  RingElement witness_;
  std::size_t degree_;
};

/// Top-down conversion: r'_n = sigma^-n(lc), subtract x^n r'_n, recurse.
/// Throws NotRightRepresentable, or NotInvertible when no preimage search is possible.
RightForm to_right_form(const OrePolynomial& p);
OrePolynomial from_right_form(const RightForm& form);

enum class Side { Left, Right };

std::string side_name(Side side);

struct DegLc {
  std::optional<std::size_t> degree;  // nullopt is -infinity
  RingElement coefficient;
};

/// Left: read off the left form. Right: read off the right form.
DegLc deg_lc(const OrePolynomial& p, Side side);

}  // namespace gnoe

#endif  // GNOE_ORE_POLY_HPP
