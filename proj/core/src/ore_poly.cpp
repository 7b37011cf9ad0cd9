#include "gnoe/ore_poly.hpp"

#include "gnoe/textio.hpp"

namespace gnoe {

std::string mode_name(Mode mode) { return mode == Mode::Standard ? "standard" : "flipped"; }

std::string side_name(Side side) { return side == Side::Left ? "left" : "right"; }

// ---------------------------------------------------------------------------
// Extension
// ---------------------------------------------------------------------------

Extension::Extension(RingHandle ring, AdditiveMap sigma, AdditiveMap delta, Mode mode)
    : ring_(std::move(ring)), sigma_(std::move(sigma)), delta_(std::move(delta)), mode_(mode) {}

ExtensionHandle Extension::make(RingHandle ring, AdditiveMap sigma, AdditiveMap delta, Mode mode,
                                std::optional<RingElement> mu) {
  if (!same_ring(*sigma.ring(), *ring) || !same_ring(*delta.ring(), *ring))
    throw Error(ErrorCode::OwnerMismatch, "sigma and delta must act on " + ring->descriptor().to_string());
  const LawReport unital = check_map_laws(sigma, delta, MapLaw::Unital, SampleBudget{});
  if (!unital.passed())
    throw Error(ErrorCode::HypothesisViolated, unital.violations.front().detail + " fails for " + sigma.describe() +
                                                   ", " + delta.describe());

  auto ext = std::make_shared<Extension>(ring, sigma, delta, mode);
  try {
    ext->sigma_inverse_ = invert_map(sigma);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotInvertible) throw;
  }
  if (!mu) return ext;

  auto restriction = [](const std::string& why) { throw Error(ErrorCode::RestrictionViolated, why); };
  if (mode != Mode::Flipped) restriction("the X^2 - mu quotient needs flipped mode");
  if (delta.kind() != MapKind::Zero) restriction("the X^2 - mu quotient needs delta = 0");
  const auto field = ring->base_field();
  if (!field) restriction(ring->descriptor().to_string() + " is not an algebra over a field");
  field->require_owned(*mu);
  if (mu->is_zero()) throw Error(ErrorCode::ZeroParameter, "mu must be nonzero");
  SampleBudget budget;
  budget.samples = 50;
  const LawReport involution = check_map_laws(sigma, delta, MapLaw::Involution, budget);
  if (!involution.passed()) restriction(sigma.describe() + " is not an involution");
  RingElement mu_ring = ring->scalar(*mu);
  if (!ring->equal(sigma(mu_ring), mu_ring)) restriction("sigma moves the scalar mu");
  ext->mu_ = std::move(mu);
  ext->mu_ring_ = std::move(mu_ring);
  return ext;
}

std::string Extension::describe() const {
  std::string out = ring_->descriptor().to_string() + "[X; " + sigma_.describe() + ", " + delta_.describe() + "]";
  if (mode_ == Mode::Flipped) out += "^fl";
  if (mu_) out += "/(X^2 - " + mu_->to_string() + ")";
  return out;
}

bool same_extension(const Extension& a, const Extension& b) {
  if (&a == &b) return true;
  if (!same_ring(*a.ring(), *b.ring()) || a.mode() != b.mode()) return false;
  if (a.sigma().describe() != b.sigma().describe() || a.delta().describe() != b.delta().describe()) return false;
  if (a.mu().has_value() != b.mu().has_value()) return false;
  return !a.mu() || *a.mu() == *b.mu();
}

std::optional<RingElement> sigma_preimage(const Extension& ext, std::size_t n, const RingElement& r) {
  if (r.is_zero() || r.is_one()) return r;
  if (const auto& inverse = ext.sigma_inverse()) {
    RingElement out = r;
    for (std::size_t k = 0; k < n; ++k) out = (*inverse)(out);
    return out;
  }
  return preimage_power(ext.sigma(), n, r);
}

RingElement sigma_power(const Extension& ext, std::size_t n, const RingElement& r) {
  RingElement out = r;
  for (std::size_t k = 0; k < n; ++k) out = ext.sigma()(out);
  return out;
}

// ---------------------------------------------------------------------------
// OrePolynomial
// ---------------------------------------------------------------------------

OrePolynomial::OrePolynomial(ExtensionHandle owner, std::vector<RingElement> coeffs)
    : owner_(std::move(owner)), coeffs_(std::move(coeffs)) {
  if (!owner_) throw Error(ErrorCode::OwnerMismatch, "polynomial without an extension");
  for (const auto& c : coeffs_) owner_->ring()->require_owned(c);
  if (owner_->has_quotient() && coeffs_.size() > 2) {
    *this = quotient_reduce(coeffs_, owner_);
    return;
  }
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

OrePolynomial OrePolynomial::zero(ExtensionHandle owner) { return OrePolynomial(std::move(owner), {}); }

OrePolynomial OrePolynomial::constant(ExtensionHandle owner, RingElement r) {
  return OrePolynomial(std::move(owner), {std::move(r)});
}

OrePolynomial OrePolynomial::monomial(ExtensionHandle owner, RingElement r, std::size_t n) {
  std::vector<RingElement> coeffs(n + 1, owner->ring()->zero());
  coeffs[n] = std::move(r);
  return OrePolynomial(std::move(owner), std::move(coeffs));
}

OrePolynomial OrePolynomial::x_power(ExtensionHandle owner, std::size_t n) {
  RingElement one = owner->ring()->one();
  return monomial(std::move(owner), std::move(one), n);
}

const Extension& OrePolynomial::extension() const {
  if (!owner_) throw Error(ErrorCode::OwnerMismatch, "uninitialised polynomial");
  return *owner_;
}

std::optional<std::size_t> OrePolynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

RingElement OrePolynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : extension().ring()->zero();
}

std::string OrePolynomial::to_string() const { return owner_ ? format_poly(*this) : "<unset>"; }

void require_same_owner(const OrePolynomial& p, const OrePolynomial& q) {
  if (!p.owner() || !q.owner()) throw Error(ErrorCode::OwnerMismatch, "uninitialised polynomial");
  if (!same_extension(*p.owner(), *q.owner()))
    throw Error(ErrorCode::OwnerMismatch, p.owner()->describe() + " vs " + q.owner()->describe());
}

OrePolynomial operator+(const OrePolynomial& p, const OrePolynomial& q) {
  require_same_owner(p, q);
  const Ring& R = *p.extension().ring();
  std::vector<RingElement> out(std::max(p.coeffs().size(), q.coeffs().size()), R.zero());
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) out[i] = p.coeffs()[i];
  for (std::size_t i = 0; i < q.coeffs().size(); ++i) out[i] = R.add(out[i], q.coeffs()[i]);
  return OrePolynomial(p.owner(), std::move(out));
}

OrePolynomial operator-(const OrePolynomial& p) {
  const Ring& R = *p.extension().ring();
  std::vector<RingElement> out;
  for (const auto& c : p.coeffs()) out.push_back(R.neg(c));
  return OrePolynomial(p.owner(), std::move(out));
}

OrePolynomial operator-(const OrePolynomial& p, const OrePolynomial& q) { return p + (-q); }

OrePolynomial operator*(const OrePolynomial& p, const OrePolynomial& q) { return poly_mul(p, q); }

bool operator==(const OrePolynomial& p, const OrePolynomial& q) {
  require_same_owner(p, q);
  if (p.coeffs().size() != q.coeffs().size()) return false;
  const Ring& R = *p.extension().ring();
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    if (!R.equal(p.coeffs()[i], q.coeffs()[i])) return false;
  return true;
}

OrePolynomial random_poly(const ExtensionHandle& owner, std::size_t max_degree, Rng& rng) {
  std::vector<RingElement> coeffs;
  for (std::size_t i = 0; i <= max_degree; ++i) coeffs.push_back(owner->ring()->random(rng));
  return OrePolynomial(owner, std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Products
// ---------------------------------------------------------------------------

RingElement tau(std::size_t n, const RingElement& a, const RingElement& b) { return n % 2 == 0 ? a * b : b * a; }

std::vector<RingElement> raw_product(const OrePolynomial& p, const OrePolynomial& q) {
  require_same_owner(p, q);
  if (p.is_zero() || q.is_zero()) return {};
  const Extension& ext = p.extension();
  const Ring& R = *ext.ring();
  const AdditiveMap& sigma = ext.sigma();
  const AdditiveMap& delta = ext.delta();
  const bool delta_zero = delta.kind() == MapKind::Zero;
  const bool flipped = ext.mode() == Mode::Flipped;

  std::vector<RingElement> out(p.coeffs().size() + q.coeffs().size() - 1, R.zero());
  for (std::size_t n = 0; n < q.coeffs().size(); ++n) {
    const RingElement& s = q.coeffs()[n];
    if (s.is_zero()) continue;
    // row[i] = pi_i^m(s), advanced one m at a time.
    std::vector<RingElement> row{s};
    for (std::size_t m = 0; m < p.coeffs().size(); ++m) {
      if (m > 0) {
        std::vector<RingElement> next(m + 1, R.zero());
        for (std::size_t i = 0; i <= m; ++i) {
          if (i >= 1 && !row[i - 1].is_zero()) next[i] = sigma(row[i - 1]);
          if (!delta_zero && i < m && !row[i].is_zero()) next[i] = R.add(next[i], delta(row[i]));
        }
        row = std::move(next);
      }
      const RingElement& r = p.coeffs()[m];
      if (r.is_zero()) continue;
      for (std::size_t i = 0; i <= m; ++i) {
        if (row[i].is_zero()) continue;
        const RingElement term = flipped ? tau(n, r, row[i]) : R.mul(r, row[i]);
        out[i + n] = R.add(out[i + n], term);
      }
    }
  }
  return out;
}

OrePolynomial poly_mul(const OrePolynomial& p, const OrePolynomial& q) {
  return OrePolynomial(p.owner(), raw_product(p, q));
}

OrePolynomial quotient_reduce(const std::vector<RingElement>& raw, const ExtensionHandle& owner) {
  if (!owner->has_quotient())
    throw Error(ErrorCode::QuotientNotConfigured, owner->describe() + " has no X^2 - mu quotient");
  if (owner->mode() != Mode::Flipped || owner->delta().kind() != MapKind::Zero)
    throw Error(ErrorCode::RestrictionViolated, owner->describe());
  const Ring& R = *owner->ring();
  const RingElement& mu = *owner->mu_in_ring();
  std::vector<RingElement> out(2, R.zero());
  RingElement mu_power = R.one();
  for (std::size_t d = 0; d < raw.size(); ++d) {
    if (d >= 2 && d % 2 == 0) mu_power = R.mul(mu_power, mu);
    R.require_owned(raw[d]);
    if (raw[d].is_zero()) continue;
    out[d % 2] = R.add(out[d % 2], d < 2 ? raw[d] : R.mul(mu_power, raw[d]));
  }
  return OrePolynomial(owner, std::move(out));
}

OrePolynomial associator(const OrePolynomial& p, const OrePolynomial& q, const OrePolynomial& s) {
  return poly_mul(poly_mul(p, q), s) - poly_mul(p, poly_mul(q, s));
}

// ---------------------------------------------------------------------------
// Right form
// ---------------------------------------------------------------------------

std::optional<std::size_t> RightForm::degree() const {
  if (coeffs.empty()) return std::nullopt;
  return coeffs.size() - 1;
}

RightForm to_right_form(const OrePolynomial& p) {
  const Extension& ext = p.extension();
  const Ring& R = *ext.ring();
  RightForm form{p.owner(), std::vector<RingElement>(p.coeffs().size(), R.zero())};
  OrePolynomial rest = p;
  while (!rest.is_zero()) {
    const std::size_t n = *rest.degree();
    const RingElement& lc = rest.coeffs().back();
    std::optional<RingElement> r;
    try {
      r = sigma_preimage(ext, n, lc);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PreimageUnavailable) throw;
      throw Error(ErrorCode::NotInvertible, e.what());
    }
    if (!r) {
      throw NotRightRepresentable(lc, n, R.format(lc) + " is not in the image of sigma^" +
                                             std::to_string(n));
    }
    form.coeffs[n] = *r;
    OrePolynomial next = rest - poly_mul(OrePolynomial::x_power(p.owner(), n), OrePolynomial::constant(p.owner(), *r));
    if (next.degree() >= rest.degree())
      throw Error(ErrorCode::ContractViolation, "right form step did not lower the degree");
    rest = std::move(next);
  }
  return form;
}

OrePolynomial from_right_form(const RightForm& form) {
  OrePolynomial acc = OrePolynomial::zero(form.owner);
  for (std::size_t i = 0; i < form.coeffs.size(); ++i) {
    if (form.coeffs[i].is_zero()) continue;
    acc = acc + poly_mul(OrePolynomial::x_power(form.owner, i), OrePolynomial::constant(form.owner, form.coeffs[i]));
  }
  return acc;
}

DegLc deg_lc(const OrePolynomial& p, Side side) {
  const Ring& R = *p.extension().ring();
  if (p.is_zero()) return {std::nullopt, R.zero()};
  if (side == Side::Left) return {p.degree(), p.coeffs().back()};
  RightForm form = to_right_form(p);
  return {form.degree(), form.coeffs.back()};
}

}  // namespace gnoe
