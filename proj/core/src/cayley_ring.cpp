#include "rings_impl.hpp"
#include "univariate_text.hpp"

namespace gnoe::detail {

std::string format_cayley_coords(const std::vector<RingElement>& coords, const Ring& field) {
  std::string out = "(";
  const std::size_t half = coords.size() / 2;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i > 0) out += (i == half ? "|" : ",");
    out += field.format(coords[i]);
  }
  return out + ")";
}

std::vector<RingElement> parse_cayley_coords(std::string_view text, const Ring& field, std::size_t dimension) {
  std::string s = strip_whitespace(text);
  if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  const bool grouped = s.find(',') != std::string::npos || s.find('|') != std::string::npos;
  if (!grouped) {
    // A bare scalar literal.
    std::vector<RingElement> coords(dimension, field.zero());
    coords[0] = field.parse(s);
    return coords;
  }
  const auto halves = split_top_level(s, '|');
  const std::size_t expected_halves = dimension > 1 ? 2 : 1;
  if (halves.size() != expected_halves) coefficient_error(text, "expected " + std::to_string(dimension) + " coordinates");
  std::vector<RingElement> coords;
  for (const auto& half : halves) {
    const auto cells = split_top_level(half, ',');
    if (cells.size() != dimension / expected_halves) coefficient_error(text, "pair halves must have equal length");
    for (const auto& cell : cells) {
      if (cell.empty()) coefficient_error(text, "empty coordinate");
      coords.push_back(field.parse(cell));
    }
  }
  return coords;
}

std::vector<std::string> cayley_labels(unsigned level) {
  switch (level) {
    case 0: return {"1"};
    case 1: return {"1", "i"};
    case 2: return {"1", "i", "j", "k"};
    default: break;
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < (std::size_t{1} << level); ++i) out.push_back("e" + std::to_string(i));
  return out;
}

// Level 0 payload: {x} with x in the field.  Level l > 0: {a, b} in the level l-1 ring.
CayleyRing::CayleyRing(RingDescriptor descriptor, RingHandle field, RingHandle lower, RingElement mu)
    : Ring(std::move(descriptor)), field_(std::move(field)), lower_(std::move(lower)), mu_(std::move(mu)) {}

void CayleyRing::probe_flags() { probe_algebra_flags(*this, associative_, commutative_); }

RingElement CayleyRing::pair(RingElement a, RingElement b) const {
  lower_->require_owned(a);
  lower_->require_owned(b);
  return make(std::vector<RingElement>{std::move(a), std::move(b)});
}

RingElement CayleyRing::zero() const {
  if (!lower_) return make(std::vector<RingElement>{field_->zero()});
  return make(std::vector<RingElement>{lower_->zero(), lower_->zero()});
}

RingElement CayleyRing::one() const {
  if (!lower_) return make(std::vector<RingElement>{field_->one()});
  return make(std::vector<RingElement>{lower_->one(), lower_->zero()});
}

RingElement CayleyRing::add(const RingElement& a, const RingElement& b) const {
  const auto& x = as_parts(a);
  const auto& y = as_parts(b);
  const Ring& r = lower_ ? *lower_ : *field_;
  std::vector<RingElement> out;
  for (std::size_t i = 0; i < x.size(); ++i) out.push_back(r.add(x[i], y[i]));
  return make(std::move(out));
}

RingElement CayleyRing::neg(const RingElement& a) const {
  const Ring& r = lower_ ? *lower_ : *field_;
  std::vector<RingElement> out;
  for (const auto& e : as_parts(a)) out.push_back(r.neg(e));
  return make(std::move(out));
}

RingElement CayleyRing::mul(const RingElement& x, const RingElement& y) const {
  const auto& p = as_parts(x);
  const auto& q = as_parts(y);
  if (!lower_) return make(std::vector<RingElement>{field_->mul(p[0], q[0])});
  const Ring& L = *lower_;
  const RingElement &a = p[0], &b = p[1], &c = q[0], &d = q[1];
  RingElement first = L.add(L.mul(a, c), L.mul(mu_, L.mul(L.conjugate(d), b)));
  RingElement second = L.add(L.mul(d, a), L.mul(b, L.conjugate(c)));
  return make(std::vector<RingElement>{std::move(first), std::move(second)});
}

RingElement CayleyRing::conjugate(const RingElement& a) const {
  require_owned(a);
  const auto& p = as_parts(a);
  if (!lower_) return a;
  return make(std::vector<RingElement>{lower_->conjugate(p[0]), lower_->neg(p[1])});
}

RingElement CayleyRing::from_integer(const mpz_class& n) const { return scalar(field_->from_integer(n)); }

std::vector<RingElement> CayleyRing::coordinates(const RingElement& a) const {
  require_owned(a);
  const auto& p = as_parts(a);
  if (!lower_) return {p[0]};
  auto out = lower_->coordinates(p[0]);
  auto tail = lower_->coordinates(p[1]);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

RingElement CayleyRing::from_coordinates(std::span<const RingElement> coords) const {
  const std::size_t dim = *dimension();
  if (coords.size() != dim) throw Error(ErrorCode::ContractViolation, "expected " + std::to_string(dim) + " coordinates");
  if (!lower_) {
    field_->require_owned(coords[0]);
    return make(std::vector<RingElement>{coords[0]});
  }
  return make(std::vector<RingElement>{lower_->from_coordinates(coords.first(dim / 2)),
                                       lower_->from_coordinates(coords.subspan(dim / 2))});
}

RingElement CayleyRing::scalar(const RingElement& lambda) const {
  field_->require_owned(lambda);
  std::vector<RingElement> coords(*dimension(), field_->zero());
  coords[0] = lambda;
  return from_coordinates(coords);
}

std::string CayleyRing::format(const RingElement& a) const {
  if (!lower_) return field_->format(as_parts(a)[0]);
  return format_cayley_coords(coordinates(a), *field_);
}

RingElement CayleyRing::parse(std::string_view text) const {
  return from_coordinates(parse_cayley_coords(text, *field_, *dimension()));
}

RingElement CayleyRing::random(Rng& rng) const {
  std::vector<RingElement> coords;
  for (std::size_t i = 0; i < *dimension(); ++i) coords.push_back(field_->random(rng));
  return from_coordinates(coords);
}

std::optional<std::uint64_t> CayleyRing::cardinality() const {
  auto n = field_->cardinality();
  if (!n) return std::nullopt;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < *dimension(); ++i) {
    if (total > (std::uint64_t{1} << 62) / *n) return std::nullopt;
    total *= *n;
  }
  return total;
}

RingElement CayleyRing::element_at(std::uint64_t index) const {
  const auto n = field_->cardinality();
  if (!cardinality()) return Ring::element_at(index);
  std::vector<RingElement> coords;
  for (std::size_t i = 0; i < *dimension(); ++i) {
    coords.push_back(field_->element_at(index % *n));
    index /= *n;
  }
  return from_coordinates(coords);
}

std::uint64_t CayleyRing::index_of(const RingElement& a) const {
  if (!cardinality()) return Ring::index_of(a);
  const auto n = *field_->cardinality();
  const auto coords = coordinates(a);
  std::uint64_t index = 0;
  for (std::size_t i = coords.size(); i-- > 0;) index = index * n + field_->index_of(coords[i]);
  return index;
}

// a^{-1} = a* / (a a*) whenever a a* is a nonzero scalar.
RingElement CayleyRing::inverse(const RingElement& a) const {
  if (!lower_) return make(std::vector<RingElement>{field_->inverse(as_parts(a)[0])});
  const auto norm = coordinates(mul(a, conjugate(a)));
  for (std::size_t i = 1; i < norm.size(); ++i)
    if (!norm[i].is_zero()) throw Error(ErrorCode::NotInvertible, format(a) + " has a non-scalar norm");
  if (norm[0].is_zero()) throw Error(ErrorCode::NotInvertible, format(a) + " has zero norm");
  return mul(conjugate(a), scalar(field_->inverse(norm[0])));
}

std::vector<std::string> CayleyRing::basis_labels() const { return cayley_labels(level()); }

}  // namespace gnoe::detail
