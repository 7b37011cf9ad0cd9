#include "rings_impl.hpp"
#include "univariate_text.hpp"

namespace gnoe::detail {

namespace {

// Splits "[[a,b],[c,d]]" into its four entry literals (row-major).
std::vector<std::string> split_matrix_literal(std::string_view text) {
  const std::string s = strip_whitespace(text);
  if (s.size() < 4 || s.front() != '[' || s.back() != ']') coefficient_error(text, "expected [[a,b],[c,d]]");
  const auto rows = split_top_level(std::string_view(s).substr(1, s.size() - 2), ',');
  if (rows.size() != 2) coefficient_error(text, "expected two rows");
  std::vector<std::string> entries;
  for (const auto& row : rows) {
    if (row.size() < 2 || row.front() != '[' || row.back() != ']') coefficient_error(text, "row is not bracketed");
    const auto cells = split_top_level(std::string_view(row).substr(1, row.size() - 2), ',');
    if (cells.size() != 2) coefficient_error(text, "expected two entries per row");
    for (const auto& cell : cells) {
      if (cell.empty()) coefficient_error(text, "empty entry");
      entries.push_back(cell);
    }
  }
  return entries;
}

std::string join_matrix(const std::vector<std::string>& e) {
  return "[[" + e[0] + "," + e[1] + "],[" + e[2] + "," + e[3] + "]]";
}

}  // namespace

// --- Matrix2 -------------------------------------------------------------------

Matrix2Ring::Matrix2Ring(RingHandle base) : Ring(RingDescriptor::matrix2(base->descriptor())), base_(std::move(base)) {}

RingElement Matrix2Ring::from_entries(std::vector<RingElement> entries) const {
  if (entries.size() != 4) throw Error(ErrorCode::ContractViolation, "a 2x2 matrix needs 4 entries");
  for (const auto& e : entries) base_->require_owned(e);
  return make(std::move(entries));
}

RingElement Matrix2Ring::unit(int row, int col) const {
  std::vector<RingElement> e(4, base_->zero());
  e[static_cast<std::size_t>(2 * row + col)] = base_->one();
  return make(std::move(e));
}

RingElement Matrix2Ring::zero() const { return make(std::vector<RingElement>(4, base_->zero())); }

RingElement Matrix2Ring::one() const {
  return make(std::vector<RingElement>{base_->one(), base_->zero(), base_->zero(), base_->one()});
}

RingElement Matrix2Ring::add(const RingElement& a, const RingElement& b) const {
  const auto& x = as_parts(a);
  const auto& y = as_parts(b);
  std::vector<RingElement> out;
  for (std::size_t i = 0; i < 4; ++i) out.push_back(base_->add(x[i], y[i]));
  return make(std::move(out));
}

RingElement Matrix2Ring::neg(const RingElement& a) const {
  std::vector<RingElement> out;
  for (const auto& e : as_parts(a)) out.push_back(base_->neg(e));
  return make(std::move(out));
}

RingElement Matrix2Ring::mul(const RingElement& a, const RingElement& b) const {
  const auto& x = as_parts(a);
  const auto& y = as_parts(b);
  auto dot = [&](std::size_t r, std::size_t c) {
    return base_->add(base_->mul(x[2 * r], y[c]), base_->mul(x[2 * r + 1], y[2 + c]));
  };
  return make(std::vector<RingElement>{dot(0, 0), dot(0, 1), dot(1, 0), dot(1, 1)});
}

RingElement Matrix2Ring::from_integer(const mpz_class& n) const {
  const RingElement d = base_->from_integer(n);
  return make(std::vector<RingElement>{d, base_->zero(), base_->zero(), d});
}

std::string Matrix2Ring::format(const RingElement& a) const {
  std::vector<std::string> cells;
  for (const auto& e : as_parts(a)) cells.push_back(base_->format(e));
  return join_matrix(cells);
}

RingElement Matrix2Ring::parse(std::string_view text) const {
  std::vector<RingElement> entries;
  for (const auto& cell : split_matrix_literal(text)) entries.push_back(base_->parse(cell));
  return make(std::move(entries));
}

RingElement Matrix2Ring::random(Rng& rng) const {
  std::vector<RingElement> entries;
  for (int i = 0; i < 4; ++i) entries.push_back(base_->random(rng));
  return make(std::move(entries));
}

std::optional<std::uint64_t> Matrix2Ring::cardinality() const {
  auto n = base_->cardinality();
  if (!n) return std::nullopt;
  std::uint64_t total = 1;
  for (int i = 0; i < 4; ++i) {
    if (total > (std::uint64_t{1} << 62) / *n) return std::nullopt;
    total *= *n;
  }
  return total;
}

RingElement Matrix2Ring::element_at(std::uint64_t index) const {
  const auto n = base_->cardinality();
  if (!n || !cardinality()) return Ring::element_at(index);
  std::vector<RingElement> entries;
  for (int i = 0; i < 4; ++i) {
    entries.push_back(base_->element_at(index % *n));
    index /= *n;
  }
  return make(std::move(entries));
}

std::uint64_t Matrix2Ring::index_of(const RingElement& a) const {
  require_owned(a);
  const auto n = base_->cardinality();
  if (!n || !cardinality()) return Ring::index_of(a);
  const auto& e = as_parts(a);
  std::uint64_t index = 0;
  for (std::size_t i = 4; i-- > 0;) index = index * *n + base_->index_of(e[i]);
  return index;
}

std::optional<std::size_t> Matrix2Ring::dimension() const {
  if (!base_->is_field() || base_->base_field().get() != base_.get()) return std::nullopt;
  return 4;
}

std::vector<RingElement> Matrix2Ring::basis() const {
  if (!dimension()) throw Error(ErrorCode::NotAlgebraOverField, descriptor().to_string());
  return {unit(0, 0), unit(0, 1), unit(1, 0), unit(1, 1)};
}

std::vector<RingElement> Matrix2Ring::coordinates(const RingElement& a) const {
  if (!dimension()) throw Error(ErrorCode::NotAlgebraOverField, descriptor().to_string());
  require_owned(a);
  return as_parts(a);
}

RingElement Matrix2Ring::from_coordinates(std::span<const RingElement> coords) const {
  if (!dimension() || coords.size() != 4) throw Error(ErrorCode::NotAlgebraOverField, descriptor().to_string());
  return from_entries(std::vector<RingElement>(coords.begin(), coords.end()));
}

RingElement Matrix2Ring::scalar(const RingElement& lambda) const {
  base_->require_owned(lambda);
  return make(std::vector<RingElement>{lambda, base_->zero(), base_->zero(), lambda});
}

std::vector<std::string> Matrix2Ring::basis_labels() const { return {"E11", "E12", "E21", "E22"}; }

// --- Mixed triangular ------------------------------------------------------------

MixedTriangularRing::MixedTriangularRing(Orientation orientation)
    : Ring(RingDescriptor::mixed_triangular(orientation)),
      orientation_(orientation),
      integers_(integers_ring()),
      rationals_(rationals_ring()) {}

RingElement MixedTriangularRing::from_parts(const mpz_class& z, const mpq_class& q, const mpq_class& w) const {
  const auto& Q = static_cast<const RationalRing&>(*rationals_);
  return make(std::vector<RingElement>{static_cast<const IntegerRing&>(*integers_).value(z), Q.value(q), Q.value(w)});
}

MixedTriangularRing::Parts MixedTriangularRing::parts(const RingElement& a) const {
  require_owned(a);
  const auto& p = as_parts(a);
  return {as_integer(p[0]), as_rational(p[1]), as_rational(p[2])};
}

RingElement MixedTriangularRing::zero() const { return from_parts(0, 0, 0); }
RingElement MixedTriangularRing::one() const { return from_parts(1, 0, 1); }

RingElement MixedTriangularRing::add(const RingElement& a, const RingElement& b) const {
  const auto& x = as_parts(a);
  const auto& y = as_parts(b);
  return from_parts(as_integer(x[0]) + as_integer(y[0]), as_rational(x[1]) + as_rational(y[1]),
                    as_rational(x[2]) + as_rational(y[2]));
}

RingElement MixedTriangularRing::neg(const RingElement& a) const {
  const auto& x = as_parts(a);
  return from_parts(-as_integer(x[0]), -as_rational(x[1]), -as_rational(x[2]));
}

RingElement MixedTriangularRing::mul(const RingElement& a, const RingElement& b) const {
  const auto& x = as_parts(a);
  const auto& y = as_parts(b);
  const mpz_class& z1 = as_integer(x[0]);
  const mpz_class& z2 = as_integer(y[0]);
  const mpq_class &q1 = as_rational(x[1]), &q2 = as_rational(y[1]);
  const mpq_class &w1 = as_rational(x[2]), &w2 = as_rational(y[2]);
  // Upper [[z,q],[0,w]]: off-diagonal z1 q2 + q1 w2.  Lower [[z,0],[q,w]]: q1 z2 + w1 q2.
  const mpq_class off = orientation_ == Orientation::Upper ? mpq_class(mpq_class(z1) * q2 + q1 * w2)
                                                           : mpq_class(q1 * mpq_class(z2) + w1 * q2);
  return from_parts(z1 * z2, off, w1 * w2);
}

RingElement MixedTriangularRing::from_integer(const mpz_class& n) const { return from_parts(n, 0, mpq_class(n)); }

std::string MixedTriangularRing::format(const RingElement& a) const {
  const auto p = parts(a);
  if (orientation_ == Orientation::Upper) return join_matrix({p.z.get_str(), p.q.get_str(), "0", p.w.get_str()});
  return join_matrix({p.z.get_str(), "0", p.q.get_str(), p.w.get_str()});
}

RingElement MixedTriangularRing::parse(std::string_view text) const {
  const auto cells = split_matrix_literal(text);
  const std::size_t zero_at = orientation_ == Orientation::Upper ? 2 : 1;
  const std::size_t q_at = orientation_ == Orientation::Upper ? 1 : 2;
  if (!rationals_->parse(cells[zero_at]).is_zero()) coefficient_error(text, "entry must be 0 in " + descriptor().to_string());
  const mpq_class z = as_rational(rationals_->parse(cells[0]));
  if (z.get_den() != 1) coefficient_error(text, "the (1,1) entry must be an integer");
  return from_parts(z.get_num(), as_rational(rationals_->parse(cells[q_at])), as_rational(rationals_->parse(cells[3])));
}

RingElement MixedTriangularRing::random(Rng& rng) const {
  const auto& Q = static_cast<const RationalRing&>(*rationals_);
  return from_parts(mpz_class(static_cast<long>(uniform_between(rng, -9, 9))), as_rational(Q.random(rng)),
                    as_rational(Q.random(rng)));
}

}  // namespace gnoe::detail
