#include "gnoe/constructions.hpp"

#include <sstream>

#include "rings_impl.hpp"

namespace gnoe {

namespace {

/// Pairs (a, b) over the lower algebra; level >= 1. Products run through
/// lower[X; star, 0]^fl / (X^2 - mu).
class CayleyQuotientRing final : public Ring {
 public:
  CayleyQuotientRing(RingDescriptor descriptor, InvolutiveAlgebra lower, ExtensionHandle ext)
      : Ring(std::move(descriptor)), lower_(std::move(lower)), ext_(std::move(ext)), field_(lower_.field()) {}

  const ExtensionHandle& extension() const { return ext_; }
  unsigned level() const { return descriptor().level; }
  void probe_flags() { detail::probe_algebra_flags(*this, associative_, commutative_); }

  RingElement pair(RingElement a, RingElement b) const {
    lower_.ring->require_owned(a);
    lower_.ring->require_owned(b);
    return make(std::vector<RingElement>{std::move(a), std::move(b)});
  }

  RingElement zero() const override { return pair(lower_.ring->zero(), lower_.ring->zero()); }
  RingElement one() const override { return pair(lower_.ring->one(), lower_.ring->zero()); }

  RingElement add(const RingElement& x, const RingElement& y) const override {
    const auto &p = as_parts(x), &q = as_parts(y);
    return pair(lower_.ring->add(p[0], q[0]), lower_.ring->add(p[1], q[1]));
  }

  RingElement neg(const RingElement& x) const override {
    const auto& p = as_parts(x);
    return pair(lower_.ring->neg(p[0]), lower_.ring->neg(p[1]));
  }

  RingElement mul(const RingElement& x, const RingElement& y) const override {
    const auto &p = as_parts(x), &q = as_parts(y);
    const OrePolynomial product = OrePolynomial(ext_, {p[0], p[1]}) * OrePolynomial(ext_, {q[0], q[1]});
    return pair(product.coeff(0), product.coeff(1));
  }

  RingElement conjugate(const RingElement& x) const override {
    require_owned(x);
    const auto& p = as_parts(x);
    return pair(lower_.star(p[0]), lower_.ring->neg(p[1]));
  }

  RingElement from_integer(const mpz_class& n) const override { return scalar(field_->from_integer(n)); }

  std::string format(const RingElement& a) const override {
    return detail::format_cayley_coords(coordinates(a), *field_);
  }

  RingElement parse(std::string_view text) const override {
    return from_coordinates(detail::parse_cayley_coords(text, *field_, *dimension()));
  }

  RingElement random(Rng& rng) const override {
    return pair(lower_.ring->random(rng), lower_.ring->random(rng));
  }

  bool is_associative() const override { return associative_; }
  bool is_commutative() const override { return commutative_; }
  RingHandle base_field() const override { return field_; }
  std::optional<std::size_t> dimension() const override { return std::size_t{1} << level(); }

  std::vector<RingElement> coordinates(const RingElement& a) const override {
    require_owned(a);
    const auto& p = as_parts(a);
    auto out = lower_.ring->coordinates(p[0]);
    auto tail = lower_.ring->coordinates(p[1]);
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
  }

  RingElement from_coordinates(std::span<const RingElement> coords) const override {
    const std::size_t dim = *dimension();
    if (coords.size() != dim) throw Error(ErrorCode::ContractViolation, "expected " + std::to_string(dim) + " coordinates");
    return pair(lower_.ring->from_coordinates(coords.first(dim / 2)),
                lower_.ring->from_coordinates(coords.subspan(dim / 2)));
  }

  RingElement scalar(const RingElement& lambda) const override {
    return pair(lower_.ring->scalar(lambda), lower_.ring->zero());
  }

  std::optional<std::uint64_t> cardinality() const override {
    auto n = lower_.ring->cardinality();
    if (!n || *n > (std::uint64_t{1} << 31)) return std::nullopt;
    return *n * *n;
  }

  RingElement element_at(std::uint64_t index) const override {
    const auto n = lower_.ring->cardinality();
    if (!cardinality()) return Ring::element_at(index);
    return pair(lower_.ring->element_at(index % *n), lower_.ring->element_at(index / *n));
  }

  std::uint64_t index_of(const RingElement& a) const override {
    if (!cardinality()) return Ring::index_of(a);
    const auto& p = as_parts(a);
    return lower_.ring->index_of(p[0]) + *lower_.ring->cardinality() * lower_.ring->index_of(p[1]);
  }

  // a^-1 = a* / (a a*) whenever a a* is a nonzero scalar.
  RingElement inverse(const RingElement& a) const override {
    const auto norm = coordinates(mul(a, conjugate(a)));
    for (std::size_t i = 1; i < norm.size(); ++i)
      if (!norm[i].is_zero()) throw Error(ErrorCode::NotInvertible, format(a) + " has a non-scalar norm");
    if (norm[0].is_zero()) throw Error(ErrorCode::NotInvertible, format(a) + " has zero norm");
    return mul(conjugate(a), scalar(field_->inverse(norm[0])));
  }

  std::vector<std::string> basis_labels() const override { return detail::cayley_labels(level()); }

 private:
  InvolutiveAlgebra lower_;
  ExtensionHandle ext_;
  RingHandle field_;
  bool associative_ = true;
  bool commutative_ = true;
};

bool is_field_itself(const Ring& ring) { return ring.base_field().get() == &ring && ring.is_field(); }

std::string label_term(const RingElement& c, const std::string& label, const Ring& field) {
  std::string coeff = field.format(c);
  if (label == "1") return coeff;
  if (c.is_one()) return label;
  if (field.neg(c).is_one()) return "-" + label;
  return coeff + label;
}

std::string combination_text(const Ring& ring, const RingElement& a, const std::vector<std::string>& labels) {
  const auto coords = ring.coordinates(a);
  const Ring& field = *ring.base_field();
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].is_zero()) continue;
    std::string term = label_term(coords[i], labels[i], field);
    if (!out.empty()) out += term.front() == '-' ? term : "+" + term;
    else out = term;
  }
  return out.empty() ? "0" : out;
}

std::vector<std::string> labels_of(const Ring& ring) {
  if (ring.dimension() == std::optional<std::size_t>(1)) return {"1"};
  return ring.basis_labels();
}

std::vector<mpq_class> params_of(const RingDescriptor& d) {
  return d.kind == RingKind::CayleyLevel ? d.params : std::vector<mpq_class>{};
}

}  // namespace

InvolutiveAlgebra InvolutiveAlgebra::scalars(RingHandle field) {
  if (!is_field_itself(*field)) throw Error(ErrorCode::NotAlgebraOverField, field->descriptor().to_string() + " is not a field");
  AdditiveMap star = AdditiveMap::identity(field);
  return {std::move(field), std::move(star)};
}

InvolutiveAlgebra cayley_double(const InvolutiveAlgebra& algebra, const mpq_class& mu) {
  const RingHandle& A = algebra.ring;
  const RingHandle field = A->base_field();
  if (!field || !A->dimension())
    throw Error(ErrorCode::NotAlgebraOverField, A->descriptor().to_string() + " is not a finite-dimensional algebra");
  const RingDescriptor& d = A->descriptor();
  if (!is_field_itself(*A) && d.kind != RingKind::CayleyLevel)
    throw Error(ErrorCode::NotAlgebraOverField, "doubling starts from a field or a Cayley level");
  if (mu == 0) throw Error(ErrorCode::ZeroParameter, "mu must be nonzero");
  const RingElement mu_scalar = field->scalar_from_rational(mu);
  if (mu_scalar.is_zero()) throw Error(ErrorCode::ZeroParameter, "mu vanishes in " + field->descriptor().to_string());

  SampleBudget basis_only;
  basis_only.mode = SampleBudget::Mode::Basis;
  const auto law = check_map_laws(algebra.star, AdditiveMap::zero(A), MapLaw::Involution, basis_only, 1);
  if (!law.passed()) throw Error(ErrorCode::HypothesisViolated, "star is not an involution on the basis of " + d.to_string());

  auto ext = Extension::make(A, algebra.star, AdditiveMap::zero(A), Mode::Flipped, mu_scalar);
  auto params = params_of(d);
  params.push_back(mu);
  const unsigned level = d.kind == RingKind::CayleyLevel ? d.level + 1 : 1;
  RingDescriptor desc = RingDescriptor::cayley(level, field->descriptor(), std::move(params));
  desc.route = CayleyRoute::OreQuotient;

  auto ring = std::make_shared<CayleyQuotientRing>(std::move(desc), algebra, std::move(ext));
  ring->probe_flags();
  RingHandle handle = ring;
  return {handle, AdditiveMap::conjugation(handle)};
}

RingHandle build_ring(const RingDescriptor& descriptor) {
  if (descriptor.kind != RingKind::CayleyLevel || descriptor.route != CayleyRoute::OreQuotient)
    return make_ring(descriptor);
  RingDescriptor closed = descriptor;
  closed.route = CayleyRoute::ClosedForm;
  make_ring(closed);  // validates level, field and parameters
  InvolutiveAlgebra algebra = InvolutiveAlgebra::scalars(make_ring(descriptor.base[0]));
  for (const auto& mu : descriptor.params) algebra = cayley_double(algebra, mu);
  return algebra.ring;
}

ExtensionHandle doubling_extension(const Ring& ring) {
  if (auto* q = dynamic_cast<const CayleyQuotientRing*>(&ring)) return q->extension();
  return nullptr;
}

AlgebraProperties probe_properties(const InvolutiveAlgebra& algebra) {
  const Ring& A = *algebra.ring;
  const auto basis = A.basis();
  AlgebraProperties out;
  for (const auto& e : basis) {
    if (!A.equal(algebra.star(algebra.star(e)), e)) out.star_involution = false;
    for (const auto& f : basis) {
      const auto ef = A.mul(e, f);
      if (!A.equal(ef, A.mul(f, e)) && !out.commutator_witness) {
        out.commutative = false;
        out.commutator_witness = std::make_pair(e, f);
      }
      if (!A.equal(algebra.star(ef), A.mul(algebra.star(f), algebra.star(e)))) out.star_involution = false;
      for (const auto& g : basis) {
        if (out.associator_witness) break;
        if (!associator(e, f, g).is_zero()) {
          out.associative = false;
          out.associator_witness = std::vector<RingElement>{e, f, g};
        }
      }
    }
  }
  // Additivity makes star Z-linear; over Q checking 1 covers every scalar.
  const Ring& F = *algebra.field();
  std::vector<RingElement> scalars{F.one()};
  if (auto n = F.cardinality(); n && *n <= 4096)
    for (std::uint64_t i = 0; i < *n; ++i) scalars.push_back(F.element_at(i));
  for (const auto& lambda : scalars) {
    const auto s = A.scalar(lambda);
    if (!A.equal(algebra.star(s), s)) out.star_fixes_scalars = false;
  }
  return out;
}

std::vector<TowerLevel> cayley_tower(RingHandle field, const std::vector<mpq_class>& mus) {
  std::vector<TowerLevel> tower;
  InvolutiveAlgebra current = InvolutiveAlgebra::scalars(field);
  for (unsigned level = 0;; ++level) {
    TowerLevel entry{level, current, probe_properties(current)};
    if (level > 0) {
      const Ring& A = *current.ring;
      // Witnesses of the level below, lifted as (w, 0), stay witnesses.
      const auto& below = tower.back().properties;
      const auto lower_dim = *tower.back().algebra.ring->dimension();
      auto lift = [&](const RingElement& w) {
        auto coords = w.ring().coordinates(w);
        coords.resize(2 * lower_dim, field->zero());
        return A.from_coordinates(coords);
      };
      if (const auto& w = below.commutator_witness)
        entry.inherited_witnesses &= !commutator(lift(w->first), lift(w->second)).is_zero();
      if (const auto& w = below.associator_witness)
        entry.inherited_witnesses &= !associator(lift((*w)[0]), lift((*w)[1]), lift((*w)[2])).is_zero();
      std::vector<mpq_class> prefix(mus.begin(), mus.begin() + level);
      const RingHandle closed = make_ring(RingDescriptor::cayley(level, field->descriptor(), prefix));
      const auto basis = A.basis();
      const auto closed_basis = closed->basis();
      for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j)
          if (A.coordinates(A.mul(basis[i], basis[j])) != closed->coordinates(closed->mul(closed_basis[i], closed_basis[j])))
            entry.closed_form_agreement = false;
    }
    tower.push_back(std::move(entry));
    if (level == mus.size()) break;
    current = cayley_double(current, mus[level]);
  }
  return tower;
}

RingElement cayley_norm(const RingElement& a) {
  const Ring& A = a.ring();
  const Ring& F = *A.base_field();
  RingElement sum = F.zero();
  for (const auto& c : A.coordinates(a)) sum = F.add(sum, F.mul(c, c));
  return sum;
}

std::string multiplication_table(const Ring& ring) {
  const auto basis = ring.basis();
  const auto labels = labels_of(ring);
  std::vector<std::vector<std::string>> cells(basis.size() + 1, std::vector<std::string>(basis.size() + 1));
  cells[0][0] = "*";
  for (std::size_t i = 0; i < basis.size(); ++i) cells[0][i + 1] = cells[i + 1][0] = labels[i];
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      cells[i + 1][j + 1] = combination_text(ring, ring.mul(basis[i], basis[j]), labels);
  std::size_t width = 0;
  for (const auto& row : cells)
    for (const auto& c : row) width = std::max(width, c.size());
  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      out << std::string(width - row[j].size(), ' ') << row[j];
      if (j + 1 < row.size()) out << ' ';
    }
    out << '\n';
  }
  return out.str();
}

Report tower_report(const std::vector<TowerLevel>& tower, bool with_tables) {
  Report report("cayley tower");
  report.add("levels", tower.size());
  for (const auto& t : tower) {
    const std::string key = "level." + std::to_string(t.level);
    const Ring& A = *t.algebra.ring;
    const auto labels = labels_of(A);
    report.add(key + ".ring", A.descriptor().to_string());
    report.add(key + ".dimension", *A.dimension());
    report.add(key + ".commutative", t.properties.commutative);
    report.add(key + ".associative", t.properties.associative);
    report.add(key + ".star_involution", t.properties.star_involution);
    report.add(key + ".star_fixes_scalars", t.properties.star_fixes_scalars);
    if (const auto& w = t.properties.commutator_witness)
      report.add(key + ".commutator_witness",
                 combination_text(A, w->first, labels) + "," + combination_text(A, w->second, labels));
    if (const auto& w = t.properties.associator_witness)
      report.add(key + ".associator_witness", combination_text(A, (*w)[0], labels) + "," +
                                                  combination_text(A, (*w)[1], labels) + "," +
                                                  combination_text(A, (*w)[2], labels));
    report.add(key + ".inherited_witnesses", t.inherited_witnesses);
    report.add(key + ".closed_form_agreement", t.closed_form_agreement);
    if (with_tables) {
      std::istringstream rows(multiplication_table(A));
      std::string row;
      for (std::size_t r = 0; std::getline(rows, row); ++r) report.add(key + ".table." + std::to_string(r), row);
    }
  }
  return report;
}

}  // namespace gnoe
