#ifndef GNOE_CONSTRUCTIONS_HPP
#define GNOE_CONSTRUCTIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "gnoe/ore_poly.hpp"
#include "gnoe/report.hpp"

namespace gnoe {

/// An algebra over a field with an involution star fixing the scalars.
struct InvolutiveAlgebra {
  RingHandle ring;
  AdditiveMap star;

  RingHandle field() const { return ring->base_field(); }

  /// A field with the identity involution; NotAlgebraOverField otherwise.
  static InvolutiveAlgebra scalars(RingHandle field);
};

/// Cay(A, mu) on pairs (a, b) ~ a + bX. Products are computed in
/// A[X; star, 0]^fl modulo X^2 - mu; the induced star is (a, b)* = (a*, -b).
/// A must be a field or a Cayley level. Throws NotAlgebraOverField,
/// ZeroParameter, HypothesisViolated (star fails the involution law on the basis).
InvolutiveAlgebra cayley_double(const InvolutiveAlgebra& algebra, const mpq_class& mu);

/// make_ring, extended to quotient-route Cayley levels (built by doubling).
RingHandle build_ring(const RingDescriptor& descriptor);

/// The quotient extension a doubled ring multiplies through; null for other rings.
ExtensionHandle doubling_extension(const Ring& ring);

/// Exhaustive basis probes of one algebra.
struct AlgebraProperties {
  bool commutative = true;
  bool associative = true;
  bool star_involution = true;     // star(star(e)) = e and star(ef) = star(f) star(e) on basis pairs
  bool star_fixes_scalars = true;  // star(lambda 1) = lambda 1
  std::optional<std::pair<RingElement, RingElement>> commutator_witness;
  std::optional<std::vector<RingElement>> associator_witness;  // (r, s, t) with (rs)t != r(st)
};

AlgebraProperties probe_properties(const InvolutiveAlgebra& algebra);

struct TowerLevel {
  unsigned level = 0;
  InvolutiveAlgebra algebra;
  AlgebraProperties properties;
  /// Products agree with the closed-form Cayley level on every basis pair.
  bool closed_form_agreement = true;
  /// The witnesses of level - 1, lifted as (w, 0), are witnesses here.
  bool inherited_witnesses = true;
};

/// Levels 0..mus.size(): level 0 is the field with the identity star, level
/// l + 1 doubles level l with mus[l]. Witnesses of lower levels are carried
/// upward as (w, 0) and re-checked.
std::vector<TowerLevel> cayley_tower(RingHandle field, const std::vector<mpq_class>& mus);

/// N(a, b) = N(a) + N(b) seeded with N(q) = q^2: the sum of squared coordinates.
RingElement cayley_norm(const RingElement& a);

/// Rows and columns over the basis labels; cells are field combinations of labels.
std::string multiplication_table(const Ring& ring);

Report tower_report(const std::vector<TowerLevel>& tower, bool with_tables);

}  // namespace gnoe

#endif  // GNOE_CONSTRUCTIONS_HPP
