#ifndef GNOE_EUCLID_HPP
#define GNOE_EUCLID_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gnoe/ore_poly.hpp"
#include "gnoe/report.hpp"

namespace gnoe {

// ---------------------------------------------------------------------------
// Coefficient ideals
//
// Side::Right is the right ideal generated by the gens (right multipliers):
//   term = (...((g m_1) m_2)...) m_k
// Side::Left is the left ideal (left multipliers):
//   term = m_k (...(m_2 (m_1 g))...)
// ---------------------------------------------------------------------------

inline constexpr std::size_t kDefaultMembershipDepth = 8;

struct MembershipTerm {
  std::size_t generator = 0;
  std::vector<RingElement> multipliers;  // never empty; (1) for a bare generator
};

struct MembershipWitness {
  Side side = Side::Right;
  RingElement target;
  std::vector<MembershipTerm> terms;
  std::size_t depth = 0;

  RingElement evaluate(const std::vector<RingElement>& gens) const;
};

/// proof: the closure stabilized (or the ideal is known in closed form)
/// without reaching the target. Otherwise the search hit `depth`.
struct NotMember {
  bool proof = false;
  std::size_t depth = 0;
  std::string reason;
};

using MembershipResult = std::variant<MembershipWitness, NotMember>;

/// Supported: fields, finite-dimensional algebras over a field (linear
/// closure over basis multipliers), other finite rings (closure over all
/// elements), K[Y] (gcd), Z and the mixed triangular rings (lattice solve).
/// Throws UnsupportedRingClass otherwise.
MembershipResult coeff_ideal_membership(const RingHandle& ring, Side side, const std::vector<RingElement>& gens,
                                        const RingElement& b, std::size_t depth_bound = kDefaultMembershipDepth);

/// The nested product of `g` with `multipliers` in the orientation of `side`.
RingElement nested_product(Side side, const RingElement& g, const std::vector<RingElement>& multipliers);

class LeadingCoeffNotInIdeal : public Error {
 public:
  LeadingCoeffNotInIdeal(NotMember evidence, const std::string& message)
      : Error(ErrorCode::LeadingCoeffNotInIdeal, message), evidence_(std::move(evidence)) {}
  const NotMember& evidence() const { return evidence_; }

 private:
  NotMember evidence_;
};

// ---------------------------------------------------------------------------
// Division
// ---------------------------------------------------------------------------

/// Side::Left: generators of a left division problem (right multipliers,
/// left degrees). Side::Right: the mirror.
struct GeneratorSet {
  ExtensionHandle owner;
  Side side = Side::Left;
  std::vector<OrePolynomial> gens;

  /// Throws OwnerMismatch or PreconditionDegree (empty set, zero generator).
  static GeneratorSet make(Side side, std::vector<OrePolynomial> gens);
};

/// Left:  ((...((p_i s_1) s_2)...) s_m) X^e, with X^e stored as the last multiplier.
/// Right: X^e (s_m (...(s_2 (s_1 p_i))...)), X^e likewise last.
struct ProductTree {
  std::size_t generator = 0;
  std::vector<OrePolynomial> multipliers;
};

struct DivisionCertificate {
  Side side = Side::Left;
  OrePolynomial element;
  std::vector<ProductTree> terms;
  std::optional<std::size_t> claimed_degree;

  OrePolynomial evaluate(const GeneratorSet& gens) const;
  /// deg element = max over trees of (deg p_i + sum of multiplier degrees),
  /// in left or right degrees according to the side.
  bool degree_additive(const GeneratorSet& gens) const;
  /// "((g1 * [a]) * [X]) + ..." for Left, "([X] * ([a] * g1)) + ..." for Right.
  std::string serialize() const;
};

/// Requires q != 0 and deg_l q >= deg_l p_i for all i (PreconditionDegree).
/// Throws LeadingCoeffNotInIdeal, PreimageUnavailable, ContractViolation.
DivisionCertificate left_divide_step(const GeneratorSet& gens, const OrePolynomial& q);

/// Standard mode with invertible sigma only (UnsupportedMode, NotInvertible).
DivisionCertificate right_divide_step(const GeneratorSet& gens, const OrePolynomial& q);

struct Reduction {
  OrePolynomial remainder;
  DivisionCertificate combined;
  std::size_t steps = 0;
};

/// Repeats the step on the generators of degree <= the current degree until
/// the remainder is 0, drops below every generator, or its leading
/// coefficient leaves the ideal. q = remainder + combined.element.
Reduction left_reduce(const GeneratorSet& gens, const OrePolynomial& q);
Reduction right_reduce(const GeneratorSet& gens, const OrePolynomial& q);

struct GenerationBudget {
  std::size_t samples = 200;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t exhaustive_limit = 4096;
};

/// Every q in R + Rx + ... + Rx^m is written as sum x^n r_n by the
/// top-down construction; each expansion is re-evaluated. Exhaustive when
/// |R|^(m+1) is within the limit.
Report module_generation_check(const ExtensionHandle& ext, std::size_t m, const GenerationBudget& budget = {});

}  // namespace gnoe

#endif  // GNOE_EUCLID_HPP
