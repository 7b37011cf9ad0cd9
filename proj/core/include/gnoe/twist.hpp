#ifndef GNOE_TWIST_HPP
#define GNOE_TWIST_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gnoe/report.hpp"
#include "gnoe/ring.hpp"

namespace gnoe {

enum class MapKind {
  Identity,
  Zero,
  FrobeniusPower,    // a -> a^(p^e) on F_{p^k}
  Substitution,      // p(Y) -> p(Y^k) on K[Y]
  FormalDerivative,  // d/dY on K[Y]
  Conjugation,       // the ring involution
  InnerDerivation,   // r -> c r - r c
  Table,             // explicit graph on a finite ring
  Sum,
  Compose,           // applied right to left
  Negate,
  IteratedPower,     // inner^n; n < 0 only through invert_map
};

/// An additive self-map of a coefficient ring. Immutable; copies share state.
class AdditiveMap {
 public:
  static AdditiveMap identity(RingHandle ring);
  static AdditiveMap zero(RingHandle ring);
  static AdditiveMap frobenius(RingHandle ring, unsigned e);
  static AdditiveMap substitution(RingHandle ring, unsigned k);
  static AdditiveMap formal_derivative(RingHandle ring);
  static AdditiveMap conjugation(RingHandle ring);
  static AdditiveMap inner_derivation(const RingElement& c);
  /// images[i] is the image of ring->element_at(i).
  static AdditiveMap table(RingHandle ring, std::vector<RingElement> images);
  static AdditiveMap sum(std::vector<AdditiveMap> terms);
  static AdditiveMap compose(std::vector<AdditiveMap> maps);
  static AdditiveMap negate(AdditiveMap inner);
  /// inner^n for n >= 0.
  static AdditiveMap power(AdditiveMap inner, long n);

  MapKind kind() const;
  const RingHandle& ring() const;
  /// e for FrobeniusPower, k for Substitution, n for IteratedPower.
  long parameter() const;
  const std::vector<AdditiveMap>& children() const;
  /// The element c of an inner derivation.
  const RingElement& element() const;

  RingElement operator()(const RingElement& r) const;

  /// Canonical text, e.g. "frobenius(1)" or "compose(conjugation,zero)".
  std::string describe() const;

 private:
  struct Node;
  explicit AdditiveMap(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  friend AdditiveMap invert_map(const AdditiveMap& f);

  std::shared_ptr<const Node> node_;
};

/// Throws NotInvertible when no two-sided inverse exists or none can be found.
AdditiveMap invert_map(const AdditiveMap& f);

/// Some r' with f(r') = r, or nullopt when none exists. Throws
/// PreimageUnavailable when the question cannot be decided for this kind.
/// The choice is deterministic (first in enumeration order).
std::optional<RingElement> preimage(const AdditiveMap& f, const RingElement& r);

/// Preimage under f^n, taken one application at a time.
std::optional<RingElement> preimage_power(const AdditiveMap& f, std::size_t n, const RingElement& r);

// ---------------------------------------------------------------------------
// pi_i^m: the sum of all binomial(m, i) words in i copies of sigma and m - i
// copies of delta; zero when i < 0 or i > m, identity for i = m = 0.
// ---------------------------------------------------------------------------

enum class PiStrategy { Enumeration, Recursion };

/// Words of pi_i^m, outermost letter first, in lexicographic order with
/// sigma before delta. Each word is a string of 's' and 'd'.
std::vector<std::string> pi_words(long i, long m);

/// "σ∘σ∘δ" for "ssd".
std::string format_word(const std::string& word);

RingElement pi_map(const AdditiveMap& sigma, const AdditiveMap& delta, long i, long m, const RingElement& s,
                   PiStrategy strategy = PiStrategy::Recursion);

/// (pi_0^m(s), ..., pi_m^m(s)) by the recursion.
std::vector<RingElement> pi_row(const AdditiveMap& sigma, const AdditiveMap& delta, std::size_t m,
                                const RingElement& s);

// ---------------------------------------------------------------------------
// Law checks
// ---------------------------------------------------------------------------

enum class MapLaw {
  Unital,                  // sigma(1) = 1, delta(1) = 0
  Additive,                // f(r + s) = f(r) + f(s) for sigma and delta
  SigmaDerivation,         // delta(rs) = sigma(r) delta(s) + delta(r) s
  SigmaDerivationPrinted,  // sigma(rs) = sigma(r) delta(s) + delta(r) s
  Endomorphism,            // sigma(rs) = sigma(r) sigma(s)
  Involution,              // sigma(sigma(a)) = a, sigma(ab) = sigma(b) sigma(a)
  Anticommute,             // sigma(delta(r)) + delta(sigma(r)) = 0
};

std::string law_name(MapLaw law);

/// Elements to check a law on.
///   Auto: every element when the ring has at most `exhaustive_limit`
///   elements; otherwise the basis (algebras over a field) followed by
///   `samples` seeded random elements.
struct SampleBudget {
  enum class Mode { Auto, Exhaustive, Basis, Sampled };
  Mode mode = Mode::Auto;
  std::size_t samples = 1000;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t exhaustive_limit = 4096;
};

/// Elements [0, structured) are checked in all pairs; the remaining random
/// elements in consecutive pairs.
struct SampleSet {
  std::vector<RingElement> elements;
  std::size_t structured = 0;
  bool exhaustive = false;
};

SampleSet sample_elements(const Ring& ring, const SampleBudget& budget);

struct LawViolation {
  std::vector<RingElement> inputs;
  RingElement lhs;
  RingElement rhs;
  std::string detail;
};

struct LawReport {
  MapLaw law = MapLaw::Unital;
  std::size_t checked = 0;
  bool exhaustive = false;  // true: a pass is a proof
  std::uint64_t seed = 0;
  std::vector<LawViolation> violations;

  bool passed() const { return violations.empty(); }
  Report to_report() const;
};

/// Checks `law` for the pair (sigma, delta). Pair laws run over all pairs of
/// the sample set. At most `max_violations` violations are recorded.
LawReport check_map_laws(const AdditiveMap& sigma, const AdditiveMap& delta, MapLaw law, const SampleBudget& budget,
                         std::size_t max_violations = 8);

}  // namespace gnoe

#endif  // GNOE_TWIST_HPP
