#ifndef GNOE_VERIFY_HPP
#define GNOE_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "gnoe/ore_poly.hpp"
#include "gnoe/report.hpp"

namespace gnoe {

/// Degree bound and sample budget shared by the probes. Structured probes
/// (monomials over additive generators of R, degree <= bound) run first, then
/// `samples` seeded random polynomials of degree <= bound.
struct ProbeBudget {
  std::size_t bound = 3;
  std::size_t samples = 200;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t exhaustive_limit = 4096;
};

/// One flag of a classification. A negative verdict carries the polynomials
/// that re-evaluate to a violation.
struct Verdict {
  std::string name;
  bool holds = true;
  std::size_t checked = 0;
  bool proof = false;  // structured probes span every case at this degree bound
  std::vector<OrePolynomial> witness;
  std::string detail;
};

struct ClassificationReport {
  std::string extension;
  ProbeBudget budget;
  std::vector<Verdict> verdicts;
  /// "ore", "nonassociative_ore", "gnoe", "left_gnoe" or "none".
  std::string classification;

  const Verdict& verdict(const std::string& name) const;
  Report to_report() const;
};

/// Verdict names: power_associative, degree_subadditive, x_middle_nucleus,
/// x_right_nucleus, associative, x_relation, coefficient_relation,
/// right_basis, left_gnoe, gnoe, nonassociative_ore, ore.
ClassificationReport classify_extension(const ExtensionHandle& ext, const ProbeBudget& budget = {});

/// With invertible sigma: right forms round-trip and deg_l = deg_r on the
/// probes (verdict=gnoe). Otherwise searches for r with rX not right
/// representable (verdict=not_gnoe, witness=r). Throws UndecidableAtBound.
Report check_gnoe_bijective(const ExtensionHandle& ext, const ProbeBudget& budget = {});

/// Embeds R[Y; sigma^2, delta^2] into R[X; sigma, delta]^fl by Y^i -> X^(2i)
/// and checks additivity and multiplicativity. Throws HypothesisViolated
/// unless sigma delta + delta sigma = 0 and sigma^2 is invertible.
Report check_flipped_embedding(const RingHandle& ring, const AdditiveMap& sigma, const AdditiveMap& delta,
                               const ProbeBudget& budget = {});

// ---------------------------------------------------------------------------
// Chain experiments
// ---------------------------------------------------------------------------

enum class ChainKind { SkewEndo, Flipped };

struct ChainParams {
  // SkewEndo: F_p[Y][X; Y -> Y^2, 0], spans truncated at X-degree x_bound and Y-degree y_bound.
  std::uint64_t prime = 2;
  std::size_t x_bound = 6;
  std::size_t y_bound = 16;
  // Flipped: mixed triangular coefficients; nullopt tries Upper, then Lower.
  std::optional<Orientation> orientation;
  std::size_t degree_bound = 3;
  std::size_t samples = 200;
  std::uint64_t seed = kDefaultSeed;
};

struct ChainIdeal {
  std::string description;
  std::vector<OrePolynomial> generators;
};

/// `element` lies in ideal index+1 by `combination` and outside ideal index.
struct StrictnessWitness {
  std::size_t index = 0;  // 1-based: ideal index vs index + 1
  OrePolynomial element;
  std::string combination;
  bool in_larger = false;
  bool outside_smaller = false;
  bool outside_is_proof = false;  // false: only at the truncation bound
};

struct ChainReport {
  ChainKind kind = ChainKind::SkewEndo;
  ExtensionHandle extension;
  std::vector<ChainIdeal> ideals;
  std::vector<StrictnessWitness> witnesses;
  std::string bound;
  std::vector<std::string> notes;
  std::size_t closure_probes = 0;  // Flipped: left-ideal probes run
  std::size_t closure_failures = 0;

  bool verified() const;
  Report to_report() const;
};

/// Throws OrientationFailure (explicit orientation without a strict chain),
/// BoundTooSmall.
ChainReport chain_experiment(ChainKind kind, std::size_t n, const ChainParams& params = {});

}  // namespace gnoe

#endif  // GNOE_VERIFY_HPP
