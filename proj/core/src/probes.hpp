#ifndef GNOE_SRC_PROBES_HPP
#define GNOE_SRC_PROBES_HPP

#include <vector>

#include "gnoe/ore_poly.hpp"

namespace gnoe::detail {

/// Elements whose integer combinations (rational ones over Q) reach every
/// element of R. `complete` is false when the list is truncated (K[Y] up to
/// Y^bound, the mixed triangular rings).
struct AdditiveGenerators {
  std::vector<RingElement> elements;
  bool complete = false;
};

AdditiveGenerators additive_generators(const Ring& ring, std::size_t bound);

/// g X^i for every generator g and i <= max_degree (at most 1 on quotients).
std::vector<OrePolynomial> generator_monomials(const ExtensionHandle& ext, const AdditiveGenerators& gens,
                                               std::size_t max_degree);

}  // namespace gnoe::detail

#endif  // GNOE_SRC_PROBES_HPP
