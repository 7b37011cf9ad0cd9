#ifndef GNOE_TEXTIO_HPP
#define GNOE_TEXTIO_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "gnoe/ore_poly.hpp"

namespace gnoe {

// ---------------------------------------------------------------------------
// Polynomial text
//   poly  := term { ("+" | "-") term }
//   term  := coeff [ "X" [ "^" nat ] ] | "X" [ "^" nat ]
//   coeff := ring literal, parenthesized when compound: "(Y^2+1)", "(t+1)",
//            "[[1,0],[0,1]]", "(1,0|0,1)"
// X is reserved for the extension variable and Y for K[Y] coefficients.
// ---------------------------------------------------------------------------

/// Whitespace-insensitive; repeated powers merge. Throws SyntaxError or
/// CoefficientParseError.
OrePolynomial parse_poly(std::string_view text, const ExtensionHandle& ext);

/// Ascending powers in left form; "0" for zero; unit coefficients elided
/// except in degree 0.
std::string format_poly(const OrePolynomial& p);

// ---------------------------------------------------------------------------
// Descriptor and map text
//   ring := "integers" | "rationals" | "zmod(n)" | "gf(p,k)" | "poly(ring)"
//         | "matrix2(ring)" | "mixed(upper|lower)" | "cayley(l,field,[mu_1,...])"
//   map  := "identity" | "zero" | "frobenius(e)" | "substitution(k)"
//         | "derivative" | "conjugation" | "inner(literal)" | "sum(map,...)"
//         | "compose(map,...)" | "negate(map)" | "power(map,n)"
// ---------------------------------------------------------------------------

/// Inverse of RingDescriptor::to_string. Throws InvalidDescriptor.
RingDescriptor parse_descriptor(std::string_view text);

/// Inverse of AdditiveMap::describe (table maps excepted). Throws InvalidDescriptor.
AdditiveMap parse_map(std::string_view text, const RingHandle& ring);

// ---------------------------------------------------------------------------
// Extension configuration (JSON, version 1)
//
//   {
//     "version": 1,
//     "ring": "poly(gf(2,1))",
//     "sigma": "substitution(2)",            or {"table": ["0", "1", ...]}
//     "delta": "zero",
//     "mode": "standard",                     or "flipped"
//     "quotient": {"mu": "-1"},               optional
//     "experiment": {"bound": 3, "samples": 200, "seed": 20240601}
//   }
// ---------------------------------------------------------------------------

struct ExperimentConfig {
  std::size_t bound = 3;
  std::size_t samples = 200;
  std::uint64_t seed = kDefaultSeed;
};

struct ExtensionConfig {
  ExtensionHandle extension;
  ExperimentConfig experiment;
};

/// Validates every descriptor and sigma(1) = 1, delta(1) = 0 before
/// returning. All failures are ConfigError.
ExtensionConfig parse_config(std::string_view json_text);
ExtensionConfig load_config(const std::string& path);

}  // namespace gnoe

#endif  // GNOE_TEXTIO_HPP
