#include "gnoe/verify.hpp"

#include <functional>

#include "gnoe/textio.hpp"
#include "probes.hpp"
#include "rings_impl.hpp"

namespace gnoe {

namespace detail {

AdditiveGenerators additive_generators(const Ring& ring, std::size_t bound) {
  const RingDescriptor& d = ring.descriptor();
  auto field_generators = [](const Ring& field) {
    std::vector<RingElement> out{field.one()};
    if (field.descriptor().kind == RingKind::FiniteField) {
      const auto& F = static_cast<const FiniteFieldRing&>(field);
      for (unsigned j = 1; j < F.extension_degree(); ++j) out.push_back(F.power(F.generator(), j));
    }
    return out;
  };
  switch (d.kind) {
    case RingKind::Integers:
    case RingKind::Rationals:
    case RingKind::IntegersMod:
      return {{ring.one()}, true};
    case RingKind::FiniteField:
      return {field_generators(ring), true};
    case RingKind::PolyOverField: {
      const auto& P = static_cast<const PolyRing&>(ring);
      AdditiveGenerators out;
      for (std::size_t j = 0; j <= bound; ++j)
        for (const auto& c : field_generators(*P.field())) out.elements.push_back(P.monomial(c, j));
      return out;
    }
    case RingKind::MixedTriangular2: {
      const auto& M = static_cast<const MixedTriangularRing&>(ring);
      return {{M.from_parts(1, 0, 0), M.from_parts(0, 1, 0), M.from_parts(0, 0, 1)}, false};
    }
    default:
      break;
  }
  if (ring.base_field() && ring.dimension()) {
    AdditiveGenerators out{{}, true};
    for (const auto& b : ring.basis())
      for (const auto& c : field_generators(*ring.base_field())) out.elements.push_back(ring.mul(ring.scalar(c), b));
    return out;
  }
  return {{ring.one()}, false};
}

std::vector<OrePolynomial> generator_monomials(const ExtensionHandle& ext, const AdditiveGenerators& gens,
                                               std::size_t max_degree) {
  if (ext->has_quotient()) max_degree = std::min<std::size_t>(max_degree, 1);
  std::vector<OrePolynomial> out;
  for (std::size_t i = 0; i <= max_degree; ++i)
    for (const auto& g : gens.elements) out.push_back(OrePolynomial::monomial(ext, g, i));
  return out;
}

}  // namespace detail

namespace {

using detail::additive_generators;
using detail::generator_monomials;

// Structured triples beyond this count fall back to sampling.
constexpr std::size_t kTripleLimit = 40000;

struct Probe {
  explicit Probe(std::string name) { verdict.name = std::move(name); }
  Verdict verdict;

  void check(bool ok, std::vector<OrePolynomial> inputs, const std::string& detail) {
    ++verdict.checked;
    if (ok || !verdict.holds) return;
    verdict.holds = false;
    verdict.witness = std::move(inputs);
    verdict.detail = detail;
  }
};

std::string show(const std::vector<OrePolynomial>& ps) {
  std::string out;
  for (const auto& p : ps) out += (out.empty() ? "" : ", ") + ("[" + format_poly(p) + "]");
  return out;
}

Verdict derived(const std::string& name, bool holds, const std::string& detail) {
  Verdict v;
  v.name = name;
  v.holds = holds;
  v.detail = detail;
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

const Verdict& ClassificationReport::verdict(const std::string& name) const {
  for (const auto& v : verdicts)
    if (v.name == name) return v;
  throw Error(ErrorCode::UndefinedForKind, "no verdict named " + name);
}

Report ClassificationReport::to_report() const {
  Report report("classification");
  report.add("extension", extension);
  report.add("bound", budget.bound);
  report.add("samples", budget.samples);
  report.add("seed", static_cast<unsigned long long>(budget.seed));
  for (const auto& v : verdicts) {
    report.add(v.name, v.holds);
    if (v.checked) {
      report.add(v.name + ".checked", v.checked);
      report.add(v.name + ".proof", v.proof);
    }
    if (!v.holds && !v.witness.empty()) report.add(v.name + ".witness", show(v.witness));
    if (!v.detail.empty()) report.add(v.name + ".detail", v.detail);
  }
  report.add("class", classification);
  report.note(extension + " classifies as " + classification + " at degree bound " + std::to_string(budget.bound));
  return report;
}

ClassificationReport classify_extension(const ExtensionHandle& ext, const ProbeBudget& budget) {
  const Ring& R = *ext->ring();
  const auto gens = additive_generators(R, budget.bound);
  const auto monomials = generator_monomials(ext, gens, budget.bound);
  Rng rng(budget.seed);
  const std::size_t bound = ext->has_quotient() ? std::min<std::size_t>(budget.bound, 1) : budget.bound;
  const auto X = OrePolynomial::x_power(ext, 1);

  ClassificationReport out;
  out.extension = ext->describe();
  out.budget = budget;

  // x^m x^n = x^(m+n) for m + n <= 10.
  Probe power{"power_associative"};
  for (std::size_t m = 0; m <= 10; ++m)
    for (std::size_t n = 0; m + n <= 10; ++n) {
      const auto xm = OrePolynomial::x_power(ext, m), xn = OrePolynomial::x_power(ext, n);
      power.check(xm * xn == OrePolynomial::x_power(ext, m + n), {xm, xn}, "x^m x^n != x^(m+n)");
    }
  power.verdict.proof = true;

  auto pairs = [&](Probe& probe, const std::function<bool(const OrePolynomial&, const OrePolynomial&)>& ok,
                   const std::string& what) {
    for (const auto& p : monomials)
      for (const auto& q : monomials) probe.check(ok(p, q), {p, q}, what);
    probe.verdict.proof = gens.complete;
    for (std::size_t k = 0; k < budget.samples; ++k) {
      const auto p = random_poly(ext, bound, rng), q = random_poly(ext, bound, rng);
      probe.check(ok(p, q), {p, q}, what);
    }
  };

  Probe degree{"degree_subadditive"};
  pairs(degree, [](const auto& p, const auto& q) {
    const auto d = (p * q).degree();
    return !d || (p.degree() && q.degree() && *d <= *p.degree() + *q.degree());
  }, "deg_l(pq) > deg_l p + deg_l q");

  Probe middle{"x_middle_nucleus"};
  pairs(middle, [&](const auto& p, const auto& q) { return associator(p, X, q).is_zero(); }, "(p, X, q) != 0");

  Probe right{"x_right_nucleus"};
  pairs(right, [&](const auto& p, const auto& q) { return associator(p, q, X).is_zero(); }, "(p, q, X) != 0");

  // Stops at the first witness: one violating triple settles the verdict.
  Probe assoc{"associative"};
  const std::size_t triples = monomials.size() * monomials.size() * monomials.size();
  if (triples <= kTripleLimit) {
    for (std::size_t i = 0; i < triples && assoc.verdict.holds; ++i) {
      const auto& p = monomials[i / (monomials.size() * monomials.size())];
      const auto& q = monomials[(i / monomials.size()) % monomials.size()];
      const auto& s = monomials[i % monomials.size()];
      assoc.check(associator(p, q, s).is_zero(), {p, q, s}, "(pq)s != p(qs)");
    }
    assoc.verdict.proof = gens.complete || !assoc.verdict.holds;
  }
  for (std::size_t k = 0; k < budget.samples && assoc.verdict.holds; ++k) {
    const auto p = random_poly(ext, bound, rng), q = random_poly(ext, bound, rng), s = random_poly(ext, bound, rng);
    assoc.check(associator(p, q, s).is_zero(), {p, q, s}, "(pq)s != p(qs)");
  }

  // x r = sigma(r) x + delta(r) and r (s x^n) = tau_n(r, s) x^n (standard: (rs) x^n).
  std::vector<RingElement> coefficients = gens.elements;
  for (std::size_t k = 0; k < budget.samples; ++k) coefficients.push_back(R.random(rng));
  Probe xrel{"x_relation"};
  for (const auto& r : coefficients) {
    const auto c = OrePolynomial::constant(ext, r);
    const auto expected = OrePolynomial::monomial(ext, ext->sigma()(r), 1) + OrePolynomial::constant(ext, ext->delta()(r));
    xrel.check(X * c == expected, {X, c}, "x r != sigma(r) x + delta(r)");
  }
  xrel.verdict.proof = gens.complete;
  Probe crel{"coefficient_relation"};
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    const auto& r = coefficients[i];
    const auto& s = coefficients[(i * 7 + 3) % coefficients.size()];
    for (std::size_t n = 0; n <= bound; ++n) {
      const auto lhs = OrePolynomial::constant(ext, r) * OrePolynomial::monomial(ext, s, n);
      const RingElement c = ext->mode() == Mode::Flipped ? tau(n, r, s) : r * s;
      crel.check(lhs == OrePolynomial::monomial(ext, c, n),
                 {OrePolynomial::constant(ext, r), OrePolynomial::monomial(ext, s, n)},
                 ext->mode() == Mode::Flipped ? "r (s x^n) != tau_n(r, s) x^n" : "r (s x^n) != (rs) x^n");
    }
  }

  const bool invertible = ext->sigma_inverse().has_value();
  const Verdict right_basis =
      derived("right_basis", invertible, invertible ? "sigma is invertible" : "sigma has no inverse");
  const bool left_gnoe = power.verdict.holds && degree.verdict.holds;
  const bool gnoe = left_gnoe && invertible;
  const bool no = power.verdict.holds && middle.verdict.holds && right.verdict.holds && xrel.verdict.holds;
  const bool ore = no && assoc.verdict.holds;

  out.verdicts = {power.verdict, degree.verdict, middle.verdict, right.verdict, assoc.verdict, xrel.verdict,
                  crel.verdict, right_basis};
  out.verdicts.push_back(derived("left_gnoe", left_gnoe, "power associativity and degree subadditivity"));
  out.verdicts.push_back(derived("gnoe", gnoe, "left GNOE with invertible sigma"));
  out.verdicts.push_back(derived("nonassociative_ore", no, "x in the middle and right nuclei"));
  out.verdicts.push_back(derived("ore", ore, "nonassociative Ore and associative"));
  out.classification = ore ? "ore" : no ? "nonassociative_ore" : gnoe ? "gnoe" : left_gnoe ? "left_gnoe" : "none";
  return out;
}

// ---------------------------------------------------------------------------
// GNOE versus bijectivity
// ---------------------------------------------------------------------------

Report check_gnoe_bijective(const ExtensionHandle& ext, const ProbeBudget& budget) {
  const Ring& R = *ext->ring();
  Report report("gnoe bijectivity");
  report.add("extension", ext->describe());
  report.add("bound", budget.bound);
  const bool invertible = ext->sigma_inverse().has_value();
  report.add("sigma_invertible", invertible);

  if (invertible) {
    std::vector<OrePolynomial> probes;
    bool exhaustive = false;
    if (const auto size = R.cardinality()) {
      std::uint64_t total = 1;
      exhaustive = true;
      for (std::size_t i = 0; i <= budget.bound && exhaustive; ++i) {
        if (total > budget.exhaustive_limit / *size) exhaustive = false;
        total *= *size;
      }
      if (exhaustive)
        for (std::uint64_t code = 0; code < total; ++code) {
          std::vector<RingElement> coeffs;
          for (std::uint64_t rest = code, i = 0; i <= budget.bound; ++i, rest /= *size)
            coeffs.push_back(R.element_at(rest % *size));
          probes.emplace_back(ext, std::move(coeffs));
        }
    }
    if (!exhaustive) {
      probes = generator_monomials(ext, additive_generators(R, budget.bound), budget.bound);
      Rng rng(budget.seed);
      for (std::size_t k = 0; k < budget.samples; ++k) probes.push_back(random_poly(ext, budget.bound, rng));
      report.add("seed", static_cast<unsigned long long>(budget.seed));
    }
    std::size_t failures = 0;
    std::string first;
    for (const auto& p : probes) {
      const RightForm form = to_right_form(p);
      if (!(from_right_form(form) == p) || form.degree() != p.degree()) {
        if (failures++ == 0) first = format_poly(p);
      }
    }
    report.add("probes", exhaustive ? "exhaustive" : "sampled");
    report.add("checked", probes.size());
    report.add("round_trip_failures", failures);
    if (failures) report.add("first_failure", first);
    report.add("deg_l_equals_deg_r", failures == 0);
    report.add("verdict", failures == 0 ? "gnoe" : "inconsistent");
    report.note(failures == 0 ? "sigma is invertible; right forms round-trip with equal left and right degrees"
                              : "right-form round trip failed");
    return report;
  }

  // Search for r outside the image of sigma: then rX has no right form.
  std::vector<RingElement> candidates;
  if (const auto size = R.cardinality()) {
    for (std::uint64_t k = 0; k < *size; ++k) candidates.push_back(R.element_at(k));
  } else {
    for (const auto& g : additive_generators(R, budget.bound).elements) candidates.push_back(g);
    Rng rng(budget.seed);
    for (std::size_t k = 0; k < budget.samples; ++k) candidates.push_back(R.random(rng));
  }
  std::size_t tried = 0;
  for (const auto& r : candidates) {
    if (r.is_zero()) continue;
    ++tried;
    const auto rx = OrePolynomial::monomial(ext, r, 1);
    try {
      to_right_form(rx);
    } catch (const NotRightRepresentable& e) {
      report.add("candidates", tried);
      report.add("witness", R.format(r));
      report.add("witness_check", "to_right_form(" + format_poly(rx) + ")=NotRightRepresentable");
      report.add("verdict", "not_gnoe");
      report.note(R.format(r) + " is not in the image of sigma, so " + format_poly(rx) + " has no right form");
      return report;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotInvertible) throw;
    }
  }
  throw Error(ErrorCode::UndecidableAtBound,
              "no element outside the image of sigma among " + std::to_string(tried) + " candidates");
}

// ---------------------------------------------------------------------------
// Flipped embedding
// ---------------------------------------------------------------------------

Report check_flipped_embedding(const RingHandle& ring, const AdditiveMap& sigma, const AdditiveMap& delta,
                               const ProbeBudget& budget) {
  SampleBudget law_budget;
  law_budget.seed = budget.seed;
  const LawReport anticommute = check_map_laws(sigma, delta, MapLaw::Anticommute, law_budget);
  if (!anticommute.passed())
    throw Error(ErrorCode::HypothesisViolated, "sigma delta + delta sigma != 0: " +
                                                   anticommute.violations.front().detail);
  const AdditiveMap sigma2 = AdditiveMap::power(sigma, 2);
  const AdditiveMap delta2 = AdditiveMap::power(delta, 2);
  try {
    invert_map(sigma2);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotInvertible) throw;
    throw Error(ErrorCode::HypothesisViolated, "sigma^2 is not invertible");
  }
  const ExtensionHandle source = Extension::make(ring, sigma2, delta2, Mode::Standard);
  const ExtensionHandle target = Extension::make(ring, sigma, delta, Mode::Flipped);
  auto image = [&](const OrePolynomial& f) {
    std::vector<RingElement> coeffs(f.is_zero() ? 0 : 2 * *f.degree() + 1, ring->zero());
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) coeffs[2 * i] = f.coeffs()[i];
    return OrePolynomial(target, std::move(coeffs));
  };

  Report report("flipped embedding");
  report.add("source", source->describe());
  report.add("target", target->describe());
  report.add("anticommute", "pass");
  report.add("anticommute.exhaustive", anticommute.exhaustive);
  report.add("sigma_squared_invertible", true);
  report.add("bound", budget.bound);

  const auto gens = additive_generators(*ring, budget.bound);
  std::vector<OrePolynomial> monomials = generator_monomials(source, gens, budget.bound);
  std::vector<std::pair<OrePolynomial, OrePolynomial>> pairs;
  for (const auto& f : monomials)
    for (const auto& g : monomials) pairs.emplace_back(f, g);
  const std::size_t structured = pairs.size();
  Rng rng(budget.seed);
  for (std::size_t k = 0; k < budget.samples; ++k)
    pairs.emplace_back(random_poly(source, budget.bound, rng), random_poly(source, budget.bound, rng));

  std::size_t additive = 0, multiplicative = 0;
  std::string first;
  for (const auto& [f, g] : pairs) {
    const bool add_ok = image(f + g) == image(f) + image(g);
    const bool mul_ok = image(f * g) == image(f) * image(g);
    if (!add_ok) ++additive;
    if (!mul_ok) ++multiplicative;
    if ((!add_ok || !mul_ok) && first.empty()) first = "f=" + format_poly(f) + "; g=" + format_poly(g);
  }
  report.add("structured_pairs", structured);
  report.add("structured_complete", gens.complete);
  report.add("sampled_pairs", pairs.size() - structured);
  report.add("seed", static_cast<unsigned long long>(budget.seed));
  report.add("additive_failures", additive);
  report.add("multiplicative_failures", multiplicative);
  if (!first.empty()) report.add("first_violation", first);
  const bool pass = additive == 0 && multiplicative == 0;
  report.add("verdict", pass ? "pass" : "fail");
  report.note(pass ? "Y^i -> X^(2i) is additive and multiplicative on every probed pair"
                   : "the embedding failed on some probed pair");
  return report;
}

}  // namespace gnoe
