#include "gnoe/euclid.hpp"

#include <algorithm>

#include "gnoe/textio.hpp"

namespace gnoe {

namespace {

using Degree = std::optional<std::size_t>;

Degree side_degree(const OrePolynomial& p, Side side) {
  return side == Side::Left ? p.degree() : deg_lc(p, Side::Right).degree;
}

OrePolynomial apply_tree(Side side, const OrePolynomial& p, const std::vector<OrePolynomial>& multipliers) {
  OrePolynomial value = p;
  for (const auto& m : multipliers) value = side == Side::Left ? value * m : m * value;
  return value;
}

void require_side(const GeneratorSet& gens, Side side) {
  if (gens.side != side)
    throw Error(ErrorCode::PreconditionDegree, "generator set is for " + side_name(gens.side) + " division");
}

/// Shared checks of both steps: q != 0 and q at least as large as every generator.
std::size_t check_degrees(const GeneratorSet& gens, const OrePolynomial& q, std::vector<std::size_t>& degrees) {
  require_same_owner(gens.gens.front(), q);
  if (q.is_zero()) throw Error(ErrorCode::PreconditionDegree, "cannot divide the zero polynomial");
  const std::size_t d = *side_degree(q, gens.side);
  for (const auto& p : gens.gens) {
    const std::size_t di = *side_degree(p, gens.side);
    if (di > d)
      throw Error(ErrorCode::PreconditionDegree, "generator degree " + std::to_string(di) + " exceeds " +
                                                     std::to_string(d));
    degrees.push_back(di);
  }
  return d;
}

MembershipWitness leading_witness(const GeneratorSet& gens, const RingElement& lc,
                                  const std::vector<RingElement>& lcs) {
  const Side ideal_side = gens.side == Side::Left ? Side::Right : Side::Left;
  const RingHandle& ring = gens.owner->ring();
  auto result = coeff_ideal_membership(ring, ideal_side, lcs, lc);
  if (auto* missing = std::get_if<NotMember>(&result)) {
    throw LeadingCoeffNotInIdeal(*missing, ring->format(lc) + " is not in the " + side_name(ideal_side) +
                                               " ideal of the leading coefficients (" + missing->reason + ")");
  }
  return std::get<MembershipWitness>(std::move(result));
}

void check_step(const GeneratorSet& gens, const DivisionCertificate& cert, const OrePolynomial& q, std::size_t d,
                const RingElement& lc) {
  const Side side = gens.side;
  if (!(cert.evaluate(gens) == cert.element))
    throw Error(ErrorCode::ContractViolation, "certificate does not re-evaluate");
  const DegLc s = deg_lc(cert.element, side);
  if (s.degree != Degree(d) || !(s.coefficient == lc))
    throw Error(ErrorCode::ContractViolation, "leading term of s differs from q");
  if (side_degree(q - cert.element, side) >= Degree(d))
    throw Error(ErrorCode::ContractViolation, "deg(q - s) did not drop");
}

}  // namespace

GeneratorSet GeneratorSet::make(Side side, std::vector<OrePolynomial> gens) {
  if (gens.empty()) throw Error(ErrorCode::PreconditionDegree, "empty generator set");
  for (const auto& p : gens) {
    require_same_owner(gens.front(), p);
    if (p.is_zero()) throw Error(ErrorCode::PreconditionDegree, "zero generator");
  }
  GeneratorSet set;
  set.owner = gens.front().owner();
  set.side = side;
  set.gens = std::move(gens);
  return set;
}

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

OrePolynomial DivisionCertificate::evaluate(const GeneratorSet& gens) const {
  OrePolynomial sum = OrePolynomial::zero(gens.owner);
  for (const auto& tree : terms) sum = sum + apply_tree(side, gens.gens.at(tree.generator), tree.multipliers);
  return sum;
}

bool DivisionCertificate::degree_additive(const GeneratorSet& gens) const {
  Degree best;
  for (const auto& tree : terms) {
    Degree total = side_degree(gens.gens.at(tree.generator), side);
    for (const auto& m : tree.multipliers) {
      const Degree dm = side_degree(m, side);
      total = total && dm ? Degree(*total + *dm) : std::nullopt;
    }
    best = std::max(best, total);
  }
  return best == side_degree(element, side) && best == claimed_degree;
}

std::string DivisionCertificate::serialize() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& tree : terms) {
    std::string acc = "g" + std::to_string(tree.generator + 1);
    for (const auto& m : tree.multipliers) {
      const std::string factor = "[" + format_poly(m) + "]";
      acc = side == Side::Left ? "(" + acc + " * " + factor + ")" : "(" + factor + " * " + acc + ")";
    }
    if (!out.empty()) out += " + ";
    out += acc;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Steps
// ---------------------------------------------------------------------------

DivisionCertificate left_divide_step(const GeneratorSet& gens, const OrePolynomial& q) {
  require_side(gens, Side::Left);
  std::vector<std::size_t> degrees;
  const std::size_t d = check_degrees(gens, q, degrees);
  const Extension& ext = *gens.owner;
  const RingElement lc = q.coeffs().back();
  std::vector<RingElement> lcs;
  for (const auto& p : gens.gens) lcs.push_back(p.coeffs().back());

  // lc(((p_i s_1)...) s_m) = ((a_i sigma^{d_i}(s_1))...) sigma^{d_i}(s_m), so s_k = sigma^{-d_i}(r_k).
  const MembershipWitness witness = leading_witness(gens, lc, lcs);
  DivisionCertificate cert{Side::Left, OrePolynomial::zero(gens.owner), {}, d};
  for (const auto& term : witness.terms) {
    ProductTree tree{term.generator, {}};
    for (const auto& r : term.multipliers) {
      const auto s = sigma_preimage(ext, degrees[term.generator], r);
      if (!s)
        throw Error(ErrorCode::PreimageUnavailable,
                    ext.ring()->format(r) + " has no preimage under sigma^" + std::to_string(degrees[term.generator]));
      tree.multipliers.push_back(OrePolynomial::constant(gens.owner, *s));
    }
    tree.multipliers.push_back(OrePolynomial::x_power(gens.owner, d - degrees[term.generator]));
    cert.element = cert.element + apply_tree(Side::Left, gens.gens[term.generator], tree.multipliers);
    cert.terms.push_back(std::move(tree));
  }
  check_step(gens, cert, q, d, lc);
  return cert;
}

DivisionCertificate right_divide_step(const GeneratorSet& gens, const OrePolynomial& q) {
  require_side(gens, Side::Right);
  const Extension& ext = *gens.owner;
  if (ext.mode() != Mode::Standard)
    throw Error(ErrorCode::UnsupportedMode, "right division is implemented for standard extensions");
  if (!ext.sigma_inverse()) throw Error(ErrorCode::NotInvertible, "right division needs sigma to be an automorphism");
  std::vector<std::size_t> degrees;
  const std::size_t d = check_degrees(gens, q, degrees);
  const RingElement lc = deg_lc(q, Side::Right).coefficient;
  std::vector<RingElement> lcs;
  for (const auto& p : gens.gens) lcs.push_back(deg_lc(p, Side::Right).coefficient);

  // lc_r(s p_i) = sigma^{-d_i}(s) lc_r(p_i), so s_k = sigma^{d_i}(r_k).
  const MembershipWitness witness = leading_witness(gens, lc, lcs);
  DivisionCertificate cert{Side::Right, OrePolynomial::zero(gens.owner), {}, d};
  for (const auto& term : witness.terms) {
    ProductTree tree{term.generator, {}};
    for (const auto& r : term.multipliers)
      tree.multipliers.push_back(OrePolynomial::constant(gens.owner, sigma_power(ext, degrees[term.generator], r)));
    tree.multipliers.push_back(OrePolynomial::x_power(gens.owner, d - degrees[term.generator]));
    cert.element = cert.element + apply_tree(Side::Right, gens.gens[term.generator], tree.multipliers);
    cert.terms.push_back(std::move(tree));
  }
  check_step(gens, cert, q, d, lc);
  return cert;
}

// ---------------------------------------------------------------------------
// Reduction
// ---------------------------------------------------------------------------

namespace {

Reduction reduce(const GeneratorSet& gens, const OrePolynomial& q, Side side) {
  require_side(gens, side);
  require_same_owner(gens.gens.front(), q);
  Reduction out{q, {side, OrePolynomial::zero(gens.owner), {}, std::nullopt}, 0};
  while (!out.remainder.is_zero()) {
    const std::size_t d = *side_degree(out.remainder, side);
    std::vector<OrePolynomial> usable;
    std::vector<std::size_t> index;
    for (std::size_t i = 0; i < gens.gens.size(); ++i)
      if (*side_degree(gens.gens[i], side) <= d) {
        usable.push_back(gens.gens[i]);
        index.push_back(i);
      }
    if (usable.empty()) break;
    const GeneratorSet subset = GeneratorSet::make(side, std::move(usable));
    DivisionCertificate step;
    try {
      step = side == Side::Left ? left_divide_step(subset, out.remainder) : right_divide_step(subset, out.remainder);
    } catch (const LeadingCoeffNotInIdeal&) {
      break;
    }
    for (auto& tree : step.terms) {
      tree.generator = index[tree.generator];
      out.combined.terms.push_back(std::move(tree));
    }
    out.combined.element = out.combined.element + step.element;
    out.remainder = out.remainder - step.element;
    ++out.steps;
  }
  out.combined.claimed_degree = side_degree(out.combined.element, side);
  return out;
}

}  // namespace

Reduction left_reduce(const GeneratorSet& gens, const OrePolynomial& q) { return reduce(gens, q, Side::Left); }

Reduction right_reduce(const GeneratorSet& gens, const OrePolynomial& q) { return reduce(gens, q, Side::Right); }

// ---------------------------------------------------------------------------
// Module generation
// ---------------------------------------------------------------------------

Report module_generation_check(const ExtensionHandle& ext, std::size_t m, const GenerationBudget& budget) {
  const Ring& R = *ext->ring();
  Report report("module generation");
  report.add("extension", ext->describe());
  report.add("m", m);

  // Exhaustive when |R|^(m+1) fits the limit.
  bool exhaustive = false;
  std::uint64_t total = 1;
  if (const auto size = R.cardinality()) {
    exhaustive = true;
    for (std::size_t i = 0; i <= m && exhaustive; ++i) {
      if (total > budget.exhaustive_limit / *size) exhaustive = false;
      total *= *size;
    }
  }

  std::vector<OrePolynomial> samples;
  if (exhaustive) {
    const std::uint64_t size = *R.cardinality();
    for (std::uint64_t code = 0; code < total; ++code) {
      std::vector<RingElement> coeffs;
      for (std::uint64_t rest = code, i = 0; i <= m; ++i, rest /= size) coeffs.push_back(R.element_at(rest % size));
      samples.emplace_back(ext, std::move(coeffs));
    }
  } else {
    Rng rng(budget.seed);
    for (std::size_t i = 0; i <= m; ++i) samples.push_back(OrePolynomial::x_power(ext, i));
    for (std::size_t k = 0; k < budget.samples; ++k) samples.push_back(random_poly(ext, m, rng));
    report.add("seed", static_cast<unsigned long long>(budget.seed));
  }

  std::size_t failures = 0;
  std::string first_failure;
  std::string first_reason;
  for (const auto& q : samples) {
    // q = sum x^n r_n, peeling the top degree with r_n = sigma^{-n}(lc).
    std::string reason;
    OrePolynomial rest = q;
    OrePolynomial rebuilt = OrePolynomial::zero(ext);
    while (!rest.is_zero() && reason.empty()) {
      const std::size_t n = *rest.degree();
      if (n > m) {
        reason = "degree " + std::to_string(n) + " exceeds m";
        break;
      }
      std::optional<RingElement> r;
      try {
        r = sigma_preimage(*ext, n, rest.coeffs().back());
      } catch (const Error& e) {
        if (e.code() != ErrorCode::PreimageUnavailable) throw;
        throw Error(ErrorCode::UnsupportedRingClass, e.what());
      }
      if (!r) {
        reason = R.format(rest.coeffs().back()) + " has no preimage under sigma^" + std::to_string(n);
        break;
      }
      const OrePolynomial term = OrePolynomial::x_power(ext, n) * OrePolynomial::constant(ext, *r);
      const OrePolynomial next = rest - term;
      if (next.degree() >= rest.degree()) reason = "degree did not drop at " + std::to_string(n);
      rebuilt = rebuilt + term;
      rest = next;
    }
    if (reason.empty() && !(rebuilt == q)) reason = "expansion does not re-evaluate";
    if (!reason.empty() && failures++ == 0) {
      first_failure = format_poly(q);
      first_reason = reason;
    }
  }

  report.add("exhaustive", exhaustive);
  report.add("checked", samples.size());
  report.add("failures", failures);
  report.add("verdict", failures == 0 ? "pass" : "fail");
  if (failures) {
    report.add("first_failure", first_failure);
    report.add("first_failure_reason", first_reason);
  }
  report.note(failures == 0 ? "every sampled q lies in the right module generated by x^0..x^" + std::to_string(m)
                            : std::to_string(failures) + " element(s) could not be generated");
  return report;
}

}  // namespace gnoe
