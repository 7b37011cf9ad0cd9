#include <algorithm>
#include <unordered_map>

#include "gnoe/euclid.hpp"
#include "linalg.hpp"
#include "rings_impl.hpp"

namespace gnoe {

RingElement nested_product(Side side, const RingElement& g, const std::vector<RingElement>& multipliers) {
  RingElement value = g;
  for (const auto& m : multipliers) value = side == Side::Right ? value * m : m * value;
  return value;
}

RingElement MembershipWitness::evaluate(const std::vector<RingElement>& gens) const {
  RingElement sum = target.ring().zero();
  for (const auto& term : terms) sum += nested_product(side, gens.at(term.generator), term.multipliers);
  return sum;
}

namespace {

// Finite fields in this engine are small; larger finite rings are not closed
// by enumeration.
constexpr std::uint64_t kEnumerationLimit = 1 << 16;

MembershipWitness single(Side side, const RingElement& b, std::size_t generator, RingElement multiplier) {
  MembershipWitness w;
  w.side = side;
  w.target = b;
  w.terms.push_back({generator, {std::move(multiplier)}});
  w.depth = 1;
  return w;
}

MembershipResult field_membership(const Ring& ring, Side side, const std::vector<RingElement>& gens,
                                  const RingElement& b) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_zero()) continue;
    const RingElement inv = ring.inverse(gens[i]);
    return single(side, b, i, side == Side::Right ? inv * b : b * inv);
  }
  return NotMember{true, 1, "every generator is zero"};
}

MembershipResult poly_membership(const detail::PolyRing& ring, Side side, const std::vector<RingElement>& gens,
                                 const RingElement& b) {
  // g = sum u_i gens[i]; commutative, so both sides agree.
  RingElement g = ring.zero();
  std::vector<RingElement> u(gens.size(), ring.zero());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto bezout = ring.extended_gcd(g, gens[i]);
    for (std::size_t j = 0; j < i; ++j) u[j] = ring.mul(bezout.u, u[j]);
    u[i] = bezout.v;
    g = bezout.gcd;
  }
  if (g.is_zero()) return NotMember{true, 1, "every generator is zero"};
  const auto division = ring.divmod(b, g);
  if (!division.remainder.is_zero())
    return NotMember{true, 1, "gcd " + ring.format(g) + " does not divide " + ring.format(b)};
  MembershipWitness w;
  w.side = side;
  w.target = b;
  w.depth = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    RingElement m = ring.mul(u[i], division.quotient);
    if (!m.is_zero()) w.terms.push_back({i, {std::move(m)}});
  }
  return w;
}

struct Chain {
  std::size_t generator;
  std::vector<RingElement> multipliers;  // (1) at depth 1
  RingElement value;
  std::size_t depth;
};

Chain extend(Side side, const Chain& parent, const RingElement& m) {
  Chain child{parent.generator, {}, side == Side::Right ? parent.value * m : m * parent.value, parent.depth + 1};
  if (parent.depth > 1) child.multipliers = parent.multipliers;
  child.multipliers.push_back(m);
  return child;
}

/// Linear closure over the base field. Only chains that enlarged the span
/// are extended: a dependent chain is a combination of earlier ones, so its
/// products are too. An empty frontier therefore closes the ideal.
MembershipResult algebra_membership(const Ring& ring, Side side, const std::vector<RingElement>& gens,
                                    const RingElement& b, std::size_t depth_bound) {
  const RingHandle field = ring.base_field();
  detail::EchelonBasis span(field, *ring.dimension());
  const auto basis = ring.basis();
  std::vector<Chain> chains;
  std::vector<std::size_t> frontier;

  auto admit = [&](Chain chain) {
    const std::size_t tag = chains.size();
    chains.push_back(std::move(chain));
    if (span.insert(ring.coordinates(chains.back().value), tag)) frontier.push_back(tag);
  };
  for (std::size_t i = 0; i < gens.size(); ++i) admit({i, {ring.one()}, gens[i], 1});

  for (std::size_t depth = 1;; ++depth) {
    if (auto combination = span.solve(ring.coordinates(b))) {
      MembershipWitness w;
      w.side = side;
      w.target = b;
      for (const auto& [tag, lambda] : *combination) {
        const Chain& chain = chains[tag];
        MembershipTerm term{chain.generator, chain.multipliers};
        if (!lambda.is_one()) term.multipliers.push_back(ring.scalar(lambda));
        w.depth = std::max(w.depth, chain.depth);
        w.terms.push_back(std::move(term));
      }
      return w;
    }
    if (frontier.empty())
      return NotMember{true, depth, "closure stabilized at dimension " + std::to_string(span.rank())};
    if (depth == depth_bound) return NotMember{false, depth, "depth bound reached"};
    const std::vector<std::size_t> current = std::exchange(frontier, {});
    for (std::size_t tag : current)
      for (const auto& m : basis) admit(extend(side, chains[tag], m));
  }
}

/// Additive closure by enumeration. Each span element records the element it
/// was reached from and the chain added, so witnesses unwind as a path.
MembershipResult finite_membership(const Ring& ring, Side side, const std::vector<RingElement>& gens,
                                   const RingElement& b, std::size_t depth_bound) {
  const std::uint64_t size = *ring.cardinality();
  struct Step {
    std::uint64_t previous;
    std::size_t chain;
  };
  std::unordered_map<std::uint64_t, Step> span{{ring.index_of(ring.zero()), {0, SIZE_MAX}}};
  std::vector<std::uint64_t> order{ring.index_of(ring.zero())};
  std::vector<Chain> chains;
  std::vector<std::size_t> frontier;

  auto admit = [&](Chain chain) {
    const std::uint64_t v = ring.index_of(chain.value);
    if (span.count(v)) return;
    const std::size_t tag = chains.size();
    chains.push_back(std::move(chain));
    frontier.push_back(tag);
    for (std::size_t k = 0; k < order.size(); ++k) {
      const std::uint64_t next = ring.index_of(ring.element_at(order[k]) + chains[tag].value);
      if (span.emplace(next, Step{order[k], tag}).second) order.push_back(next);
    }
  };
  for (std::size_t i = 0; i < gens.size(); ++i) admit({i, {ring.one()}, gens[i], 1});

  std::vector<RingElement> multipliers;
  for (std::uint64_t k = 0; k < size; ++k) {
    RingElement m = ring.element_at(k);
    if (!m.is_zero()) multipliers.push_back(std::move(m));
  }

  const std::uint64_t target = ring.index_of(b);
  for (std::size_t depth = 1;; ++depth) {
    if (span.count(target)) {
      MembershipWitness w;
      w.side = side;
      w.target = b;
      for (std::uint64_t at = target; span.at(at).chain != SIZE_MAX; at = span.at(at).previous) {
        const Chain& chain = chains[span.at(at).chain];
        w.terms.push_back({chain.generator, chain.multipliers});
        w.depth = std::max(w.depth, chain.depth);
      }
      std::reverse(w.terms.begin(), w.terms.end());
      return w;
    }
    if (frontier.empty())
      return NotMember{true, depth, "closure stabilized at " + std::to_string(span.size()) + " elements"};
    if (depth == depth_bound) return NotMember{false, depth, "depth bound reached"};
    const std::vector<std::size_t> current = std::exchange(frontier, {});
    for (std::size_t tag : current)
      for (const auto& m : multipliers) admit(extend(side, chains[tag], m));
  }
}

/// In a unital associative ring the one-sided ideal is sum g_i R exactly.
/// Z: integral combinations. Mixed triangular: r = z E11 + q E_q + w E22,
/// so the ideal is the Z-span of g_i E11 plus the Q-span of g_i E_q, g_i E22.
MembershipResult lattice_membership(const Ring& ring, Side side, const std::vector<RingElement>& gens,
                                    const RingElement& b) {
  auto times = [&](const RingElement& g, const RingElement& m) { return side == Side::Right ? g * m : m * g; };
  MembershipWitness w;
  w.side = side;
  w.target = b;
  w.depth = 1;

  if (ring.descriptor().kind == RingKind::Integers) {
    std::vector<std::vector<mpq_class>> integral;
    for (const auto& g : gens) integral.push_back({mpq_class(as_integer(g))});
    const auto solution = detail::solve_lattice(integral, {}, {mpq_class(as_integer(b))});
    if (!solution) return NotMember{true, 1, "not a multiple of the generator gcd"};
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (solution->integral[i] != 0) w.terms.push_back({i, {ring.from_integer(solution->integral[i])}});
    return w;
  }

  const auto& mixed = static_cast<const detail::MixedTriangularRing&>(ring);
  auto coords = [&](const RingElement& a) {
    const auto p = mixed.parts(a);
    return std::vector<mpq_class>{mpq_class(p.z), p.q, p.w};
  };
  const RingElement e11 = mixed.from_parts(1, 0, 0);
  const RingElement eq = mixed.from_parts(0, 1, 0);
  const RingElement e22 = mixed.from_parts(0, 0, 1);
  std::vector<std::vector<mpq_class>> integral, rational;
  for (const auto& g : gens) {
    integral.push_back(coords(times(g, e11)));
    rational.push_back(coords(times(g, eq)));
    rational.push_back(coords(times(g, e22)));
  }
  const auto solution = detail::solve_lattice(integral, rational, coords(b));
  if (!solution) return NotMember{true, 1, "outside the generated lattice"};
  for (std::size_t i = 0; i < gens.size(); ++i) {
    RingElement m = mixed.from_parts(solution->integral[i], solution->rational[2 * i], solution->rational[2 * i + 1]);
    if (!m.is_zero()) w.terms.push_back({i, {std::move(m)}});
  }
  return w;
}

}  // namespace

MembershipResult coeff_ideal_membership(const RingHandle& ring, Side side, const std::vector<RingElement>& gens,
                                        const RingElement& b, std::size_t depth_bound) {
  ring->require_owned(b);
  for (const auto& g : gens) ring->require_owned(g);
  if (depth_bound == 0) throw Error(ErrorCode::PreconditionDegree, "membership depth bound must be at least 1");

  if (b.is_zero()) return MembershipWitness{side, b, {}, 0};
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (ring->equal(gens[i], b)) return single(side, b, i, ring->one());
  if (gens.empty()) return NotMember{true, 0, "no generators"};

  const RingKind kind = ring->descriptor().kind;
  if (ring->is_field() && ring->is_associative() && ring->is_commutative())
    return field_membership(*ring, side, gens, b);
  if (kind == RingKind::PolyOverField)
    return poly_membership(static_cast<const detail::PolyRing&>(*ring), side, gens, b);
  if (ring->base_field() && ring->dimension()) return algebra_membership(*ring, side, gens, b, depth_bound);
  if (ring->cardinality() && *ring->cardinality() <= kEnumerationLimit)
    return finite_membership(*ring, side, gens, b, depth_bound);
  if (kind == RingKind::Integers || kind == RingKind::MixedTriangular2)
    return lattice_membership(*ring, side, gens, b);
  throw Error(ErrorCode::UnsupportedRingClass,
              "no membership engine for " + ring->descriptor().to_string());
}

}  // namespace gnoe
