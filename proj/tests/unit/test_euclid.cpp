#include <doctest.h>

#include "gnoe/gnoe.hpp"
#include "oracles.hpp"

using namespace gnoe;

namespace {

RingHandle ring_of(const char* text) { return make_ring(parse_descriptor(text)); }

ExtensionHandle ext_of(const char* ring, const char* sigma, const char* delta = "zero", Mode mode = Mode::Standard) {
  const auto R = build_ring(parse_descriptor(ring));
  return Extension::make(R, parse_map(sigma, R), parse_map(delta, R), mode);
}

OrePolynomial P(const ExtensionHandle& ext, const char* text) { return parse_poly(text, ext); }

/// Bitmask of a matrix over F_2 in the oracle's layout.
unsigned mask_of(const RingElement& m) {
  const auto& entries = as_parts(m);
  unsigned out = 0;
  for (int i = 0; i < 4; ++i)
    if (!entries[i].is_zero()) out |= 1u << i;
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Coefficient ideal membership
// ---------------------------------------------------------------------------

TEST_CASE("a generator is a member with multiplier list (1)") {
  const auto f4 = ring_of("gf(2,2)");
  const auto t = f4->parse("t");
  const auto result = coeff_ideal_membership(f4, Side::Right, {t}, t);
  REQUIRE(std::holds_alternative<MembershipWitness>(result));
  const auto& w = std::get<MembershipWitness>(result);
  CHECK(w.depth == 1);
  REQUIRE(w.terms.size() == 1);
  CHECK(w.terms[0].multipliers.size() == 1);
  CHECK(w.terms[0].multipliers[0].is_one());
}

TEST_CASE("1 lies in the ideal of t in F4") {
  const auto f4 = ring_of("gf(2,2)");
  const auto t = f4->parse("t");
  const auto result = coeff_ideal_membership(f4, Side::Right, {t}, f4->one());
  REQUIRE(std::holds_alternative<MembershipWitness>(result));
  CHECK(std::get<MembershipWitness>(result).evaluate({t}).is_one());
}

TEST_CASE("E22 is outside the right ideal of E11 in Matrix2(F2)") {
  const auto M = ring_of("matrix2(gf(2,1))");
  const auto e11 = M->parse("[[1,0],[0,0]]"), e22 = M->parse("[[0,0],[0,1]]");
  const auto result = coeff_ideal_membership(M, Side::Right, {e11}, e22);
  REQUIRE(std::holds_alternative<NotMember>(result));
  CHECK(std::get<NotMember>(result).proof);
  CHECK_FALSE(oracle::m2_right_closure({mask_of(e11)}).count(mask_of(e22)));
}

TEST_CASE("membership agrees with brute-force closure on Matrix2(F2)") {
  const auto M = ring_of("matrix2(gf(2,1))");
  for (std::uint64_t g = 0; g < 16; ++g) {
    const auto gen = M->element_at(g);
    const auto closure = oracle::m2_right_closure({mask_of(gen)});
    for (std::uint64_t b = 0; b < 16; ++b) {
      const auto target = M->element_at(b);
      const auto result = coeff_ideal_membership(M, Side::Right, {gen}, target);
      const bool member = std::holds_alternative<MembershipWitness>(result);
      REQUIRE(member == static_cast<bool>(closure.count(mask_of(target))));
      if (member) REQUIRE(std::get<MembershipWitness>(result).evaluate({gen}) == target);
      else REQUIRE(std::get<NotMember>(result).proof);
    }
  }
}

TEST_CASE("left and right ideals differ in Matrix2(F2)") {
  const auto M = ring_of("matrix2(gf(2,1))");
  const auto e11 = M->parse("[[1,0],[0,0]]"), e12 = M->parse("[[0,1],[0,0]]"), e21 = M->parse("[[0,0],[1,0]]");
  // e11 R is the first row, R e11 the first column.
  CHECK(std::holds_alternative<MembershipWitness>(coeff_ideal_membership(M, Side::Right, {e11}, e12)));
  CHECK(std::holds_alternative<NotMember>(coeff_ideal_membership(M, Side::Right, {e11}, e21)));
  CHECK(std::holds_alternative<MembershipWitness>(coeff_ideal_membership(M, Side::Left, {e11}, e21)));
  CHECK(std::holds_alternative<NotMember>(coeff_ideal_membership(M, Side::Left, {e11}, e12)));
}

TEST_CASE("membership in K[Y] through gcds") {
  const auto K = ring_of("poly(rationals)");
  const auto g1 = K->parse("Y^2-1"), g2 = K->parse("Y^2+Y");
  // gcd = Y + 1.
  const auto yes = coeff_ideal_membership(K, Side::Right, {g1, g2}, K->parse("Y^3+Y^2"));
  REQUIRE(std::holds_alternative<MembershipWitness>(yes));
  CHECK(std::get<MembershipWitness>(yes).evaluate({g1, g2}) == K->parse("Y^3+Y^2"));
  const auto no = coeff_ideal_membership(K, Side::Right, {g1, g2}, K->parse("Y"));
  REQUIRE(std::holds_alternative<NotMember>(no));
  CHECK(std::get<NotMember>(no).proof);
}

TEST_CASE("membership in octonions and mixed rings") {
  const auto O = ring_of("cayley(3,rationals,[-1,-1,-1])");
  const auto e1 = O->basis()[1];
  const auto result = coeff_ideal_membership(O, Side::Right, {e1}, O->basis()[6]);
  REQUIRE(std::holds_alternative<MembershipWitness>(result));
  CHECK(std::get<MembershipWitness>(result).evaluate({e1}) == O->basis()[6]);

  const auto L = ring_of("mixed(lower)");
  const auto half = L->parse("[[0,0],[1/2,0]]"), quarter = L->parse("[[0,0],[1/4,0]]");
  CHECK(std::holds_alternative<MembershipWitness>(coeff_ideal_membership(L, Side::Right, {quarter}, half)));
  const auto strict = coeff_ideal_membership(L, Side::Right, {half}, quarter);
  REQUIRE(std::holds_alternative<NotMember>(strict));
  CHECK(std::get<NotMember>(strict).proof);
}

// ---------------------------------------------------------------------------
// Division
// ---------------------------------------------------------------------------

TEST_CASE("left division by X reproduces X^3") {
  const auto ext = ext_of("gf(2,1)", "identity");
  const auto gens = GeneratorSet::make(Side::Left, {P(ext, "X")});
  const auto cert = left_divide_step(gens, P(ext, "X^3"));
  CHECK(cert.element == P(ext, "X^3"));
  CHECK(cert.evaluate(gens) == cert.element);
  CHECK(cert.degree_additive(gens));
  CHECK(left_reduce(gens, P(ext, "X^3")).remainder.is_zero());
}

TEST_CASE("left step for (r1 + r2) X^m uses both generators") {
  const auto ext = ext_of("gf(2,2)", "frobenius(1)");
  const auto gens = GeneratorSet::make(Side::Left, {P(ext, "(t)X"), P(ext, "(t+1)X^2")});
  const auto q = P(ext, "X^2");  // t + (t + 1) = 1
  const auto cert = left_divide_step(gens, q);
  CHECK(deg_lc(cert.element, Side::Left).coefficient.is_one());
  CHECK((q - cert.element).degree() < q.degree());
  CHECK(cert.evaluate(gens) == cert.element);
  CHECK(cert.degree_additive(gens));
}

TEST_CASE("left step over F4 with Frobenius: s = ((tX) 1) X") {
  const auto ext = ext_of("gf(2,2)", "frobenius(1)");
  const auto gens = GeneratorSet::make(Side::Left, {P(ext, "(t)X")});
  const auto cert = left_divide_step(gens, P(ext, "(t)X^2"));
  CHECK(cert.element == P(ext, "(t)X^2"));
  CHECK(cert.serialize() == "((g1 * [1]) * [X])");
}

TEST_CASE("left_reduce matches classical long division over F2") {
  const auto ext = ext_of("gf(2,1)", "identity");
  const auto gens = GeneratorSet::make(Side::Left, {P(ext, "X^2+1")});
  const auto red = left_reduce(gens, P(ext, "X^3+X^2"));
  CHECK(red.remainder == P(ext, "X+1"));
  const auto [quotient, remainder] = oracle::long_division({0, 0, 1, 1}, {1, 0, 1}, 2);
  (void)quotient;
  std::vector<std::uint64_t> got;
  for (const auto& c : red.remainder.coeffs()) got.push_back(as_residues(c)[0]);
  CHECK(got == remainder);
  CHECK(red.remainder + red.combined.element == P(ext, "X^3+X^2"));
}

TEST_CASE("left_reduce against long division on random F3 instances") {
  const auto F = ring_of("gf(3,1)");
  const auto ext = Extension::make(F, AdditiveMap::identity(F), AdditiveMap::zero(F), Mode::Standard);
  Rng rng(kDefaultSeed);
  for (int n = 0; n < 100; ++n) {
    auto g = random_poly(ext, 3, rng);
    auto q = random_poly(ext, 6, rng);
    if (g.is_zero() || q.is_zero()) continue;
    std::vector<std::uint64_t> gv, qv;
    for (const auto& c : g.coeffs()) gv.push_back(as_residues(c)[0]);
    for (const auto& c : q.coeffs()) qv.push_back(as_residues(c)[0]);
    const auto red = left_reduce(GeneratorSet::make(Side::Left, {g}), q);
    std::vector<std::uint64_t> got;
    for (const auto& c : red.remainder.coeffs()) got.push_back(as_residues(c)[0]);
    REQUIRE(got == oracle::long_division(qv, gv, 3).second);
    REQUIRE(red.steps <= *q.degree() + 1);
  }
}

TEST_CASE("degree below every generator leaves q untouched") {
  const auto ext = ext_of("gf(2,2)", "frobenius(1)");
  const auto gens = GeneratorSet::make(Side::Left, {P(ext, "X^3")});
  const auto red = left_reduce(gens, P(ext, "(t)X+1"));
  CHECK(red.remainder == P(ext, "(t)X+1"));
  CHECK(red.steps == 0);
  CHECK(red.combined.terms.empty());
  CHECK_THROWS_AS(left_divide_step(gens, P(ext, "(t)X+1")), Error);
}

TEST_CASE("a generator reduces to zero in one step") {
  const auto ext = ext_of("poly(gf(2,1))", "substitution(2)");
  const auto g = P(ext, "(Y)X+(Y^2)");
  const auto red = left_reduce(GeneratorSet::make(Side::Left, {g}), g);
  CHECK(red.remainder.is_zero());
  CHECK(red.steps == 1);
}

TEST_CASE("leading coefficient outside the ideal") {
  const auto ext = ext_of("poly(gf(2,1))", "substitution(2)");
  const auto gens = GeneratorSet::make(Side::Left, {P(ext, "(Y^2)X")});
  try {
    left_divide_step(gens, P(ext, "(Y)X^2"));
    FAIL("expected LeadingCoeffNotInIdeal");
  } catch (const LeadingCoeffNotInIdeal& e) {
    CHECK(e.code() == ErrorCode::LeadingCoeffNotInIdeal);
    CHECK(e.evidence().proof);
  }
  // left_reduce stops instead of throwing.
  const auto red = left_reduce(gens, P(ext, "(Y)X^2"));
  CHECK(red.remainder == P(ext, "(Y)X^2"));
}

TEST_CASE("right division mirrors ordinary division") {
  const auto ext = ext_of("gf(2,1)", "identity");
  const auto gens = GeneratorSet::make(Side::Right, {P(ext, "X")});
  const auto cert = right_divide_step(gens, P(ext, "X^2"));
  CHECK(cert.element == P(ext, "X^2"));
  CHECK(cert.evaluate(gens) == cert.element);
}

TEST_CASE("right step contract over F4 with Frobenius") {
  const auto ext = ext_of("gf(2,2)", "frobenius(1)");
  const oracle::SkewRing S{{2, field_modulus(2, 2)}, 1};
  Rng rng(kDefaultSeed);
  const auto& F = *ext->ring();
  for (int n = 0; n < 100; ++n) {
    RingElement a = F.random(rng);
    if (a.is_zero()) a = F.one();
    const std::size_t d = rng() % 3;
    const auto gens = GeneratorSet::make(Side::Right, {OrePolynomial::monomial(ext, a, d)});
    auto q = random_poly(ext, 4, rng);
    if (q.is_zero() || *q.degree() < d) continue;
    const auto cert = right_divide_step(gens, q);
    const auto before = deg_lc(q, Side::Right), after = deg_lc(q - cert.element, Side::Right);
    REQUIRE(after.degree < before.degree);
    REQUIRE(deg_lc(cert.element, Side::Right).coefficient == before.coefficient);
    // Oracle evaluation: X^e (s_m (... (s_1 p))).
    oracle::SkewPoly sum;
    for (const auto& tree : cert.terms) {
      oracle::SkewPoly acc = oracle::to_skew(gens.gens[tree.generator]);
      for (const auto& m : tree.multipliers) acc = S.mul(oracle::to_skew(m), acc);
      sum = S.add(sum, acc);
    }
    REQUIRE(sum == oracle::to_skew(cert.element));
  }
}

TEST_CASE("right division needs an automorphism in standard mode") {
  const auto skew = ext_of("poly(gf(2,1))", "substitution(2)");
  CHECK_THROWS_AS(right_divide_step(GeneratorSet::make(Side::Right, {P(skew, "X")}), P(skew, "X^2")), Error);
  const auto flipped = ext_of("gf(2,2)", "frobenius(1)", "zero", Mode::Flipped);
  try {
    right_divide_step(GeneratorSet::make(Side::Right, {P(flipped, "X")}), P(flipped, "X^2"));
    FAIL("expected UnsupportedMode");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedMode);
  }
}

TEST_CASE("right lc outside the left coefficient ideal") {
  const auto M = ring_of("matrix2(gf(2,1))");
  const auto ext = Extension::make(M, AdditiveMap::identity(M), AdditiveMap::zero(M), Mode::Standard);
  const auto gens = GeneratorSet::make(Side::Right, {P(ext, "[[1,0],[0,0]]X")});
  CHECK_THROWS_AS(right_divide_step(gens, P(ext, "[[0,1],[0,0]]X")), LeadingCoeffNotInIdeal);
}

TEST_CASE("left and right reduction agree for commutative coefficients with trivial twist") {
  const auto F = ring_of("gf(3,1)");
  const auto ext = Extension::make(F, AdditiveMap::identity(F), AdditiveMap::zero(F), Mode::Standard);
  Rng rng(kDefaultSeed + 1);
  for (int n = 0; n < 50; ++n) {
    const auto g = random_poly(ext, 2, rng), q = random_poly(ext, 5, rng);
    if (g.is_zero() || q.is_zero()) continue;
    REQUIRE(left_reduce(GeneratorSet::make(Side::Left, {g}), q).remainder ==
            right_reduce(GeneratorSet::make(Side::Right, {g}), q).remainder);
  }
}

TEST_CASE("certificate serialization") {
  const auto ext = ext_of("gf(2,1)", "identity");
  const auto left = left_divide_step(GeneratorSet::make(Side::Left, {P(ext, "X")}), P(ext, "X^2"));
  CHECK(left.serialize() == "((g1 * [1]) * [X])");
  const auto right = right_divide_step(GeneratorSet::make(Side::Right, {P(ext, "X")}), P(ext, "X^2"));
  CHECK(right.serialize() == "([X] * ([1] * g1))");
}

TEST_CASE("module generation") {
  const auto f4 = ext_of("gf(2,2)", "frobenius(1)");
  for (std::size_t m = 0; m <= 3; ++m) {
    const auto report = module_generation_check(f4, m);
    CHECK(*report.find("verdict") == "pass");
    CHECK(*report.find("exhaustive") == "true");
  }
  const auto plain = ext_of("poly(rationals)", "identity");
  CHECK(*module_generation_check(plain, 2).find("verdict") == "pass");

  const auto skew = ext_of("poly(gf(2,1))", "substitution(2)");
  const auto failing = module_generation_check(skew, 2);
  CHECK(*failing.find("verdict") == "fail");
  CHECK(failing.find("first_failure") != nullptr);
}
