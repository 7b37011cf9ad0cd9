#include <doctest.h>

#include "gnoe/gnoe.hpp"
#include "oracles.hpp"

using namespace gnoe;

namespace {

RingHandle ring_of(const char* text) { return make_ring(parse_descriptor(text)); }

std::uint64_t binomial(unsigned n, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("apply_map on named kinds") {
  const auto K = ring_of("poly(gf(2,1))");
  CHECK(AdditiveMap::identity(K)(K->parse("Y+1")) == K->parse("Y+1"));
  CHECK(AdditiveMap::zero(K)(K->parse("Y+1")).is_zero());
  CHECK(AdditiveMap::substitution(K, 2)(K->parse("Y+1")) == K->parse("Y^2+1"));
  CHECK(AdditiveMap::formal_derivative(K)(K->parse("Y^3+Y")) == K->parse("Y^2+1"));

  const auto f4 = ring_of("gf(2,2)");
  const auto t = f4->parse("t");
  CHECK(AdditiveMap::frobenius(f4, 1)(t) == t * t);

  const auto Z = ring_of("integers");
  CHECK_THROWS_AS(AdditiveMap::substitution(Z, 2), Error);
}

TEST_CASE("composition applies right to left") {
  const auto K = ring_of("poly(rationals)");
  const auto d = AdditiveMap::formal_derivative(K), s = AdditiveMap::substitution(K, 2);
  const auto y3 = K->parse("Y^3");
  // d(s(Y^3)) = 6Y^5, s(d(Y^3)) = 3Y^4.
  CHECK(AdditiveMap::compose({d, s})(y3) == K->parse("6Y^5"));
  CHECK(AdditiveMap::compose({s, d})(y3) == K->parse("3Y^4"));
}

TEST_CASE("pi_0^0 is the identity and out-of-range pi vanishes") {
  const auto f4 = ring_of("gf(2,2)");
  const auto sigma = AdditiveMap::frobenius(f4, 1);
  const auto delta = AdditiveMap::sum({AdditiveMap::identity(f4), sigma});
  const auto t = f4->parse("t");
  CHECK(pi_map(sigma, delta, 0, 0, t) == t);
  CHECK(pi_map(sigma, delta, 5, 3, t).is_zero());
  CHECK(pi_map(sigma, delta, -1, 2, t).is_zero());
}

TEST_CASE("pi_2^3 is the three-word sum") {
  const auto words = pi_words(2, 3);
  std::vector<std::string> printed;
  for (const auto& w : words) printed.push_back(format_word(w));
  CHECK(printed == std::vector<std::string>{"σ∘σ∘δ", "σ∘δ∘σ", "δ∘σ∘σ"});

  const auto f4 = ring_of("gf(2,2)");
  const auto sigma = AdditiveMap::frobenius(f4, 1);
  const auto delta = AdditiveMap::sum({AdditiveMap::identity(f4), sigma});
  for (std::uint64_t i = 0; i < 4; ++i) {
    const auto s = f4->element_at(i);
    const auto expected = sigma(sigma(delta(s))) + sigma(delta(sigma(s))) + delta(sigma(sigma(s)));
    CHECK(pi_map(sigma, delta, 2, 3, s, PiStrategy::Enumeration) == expected);
    CHECK(pi_map(sigma, delta, 2, 3, s, PiStrategy::Recursion) == expected);
  }
}

TEST_CASE("word counts are binomial") {
  for (unsigned m = 0; m <= 8; ++m)
    for (unsigned i = 0; i <= m; ++i) REQUIRE(pi_words(i, m).size() == binomial(m, i));
}

TEST_CASE("pi strategies agree with the word oracle") {
  const auto K = ring_of("poly(gf(3,1))");
  const auto sigma = AdditiveMap::substitution(K, 2);
  const auto delta = AdditiveMap::formal_derivative(K);
  Rng rng(kDefaultSeed);
  for (int n = 0; n < 10; ++n) {
    const auto s = K->random(rng);
    for (long m = 0; m <= 5; ++m)
      for (long i = 0; i <= m; ++i) {
        const auto expected = oracle::pi_by_words(sigma, delta, i, m, s);
        REQUIRE(pi_map(sigma, delta, i, m, s, PiStrategy::Enumeration) == expected);
        REQUIRE(pi_map(sigma, delta, i, m, s, PiStrategy::Recursion) == expected);
      }
  }
}

TEST_CASE("zero delta leaves only sigma^m") {
  const auto f8 = ring_of("gf(2,3)");
  const auto sigma = AdditiveMap::frobenius(f8, 1);
  const auto zero = AdditiveMap::zero(f8);
  const auto t = f8->parse("t");
  for (long m = 0; m <= 6; ++m) {
    for (long i = 0; i < m; ++i) CHECK(pi_map(sigma, zero, i, m, t).is_zero());
    CHECK(pi_map(sigma, zero, m, m, t) == AdditiveMap::power(sigma, m)(t));
  }
}

TEST_CASE("row sum with sigma = delta = identity is 2^m s") {
  const auto Z = ring_of("integers");
  const auto id = AdditiveMap::identity(Z);
  const auto s = Z->parse("7");
  for (std::size_t m = 0; m <= 8; ++m) {
    RingElement sum = Z->zero();
    for (const auto& v : pi_row(id, id, m, s)) sum = sum + v;
    CHECK(sum == Z->from_integer(mpz_class(7) << m));
  }
}

TEST_CASE("invert_map") {
  const auto f8 = ring_of("gf(2,3)");
  const auto inv = invert_map(AdditiveMap::frobenius(f8, 1));
  CHECK(inv.kind() == MapKind::FrobeniusPower);
  CHECK(inv.parameter() == 2);
  for (std::uint64_t i = 0; i < 8; ++i) {
    const auto a = f8->element_at(i);
    CHECK(inv(AdditiveMap::frobenius(f8, 1)(a)) == a);
  }

  const auto H = ring_of("cayley(2,rationals,[-1,-1])");
  CHECK(invert_map(AdditiveMap::conjugation(H)).kind() == MapKind::Conjugation);

  const auto K = ring_of("poly(gf(2,1))");
  CHECK_THROWS_AS(invert_map(AdditiveMap::substitution(K, 2)), Error);
  CHECK_THROWS_AS(invert_map(AdditiveMap::formal_derivative(K)), Error);
  CHECK(invert_map(AdditiveMap::substitution(K, 1)).kind() == MapKind::Identity);
}

TEST_CASE("invert_map round-trips on every element of finite rings") {
  const auto M = ring_of("matrix2(gf(2,1))");
  const auto c = M->parse("[[1,1],[0,1]]");
  std::vector<RingElement> images;
  for (std::uint64_t i = 0; i < 16; ++i) images.push_back(c * M->element_at(i));
  const auto table = AdditiveMap::table(M, images);
  const auto inv = invert_map(table);
  for (std::uint64_t i = 0; i < 16; ++i) {
    const auto a = M->element_at(i);
    REQUIRE(inv(table(a)) == a);
    REQUIRE(table(inv(a)) == a);
  }
}

TEST_CASE("preimage search") {
  const auto K = ring_of("poly(gf(2,1))");
  const auto s = AdditiveMap::substitution(K, 2);
  CHECK(preimage(s, K->parse("Y^4+1")) == std::optional<RingElement>(K->parse("Y^2+1")));
  CHECK_FALSE(preimage(s, K->parse("Y")).has_value());
}

TEST_CASE("check_map_laws") {
  const auto f4 = ring_of("gf(2,2)");
  SampleBudget budget;
  const auto unital = check_map_laws(AdditiveMap::identity(f4), AdditiveMap::zero(f4), MapLaw::Unital, budget);
  CHECK(unital.passed());
  CHECK(unital.exhaustive);
  CHECK(check_map_laws(AdditiveMap::frobenius(f4, 1), AdditiveMap::zero(f4), MapLaw::SigmaDerivation, budget).passed());
  CHECK(check_map_laws(AdditiveMap::frobenius(f4, 1), AdditiveMap::zero(f4), MapLaw::Endomorphism, budget).passed());

  const auto H = ring_of("cayley(2,rationals,[-1,-1])");
  SampleBudget basis;
  basis.mode = SampleBudget::Mode::Basis;
  const auto inv = check_map_laws(AdditiveMap::conjugation(H), AdditiveMap::zero(H), MapLaw::Involution, basis);
  CHECK(inv.passed());
  CHECK(inv.checked >= 16);

  // The identity is not an anti-automorphism of the quaternions.
  const auto bad = check_map_laws(AdditiveMap::identity(H), AdditiveMap::zero(H), MapLaw::Involution, basis);
  CHECK_FALSE(bad.passed());

  // d/dY is a derivation; the printed variant with sigma(rs) on the left fails.
  const auto K = ring_of("poly(gf(3,1))");
  const auto id = AdditiveMap::identity(K), d = AdditiveMap::formal_derivative(K);
  SampleBudget sampled;
  sampled.samples = 40;
  CHECK(check_map_laws(id, d, MapLaw::SigmaDerivation, sampled).passed());
  CHECK_FALSE(check_map_laws(id, d, MapLaw::SigmaDerivationPrinted, sampled).passed());
}

TEST_CASE("maps are additive on samples") {
  const auto K = ring_of("poly(rationals)");
  Rng rng(kDefaultSeed);
  for (const auto& f : {AdditiveMap::substitution(K, 3), AdditiveMap::formal_derivative(K),
                        AdditiveMap::negate(AdditiveMap::identity(K))}) {
    for (int n = 0; n < 30; ++n) {
      const auto r = K->random(rng), s = K->random(rng);
      REQUIRE(f(r + s) == f(r) + f(s));
    }
  }
}
