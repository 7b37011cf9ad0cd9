#include <doctest.h>

#include "gnoe/gnoe.hpp"
#include "oracles.hpp"

using namespace gnoe;

namespace {

RingHandle ring_of(const char* text) { return make_ring(parse_descriptor(text)); }

const char* const kAssociativeRings[] = {"integers",         "zmod(6)",    "gf(2,2)",       "gf(3,2)",
                                         "poly(gf(2,1))",    "poly(rationals)", "matrix2(integers)",
                                         "matrix2(gf(2,1))", "mixed(upper)", "mixed(lower)"};

}  // namespace

TEST_CASE("make_ring validates descriptors") {
  const auto f4 = ring_of("gf(2,2)");
  CHECK(f4->cardinality() == std::optional<std::uint64_t>(4));
  CHECK(f4->is_field());
  CHECK_THROWS_AS(make_ring(RingDescriptor::integers_mod(1)), Error);
  CHECK_THROWS_AS(make_ring(RingDescriptor::finite_field(4, 1)), Error);
  CHECK_THROWS_AS(make_ring(RingDescriptor::cayley(1, RingDescriptor::rationals(), {0})), Error);
  try {
    make_ring(RingDescriptor::integers_mod(1));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidDescriptor);
  }
}

TEST_CASE("equal descriptors give interchangeable rings") {
  CHECK(ring_of("poly(gf(2,1))") == ring_of("poly( gf(2,1) )"));
  CHECK(parse_descriptor("matrix2(gf(3,1))").to_string() == "matrix2(gf(3,1))");
}

TEST_CASE("integer and finite field products") {
  const auto Z = ring_of("integers");
  CHECK(Z->parse("2") * Z->parse("3") == Z->parse("6"));
  CHECK(Z->parse("123456789012345678901234567890") * Z->parse("10") ==
        Z->parse("1234567890123456789012345678900"));

  // t^2 = t + 1 modulo t^2 + t + 1.
  const auto f4 = ring_of("gf(2,2)");
  const auto t = f4->parse("t");
  CHECK(t * t == f4->parse("t+1"));
  CHECK(field_modulus(2, 2) == std::vector<std::uint64_t>{1, 1, 1});
}

TEST_CASE("finite field arithmetic matches the coordinate oracle") {
  for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{2, 3}, {3, 2}, {3, 3}, {5, 2}}) {
    const auto F = make_ring(RingDescriptor::finite_field(p, k));
    const oracle::GaloisField G{p, field_modulus(p, k)};
    const auto n = *F->cardinality();
    for (std::uint64_t i = 0; i < n; ++i)
      for (std::uint64_t j = 0; j < n; ++j) {
        const auto a = F->element_at(i), b = F->element_at(j);
        REQUIRE(as_residues(a * b) == G.mul(as_residues(a), as_residues(b)));
        REQUIRE(as_residues(a + b) == G.add(as_residues(a), as_residues(b)));
      }
  }
}

TEST_CASE("Frobenius r -> r^p is additive and multiplicative") {
  for (const char* text : {"gf(2,2)", "gf(2,3)", "gf(3,2)"}) {
    const auto F = ring_of(text);
    const auto frob = AdditiveMap::frobenius(F, 1);
    const auto n = *F->cardinality();
    for (std::uint64_t i = 0; i < n; ++i)
      for (std::uint64_t j = 0; j < n; ++j) {
        const auto a = F->element_at(i), b = F->element_at(j);
        REQUIRE(frob(a + b) == frob(a) + frob(b));
        REQUIRE(frob(a * b) == frob(a) * frob(b));
      }
  }
}

TEST_CASE("matrix units do not commute") {
  const auto M = ring_of("matrix2(integers)");
  const auto e12 = M->parse("[[0,1],[0,0]]"), e21 = M->parse("[[0,0],[1,0]]");
  CHECK(e12 * e21 == M->parse("[[1,0],[0,0]]"));
  CHECK(e21 * e12 == M->parse("[[0,0],[0,1]]"));
  CHECK_FALSE(M->is_commutative());
}

TEST_CASE("mixing owners is an error") {
  const auto Z = ring_of("integers");
  const auto Q = ring_of("rationals");
  CHECK_THROWS_AS(Z->one() + Q->one(), Error);
}

TEST_CASE("ring axioms on samples") {
  Rng rng(kDefaultSeed);
  for (const char* text : kAssociativeRings) {
    CAPTURE(text);
    const auto R = ring_of(text);
    for (int n = 0; n < 60; ++n) {
      const auto r = R->random(rng), s = R->random(rng), t = R->random(rng);
      REQUIRE(r * (s + t) == r * s + r * t);
      REQUIRE((s + t) * r == s * r + t * r);
      REQUIRE(R->one() * r == r);
      REQUIRE(r * R->one() == r);
      REQUIRE(associator(r, s, t).is_zero());
      REQUIRE(associator(r, R->one(), t).is_zero());
      REQUIRE(R->parse(R->format(r)) == r);
    }
  }
}

TEST_CASE("octonion level is nonassociative with witness (e1, e2, e4)") {
  const auto O = ring_of("cayley(3,rationals,[-1,-1,-1])");
  CHECK_FALSE(O->is_associative());
  const auto basis = O->basis();
  const auto witness = associator(basis[1], basis[2], basis[4]);
  CHECK_FALSE(witness.is_zero());

  // Brute force over the oracle table.
  const std::vector<mpq_class> mus{-1, -1, -1};
  const auto e1 = oracle::cd_basis(8, 1), e2 = oracle::cd_basis(8, 2), e4 = oracle::cd_basis(8, 4);
  auto lhs = oracle::cd_mul(oracle::cd_mul(e1, e2, mus), e4, mus);
  auto rhs = oracle::cd_mul(e1, oracle::cd_mul(e2, e4, mus), mus);
  oracle::Coords diff(8);
  for (int i = 0; i < 8; ++i) diff[i] = lhs[i] - rhs[i];
  CHECK(oracle::coords_of(witness) == diff);
  CHECK(associator(basis[1], O->one(), basis[4]).is_zero());
}

TEST_CASE("lower Cayley levels keep their algebra flags") {
  CHECK(ring_of("cayley(1,rationals,[-1])")->is_commutative());
  CHECK(ring_of("cayley(2,rationals,[-1,-1])")->is_associative());
  CHECK_FALSE(ring_of("cayley(2,rationals,[-1,-1])")->is_commutative());
}

TEST_CASE("mixed triangular rings parse and multiply entrywise") {
  const auto U = ring_of("mixed(upper)");
  const auto a = U->parse("[[2,1/2],[0,3]]"), b = U->parse("[[1,0],[0,1/3]]");
  CHECK(a * b == U->parse("[[2,1/6],[0,1]]"));
  CHECK_THROWS_AS(U->parse("[[1/2,0],[0,1]]"), Error);
}
