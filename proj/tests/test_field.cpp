#include "arcgeom/field.hpp"

#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "support/naive.hpp"

using arcgeom::Field;
using arcgeom::felt;

TEST_CASE("default modulus is the smallest irreducible encoding") {
  // GF(2): prime field, modulus x.
  auto f2 = Field::make(2, 1);
  CHECK(f2.q() == 2);
  CHECK(f2.modulus() == std::vector<std::uint32_t>{0, 1});

  // GF(8): scan over the 8 monic cubics in encoding order lands on x^3+x+1.
  auto f8 = Field::make(2, 3);
  CHECK(f8.modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});

  // Cross-check the scan against the independent product-enumeration oracle:
  // the chosen encoding must be irreducible and every smaller one reducible.
  std::uint64_t chosen = f8.modulus()[0] + 2 * f8.modulus()[1] + 4 * f8.modulus()[2];
  for (std::uint64_t enc = 0; enc <= chosen; ++enc) {
    bool irr = naive::irreducible_by_products(naive::poly_from_enc(enc, 3, 2), 2);
    CHECK(irr == (enc == chosen));
  }
}

TEST_CASE("reducible modulus is rejected") {
  // x^3+1 = (x+1)(x^2+x+1) over GF(2)
  CHECK(!naive::irreducible_by_products({1, 0, 0, 1}, 2));
  CHECK_THROWS_AS(Field::make(2, 3, {1, 0, 0, 1}), arcgeom::InputError);
  CHECK_THROWS_AS(Field::make(4, 1), arcgeom::InputError);       // non-prime p
  CHECK_THROWS_AS(Field::make(2, 3, {1, 1, 1}), arcgeom::InputError);  // wrong degree
}

TEST_CASE("GF(8) arithmetic matches hand-checked values") {
  auto f = Field::make(2, 3, {1, 1, 0, 1});
  // alpha = code 2; alpha^2 = 4; alpha^3 = alpha+1 = 3; alpha^6 = alpha^2+1 = 5
  CHECK(f.mul(2, 2) == 4);
  CHECK(f.mul(4, 2) == 3);
  CHECK(f.inv(2) == 5);
  CHECK(f.mul(2, 5) == 1);
  for (felt x = 0; x < 8; ++x) CHECK(f.add(x, 0) == x);
  CHECK_THROWS_AS(f.inv(0), arcgeom::InputError);
  CHECK_THROWS_AS(f.div(3, 0), arcgeom::InputError);
  CHECK_THROWS_AS(f.mul(3, 9), arcgeom::InputError);  // code from a larger field
}

TEST_CASE("table arithmetic agrees with the naive polynomial oracle") {
  for (auto [p, e] : {std::pair<int, int>{2, 3}, {3, 2}, {2, 4}, {5, 1}, {7, 1}, {3, 1}}) {
    auto f = Field::make(p, e);
    naive::NaiveField nf{f.p(), f.e(), f.q(), {}};
    nf.modulus = naive::Poly(f.modulus().begin(), f.modulus().end());
    for (std::uint32_t a = 0; a < f.q(); ++a)
      for (std::uint32_t b = 0; b < f.q(); ++b) {
        REQUIRE(f.mul(static_cast<felt>(a), static_cast<felt>(b)) == nf.mul(a, b));
        REQUIRE(f.add(static_cast<felt>(a), static_cast<felt>(b)) == nf.add(a, b));
      }
    for (std::uint32_t a = 1; a < f.q(); ++a)
      REQUIRE(f.inv(static_cast<felt>(a)) == nf.inv(a));
  }
}

namespace {

void check_axioms_exhaustive(const Field& f) {
  const std::uint32_t q = f.q();
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b) {
      felt fa = static_cast<felt>(a), fb = static_cast<felt>(b);
      REQUIRE(f.add(fa, fb) == f.add(fb, fa));
      REQUIRE(f.mul(fa, fb) == f.mul(fb, fa));
      for (std::uint32_t c = 0; c < q; ++c) {
        felt fc = static_cast<felt>(c);
        REQUIRE(f.add(f.add(fa, fb), fc) == f.add(fa, f.add(fb, fc)));
        REQUIRE(f.mul(f.mul(fa, fb), fc) == f.mul(fa, f.mul(fb, fc)));
        REQUIRE(f.mul(fa, f.add(fb, fc)) == f.add(f.mul(fa, fb), f.mul(fa, fc)));
      }
    }
}

void check_axioms_sampled(const Field& f, int samples) {
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::uint32_t> dist(0, f.q() - 1);
  for (int i = 0; i < samples; ++i) {
    felt a = static_cast<felt>(dist(rng));
    felt b = static_cast<felt>(dist(rng));
    felt c = static_cast<felt>(dist(rng));
    REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
    REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
    REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
    REQUIRE(f.add(a, b) == f.add(b, a));
    REQUIRE(f.mul(a, b) == f.mul(b, a));
  }
}

}  // namespace

TEST_CASE("field axioms: exhaustive for q <= 16, sampled for q <= 64") {
  for (auto [p, e] : {std::pair<int, int>{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1},
                      {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}})
    check_axioms_exhaustive(Field::make(p, e));
  for (auto [p, e] : {std::pair<int, int>{5, 2}, {3, 3}, {2, 5}, {7, 2}, {2, 6}})
    check_axioms_sampled(Field::make(p, e), 100000);
}

TEST_CASE("Frobenius fixed points, inverses, and cyclic group") {
  for (auto [p, e] : {std::pair<int, int>{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3},
                      {3, 2}, {11, 1}, {13, 1}, {2, 4}, {17, 1}, {19, 1}, {23, 1}, {5, 2},
                      {3, 3}, {29, 1}, {31, 1}, {2, 5}, {37, 1}, {41, 1}, {43, 1}, {47, 1},
                      {7, 2}, {53, 1}, {59, 1}, {61, 1}, {2, 6}}) {
    auto f = Field::make(p, e);
    for (std::uint32_t x = 0; x < f.q(); ++x)
      REQUIRE(f.pow(static_cast<felt>(x), f.q()) == static_cast<felt>(x));
    for (std::uint32_t x = 1; x < f.q(); ++x) {
      felt fx = static_cast<felt>(x);
      REQUIRE(f.inv(f.inv(fx)) == fx);
      REQUIRE(f.mul(fx, f.inv(fx)) == 1);
    }
    REQUIRE(f.element_order(f.generator()) == f.q() - 1);
  }
}

TEST_CASE("large field smoke test: GF(2^16)") {
  auto f = Field::make(2, 16);
  CHECK(f.q() == 65536);
  CHECK(f.element_order(f.generator()) == 65535);
  felt x = 12345;
  CHECK(f.mul(x, f.inv(x)) == 1);
  CHECK_THROWS_AS(Field::make(2, 17), arcgeom::InputError);
}
