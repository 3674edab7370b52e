#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mtv/cyclotomic.hpp"
#include "mtv/error.hpp"

using mtv::Cyclotomic;

TEST_CASE("roots of unity") {
  for (int n : {1, 2, 3, 4, 5, 6, 8, 12}) {
    auto z = Cyclotomic::zeta(n);
    CHECK(z.pow(n) == Cyclotomic::one(n));
    if (n > 1) CHECK(z.pow(1) != Cyclotomic::one(n));
  }
  // primitive: zeta_12^k != 1 for 0 < k < 12
  auto z = Cyclotomic::zeta(12);
  for (int k = 1; k < 12; ++k) CHECK(z.pow(k) != Cyclotomic::one(12));
}

TEST_CASE("field axioms on random samples") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> coeff(-6, 6);
  for (int n : {5, 8}) {
    int deg = Cyclotomic::field_degree(n);
    auto rand_elt = [&] {
      std::vector<mpq_class> c(deg);
      for (auto& q : c) q = coeff(rng);
      return Cyclotomic::from_coeffs(n, std::move(c));
    };
    for (int trial = 0; trial < 40; ++trial) {
      auto a = rand_elt(), b = rand_elt(), c = rand_elt();
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + Cyclotomic::zero(n) == a);
      CHECK(a * Cyclotomic::one(n) == a);
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == Cyclotomic::one(n));
        CHECK(a / a == Cyclotomic::one(n));
      }
    }
  }
}

TEST_CASE("golden ratio identity in Q(zeta_5)") {
  auto z = Cyclotomic::zeta(5);
  auto phi = -(z.pow(2) + z.pow(3));
  CHECK(phi * phi == phi + Cyclotomic::one(5));
  // 1/phi = phi - 1
  CHECK(phi.inverse() == phi - Cyclotomic::one(5));
  CHECK(phi.approx().real() == doctest::Approx(1.6180339887).epsilon(1e-9));
  CHECK(phi.approx().imag() == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("json round trip") {
  auto z = Cyclotomic::zeta(5);
  auto phi = -(z.pow(2) + z.pow(3));
  auto b1 = (Cyclotomic::integer(5, 2) + phi).inverse();
  for (const auto& v : {Cyclotomic::zero(5), phi, b1, phi / b1}) {
    auto j = v.to_json();
    CHECK(Cyclotomic::from_json(5, j) == v);
  }
  // plain integer and array forms parse
  CHECK(Cyclotomic::from_json(5, nlohmann::json(3)) == Cyclotomic::integer(5, 3));
  CHECK(Cyclotomic::from_json(5, nlohmann::json::parse("[0,1,0,0]")) == z);
  CHECK(Cyclotomic::from_json(5, nlohmann::json::parse("{\"num\":[1,0,0,0],\"den\":2}")) ==
        Cyclotomic::rational(5, 1, 2));
  CHECK_THROWS_AS(Cyclotomic::from_json(5, nlohmann::json::parse("\"x\"")), mtv::Error);
}

TEST_CASE("conductor mismatch rejected") {
  CHECK_THROWS_AS(Cyclotomic::one(5) + Cyclotomic::one(3), mtv::Error);
}

TEST_CASE("rationals embed at any conductor") {
  // conductor 1: the field is Q itself
  auto half = Cyclotomic::rational(1, 1, 2);
  CHECK(half + half == Cyclotomic::one(1));
  CHECK(Cyclotomic::field_degree(1) == 1);
  CHECK(Cyclotomic::field_degree(2) == 1);
  CHECK(Cyclotomic::zeta(2) == Cyclotomic::integer(2, -1));
}
