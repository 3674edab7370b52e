#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mtv/error.hpp"
#include "mtv/group.hpp"

using mtv::FiniteGroup;
using mtv::GaugeFunction;

TEST_CASE("Z/2 from table") {
  auto g = FiniteGroup::from_table({{0, 1}, {1, 0}});
  CHECK(g.order() == 2);
  CHECK(g.identity() == 0);
  CHECK(g.inv(1) == 1);
}

TEST_CASE("S3 Cayley table validates and is nonabelian") {
  auto s3 = FiniteGroup::symmetric3();
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  // brute-force associativity was already scanned at construction; spot check
  int a = s3.element_by_name("(01)");
  int b = s3.element_by_name("(012)");
  CHECK(s3.mul(a, b) != s3.mul(b, a));
}

TEST_CASE("tables that are not groups") {
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {0, 1}}), mtv::Error);
  CHECK_THROWS_AS(FiniteGroup::from_table({{1, 0}, {0, 0}}), mtv::Error);
  // identity but missing inverse: Z/2 x trivial glued wrong
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1, 2}, {1, 1, 1}, {2, 1, 0}}),
                  mtv::Error);
}

TEST_CASE("gauge composition") {
  auto z2 = FiniteGroup::cyclic(2);
  GaugeFunction f(&z2, {1, 0});
  GaugeFunction g(&z2, {1, 1});
  auto fg = f.compose(g);
  CHECK(fg(0) == 0);
  CHECK(fg(1) == 1);

  auto id = GaugeFunction::constant_identity(z2, 2);
  CHECK(id.compose(g)(0) == g(0));
  CHECK(id.compose(g)(1) == g(1));

  auto s3 = FiniteGroup::symmetric3();
  GaugeFunction a(&s3, {s3.element_by_name("(01)")});
  GaugeFunction b(&s3, {s3.element_by_name("(012)")});
  CHECK(a.compose(b)(0) == s3.mul(s3.element_by_name("(01)"),
                                  s3.element_by_name("(012)")));

  GaugeFunction wrong(&s3, {0, 0});
  CHECK_THROWS_AS(a.compose(wrong), mtv::Error);
}

TEST_CASE("gauge composition is associative with identity unit") {
  auto z6 = FiniteGroup::cyclic(6);
  // exhaustive over a 2-point domain
  for (int a0 = 0; a0 < 6; ++a0)
    for (int b0 = 0; b0 < 6; ++b0)
      for (int c0 = 0; c0 < 6; ++c0) {
        GaugeFunction f(&z6, {a0, (a0 + 1) % 6});
        GaugeFunction g(&z6, {b0, (b0 + 2) % 6});
        GaugeFunction h(&z6, {c0, (c0 + 3) % 6});
        auto l = f.compose(g).compose(h);
        auto r = f.compose(g.compose(h));
        CHECK(l(0) == r(0));
        CHECK(l(1) == r(1));
        auto e = GaugeFunction::constant_identity(z6, 2);
        CHECK(f.compose(e)(0) == f(0));
        CHECK(e.compose(f)(1) == f(1));
        CHECK(f.compose(f.inverse()).is_identity());
      }
}

TEST_CASE("group json round trip") {
  auto s3 = FiniteGroup::symmetric3();
  auto j = s3.to_json();
  auto back = FiniteGroup::from_json(j);
  CHECK(back.same_table(s3));
  CHECK(back.name(0) == "e");
  CHECK_THROWS_AS(FiniteGroup::from_json(nlohmann::json{{"order", 2}}), mtv::Error);
}
