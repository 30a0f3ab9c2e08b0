#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kb/block_matrix.hpp"

using namespace kb;

namespace {

const long N = 20;  // r = 5

ScalarBlockMatrix sample() {
  // [[1, 2, 0], [1/2, -1, 0], [0, 0, 3]] over groups of sizes 4, 4, 7
  ScalarBlockMatrix m({{"a", 4}, {"b", 4}, {"c", 7}}, N);
  m.set_entry(0, 0, CycloElem::one(N));
  m.set_entry(0, 1, CycloElem::from_rational(N, 2));
  m.set_entry(1, 0, CycloElem::from_rational(N, Rational(1, 2)));
  m.set_entry(1, 1, CycloElem::from_rational(N, -1));
  m.set_entry(2, 2, CycloElem::from_rational(N, 3));
  return m;
}

}  // namespace

TEST_CASE("dimension and trace weight by group size") {
  auto m = sample();
  CHECK(m.dimension() == 15);
  // trace = 4*1 + 4*(-1) + 7*3 = 21
  CHECK(m.trace() == CycloElem::from_rational(N, 21));
}

TEST_CASE("identity and scalar predicates") {
  auto id = ScalarBlockMatrix::identity({{"a", 4}, {"b", 9}}, N);
  CHECK(id.is_identity());
  CycloElem c;
  CHECK(id.is_scalar(&c));
  CHECK(c.is_one());
  auto m = sample();
  CHECK_FALSE(m.is_identity());
  CHECK_FALSE(m.is_scalar());
  ScalarBlockMatrix s({{"a", 4}, {"b", 9}}, N);
  s.set_entry(0, 0, CycloElem::from_rational(N, -7));
  s.set_entry(1, 1, CycloElem::from_rational(N, -7));
  CHECK(s.is_scalar(&c));
  CHECK(c == CycloElem::from_rational(N, -7));
}

TEST_CASE("product, inverse, pow") {
  auto m = sample();
  auto inv = m.inverse();
  CHECK((m * inv).is_identity());
  CHECK((inv * m).is_identity());
  CHECK(m.pow(3) == m * m * m);
  CHECK(m.pow(0).is_identity());
  CHECK(m.pow(-2) == inv * inv);
}

TEST_CASE("determinant multiplies component dets raised to sizes") {
  auto m = sample();
  // det of the 2x2 component is (1*(-1) - 2*(1/2)) = -2, size 4;
  // lone cell 3 with size 7
  Rational expected = Rational(16) * Rational(2187);  // (-2)^4 * 3^7
  CHECK(m.determinant() == CycloElem::from_rational(N, expected));
  auto id = ScalarBlockMatrix::identity({{"a", 1000000007}}, N);
  CHECK(id.determinant().is_one());
}

TEST_CASE("off-diagonal entries require equal group sizes") {
  ScalarBlockMatrix m({{"a", 2}, {"b", 3}}, N);
  CHECK_THROWS(m.set_entry(0, 1, CycloElem::one(N)));
  CHECK_NOTHROW(m.set_entry(0, 0, CycloElem::one(N)));
}

TEST_CASE("singular matrix has no inverse") {
  ScalarBlockMatrix m({{"a", 2}, {"b", 2}}, N);
  m.set_entry(0, 0, CycloElem::one(N));
  m.set_entry(0, 1, CycloElem::one(N));
  m.set_entry(1, 0, CycloElem::one(N));
  m.set_entry(1, 1, CycloElem::one(N));
  CHECK(m.determinant().is_zero());
  CHECK_THROWS(m.inverse());
}

TEST_CASE("direct sum and map_entries") {
  auto m = sample();
  auto two = ScalarBlockMatrix::identity({{"d", 5}}, N)
                 .map_entries([](const CycloElem& x) {
                   return x + x;
                 });
  auto s = ScalarBlockMatrix::direct_sum(m, two);
  CHECK(s.dimension() == 20);
  CHECK(s.trace() == CycloElem::from_rational(N, 21 + 10));
  auto doubled = m.map_entries([](const CycloElem& x) { return x + x; });
  CHECK(doubled.trace() == CycloElem::from_rational(N, 42));
}
