#include <doctest.h>

#include <memory>
#include <random>

#include "shadows/homology.hpp"

using namespace shadows;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntMatrix a(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a(i, j) = d(rng);
  return a;
}

void check_smith(const IntMatrix& a) {
  const SmithForm s = smith_normal_form(a);
  CHECK(s.U * a * s.V == s.D);
  CHECK(abs(determinant(s.U)) == 1);
  CHECK(abs(determinant(s.V)) == 1);
  for (int i = 0; i < s.D.rows(); ++i)
    for (int j = 0; j < s.D.cols(); ++j)
      if (i != j) CHECK(s.D(i, j) == 0);
  for (int k = 0; k < s.rank; ++k) {
    CHECK(s.diagonal[k] > 0);
    CHECK(s.D(k, k) == s.diagonal[k]);
    if (k > 0) CHECK(s.diagonal[k] % s.diagonal[k - 1] == 0);
  }
}

std::shared_ptr<const Presentation> pres_of(const std::vector<std::vector<long>>& rows, int gens) {
  return std::make_shared<const Presentation>(gens, IntMatrix::from_rows(rows, gens));
}

}  // namespace

TEST_CASE("Smith form of a known matrix") {
  const IntMatrix a = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  const SmithForm s = smith_normal_form(a);
  REQUIRE(s.rank == 3);
  CHECK(s.diagonal[0] == 2);
  CHECK(s.diagonal[1] == 6);
  CHECK(s.diagonal[2] == 12);
  check_smith(a);
}

TEST_CASE("Smith form on random and degenerate shapes") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) check_smith(random_matrix(rng, 1 + t % 7, 1 + (t * 5) % 9, 9));
  check_smith(IntMatrix(0, 3));
  check_smith(IntMatrix(3, 0));
  check_smith(IntMatrix(4, 4));
}

TEST_CASE("large entries stay exact") {
  IntMatrix a(2, 2);
  a(0, 0) = mpz_class("123456789012345678901234567890");
  a(0, 1) = 7;
  a(1, 0) = mpz_class("98765432109876543210");
  a(1, 1) = 3;
  check_smith(a);
  CHECK(determinant(a) == a(0, 0) * 3 - 7 * a(1, 0));
}

TEST_CASE("determinant and kernel") {
  CHECK(determinant(IntMatrix::from_rows({{1, 2}, {3, 4}})) == -2);
  CHECK(determinant(IntMatrix::identity(5)) == 1);
  const IntMatrix a = IntMatrix::from_rows({{1, 1, 0}, {0, 1, 1}});
  const auto ker = integer_kernel(a);
  REQUIRE(ker.size() == 1);
  IntVector k = ker[0];
  CHECK(k[0] + k[1] == 0);
  CHECK(k[1] + k[2] == 0);
  CHECK(k[0] != 0);
}

TEST_CASE("presentations: torsion, lattice membership and solving") {
  const auto p = pres_of({{2, 0}, {0, 3}}, 2);
  CHECK(p->free_rank() == 0);
  CHECK(p->torsion() == IntVector{6});
  CHECK(p->has_two_torsion());
  CHECK(p->in_lattice({4, 9}));
  CHECK_FALSE(p->in_lattice({1, 0}));
  const auto y = p->solve({4, -3});
  REQUIRE(y);
  CHECK((*y)[0] == 2);
  CHECK((*y)[1] == -1);
  CHECK_FALSE(p->solve({1, 1}));
  CHECK(p->class_key({3, 0}) == p->class_key({1, 0}));
  CHECK(p->class_key({1, 0}) != p->class_key({0, 1}));

  const auto z = pres_of({{1, -1, 0}}, 3);
  CHECK(z->free_rank() == 2);
  CHECK(z->torsion().empty());
}

TEST_CASE("class arithmetic and doubled scale") {
  const auto p = pres_of({{1, 1}}, 2);
  const CochainClass a = unit_class(p, 0);
  const CochainClass b = unit_class(p, 1);
  CHECK(class_equal(a, -b));
  CHECK(is_zero_class(a + b));
  CHECK(class_equal(3 * a - a, 2 * a));
  const CochainClass h = make_class(p, {1, 0}, 2);
  CHECK(class_equal(2 * h, a.doubled()));
  CHECK_THROWS_AS((void)class_equal(h, a), ShadowError);
  CHECK(class_equal(divide_by_two((2 * a).doubled()), a));
}

TEST_CASE("two-torsion blocks halving") {
  const auto p = pres_of({{2}}, 1);
  CHECK(p->has_two_torsion());
  const CochainClass two = make_class(p, {2}, 2);
  try {
    (void)divide_by_two(two);
    FAIL("expected TorsionObstruction");
  } catch (const ShadowError& e) {
    CHECK(e.code() == ErrorCode::TorsionObstruction);
  }
}

TEST_CASE("local presentations") {
  const IntMatrix bd = IntMatrix::from_rows({{1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}});
  const Presentation loc = local_presentation(bd, {0, 1, 2}, {0, 1});
  CHECK(loc.generators() == 3);
  CHECK(loc.relations().rows() == 2);
  CHECK(loc.free_rank() == 1);
  try {
    (void)local_presentation(bd, {0, 1, 2}, {2});
    FAIL("expected DanglingEdge");
  } catch (const ShadowError& e) {
    CHECK(e.code() == ErrorCode::DanglingEdge);
  }
}
