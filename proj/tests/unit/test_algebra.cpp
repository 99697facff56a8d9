#include <doctest.h>

#include <random>

#include "wqg/algebra.hpp"
#include "wqg/errors.hpp"

using namespace wqg;

namespace {

const FieldSpec Q = FieldSpec::rational();

// M_2 with basis E11, E12, E21, E22 (index 2*i + j).
FinDimAlgebra matrix_units() {
  Tensor3 mul(Q, 4, 4, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) mul(2 * i + j, 2 * j + k, 2 * i + k) = Scalar::one(Q);
  Vector unit = zero_vector(Q, 4);
  unit[0] = unit[3] = Scalar::one(Q);
  return FinDimAlgebra(Q, 4, mul, unit);
}

// Group algebra of Z/3 as a coalgebra: Delta(g) = g (x) g.
FinDimCoalgebra grouplike(std::size_t n) {
  Tensor3 comul(Q, n, n, n);
  for (std::size_t i = 0; i < n; ++i) comul(i, i, i) = Scalar::one(Q);
  return FinDimCoalgebra(Q, n, comul, Vector(n, Scalar::one(Q)));
}

Vector random_vector(std::mt19937& rng, std::size_t n) {
  Vector v(n);
  for (auto& s : v) s = Scalar(Q, static_cast<int>(rng() % 7) - 3);
  return v;
}

// 2x2 matrix product on coefficient vectors, written out by hand.
Vector naive_matmul(const Vector& a, const Vector& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

}  // namespace

TEST_CASE("structure-constant product matches the matrix product") {
  FinDimAlgebra m2 = matrix_units();
  std::mt19937 rng(1);
  for (int iter = 0; iter < 100; ++iter) {
    Vector a = random_vector(rng, 4), b = random_vector(rng, 4);
    CHECK(m2.multiply(a, b) == naive_matmul(a, b));
    CHECK(m2.left_mult(a).apply(b) == naive_matmul(a, b));
    CHECK(m2.right_mult(b).apply(a) == naive_matmul(a, b));
  }
  CHECK_FALSE(m2.is_commutative());
  CHECK(check_algebra(m2).overall());
}

TEST_CASE("tensor-power product is componentwise") {
  FinDimAlgebra m2 = matrix_units();
  std::mt19937 rng(2);
  for (int iter = 0; iter < 20; ++iter) {
    Vector a = random_vector(rng, 4), b = random_vector(rng, 4), c = random_vector(rng, 4),
           d = random_vector(rng, 4);
    CHECK(m2.multiply_tensor(kron(a, b), kron(c, d), 2) == kron(naive_matmul(a, c), naive_matmul(b, d)));
  }
}

TEST_CASE("a broken product is caught with its first witness") {
  FinDimAlgebra m2 = matrix_units();
  Tensor3 mul = m2.mul();
  mul(1, 2, 0) = Scalar::zero(Q);  // E12 E21 = 0
  FinDimAlgebra broken(Q, 4, mul, m2.unit());
  CheckReport r = check_algebra(broken);
  CHECK_FALSE(r.passed("associativity"));
  CHECK(r.passed("unit-left"));
  // Brute-force oracle for the first failing triple.
  std::vector<std::size_t> first;
  for (std::size_t i = 0; i < 4 && first.empty(); ++i)
    for (std::size_t j = 0; j < 4 && first.empty(); ++j)
      for (std::size_t k = 0; k < 4 && first.empty(); ++k) {
        Vector lhs = zero_vector(Q, 4), rhs = zero_vector(Q, 4);
        for (std::size_t a = 0; a < 4; ++a)
          for (std::size_t b = 0; b < 4; ++b) {
            lhs[b] += mul(i, j, a) * mul(a, k, b);
            rhs[b] += mul(j, k, a) * mul(i, a, b);
          }
        if (!(lhs == rhs)) first = {i, j, k};
      }
  REQUIRE(r.find("associativity")->witnesses.size() == 1);
  CHECK(r.find("associativity")->witnesses[0].indices == first);
  CHECK(check_algebra(broken, CheckOptions{true}).find("associativity")->witnesses.size() > 1);
}

TEST_CASE("coalgebra checks and duals") {
  FinDimCoalgebra c = grouplike(3);
  CHECK(check_coalgebra(c).overall());
  FinDimAlgebra a = dual_algebra(c);
  // Functions on a set: orthogonal idempotents.
  CHECK(a.multiply(a.basis(1), a.basis(1)) == a.basis(1));
  CHECK(is_zero(a.multiply(a.basis(0), a.basis(1))));
  CHECK(check_algebra(a).overall());
  CHECK(dual_coalgebra(a) == c);
  FinDimCoalgebra mc = dual_coalgebra(matrix_units());
  CHECK(check_coalgebra(mc).overall());
  Tensor3 bad = c.comul();
  bad(2, 2, 1) = Scalar::one(Q);
  CheckReport r = check_coalgebra(FinDimCoalgebra(Q, 3, bad, c.counit()));
  CHECK_FALSE(r.passed("coassociativity"));
  CHECK_FALSE(r.passed("counit-left"));
  CHECK(r.find("counit-left")->witnesses[0].indices == std::vector<std::size_t>{2});
}

TEST_CASE("subalgebras") {
  FinDimAlgebra m2 = matrix_units();
  Subspace diag = generated_subalgebra(m2, {m2.basis(0)});
  CHECK(diag.dim() == 2);
  FinDimAlgebra d = restrict_algebra(m2, diag);
  CHECK(d.is_commutative());
  CHECK(check_algebra(d).overall());
  CHECK(generated_subalgebra(m2, {m2.basis(1), m2.basis(2)}).dim() == 4);
  CHECK_THROWS_AS(restrict_algebra(m2, Subspace::span(Q, 4, {m2.basis(1), m2.basis(2), m2.unit()})), InvalidInput);
}

TEST_CASE("algebra homomorphisms") {
  FinDimAlgebra m2 = matrix_units();
  Matrix t(Q, 4, 4);  // transpose map, an anti-automorphism
  t(0, 0) = t(2, 1) = t(1, 2) = t(3, 3) = Scalar::one(Q);
  LinearMap tr = LinearMap::from_matrix(t);
  CHECK(check_algebra_hom(tr, m2, m2, true).overall());
  CHECK_FALSE(check_algebra_hom(tr, m2, m2, false).overall());
}
