#include <doctest.h>


#include "wqg/errors.hpp"
#include "wqg/frobenius.hpp"
#include "unit/m2_oracle.hpp"

using namespace wqg;
using oracle::probe_matrix_system;
using oracle::to_m2;

namespace {

const FieldSpec Q = FieldSpec::rational();

// k^m with orthogonal idempotents p_1..p_m.
FinDimAlgebra split_algebra(FieldSpec f, std::size_t m) {
  Tensor3 mul(f, m, m, m);
  for (std::size_t i = 0; i < m; ++i) mul(i, i, i) = Scalar::one(f);
  return FinDimAlgebra(f, m, mul, Vector(m, Scalar::one(f)));
}

// k[x]/(x^2) with basis 1, x.
FinDimAlgebra dual_numbers() {
  Tensor3 mul(Q, 2, 2, 2);
  mul(0, 0, 0) = mul(0, 1, 1) = mul(1, 0, 1) = Scalar::one(Q);
  return FinDimAlgebra(Q, 2, mul, unit_vector(Q, 2, 0));
}

}  // namespace

TEST_CASE("Frobenius systems on split algebras") {
  FinDimAlgebra r2 = split_algebra(Q, 2);
  FrobeniusSystem s{r2, Vector{Scalar(Q, 1), Scalar(Q, 1)}, Matrix::from_ints(Q, {{1, 0}, {0, 1}})};
  CHECK(verify_frobenius_system(s).overall());
  CHECK(verify_ifs(s).overall());
  CHECK(frobenius_automorphism(s) == Matrix::identity(Q, 2));
  FrobeniusSystem bad{r2, Vector{Scalar(Q, 1), Scalar(Q, 0)}, s.e};
  CheckReport r = verify_frobenius_system(bad);
  CHECK_FALSE(r.passed("dual-basis-left"));
  CHECK(r.find("dual-basis-left")->witnesses[0].indices == std::vector<std::size_t>{1});
  CHECK_THROWS_AS(frobenius_automorphism(bad), NotFrobenius);
}

TEST_CASE("trace construction") {
  FrobeniusSystem s2 = trace_ifs_commutative(split_algebra(Q, 2));
  CHECK(s2.phi == Vector{Scalar(Q, 1), Scalar(Q, 1)});
  CHECK(s2.e == Matrix::from_ints(Q, {{1, 0}, {0, 1}}));
  FrobeniusSystem s3 = trace_ifs_commutative(split_algebra(Q, 3));
  CHECK(verify_ifs(s3).overall());
  CHECK(s3.e == Matrix::identity(Q, 3));
  FrobeniusSystem s1 = trace_ifs_commutative(split_algebra(Q, 1));
  CHECK(s1.phi == Vector{Scalar(Q, 1)});
  CHECK(s1.e == Matrix::identity(Q, 1));
  CHECK_THROWS_AS(trace_ifs_commutative(dual_numbers()), NotSeparable);
  CHECK_THROWS_AS(trace_ifs_commutative(matrix_algebra(Q, 2)), NotCommutative);
  // F_2 x F_2 is separable in characteristic 2 as well.
  CHECK(verify_ifs(trace_ifs_commutative(split_algebra(FieldSpec::prime(2), 2))).overall());
}

TEST_CASE("matrix systems") {
  FrobeniusSystem tr = matrix_ifs_candidate(2, Matrix::identity(Q, 2), Q);
  CHECK(verify_frobenius_system(tr).overall());
  CHECK(tr.nabla_e() == Vector{Scalar(Q, 2), Scalar(Q, 0), Scalar(Q, 0), Scalar(Q, 2)});
  CHECK_FALSE(verify_ifs(tr).passed("nabla-one"));
  CHECK_THROWS_AS(matrix_ifs(2, Matrix::identity(Q, 2), Q), BadNormalization);
  Matrix two = Matrix::from_ints(Q, {{2, 0}, {0, 2}});
  FrobeniusSystem scaled = matrix_ifs(2, two, Q);
  CHECK(verify_ifs(scaled).overall());
  CHECK(scaled.phi == Vector{Scalar(Q, 2), Scalar(Q, 0), Scalar(Q, 0), Scalar(Q, 2)});
  CHECK(scaled.e(1, 2) == Scalar(Q, 1, 2));  // E12 (x) E21 / 2
  FrobeniusSystem one = matrix_ifs(1, Matrix::identity(Q, 1), Q);
  CHECK(one.e == Matrix::identity(Q, 1));
  CHECK_THROWS_AS(matrix_ifs(2, Matrix::from_ints(Q, {{1, 1}, {1, 1}}), Q), Singular);
}

TEST_CASE("Frobenius automorphism of a non-symmetric matrix system") {
  Matrix u = Matrix::from_ints(Q, {{1, 0}, {0, 2}});
  FrobeniusSystem s = matrix_ifs_candidate(2, u, Q);
  Matrix theta = frobenius_automorphism(s);
  Matrix uinv = inverse(u);
  FinDimAlgebra m2 = s.algebra;
  for (std::size_t x = 0; x < 4; ++x) {
    // Oracle: theta(x) = u x u^-1 by plain matrix products.
    Vector ux = flatten(u * unflatten(Q, m2.basis(x), 2, 2) * uinv);
    CHECK(theta.col(x) == ux);
    // (1 (x) x) e = e (theta(x) (x) 1)
    Vector lhs = m2.multiply_tensor(kron(m2.unit(), m2.basis(x)), s.e_tensor(), 2);
    Vector rhs = m2.multiply_tensor(s.e_tensor(), kron(theta.col(x), m2.unit()), 2);
    CHECK(lhs == rhs);
  }
  SymmetryFlags fl = symmetry_flags(s);
  CHECK_FALSE(fl.theta_identity);
  CHECK_FALSE(fl.e_flip_invariant);
  CHECK_FALSE(fl.phi_symmetric);
}

TEST_CASE("comparison recovers a planted twist") {
  FrobeniusSystem s = matrix_ifs(2, Matrix::from_ints(Q, {{2, 0}, {0, 2}}), Q);
  Vector t0 = flatten(Matrix::from_ints(Q, {{1, 0}, {0, 3}}));
  FrobeniusSystem s2 = twist_frobenius_system(s, t0);
  CHECK(verify_frobenius_system(s2).overall());
  CHECK(compare_frobenius_systems(s, s2) == t0);
  CHECK(compare_frobenius_systems(s, s) == s.algebra.unit());
  CHECK_THROWS_AS(twist_frobenius_system(s, flatten(Matrix::from_ints(Q, {{1, 0}, {0, 0}}))), NotInvertible);
  // Two IFSs: u = diag(3, 3/2) has tr(u^-1) = 1 and relates to 2 tr by t = u/2.
  Matrix u(Q, 2, 2);
  u(0, 0) = Scalar(Q, 3);
  u(1, 1) = Scalar(Q, 3, 2);
  FrobeniusSystem s3 = matrix_ifs(2, u, Q);
  Vector t = compare_frobenius_systems(s, s3);
  CHECK(t == Vector{Scalar(Q, 3, 2), Scalar(Q, 0), Scalar(Q, 0), Scalar(Q, 3, 4)});
}

TEST_CASE("the 2x2 candidate over F_2 against a brute-force oracle") {
  FieldSpec F2 = FieldSpec::prime(2);
  Matrix uinv = Matrix::from_ints(F2, {{1, 1}, {1, 0}});
  Matrix u = inverse(uinv);
  FrobeniusSystem s = matrix_ifs_candidate(2, u, F2);
  CheckReport r = verify_ifs(s);
  oracle::ProbeOutcome expected = probe_matrix_system(F2, to_m2(flatten(u)), to_m2(flatten(uinv)));
  CHECK(r.passed("dual-basis-left") == expected.left);
  CHECK(r.passed("dual-basis-right") == expected.right);
  CHECK(r.passed("casimir") == expected.casimir);
  CHECK(r.passed("nabla-one") == expected.nabla);
  CHECK_NOTHROW(matrix_ifs(2, u, F2));
}

TEST_CASE("three-way symmetry equivalence") {
  std::vector<FrobeniusSystem> systems;
  systems.push_back(trace_ifs_commutative(split_algebra(Q, 2)));
  systems.push_back(trace_ifs_commutative(split_algebra(Q, 3)));
  systems.push_back(matrix_ifs(2, Matrix::from_ints(Q, {{2, 0}, {0, 2}}), Q));
  systems.push_back(matrix_ifs_candidate(2, Matrix::from_ints(Q, {{1, 0}, {0, 2}}), Q));
  systems.push_back(matrix_ifs_candidate(2, Matrix::from_ints(Q, {{1, 1}, {0, 1}}), Q));
  systems.push_back(twist_frobenius_system(systems[0], Vector{Scalar(Q, 1), Scalar(Q, 5)}));
  for (const auto& s : systems) {
    REQUIRE(verify_frobenius_system(s).overall());
    SymmetryFlags fl = symmetry_flags(s);
    CHECK(fl.theta_identity == fl.e_flip_invariant);
    CHECK(fl.theta_identity == fl.phi_symmetric);
  }
}
