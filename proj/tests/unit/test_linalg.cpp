#include <doctest.h>

#include <random>

#include "wqg/errors.hpp"
#include "wqg/linalg.hpp"

using namespace wqg;

namespace {

const FieldSpec Q = FieldSpec::rational();

Matrix random_matrix(std::mt19937& rng, FieldSpec f, std::size_t r, std::size_t c, int sparsity) {
  std::uniform_int_distribution<int> val(-3, 3), keep(0, sparsity);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      if (keep(rng) == 0) m(i, j) = Scalar(f, val(rng));
    }
  }
  return m;
}

// Independent rank: fraction-free Bareiss elimination on GMP integers.
std::size_t bareiss_rank(const Matrix& m) {
  std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j).to_mpq();
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      mpq_class f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace

TEST_CASE("rank agrees with an independent elimination") {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    Matrix m = random_matrix(rng, Q, 1 + iter % 6, 1 + (iter / 6) % 7, 2);
    CHECK(rank(m) == bareiss_rank(m));
  }
}

TEST_CASE("rref is reduced and row equivalent") {
  std::mt19937 rng(3);
  for (int iter = 0; iter < 100; ++iter) {
    Matrix m = random_matrix(rng, Q, 5, 6, 1);
    RrefResult r = rref(m);
    for (std::size_t i = 0; i < r.rank; ++i) {
      std::size_t p = r.pivots[i];
      CHECK(r.reduced(i, p).is_one());
      for (std::size_t k = 0; k < m.rows(); ++k) {
        if (k != i) CHECK(r.reduced(k, p).is_zero());
      }
      for (std::size_t j = 0; j < p; ++j) CHECK(r.reduced(i, j).is_zero());
    }
    Subspace rows_m = Subspace::span(Q, m.cols(), [&] {
      std::vector<Vector> v;
      for (std::size_t i = 0; i < m.rows(); ++i) v.push_back(m.row(i));
      return v;
    }());
    for (std::size_t i = 0; i < r.rank; ++i) CHECK(rows_m.contains(r.reduced.row(i)));
    CHECK(rows_m.dim() == r.rank);
  }
}

TEST_CASE("kernel, solve and inverse") {
  std::mt19937 rng(5);
  FieldSpec F = FieldSpec::prime(5);
  for (FieldSpec f : {Q, F}) {
    for (int iter = 0; iter < 100; ++iter) {
      Matrix m = random_matrix(rng, f, 4, 5, 1);
      auto ker = kernel(m);
      CHECK(ker.size() + rank(m) == m.cols());
      for (const auto& v : ker) CHECK(is_zero(m.apply(v)));
      Vector x(5, Scalar::zero(f));
      for (auto& s : x) s = Scalar(f, static_cast<int>(rng() % 7) - 3);
      Vector b = m.apply(x);
      auto sol = solve_linear(m, b);
      REQUIRE(sol.has_value());
      CHECK(m.apply(*sol) == b);
      Matrix sq = random_matrix(rng, f, 4, 4, 0);
      if (rank(sq) == 4) {
        CHECK(inverse(sq) * sq == Matrix::identity(f, 4));
      } else {
        CHECK_THROWS_AS(inverse(sq), Singular);
      }
    }
  }
  Matrix m = Matrix::from_ints(Q, {{1, 1}, {1, 1}});
  CHECK_FALSE(solve_linear(m, Vector{Scalar(Q, 1), Scalar(Q, 0)}).has_value());
}

TEST_CASE("subspace coordinates and quotients") {
  Subspace s = Subspace::span(Q, 3, {Vector{Scalar(Q, 2), Scalar(Q, 2), Scalar(Q, 0)},
                                     Vector{Scalar(Q, 1), Scalar(Q, 1), Scalar(Q, 0)}});
  CHECK(s.dim() == 1);
  Vector v{Scalar(Q, 3), Scalar(Q, 3), Scalar(Q, 0)};
  CHECK(s.from_coordinates(s.coordinates(v)) == v);
  CHECK_THROWS_AS(s.coordinates(Vector{Scalar(Q, 1), Scalar(Q, 0), Scalar(Q, 0)}), InvalidInput);
  QuotientSpace quo = quotient_by(Q, 3, s.basis());
  CHECK(quo.dim() == 2);
  CHECK(is_zero(quo.project(v)));
  for (std::size_t i = 0; i < 2; ++i) {
    Vector e = unit_vector(Q, 2, i);
    CHECK(quo.project(quo.lift(e)) == e);
  }
  Vector w{Scalar(Q, 1), Scalar(Q, 5), Scalar(Q, -2)};
  CHECK(s.contains(w - quo.lift(quo.project(w))));
}

TEST_CASE("tensor helpers") {
  Vector a{Scalar(Q, 1), Scalar(Q, 2)}, b{Scalar(Q, 3), Scalar(Q, 4), Scalar(Q, 5)};
  Vector ab = kron(a, b);
  CHECK(ab[idx2(1, 2, 3)] == Scalar(Q, 10));
  Vector ba = flip(ab, 2, 3);
  CHECK(ba == kron(b, a));
  Matrix op = Matrix::from_ints(Q, {{0, 1}, {1, 0}});
  CHECK(apply_axis(op, ab, 1, 2, 3) == kron(op.apply(a), b));
  Matrix op3 = Matrix::from_ints(Q, {{1, 1, 1}});
  CHECK(apply_axis(op3, ab, 2, 3, 1) == kron(a, op3.apply(b)));
  Matrix k = kron(op, Matrix::identity(Q, 3));
  CHECK(k.apply(ab) == kron(op.apply(a), b));
}
