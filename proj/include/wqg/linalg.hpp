#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wqg/scalar.hpp"

namespace wqg {

using Vector = std::vector<Scalar>;

Vector zero_vector(FieldSpec f, std::size_t n);
Vector unit_vector(FieldSpec f, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);
/// Accumulates s*v into acc.
void axpy(Vector& acc, const Scalar& s, const Vector& v);
/// Index of the first nonzero coordinate, or v.size().
std::size_t first_nonzero(const Vector& v);
std::string to_string(const Vector& v);

/// Dense row-major matrix over one field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldSpec f, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldSpec f, std::size_t n);
  static Matrix from_rows(FieldSpec f, std::size_t cols, const std::vector<Vector>& rows);
  static Matrix from_columns(FieldSpec f, std::size_t rows, const std::vector<Vector>& cols);
  /// Small-integer literal, handy in tests: {{1,2},{3,4}}.
  static Matrix from_ints(FieldSpec f, const std::vector<std::vector<std::int64_t>>& rows);

  FieldSpec field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;
  void set_col(std::size_t c, const Vector& v);

  Matrix transpose() const;
  Vector apply(const Vector& v) const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);

struct RrefResult {
  std::size_t rank = 0;
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form (unique).
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// One solution of a*x = b with free variables set to zero, or nullopt.
std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b);
std::optional<Vector> solve_linear(const Matrix& a, const Vector& b);
/// Throws Singular.
Matrix inverse(const Matrix& m);
/// Canonical basis of {x : m x = 0}, one vector per free column.
std::vector<Vector> kernel(const Matrix& m);

/// A subspace of k^n held as the nonzero rows of an RREF matrix.
class Subspace {
 public:
  Subspace() = default;
  Subspace(FieldSpec f, std::size_t ambient_dim);  // the zero subspace

  static Subspace span(FieldSpec f, std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace column_space(const Matrix& m);
  static Subspace whole(FieldSpec f, std::size_t ambient_dim);

  FieldSpec field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  /// Reduces v against the basis; zero iff v is in the subspace.
  Vector residue(const Vector& v) const;
  /// Coordinates of v in the echelon basis; throws InvalidInput if v is outside.
  Vector coordinates(const Vector& v) const;
  Vector from_coordinates(const Vector& c) const;
  /// Basis vectors as the columns of an ambient x dim matrix.
  Matrix basis_matrix() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  FieldSpec field_;
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

/// k^n modulo a relation subspace, with explicit projection and section.
struct QuotientSpace {
  std::size_t ambient_dim = 0;
  Subspace relations;
  Matrix projection;  // dim x ambient
  Matrix section;     // ambient x dim

  std::size_t dim() const { return projection.rows(); }
  Vector project(const Vector& v) const { return projection.apply(v); }
  Vector lift(const Vector& q) const { return section.apply(q); }
};

QuotientSpace quotient_by(FieldSpec f, std::size_t ambient_dim, const std::vector<Vector>& relations);

/// Flattened index helpers for tensor powers: (i, j) -> i*n2 + j.
inline std::size_t idx2(std::size_t i, std::size_t j, std::size_t n2) { return i * n2 + j; }
inline std::size_t idx3(std::size_t i, std::size_t j, std::size_t k, std::size_t n2, std::size_t n3) {
  return (i * n2 + j) * n3 + k;
}

/// Outer product a (x) b flattened.
Vector kron(const Vector& a, const Vector& b);

/// Applies op (out x mid) to the middle axis of a tensor of shape (pre, mid, post).
Vector apply_axis(const Matrix& op, const Vector& v, std::size_t pre, std::size_t mid, std::size_t post);

/// Swaps the factors of a vector in k^n1 (x) k^n2.
Vector flip(const Vector& v, std::size_t n1, std::size_t n2);

}  // namespace wqg
