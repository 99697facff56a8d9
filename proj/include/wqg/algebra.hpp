#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wqg/linalg.hpp"
#include "wqg/report.hpp"

namespace wqg {

/// Dense 3-index array of scalars.
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(FieldSpec f, std::size_t d0, std::size_t d1, std::size_t d2)
      : field_(f), d0_(d0), d1_(d1), d2_(d2), data_(d0 * d1 * d2, Scalar::zero(f)) {}

  FieldSpec field() const { return field_; }
  std::size_t dim0() const { return d0_; }
  std::size_t dim1() const { return d1_; }
  std::size_t dim2() const { return d2_; }

  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * d1_ + j) * d2_ + k]; }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * d1_ + j) * d2_ + k];
  }

  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  FieldSpec field_;
  std::size_t d0_ = 0, d1_ = 0, d2_ = 0;
  std::vector<Scalar> data_;
};

using SparseColumn = std::vector<std::pair<std::size_t, Scalar>>;

/// Associative unital algebra by structure constants:
/// e_i e_j = sum_k mul(i, j, k) e_k.
class FinDimAlgebra {
 public:
  FinDimAlgebra() = default;
  FinDimAlgebra(FieldSpec f, std::size_t dim, Tensor3 mul, Vector unit);

  FieldSpec field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Tensor3& mul() const { return mul_; }
  const Vector& unit() const { return unit_; }
  Vector basis(std::size_t i) const { return unit_vector(field_, dim_, i); }

  const SparseColumn& basis_product(std::size_t i, std::size_t j) const { return sparse_[i * dim_ + j]; }
  Vector multiply(const Vector& x, const Vector& y) const;
  /// Componentwise product in the tensor power of the given order.
  Vector multiply_tensor(const Vector& u, const Vector& v, std::size_t order) const;

  Matrix left_mult(const Vector& x) const;
  Matrix right_mult(const Vector& x) const;
  bool is_commutative() const;

  friend bool operator==(const FinDimAlgebra& a, const FinDimAlgebra& b) {
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.mul_ == b.mul_ && a.unit_ == b.unit_;
  }

 private:
  FieldSpec field_;
  std::size_t dim_ = 0;
  Tensor3 mul_;
  Vector unit_;
  std::vector<SparseColumn> sparse_;
};

/// Coalgebra by structure constants: Delta(e_i) = sum comul(i, j, k) e_j (x) e_k.
class FinDimCoalgebra {
 public:
  FinDimCoalgebra() = default;
  FinDimCoalgebra(FieldSpec f, std::size_t dim, Tensor3 comul, Vector counit);

  FieldSpec field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Tensor3& comul() const { return comul_; }
  const Vector& counit() const { return counit_; }

  Vector comultiply(const Vector& x) const;  // length dim^2
  Scalar apply_counit(const Vector& x) const;
  /// Delta as a dim^2 x dim matrix.
  const Matrix& comul_matrix() const { return comul_matrix_; }

  friend bool operator==(const FinDimCoalgebra& a, const FinDimCoalgebra& b) {
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.comul_ == b.comul_ && a.counit_ == b.counit_;
  }

 private:
  FieldSpec field_;
  std::size_t dim_ = 0;
  Tensor3 comul_;
  Vector counit_;
  Matrix comul_matrix_;
};

/// A linear map given by its matrix (target_dim x source_dim, columns are
/// images of basis vectors).
struct LinearMap {
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  Matrix matrix;

  static LinearMap from_matrix(Matrix m) {
    return LinearMap{m.cols(), m.rows(), std::move(m)};
  }
  Vector operator()(const Vector& v) const { return matrix.apply(v); }
};

/// An algebra and a coalgebra on the same space; optionally an antipode.
struct WeakBialgebra {
  FinDimAlgebra algebra;
  FinDimCoalgebra coalgebra;
  std::optional<Matrix> antipode;
  std::vector<std::string> basis_names;  // empty means e0, e1, ...

  WeakBialgebra() = default;
  WeakBialgebra(FinDimAlgebra a, FinDimCoalgebra c, std::optional<Matrix> s = std::nullopt,
                std::vector<std::string> names = {});

  FieldSpec field() const { return algebra.field(); }
  std::size_t dim() const { return algebra.dim(); }
  std::string name(std::size_t i) const;

  Vector one() const { return algebra.unit(); }
  Vector basis(std::size_t i) const { return algebra.basis(i); }
  Vector mul(const Vector& x, const Vector& y) const { return algebra.multiply(x, y); }
  Vector delta(const Vector& x) const { return coalgebra.comultiply(x); }
  Scalar eps(const Vector& x) const { return coalgebra.apply_counit(x); }

  /// Structure tensors (and antipode presence/value) agree; names are ignored.
  bool same_structure(const WeakBialgebra& other) const;
};

enum class Variant { op, cop, bop };

CheckReport check_algebra(const FinDimAlgebra& a, const CheckOptions& opts = {});
CheckReport check_coalgebra(const FinDimCoalgebra& c, const CheckOptions& opts = {});
/// Opposite/co-opposite/biopposite. Throws InvalidInput unless h is a weak bialgebra.
WeakBialgebra variant(const WeakBialgebra& h, Variant which);
/// Unchecked structural variant; used internally where validity is known.
WeakBialgebra variant_unchecked(const WeakBialgebra& h, Variant which);
CheckReport check_algebra_hom(const LinearMap& f, const FinDimAlgebra& a, const FinDimAlgebra& b, bool anti,
                              const CheckOptions& opts = {});
/// Smallest unital subalgebra containing the seeds.
Subspace generated_subalgebra(const FinDimAlgebra& a, const std::vector<Vector>& seeds);
/// Structure constants of a subalgebra in the echelon basis of the subspace.
/// Throws InvalidInput if the subspace is not a unital subalgebra.
FinDimAlgebra restrict_algebra(const FinDimAlgebra& a, const Subspace& sub);
/// Two-sided inverse of x, or nullopt.
std::optional<Vector> algebra_inverse(const FinDimAlgebra& a, const Vector& x);
/// M_n with basis E_ij at index i*n + j.
FinDimAlgebra matrix_algebra(FieldSpec f, std::size_t n);
/// Row-major flattening of a matrix into a tensor-square vector, and back.
Vector flatten(const Matrix& m);
Matrix unflatten(FieldSpec f, const Vector& v, std::size_t rows, std::size_t cols);

/// The dual algebra of a coalgebra (transpose of the comultiplication).
FinDimAlgebra dual_algebra(const FinDimCoalgebra& c);
/// The dual coalgebra of an algebra.
FinDimCoalgebra dual_coalgebra(const FinDimAlgebra& a);

}  // namespace wqg
