#include "wqg/algebra.hpp"

#include "wqg/errors.hpp"

namespace wqg {

namespace {

std::size_t ipow(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

std::vector<std::pair<std::size_t, Scalar>> support(const Vector& v) {
  std::vector<std::pair<std::size_t, Scalar>> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out.emplace_back(i, v[i]);
  }
  return out;
}

void check_tensor_dims(const Tensor3& t, FieldSpec f, std::size_t n, const char* what) {
  if (t.dim0() != n || t.dim1() != n || t.dim2() != n || !(t.field() == f)) {
    throw DimensionMismatch(std::string(what) + " tensor does not match dimension " + std::to_string(n));
  }
}

}  // namespace

FinDimAlgebra::FinDimAlgebra(FieldSpec f, std::size_t dim, Tensor3 mul, Vector unit)
    : field_(f), dim_(dim), mul_(std::move(mul)), unit_(std::move(unit)) {
  check_tensor_dims(mul_, f, dim, "multiplication");
  if (unit_.size() != dim) throw DimensionMismatch("unit vector length");
  for (const auto& x : unit_) {
    if (!(x.field() == f)) throw FieldMismatch("unit vector field");
  }
  sparse_.resize(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t k = 0; k < dim; ++k) {
        if (!mul_(i, j, k).is_zero()) sparse_[i * dim + j].emplace_back(k, mul_(i, j, k));
      }
    }
  }
}

Vector FinDimAlgebra::multiply(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw DimensionMismatch("multiply");
  Vector out = zero_vector(field_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar c = x[i] * y[j];
      for (const auto& [k, s] : sparse_[i * dim_ + j]) out[k] += c * s;
    }
  }
  return out;
}

Vector FinDimAlgebra::multiply_tensor(const Vector& u, const Vector& v, std::size_t order) const {
  const std::size_t total = ipow(dim_, order);
  if (u.size() != total || v.size() != total) throw DimensionMismatch("multiply_tensor");
  Vector out = zero_vector(field_, total);
  auto su = support(u);
  auto sv = support(v);
  std::vector<std::size_t> a(order), b(order);
  auto digits = [&](std::size_t flat, std::vector<std::size_t>& d) {
    for (std::size_t t = order; t-- > 0;) {
      d[t] = flat % dim_;
      flat /= dim_;
    }
  };
  // Expands the product factor by factor.
  auto expand = [&](auto&& self, std::size_t pos, std::size_t flat, const Scalar& coeff) -> void {
    if (pos == order) {
      out[flat] += coeff;
      return;
    }
    for (const auto& [c, s] : sparse_[a[pos] * dim_ + b[pos]]) self(self, pos + 1, flat * dim_ + c, coeff * s);
  };
  for (const auto& [iu, xu] : su) {
    digits(iu, a);
    for (const auto& [iv, xv] : sv) {
      digits(iv, b);
      expand(expand, 0, 0, xu * xv);
    }
  }
  return out;
}

Matrix FinDimAlgebra::left_mult(const Vector& x) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) m.set_col(j, multiply(x, basis(j)));
  return m;
}

Matrix FinDimAlgebra::right_mult(const Vector& x) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) m.set_col(j, multiply(basis(j), x));
  return m;
}

bool FinDimAlgebra::is_commutative() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      for (std::size_t k = 0; k < dim_; ++k) {
        if (!(mul_(i, j, k) == mul_(j, i, k))) return false;
      }
    }
  }
  return true;
}

FinDimCoalgebra::FinDimCoalgebra(FieldSpec f, std::size_t dim, Tensor3 comul, Vector counit)
    : field_(f), dim_(dim), comul_(std::move(comul)), counit_(std::move(counit)) {
  check_tensor_dims(comul_, f, dim, "comultiplication");
  if (counit_.size() != dim) throw DimensionMismatch("counit vector length");
  for (const auto& x : counit_) {
    if (!(x.field() == f)) throw FieldMismatch("counit vector field");
  }
  comul_matrix_ = Matrix(f, dim * dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t k = 0; k < dim; ++k) comul_matrix_(j * dim + k, i) = comul_(i, j, k);
    }
  }
}

Vector FinDimCoalgebra::comultiply(const Vector& x) const { return comul_matrix_.apply(x); }

Scalar FinDimCoalgebra::apply_counit(const Vector& x) const {
  if (x.size() != dim_) throw DimensionMismatch("counit");
  Scalar s = Scalar::zero(field_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!x[i].is_zero() && !counit_[i].is_zero()) s += x[i] * counit_[i];
  }
  return s;
}

WeakBialgebra::WeakBialgebra(FinDimAlgebra a, FinDimCoalgebra c, std::optional<Matrix> s,
                             std::vector<std::string> names)
    : algebra(std::move(a)), coalgebra(std::move(c)), antipode(std::move(s)), basis_names(std::move(names)) {
  if (algebra.dim() != coalgebra.dim() || !(algebra.field() == coalgebra.field())) {
    throw DimensionMismatch("algebra and coalgebra live on different spaces");
  }
  if (antipode && (antipode->rows() != dim() || antipode->cols() != dim())) {
    throw DimensionMismatch("antipode matrix shape");
  }
  if (!basis_names.empty() && basis_names.size() != dim()) {
    throw DimensionMismatch("basis name count");
  }
}

std::string WeakBialgebra::name(std::size_t i) const {
  return basis_names.empty() ? "e" + std::to_string(i) : basis_names.at(i);
}

bool WeakBialgebra::same_structure(const WeakBialgebra& other) const {
  return algebra == other.algebra && coalgebra == other.coalgebra && antipode == other.antipode;
}

CheckReport check_algebra(const FinDimAlgebra& a, const CheckOptions& opts) {
  CheckReport report;
  const std::size_t n = a.dim();
  {
    ItemRecorder rec(report, "associativity", opts);
    for (std::size_t i = 0; i < n && rec.keep_going(); ++i) {
      for (std::size_t j = 0; j < n && rec.keep_going(); ++j) {
        Vector ij = a.multiply(a.basis(i), a.basis(j));
        for (std::size_t k = 0; k < n && rec.keep_going(); ++k) {
          Vector jk = a.multiply(a.basis(j), a.basis(k));
          rec.expect_equal(a.multiply(ij, a.basis(k)), a.multiply(a.basis(i), jk), {i, j, k});
        }
      }
    }
  }
  {
    ItemRecorder rec(report, "unit-left", opts);
    for (std::size_t i = 0; i < n && rec.keep_going(); ++i) rec.expect_equal(a.multiply(a.unit(), a.basis(i)), a.basis(i), {i});
  }
  {
    ItemRecorder rec(report, "unit-right", opts);
    for (std::size_t i = 0; i < n && rec.keep_going(); ++i) rec.expect_equal(a.multiply(a.basis(i), a.unit()), a.basis(i), {i});
  }
  return report;
}

CheckReport check_coalgebra(const FinDimCoalgebra& c, const CheckOptions& opts) {
  CheckReport report;
  const std::size_t n = c.dim();
  const Matrix& d = c.comul_matrix();
  Matrix eps = Matrix::from_rows(c.field(), n, {c.counit()});
  {
    ItemRecorder rec(report, "coassociativity", opts);
    for (std::size_t i = 0; i < n && rec.keep_going(); ++i) {
      Vector di = c.comultiply(unit_vector(c.field(), n, i));
      rec.expect_equal(apply_axis(d, di, 1, n, n), apply_axis(d, di, n, n, 1), {i});
    }
  }
  {
    ItemRecorder rec(report, "counit-left", opts);
    for (std::size_t i = 0; i < n && rec.keep_going(); ++i) {
      Vector di = c.comultiply(unit_vector(c.field(), n, i));
      rec.expect_equal(apply_axis(eps, di, 1, n, n), unit_vector(c.field(), n, i), {i});
    }
  }
  {
    ItemRecorder rec(report, "counit-right", opts);
    for (std::size_t i = 0; i < n && rec.keep_going(); ++i) {
      Vector di = c.comultiply(unit_vector(c.field(), n, i));
      rec.expect_equal(apply_axis(eps, di, n, n, 1), unit_vector(c.field(), n, i), {i});
    }
  }
  return report;
}

WeakBialgebra variant_unchecked(const WeakBialgebra& h, Variant which) {
  const std::size_t n = h.dim();
  const FieldSpec f = h.field();
  const bool flip_mul = which == Variant::op || which == Variant::bop;
  const bool flip_comul = which == Variant::cop || which == Variant::bop;
  Tensor3 mul(f, n, n, n), comul(f, n, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        mul(i, j, k) = flip_mul ? h.algebra.mul()(j, i, k) : h.algebra.mul()(i, j, k);
        comul(i, j, k) = flip_comul ? h.coalgebra.comul()(i, k, j) : h.coalgebra.comul()(i, j, k);
      }
    }
  }
  // S is again an antipode of the biopposite; op and cop need S^{-1}, which is dropped.
  std::optional<Matrix> s = which == Variant::bop ? h.antipode : std::nullopt;
  return WeakBialgebra(FinDimAlgebra(f, n, std::move(mul), h.algebra.unit()),
                       FinDimCoalgebra(f, n, std::move(comul), h.coalgebra.counit()), std::move(s), h.basis_names);
}

CheckReport check_algebra_hom(const LinearMap& f, const FinDimAlgebra& a, const FinDimAlgebra& b, bool anti,
                              const CheckOptions& opts) {
  if (f.source_dim != a.dim() || f.target_dim != b.dim()) throw DimensionMismatch("check_algebra_hom");
  CheckReport report;
  const std::size_t n = a.dim();
  {
    ItemRecorder rec(report, anti ? "anti-multiplicative" : "multiplicative", opts);
    for (std::size_t i = 0; i < n && rec.keep_going(); ++i) {
      Vector fi = f(a.basis(i));
      for (std::size_t j = 0; j < n && rec.keep_going(); ++j) {
        Vector fj = f(a.basis(j));
        Vector lhs = f(a.multiply(a.basis(i), a.basis(j)));
        rec.expect_equal(lhs, anti ? b.multiply(fj, fi) : b.multiply(fi, fj), {i, j});
      }
    }
  }
  {
    ItemRecorder rec(report, "unit", opts);
    rec.expect_equal(f(a.unit()), b.unit(), {});
  }
  return report;
}

Subspace generated_subalgebra(const FinDimAlgebra& a, const std::vector<Vector>& seeds) {
  std::vector<Vector> gens = seeds;
  gens.push_back(a.unit());
  Subspace s = Subspace::span(a.field(), a.dim(), gens);
  while (true) {
    std::vector<Vector> grown = s.basis();
    for (const auto& x : s.basis()) {
      for (const auto& y : s.basis()) grown.push_back(a.multiply(x, y));
    }
    Subspace next = Subspace::span(a.field(), a.dim(), grown);
    if (next.dim() == s.dim()) return next;
    s = std::move(next);
  }
}

FinDimAlgebra restrict_algebra(const FinDimAlgebra& a, const Subspace& sub) {
  const std::size_t m = sub.dim();
  const FieldSpec f = a.field();
  Tensor3 mul(f, m, m, m);
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = 0; q < m; ++q) {
      Vector prod = a.multiply(sub.basis()[p], sub.basis()[q]);
      if (!sub.contains(prod)) throw InvalidInput("subspace is not closed under multiplication");
      Vector c = sub.coordinates(prod);
      for (std::size_t k = 0; k < m; ++k) mul(p, q, k) = c[k];
    }
  }
  if (!sub.contains(a.unit())) throw InvalidInput("subspace does not contain the unit");
  return FinDimAlgebra(f, m, std::move(mul), sub.coordinates(a.unit()));
}

FinDimAlgebra dual_algebra(const FinDimCoalgebra& c) {
  const std::size_t n = c.dim();
  Tensor3 mul(c.field(), n, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) mul(i, j, k) = c.comul()(k, i, j);
    }
  }
  return FinDimAlgebra(c.field(), n, std::move(mul), c.counit());
}

FinDimCoalgebra dual_coalgebra(const FinDimAlgebra& a) {
  const std::size_t n = a.dim();
  Tensor3 comul(a.field(), n, n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) comul(k, i, j) = a.mul()(i, j, k);
    }
  }
  return FinDimCoalgebra(a.field(), n, std::move(comul), a.unit());
}

}  // namespace wqg

namespace wqg {

std::optional<Vector> algebra_inverse(const FinDimAlgebra& a, const Vector& x) {
  auto y = solve_linear(a.left_mult(x), a.unit());
  if (!y || !(a.multiply(*y, x) == a.unit())) return std::nullopt;
  return y;
}

FinDimAlgebra matrix_algebra(FieldSpec f, std::size_t n) {
  Tensor3 mul(f, n * n, n * n, n * n);
  Vector unit = zero_vector(f, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    unit[i * n + i] = Scalar::one(f);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) mul(i * n + j, j * n + k, i * n + k) = Scalar::one(f);
    }
  }
  return FinDimAlgebra(f, n * n, std::move(mul), std::move(unit));
}

Vector flatten(const Matrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  }
  return v;
}

Matrix unflatten(FieldSpec f, const Vector& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw DimensionMismatch("unflatten");
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
  }
  return m;
}

}  // namespace wqg
